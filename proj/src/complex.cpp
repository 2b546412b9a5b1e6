#include "lexshell/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lexshell {

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > VertexSet::kMaxVertices) {
    throw std::invalid_argument("complexes support 0..64 vertices, got " + std::to_string(n));
  }
}

}  // namespace

std::vector<VertexSet> maximal_faces(std::vector<VertexSet> faces) {
  std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.bits() < b.bits();
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<VertexSet> kept;
  for (VertexSet f : faces) {
    const bool covered = std::any_of(kept.begin(), kept.end(), [f](VertexSet k) { return f.is_subset_of(k); });
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), CanonicalLess{});
  return kept;
}

Complex Complex::from_faces(int vertex_count, std::vector<VertexSet> faces) {
  check_vertex_count(vertex_count);
  const VertexSet ambient = VertexSet::range(vertex_count);
  for (VertexSet f : faces) {
    if (!f.is_subset_of(ambient)) {
      throw std::out_of_range("face uses a vertex outside 0.." + std::to_string(vertex_count - 1));
    }
  }
  return Complex(vertex_count, maximal_faces(std::move(faces)));
}

Complex Complex::void_complex(int vertex_count) {
  check_vertex_count(vertex_count);
  return Complex(vertex_count, {});
}

Complex Complex::empty_face(int vertex_count) {
  check_vertex_count(vertex_count);
  return Complex(vertex_count, {VertexSet{}});
}

Complex Complex::simplex(int vertex_count, VertexSet facet) { return from_faces(vertex_count, {facet}); }

int Complex::max_facet_size() const {
  int best = 0;
  for (VertexSet f : facets_) best = std::max(best, f.size());
  return best;
}

int Complex::dimension() const {
  if (is_void()) throw std::logic_error("the void complex has no dimension");
  return max_facet_size() - 1;
}

bool Complex::contains_face(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](VertexSet f) { return face.is_subset_of(f); });
}

VertexSet Complex::support() const {
  VertexSet s;
  for (VertexSet f : facets_) s |= f;
  return s;
}

std::vector<VertexSet> adjacency_masks(const Graph& g) {
  check_vertex_count(g.vertex_count());
  std::vector<VertexSet> adj(static_cast<std::size_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.a)].insert(e.b);
    adj[static_cast<std::size_t>(e.b)].insert(e.a);
  }
  return adj;
}

namespace {

// Maximal cliques of the complement graph, i.e. maximal independent sets.
class MaximalIndependentSets {
 public:
  explicit MaximalIndependentSets(const std::vector<VertexSet>& adj) {
    const VertexSet all = VertexSet::range(static_cast<int>(adj.size()));
    non_adj_.reserve(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) non_adj_.push_back((all - adj[v]).without(static_cast<int>(v)));
  }

  std::vector<VertexSet> run(VertexSet candidates) {
    expand(VertexSet{}, candidates, VertexSet{});
    return std::move(out_);
  }

 private:
  void expand(VertexSet chosen, VertexSet candidates, VertexSet excluded) {
    if (candidates.empty()) {
      if (excluded.empty()) out_.push_back(chosen);
      return;
    }
    int pivot = -1;
    int best = -1;
    (candidates | excluded).for_each([&](int u) {
      const int score = (candidates & non_adj_[static_cast<std::size_t>(u)]).size();
      if (score > best) {
        best = score;
        pivot = u;
      }
    });
    const VertexSet branch = candidates - non_adj_[static_cast<std::size_t>(pivot)];
    branch.for_each([&](int v) {
      const VertexSet compatible = non_adj_[static_cast<std::size_t>(v)];
      expand(chosen.with(v), candidates & compatible, excluded & compatible);
      candidates.erase(v);
      excluded.insert(v);
    });
  }

  std::vector<VertexSet> non_adj_;
  std::vector<VertexSet> out_;
};

int max_independent(const std::vector<VertexSet>& adj, VertexSet pool, int taken, int best) {
  if (pool.empty()) return std::max(best, taken);
  if (taken + pool.size() <= best) return best;
  // Vertices of degree 0 or 1 inside the pool can always be taken.
  int branch_vertex = -1;
  int branch_degree = -1;
  int forced = -1;
  pool.for_each([&](int v) {
    if (forced >= 0) return;
    const int deg = (adj[static_cast<std::size_t>(v)] & pool).size();
    if (deg <= 1) {
      forced = v;
    } else if (deg > branch_degree) {
      branch_degree = deg;
      branch_vertex = v;
    }
  });
  if (forced >= 0) {
    return max_independent(adj, pool - adj[static_cast<std::size_t>(forced)].with(forced), taken + 1, best);
  }
  best = max_independent(adj, pool - adj[static_cast<std::size_t>(branch_vertex)].with(branch_vertex), taken + 1, best);
  return max_independent(adj, pool.without(branch_vertex), taken, best);
}

}  // namespace

Complex independence_complex(const Graph& g) {
  const auto adj = adjacency_masks(g);
  auto sets = MaximalIndependentSets(adj).run(VertexSet::range(g.vertex_count()));
  return Complex::from_faces(g.vertex_count(), std::move(sets));
}

int alpha(const Graph& g) {
  const auto adj = adjacency_masks(g);
  return max_independent(adj, VertexSet::range(g.vertex_count()), 0, 0);
}

bool is_pure(const Complex& d) {
  const auto facets = d.facets();
  return std::all_of(facets.begin(), facets.end(), [&](VertexSet f) { return f.size() == facets.front().size(); });
}

Complex link(const Complex& d, VertexSet face) {
  if (face.empty()) return d;
  std::vector<VertexSet> faces;
  for (VertexSet f : d.facets()) {
    if (face.is_subset_of(f)) faces.push_back(f - face);
  }
  if (faces.empty()) throw std::invalid_argument("link: the given set is not a face of the complex");
  return Complex::from_faces(d.vertex_count(), std::move(faces));
}

Complex deletion(const Complex& d, int x) {
  if (x < 0 || x >= d.vertex_count()) {
    throw std::out_of_range("deletion: vertex " + std::to_string(x) + " outside the complex");
  }
  if (d.is_void()) return d;
  std::vector<VertexSet> faces;
  faces.reserve(d.facet_count());
  for (VertexSet f : d.facets()) faces.push_back(f.without(x));
  return Complex::from_faces(d.vertex_count(), std::move(faces));
}

}  // namespace lexshell
