#include "lexshell/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lexshell {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adjacency_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw std::invalid_argument("graph vertex count must be non-negative");
  for (Edge& e : edges) {
    if (e.a == e.b) throw std::invalid_argument("loop at vertex " + std::to_string(e.a));
    if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n) {
      throw std::out_of_range("edge {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                              "} outside 0.." + std::to_string(n - 1));
    }
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.a)].push_back(e.b);
    adjacency_[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

Graph Graph::edgeless(int n) { return Graph(n, {}); }

bool Graph::adjacent(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  const auto& row = adjacency_[static_cast<std::size_t>(a)];
  return std::binary_search(row.begin(), row.end(), b);
}

CirculantSpec::CirculantSpec(int n, std::vector<int> generators) : n_(n) {
  if (n < 1) throw std::invalid_argument("circulant modulus must be at least 1");
  std::set<int> folded;
  for (int d : generators) {
    int r = ((d % n) + n) % n;
    r = std::min(r, n - r);
    if (r != 0) folded.insert(r);
  }
  generators_.assign(folded.begin(), folded.end());
}

std::string CirculantSpec::to_string() const {
  std::string out = "C" + std::to_string(n_) + "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(generators_[i]);
  }
  return out + ")";
}

ExpansionVector::ExpansionVector(std::vector<int> multiplicities) : s_(std::move(multiplicities)) {
  for (int v : s_) {
    if (v < 1) throw std::invalid_argument("expansion multiplicities must be positive");
  }
}

int ExpansionVector::total() const { return std::accumulate(s_.begin(), s_.end(), 0); }

Graph circulant(const CirculantSpec& spec) {
  const int n = spec.modulus();
  std::vector<Edge> edges;
  for (int d : spec.generators()) {
    for (int a = 0; a < n; ++a) edges.push_back({a, (a + d) % n});
  }
  return Graph(n, std::move(edges));
}

Graph complete(int m) {
  if (m < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) edges.push_back({a, b});
  return Graph(m, std::move(edges));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int shift = g.vertex_count();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge& e : h.edges()) edges.push_back({e.a + shift, e.b + shift});
  return Graph(g.vertex_count() + h.vertex_count(), std::move(edges));
}

Graph lex_product(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  auto label = [ng](int i, int j) { return i + ng * j; };
  std::vector<Edge> edges;
  // {w, y} in E_G joins every copy pair.
  for (const Edge& e : g.edges())
    for (int x = 0; x < nh; ++x)
      for (int z = 0; z < nh; ++z) edges.push_back({label(e.a, x), label(e.b, z)});
  // w = y and {x, z} in E_H.
  for (int w = 0; w < ng; ++w)
    for (const Edge& e : h.edges()) edges.push_back({label(w, e.a), label(w, e.b)});
  return Graph(ng * nh, std::move(edges));
}

Graph expansion(const Graph& g, const ExpansionVector& s) {
  if (static_cast<int>(s.size()) != g.vertex_count()) {
    throw std::invalid_argument("expansion vector has length " + std::to_string(s.size()) +
                                " but the graph has " + std::to_string(g.vertex_count()) + " vertices");
  }
  const auto mult = s.multiplicities();
  std::vector<int> offset(mult.size() + 1, 0);
  for (std::size_t i = 0; i < mult.size(); ++i) offset[i + 1] = offset[i] + mult[i];

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < mult.size(); ++i)
    for (int j = offset[i]; j < offset[i + 1]; ++j)
      for (int l = j + 1; l < offset[i + 1]; ++l) edges.push_back({j, l});
  for (const Edge& e : g.edges()) {
    const auto a = static_cast<std::size_t>(e.a);
    const auto b = static_cast<std::size_t>(e.b);
    for (int j = offset[a]; j < offset[a + 1]; ++j)
      for (int l = offset[b]; l < offset[b + 1]; ++l) edges.push_back({j, l});
  }
  return Graph(offset.back(), std::move(edges));
}

CirculantSpec circulant_lex_connection(const CirculantSpec& a, const CirculantSpec& b) {
  const int n = a.modulus();
  const int m = b.modulus();
  const int total = n * m;
  auto symmetric_contains = [](const std::vector<int>& gens, int modulus, int r) {
    return std::any_of(gens.begin(), gens.end(), [&](int s) { return r == s || r == modulus - s; });
  };
  std::vector<int> gens;
  for (int d = 1; d <= total / 2; ++d) {
    if (symmetric_contains(a.generators(), n, d % n) ||
        (d % n == 0 && symmetric_contains(b.generators(), m, (d / n) % m))) {
      gens.push_back(d);
    }
  }
  return CirculantSpec(total, std::move(gens));
}

}  // namespace lexshell
