#include <random>

#include "doctest.h"

#include "lexshell/checkers.hpp"
#include "lexshell/homology.hpp"

using namespace lexshell;

namespace {

constexpr std::int64_t kPrime = 32003;

// Oracle: dense Gaussian elimination over GF(32003).
std::size_t rank_mod_p(const BoundaryMatrix& m) {
  std::vector<std::vector<std::int64_t>> a(m.rows, std::vector<std::int64_t>(m.cols, 0));
  for (std::size_t c = 0; c < m.cols; ++c)
    for (auto [r, v] : m.columns[c]) a[r][c] = ((v % kPrime) + kPrime) % kPrime;
  auto inverse = [](std::int64_t x) {
    std::int64_t result = 1, base = x, e = kPrime - 2;
    while (e > 0) {
      if (e & 1) result = result * base % kPrime;
      base = base * base % kPrime;
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::int64_t inv = inverse(a[rank][c]);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (a[r][c] == 0) continue;
      const std::int64_t f = a[r][c] * inv % kPrime;
      for (std::size_t k = c; k < m.cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % kPrime + kPrime) % kPrime;
    }
    ++rank;
  }
  return rank;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) edges.push_back({a, b});
  return Graph(n, edges);
}

VertexSet vs(std::initializer_list<int> v) { return VertexSet::from_vector(std::vector<int>(v)); }

BoundaryMatrix dense(const std::vector<std::vector<int>>& rows) {
  BoundaryMatrix m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows[0].size();
  m.columns.resize(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c)
    for (std::size_t r = 0; r < m.rows; ++r)
      if (rows[r][c] != 0) m.columns[c].push_back({r, rows[r][c]});
  return m;
}

// Six-vertex triangulation of the real projective plane.
Complex projective_plane() {
  const std::vector<std::vector<int>> tris = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                              {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}};
  std::vector<VertexSet> faces;
  for (const auto& t : tris) faces.push_back(VertexSet::from_vector(t));
  return Complex::from_faces(6, faces);
}

}  // namespace

TEST_CASE("face enumeration") {
  const Complex c5 = independence_complex(circulant(CirculantSpec(5, {1})));
  const FaceLattice f = enumerate_faces(c5);
  CHECK(f.count(0) == 1);
  CHECK(f.count(1) == 5);
  CHECK(f.count(2) == 5);
  CHECK(f.count(3) == 0);
  CHECK(enumerate_faces(Complex::void_complex(2)).by_size.empty());
  const Complex c16 = independence_complex(circulant(CirculantSpec(16, {1, 4, 8})));
  std::size_t total = 0;
  for (const auto& level : enumerate_faces(c16).by_size) total += level.size();
  CHECK(total == 321);
  HomologyOptions tight;
  tight.face_cap = 100;
  CHECK_THROWS_AS(enumerate_faces(c16, tight), ResourceError);
}

TEST_CASE("boundary matrices square to zero") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Complex d = independence_complex(random_graph(rng, 4 + trial % 7, 0.25));
    const FaceLattice f = enumerate_faces(d);
    for (int k = 2; k < static_cast<int>(f.by_size.size()); ++k) {
      CHECK(composes_to_zero(boundary_matrix(f, k - 1), boundary_matrix(f, k)));
    }
  }
}

TEST_CASE("boundary sign convention") {
  const Complex tri = Complex::simplex(3, vs({0, 1, 2}));
  const FaceLattice f = enumerate_faces(tri);
  const BoundaryMatrix b = boundary_matrix(f, 3);
  REQUIRE(b.cols == 1);
  // Edges in canonical order {0,1},{0,2},{1,2}; removing vertex j costs (-1)^j.
  CHECK(b.columns[0] == std::vector<std::pair<std::size_t, int>>{{0, 1}, {1, -1}, {2, 1}});
  const BoundaryMatrix aug = boundary_matrix(f, 1);
  CHECK(aug.rows == 1);
  CHECK(aug.cols == 3);
}

TEST_CASE("smith form on explicit matrices") {
  SmithForm s = smith_form(dense({{2, 0}, {0, 3}}));
  CHECK(s.rank == 2);
  CHECK(s.torsion == std::vector<BigInt>{6});
  s = smith_form(dense({{2, 4}, {6, 8}}));
  CHECK(s.rank == 2);
  CHECK(s.torsion == std::vector<BigInt>{2, 4});
  s = smith_form(dense({{1, 2, 3}, {2, 4, 6}}));
  CHECK(s.rank == 1);
  CHECK(s.torsion.empty());
  s = smith_form(dense({{0, 0}, {0, 0}}));
  CHECK(s.rank == 0);
}

TEST_CASE("smith form survives large intermediate values") {
  // Entries near 2^30 force products past 64 bits during elimination.
  const int big = 1 << 30;
  const std::vector<std::vector<int>> rows = {
      {big - 1, big - 3, big - 7}, {big - 11, big - 13, big - 17}, {big - 19, big - 23, big - 31}};
  const SmithForm s = smith_form(dense(rows));
  // Determinant oracle: the invariant factors multiply to |det|.
  auto at = [&](int r, int c) { return BigInt(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]); };
  BigInt det = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  if (det < 0) det = -det;
  BigInt product = 1;
  for (const auto& t : s.torsion) product *= t;
  if (det == 0) {
    CHECK(s.rank < 3);
  } else {
    CHECK(s.rank == 3);
    CHECK(product == det);
  }
  for (std::size_t i = 1; i < s.torsion.size(); ++i) CHECK(s.torsion[i] % s.torsion[i - 1] == 0);
}

TEST_CASE("reduced homology of known spaces") {
  // Pentagon: a circle.
  const HomologyProfile c5 = reduced_homology(independence_complex(circulant(CirculantSpec(5, {1}))));
  CHECK(c5.top_dimension == 1);
  CHECK(c5.betti_at(-1) == 0);
  CHECK(c5.betti_at(0) == 0);
  CHECK(c5.betti_at(1) == 1);
  // A simplex is acyclic.
  const HomologyProfile simplex = reduced_homology(Complex::simplex(5, VertexSet::range(5)));
  for (int i = -1; i <= 4; ++i) {
    CHECK(simplex.betti_at(i) == 0);
    CHECK(simplex.torsion_at(i).empty());
  }
  // {∅} has b̃_{-1} = 1.
  const HomologyProfile empty = reduced_homology(Complex::empty_face(0));
  CHECK(empty.top_dimension == -1);
  CHECK(empty.betti_at(-1) == 1);
  // Boundary of the tetrahedron: a 2-sphere.
  std::vector<VertexSet> faces;
  for (int v = 0; v < 4; ++v) faces.push_back(VertexSet::range(4).without(v));
  const HomologyProfile sphere = reduced_homology(Complex::from_faces(4, faces));
  CHECK(sphere.betti == std::vector<std::size_t>{0, 0, 0, 1});
  // Two points.
  CHECK(reduced_homology(Complex::from_faces(2, {vs({0}), vs({1})})).betti_at(0) == 1);
  // Projective plane: torsion Z/2 in dimension 1 and no rational homology.
  const HomologyProfile rp2 = reduced_homology(projective_plane());
  CHECK(rp2.betti == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(rp2.torsion_at(1) == std::vector<BigInt>{2});
  CHECK(rp2.torsion_at(0).empty());
  CHECK(rp2.satisfies_euler_relation());
  CHECK_THROWS_AS(reduced_homology(Complex::void_complex(3)), std::invalid_argument);
}

TEST_CASE("betti numbers agree with ranks over GF(32003)") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 80; ++trial) {
    const Complex d = independence_complex(random_graph(rng, 3 + trial % 9, 0.2 + 0.05 * (trial % 6)));
    const FaceLattice f = enumerate_faces(d);
    const HomologyProfile p = reduced_homology(d);
    CHECK(p.satisfies_euler_relation());
    const int sizes = static_cast<int>(f.by_size.size());
    std::vector<std::size_t> ranks(static_cast<std::size_t>(sizes) + 1, 0);
    for (int k = 1; k < sizes; ++k) ranks[static_cast<std::size_t>(k)] = rank_mod_p(boundary_matrix(f, k));
    for (int k = 0; k < sizes; ++k) {
      const std::size_t idx = static_cast<std::size_t>(k);
      // Independence complexes of graphs this small carry no torsion.
      CHECK(p.betti[idx] == f.count(k) - ranks[idx] - ranks[idx + 1]);
    }
  }
}

TEST_CASE("Cohen-Macaulay examples") {
  CHECK(is_cohen_macaulay(independence_complex(circulant(CirculantSpec(5, {1})))));
  // Two disjoint edges: pure, disconnected.
  CHECK_FALSE(is_cohen_macaulay(independence_complex(circulant(CirculantSpec(4, {1})))));
  // Ind(C7): pure, but the whole complex has homology in dimension 1 < 2.
  CHECK_FALSE(is_cohen_macaulay(independence_complex(circulant(CirculantSpec(7, {1})))));
  CHECK_FALSE(is_cohen_macaulay(independence_complex(Graph(3, {{0, 1}, {1, 2}}))));
  CHECK_FALSE(is_cohen_macaulay(Complex::void_complex(2)));
  CHECK(is_cohen_macaulay(Complex::empty_face(2)));
  CHECK(is_cohen_macaulay(Complex::simplex(4, VertexSet::range(4))));
  // Two triangles sharing a vertex: the link of the shared vertex is disconnected.
  CHECK_FALSE(is_cohen_macaulay(Complex::from_faces(5, {vs({0, 1, 2}), vs({2, 3, 4})})));
  // Over Q the projective plane has no homology, so it passes.
  CHECK(is_cohen_macaulay(projective_plane()));
  CHECK(is_cohen_macaulay(independence_complex(circulant(CirculantSpec(16, {1, 4, 8})))));
}

TEST_CASE("Cohen-Macaulay budget") {
  HomologyOptions o;
  o.timeout = std::chrono::duration<double>(0.0);
  CHECK_THROWS_AS(is_cohen_macaulay(independence_complex(circulant(CirculantSpec(16, {1, 4, 8}))), o),
                  BudgetExceeded);
}

TEST_CASE("shellable complexes are Cohen-Macaulay") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex d = independence_complex(random_graph(rng, 4 + trial % 6, 0.3));
    if (!is_pure(d)) continue;
    if (shelling(d).verdict == Verdict::yes) CHECK(is_cohen_macaulay(d));
  }
}
