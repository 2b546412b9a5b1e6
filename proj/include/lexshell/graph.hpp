#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace lexshell {

// Undirected edge with a < b.
struct Edge {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simple graph on vertices 0..n-1. Immutable once built; every
// combinator below returns a fresh graph with an explicit label map, so two
// graphs compare equal exactly when their labeled edge sets coincide.
class Graph {
 public:
  Graph() = default;

  // Endpoints are reordered and duplicates merged. Throws std::invalid_argument
  // on a loop and std::out_of_range on an endpoint outside 0..n-1.
  Graph(int n, std::vector<Edge> edges);

  static Graph edgeless(int n);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int a, int b) const;

  friend bool operator==(const Graph& x, const Graph& y) { return x.n_ == y.n_ && x.edges_ == y.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// Generator data (n, S) of the circulant C_n(S). Construction normalizes S:
// every entry is reduced mod n, folded to min(d, n - d), and zeros and
// duplicates are dropped, so S ends up a sorted subset of 1..floor(n/2).
class CirculantSpec {
 public:
  CirculantSpec(int n, std::vector<int> generators);

  int modulus() const { return n_; }
  const std::vector<int>& generators() const { return generators_; }

  // "C16(1,4,8)"
  std::string to_string() const;

  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;

 private:
  int n_;
  std::vector<int> generators_;
};

// One positive multiplicity per base-graph vertex.
class ExpansionVector {
 public:
  explicit ExpansionVector(std::vector<int> multiplicities);
  ExpansionVector(std::initializer_list<int> multiplicities)
      : ExpansionVector(std::vector<int>(multiplicities)) {}

  std::span<const int> multiplicities() const { return s_; }
  std::size_t size() const { return s_.size(); }
  int total() const;

 private:
  std::vector<int> s_;
};

Graph circulant(const CirculantSpec& spec);
Graph complete(int m);
Graph disjoint_union(const Graph& g, const Graph& h);

// G[H]. Vertex (i, j) with i in G and j in H gets label i + n_G * j.
Graph lex_product(const Graph& g, const Graph& h);

// G^(s). Copy j (0-based) of vertex i gets label s_0 + ... + s_{i-1} + j.
Graph expansion(const Graph& g, const ExpansionVector& s);

// Connection set of C_n(S1)[C_m(S2)] viewed as a circulant on n*m vertices,
// under the lex_product label map.
CirculantSpec circulant_lex_connection(const CirculantSpec& a, const CirculantSpec& b);

}  // namespace lexshell
