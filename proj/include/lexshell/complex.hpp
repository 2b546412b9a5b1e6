#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lexshell/graph.hpp"
#include "lexshell/vertex_set.hpp"

namespace lexshell {

// A simplicial complex on vertices 0..vertex_count-1 given by its facets.
//
// Facets are pairwise incomparable, deduplicated and kept in canonical order
// (size, then lexicographic). Two degenerate complexes are distinct values:
// the void complex has no facets at all, while {∅} has the single empty facet.
class Complex {
 public:
  // Reduces `faces` to its inclusion-maximal members.
  static Complex from_faces(int vertex_count, std::vector<VertexSet> faces);
  static Complex void_complex(int vertex_count);
  static Complex empty_face(int vertex_count);
  static Complex simplex(int vertex_count, VertexSet facet);

  int vertex_count() const { return n_; }
  std::span<const VertexSet> facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  bool is_void() const { return facets_.empty(); }
  bool is_simplex() const { return facets_.size() == 1; }

  // Largest facet cardinality; 0 for both {∅} and the void complex.
  int max_facet_size() const;
  // -1 for {∅}. Undefined (throws std::logic_error) for the void complex.
  int dimension() const;

  bool contains_face(VertexSet face) const;
  // Vertices lying in at least one facet.
  VertexSet support() const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  Complex(int n, std::vector<VertexSet> facets) : n_(n), facets_(std::move(facets)) {}

  int n_ = 0;
  std::vector<VertexSet> facets_;
};

// Inclusion-maximal members of `faces` in canonical order.
std::vector<VertexSet> maximal_faces(std::vector<VertexSet> faces);

// Facets of Ind(G): the maximal independent sets, enumerated by
// Bron–Kerbosch with Tomita pivoting on the complement graph.
Complex independence_complex(const Graph& g);

// Independence number. Uses a dedicated branch-and-bound search; agrees with
// the largest facet of independence_complex(g).
int alpha(const Graph& g);

// All facets share one cardinality. The void complex and {∅} are pure.
bool is_pure(const Complex& d);

// link_D(F) = {G : G ∩ F = ∅, G ∪ F ∈ D}. link(D, ∅) is D itself; any other F
// must be a face of D (std::invalid_argument otherwise).
Complex link(const Complex& d, VertexSet face);

// Faces of D avoiding x, re-maximalized. Throws std::out_of_range on a bad x.
Complex deletion(const Complex& d, int x);

// Neighborhood bitmasks; requires g.vertex_count() <= 64.
std::vector<VertexSet> adjacency_masks(const Graph& g);

}  // namespace lexshell
