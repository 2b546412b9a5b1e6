#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lexshell/complex.hpp"

namespace lexshell {

using BigInt = boost::multiprecision::cpp_int;

// Raised when a computation would materialize more faces than allowed.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by is_cohen_macaulay when its time budget runs out.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HomologyOptions {
  std::size_t face_cap = 5'000'000;
  std::optional<std::chrono::duration<double>> timeout;
};

// Every face of a complex, grouped by cardinality and sorted canonically.
// by_size[k] holds the (k-1)-dimensional faces; by_size[0] is {∅} unless the
// complex is void.
struct FaceLattice {
  std::vector<std::vector<VertexSet>> by_size;

  std::size_t count(int size) const {
    return size >= 0 && static_cast<std::size_t>(size) < by_size.size() ? by_size[static_cast<std::size_t>(size)].size() : 0;
  }
};

FaceLattice enumerate_faces(const Complex& d, const HomologyOptions& options = {});

// Sparse integer matrix of the simplicial boundary map from faces of one size
// to faces one smaller. Face vertices are taken in ascending order and the
// j-th vertex removed carries sign (-1)^j.
struct BoundaryMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  // columns[c] = (row, ±1) pairs sorted by row.
  std::vector<std::vector<std::pair<std::size_t, int>>> columns;
};

// Boundary from faces of `face_size` elements to faces of face_size - 1
// elements. face_size = 1 gives the augmentation onto {∅}.
BoundaryMatrix boundary_matrix(const FaceLattice& faces, int face_size);

// True iff lower * upper is the zero matrix.
bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper);

// Rank and the invariant factors greater than one.
struct SmithForm {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
};

// Sparse elimination pivoting on unit entries, followed by a dense Smith
// normal form of whatever remains. Runs in 64-bit arithmetic and restarts in
// arbitrary precision if an intermediate value overflows.
SmithForm smith_form(const BoundaryMatrix& m);

// Reduced homology per dimension i = -1 .. top_dimension.
struct HomologyProfile {
  int top_dimension = -1;
  std::vector<std::size_t> face_counts;      // index i + 1
  std::vector<std::size_t> betti;            // index i + 1, rank over Q
  std::vector<std::vector<BigInt>> torsion;  // index i + 1

  std::size_t betti_at(int dim) const { return betti.at(static_cast<std::size_t>(dim + 1)); }
  const std::vector<BigInt>& torsion_at(int dim) const { return torsion.at(static_cast<std::size_t>(dim + 1)); }

  // Σ (-1)^i f_i == Σ (-1)^i b̃_i over i >= -1.
  bool satisfies_euler_relation() const;
};

// Rejects the void complex with std::invalid_argument.
HomologyProfile reduced_homology(const Complex& d, const HomologyOptions& options = {});

// Reisner's criterion over Q: nonvoid, and every link (the complex itself
// included) has vanishing reduced homology below its own dimension.
bool is_cohen_macaulay(const Complex& d, const HomologyOptions& options = {});

}  // namespace lexshell
