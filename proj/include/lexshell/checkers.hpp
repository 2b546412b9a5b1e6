#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexshell/complex.hpp"

namespace lexshell {

// Shellability and vertex decomposability are only defined here for pure
// complexes; both searches refuse anything else.
class NotPureError : public std::invalid_argument {
 public:
  NotPureError() : std::invalid_argument("NotPure: complex is not pure") {}
};

// `unknown` means the search budget ran out; it is never a "no".
enum class Verdict { yes, no, unknown };

std::string to_string(Verdict v);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  double seconds = 0.0;
  // Set when a necessary condition refuted the input before any search.
  std::string shortcut;
};

struct CheckOptions {
  // No limit when empty.
  std::optional<std::chrono::duration<double>> timeout;
  int threads = 1;
  // Vertex decomposition only: share memo entries between complexes that
  // differ by the rotation v -> v + 1 mod n. Used only when the input itself
  // is invariant under that rotation.
  bool cyclic_symmetry = false;
};

template <class Certificate>
struct CheckOutcome {
  Verdict verdict = Verdict::unknown;
  std::optional<Certificate> certificate;  // present iff verdict == yes
  SearchStats stats;
};

// Positions into Complex::facets(); order[0] is the first facet shelled.
struct ShellingCertificate {
  std::vector<std::size_t> order;
  friend bool operator==(const ShellingCertificate&, const ShellingCertificate&) = default;
};

// Witness of vertex decomposability: a leaf for a base case, or a shedding
// vertex with witnesses for its deletion and link. Subtrees are shared, so a
// tree found through memo hits is a DAG in memory.
struct ShedTree {
  enum class Kind { simplex, void_complex, empty_face, shed };

  Kind kind = Kind::simplex;
  int vertex = -1;
  std::shared_ptr<const ShedTree> deletion;
  std::shared_ptr<const ShedTree> link;

  static ShedTree leaf(Kind k) { return ShedTree{k, -1, nullptr, nullptr}; }
  static ShedTree node(int v, std::shared_ptr<const ShedTree> del, std::shared_ptr<const ShedTree> lk) {
    return ShedTree{Kind::shed, v, std::move(del), std::move(lk)};
  }
};

bool operator==(const ShedTree& a, const ShedTree& b);

// Exhaustive backtracking over shelling prefixes. Throws NotPureError.
CheckOutcome<ShellingCertificate> shelling(const Complex& d, const CheckOptions& options = {});

// Checks the quantified shelling condition directly: for all j < i there is
// x in F_i \ F_j and k < i with F_i \ F_k = {x}. Throws std::invalid_argument
// when `cert` is not a permutation of the facet positions.
bool verify_shelling(const Complex& d, const ShellingCertificate& cert);

// Pure vertex decomposability: D is a simplex (including {∅} and the void
// complex), or some vertex x has deletion(D, x) pure of the same dimension,
// link(D, x) pure, and both decomposable. Throws NotPureError.
CheckOutcome<ShedTree> vertex_decomposition(const Complex& d, const CheckOptions& options = {});

// Replays a shed tree with the complex_core link and deletion operations.
// Malformed trees are rejected, never thrown on.
bool verify_shed_tree(const Complex& d, const ShedTree& tree);

// Relabels every shedding vertex v of `tree` to (v + shift) mod n.
ShedTree rotate_shed_tree(const ShedTree& tree, int shift, int n);

}  // namespace lexshell
