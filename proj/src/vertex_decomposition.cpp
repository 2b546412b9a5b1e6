#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "lexshell/checkers.hpp"
#include "search_support.hpp"

namespace lexshell {

bool operator==(const ShedTree& a, const ShedTree& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != ShedTree::Kind::shed) return true;
  if (a.vertex != b.vertex) return false;
  if (!a.deletion || !b.deletion || !a.link || !b.link) return a.deletion == b.deletion && a.link == b.link;
  return *a.deletion == *b.deletion && *a.link == *b.link;
}

ShedTree rotate_shed_tree(const ShedTree& tree, int shift, int n) {
  if (tree.kind != ShedTree::Kind::shed) return tree;
  const int v = ((tree.vertex + shift) % n + n) % n;
  auto del = tree.deletion ? std::make_shared<const ShedTree>(rotate_shed_tree(*tree.deletion, shift, n)) : nullptr;
  auto lk = tree.link ? std::make_shared<const ShedTree>(rotate_shed_tree(*tree.link, shift, n)) : nullptr;
  return ShedTree::node(v, std::move(del), std::move(lk));
}

namespace {

// Canonically ordered facet bitmasks.
using Family = std::vector<std::uint64_t>;
using TreePtr = std::shared_ptr<const ShedTree>;

struct FamilyHash {
  std::size_t operator()(const Family& f) const noexcept { return boost::hash_range(f.begin(), f.end()); }
};

struct SearchCancelled {};

// Memo keyed by the exact facet family (or its rotation representative).
// Every writer computes the same verdict for a key, so inserts are idempotent.
class Memo {
 public:
  std::optional<TreePtr> find(const Family& key) {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }
  void insert(Family key, TreePtr tree) {
    std::lock_guard lock(mutex_);
    entries_.try_emplace(std::move(key), std::move(tree));
  }

 private:
  std::mutex mutex_;
  std::unordered_map<Family, TreePtr, FamilyHash> entries_;
};

std::uint64_t rotate_bits(std::uint64_t bits, int shift, int n) {
  if (shift == 0 || n == 64) {
    if (shift == 0) return bits;
    return (bits << shift) | (bits >> (64 - shift));
  }
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return ((bits << shift) | (bits >> (n - shift))) & mask;
}

void sort_canonical(Family& f) {
  std::sort(f.begin(), f.end(), [](std::uint64_t a, std::uint64_t b) { return canonical_less(VertexSet(a), VertexSet(b)); });
}

struct Shared {
  Memo memo;
  int n = 0;
  bool rotations = false;
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> hits{0};
};

class VdWorker {
 public:
  VdWorker(Shared& shared, const detail::Deadline& deadline) : shared_(shared), deadline_(deadline) {}

  // nullptr means "not vertex decomposable".
  TreePtr solve(const Family& f) {
    shared_.nodes.fetch_add(1, std::memory_order_relaxed);
    deadline_.tick();
    if (shared_.stop.load(std::memory_order_relaxed)) throw SearchCancelled{};
    if (f.empty()) return leaf(ShedTree::Kind::void_complex);
    if (f.size() == 1) return leaf(f[0] == 0 ? ShedTree::Kind::empty_face : ShedTree::Kind::simplex);

    auto [key, shift] = memo_key(f);
    if (auto hit = shared_.memo.find(key)) {
      shared_.hits.fetch_add(1, std::memory_order_relaxed);
      return from_key_frame(*hit, shift);
    }

    TreePtr found;
    VertexSet support;
    for (std::uint64_t b : f) support |= VertexSet(b);
    const std::unordered_set<std::uint64_t> members(f.begin(), f.end());
    for (int x : support.elements()) {
      found = try_shed(f, members, support, x);
      if (found) break;
    }
    shared_.memo.insert(std::move(key), to_key_frame(found, shift));
    return found;
  }

  // Attempts x as a shedding vertex of f.
  TreePtr try_shed(const Family& f, const std::unordered_set<std::uint64_t>& members, VertexSet support, int x) {
    Family with_x;
    Family without_x;
    for (std::uint64_t b : f) (VertexSet(b).contains(x) ? with_x : without_x).push_back(b);
    if (without_x.empty()) return nullptr;  // deletion would lose a dimension

    // Deletion keeps its dimension and stays pure iff each F \ x lies in a
    // facet avoiding x, necessarily of the form F \ x ∪ y.
    for (std::uint64_t& b : with_x) {
      const VertexSet ridge = VertexSet(b).without(x);
      bool covered = false;
      (support - VertexSet(b)).for_each([&](int y) {
        if (!covered && members.contains(ridge.with(y).bits())) covered = true;
      });
      if (!covered) return nullptr;
      b = ridge.bits();  // with_x becomes the link family, order preserved
    }
    TreePtr lk = solve(with_x);
    if (!lk) return nullptr;
    TreePtr del = solve(without_x);
    if (!del) return nullptr;
    return std::make_shared<const ShedTree>(ShedTree::node(x, std::move(del), std::move(lk)));
  }

 private:
  static TreePtr leaf(ShedTree::Kind k) { return std::make_shared<const ShedTree>(ShedTree::leaf(k)); }

  // Representative of f under rotations and the shift taking f to it.
  std::pair<Family, int> memo_key(const Family& f) const {
    if (!shared_.rotations) return {f, 0};
    Family best = f;
    int best_shift = 0;
    Family rotated(f.size());
    for (int r = 1; r < shared_.n; ++r) {
      for (std::size_t i = 0; i < f.size(); ++i) rotated[i] = rotate_bits(f[i], r, shared_.n);
      sort_canonical(rotated);
      if (rotated < best) {
        best = rotated;
        best_shift = r;
      }
    }
    return {best, best_shift};
  }

  TreePtr to_key_frame(const TreePtr& t, int shift) const {
    if (!t || shift == 0) return t;
    return std::make_shared<const ShedTree>(rotate_shed_tree(*t, shift, shared_.n));
  }
  TreePtr from_key_frame(const TreePtr& t, int shift) const {
    if (!t || shift == 0) return t;
    return std::make_shared<const ShedTree>(rotate_shed_tree(*t, -shift, shared_.n));
  }

  Shared& shared_;
  detail::Deadline deadline_;
};

bool rotation_invariant(const Complex& d) {
  const int n = d.vertex_count();
  if (n <= 1) return true;
  Family f;
  for (VertexSet s : d.facets()) f.push_back(rotate_bits(s.bits(), 1, n));
  sort_canonical(f);
  Family original;
  for (VertexSet s : d.facets()) original.push_back(s.bits());
  return f == original;
}

}  // namespace

CheckOutcome<ShedTree> vertex_decomposition(const Complex& d, const CheckOptions& options) {
  if (!is_pure(d)) throw NotPureError();
  detail::Deadline deadline(options.timeout);
  Shared shared;
  shared.n = d.vertex_count();
  shared.rotations = options.cyclic_symmetry && rotation_invariant(d);

  Family root;
  for (VertexSet s : d.facets()) root.push_back(s.bits());

  CheckOutcome<ShedTree> out;
  const int threads = std::max(1, options.threads);

  if (threads == 1 || root.size() <= 1) {
    VdWorker worker(shared, deadline);
    try {
      TreePtr t = worker.solve(root);
      out.verdict = t ? Verdict::yes : Verdict::no;
      if (t) out.certificate = *t;
    } catch (const detail::SearchTimeout&) {
      out.verdict = Verdict::unknown;
    }
  } else {
    // Top-level shedding candidates are spread over the pool; deeper
    // recursion shares the memo.
    VertexSet support;
    for (std::uint64_t b : root) support |= VertexSet(b);
    const std::unordered_set<std::uint64_t> members(root.begin(), root.end());
    const std::vector<int> candidates = support.elements();
    std::atomic<std::size_t> next{0};
    std::atomic<bool> timed_out{false};
    std::mutex result_mutex;
    std::optional<std::pair<int, TreePtr>> best;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        VdWorker worker(shared, deadline);
        try {
          for (std::size_t i = next++; i < candidates.size() && !shared.stop; i = next++) {
            TreePtr tree = worker.try_shed(root, members, support, candidates[i]);
            if (tree) {
              std::lock_guard lock(result_mutex);
              if (!best || candidates[i] < best->first) best.emplace(candidates[i], tree);
              shared.stop = true;
            }
          }
        } catch (const detail::SearchTimeout&) {
          timed_out = true;
          shared.stop = true;
        } catch (const SearchCancelled&) {
        }
      });
    }
    for (auto& th : pool) th.join();
    if (best) {
      out.verdict = Verdict::yes;
      out.certificate = *best->second;
    } else {
      out.verdict = timed_out ? Verdict::unknown : Verdict::no;
    }
  }
  out.stats.nodes = shared.nodes.load();
  out.stats.memo_hits = shared.hits.load();
  out.stats.seconds = deadline.elapsed_seconds();
  return out;
}

bool verify_shed_tree(const Complex& d, const ShedTree& tree) {
  if (!is_pure(d)) return false;
  switch (tree.kind) {
    case ShedTree::Kind::void_complex:
      return d.is_void();
    case ShedTree::Kind::empty_face:
      return d.facet_count() == 1 && d.facets().front().empty();
    case ShedTree::Kind::simplex:
      return d.facet_count() == 1 && !d.facets().front().empty();
    case ShedTree::Kind::shed:
      break;
  }
  const int x = tree.vertex;
  if (!tree.deletion || !tree.link) return false;
  if (x < 0 || x >= d.vertex_count() || !d.support().contains(x)) return false;
  const Complex del = deletion(d, x);
  const Complex lk = link(d, VertexSet::singleton(x));
  if (del.is_void() || !is_pure(del) || del.dimension() != d.dimension()) return false;
  if (!is_pure(lk)) return false;
  return verify_shed_tree(del, *tree.deletion) && verify_shed_tree(lk, *tree.link);
}

}  // namespace lexshell
