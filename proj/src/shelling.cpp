#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "lexshell/checkers.hpp"
#include "search_support.hpp"

namespace lexshell {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept { return boost::hash_range(b.begin(), b.end()); }
};

// Placed sets from which no completion exists. Deadness depends only on the
// set, not on the order that produced it, so workers can share entries.
class DeadSets {
 public:
  explicit DeadSets(bool shared) : shared_(shared) {}

  bool contains(const Bits& b) {
    if (!shared_) return sets_.contains(b);
    std::lock_guard lock(mutex_);
    return sets_.contains(b);
  }
  void insert(const Bits& b) {
    if (!shared_) {
      sets_.insert(b);
      return;
    }
    std::lock_guard lock(mutex_);
    sets_.insert(b);
  }

 private:
  bool shared_;
  std::mutex mutex_;
  std::unordered_set<Bits, BitsHash> sets_;
};

// Facets sharing a ridge (a face of size d - 1), found by hashing ridges.
std::vector<std::vector<std::size_t>> ridge_neighbors(std::span<const VertexSet> facets) {
  std::unordered_map<VertexSet, std::vector<std::size_t>> by_ridge;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    facets[i].for_each([&](int v) { by_ridge[facets[i].without(v)].push_back(i); });
  }
  std::vector<std::vector<std::size_t>> out(facets.size());
  for (const auto& [ridge, members] : by_ridge) {
    for (std::size_t a : members)
      for (std::size_t b : members)
        if (a != b) out[a].push_back(b);
  }
  for (auto& row : out) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return out;
}

bool connected(const std::vector<std::vector<std::size_t>>& adj) {
  if (adj.empty()) return true;
  std::vector<char> seen(adj.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == adj.size();
}

struct SharedContext {
  std::span<const VertexSet> facets;
  std::vector<std::vector<std::size_t>> neighbors;
  DeadSets dead;
  std::atomic<bool> stop{false};
};

// One depth-first search over shelling prefixes.
//
// A facet F may follow the placed prefix P iff its restriction face
// R(F) = ∪ {F \ G : G ∈ P, |F \ G| = 1} is nonempty and lies in no placed
// facet. This is the shelling condition rewritten: (F \ G) ∩ R ≠ ∅ for all
// G ∈ P is the same as R ⊄ G for all G ∈ P.
class ShellingWorker {
 public:
  ShellingWorker(SharedContext& ctx, const detail::Deadline& deadline)
      : ctx_(ctx),
        deadline_(deadline),
        s_(ctx.facets.size()),
        placed_((s_ + 63) / 64, 0),
        is_placed_(s_, 0),
        restriction_(s_),
        placed_by_vertex_(VertexSet::kMaxVertices),
        unplaced_neighbors_(s_) {
    for (std::size_t i = 0; i < s_; ++i) unplaced_neighbors_[i] = ctx_.neighbors[i].size();
  }

  // Exhaustively searches shellings that start with one of `roots`.
  bool run(const std::vector<std::size_t>& roots) {
    struct Frame {
      std::vector<std::size_t> candidates;
      std::size_t next = 0;
      bool active = false;
    };
    std::vector<Frame> frames;
    frames.push_back(Frame{roots});
    while (!frames.empty()) {
      if (ctx_.stop.load(std::memory_order_relaxed)) return false;
      Frame& top = frames.back();
      if (top.active) {
        unplace();
        top.active = false;
      }
      if (top.next == top.candidates.size()) {
        if (!order_.empty()) ctx_.dead.insert(placed_);
        frames.pop_back();
        continue;
      }
      place(top.candidates[top.next++]);
      top.active = true;
      ++stats.nodes;
      deadline_.tick();
      if (order_.size() == s_) return true;
      if (ctx_.dead.contains(placed_)) {
        ++stats.memo_hits;
        continue;
      }
      auto next = legal_extensions();
      if (next.empty()) {
        ctx_.dead.insert(placed_);
        continue;
      }
      frames.push_back(Frame{std::move(next)});
    }
    return false;
  }

  const std::vector<std::size_t>& order() const { return order_; }

  SearchStats stats;

 private:
  bool legal(std::size_t i) const {
    const VertexSet r = restriction_[i];
    if (r.empty()) return false;
    // Scan the placed facets through the vertex of R with the fewest of them.
    const std::vector<std::size_t>* shortest = nullptr;
    r.for_each([&](int v) {
      const auto& list = placed_by_vertex_[static_cast<std::size_t>(v)];
      if (shortest == nullptr || list.size() < shortest->size()) shortest = &list;
    });
    return std::none_of(shortest->begin(), shortest->end(),
                        [&](std::size_t j) { return r.is_subset_of(ctx_.facets[j]); });
  }

  // Legal successors, fail-first: facets with the fewest still-unplaced ridge
  // neighbours come first, ties broken by canonical position.
  std::vector<std::size_t> legal_extensions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s_; ++i) {
      if (!is_placed_[i] && legal(i)) out.push_back(i);
    }
    std::stable_sort(out.begin(), out.end(),
                     [&](std::size_t a, std::size_t b) { return unplaced_neighbors_[a] < unplaced_neighbors_[b]; });
    return out;
  }

  void place(std::size_t c) {
    placed_[c / 64] |= std::uint64_t{1} << (c % 64);
    is_placed_[c] = 1;
    order_.push_back(c);
    const VertexSet f = ctx_.facets[c];
    f.for_each([&](int v) { placed_by_vertex_[static_cast<std::size_t>(v)].push_back(c); });
    for (std::size_t k : ctx_.neighbors[c]) {
      restriction_[k] |= ctx_.facets[k] - f;
      --unplaced_neighbors_[k];
    }
  }

  void unplace() {
    const std::size_t c = order_.back();
    order_.pop_back();
    placed_[c / 64] &= ~(std::uint64_t{1} << (c % 64));
    is_placed_[c] = 0;
    ctx_.facets[c].for_each([&](int v) { placed_by_vertex_[static_cast<std::size_t>(v)].pop_back(); });
    for (std::size_t k : ctx_.neighbors[c]) {
      ++unplaced_neighbors_[k];
      VertexSet r;
      for (std::size_t j : ctx_.neighbors[k]) {
        if (is_placed_[j]) r |= ctx_.facets[k] - ctx_.facets[j];
      }
      restriction_[k] = r;
    }
  }

  SharedContext& ctx_;
  detail::Deadline deadline_;
  std::size_t s_;
  Bits placed_;
  std::vector<char> is_placed_;
  std::vector<VertexSet> restriction_;
  std::vector<std::vector<std::size_t>> placed_by_vertex_;
  std::vector<std::size_t> unplaced_neighbors_;
  std::vector<std::size_t> order_;
};

}  // namespace

CheckOutcome<ShellingCertificate> shelling(const Complex& d, const CheckOptions& options) {
  if (!is_pure(d)) throw NotPureError();
  detail::Deadline deadline(options.timeout);
  CheckOutcome<ShellingCertificate> out;
  const auto facets = d.facets();

  if (facets.size() <= 1) {
    out.verdict = Verdict::yes;
    out.certificate = ShellingCertificate{facets.empty() ? std::vector<std::size_t>{} : std::vector<std::size_t>{0}};
    out.stats.seconds = deadline.elapsed_seconds();
    return out;
  }

  const int threads = std::max(1, options.threads);
  SharedContext ctx{facets, ridge_neighbors(facets), DeadSets(threads > 1), {}};
  // Every facet after the first needs a ridge shared with an earlier one.
  if (!connected(ctx.neighbors)) {
    out.verdict = Verdict::no;
    out.stats.shortcut = "ridge graph disconnected";
    out.stats.seconds = deadline.elapsed_seconds();
    return out;
  }

  std::vector<std::size_t> all(facets.size());
  std::iota(all.begin(), all.end(), 0);

  if (threads == 1) {
    ShellingWorker worker(ctx, deadline);
    try {
      const bool found = worker.run(all);
      out.verdict = found ? Verdict::yes : Verdict::no;
      if (found) out.certificate = ShellingCertificate{worker.order()};
    } catch (const detail::SearchTimeout&) {
      out.verdict = Verdict::unknown;
    }
    out.stats = worker.stats;
    out.stats.seconds = deadline.elapsed_seconds();
    return out;
  }

  // Workers pull root facets in canonical order.
  std::atomic<std::size_t> next_root{0};
  std::atomic<bool> timed_out{false};
  std::mutex result_mutex;
  std::optional<std::pair<std::size_t, std::vector<std::size_t>>> best;
  std::vector<SearchStats> per_worker(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      ShellingWorker worker(ctx, deadline);
      try {
        for (std::size_t root = next_root++; root < all.size() && !ctx.stop; root = next_root++) {
          if (worker.run({root})) {
            std::lock_guard lock(result_mutex);
            if (!best || root < best->first) best.emplace(root, worker.order());
            ctx.stop = true;
          }
        }
      } catch (const detail::SearchTimeout&) {
        timed_out = true;
        ctx.stop = true;
      }
      per_worker[static_cast<std::size_t>(t)] = worker.stats;
    });
  }
  for (auto& th : pool) th.join();

  for (const auto& s : per_worker) {
    out.stats.nodes += s.nodes;
    out.stats.memo_hits += s.memo_hits;
  }
  if (best) {
    out.verdict = Verdict::yes;
    out.certificate = ShellingCertificate{best->second};
  } else {
    out.verdict = timed_out ? Verdict::unknown : Verdict::no;
  }
  out.stats.seconds = deadline.elapsed_seconds();
  return out;
}

bool verify_shelling(const Complex& d, const ShellingCertificate& cert) {
  const auto facets = d.facets();
  const std::size_t s = facets.size();
  if (cert.order.size() != s) throw std::invalid_argument("shelling certificate has the wrong length");
  std::vector<char> seen(s, 0);
  for (std::size_t idx : cert.order) {
    if (idx >= s || seen[idx]) throw std::invalid_argument("shelling certificate is not a permutation");
    seen[idx] = 1;
  }

  for (std::size_t i = 1; i < s; ++i) {
    const VertexSet fi = facets[cert.order[i]];
    // Vertices x with {x} = F_i \ F_k for some k < i.
    VertexSet witnesses;
    for (std::size_t k = 0; k < i; ++k) {
      const VertexSet diff = fi - facets[cert.order[k]];
      if (diff.size() == 1) witnesses |= diff;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!(fi - facets[cert.order[j]]).intersects(witnesses)) return false;
    }
  }
  return true;
}

}  // namespace lexshell
