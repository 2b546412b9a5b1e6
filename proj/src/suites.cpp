#include "lexshell/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace lexshell {

CheckOptions RunConfig::check_options() const {
  CheckOptions o;
  if (timeout_seconds) o.timeout = std::chrono::duration<double>(*timeout_seconds);
  o.threads = threads;
  o.cyclic_symmetry = cyclic_symmetry;
  return o;
}

std::string to_string(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::pass: return "pass";
    case InstanceStatus::fail: return "fail";
    case InstanceStatus::unknown: return "unknown";
    case InstanceStatus::skipped: return "skipped";
    case InstanceStatus::error: return "error";
  }
  return "error";
}

std::size_t SuiteReport::count(InstanceStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [s](const InstanceRecord& r) { return r.status == s; }));
}

bool SuiteReport::passed() const { return exit_code() == 0; }

int SuiteReport::exit_code() const {
  if (count(InstanceStatus::fail) > 0) return 1;
  if (count(InstanceStatus::error) > 0) return 2;
  if (!budgeted && count(InstanceStatus::unknown) > 0) return 2;
  return 0;
}

json SuiteReport::to_json() const {
  json instances = json::array();
  for (const auto& r : records) {
    json item = {{"input", r.descriptor},
                 {"verdicts", r.verdicts},
                 {"seconds", r.seconds},
                 {"status", to_string(r.status)}};
    if (!r.certificate_paths.empty()) item["certificates"] = r.certificate_paths;
    if (!r.note.empty()) item["note"] = r.note;
    instances.push_back(std::move(item));
  }
  json counts = json::object();
  for (auto s : {InstanceStatus::pass, InstanceStatus::fail, InstanceStatus::unknown, InstanceStatus::skipped,
                 InstanceStatus::error}) {
    counts[to_string(s)] = count(s);
  }
  return {{"suite", suite},     {"seed", seed},     {"budgeted", budgeted}, {"passed", passed()},
          {"counts", counts},   {"notes", notes},   {"instances", std::move(instances)}};
}

std::string SuiteReport::summary_table() const {
  std::ostringstream out;
  out << "suite " << suite << " (seed " << seed << (budgeted ? ", budgeted" : "") << ")\n";
  const bool itemize = records.size() <= 24;
  for (const auto& r : records) {
    const bool interesting = r.status != InstanceStatus::pass && r.status != InstanceStatus::skipped;
    if (!itemize && !interesting) continue;
    out << "  " << std::left;
    out.width(8);
    out << to_string(r.status) << " " << r.descriptor << "  " << r.verdicts.dump();
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << "\n";
  }
  out << "  instances " << records.size() << ": pass " << count(InstanceStatus::pass) << ", fail "
      << count(InstanceStatus::fail) << ", unknown " << count(InstanceStatus::unknown) << ", skipped "
      << count(InstanceStatus::skipped) << ", error " << count(InstanceStatus::error) << "\n";
  out << (passed() ? "PASS " : "FAIL ") << suite << "\n";
  return out.str();
}

CheckKind parse_check_kind(std::string_view name) {
  if (name == "pure") return CheckKind::pure;
  if (name == "shellable") return CheckKind::shellable;
  if (name == "vd") return CheckKind::vd;
  if (name == "cm") return CheckKind::cm;
  if (name == "alpha") return CheckKind::alpha;
  if (name == "homology") return CheckKind::homology;
  throw std::invalid_argument("unknown check kind '" + std::string(name) + "'");
}

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::pure: return "pure";
    case CheckKind::shellable: return "shellable";
    case CheckKind::vd: return "vd";
    case CheckKind::cm: return "cm";
    case CheckKind::alpha: return "alpha";
    case CheckKind::homology: return "homology";
  }
  return "pure";
}

int CheckResult::exit_code() const {
  if (!error.empty() || !holds) return 2;
  return *holds ? 0 : 1;
}

json CheckResult::to_json() const {
  json out = {{"kind", to_string(kind)}, {"input", descriptor}, {"verdict", to_string(verdict)}};
  if (!value.is_null()) out["value"] = value;
  if (certificate) out["certificate"] = *certificate;
  out["stats"] = stats_to_json(stats);
  if (!error.empty()) out["error"] = error;
  out["exit_code"] = exit_code();
  return out;
}

namespace {

Complex complex_of(const Input& input) {
  if (const auto* g = std::get_if<Graph>(&input)) return independence_complex(*g);
  return std::get<Complex>(input);
}

HomologyOptions homology_options(const RunConfig& cfg) {
  HomologyOptions o;
  if (cfg.timeout_seconds) o.timeout = std::chrono::duration<double>(*cfg.timeout_seconds);
  return o;
}

}  // namespace

CheckResult run_check(CheckKind kind, const Input& input, std::string descriptor, const RunConfig& cfg) {
  CheckResult r;
  r.kind = kind;
  r.descriptor = std::move(descriptor);
  const auto start = std::chrono::steady_clock::now();
  try {
    const Complex c = complex_of(input);
    switch (kind) {
      case CheckKind::pure: {
        r.holds = is_pure(c);
        r.value = {{"pure", *r.holds}, {"facets", c.facet_count()}, {"max_facet_size", c.max_facet_size()}};
        break;
      }
      case CheckKind::alpha: {
        const Graph* g = std::get_if<Graph>(&input);
        r.value = g != nullptr ? alpha(*g) : c.max_facet_size();
        r.holds = true;
        break;
      }
      case CheckKind::shellable: {
        const auto out = shelling(c, cfg.check_options());
        r.stats = out.stats;
        r.verdict = out.verdict;
        if (out.verdict != Verdict::unknown) r.holds = out.verdict == Verdict::yes;
        if (out.certificate) r.certificate = certificate_to_json(*out.certificate);
        break;
      }
      case CheckKind::vd: {
        const auto out = vertex_decomposition(c, cfg.check_options());
        r.stats = out.stats;
        r.verdict = out.verdict;
        if (out.verdict != Verdict::unknown) r.holds = out.verdict == Verdict::yes;
        if (out.certificate) r.certificate = certificate_to_json(*out.certificate);
        break;
      }
      case CheckKind::cm: {
        try {
          r.holds = is_cohen_macaulay(c, homology_options(cfg));
        } catch (const BudgetExceeded&) {
          r.verdict = Verdict::unknown;
        }
        break;
      }
      case CheckKind::homology: {
        r.value = profile_to_json(reduced_homology(c));
        r.holds = true;
        break;
      }
    }
    if (r.holds && kind != CheckKind::shellable && kind != CheckKind::vd) {
      r.verdict = *r.holds ? Verdict::yes : Verdict::no;
    }
  } catch (const std::exception& ex) {
    r.holds.reset();
    r.error = ex.what();
  }
  if (r.stats.seconds == 0.0) {
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

bool verify_certificate(CheckKind kind, const Input& input, const json& certificate) {
  const Complex c = complex_of(input);
  try {
    if (kind == CheckKind::shellable) return verify_shelling(c, shelling_certificate_from_json(certificate));
    if (kind == CheckKind::vd) return verify_shed_tree(c, shed_tree_from_json(certificate));
  } catch (const std::invalid_argument&) {
    return false;
  } catch (const json::exception&) {
    return false;
  }
  throw std::invalid_argument("only shellable and vd checks carry certificates");
}

// ---------------------------------------------------------------------------
// Instance grids

std::vector<Graph> labeled_graphs(int n) {
  if (n < 0 || n > 5) throw std::invalid_argument("labeled graph enumeration supports n <= 5");
  std::vector<Edge> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.push_back({a, b});
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(slots[i]);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

namespace {

std::vector<Graph> compute_classes(int n) {
  std::vector<Edge> slots;
  std::vector<std::vector<int>> slot_of(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      slot_of[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(slots.size());
      slot_of[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = static_cast<int>(slots.size());
      slots.push_back({a, b});
    }
  // Edge-slot permutation induced by every vertex permutation.
  std::vector<std::vector<int>> slot_perms;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> sp;
    for (const Edge& e : slots) {
      sp.push_back(slot_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(e.a)])]
                          [static_cast<std::size_t>(perm[static_cast<std::size_t>(e.b)])]);
    }
    slot_perms.push_back(std::move(sp));
  } while (std::next_permutation(perm.begin(), perm.end()));

  // A mask represents its class when no relabeling makes it smaller.
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
    bool minimal = true;
    for (const auto& sp : slot_perms) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if ((mask >> i) & 1U) image |= 1U << sp[i];
      if (image < mask) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(slots[i]);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace

const std::vector<Graph>& small_graph_classes(int n) {
  if (n < 0 || n > 6) throw std::invalid_argument("graph classes are tabulated for n <= 6");
  static const std::vector<std::vector<Graph>> table = [] {
    std::vector<std::vector<Graph>> t;
    for (int k = 0; k <= 6; ++k) t.push_back(compute_classes(k));
    return t;
  }();
  return table[static_cast<std::size_t>(n)];
}

namespace {

std::vector<Graph> classes_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto& cls = small_graph_classes(n);
    out.insert(out.end(), cls.begin(), cls.end());
  }
  return out;
}

std::vector<Graph> labeled_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    auto l = labeled_graphs(n);
    out.insert(out.end(), std::make_move_iterator(l.begin()), std::make_move_iterator(l.end()));
  }
  return out;
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n - 1) / 2;
}

// Runs `fn(i)` for i in [0, count) on a pool; records come back in index order.
std::vector<InstanceRecord> run_grid(std::size_t count, int threads,
                                     const std::function<InstanceRecord(std::size_t)>& fn) {
  std::vector<InstanceRecord> out(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const auto start = std::chrono::steady_clock::now();
      try {
        out[i] = fn(i);
      } catch (const std::exception& ex) {
        out[i].status = InstanceStatus::error;
        out[i].note = ex.what();
      }
      out[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const int n = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

// Outcome of one certificate-backed property check.
enum class Decision { yes, no, not_pure, unknown, bad_certificate };

std::string to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::not_pure: return "not-pure";
    case Decision::unknown: return "unknown";
    case Decision::bad_certificate: return "certificate-rejected";
  }
  return "unknown";
}

struct Decided {
  Decision decision = Decision::unknown;
  std::optional<json> certificate;
};

class CertificateSink {
 public:
  CertificateSink(const RunConfig& cfg, std::string suite) : dir_(cfg.certificate_dir), suite_(std::move(suite)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
  }

  void store(InstanceRecord& record, std::size_t index, const std::string& label, const Decided& d) {
    if (dir_.empty() || !d.certificate) return;
    const auto path = dir_ / (suite_ + "-" + std::to_string(index) + "-" + label + ".json");
    std::ofstream(path) << d.certificate->dump() << "\n";
    record.certificate_paths.push_back(path.string());
  }

 private:
  std::filesystem::path dir_;
  std::string suite_;
};

CheckOptions single_threaded(const RunConfig& cfg) {
  CheckOptions o = cfg.check_options();
  o.threads = 1;
  return o;
}

Decided decide_shellable(const Complex& c, const CheckOptions& o) {
  if (!is_pure(c)) return {Decision::not_pure, std::nullopt};
  const auto out = shelling(c, o);
  if (out.verdict == Verdict::unknown) return {Decision::unknown, std::nullopt};
  if (out.verdict == Verdict::no) return {Decision::no, std::nullopt};
  if (!verify_shelling(c, *out.certificate)) return {Decision::bad_certificate, std::nullopt};
  return {Decision::yes, certificate_to_json(*out.certificate)};
}

Decided decide_vd(const Complex& c, const CheckOptions& o) {
  if (!is_pure(c)) return {Decision::not_pure, std::nullopt};
  const auto out = vertex_decomposition(c, o);
  if (out.verdict == Verdict::unknown) return {Decision::unknown, std::nullopt};
  if (out.verdict == Verdict::no) return {Decision::no, std::nullopt};
  if (!verify_shed_tree(c, *out.certificate)) return {Decision::bad_certificate, std::nullopt};
  return {Decision::yes, certificate_to_json(*out.certificate)};
}

// pass when `ok`, unknown when any decision timed out, fail otherwise.
InstanceStatus judge(bool ok, std::initializer_list<Decision> decisions) {
  for (Decision d : decisions) {
    if (d == Decision::bad_certificate) return InstanceStatus::fail;
  }
  if (ok) return InstanceStatus::pass;
  for (Decision d : decisions) {
    if (d == Decision::unknown) return InstanceStatus::unknown;
  }
  return InstanceStatus::fail;
}

std::string product_descriptor(const Graph& g, const Graph& h) { return describe(g) + "[" + describe(h) + "]"; }

// ---------------------------------------------------------------------------
// Suites

SuiteReport suite_topp_volkmann(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "topp-volkmann";
  rep.seed = cfg.seed;
  std::vector<Graph> graphs = labeled_up_to(4);
  std::vector<std::pair<Graph, Graph>> pairs;
  for (const auto& g : graphs)
    for (const auto& h : graphs) pairs.emplace_back(g, h);
  const std::size_t exhaustive = pairs.size();

  // Seeded sample with one factor on five vertices.
  std::mt19937_64 rng(cfg.seed);
  auto random_graph = [&](int n) {
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() & 1U) edges.push_back({a, b});
    return Graph(n, std::move(edges));
  };
  for (int i = 0; i < 200; ++i) {
    const int other = 1 + static_cast<int>(rng() % 5);
    Graph five = random_graph(5);
    Graph rest = random_graph(other);
    if (i % 2 == 0) {
      pairs.emplace_back(std::move(five), std::move(rest));
    } else {
      pairs.emplace_back(std::move(rest), std::move(five));
    }
  }
  rep.notes.push_back("exhaustive labeled pairs n_G, n_H <= 4: " + std::to_string(exhaustive) +
                      "; seeded sample with a 5-vertex factor: " + std::to_string(pairs.size() - exhaustive));

  rep.records = run_grid(pairs.size(), cfg.threads, [&](std::size_t i) {
    const auto& [g, h] = pairs[i];
    const Complex ig = independence_complex(g);
    const Complex ih = independence_complex(h);
    const Complex igh = independence_complex(lex_product(g, h));
    InstanceRecord r;
    r.descriptor = product_descriptor(g, h);
    const bool pg = is_pure(ig);
    const bool ph = is_pure(ih);
    const bool pgh = is_pure(igh);
    r.verdicts = {{"pure(G)", pg}, {"pure(H)", ph}, {"pure(G[H])", pgh}};
    bool ok = pgh == (pg && ph);
    if (pgh) {
      // Every facet projects onto a facet of Ind(G).
      const int ng = g.vertex_count();
      bool projections_ok = true;
      for (VertexSet f : igh.facets()) {
        VertexSet projected;
        f.for_each([&](int v) { projected.insert(v % ng); });
        const auto gf = ig.facets();
        if (std::find(gf.begin(), gf.end(), projected) == gf.end()) projections_ok = false;
      }
      r.verdicts["projections_are_facets"] = projections_ok;
      ok = ok && projections_ok;
    }
    r.status = ok ? InstanceStatus::pass : InstanceStatus::fail;
    return r;
  });
  return rep;
}

SuiteReport suite_alpha_product(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "alpha-product";
  rep.seed = cfg.seed;
  const std::vector<Graph> graphs = classes_up_to(5);
  rep.notes.push_back("all pairs of isomorphism classes with n_G, n_H <= 5");
  std::vector<int> alphas;
  for (const auto& g : graphs) alphas.push_back(alpha(g));
  const std::size_t k = graphs.size();
  rep.records = run_grid(k * k, cfg.threads, [&](std::size_t i) {
    const Graph& g = graphs[i / k];
    const Graph& h = graphs[i % k];
    InstanceRecord r;
    r.descriptor = product_descriptor(g, h);
    const int agh = alpha(lex_product(g, h));
    const int expected = alphas[i / k] * alphas[i % k];
    r.verdicts = {{"alpha(G)", alphas[i / k]}, {"alpha(H)", alphas[i % k]}, {"alpha(G[H])", agh}};
    r.status = agh == expected ? InstanceStatus::pass : InstanceStatus::fail;
    return r;
  });
  return rep;
}

SuiteReport suite_main_a(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "main-a";
  rep.seed = cfg.seed;
  CertificateSink sink(cfg, rep.suite);
  const std::vector<Graph> graphs = labeled_up_to(4);
  rep.notes.push_back("H ranges over labeled graphs with n_H <= 4, k in {1,2,3}; kH is E_k[H]");
  rep.notes.push_back("non-pure complexes are reported as not-pure for both properties");
  const CheckOptions opts = single_threaded(cfg);
  rep.records = run_grid(graphs.size() * 3, cfg.threads, [&](std::size_t i) {
    const Graph& h = graphs[i / 3];
    const int k = static_cast<int>(i % 3) + 1;
    const Graph kh = lex_product(Graph::edgeless(k), h);
    const Complex ih = independence_complex(h);
    const Complex ikh = independence_complex(kh);
    const Decided sh = decide_shellable(ih, opts);
    const Decided skh = decide_shellable(ikh, opts);
    const Decided vh = decide_vd(ih, opts);
    const Decided vkh = decide_vd(ikh, opts);
    InstanceRecord r;
    r.descriptor = "E" + std::to_string(k) + "[" + describe(h) + "]";
    r.verdicts = {{"shellable(H)", to_string(sh.decision)},
                  {"shellable(kH)", to_string(skh.decision)},
                  {"vd(H)", to_string(vh.decision)},
                  {"vd(kH)", to_string(vkh.decision)}};
    r.status = judge(sh.decision == skh.decision && vh.decision == vkh.decision,
                     {sh.decision, skh.decision, vh.decision, vkh.decision});
    sink.store(r, i, "shelling-H", sh);
    sink.store(r, i, "shelling-kH", skh);
    sink.store(r, i, "vd-H", vh);
    sink.store(r, i, "vd-kH", vkh);
    return r;
  });
  return rep;
}

SuiteReport suite_main_bc(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "main-bc";
  rep.seed = cfg.seed;
  CertificateSink sink(cfg, rep.suite);
  const std::vector<Graph> graphs = classes_up_to(5);
  rep.notes.push_back("G over isomorphism classes with n_G <= 5, m in {2,3}");
  rep.notes.push_back("checks vd(G) <=> vd(G[K_m]) and shellable(G) => shellable(G[K_m])");
  const CheckOptions opts = single_threaded(cfg);
  rep.records = run_grid(graphs.size() * 2, cfg.threads, [&](std::size_t i) {
    const Graph& g = graphs[i / 2];
    const int m = static_cast<int>(i % 2) + 2;
    const Complex ig = independence_complex(g);
    const Complex igk = independence_complex(lex_product(g, complete(m)));
    const Decided vg = decide_vd(ig, opts);
    const Decided vgk = decide_vd(igk, opts);
    const Decided sg = decide_shellable(ig, opts);
    const Decided sgk = decide_shellable(igk, opts);
    InstanceRecord r;
    r.descriptor = describe(g) + "[K" + std::to_string(m) + "]";
    r.verdicts = {{"vd(G)", to_string(vg.decision)},
                  {"vd(G[K_m])", to_string(vgk.decision)},
                  {"shellable(G)", to_string(sg.decision)},
                  {"shellable(G[K_m])", to_string(sgk.decision)}};
    const bool ok = vg.decision == vgk.decision && (sg.decision != Decision::yes || sgk.decision == Decision::yes);
    r.status = judge(ok, {vg.decision, vgk.decision, sg.decision, sgk.decision});
    sink.store(r, i, "vd-G", vg);
    sink.store(r, i, "vd-GKm", vgk);
    sink.store(r, i, "shelling-G", sg);
    sink.store(r, i, "shelling-GKm", sgk);
    return r;
  });
  return rep;
}

SuiteReport suite_nonshellable(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "nonshellable";
  rep.seed = cfg.seed;
  std::vector<Graph> gs;
  std::vector<Graph> hs;
  for (auto& g : labeled_up_to(4)) {
    if (g.edge_count() > 0) gs.push_back(g);
    if (!is_complete(g)) hs.push_back(std::move(g));
  }
  rep.notes.push_back("G: labeled, at least one edge, n_G <= 4; H: labeled, not complete, n_H <= 4");
  rep.notes.push_back("NotPure is counted as not shellable");
  const CheckOptions opts = single_threaded(cfg);
  rep.records = run_grid(gs.size() * hs.size(), cfg.threads, [&](std::size_t i) {
    const Graph& g = gs[i / hs.size()];
    const Graph& h = hs[i % hs.size()];
    const Decided d = decide_shellable(independence_complex(lex_product(g, h)), opts);
    InstanceRecord r;
    r.descriptor = product_descriptor(g, h);
    r.verdicts = {{"shellable(G[H])", to_string(d.decision)}};
    r.status = judge(d.decision == Decision::no || d.decision == Decision::not_pure, {d.decision});
    return r;
  });
  return rep;
}

SuiteReport suite_expansion(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "expansion";
  rep.seed = cfg.seed;
  CertificateSink sink(cfg, rep.suite);
  const std::vector<Graph> graphs = classes_up_to(5);
  rep.notes.push_back("G over isomorphism classes with n_G <= 5, every expansion vector in {1,2}^n");
  rep.notes.push_back("also checks G^(m,...,m) == G[K_m] under the block relabeling for m in {1,2,3}");
  const CheckOptions opts = single_threaded(cfg);

  std::vector<Decided> base_vd(graphs.size());
  std::vector<Decided> base_sh(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Complex c = independence_complex(graphs[i]);
    base_vd[i] = decide_vd(c, opts);
    base_sh[i] = decide_shellable(c, opts);
  }

  struct Item {
    std::size_t graph;
    std::vector<int> s;
    bool identity;  // G^(m..m) vs G[K_m] instead of a checker comparison
  };
  std::vector<Item> items;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const int n = graphs[gi].vertex_count();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<int> s;
      for (int v = 0; v < n; ++v) s.push_back(((mask >> v) & 1U) ? 2 : 1);
      items.push_back({gi, std::move(s), false});
    }
    for (int m = 1; m <= 3; ++m) items.push_back({gi, std::vector<int>(static_cast<std::size_t>(n), m), true});
  }

  rep.records = run_grid(items.size(), cfg.threads, [&](std::size_t i) {
    const Item& item = items[i];
    const Graph& g = graphs[item.graph];
    const Graph gs = expansion(g, ExpansionVector(item.s));
    InstanceRecord r;
    r.descriptor = describe(g) + "^(";
    for (std::size_t k = 0; k < item.s.size(); ++k) r.descriptor += (k ? "," : "") + std::to_string(item.s[k]);
    r.descriptor += ")";

    if (item.identity) {
      const int n = g.vertex_count();
      const int m = item.s.front();
      const Graph product = lex_product(g, complete(m));
      std::vector<Edge> relabeled;
      auto block = [n, m](int label) { return (label % n) * m + label / n; };
      for (const Edge& e : product.edges()) relabeled.push_back({block(e.a), block(e.b)});
      const bool same = Graph(product.vertex_count(), std::move(relabeled)) == gs;
      r.verdicts = {{"G^(m..m) == G[K_m]", same}};
      r.status = same ? InstanceStatus::pass : InstanceStatus::fail;
      return r;
    }

    const Complex c = independence_complex(gs);
    const Decided vd = decide_vd(c, opts);
    const Decided sh = base_sh[item.graph].decision == Decision::yes ? decide_shellable(c, opts) : Decided{};
    const Decision bvd = base_vd[item.graph].decision;
    const Decision bsh = base_sh[item.graph].decision;
    r.verdicts = {{"vd(G)", to_string(bvd)}, {"vd(G^s)", to_string(vd.decision)}, {"shellable(G)", to_string(bsh)}};
    bool ok = vd.decision == bvd;
    std::vector<Decision> seen{vd.decision, bvd, bsh};
    if (bsh == Decision::yes) {
      r.verdicts["shellable(G^s)"] = to_string(sh.decision);
      ok = ok && sh.decision == Decision::yes;
      seen.push_back(sh.decision);
    }
    r.status = ok ? InstanceStatus::pass : InstanceStatus::fail;
    for (Decision d : seen) {
      if (d == Decision::bad_certificate) r.status = InstanceStatus::fail;
      if (!ok && d == Decision::unknown) r.status = InstanceStatus::unknown;
    }
    sink.store(r, i, "vd", vd);
    sink.store(r, i, "shelling", sh);
    return r;
  });
  return rep;
}

std::vector<CirculantSpec> all_specs(int n_max) {
  std::vector<CirculantSpec> out;
  for (int n = 1; n <= n_max; ++n) {
    const int half = n / 2;
    for (std::uint32_t mask = 0; mask < (1U << half); ++mask) {
      std::vector<int> gens;
      for (int d = 1; d <= half; ++d)
        if ((mask >> (d - 1)) & 1U) gens.push_back(d);
      out.emplace_back(n, std::move(gens));
    }
  }
  return out;
}

SuiteReport suite_circulant_product(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "circulant-product";
  rep.seed = cfg.seed;
  const std::vector<CirculantSpec> specs = all_specs(8);
  rep.notes.push_back("every pair of normalized circulant specs with n, m <= 8; plus C_n(1..n/2) == K_n for n <= 12");
  const std::size_t k = specs.size();
  rep.records = run_grid(k * k + 12, cfg.threads, [&](std::size_t i) {
    InstanceRecord r;
    if (i >= k * k) {
      const int n = static_cast<int>(i - k * k) + 1;
      std::vector<int> gens;
      for (int d = 1; d <= n / 2; ++d) gens.push_back(d);
      const CirculantSpec spec(n, gens);
      r.descriptor = spec.to_string();
      const bool same = circulant(spec) == complete(n);
      r.verdicts = {{"equals K_n", same}};
      r.status = same ? InstanceStatus::pass : InstanceStatus::fail;
      return r;
    }
    const CirculantSpec& a = specs[i / k];
    const CirculantSpec& b = specs[i % k];
    const CirculantSpec joined = circulant_lex_connection(a, b);
    r.descriptor = a.to_string() + "[" + b.to_string() + "]";
    const bool same = circulant(joined) == lex_product(circulant(a), circulant(b));
    r.verdicts = {{"connection", joined.to_string()}, {"edge_identical", same}};
    r.status = same ? InstanceStatus::pass : InstanceStatus::fail;
    return r;
  });
  return rep;
}

// Regression constants, keyed by descriptor.
class RegressionFile {
 public:
  explicit RegressionFile(const RunConfig& cfg) : path_(cfg.regression_file), bless_(cfg.bless) {
    if (!path_.empty() && std::filesystem::exists(path_)) {
      std::ifstream in(path_);
      data_ = json::parse(in);
      loaded_ = true;
    }
  }

  // Returns "" when consistent, else a description of the mismatch.
  std::string check(const std::string& key, const json& values) {
    std::lock_guard lock(mutex_);
    if (bless_) {
      data_[key] = values;
      return "";
    }
    if (!loaded_ || !data_.contains(key)) return "";
    for (const auto& [name, value] : values.items()) {
      if (data_[key].contains(name) && data_[key][name] != value) {
        return "regression mismatch for " + key + "." + name + ": stored " + data_[key][name].dump() + ", computed " +
               value.dump();
      }
    }
    return "";
  }

  void finish(SuiteReport& rep) {
    if (path_.empty()) {
      rep.notes.push_back("no regression file configured");
    } else if (bless_) {
      std::ofstream(path_) << data_.dump(2) << "\n";
      rep.notes.push_back("blessed regression constants into " + path_.string());
    } else if (!loaded_) {
      rep.notes.push_back("regression file " + path_.string() + " missing; run with --bless to create it");
    } else {
      rep.notes.push_back("regression constants compared against " + path_.string());
    }
  }

 private:
  std::filesystem::path path_;
  bool bless_;
  bool loaded_ = false;
  json data_ = json::object();
  std::mutex mutex_;
};

struct Milestone {
  std::string descriptor;
  bool deep;
  std::vector<std::pair<CheckKind, bool>> expectations;  // property -> expected verdict
};

SuiteReport suite_paper_milestones(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "paper-milestones";
  rep.seed = cfg.seed;
  CertificateSink sink(cfg, rep.suite);
  RegressionFile regression(cfg);
  const std::vector<Milestone> milestones = {
      {"C16(1,4,8)", false,
       {{CheckKind::pure, true}, {CheckKind::shellable, true}, {CheckKind::vd, false}}},
      {"C20(1,5,10)", true, {{CheckKind::pure, true}, {CheckKind::shellable, true}, {CheckKind::vd, false}}},
      {"C24(1,6,12)", true, {{CheckKind::pure, true}, {CheckKind::cm, true}, {CheckKind::vd, false}}},
      {"C16(1,4,8)[K2]", true, {{CheckKind::pure, true}, {CheckKind::shellable, true}}},
  };
  RunConfig inner = cfg;
  inner.threads = 1;

  rep.records = run_grid(milestones.size(), cfg.threads, [&](std::size_t i) {
    const Milestone& ms = milestones[i];
    InstanceRecord r;
    r.descriptor = ms.descriptor;
    if (ms.deep && !cfg.deep) {
      r.status = InstanceStatus::skipped;
      r.note = "deep milestone; run with --deep";
      return r;
    }
    const Graph g = parse_graph(ms.descriptor);
    const Input input = g;
    const Complex c = independence_complex(g);
    bool ok = true;
    bool unknown = false;
    for (const auto& [kind, expected] : ms.expectations) {
      const CheckResult res = run_check(kind, input, ms.descriptor, inner);
      const std::string name = to_string(kind);
      if (!res.error.empty()) {
        r.verdicts[name] = "error: " + res.error;
        ok = false;
        continue;
      }
      if (!res.holds) {
        r.verdicts[name] = "unknown";
        unknown = true;
        continue;
      }
      r.verdicts[name] = *res.holds;
      if (*res.holds != expected) ok = false;
      if (res.certificate) {
        if (!verify_certificate(kind, input, *res.certificate)) {
          r.verdicts[name + "_certificate"] = "rejected";
          ok = false;
        } else {
          r.verdicts[name + "_certificate"] = "verified";
          sink.store(r, i, name, Decided{Decision::yes, res.certificate});
        }
      }
    }
    const json constants = {{"alpha", alpha(g)},
                            {"facets", c.facet_count()},
                            {"faces", [&] {
                               std::size_t total = 0;
                               for (const auto& level : enumerate_faces(c).by_size) total += level.size();
                               return total;
                             }()}};
    r.verdicts["constants"] = constants;
    const std::string mismatch = regression.check(ms.descriptor, constants);
    if (!mismatch.empty()) {
      r.note = mismatch;
      ok = false;
    }
    r.status = !ok ? InstanceStatus::fail : unknown ? InstanceStatus::unknown : InstanceStatus::pass;
    return r;
  });
  regression.finish(rep);
  return rep;
}

// Shedding recursion without the purity and dimension side conditions on deletion and link.
bool vd_without_purity(const Complex& d, std::map<std::vector<std::uint64_t>, bool>& memo) {
  if (d.facet_count() <= 1) return true;
  std::vector<std::uint64_t> key;
  for (VertexSet f : d.facets()) key.push_back(f.bits());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool found = false;
  for (int x : d.support().elements()) {
    if (vd_without_purity(deletion(d, x), memo) && vd_without_purity(link(d, VertexSet::singleton(x)), memo)) {
      found = true;
      break;
    }
  }
  memo.emplace(std::move(key), found);
  return found;
}

SuiteReport suite_checker_chain(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "checker-chain";
  rep.seed = cfg.seed;
  CertificateSink sink(cfg, rep.suite);
  const std::vector<Graph> graphs = classes_up_to(6);
  rep.notes.push_back("pure Ind(G) over isomorphism classes with n_G <= 6: vd => shellable => cm");
  const CheckOptions opts = single_threaded(cfg);
  rep.records = run_grid(graphs.size(), cfg.threads, [&](std::size_t i) {
    const Graph& g = graphs[i];
    const Complex c = independence_complex(g);
    InstanceRecord r;
    r.descriptor = describe(g);
    if (!is_pure(c)) {
      r.status = InstanceStatus::skipped;
      r.note = "not pure";
      return r;
    }
    const Decided vd = decide_vd(c, opts);
    const Decided sh = decide_shellable(c, opts);
    const bool cm = is_cohen_macaulay(c);
    std::map<std::vector<std::uint64_t>, bool> memo;
    const bool loose = vd_without_purity(c, memo);
    r.verdicts = {{"vd", to_string(vd.decision)}, {"shellable", to_string(sh.decision)}, {"cm", cm},
                  {"vd_without_purity", loose}};
    if (vd.decision != Decision::unknown && loose != (vd.decision == Decision::yes)) {
      r.note = "shedding readings disagree";
    }
    const bool ok = (vd.decision != Decision::yes || sh.decision == Decision::yes) &&
                    (sh.decision != Decision::yes || cm);
    r.status = judge(ok, {vd.decision, sh.decision});
    sink.store(r, i, "vd", vd);
    sink.store(r, i, "shelling", sh);
    return r;
  });
  const auto disagreements = std::count_if(rep.records.begin(), rep.records.end(),
                                           [](const InstanceRecord& r) { return r.note == "shedding readings disagree"; });
  rep.notes.push_back("instances where dropping the purity conditions changes the vd verdict: " +
                      std::to_string(disagreements));
  return rep;
}

SuiteReport suite_homology(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "homology";
  rep.seed = cfg.seed;
  std::vector<Graph> graphs = classes_up_to(6);
  graphs.push_back(circulant(CirculantSpec(5, {1})));
  graphs.push_back(circulant(CirculantSpec(16, {1, 4, 8})));
  rep.notes.push_back("Ind(G) over isomorphism classes with n_G <= 6, plus C5(1) and C16(1,4,8)");
  rep.notes.push_back("checks boundary composition is zero and the Euler relation; C5(1) must have betti (0, 1)");
  rep.records = run_grid(graphs.size(), cfg.threads, [&](std::size_t i) {
    const Graph& g = graphs[i];
    const Complex c = independence_complex(g);
    const FaceLattice faces = enumerate_faces(c);
    bool boundary_ok = true;
    for (int k = 2; k < static_cast<int>(faces.by_size.size()); ++k) {
      boundary_ok = boundary_ok && composes_to_zero(boundary_matrix(faces, k - 1), boundary_matrix(faces, k));
    }
    const HomologyProfile p = reduced_homology(c);
    InstanceRecord r;
    r.descriptor = i + 2 == graphs.size() ? "C5(1)" : i + 1 == graphs.size() ? "C16(1,4,8)" : describe(g);
    r.verdicts = {{"boundary_squared_zero", boundary_ok},
                  {"euler", p.satisfies_euler_relation()},
                  {"profile", profile_to_json(p)}};
    bool ok = boundary_ok && p.satisfies_euler_relation();
    if (r.descriptor == "C5(1)") {
      const bool circle = p.top_dimension == 1 && p.betti_at(-1) == 0 && p.betti_at(0) == 0 && p.betti_at(1) == 1;
      r.verdicts["circle_profile"] = circle;
      ok = ok && circle;
    }
    r.status = ok ? InstanceStatus::pass : InstanceStatus::fail;
    return r;
  });
  return rep;
}

using SuiteFn = SuiteReport (*)(const RunConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"topp-volkmann", suite_topp_volkmann},
      {"alpha-product", suite_alpha_product},
      {"main-a", suite_main_a},
      {"main-bc", suite_main_bc},
      {"nonshellable", suite_nonshellable},
      {"expansion", suite_expansion},
      {"circulant-product", suite_circulant_product},
      {"paper-milestones", suite_paper_milestones},
      {"checker-chain", suite_checker_chain},
      {"homology", suite_homology},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suite_table()) out.push_back(name);
  return out;
}

SuiteReport run_suite(std::string_view name, const RunConfig& cfg) {
  for (const auto& [suite, fn] : suite_table()) {
    if (suite != name) continue;
    SuiteReport rep = fn(cfg);
    std::stable_sort(rep.records.begin(), rep.records.end(),
                     [](const InstanceRecord& a, const InstanceRecord& b) { return a.descriptor < b.descriptor; });
    return rep;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

SuiteReport explore_family(int s_min, int s_max, const RunConfig& cfg) {
  if (s_min < 4) throw std::invalid_argument("the family C_{4s}(1,s,2s) is explored for s >= 4 only");
  if (s_max < s_min) throw std::invalid_argument("empty s range");
  if (4 * s_max > VertexSet::kMaxVertices) throw std::invalid_argument("s > 16 exceeds the 64-vertex limit");
  SuiteReport rep;
  rep.suite = "family";
  rep.seed = cfg.seed;
  rep.budgeted = true;
  rep.notes.push_back("C_{4s}(1,s,2s); unknown means the per-check budget ran out and settles nothing");
  CertificateSink sink(cfg, rep.suite);
  RunConfig inner = cfg;
  inner.threads = std::max(1, cfg.threads);

  const auto count = static_cast<std::size_t>(s_max - s_min + 1);
  for (std::size_t i = 0; i < count; ++i) {
    const int s = s_min + static_cast<int>(i);
    const CirculantSpec spec(4 * s, {1, s, 2 * s});
    const Input input = circulant(spec);
    InstanceRecord r;
    r.descriptor = spec.to_string();
    const auto start = std::chrono::steady_clock::now();
    bool any_unknown = false;
    for (CheckKind kind : {CheckKind::pure, CheckKind::shellable, CheckKind::vd, CheckKind::cm}) {
      const CheckResult res = run_check(kind, input, r.descriptor, inner);
      const std::string name = to_string(kind);
      if (!res.error.empty()) {
        r.verdicts[name] = "error: " + res.error;
        r.status = InstanceStatus::error;
      } else if (!res.holds) {
        r.verdicts[name] = "unknown";
        any_unknown = true;
      } else {
        r.verdicts[name] = *res.holds ? "yes" : "no";
      }
      if (res.certificate) {
        const bool accepted = verify_certificate(kind, input, *res.certificate);
        r.verdicts[name + "_certificate"] = accepted ? "verified" : "rejected";
        if (!accepted) r.status = InstanceStatus::fail;
        else sink.store(r, i, name, Decided{Decision::yes, res.certificate});
      }
    }
    if (r.status == InstanceStatus::pass && any_unknown) r.status = InstanceStatus::unknown;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep.records.push_back(std::move(r));
  }
  return rep;
}

}  // namespace lexshell
