#include "loosehc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "loosehc/connect.hpp"
#include "loosehc/pathcover.hpp"
#include "loosehc/rng.hpp"

namespace loosehc {

namespace {

/// Shared backtracker for decide/count. Joints occupy even positions of
/// the constructed sequence j0 i0 j1 i1 ...; all joints exceed j0.
struct CycleSearch {
  const Hypergraph3& g;
  int n;
  bool count_all;
  long long found = 0;
  std::uint64_t nodes = 0;
  std::vector<int> seq;
  std::vector<char> used;
  std::optional<LooseCycle> witness;

  explicit CycleSearch(const Hypergraph3& g_, bool count_all_)
      : g(g_), n(g_.vertex_count()), count_all(count_all_),
        used(static_cast<std::size_t>(n), 0) {}

  bool prune_isolated(int root) const {
    if (n < 12) return false;
    int cur = seq.back();
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool viable = false;
      for (int id : g.incident(v)) {
        const Edge& e = g.edge(id);
        int ok = 0;
        for (int u : e)
          if (u == v || !used[static_cast<std::size_t>(u)] || u == cur || u == root) ++ok;
        if (ok == 3) {
          viable = true;
          break;
        }
      }
      if (!viable) return true;
    }
    return false;
  }

  // place joints/interiors for steps left; cur = last joint
  bool extend(int root, int steps_left) {
    ++nodes;
    int cur = seq.back();
    if (steps_left == 0) {
      // close with the single remaining vertex as interior
      int last = -1;
      int remaining = 0;
      for (int v = 0; v < n; ++v)
        if (!used[static_cast<std::size_t>(v)]) {
          last = v;
          ++remaining;
        }
      if (remaining != 1) return false;
      if (!g.has_edge(cur, last, root)) return false;
      if (seq[2] > seq.back()) return false;  // reflection: second joint below the last
      ++found;
      if (!witness) {
        std::vector<int> cycle = seq;
        cycle.push_back(last);
        witness = LooseCycle{std::move(cycle)};
      }
      return !count_all;
    }
    if (prune_isolated(root)) return false;
    std::vector<std::pair<int, int>> steps;
    for (int id : g.incident(cur)) {
      const Edge& e = g.edge(id);
      int o1 = -1, o2 = -1;
      for (int v : e)
        if (v != cur) (o1 < 0 ? o1 : o2) = v;
      for (auto [i, j] : {std::pair{o1, o2}, std::pair{o2, o1}}) {
        if (used[static_cast<std::size_t>(i)] || used[static_cast<std::size_t>(j)]) continue;
        if (j <= root) continue;  // joints stay above the root
        steps.emplace_back(i, j);
      }
    }
    std::sort(steps.begin(), steps.end());
    for (auto [i, j] : steps) {
      used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = 1;
      seq.push_back(i);
      seq.push_back(j);
      bool stop = extend(root, steps_left - 1);
      seq.pop_back();
      seq.pop_back();
      used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = 0;
      if (stop) return true;
    }
    return false;
  }

  void run() {
    if (n % 2 != 0 || n < 6) return;
    int h = n / 2;
    for (int root = 0; root < n; ++root) {
      // root is the minimum joint: all smaller vertices must be interiors,
      // of which there are h; give up once too many are forced.
      if (root > h) break;
      seq.assign(1, root);
      std::fill(used.begin(), used.end(), 0);
      used[static_cast<std::size_t>(root)] = 1;
      if (extend(root, h - 1) && !count_all) return;
    }
  }
};

}  // namespace

OracleResult has_loose_hc(const Hypergraph3& g) {
  const int n = g.vertex_count();
  OracleResult res;
  if (n % 2 != 0) {
    res.exhaustive = true;
    res.reason = "parity";
    return res;
  }
  if (n > 16) throw std::invalid_argument("has_loose_hc: exhaustive mode requires n <= 16");
  if (n < 6) {
    res.exhaustive = true;
    res.reason = "too few vertices for a loose cycle";
    return res;
  }
  CycleSearch search(g, /*count_all=*/false);
  search.run();
  res.nodes_explored = search.nodes;
  res.exhaustive = true;
  if (search.found > 0) {
    res.yes = true;
    res.witness = search.witness;
    if (!validate_loose_cycle(g, *res.witness).ok)
      throw std::logic_error("has_loose_hc produced an invalid witness");
  } else {
    res.reason = "exhausted search space";
  }
  return res;
}

long long count_loose_hc(const Hypergraph3& g) {
  const int n = g.vertex_count();
  if (n > 12) throw std::invalid_argument("count_loose_hc: n <= 12");
  if (n % 2 != 0 || n < 6) return 0;
  CycleSearch search(g, /*count_all=*/true);
  search.run();
  return search.found;
}

PathEnumeration enumerate_loose_paths(const Hypergraph3& g, int x, int y, int max_len,
                                      std::uint64_t budget) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) throw std::invalid_argument("enumerate_loose_paths: x != y");
  PathEnumeration out;
  std::vector<int> prefix{x};
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  used[static_cast<std::size_t>(x)] = 1;
  used[static_cast<std::size_t>(y)] = 1;
  std::uint64_t nodes = 0;

  std::function<void(int)> emit = [&](int windows_left) {
    if (out.truncated) return;
    if (++nodes > budget) {
      out.truncated = true;
      return;
    }
    int cur = prefix.back();
    if (windows_left == 1) {
      for (int m : g.copair(cur, y)) {
        if (used[static_cast<std::size_t>(m)]) continue;
        std::vector<int> full = prefix;
        full.push_back(m);
        full.push_back(y);
        out.paths.push_back(LoosePath{std::move(full)});
      }
      return;
    }
    std::vector<std::pair<int, int>> steps;
    for (int id : g.incident(cur)) {
      const Edge& e = g.edge(id);
      int o1 = -1, o2 = -1;
      for (int v : e)
        if (v != cur) (o1 < 0 ? o1 : o2) = v;
      for (auto [m, j] : {std::pair{o1, o2}, std::pair{o2, o1}})
        if (!used[static_cast<std::size_t>(m)] && !used[static_cast<std::size_t>(j)])
          steps.emplace_back(m, j);
    }
    std::sort(steps.begin(), steps.end());
    for (auto [m, j] : steps) {
      used[static_cast<std::size_t>(m)] = used[static_cast<std::size_t>(j)] = 1;
      prefix.push_back(m);
      prefix.push_back(j);
      emit(windows_left - 1);
      prefix.pop_back();
      prefix.pop_back();
      used[static_cast<std::size_t>(m)] = used[static_cast<std::size_t>(j)] = 0;
      if (out.truncated) return;
    }
  };

  for (int len = 1; len <= max_len && !out.truncated; ++len) emit(len);
  // Sorting inside one length is already lexicographic by construction.
  return out;
}

// ---- pipeline ---------------------------------------------------------------

long long pipeline_min_host(int m, int d_mode) {
  if (m < 2) return std::numeric_limits<long long>::max();
  TemplateGraph t;
  try {
    t = build_template(m, TemplateMode::auto_pick);
  } catch (const std::exception&) {
    return std::numeric_limits<long long>::max();
  }
  // assembly + at least one reservoir seat spent closing the cycle
  return assembly_vertex_demand(t.order, static_cast<int>(t.edges.size()), d_mode);
}

std::string PipelineResult::failure_summary() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [stage, count] : stage_failures) {
    if (!first) out << ", ";
    out << stage << " x" << count;
    first = false;
  }
  return out.str();
}

PipelineResult find_loose_hc_pipeline(const Hypergraph3& g, const PipelineConfig& config) {
  const int n = g.vertex_count();
  if (n % 2 != 0) throw std::invalid_argument("find_loose_hc_pipeline: n must be even");

  PipelineResult result;
  auto fail = [&](const std::string& stage) { ++result.stage_failures[stage]; };

  int m = static_cast<int>(config.alpha * n + 0.5);
  if (m == 1) m = 2;

  for (int attempt = 0; attempt < config.retries; ++attempt) {
    ++result.attempts;
    CounterRng rng = CounterRng(config.seed, 0x50495045).derive(static_cast<std::uint64_t>(attempt));

    // (i) reservoir + absorber
    AssembleParams ap = config.assemble;
    ap.seed = rng.next();
    TemplateGraph tmpl;
    if (m >= 2) {
      try {
        TemplateOptions topts = ap.template_opts;
        topts.seed = ap.seed;
        tmpl = build_template(m, ap.template_mode, topts);
      } catch (const std::exception&) {
        fail("template");
        continue;
      }
    }
    int et = static_cast<int>(tmpl.edges.size());
    long long w_seats = std::max(0, et - 1) + (ap.d_mode == 1 ? 4 * et : 0);
    long long interior = (ap.d_mode == 2 ? 7LL : 35LL) * et + (tmpl.order - m);
    long long w_size = std::min<long long>(w_seats + 4, n - m - interior);
    if (w_size < w_seats) {
      fail("space");
      continue;
    }

    std::vector<int> r = rng.sample_indices(n, m);
    std::vector<char> in_r(static_cast<std::size_t>(n), 0);
    for (int v : r) in_r[static_cast<std::size_t>(v)] = 1;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!in_r[static_cast<std::size_t>(v)]) rest.push_back(v);
    rng.shuffle(rest);
    std::vector<int> w(rest.begin(), rest.begin() + static_cast<std::size_t>(w_size));
    std::sort(w.begin(), w.end());

    ap.template_mode = m >= 2 ? tmpl.mode : ap.template_mode;
    auto assembled = assemble_absorber(g, r, w, ap);
    if (!assembled.assembly) {
      fail(assembled.failure_stage.empty() ? "assemble" : assembled.failure_stage);
      continue;
    }
    const AbsorberAssembly& asm_ = *assembled.assembly;

    // (ii) cover the remainder with disjoint loose paths
    std::vector<char> in_asm(static_cast<std::size_t>(n), 0);
    for (int v : asm_.total_vertices) in_asm[static_cast<std::size_t>(v)] = 1;
    std::vector<int> remainder;
    for (int v = 0; v < n; ++v)
      if (!in_asm[static_cast<std::size_t>(v)]) remainder.push_back(v);
    PathCover cover;
    try {
      cover = greedy_path_cover(g, config.rho, &remainder);
    } catch (const std::exception&) {
      fail("cover");
      continue;
    }

    // (iii) patch everything into one cyclic order through R
    ConnectRequest creq;
    creq.reservoir = asm_.reservoir;
    if (!cover.paths.empty()) {
      creq.pairs.emplace_back(asm_.b, cover.paths.front().head());
      for (std::size_t i = 0; i + 1 < cover.paths.size(); ++i)
        creq.pairs.emplace_back(cover.paths[i].tail(), cover.paths[i + 1].head());
      creq.pairs.emplace_back(cover.paths.back().tail(), asm_.a);
    } else {
      creq.pairs.emplace_back(asm_.b, asm_.a);
    }
    if (creq.pairs.size() * 2 + 1 > asm_.reservoir.size()) {
      fail("connect");  // not enough absorbable fuel for this many links
      continue;
    }
    ConnectOptions copts;
    copts.node_budget = config.connect_budget;
    copts.pair_fraction = 1.0;
    ConnectResult cres;
    try {
      cres = connect_pairs(g, creq, copts);
    } catch (const std::exception&) {
      fail("connect");
      continue;
    }
    if (cres.status != ConnectResult::Status::connected) {
      fail("connect");
      continue;
    }

    std::vector<int> r_prime;
    for (const auto& p : cres.matching.paths)
      for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) r_prime.push_back(p.vertices[i]);
    std::sort(r_prime.begin(), r_prime.end());
    if (2 * r_prime.size() >= asm_.reservoir.size()) {
      fail("connect");
      continue;
    }

    // (iv) absorb the consumed reservoir vertices
    AbsorbResult ares;
    try {
      ares = absorb(g, asm_, r_prime);
    } catch (const std::exception&) {
      fail("absorb");
      continue;
    }
    if (!ares.path) {
      fail("absorb");
      continue;
    }

    // Stitch: P_A runs a..b, then link paths around back to a.
    std::vector<int> cycle = ares.path->vertices;
    if (cycle.front() != asm_.a) std::reverse(cycle.begin(), cycle.end());
    auto splice = [&](const LoosePath& link, int expect_head) {
      LoosePath l = link;
      if (l.head() != expect_head) l = l.reversed();
      cycle.insert(cycle.end(), l.vertices.begin() + 1, l.vertices.end());
    };
    for (std::size_t i = 0; i < cover.paths.size(); ++i) {
      splice(cres.matching.paths[i], cycle.back());
      const auto& pv = cover.paths[i].vertices;
      std::vector<int> seg = pv;
      if (seg.front() != cycle.back())
        throw std::logic_error("pipeline stitch: cover path misaligned");
      cycle.insert(cycle.end(), seg.begin() + 1, seg.end());
    }
    // closing link back to a
    {
      LoosePath closing = cres.matching.paths.back();
      if (closing.head() != cycle.back()) closing = closing.reversed();
      if (closing.tail() != asm_.a) {
        fail("stitch");
        continue;
      }
      cycle.insert(cycle.end(), closing.vertices.begin() + 1, closing.vertices.end() - 1);
    }

    LooseCycle candidate{cycle};
    if (!validate_loose_cycle(g, candidate).ok || !candidate.is_hamilton(g)) {
      fail("validate");
      continue;
    }
    result.cycle = candidate;
    return result;
  }
  return result;
}

}  // namespace loosehc
