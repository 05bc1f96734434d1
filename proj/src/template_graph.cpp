#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "loosehc/absorb.hpp"
#include "loosehc/matching.hpp"

namespace loosehc {

namespace {

void finish(TemplateGraph& t) {
  std::set<std::pair<int, int>> dedup;
  for (auto& [a, b] : t.edges) {
    if (a > b) std::swap(a, b);
    dedup.insert({a, b});
  }
  t.edges.assign(dedup.begin(), dedup.end());
  std::vector<int> deg(static_cast<std::size_t>(t.order), 0);
  for (auto [a, b] : t.edges) {
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(b)];
  }
  t.max_degree = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

TemplateGraph complete_template(int m) {
  TemplateGraph t;
  t.mode = TemplateMode::exact_small;
  t.order = 2 * m;
  for (int a = 0; a < t.order; ++a)
    for (int b = a + 1; b < t.order; ++b) t.edges.emplace_back(a, b);
  for (int i = 0; i < m; ++i) t.z.push_back(i);
  finish(t);
  return t;
}

TemplateGraph cycle_template(int m, bool squared) {
  TemplateGraph t;
  t.mode = squared ? TemplateMode::square_ring : TemplateMode::ring;
  t.order = m + 1;
  for (int i = 0; i < t.order; ++i) {
    t.edges.emplace_back(i, (i + 1) % t.order);
    if (squared && t.order > 4) t.edges.emplace_back(i, (i + 2) % t.order);
  }
  for (int i = 0; i < m; ++i) t.z.push_back(i);  // vertex m is the spare
  finish(t);
  return t;
}

TemplateGraph edge_template() {
  TemplateGraph t;
  t.mode = TemplateMode::edge_pair;
  t.order = 2;
  t.edges.emplace_back(0, 1);
  t.z = {0, 1};
  finish(t);
  return t;
}

/// Randomized bounded-degree scaffold: a bipartite graph between X (3s
/// vertices) and Y u Z (2s each) built from D random X-saturating
/// matchings, plus the square of a cycle on Z. Z trimmed to exactly m.
TemplateGraph random_template(int m, const TemplateOptions& opts) {
  int s = (m + 1) / 2;
  int nx = 3 * s, ny = 2 * s, nz_full = 2 * s;
  TemplateGraph t;
  t.mode = TemplateMode::random_bounded_degree;
  t.order = nx + ny + nz_full;
  // ids: X = [0, nx), Y = [nx, nx+ny), Z = [nx+ny, ...), trimmed from the top
  int z_begin = nx + ny;
  int nz = m;
  t.order = nx + ny + nz;

  CounterRng rng(opts.seed, 0x54504c54);  // "TPLT"
  std::vector<int> other;
  for (int i = 0; i < ny + nz; ++i) other.push_back(nx + i);
  for (int round = 0; round < opts.random_degree; ++round) {
    std::vector<int> shuffled = other;
    rng.shuffle(shuffled);
    for (int xi = 0; xi < nx; ++xi)
      t.edges.emplace_back(xi, shuffled[static_cast<std::size_t>(xi)]);
  }
  for (int i = 0; i < nz; ++i) {
    t.edges.emplace_back(z_begin + i, z_begin + (i + 1) % nz);
    if (nz > 4) t.edges.emplace_back(z_begin + i, z_begin + (i + 2) % nz);
  }
  for (int i = 0; i < nz; ++i) t.z.push_back(z_begin + i);
  finish(t);
  return t;
}

}  // namespace

TemplateGraph build_template(int m, TemplateMode mode, const TemplateOptions& opts) {
  if (m < 2) throw std::invalid_argument("build_template: m >= 2");
  switch (mode) {
    case TemplateMode::exact_small:
      if (m > 12) throw std::invalid_argument("exact_small: m <= 12");
      return complete_template(m);
    case TemplateMode::edge_pair:
      if (m != 2) throw std::invalid_argument("edge_pair: m == 2");
      return edge_template();
    case TemplateMode::ring:
      if (m % 2 != 0) throw std::invalid_argument("ring: m must be even");
      return cycle_template(m, false);
    case TemplateMode::square_ring:
      return cycle_template(m, true);
    case TemplateMode::random_bounded_degree: {
      TemplateOptions o = opts;
      for (int attempt = 0; attempt < std::max(1, opts.retries); ++attempt) {
        o.seed = CounterRng::mix(opts.seed + static_cast<std::uint64_t>(attempt));
        TemplateGraph t = random_template(m, o);
        auto report = verify_template(t, /*exhaustive=*/false, opts.sample_trials,
                                      CounterRng::mix(o.seed));
        if (report.ok) return t;
      }
      throw std::runtime_error("random template failed verification; raise D or retries");
    }
    case TemplateMode::auto_pick: {
      std::vector<TemplateMode> ladder;
      if (m == 2) ladder.push_back(TemplateMode::edge_pair);
      if (m % 2 == 0) ladder.push_back(TemplateMode::ring);
      ladder.push_back(TemplateMode::square_ring);
      if (m <= 12) ladder.push_back(TemplateMode::exact_small);
      ladder.push_back(TemplateMode::random_bounded_degree);
      for (TemplateMode candidate : ladder) {
        TemplateGraph t;
        try {
          t = build_template(m, candidate, opts);
        } catch (const std::exception&) {
          continue;
        }
        if (candidate == TemplateMode::random_bounded_degree) return t;  // already gated
        TemplateReport report;
        try {
          report = verify_template(t, /*exhaustive=*/true);
        } catch (const std::invalid_argument&) {
          report = verify_template(t, /*exhaustive=*/false, opts.sample_trials,
                                   CounterRng::mix(opts.seed));
        }
        if (report.ok) return t;
      }
      throw std::runtime_error("no template mode verified for this m");
    }
  }
  throw std::invalid_argument("unknown template mode");
}

TemplateReport verify_template(const TemplateGraph& t, bool exhaustive, int trials,
                               std::uint64_t seed) {
  const int m = static_cast<int>(t.z.size());
  TemplateReport rep;
  rep.exhaustive = exhaustive;

  auto admissible_size = [&](int j) {
    return 2 * j < m && (t.order - j) % 2 == 0;
  };
  auto test = [&](const std::vector<int>& z_prime) {
    bool pm = has_perfect_matching(t.order, t.edges, z_prime);
    ++rep.checked;
    if (!pm) {
      ++rep.failures;
      rep.failing_sets.push_back(z_prime);
    }
  };

  if (exhaustive) {
    double total = 0;
    for (int j = 0; 2 * j < m; ++j) {
      double c = 1;
      for (int i = 0; i < j; ++i) c = c * (m - i) / (i + 1);
      total += c;
    }
    if (total > 1e6)
      throw std::invalid_argument("verify_template: exhaustive enumeration too large");
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int start) {
      int j = static_cast<int>(subset.size());
      if (admissible_size(j)) {
        std::vector<int> zp;
        for (int i : subset) zp.push_back(t.z[static_cast<std::size_t>(i)]);
        test(zp);
      } else {
        ++rep.skipped_parity;
      }
      if (2 * (j + 1) >= m) return;
      for (int i = start; i < m; ++i) {
        subset.push_back(i);
        rec(i + 1);
        subset.pop_back();
      }
    };
    rec(0);
  } else {
    std::vector<int> sizes;
    for (int j = 0; 2 * j < m; ++j)
      if (admissible_size(j)) sizes.push_back(j);
    if (sizes.empty()) {
      rep.ok = true;
      return rep;
    }
    CounterRng rng(seed, 0x56455254);  // "VERT"
    for (int trial = 0; trial < trials; ++trial) {
      int j = sizes[static_cast<std::size_t>(rng.index(static_cast<int>(sizes.size())))];
      auto idx = rng.sample_indices(m, j);
      std::vector<int> zp;
      for (int i : idx) zp.push_back(t.z[static_cast<std::size_t>(i)]);
      test(zp);
    }
  }
  rep.ok = rep.failures == 0;
  return rep;
}

}  // namespace loosehc
