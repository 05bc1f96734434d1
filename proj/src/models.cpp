#include "loosehc/models.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace loosehc {

void ModelParams::validate() const {
  if (n < 3) throw std::invalid_argument("ModelParams: need n >= 3");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ModelParams: need 0 <= p <= 1");
}

Hypergraph3 sample_h3np(const ModelParams& params) {
  params.validate();
  CounterRng rng(params.seed, /*stream=*/0x48334e50);  // "H3NP"
  std::vector<Edge> es;
  for (int a = 0; a < params.n; ++a)
    for (int b = a + 1; b < params.n; ++b)
      for (int c = b + 1; c < params.n; ++c)
        if (rng.bernoulli(params.p)) es.push_back({a, b, c});
  return Hypergraph3(params.n, std::move(es));
}

int extremal_blocker_size(int n) { return (n + 3) / 4 - 1; }

namespace {

ExtremalInstance build_extremal(int n) {
  if (n < 8 || n % 2 != 0)
    throw std::invalid_argument("extremal construction: need even n >= 8");
  int a = extremal_blocker_size(n);
  std::vector<int> blocker(static_cast<std::size_t>(a));
  for (int i = 0; i < a; ++i) blocker[static_cast<std::size_t>(i)] = i;
  std::vector<Edge> es;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (x < a || y < a || z < a) es.push_back({x, y, z});
  return {Hypergraph3(n, std::move(es)), std::move(blocker)};
}

}  // namespace

ExtremalInstance extremal_codegree(int n) { return build_extremal(n); }
ExtremalInstance extremal_degree(int n) { return build_extremal(n); }

// ---- adversary ----------------------------------------------------------

void AdversaryStrategy::validate() const {
  if (d != 1 && d != 2) throw std::invalid_argument("AdversaryStrategy: d must be 1 or 2");
  if (kind == AdversaryKind::random_thinning) {
    if (!(target_fraction > 0.0 && target_fraction <= 1.0))
      throw std::invalid_argument("AdversaryStrategy: target_fraction in (0,1]");
    if (!(removal_rate >= 0.0 && removal_rate <= 1.0))
      throw std::invalid_argument("AdversaryStrategy: removal_rate in [0,1]");
  }
}

namespace {

long long binom2(long long k) { return k < 2 ? 0 : k * (k - 1) / 2; }

long long degree_floor(int n, int d, double fraction, double p) {
  double slots = d == 1 ? static_cast<double>(binom2(n - 1)) : static_cast<double>(n - 2);
  return static_cast<long long>(std::ceil(fraction * p * slots));
}

/// d-sets of `g` with degree below `floor` (as flat vertex lists).
std::vector<std::vector<int>> deficient_sets(const Hypergraph3& g, int d, long long floor_value) {
  std::vector<std::vector<int>> out;
  int n = g.vertex_count();
  if (d == 1) {
    for (int v = 0; v < n; ++v)
      if (g.degree(v) < floor_value) out.push_back({v});
  } else {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.codegree(u, v) < floor_value) out.push_back({u, v});
  }
  return out;
}

}  // namespace

PruneResult adversary_prune(const Hypergraph3& h, const AdversaryStrategy& strategy,
                            double p, std::uint64_t seed) {
  strategy.validate();
  int n = h.vertex_count();

  if (strategy.kind == AdversaryKind::extremal_pattern) {
    int a = extremal_blocker_size(n);
    std::vector<Edge> kept;
    for (const Edge& e : h.edges())
      if (e[0] < a || e[1] < a || e[2] < a) kept.push_back(e);
    Hypergraph3 g(n, std::move(kept));
    PruneResult res;
    res.achieved_min_degree = n >= 3 ? min_d_degree(g, strategy.d) : 0;
    res.feasible = true;
    res.graph = std::move(g);
    return res;
  }

  if (strategy.kind == AdversaryKind::custom_mask) {
    std::set<Edge> mask(strategy.keep_mask.begin(), strategy.keep_mask.end());
    std::vector<Edge> kept;
    for (const Edge& e : h.edges())
      if (mask.count(e)) kept.push_back(e);
    Hypergraph3 g(n, std::move(kept));
    PruneResult res;
    res.achieved_min_degree = min_d_degree(g, strategy.d);
    res.feasible = true;
    res.graph = std::move(g);
    return res;
  }

  // random_thinning
  long long floor_value = degree_floor(n, strategy.d, strategy.target_fraction, p);
  PruneResult res;
  res.floor_value = floor_value;

  CounterRng rng(seed, /*stream=*/0x5052554e);  // "PRUN"
  std::vector<char> kept(h.edge_count(), 1);
  std::vector<int> removed;
  for (int id = 0; id < static_cast<int>(h.edge_count()); ++id)
    if (rng.bernoulli(strategy.removal_rate)) {
      kept[static_cast<std::size_t>(id)] = 0;
      removed.push_back(id);
    }

  auto build = [&]() {
    std::vector<Edge> es;
    for (int id = 0; id < static_cast<int>(h.edge_count()); ++id)
      if (kept[static_cast<std::size_t>(id)]) es.push_back(h.edge(id));
    return Hypergraph3(n, std::move(es));
  };

  Hypergraph3 g = build();
  for (;;) {
    auto deficient = deficient_sets(g, strategy.d, floor_value);
    if (deficient.empty()) break;
    std::vector<char> needs(static_cast<std::size_t>(n), 0);
    for (const auto& s : deficient)
      for (int v : s) needs[static_cast<std::size_t>(v)] = 1;
    bool progress = false;
    std::vector<int> still_removed;
    for (int id : removed) {
      const Edge& e = h.edge(id);
      bool touches = false;
      if (strategy.d == 1) {
        touches = needs[e[0]] || needs[e[1]] || needs[e[2]];
      } else {
        for (const auto& s : deficient) {
          bool a_in = s[0] == e[0] || s[0] == e[1] || s[0] == e[2];
          bool b_in = s[1] == e[0] || s[1] == e[1] || s[1] == e[2];
          if (a_in && b_in) {
            touches = true;
            break;
          }
        }
      }
      if (touches) {
        kept[static_cast<std::size_t>(id)] = 1;
        progress = true;
      } else {
        still_removed.push_back(id);
      }
    }
    removed = std::move(still_removed);
    if (!progress) break;  // nothing restorable helps: the host is short
    g = build();
  }

  res.achieved_min_degree = min_d_degree(g, strategy.d);
  res.feasible = res.achieved_min_degree >= floor_value;
  if (res.feasible) res.graph = std::move(g);
  return res;
}

// ---- concentration checkers ----------------------------------------------

std::string lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::varying_size_sets: return "varying_size_sets";
    case LemmaId::one_edge: return "one_edge";
    case LemmaId::two_edge: return "two_edge";
    case LemmaId::general_edge: return "general_edge";
    case LemmaId::upper_uniform: return "upper_uniform";
  }
  return "unknown";
}

namespace {

std::vector<int> all_vertices(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

/// Random size inside [lo, hi].
int pick_size(CounterRng& rng, int lo, int hi) {
  return lo + rng.index(hi - lo + 1);
}

/// k-subset of [0,n) avoiding `taken` (taken may be empty).
std::vector<int> sample_avoiding(CounterRng& rng, int n, int k, const std::vector<char>& taken) {
  std::vector<int> pool;
  for (int v = 0; v < n; ++v)
    if (taken.empty() || !taken[static_cast<std::size_t>(v)]) pool.push_back(v);
  if (static_cast<int>(pool.size()) < k)
    throw std::invalid_argument("sample_avoiding: not enough free vertices");
  rng.shuffle(pool);
  pool.resize(static_cast<std::size_t>(k));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

ConcentrationReport check_concentration(const Hypergraph3& h, const ConcentrationParams& params) {
  if (params.epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
  if (params.lemma == LemmaId::upper_uniform)
    throw std::invalid_argument("use check_upper_uniform for the upper_uniform lemma");

  const int n = h.vertex_count();
  const double eps = params.epsilon;
  const double p = params.p;
  const double logn = std::log(static_cast<double>(std::max(n, 2)));

  ConcentrationReport rep;
  rep.lemma = params.lemma;
  rep.seed = params.seed;
  rep.stream = 0x434f4e43;
  rep.epsilon = eps;
  rep.trials_requested = params.trials;
  rep.size_policy = params.sizes.asymptotic_default
                        ? "asymptotic_default"
                        : "explicit[" + std::to_string(params.sizes.min_size) + "," +
                              std::to_string(params.sizes.max_size) + "]";

  // Work out the sampling window for the chosen regime.
  int lo = 1, hi = n;
  bool skipped = false;
  std::string reason;
  const double t1 = p > 0 ? std::pow(eps, -3.0) * logn / (n * p) : 1e30;  // one_edge cut
  const double t2 = p > 0 ? std::pow(eps, -3.0) * logn / p : 1e30;        // two_edge cut
  if (params.sizes.asymptotic_default) {
    switch (params.lemma) {
      case LemmaId::one_edge:
        if (params.sub_regime == 1) {
          hi = std::min(n, static_cast<int>(std::floor(t1)));
          if (hi < 1) { skipped = true; reason = "regime (i) window empty: eps^-3 log n/(np) < 1"; }
        } else {
          lo = static_cast<int>(std::ceil(t1));
          if (lo > n) { skipped = true; reason = "regime (ii) window empty: eps^-3 log n/(np) > n"; }
        }
        break;
      case LemmaId::two_edge:
        if (params.sub_regime == 1) {
          hi = std::min(n, static_cast<int>(std::floor(t2)));
          if (hi < 1) { skipped = true; reason = "regime (i) window empty"; }
        } else {
          lo = static_cast<int>(std::ceil(t2));
          // |P| can exceed n (pairs), but |W| cannot.
          if (lo > n) { skipped = true; reason = "regime (ii) needs |W| >= eps^-3 log n/p > n"; }
        }
        break;
      case LemmaId::general_edge: {
        // need xyzp >= 200 eps^-2 n for some xyz <= n^3
        double need = 200.0 * std::pow(eps, -2.0) * n;
        if (p <= 0 || static_cast<double>(n) * n * n * p < need) {
          skipped = true;
          reason = "no admissible sizes: n^3 p < 200 eps^-2 n";
        } else {
          lo = static_cast<int>(std::ceil(std::cbrt(need / p)));
          lo = std::max(lo, 1);
        }
        break;
      }
      case LemmaId::varying_size_sets: {
        hi = static_cast<int>(std::floor(params.lambda * n));
        if (hi < 1) { skipped = true; reason = "lambda n < 1"; }
        break;
      }
      default: break;
    }
  } else {
    lo = std::max(1, params.sizes.min_size);
    hi = std::min(n, params.sizes.max_size);
    if (lo > hi) { skipped = true; reason = "explicit window empty"; }
  }

  if (skipped) {
    rep.regime_skipped = true;
    rep.skip_reason = reason;
    return rep;
  }

  const auto everything = all_vertices(n);
  for (int trial = 0; trial < params.trials; ++trial) {
    CounterRng rng = CounterRng(params.seed, 0x434f4e43).derive(static_cast<std::uint64_t>(trial));
    TrialRecord rec;
    rec.trial = trial;
    std::vector<char> none;
    std::vector<std::vector<int>> sampled;
    switch (params.lemma) {
      case LemmaId::one_edge: {
        int x = pick_size(rng, lo, hi);
        int y = params.sub_regime == 1 ? pick_size(rng, std::min(lo, x), x)
                                       : pick_size(rng, lo, hi);
        auto xs = sample_avoiding(rng, n, x, none);
        auto ys = sample_avoiding(rng, n, y, none);
        rec.sizes = {x, y};
        rec.observed = e_triple(h, xs, ys, everything);
        rec.bound = params.sub_regime == 1 ? std::pow(eps, -4.0) * x * logn
                                           : (1.0 + eps) * x * y * n * p;
        sampled = {xs, ys};
        break;
      }
      case LemmaId::two_edge: {
        int w_size = std::min(pick_size(rng, lo, hi), n / 2);
        w_size = std::max(w_size, 1);
        auto ws = sample_avoiding(rng, n, w_size, none);
        std::vector<char> in_w(static_cast<std::size_t>(n), 0);
        for (int v : ws) in_w[static_cast<std::size_t>(v)] = 1;
        std::vector<std::pair<int, int>> rest_pairs;
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (!in_w[static_cast<std::size_t>(u)] && !in_w[static_cast<std::size_t>(v)])
              rest_pairs.emplace_back(u, v);
        long long want;
        if (params.pair_max > 0) {
          want = params.pair_min +
                 static_cast<long long>(rng.below(
                     static_cast<std::uint64_t>(params.pair_max - params.pair_min + 1)));
        } else {
          want = params.sizes.asymptotic_default ? std::max<long long>(w_size, lo)
                                            : pick_size(rng, lo, hi);
        }
        want = std::min<long long>(want, static_cast<long long>(rest_pairs.size()));
        rng.shuffle(rest_pairs);
        rest_pairs.resize(static_cast<std::size_t>(want));
        rec.sizes = {want, w_size};
        rec.observed = e_pairs(h, rest_pairs, ws);
        sampled.emplace_back();
        for (const auto& [pu, pv] : rest_pairs) {
          sampled.back().push_back(pu);
          sampled.back().push_back(pv);
        }
        sampled.push_back(ws);
        rec.bound = params.sub_regime == 1
                        ? std::pow(eps, -4.0) * static_cast<double>(want) * logn
                        : (1.0 + eps) * static_cast<double>(want) * w_size * p;
        break;
      }
      case LemmaId::general_edge: {
        int x = pick_size(rng, lo, hi);
        int y = pick_size(rng, lo, hi);
        int z = pick_size(rng, lo, hi);
        auto xs = sample_avoiding(rng, n, x, none);
        auto ys = sample_avoiding(rng, n, y, none);
        auto zs = sample_avoiding(rng, n, z, none);
        rec.sizes = {x, y, z};
        rec.observed = e_triple(h, xs, ys, zs);
        rec.bound = (1.0 + eps) * static_cast<double>(x) * y * z * p;
        sampled = {xs, ys, zs};
        break;
      }
      case LemmaId::varying_size_sets: {
        int a = pick_size(rng, 1, hi);
        int b = std::max(1, std::min(static_cast<int>(params.big_c * a), n - a));
        auto as = sample_avoiding(rng, n, a, none);
        std::vector<char> taken(static_cast<std::size_t>(n), 0);
        for (int v : as) taken[static_cast<std::size_t>(v)] = 1;
        auto bs = sample_avoiding(rng, n, b, taken);
        rec.sizes = {a, b};
        rec.observed = e_triple(h, as, bs, everything);
        rec.bound = params.gamma * a * p * static_cast<double>(binom2(n - 1));
        rec.violated = static_cast<double>(rec.observed) >= rec.bound;
        sampled = {as, bs};
        break;
      }
      default: break;
    }
    if (params.lemma != LemmaId::varying_size_sets)
      rec.violated = static_cast<double>(rec.observed) > rec.bound;
    if (rec.violated) rec.witness_sets = std::move(sampled);
    rep.violations += rec.violated ? 1 : 0;
    ++rep.trials_run;
    rep.details.push_back(std::move(rec));
  }
  return rep;
}

ConcentrationReport check_upper_uniform(const Hypergraph3& h, double eta, double b, double p,
                                        int trials, std::uint64_t seed) {
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("need 0 < eta < 1");
  if (!(b > 1.0)) throw std::invalid_argument("need b > 1");
  int n = h.vertex_count();
  int min_size = static_cast<int>(std::ceil(eta * n));
  if (min_size < 1) throw std::invalid_argument("eta n < 1");

  ConcentrationReport rep;
  rep.lemma = LemmaId::upper_uniform;
  rep.seed = seed;
  rep.stream = 0x55554e49;
  rep.epsilon = b;
  rep.trials_requested = trials;
  rep.size_policy = "eta=" + std::to_string(eta);
  if (3 * min_size > n) {
    rep.regime_skipped = true;
    rep.skip_reason = "cannot fit three disjoint sets of size eta n";
    return rep;
  }
  for (int trial = 0; trial < trials; ++trial) {
    CounterRng rng = CounterRng(seed, 0x55554e49).derive(static_cast<std::uint64_t>(trial));
    int max_size = n / 3;
    int s1 = pick_size(rng, min_size, max_size);
    int s2 = pick_size(rng, min_size, max_size);
    int s3 = pick_size(rng, min_size, max_size);
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    auto v1 = sample_avoiding(rng, n, s1, taken);
    for (int v : v1) taken[static_cast<std::size_t>(v)] = 1;
    auto v2 = sample_avoiding(rng, n, s2, taken);
    for (int v : v2) taken[static_cast<std::size_t>(v)] = 1;
    auto v3 = sample_avoiding(rng, n, s3, taken);
    TrialRecord rec;
    rec.trial = trial;
    rec.sizes = {s1, s2, s3};
    rec.observed = e_triple(h, v1, v2, v3);
    rec.bound = b * p * static_cast<double>(s1) * s2 * s3;  // density d <= bp
    rec.violated = static_cast<double>(rec.observed) > rec.bound;
    if (rec.violated) rec.witness_sets = {v1, v2, v3};
    rep.violations += rec.violated ? 1 : 0;
    ++rep.trials_run;
    rep.details.push_back(std::move(rec));
  }
  return rep;
}

// ---- report serialization -------------------------------------------------

std::string ConcentrationReport::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["lemma_id"] = lemma_name(lemma);
  j["seed"] = seed;
  j["stream"] = stream;
  j["epsilon"] = epsilon;
  j["trials_requested"] = trials_requested;
  j["trials_run"] = trials_run;
  j["violations"] = violations;
  j["violation_fraction"] = violation_fraction();
  j["regime_skipped"] = regime_skipped;
  if (regime_skipped) j["skip_reason"] = skip_reason;
  j["size_policy"] = size_policy;
  auto& det = j["details"] = nlohmann::json::array();
  for (const auto& r : details) {
    nlohmann::json rj;
    rj["trial"] = r.trial;
    rj["sizes"] = r.sizes;
    rj["observed"] = r.observed;
    rj["bound"] = r.bound;
    rj["violated"] = r.violated;
    if (!r.witness_sets.empty()) rj["witness_sets"] = r.witness_sets;
    det.push_back(std::move(rj));
  }
  return j.dump();
}

std::string ConcentrationReport::to_csv() const {
  std::ostringstream out;
  out << "lemma_id,trial,sizes,observed,bound,violated\n";
  for (const auto& r : details) {
    out << lemma_name(lemma) << "," << r.trial << ",";
    for (std::size_t i = 0; i < r.sizes.size(); ++i)
      out << (i ? ";" : "") << r.sizes[i];
    out << "," << r.observed << "," << r.bound << "," << (r.violated ? 1 : 0) << "\n";
  }
  return out.str();
}

}  // namespace loosehc
