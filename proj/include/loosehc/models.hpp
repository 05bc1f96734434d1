#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loosehc/hypergraph.hpp"
#include "loosehc/rng.hpp"

namespace loosehc {

struct ModelParams {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Binomial random 3-graph: each of the C(n,3) triples, enumerated in
/// lexicographic order, is an edge independently with probability p.
/// Identical params give identical edge sets.
Hypergraph3 sample_h3np(const ModelParams& params);

/// The dense extremal pattern: a set A of ceil(n/4)-1 vertices and every
/// triple meeting A. Its minimum codegree is |A|, vertices outside A have
/// degree C(n-1,2) - C(n-1-|A|,2), and it has no loose Hamilton cycle
/// (a loose Hamilton cycle has n/2 edges but A can cover at most 2|A|).
struct ExtremalInstance {
  Hypergraph3 graph;
  std::vector<int> blocker;  // the set A
};

ExtremalInstance extremal_codegree(int n);
ExtremalInstance extremal_degree(int n);
int extremal_blocker_size(int n);

// ---- adversary ----------------------------------------------------------

enum class AdversaryKind { random_thinning, extremal_pattern, custom_mask };

struct AdversaryStrategy {
  AdversaryKind kind = AdversaryKind::random_thinning;
  int d = 2;
  double target_fraction = 0.0;  // floor = target_fraction * p * C(n-d, 3-d)
  double removal_rate = 0.5;     // random_thinning only
  std::vector<Edge> keep_mask;   // custom_mask only

  void validate() const;
};

struct PruneResult {
  std::optional<Hypergraph3> graph;  // empty iff infeasible
  bool feasible = false;
  long long floor_value = 0;
  long long achieved_min_degree = -1;
};

/// Spanning subgraph of h per the strategy. For random thinning, edges are
/// removed independently and then greedily restored until every d-set meets
/// the floor; if even restoring everything cannot, the result is flagged
/// infeasible rather than silently violating the floor.
PruneResult adversary_prune(const Hypergraph3& h, const AdversaryStrategy& strategy,
                            double p, std::uint64_t seed);

// ---- concentration checkers ----------------------------------------------

enum class LemmaId { varying_size_sets, one_edge, two_edge, general_edge, upper_uniform };

std::string lemma_name(LemmaId id);

/// Set-size policy for a checker run. The asymptotic regime thresholds
/// (eps^-3 log n / (np) and friends) often exceed n itself at desk scale;
/// in that case a default run records regime_skipped instead of reporting
/// a vacuous pass. Explicit windows let experiments test the bound itself
/// at sizes where it is meaningful.
struct SizePolicy {
  bool asymptotic_default = true;
  int min_size = 0;
  int max_size = 0;

  static SizePolicy asymptotic() { return {}; }
  static SizePolicy explicit_range(int lo, int hi) { return {false, lo, hi}; }
};

struct ConcentrationParams {
  LemmaId lemma = LemmaId::general_edge;
  double epsilon = 0.1;
  double p = 0.0;       // the density H was sampled at
  int trials = 100;
  std::uint64_t seed = 0;
  int sub_regime = 2;   // for the one_edge / two_edge lemmas: 1 or 2
  SizePolicy sizes;
  // pair-family window for the two_edge lemma (0 = derive from `sizes`)
  long long pair_min = 0;
  long long pair_max = 0;
  // varying_size_sets knobs
  double gamma = 0.5;
  double big_c = 2.0;
  double lambda = 0.1;
};

struct TrialRecord {
  int trial = 0;
  std::vector<long long> sizes;
  long long observed = 0;
  double bound = 0.0;
  bool violated = false;
  // the sampled sets, kept only for violated trials
  std::vector<std::vector<int>> witness_sets;
};

struct ConcentrationReport {
  LemmaId lemma = LemmaId::general_edge;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;  // per-trial RNG = CounterRng(seed, stream).derive(trial)
  double epsilon = 0.0;
  int trials_requested = 0;
  int trials_run = 0;
  int violations = 0;
  bool regime_skipped = false;
  std::string skip_reason;
  std::string size_policy;
  std::vector<TrialRecord> details;

  double violation_fraction() const {
    return trials_run == 0 ? 0.0 : static_cast<double>(violations) / trials_run;
  }
  std::string to_json() const;
  std::string to_csv() const;  // rows: lemma_id,trial,sizes...,observed,bound,violated
};

ConcentrationReport check_concentration(const Hypergraph3& h, const ConcentrationParams& params);

ConcentrationReport check_upper_uniform(const Hypergraph3& h, double eta, double b, double p,
                                        int trials, std::uint64_t seed);

}  // namespace loosehc
