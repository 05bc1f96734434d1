#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loosehc/absorb.hpp"
#include "loosehc/hypergraph.hpp"
#include "loosehc/paths.hpp"

namespace loosehc {

struct OracleResult {
  bool yes = false;
  std::optional<LooseCycle> witness;
  std::uint64_t nodes_explored = 0;
  bool exhaustive = false;
  std::string reason;
};

/// Complete backtracking decision for a loose Hamilton cycle. Symmetry is
/// broken by rooting the cycle at its minimum joint vertex (smaller
/// vertices forced interior) with the smaller neighbor joint second.
/// Guaranteed-exhaustive mode requires n <= 16; odd n is an immediate no.
OracleResult has_loose_hc(const Hypergraph3& g);

/// Number of distinct loose Hamilton cycles up to rotation and reflection
/// (interior vertices sit in unique positions, so no further quotient).
/// Requires n <= 12.
long long count_loose_hc(const Hypergraph3& g);

struct PathEnumeration {
  std::vector<LoosePath> paths;  // ordered by length, then sequence
  bool truncated = false;
};

/// All loose xy-paths of length <= max_len.
PathEnumeration enumerate_loose_paths(const Hypergraph3& g, int x, int y, int max_len,
                                      std::uint64_t budget = 5000000ULL);

// ---- end-to-end finder ------------------------------------------------------

struct PipelineConfig {
  double alpha = 0.1;  // reservoir fraction |R| = round(alpha n)
  double rho = 0.3;    // path-cover budget fraction
  std::uint64_t seed = 0;
  int retries = 8;
  AssembleParams assemble;
  std::uint64_t connect_budget = 500000;
};

struct PipelineResult {
  std::optional<LooseCycle> cycle;
  int attempts = 0;
  std::map<std::string, int> stage_failures;

  std::string failure_summary() const;
};

/// Absorber pipeline: draw R and build an (a,b,R)-absorber, cover the rest
/// with disjoint loose paths, patch paths and absorber endpoints together
/// through R, then absorb the consumed reservoir vertices. Every returned
/// cycle is validated before being reported.
PipelineResult find_loose_hc_pipeline(const Hypergraph3& g, const PipelineConfig& config);

/// Smallest even host on which the pipeline geometry can close for a given
/// reservoir size (template order + gadget interiors + connector seats).
long long pipeline_min_host(int m, int d_mode = 2);

}  // namespace loosehc
