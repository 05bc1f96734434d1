#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loosehc/hypergraph.hpp"
#include "loosehc/paths.hpp"

namespace loosehc {

/// Tripartite setting for the long-path procedure: |V1| = |V3| = t,
/// |V2| = 2t, parts disjoint. Only crossing edges (one vertex per part)
/// participate.
struct TripartiteInstance {
  std::vector<int> v1, v2, v3;
  int k = 1;

  int t() const { return static_cast<int>(v1.size()); }
  void validate(const Hypergraph3& g) const;
};

/// Stack procedure growing a loose path whose joints alternate between
/// V1 and V3 with interiors in V2. Runs to completion and returns the
/// longest path seen; under the supersaturation hypothesis for k the
/// result has length >= 2t - 4k.
LoosePath dfs_tripartite_path(const Hypergraph3& g, const TripartiteInstance& inst);

struct SupersaturationResult {
  enum class Status { holds, violated, unchecked } status;
  // Witness k-sets spanning no crossing edge (when violated).
  std::vector<int> x1, x2, x3;
  std::uint64_t combinations_checked = 0;
};

/// Exhaustive test that every triple of k-subsets (one per part) spans a
/// crossing edge. Refuses (status unchecked) once the combination count
/// passes `budget`.
SupersaturationResult check_supersaturation(const Hypergraph3& g, const TripartiteInstance& inst,
                                            std::uint64_t budget = 100000000ULL);

struct PathCover {
  std::vector<LoosePath> paths;
  std::vector<int> covered;      // sorted union of path vertices
  bool within_budget = false;    // |paths| <= rho * n
};

struct CoverOptions {
  int backtrack_depth = 3;
};

/// Double-ended greedy extension with bounded backtracking; leftovers
/// become length-zero paths. Covers exactly the active set (all vertices
/// when no active set is given).
PathCover greedy_path_cover(const Hypergraph3& g, double rho,
                            const std::vector<int>* active = nullptr,
                            const CoverOptions& opts = {});

}  // namespace loosehc
