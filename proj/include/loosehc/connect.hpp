#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loosehc/hypergraph.hpp"
#include "loosehc/paths.hpp"

namespace loosehc {

/// l-graph whose every edge meets side A in exactly one vertex and side B
/// in l-1. Sides use their own index spaces: A = 0..a_count-1,
/// B = 0..b_count-1.
struct BipartiteHypergraph {
  struct BEdge {
    int a;
    std::vector<int> bs;  // ascending, size l-1
  };

  int ell = 2;
  int a_count = 0;
  int b_count = 0;
  std::vector<BEdge> edges;

  void add_edge(int a, std::vector<int> bs);
  void validate() const;
};

struct HaxellResult {
  enum class Status { pass, violation, unchecked } status;
  std::vector<int> a_witness;  // minimal in |A'|, then |B'|
  std::vector<int> b_witness;
  std::uint64_t nodes = 0;
};

/// Exhaustive check of the matching condition: for every A' and B' with
/// |B'| <= (2l-3)(|A'|-1) some edge meets A' and avoids B'. A violation
/// at A' is a hitting set for the B-sides of A'-incident edges no larger
/// than the bound; witnesses are found by branch and bound.
HaxellResult haxell_check(const BipartiteHypergraph& h, std::uint64_t budget = 50000000ULL);

struct MatchingResult {
  enum class Status { found, none, budget_exceeded } status;
  std::vector<int> edge_ids;  // one per A-vertex when found
  std::uint64_t nodes = 0;
};

/// Complete backtracking search for pairwise disjoint edges covering A.
/// `none` is a proof of non-existence; `budget_exceeded` is not.
MatchingResult find_saturating_matching(const BipartiteHypergraph& h,
                                        std::uint64_t budget = 50000000ULL);

// ---- pair connection -------------------------------------------------------

struct ConnectRequest {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> reservoir;  // W, disjoint from all pair vertices
  int max_len = 4;

  void validate(const Hypergraph3& g) const;
};

struct ConnectOptions {
  std::uint64_t node_budget = 100000;
  double pair_fraction = 0.125;  // |pairs| <= fraction * |W|
  bool structured = false;       // degree-style 2/3/2 path shape through W thirds
  int exhaustive_reservoir = 20;
  int exhaustive_pairs = 6;
};

struct ConnectionMatching {
  std::vector<LoosePath> paths;  // paths[i] joins pairs[i]
};

struct ConnectResult {
  enum class Status { connected, failed, disproved } status;
  ConnectionMatching matching;
  int witness_pair = -1;  // first pair unconnectable under the budget
  std::uint64_t nodes = 0;
};

/// Internally disjoint loose paths through the reservoir, one per pair,
/// each of length <= max_len. Pairs are processed most-constrained first
/// with backtracking across pairs; on small instances an exhaustive pass
/// can return `disproved` rather than `failed`.
ConnectResult connect_pairs(const Hypergraph3& g, const ConnectRequest& req,
                            const ConnectOptions& opts = {});

/// The auxiliary matching formulation: A-side = pair indices, B-side = the
/// reservoir; an edge {i} u Z exists iff some x_i y_i-path has internal
/// vertex set exactly Z (|Z| = 1 in codegree mode d=2, |Z| = 7 in degree
/// mode d=1).
BipartiteHypergraph build_aux_connection_hypergraph(const Hypergraph3& g,
                                                    const ConnectRequest& req, int d,
                                                    std::uint64_t budget = 20000000ULL);

/// Re-check a returned matching: endpoints, internal containment in W,
/// internal disjointness, validity, length cap.
bool validate_connection(const Hypergraph3& g, const ConnectRequest& req,
                         const ConnectionMatching& m);

}  // namespace loosehc
