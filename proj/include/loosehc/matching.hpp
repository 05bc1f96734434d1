#pragma once

#include <vector>

namespace loosehc {

/// Maximum matching in a general graph (Edmonds' blossom algorithm,
/// O(V^3)). Returns mate[v] = partner or -1. Vertices listed in `skip`
/// are excluded from the search entirely.
std::vector<int> maximum_matching(int n, const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<int>& skip = {});

/// True iff the graph minus `skip` has a perfect matching on the
/// remaining vertices.
bool has_perfect_matching(int n, const std::vector<std::pair<int, int>>& edges,
                          const std::vector<int>& skip = {});

}  // namespace loosehc
