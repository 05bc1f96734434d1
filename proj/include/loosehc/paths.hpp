#pragma once

#include <string>
#include <vector>

#include "loosehc/hypergraph.hpp"

namespace loosehc {

/// Loose path: v1,...,v_{2l+1} distinct, every window v_{2i-1}v_{2i}v_{2i+1}
/// an edge. A single vertex is a path of length zero.
struct LoosePath {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) / 2; }
  int head() const { return vertices.front(); }
  int tail() const { return vertices.back(); }
  LoosePath reversed() const {
    return LoosePath{std::vector<int>(vertices.rbegin(), vertices.rend())};
  }
};

/// Loose cycle: even vertex count, cyclic windows are edges. Every odd
/// position is a joint (in two cycle edges), every even position interior.
struct LooseCycle {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) / 2; }
  bool is_hamilton(const Hypergraph3& g) const {
    return static_cast<int>(vertices.size()) == g.vertex_count();
  }
};

enum class PathDefect {
  none,
  empty_sequence,
  even_vertex_count,   // paths need an odd count
  odd_vertex_count,    // cycles need an even count
  too_short,           // cycles need >= 6 vertices
  vertex_out_of_range,
  duplicate_vertex,
  missing_edge,
};

struct PathCheck {
  bool ok = false;
  PathDefect defect = PathDefect::none;
  int where = -1;  // window or vertex index for the defect

  explicit operator bool() const { return ok; }
};

std::string defect_name(PathDefect d);

PathCheck validate_loose_path(const Hypergraph3& g, const LoosePath& p);
PathCheck validate_loose_cycle(const Hypergraph3& g, const LooseCycle& c);

}  // namespace loosehc
