#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace loosehc {

using Edge = std::array<int, 3>;  // stored ascending

/// Immutable 3-uniform hypergraph on vertices 0..n-1.
///
/// Edges live in three views built once at construction: a sorted triple
/// list (membership, iteration), per-vertex incidence lists, and a per-pair
/// index answering codegree queries in O(codegree). For n <= 64 a bitmask
/// per pair backs the brute-force oracles. All queries are read-only and
/// safe to use concurrently.
class Hypergraph3 {
 public:
  Hypergraph3(int n, std::vector<Edge> edges);

  static Hypergraph3 complete(int n);
  static Edge make_edge(int a, int b, int c);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

  bool has_edge(int a, int b, int c) const;
  bool has_edge(const Edge& e) const { return has_edge(e[0], e[1], e[2]); }

  /// Edge ids containing v.
  const std::vector<int>& incident(int v) const;
  /// Third vertices w with {a,b,w} an edge, ascending.
  const std::vector<int>& copair(int a, int b) const;
  /// Bitmask form of copair; only for n <= 64.
  std::uint64_t copair_mask(int a, int b) const;
  bool has_pair_masks() const { return !pair_masks_.empty(); }

  long long degree(int v) const { return static_cast<long long>(incident(v).size()); }
  long long codegree(int a, int b) const { return static_cast<long long>(copair(a, b).size()); }

  /// Same vertex set, only the edges inside `keep`.
  Hypergraph3 restriction(const std::vector<int>& keep) const;

  void check_vertex(int v) const;

  // File formats; both round-trip bit-exactly (edges lexicographic).
  std::string to_text() const;
  static Hypergraph3 from_text(const std::string& text);
  std::string to_json() const;
  static Hypergraph3 from_json(const std::string& text);
  void save(const std::string& path, const std::string& format = "text") const;
  static Hypergraph3 load(const std::string& path);

 private:
  int pair_key(int a, int b) const { return (a < b ? a : b) * n_ + (a < b ? b : a); }

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<int>> pair_third_;   // indexed by pair_key
  std::vector<std::uint64_t> pair_masks_;      // empty unless n <= 64
};

// ---- degree / edge-count operators ------------------------------------

/// Number of edges containing S (|S| in {1,2}); with W given, only edges
/// whose remaining vertices all lie in W. S and W must be disjoint.
long long deg_set(const Hypergraph3& g, const std::vector<int>& s,
                  const std::vector<int>* w = nullptr);

long long min_d_degree(const Hypergraph3& g, int d);

/// Ordered triples (x,y,z) in X x Y x Z with {x,y,z} an edge. Sets may
/// overlap; triples are of distinct vertices.
long long e_triple(const Hypergraph3& g, const std::vector<int>& xs,
                   const std::vector<int>& ys, const std::vector<int>& zs);

/// Pairs ({x,y}, z) with {x,y} in P, z in Z and {x,y,z} an edge.
long long e_pairs(const Hypergraph3& g, const std::vector<std::pair<int, int>>& pairs,
                  const std::vector<int>& zs);

std::vector<int> neighborhood(const Hypergraph3& g, int v, const std::vector<int>& w);
std::vector<int> neighborhood(const Hypergraph3& g, std::pair<int, int> uv,
                              const std::vector<int>& w);

}  // namespace loosehc
