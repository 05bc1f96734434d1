#include "loosehc/matching.hpp"

#include <algorithm>
#include <queue>

namespace loosehc {

namespace {

struct Blossom {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> mate, parent, base;
  std::vector<char> used, blossom, alive;

  explicit Blossom(int n_) : n(n_), adj(static_cast<std::size_t>(n_)) {
    mate.assign(static_cast<std::size_t>(n), -1);
    alive.assign(static_cast<std::size_t>(n), 1);
  }

  int lca(int a, int b) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (;;) {
      a = base[static_cast<std::size_t>(a)];
      seen[static_cast<std::size_t>(a)] = 1;
      if (mate[static_cast<std::size_t>(a)] == -1) break;
      a = parent[static_cast<std::size_t>(mate[static_cast<std::size_t>(a)])];
    }
    for (;;) {
      b = base[static_cast<std::size_t>(b)];
      if (seen[static_cast<std::size_t>(b)]) return b;
      b = parent[static_cast<std::size_t>(mate[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[static_cast<std::size_t>(v)] != b) {
      int mv = mate[static_cast<std::size_t>(v)];
      blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = 1;
      blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(mv)])] = 1;
      parent[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent[static_cast<std::size_t>(mv)];
    }
  }

  int find_path(int root) {
    parent.assign(static_cast<std::size_t>(n), -1);
    base.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i;
    used.assign(static_cast<std::size_t>(n), 0);
    used[static_cast<std::size_t>(root)] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj[static_cast<std::size_t>(v)]) {
        if (!alive[static_cast<std::size_t>(to)]) continue;
        if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)] ||
            mate[static_cast<std::size_t>(v)] == to)
          continue;
        if (to == root ||
            (mate[static_cast<std::size_t>(to)] != -1 &&
             parent[static_cast<std::size_t>(mate[static_cast<std::size_t>(to)])] != -1)) {
          // Odd cycle: contract the blossom at the lca.
          int cur = lca(v, to);
          blossom.assign(static_cast<std::size_t>(n), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i)
            if (blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
              base[static_cast<std::size_t>(i)] = cur;
              if (!used[static_cast<std::size_t>(i)]) {
                used[static_cast<std::size_t>(i)] = 1;
                q.push(i);
              }
            }
        } else if (parent[static_cast<std::size_t>(to)] == -1) {
          parent[static_cast<std::size_t>(to)] = v;
          if (mate[static_cast<std::size_t>(to)] == -1) return to;
          used[static_cast<std::size_t>(mate[static_cast<std::size_t>(to)])] = 1;
          q.push(mate[static_cast<std::size_t>(to)]);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      int pv = parent[static_cast<std::size_t>(v)];
      int ppv = mate[static_cast<std::size_t>(pv)];
      mate[static_cast<std::size_t>(v)] = pv;
      mate[static_cast<std::size_t>(pv)] = v;
      v = ppv;
    }
  }

  void solve() {
    for (int v = 0; v < n; ++v)
      if (alive[static_cast<std::size_t>(v)] && mate[static_cast<std::size_t>(v)] == -1) {
        int leaf = find_path(v);
        if (leaf != -1) augment(leaf);
      }
  }
};

}  // namespace

std::vector<int> maximum_matching(int n, const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<int>& skip) {
  Blossom bl(n);
  for (int v : skip) bl.alive[static_cast<std::size_t>(v)] = 0;
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    if (!bl.alive[static_cast<std::size_t>(a)] || !bl.alive[static_cast<std::size_t>(b)]) continue;
    bl.adj[static_cast<std::size_t>(a)].push_back(b);
    bl.adj[static_cast<std::size_t>(b)].push_back(a);
  }
  bl.solve();
  return bl.mate;
}

bool has_perfect_matching(int n, const std::vector<std::pair<int, int>>& edges,
                          const std::vector<int>& skip) {
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  for (int v : skip) alive[static_cast<std::size_t>(v)] = 0;
  auto mate = maximum_matching(n, edges, skip);
  for (int v = 0; v < n; ++v)
    if (alive[static_cast<std::size_t>(v)] && mate[static_cast<std::size_t>(v)] == -1)
      return false;
  return true;
}

}  // namespace loosehc
