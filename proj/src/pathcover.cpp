#include "loosehc/pathcover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace loosehc {

void TripartiteInstance::validate(const Hypergraph3& g) const {
  if (k < 1) throw std::invalid_argument("TripartiteInstance: k >= 1");
  int t_ = t();
  if (t_ < 1 || static_cast<int>(v3.size()) != t_ || static_cast<int>(v2.size()) != 2 * t_)
    throw std::invalid_argument("TripartiteInstance: need |V1| = |V3| = t >= 1, |V2| = 2t");
  if (k > t_) throw std::invalid_argument("TripartiteInstance: k <= t");
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto* part : {&v1, &v2, &v3})
    for (int v : *part) {
      g.check_vertex(v);
      if (seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("TripartiteInstance: parts must be disjoint");
      seen[static_cast<std::size_t>(v)] = 1;
    }
}

namespace {

// part id per vertex: 1/2/3, 0 = outside the instance
std::vector<int> part_map(const Hypergraph3& g, const TripartiteInstance& inst) {
  std::vector<int> part(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : inst.v1) part[static_cast<std::size_t>(v)] = 1;
  for (int v : inst.v2) part[static_cast<std::size_t>(v)] = 2;
  for (int v : inst.v3) part[static_cast<std::size_t>(v)] = 3;
  return part;
}

}  // namespace

LoosePath dfs_tripartite_path(const Hypergraph3& g, const TripartiteInstance& inst) {
  inst.validate(g);
  auto part = part_map(g, inst);
  const int n = g.vertex_count();

  enum Where : char { unexplored, in_stack, discarded };
  std::vector<Where> where(static_cast<std::size_t>(n), unexplored);
  for (int v = 0; v < n; ++v)
    if (part[static_cast<std::size_t>(v)] == 0) where[static_cast<std::size_t>(v)] = discarded;

  std::vector<int> stack;
  std::vector<int> best;
  int unexplored_joints = 2 * inst.t();
  int stack_v1 = 0, stack_v3 = 0;

  // Ascending list of joint vertices, for the "stack empty" rule.
  std::vector<int> joints = inst.v1;
  joints.insert(joints.end(), inst.v3.begin(), inst.v3.end());
  std::sort(joints.begin(), joints.end());

  auto snapshot = [&]() {
    if (stack.size() > best.size()) best = stack;
  };
  auto push = [&](int v) {
    stack.push_back(v);
    where[static_cast<std::size_t>(v)] = in_stack;
    int pv = part[static_cast<std::size_t>(v)];
    if (pv != 2) --unexplored_joints;
    if (pv == 1) ++stack_v1;
    if (pv == 3) ++stack_v3;
  };
  auto drop = [&]() {
    int v = stack.back();
    stack.pop_back();
    where[static_cast<std::size_t>(v)] = discarded;
    if (part[static_cast<std::size_t>(v)] == 1) --stack_v1;
    if (part[static_cast<std::size_t>(v)] == 3) --stack_v3;
  };

  while (unexplored_joints > 0 || !stack.empty()) {
    if (stack.empty()) {
      if (unexplored_joints == 0) break;
      for (int v : joints)
        if (where[static_cast<std::size_t>(v)] == unexplored) {
          push(v);
          break;
        }
      snapshot();
      continue;
    }
    int u = stack.back();
    int i = part[static_cast<std::size_t>(u)];
    int opposite = 4 - i;
    // Smallest (interior, joint) extension among unexplored vertices.
    int best_v = -1, best_w = -1;
    for (int id : g.incident(u)) {
      const Edge& e = g.edge(id);
      int o1 = -1, o2 = -1;
      for (int x : e)
        if (x != u) (o1 < 0 ? o1 : o2) = x;
      for (auto [a, b] : {std::pair{o1, o2}, std::pair{o2, o1}}) {
        if (part[static_cast<std::size_t>(a)] == 2 &&
            where[static_cast<std::size_t>(a)] == unexplored &&
            part[static_cast<std::size_t>(b)] == opposite &&
            where[static_cast<std::size_t>(b)] == unexplored) {
          if (best_v < 0 || a < best_v || (a == best_v && b < best_w)) {
            best_v = a;
            best_w = b;
          }
        }
      }
    }
    if (best_v >= 0) {
      push(best_v);
      push(best_w);
      snapshot();
    } else if (stack.size() >= 3) {
      drop();
      drop();
    } else {
      drop();
    }
    if (std::abs(stack_v1 - stack_v3) > 1)
      throw std::logic_error("dfs_tripartite_path: joint balance broken");
  }

  if (best.empty() && !joints.empty()) best = {joints.front()};
  return LoosePath{std::move(best)};
}

SupersaturationResult check_supersaturation(const Hypergraph3& g, const TripartiteInstance& inst,
                                            std::uint64_t budget) {
  inst.validate(g);
  const int t = inst.t(), k = inst.k;

  auto binom = [](int n_, int k_) {
    double r = 1.0;
    for (int i = 0; i < k_; ++i) r = r * (n_ - i) / (i + 1);
    return r;
  };
  double total = binom(t, k) * binom(t, k) * binom(2 * t, k);
  if (total > static_cast<double>(budget))
    return {SupersaturationResult::Status::unchecked, {}, {}, {}, 0};

  std::vector<char> in_v2(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : inst.v2) in_v2[static_cast<std::size_t>(v)] = 1;

  std::vector<int> comb1(static_cast<std::size_t>(k)), comb3(static_cast<std::size_t>(k));
  std::uint64_t checked = 0;

  auto next_comb = [](std::vector<int>& c, int n_) {
    int k_ = static_cast<int>(c.size());
    int i = k_ - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n_ - k_ + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k_; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return true;
  };
  auto reset_comb = [](std::vector<int>& c) {
    for (int i = 0; i < static_cast<int>(c.size()); ++i) c[static_cast<std::size_t>(i)] = i;
  };

  std::vector<char> good(static_cast<std::size_t>(g.vertex_count()), 0);
  reset_comb(comb1);
  do {
    reset_comb(comb3);
    do {
      ++checked;
      std::fill(good.begin(), good.end(), 0);
      for (int i1 : comb1)
        for (int i3 : comb3) {
          int a = inst.v1[static_cast<std::size_t>(i1)];
          int b = inst.v3[static_cast<std::size_t>(i3)];
          for (int z : g.copair(a, b))
            if (in_v2[static_cast<std::size_t>(z)]) good[static_cast<std::size_t>(z)] = 1;
        }
      std::vector<int> bad;
      for (int v : inst.v2)
        if (!good[static_cast<std::size_t>(v)]) {
          bad.push_back(v);
          if (static_cast<int>(bad.size()) == k) break;
        }
      if (static_cast<int>(bad.size()) == k) {
        SupersaturationResult res;
        res.status = SupersaturationResult::Status::violated;
        for (int i : comb1) res.x1.push_back(inst.v1[static_cast<std::size_t>(i)]);
        for (int i : comb3) res.x3.push_back(inst.v3[static_cast<std::size_t>(i)]);
        res.x2 = std::move(bad);
        res.combinations_checked = checked;
        return res;
      }
    } while (next_comb(comb3, t));
  } while (next_comb(comb1, t));

  return {SupersaturationResult::Status::holds, {}, {}, {}, checked};
}

// ---- greedy cover ---------------------------------------------------------

namespace {

struct Extension {
  int interior;
  int endpoint;
  bool at_tail;
};

std::vector<Extension> extensions(const Hypergraph3& g, const std::vector<int>& path,
                                  const std::vector<char>& covered,
                                  const std::vector<char>& active, bool at_tail) {
  int x = at_tail ? path.back() : path.front();
  std::vector<Extension> out;
  for (int id : g.incident(x)) {
    const Edge& e = g.edge(id);
    int o1 = -1, o2 = -1;
    for (int v : e)
      if (v != x) (o1 < 0 ? o1 : o2) = v;
    for (auto [a, b] : {std::pair{o1, o2}, std::pair{o2, o1}}) {
      if (!covered[static_cast<std::size_t>(a)] && !covered[static_cast<std::size_t>(b)] &&
          active[static_cast<std::size_t>(a)] && active[static_cast<std::size_t>(b)])
        out.push_back({a, b, at_tail});
    }
  }
  std::sort(out.begin(), out.end(), [](const Extension& l, const Extension& r) {
    return std::tie(l.interior, l.endpoint) < std::tie(r.interior, r.endpoint);
  });
  return out;
}

}  // namespace

PathCover greedy_path_cover(const Hypergraph3& g, double rho, const std::vector<int>* active_in,
                            const CoverOptions& opts) {
  if (!(rho > 0.0 && rho <= 1.0)) throw std::invalid_argument("greedy_path_cover: rho in (0,1]");
  const int n = g.vertex_count();
  std::vector<char> active(static_cast<std::size_t>(n), active_in ? 0 : 1);
  int active_count = n;
  if (active_in) {
    active_count = 0;
    for (int v : *active_in) {
      g.check_vertex(v);
      if (!active[static_cast<std::size_t>(v)]) ++active_count;
      active[static_cast<std::size_t>(v)] = 1;
    }
  }

  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  PathCover cover;

  struct Frame {
    std::vector<Extension> cands;
    std::size_t idx;
  };

  for (int start = 0; start < n; ++start) {
    if (!active[static_cast<std::size_t>(start)] || covered[static_cast<std::size_t>(start)])
      continue;
    std::vector<int> path{start};
    covered[static_cast<std::size_t>(start)] = 1;
    std::vector<Frame> frames;
    std::vector<int> best_path = path;
    int undo_budget = opts.backtrack_depth;

    auto apply = [&](const Extension& ext) {
      if (ext.at_tail) {
        path.push_back(ext.interior);
        path.push_back(ext.endpoint);
      } else {
        path.insert(path.begin(), ext.interior);
        path.insert(path.begin(), ext.endpoint);
      }
      covered[static_cast<std::size_t>(ext.interior)] = 1;
      covered[static_cast<std::size_t>(ext.endpoint)] = 1;
    };
    auto unapply = [&](const Extension& ext) {
      covered[static_cast<std::size_t>(ext.interior)] = 0;
      covered[static_cast<std::size_t>(ext.endpoint)] = 0;
      if (ext.at_tail) {
        path.pop_back();
        path.pop_back();
      } else {
        path.erase(path.begin());
        path.erase(path.begin());
      }
    };

    for (;;) {
      auto cands = extensions(g, path, covered, active, /*at_tail=*/true);
      auto head = extensions(g, path, covered, active, /*at_tail=*/false);
      cands.insert(cands.end(), head.begin(), head.end());
      if (!cands.empty()) {
        frames.push_back({std::move(cands), 0});
        apply(frames.back().cands[0]);
        if (path.size() > best_path.size()) {
          best_path = path;
          undo_budget = opts.backtrack_depth;  // progress re-arms the budget
        }
        continue;
      }
      // Stuck: roll back a few choices and try siblings. Undoing the last
      // frame restores exactly the state its candidate list was computed
      // in, so any remaining sibling applies cleanly.
      bool resumed = false;
      while (!frames.empty() && undo_budget > 0) {
        --undo_budget;
        Frame& f = frames.back();
        unapply(f.cands[f.idx]);
        if (++f.idx < f.cands.size()) {
          apply(f.cands[f.idx]);
          resumed = true;
          break;
        }
        frames.pop_back();
      }
      if (!resumed) break;
    }

    // Keep the longest state reached.
    if (path != best_path) {
      for (int v : path) covered[static_cast<std::size_t>(v)] = 0;
      path = best_path;
      for (int v : path) covered[static_cast<std::size_t>(v)] = 1;
    }
    cover.paths.push_back(LoosePath{path});
  }

  // Disjointness and exact coverage are hard requirements; verify every run.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& p : cover.paths)
    for (int v : p.vertices) {
      if (seen[static_cast<std::size_t>(v)])
        throw std::logic_error("greedy_path_cover: overlapping paths");
      seen[static_cast<std::size_t>(v)] = 1;
      cover.covered.push_back(v);
    }
  std::sort(cover.covered.begin(), cover.covered.end());
  for (int v = 0; v < n; ++v)
    if (active[static_cast<std::size_t>(v)] != (seen[static_cast<std::size_t>(v)] ? 1 : 0))
      throw std::logic_error("greedy_path_cover: cover does not match active set");

  cover.within_budget =
      static_cast<double>(cover.paths.size()) <= rho * static_cast<double>(active_count);
  return cover;
}

}  // namespace loosehc
