#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "loosehc/absorb.hpp"
#include "loosehc/connect.hpp"
#include "loosehc/matching.hpp"

namespace loosehc {

// ---- gadget embedding -------------------------------------------------------

namespace {

std::vector<int> edge_processing_order(const GadgetTemplate& tmpl,
                                       const std::vector<char>& assigned) {
  std::vector<char> have = assigned;
  std::vector<char> done(tmpl.edges.size(), 0);
  std::vector<int> order;
  for (std::size_t round = 0; round < tmpl.edges.size(); ++round) {
    int best = -1, best_score = -1;
    for (int i = 0; i < static_cast<int>(tmpl.edges.size()); ++i) {
      if (done[static_cast<std::size_t>(i)]) continue;
      int score = 0;
      for (int v : tmpl.edges[static_cast<std::size_t>(i)])
        if (have[static_cast<std::size_t>(v)]) ++score;
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    done[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    for (int v : tmpl.edges[static_cast<std::size_t>(best)]) have[static_cast<std::size_t>(v)] = 1;
  }
  return order;
}

}  // namespace

EmbedResult find_gadget_embedding(const Hypergraph3& g, const GadgetTemplate& tmpl, int x, int y,
                                  const std::vector<int>& forbidden, const EmbedOptions& opts) {
  const int n = g.vertex_count();
  std::vector<char> off(static_cast<std::size_t>(n), 0);
  for (int v : forbidden) {
    g.check_vertex(v);
    off[static_cast<std::size_t>(v)] = 1;
  }

  std::vector<int> image(static_cast<std::size_t>(tmpl.order()), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<char> assigned(static_cast<std::size_t>(tmpl.order()), 0);

  auto fix = [&](int tv, int host) {
    g.check_vertex(host);
    if (off[static_cast<std::size_t>(host)])
      throw std::invalid_argument("role vertex is forbidden");
    image[static_cast<std::size_t>(tv)] = host;
    used[static_cast<std::size_t>(host)] = 1;
    assigned[static_cast<std::size_t>(tv)] = 1;
  };
  if (x >= 0) fix(tmpl.x, x);
  if (y >= 0) fix(tmpl.y, y);

  auto order = edge_processing_order(tmpl, assigned);

  EmbedResult res;
  auto ok_host = [&](int tv, int host) {
    if (host < 0 || used[static_cast<std::size_t>(host)] || off[static_cast<std::size_t>(host)])
      return false;
    auto it = opts.allowed.find(tv);
    if (it != opts.allowed.end() &&
        std::find(it->second.begin(), it->second.end(), host) == it->second.end())
      return false;
    return true;
  };

  std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
    if (++res.nodes > opts.node_budget) {
      res.budget_exhausted = true;
      return false;
    }
    if (idx == order.size()) return true;
    const Edge& te = tmpl.edges[static_cast<std::size_t>(order[idx])];
    std::vector<int> open;
    for (int tv : te)
      if (!assigned[static_cast<std::size_t>(tv)]) open.push_back(tv);

    auto try_assign = [&](const std::vector<std::pair<int, int>>& picks) -> bool {
      std::set<int> hosts;
      for (auto [tv, host] : picks) {
        if (!ok_host(tv, host) || !hosts.insert(host).second) return false;
      }
      for (auto [tv, host] : picks) {
        image[static_cast<std::size_t>(tv)] = host;
        used[static_cast<std::size_t>(host)] = 1;
        assigned[static_cast<std::size_t>(tv)] = 1;
      }
      if (place(idx + 1)) return true;
      for (auto [tv, host] : picks) {
        image[static_cast<std::size_t>(tv)] = -1;
        used[static_cast<std::size_t>(host)] = 0;
        assigned[static_cast<std::size_t>(tv)] = 0;
      }
      return res.budget_exhausted;  // propagate a hard stop
    };

    if (open.empty()) {
      int a = image[static_cast<std::size_t>(te[0])], b = image[static_cast<std::size_t>(te[1])],
          c = image[static_cast<std::size_t>(te[2])];
      return g.has_edge(a, b, c) && place(idx + 1);
    }
    if (open.size() == 1) {
      int t1 = open[0];
      int a = -1, b = -1;
      for (int tv : te)
        if (tv != t1) (a < 0 ? a : b) = image[static_cast<std::size_t>(tv)];
      for (int w : g.copair(a, b)) {
        if (try_assign({{t1, w}})) return !res.budget_exhausted;
        if (res.budget_exhausted) return false;
      }
      return false;
    }
    if (open.size() == 2) {
      int anchor_tv = -1;
      for (int tv : te)
        if (assigned[static_cast<std::size_t>(tv)]) anchor_tv = tv;
      int anchor = image[static_cast<std::size_t>(anchor_tv)];
      for (int id : g.incident(anchor)) {
        const Edge& e = g.edge(id);
        int o1 = -1, o2 = -1;
        for (int v : e)
          if (v != anchor) (o1 < 0 ? o1 : o2) = v;
        for (auto [p, q] : {std::pair{o1, o2}, std::pair{o2, o1}}) {
          if (try_assign({{open[0], p}, {open[1], q}})) return !res.budget_exhausted;
          if (res.budget_exhausted) return false;
        }
      }
      return false;
    }
    for (const Edge& e : g.edges()) {
      const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      for (const auto& p : perm) {
        if (try_assign({{open[0], e[p[0]]}, {open[1], e[p[1]]}, {open[2], e[p[2]]}}))
          return !res.budget_exhausted;
        if (res.budget_exhausted) return false;
      }
    }
    return false;
  };

  if (place(0) && !res.budget_exhausted) res.image = image;
  return res;
}

long long count_a2_embeddings(const Hypergraph3& g, int x, int y) {
  if (g.vertex_count() > 16) throw std::invalid_argument("count_a2_embeddings: n <= 16");
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) throw std::invalid_argument("count_a2_embeddings: x != y");
  const int n = g.vertex_count();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[static_cast<std::size_t>(x)] = used[static_cast<std::size_t>(y)] = 1;
  long long count = 0;

  for (int v4 = 0; v4 < n; ++v4) {
    if (used[static_cast<std::size_t>(v4)]) continue;
    used[static_cast<std::size_t>(v4)] = 1;
    for (int v2 : g.copair(x, v4)) {
      if (used[static_cast<std::size_t>(v2)]) continue;
      used[static_cast<std::size_t>(v2)] = 1;
      for (int v6 : g.copair(y, v4)) {
        if (used[static_cast<std::size_t>(v6)]) continue;
        used[static_cast<std::size_t>(v6)] = 1;
        for (int v3 = 0; v3 < n; ++v3) {
          if (used[static_cast<std::size_t>(v3)]) continue;
          used[static_cast<std::size_t>(v3)] = 1;
          for (int v5 : g.copair(v3, v4)) {
            if (used[static_cast<std::size_t>(v5)]) continue;
            used[static_cast<std::size_t>(v5)] = 1;
            for (int v1 : g.copair(v2, v3)) {
              if (used[static_cast<std::size_t>(v1)]) continue;
              used[static_cast<std::size_t>(v1)] = 1;
              for (int v7 : g.copair(v5, v6))
                if (!used[static_cast<std::size_t>(v7)]) ++count;
              used[static_cast<std::size_t>(v1)] = 0;
            }
            used[static_cast<std::size_t>(v5)] = 0;
          }
          used[static_cast<std::size_t>(v3)] = 0;
        }
        used[static_cast<std::size_t>(v6)] = 0;
      }
      used[static_cast<std::size_t>(v2)] = 0;
    }
    used[static_cast<std::size_t>(v4)] = 0;
  }
  return count;
}

// ---- assembly ------------------------------------------------------------------

long long assembly_vertex_demand(int template_order, int template_edges, int d_mode) {
  long long interior = d_mode == 2 ? 7 : 35 + 4;  // backbone interiors + one per slot
  return template_order + interior * template_edges + std::max(0, template_edges - 1);
}

namespace {

/// Realize a traversal pattern: template ids map through `image`, negative
/// markers expand into the matching slot path's interior, oriented by the
/// endpoint just emitted.
LoosePath realize_pattern(const std::vector<int>& pattern, const std::vector<int>& image,
                          const std::vector<LoosePath>& slot_paths) {
  std::vector<int> out;
  for (int tok : pattern) {
    if (tok >= 0) {
      out.push_back(image[static_cast<std::size_t>(tok)]);
      continue;
    }
    int s = -tok - 1;
    const LoosePath& sp = slot_paths[static_cast<std::size_t>(s)];
    if (sp.vertices.empty()) throw std::logic_error("unfilled path slot");
    std::vector<int> interior(sp.vertices.begin() + 1, sp.vertices.end() - 1);
    if (sp.vertices.front() != out.back()) {
      if (sp.vertices.back() != out.back()) throw std::logic_error("slot path misoriented");
      std::reverse(interior.begin(), interior.end());
    }
    out.insert(out.end(), interior.begin(), interior.end());
  }
  return LoosePath{std::move(out)};
}

}  // namespace

AssembleResult assemble_absorber(const Hypergraph3& g, const std::vector<int>& r,
                                 const std::vector<int>& w, const AssembleParams& params) {
  const int n = g.vertex_count();
  std::vector<char> in_r(static_cast<std::size_t>(n), 0), in_w(static_cast<std::size_t>(n), 0);
  for (int v : r) {
    g.check_vertex(v);
    in_r[static_cast<std::size_t>(v)] = 1;
  }
  for (int v : w) {
    g.check_vertex(v);
    if (in_r[static_cast<std::size_t>(v)])
      throw std::invalid_argument("assemble_absorber: R and W must be disjoint");
    in_w[static_cast<std::size_t>(v)] = 1;
  }

  AbsorberAssembly asm_;
  asm_.reservoir = r;
  std::sort(asm_.reservoir.begin(), asm_.reservoir.end());

  const int m = static_cast<int>(r.size());
  if (m == 0) {
    for (const Edge& e : g.edges())
      if (!in_w[e[0]] && !in_w[e[1]] && !in_w[e[2]]) {
        asm_.degenerate = true;
        asm_.degenerate_path = LoosePath{{e[0], e[1], e[2]}};
        asm_.a = e[0];
        asm_.b = e[2];
        asm_.total_vertices = {e[0], e[1], e[2]};
        return {asm_, "", ""};
      }
    return {std::nullopt, "embed", "no edge available for the degenerate assembly"};
  }

  // Template, verified before anything is spent on embedding.
  try {
    asm_.tmpl = build_template(m, params.template_mode, params.template_opts);
  } catch (const std::exception& ex) {
    return {std::nullopt, "template", ex.what()};
  }
  if (params.template_mode != TemplateMode::auto_pick &&
      params.template_mode != TemplateMode::random_bounded_degree) {
    auto rep = verify_template(asm_.tmpl, /*exhaustive=*/true);
    if (!rep.ok) return {std::nullopt, "template", "template failed robustness verification"};
  }

  const int vt = asm_.tmpl.order;
  const int et = static_cast<int>(asm_.tmpl.edges.size());
  const long long interior_each = params.d_mode == 2 ? 7 : 35;
  long long demand = assembly_vertex_demand(vt, et, params.d_mode);
  long long pool = n - m - static_cast<long long>(w.size());  // hosts R0 + gadget interiors
  long long need_outside_w = (vt - m) + interior_each * et;
  long long w_seats = (et - 1) + (params.d_mode == 1 ? 4 * et : 0);
  if (need_outside_w > pool || static_cast<long long>(w.size()) < w_seats)
    return {std::nullopt, "space",
            "assembly needs " + std::to_string(demand) + " vertices (" +
                std::to_string(need_outside_w) + " outside R and W, " +
                std::to_string(w_seats) + " seats in W); host has n=" +
                std::to_string(n) + ", |W|=" + std::to_string(w.size())};

  // f: Z -> R ascending; the rest of V(T) -> R0 drawn ascending from outside.
  std::vector<int> free_pool;
  for (int v = 0; v < n; ++v)
    if (!in_r[static_cast<std::size_t>(v)] && !in_w[static_cast<std::size_t>(v)])
      free_pool.push_back(v);
  if (static_cast<int>(free_pool.size()) < vt - m)
    return {std::nullopt, "space", "not enough vertices for R0"};

  asm_.f.assign(static_cast<std::size_t>(vt), -1);
  std::vector<char> in_z(static_cast<std::size_t>(vt), 0);
  for (int z : asm_.tmpl.z) in_z[static_cast<std::size_t>(z)] = 1;
  {
    std::size_t zi = 0, oi = 0;
    for (int tv = 0; tv < vt; ++tv)
      if (in_z[static_cast<std::size_t>(tv)])
        asm_.f[static_cast<std::size_t>(tv)] = asm_.reservoir[zi++];
      else {
        asm_.f[static_cast<std::size_t>(tv)] = free_pool[oi];
        asm_.r0.push_back(free_pool[oi++]);
      }
  }

  asm_.chain = asm_.tmpl.edges;
  const GadgetTemplate gadget =
      build_gadget_template(params.d_mode == 2 ? GadgetKind::A2 : GadgetKind::A1);
  const GadgetTemplate embed_shape =
      params.d_mode == 2 ? gadget : build_gadget_template(GadgetKind::backbone1);

  std::vector<char> base_off(static_cast<std::size_t>(n), 0);
  for (int v : asm_.r0) base_off[static_cast<std::size_t>(v)] = 1;
  for (int v : r) base_off[static_cast<std::size_t>(v)] = 1;
  for (int v : w) base_off[static_cast<std::size_t>(v)] = 1;

  CounterRng restart_rng(params.seed, 0x41534d42);  // "ASMB"
  std::string last_failure = "embed";
  std::string last_detail;

  for (int attempt = 0; attempt <= params.restarts; ++attempt) {
    asm_.gadgets.clear();
    asm_.connectors.clear();

    std::vector<char> off = base_off;
    // Perturb later attempts by retiring a few pool vertices, when slack allows.
    long long slack = static_cast<long long>(free_pool.size()) - (vt - m) - interior_each * et;
    if (attempt > 0) {
      if (slack <= 0) break;  // a rerun would be identical
      CounterRng rng = restart_rng.derive(static_cast<std::uint64_t>(attempt));
      for (int k = 0; k < std::min<long long>(slack, attempt * 2); ++k)
        off[static_cast<std::size_t>(free_pool[static_cast<std::size_t>(
            rng.index(static_cast<int>(free_pool.size())))])] = 1;
    }

    bool embed_ok = true;
    for (auto [tu, tv] : asm_.chain) {
      int hx = asm_.f[static_cast<std::size_t>(tu)];
      int hy = asm_.f[static_cast<std::size_t>(tv)];
      std::vector<int> forbidden;
      for (int v = 0; v < n; ++v)
        if (off[static_cast<std::size_t>(v)] && v != hx && v != hy) forbidden.push_back(v);
      EmbedOptions eo;
      eo.node_budget = params.embed_budget;
      auto er = find_gadget_embedding(g, embed_shape, hx, hy, forbidden, eo);
      if (!er.image) {
        embed_ok = false;
        last_failure = "embed";
        last_detail = "gadget for template edge (" + std::to_string(tu) + "," +
                      std::to_string(tv) + ")" + (er.budget_exhausted ? " [budget]" : "");
        break;
      }
      GadgetEmbedding ge;
      ge.kind = params.d_mode == 2 ? GadgetKind::A2 : GadgetKind::A1;
      ge.image = *er.image;
      for (int tvx = 0; tvx < embed_shape.order(); ++tvx)
        if (tvx != embed_shape.x && tvx != embed_shape.y)
          off[static_cast<std::size_t>(ge.image[static_cast<std::size_t>(tvx)])] = 1;
      asm_.gadgets.push_back(std::move(ge));
    }
    if (!embed_ok) continue;

    // One connection request covers the chain links and, for A1 gadgets,
    // every path slot.
    ConnectRequest creq;
    creq.reservoir = w;
    std::vector<std::pair<int, int>> slot_owner;  // (gadget, slot) per pair
    for (std::size_t i = 0; i < asm_.gadgets.size(); ++i)
      for (std::size_t s = 0; s < gadget.path_slots.size(); ++s) {
        auto [p, q] = gadget.path_slots[s];
        creq.pairs.emplace_back(asm_.gadgets[i].image[static_cast<std::size_t>(p)],
                                asm_.gadgets[i].image[static_cast<std::size_t>(q)]);
        slot_owner.emplace_back(static_cast<int>(i), static_cast<int>(s));
      }
    std::size_t chain_pairs_at = creq.pairs.size();
    for (std::size_t i = 0; i + 1 < asm_.gadgets.size(); ++i)
      creq.pairs.emplace_back(
          asm_.gadgets[i].image[static_cast<std::size_t>(gadget.join_out)],
          asm_.gadgets[i + 1].image[static_cast<std::size_t>(gadget.join_in)]);

    if (!creq.pairs.empty()) {
      ConnectOptions copts;
      copts.node_budget = params.connect_budget;
      copts.pair_fraction = 1.0;  // sized by the space check above
      auto cres = connect_pairs(g, creq, copts);
      if (cres.status != ConnectResult::Status::connected) {
        last_failure = "connect";
        last_detail = "pair " + std::to_string(cres.witness_pair);
        continue;
      }
      for (std::size_t i = 0; i < chain_pairs_at; ++i) {
        auto [gi, si] = slot_owner[i];
        auto& store = asm_.gadgets[static_cast<std::size_t>(gi)].slot_paths;
        store.resize(gadget.path_slots.size());
        store[static_cast<std::size_t>(si)] = cres.matching.paths[i];
      }
      for (std::size_t i = chain_pairs_at; i < creq.pairs.size(); ++i) {
        LoosePath p = cres.matching.paths[i];
        if (p.head() != creq.pairs[i].first) p = p.reversed();
        asm_.connectors.push_back(std::move(p));
      }
    }

    for (auto& ge : asm_.gadgets) {
      ge.covering = realize_pattern(gadget.covering, ge.image, ge.slot_paths);
      ge.noncovering = realize_pattern(gadget.noncovering, ge.image, ge.slot_paths);
    }
    asm_.a = asm_.gadgets.front().image[static_cast<std::size_t>(gadget.join_in)];
    asm_.b = asm_.gadgets.back().image[static_cast<std::size_t>(gadget.join_out)];

    std::set<int> total;
    for (int tv = 0; tv < vt; ++tv) total.insert(asm_.f[static_cast<std::size_t>(tv)]);
    for (const auto& ge : asm_.gadgets)
      for (int v : ge.covering.vertices) total.insert(v);
    for (const auto& c : asm_.connectors)
      for (std::size_t i = 1; i + 1 < c.vertices.size(); ++i) total.insert(c.vertices[i]);
    asm_.total_vertices.assign(total.begin(), total.end());
    return {asm_, "", ""};
  }
  return {std::nullopt, last_failure, last_detail};
}

AbsorbResult absorb(const Hypergraph3& g, const AbsorberAssembly& asm_,
                    const std::vector<int>& r_prime) {
  std::set<int> rset(asm_.reservoir.begin(), asm_.reservoir.end());
  for (int v : r_prime)
    if (!rset.count(v)) throw std::invalid_argument("absorb: R' must lie inside R");
  std::set<int> rp(r_prime.begin(), r_prime.end());
  if (rp.size() != r_prime.size()) throw std::invalid_argument("absorb: R' has duplicates");
  if (!asm_.reservoir.empty() && 2 * rp.size() >= asm_.reservoir.size())
    throw std::invalid_argument("absorb: need |R'| < |R|/2");
  if (asm_.reservoir.empty() && !rp.empty())
    throw std::invalid_argument("absorb: need |R'| < |R|/2");
  if ((asm_.total_vertices.size() - rp.size()) % 2 != 1)
    throw std::invalid_argument("absorb: |V(asm) \\ R'| must be odd");

  if (asm_.degenerate) return {asm_.degenerate_path, ""};

  std::vector<int> skip;
  for (int tv = 0; tv < asm_.tmpl.order; ++tv)
    if (rp.count(asm_.f[static_cast<std::size_t>(tv)])) skip.push_back(tv);

  // Parity bookkeeping from the assembly argument: the uncovered template
  // part R0 u (R \ R') must have even size for the matching to exist.
  if ((asm_.tmpl.order - static_cast<int>(skip.size())) % 2 != 0)
    return {std::nullopt, "parity mismatch between template and assembly"};

  auto mate = maximum_matching(asm_.tmpl.order, asm_.tmpl.edges, skip);
  std::vector<char> skipped(static_cast<std::size_t>(asm_.tmpl.order), 0);
  for (int v : skip) skipped[static_cast<std::size_t>(v)] = 1;
  for (int v = 0; v < asm_.tmpl.order; ++v)
    if (!skipped[static_cast<std::size_t>(v)] && mate[static_cast<std::size_t>(v)] == -1)
      return {std::nullopt, "template has no perfect matching avoiding R'"};

  std::vector<int> out;
  for (std::size_t i = 0; i < asm_.chain.size(); ++i) {
    auto [tu, tv] = asm_.chain[i];
    bool matched = mate[static_cast<std::size_t>(tu)] == tv;
    const LoosePath& seg = matched ? asm_.gadgets[i].covering : asm_.gadgets[i].noncovering;
    if (i == 0) {
      out = seg.vertices;
    } else {
      const LoosePath& conn = asm_.connectors[i - 1];
      out.insert(out.end(), conn.vertices.begin() + 1, conn.vertices.end());
      out.insert(out.end(), seg.vertices.begin() + 1, seg.vertices.end());
    }
  }

  LoosePath path{std::move(out)};
  auto check = validate_loose_path(g, path);
  if (!check.ok)
    return {std::nullopt, "assembled path invalid: " + defect_name(check.defect)};
  std::vector<int> want;
  for (int v : asm_.total_vertices)
    if (!rp.count(v)) want.push_back(v);
  std::vector<int> got = path.vertices;
  std::sort(got.begin(), got.end());
  if (got != want) return {std::nullopt, "path vertex set differs from V(asm) \\ R'"};
  return {path, ""};
}

AbsorberReport verify_absorber(const Hypergraph3& g, const AbsorberAssembly& asm_,
                               bool exhaustive, int trials, std::uint64_t seed) {
  AbsorberReport rep;
  rep.exhaustive = exhaustive;
  const auto& r = asm_.reservoir;
  const int m = static_cast<int>(r.size());

  auto admissible = [&](const std::vector<int>& rp) {
    if (m > 0 && 2 * rp.size() >= static_cast<std::size_t>(m)) return false;
    return (asm_.total_vertices.size() - rp.size()) % 2 == 1;
  };
  auto run = [&](const std::vector<int>& rp) {
    ++rep.checked;
    auto res = absorb(g, asm_, rp);
    if (!res.path) {
      ++rep.failures;
      rep.failing_sets.push_back(rp);
    }
  };

  if (exhaustive) {
    if (m > 20) throw std::invalid_argument("verify_absorber: 2^|R| too large for exhaustive");
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> rp;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) rp.push_back(r[static_cast<std::size_t>(i)]);
      if (admissible(rp)) run(rp);
    }
  } else {
    std::vector<int> sizes;
    int max_j = m == 0 ? 0 : (m - 1) / 2;
    for (int j = 0; j <= max_j; ++j)
      if ((asm_.total_vertices.size() - static_cast<std::size_t>(j)) % 2 == 1 &&
          (m == 0 ? j == 0 : 2 * j < m))
        sizes.push_back(j);
    if (sizes.empty()) return rep;
    CounterRng rng(seed, 0x56414253);  // "VABS"
    for (int trial = 0; trial < trials; ++trial) {
      int j = sizes[static_cast<std::size_t>(rng.index(static_cast<int>(sizes.size())))];
      auto idx = rng.sample_indices(m, j);
      std::vector<int> rp;
      for (int i : idx) rp.push_back(r[static_cast<std::size_t>(i)]);
      run(rp);
    }
  }
  return rep;
}

std::string AbsorberAssembly::to_json(const GadgetTemplate& tmpl_def) const {
  nlohmann::json j;
  j["a"] = a;
  j["b"] = b;
  j["reservoir"] = reservoir;
  j["r0"] = r0;
  j["degenerate"] = degenerate;
  j["total_vertices"] = total_vertices;
  auto& gs = j["gadgets"] = nlohmann::json::array();
  for (const auto& ge : gadgets) {
    nlohmann::json gj;
    gj["kind"] = gadget_name(ge.kind);
    nlohmann::json imap;
    for (int tv = 0; tv < tmpl_def.order(); ++tv)
      imap[tmpl_def.labels[static_cast<std::size_t>(tv)]] = ge.image[static_cast<std::size_t>(tv)];
    gj["image"] = std::move(imap);
    gs.push_back(std::move(gj));
  }
  auto& cs = j["connectors"] = nlohmann::json::array();
  for (const auto& c : connectors) cs.push_back(c.vertices);
  return j.dump();
}

}  // namespace loosehc
