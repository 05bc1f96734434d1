#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "loosehc/absorb.hpp"

namespace loosehc {

std::string gadget_name(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::A2: return "a2";
    case GadgetKind::A1: return "a1";
    case GadgetKind::backbone1: return "backbone1";
    case GadgetKind::contracted_backbone: return "contracted_backbone";
  }
  return "unknown";
}

bool GadgetTemplate::is_linear() const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      int common = 0;
      for (int a : edges[i])
        for (int b : edges[j])
          if (a == b) ++common;
      if (common > 1) return false;
    }
  return true;
}

namespace {

struct Builder {
  GadgetTemplate t;

  int add(const std::string& label) {
    t.index[label] = static_cast<int>(t.labels.size());
    t.labels.push_back(label);
    return t.index[label];
  }
  void add_range(const std::string& stem, int from, int to) {
    for (int i = from; i <= to; ++i) add(stem + std::to_string(i));
  }
  void edge(const std::string& a, const std::string& b, const std::string& c) {
    t.edges.push_back(Hypergraph3::make_edge(t.id(a), t.id(b), t.id(c)));
  }
  std::vector<int> seq(const std::vector<std::string>& names) {
    std::vector<int> out;
    for (const auto& s : names) {
      if (s.size() > 1 && s[0] == '@')  // @k = slot marker
        out.push_back(-(std::stoi(s.substr(1)) + 1));
      else
        out.push_back(t.id(s));
    }
    return out;
  }
  int id(const std::string& l) const { return t.index.at(l); }
};

void add_a2_core(Builder& b, const std::string& xl, const std::string& yl) {
  b.edge("v1", "v2", "v3");
  b.edge("v3", "v4", "v5");
  b.edge("v5", "v6", "v7");
  b.edge("v2", xl, "v4");
  b.edge("v4", yl, "v6");
}

GadgetTemplate make_a2() {
  Builder b;
  b.t.kind = GadgetKind::A2;
  b.add("x");
  b.add("y");
  b.add_range("v", 1, 7);
  add_a2_core(b, "x", "y");
  b.t.x = b.id("x");
  b.t.y = b.id("y");
  b.t.covering = b.seq({"v1", "v3", "v2", "x", "v4", "y", "v6", "v5", "v7"});
  b.t.noncovering = b.seq({"v1", "v2", "v3", "v4", "v5", "v6", "v7"});
  b.t.join_in = b.id("v1");
  b.t.join_out = b.id("v7");
  return b.t;
}

void add_backbone(Builder& b) {
  b.add("x");
  b.add("y");
  b.add_range("x", 1, 10);
  b.add_range("y", 1, 10);
  b.add_range("a", 1, 4);
  b.add_range("b", 1, 4);
  b.add_range("v", 1, 7);
  b.edge("x1", "x2", "x3");
  b.edge("x3", "x", "x4");
  b.edge("x4", "x5", "x6");
  b.edge("x6", "x7", "x8");
  b.edge("x8", "x9", "x10");
  b.edge("y1", "y2", "y3");
  b.edge("y3", "y", "y4");
  b.edge("y4", "y5", "y6");
  b.edge("y6", "y7", "y8");
  b.edge("y8", "y9", "y10");
  b.edge("a1", "a2", "a3");
  b.edge("a2", "a4", "x2");
  b.edge("a3", "a4", "x9");
  b.edge("b1", "b2", "b3");
  b.edge("b2", "b4", "y2");
  b.edge("b3", "b4", "y9");
  add_a2_core(b, "x7", "y7");
  b.t.x = b.id("x");
  b.t.y = b.id("y");
}

GadgetTemplate make_a1(bool with_slots) {
  Builder b;
  b.t.kind = with_slots ? GadgetKind::A1 : GadgetKind::backbone1;
  add_backbone(b);
  if (!with_slots) return b.t;

  b.t.path_slots = {
      {b.id("x1"), b.id("x10")},  // @0: P_x
      {b.id("y1"), b.id("y10")},  // @1: P_y
      {b.id("x5"), b.id("y5")},   // @2
      {b.id("v7"), b.id("b1")},   // @3
  };
  b.t.covering = b.seq({"a1", "a2", "a3", "a4", "x9", "x8", "x10", "@0",
                        "x1", "x2", "x3", "x",  "x4", "x6", "x5",  "@2",
                        "y5", "y6", "y4", "y",  "y3", "y2", "y1",  "@1",
                        "y10", "y8", "y9", "b4", "b3", "b2", "b1", "@3",
                        "v7", "v5", "v6", "y7", "v4", "x7", "v2", "v3", "v1"});
  b.t.noncovering = b.seq({"a1", "a3", "a2", "a4", "x2", "x3", "x1", "@0",
                           "x10", "x9", "x8", "x7", "x6", "x4", "x5", "@2",
                           "y5", "y4", "y6", "y7", "y8", "y9", "y10", "@1",
                           "y1", "y3", "y2", "b4", "b2", "b3", "b1", "@3",
                           "v7", "v6", "v5", "v4", "v3", "v2", "v1"});
  b.t.join_in = b.id("a1");
  b.t.join_out = b.id("v1");
  return b.t;
}

GadgetTemplate make_contracted_backbone() {
  Builder b;
  b.t.kind = GadgetKind::contracted_backbone;
  b.add("x'");
  b.add("y'");
  b.add_range("x", 7, 10);
  b.add_range("y", 7, 10);
  b.add_range("a", 1, 4);
  b.add_range("b", 1, 4);
  b.add_range("v", 1, 7);
  b.edge("x'", "x7", "x8");
  b.edge("x8", "x9", "x10");
  b.edge("a1", "a2", "a3");
  b.edge("a2", "a4", "x'");
  b.edge("a3", "a4", "x9");
  b.edge("y'", "y7", "y8");
  b.edge("y8", "y9", "y10");
  b.edge("b1", "b2", "b3");
  b.edge("b2", "b4", "y'");
  b.edge("b3", "b4", "y9");
  add_a2_core(b, "x7", "y7");
  b.t.x = b.id("x'");
  b.t.y = b.id("y'");
  return b.t;
}

}  // namespace

GadgetTemplate build_gadget_template(GadgetKind kind) {
  GadgetTemplate t;
  switch (kind) {
    case GadgetKind::A2: t = make_a2(); break;
    case GadgetKind::A1: t = make_a1(true); break;
    case GadgetKind::backbone1: t = make_a1(false); break;
    case GadgetKind::contracted_backbone: t = make_contracted_backbone(); break;
  }
  if (!t.is_linear()) throw std::logic_error("gadget template must be linear");
  return t;
}

std::string GadgetTemplate::to_json() const {
  nlohmann::json j;
  j["kind"] = gadget_name(kind);
  j["vertices"] = labels;
  auto named = [&](int tok) -> std::string {
    if (tok >= 0) return labels[static_cast<std::size_t>(tok)];
    return "slot" + std::to_string(-tok - 1);
  };
  auto& es = j["edges"] = nlohmann::json::array();
  for (const Edge& e : edges) es.push_back({named(e[0]), named(e[1]), named(e[2])});
  nlohmann::json roles;
  if (x >= 0) roles["x"] = labels[static_cast<std::size_t>(x)];
  if (y >= 0) roles["y"] = labels[static_cast<std::size_t>(y)];
  if (join_in >= 0) roles["join_in"] = labels[static_cast<std::size_t>(join_in)];
  if (join_out >= 0) roles["join_out"] = labels[static_cast<std::size_t>(join_out)];
  j["roles"] = std::move(roles);
  for (auto [name, seq] : {std::pair{"covering", &covering}, {"noncovering", &noncovering}}) {
    if (seq->empty()) continue;
    auto& arr = j[name] = nlohmann::json::array();
    for (int tok : *seq) arr.push_back(named(tok));
  }
  auto& slots = j["path_slots"] = nlohmann::json::array();
  for (auto [p, q] : path_slots)
    slots.push_back({labels[static_cast<std::size_t>(p)], labels[static_cast<std::size_t>(q)]});
  return j.dump();
}

// ---- m3-density ---------------------------------------------------------------

M3Result m3_density(const Hypergraph3& h) {
  const int m = static_cast<int>(h.edge_count());
  if (m > 20) throw std::invalid_argument("m3_density: needs e(H) <= 20");

  M3Result best;  // 0 by convention when nothing beats it
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::set<int> support;
    int e = 0;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) {
        ++e;
        for (int v : h.edge(i)) support.insert(v);
      }
    int v = std::max(static_cast<int>(support.size()), 4);  // pad isolated vertices up to 4
    Rational ratio(e - 1, v - 3);
    if (ratio > best.value) {
      best.value = ratio;
      best.witness.clear();
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) best.witness.push_back(h.edge(i));
    }
  }
  return best;
}

// ---- contraction ----------------------------------------------------------------

void ContractionSpec::validate(const Hypergraph3& g) const {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  auto claim = [&](int v) {
    g.check_vertex(v);
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("ContractionSpec: sets and tuples must be pairwise disjoint");
    seen[static_cast<std::size_t>(v)] = 1;
  };
  for (int v : u1) claim(v);
  for (int v : u2) claim(v);
  for (const auto& t : tuples)
    for (int v : t) claim(v);
}

Contraction contract(const Hypergraph3& g, const ContractionSpec& spec) {
  spec.validate(g);
  std::vector<int> u1 = spec.u1, u2 = spec.u2;
  std::sort(u1.begin(), u1.end());
  std::sort(u2.begin(), u2.end());

  Contraction out{Hypergraph3(0, {}), {}, 0};
  std::vector<int> to_new(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int v : u1) {
    to_new[static_cast<std::size_t>(v)] = static_cast<int>(out.provenance.size());
    out.provenance.push_back({v});
  }
  for (int v : u2) {
    to_new[static_cast<std::size_t>(v)] = static_cast<int>(out.provenance.size());
    out.provenance.push_back({v});
  }
  out.first_tuple_vertex = static_cast<int>(out.provenance.size());

  std::vector<char> side(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : u1) side[static_cast<std::size_t>(v)] = 1;
  for (int v : u2) side[static_cast<std::size_t>(v)] = 2;

  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (side[e[0]] && side[e[1]] && side[e[2]])
      edges.push_back({to_new[e[0]], to_new[e[1]], to_new[e[2]]});

  for (const auto& t : spec.tuples) {
    int w_id = static_cast<int>(out.provenance.size());
    out.provenance.push_back({t[0], t[1], t[2], t[3]});
    // w2 looks into U1, w4 into U2
    for (auto [anchor, side_id] : {std::pair{t[1], 1}, std::pair{t[3], 2}}) {
      for (int eid : g.incident(anchor)) {
        const Edge& e = g.edge(eid);
        int o1 = -1, o2 = -1;
        for (int v : e)
          if (v != anchor) (o1 < 0 ? o1 : o2) = v;
        if (side[static_cast<std::size_t>(o1)] == side_id &&
            side[static_cast<std::size_t>(o2)] == side_id)
          edges.push_back(Hypergraph3::make_edge(w_id, to_new[static_cast<std::size_t>(o1)],
                                                 to_new[static_cast<std::size_t>(o2)]));
      }
    }
  }

  out.graph = Hypergraph3(static_cast<int>(out.provenance.size()), std::move(edges));
  return out;
}

ExpansionFamilies expansion_families(const Hypergraph3& g, int x, const std::vector<int>& w) {
  g.check_vertex(x);
  std::vector<char> avail(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : w) {
    g.check_vertex(v);
    if (v != x) avail[static_cast<std::size_t>(v)] = 1;
  }

  ExpansionFamilies fam;
  // P_x: disjoint pairs closing an edge with x, ascending scan, capped at
  // sqrt(|W|) so the tuple stage still has material to draw from.
  std::size_t pair_cap = 1;
  while (pair_cap * pair_cap < w.size()) ++pair_cap;
  for (int id : g.incident(x)) {
    if (fam.pairs.size() >= pair_cap) break;
    const Edge& e = g.edge(id);
    int o1 = -1, o2 = -1;
    for (int v : e)
      if (v != x) (o1 < 0 ? o1 : o2) = v;
    if (avail[static_cast<std::size_t>(o1)] && avail[static_cast<std::size_t>(o2)]) {
      fam.pairs.emplace_back(std::min(o1, o2), std::max(o1, o2));
      avail[static_cast<std::size_t>(o1)] = 0;
      avail[static_cast<std::size_t>(o2)] = 0;
    }
  }

  // F_x: maximal disjoint 4-tuples hooked to some pair.
  std::vector<int> free_w;
  for (int v : w)
    if (avail[static_cast<std::size_t>(v)]) free_w.push_back(v);
  std::sort(free_w.begin(), free_w.end());
  for (std::size_t pi = 0; pi < fam.pairs.size(); ++pi) {
    auto [u, v] = fam.pairs[pi];
    for (;;) {
      std::array<int, 4> tup{-1, -1, -1, -1};
      for (int id : g.incident(u)) {
        const Edge& e = g.edge(id);
        int o1 = -1, o2 = -1;
        for (int z : e)
          if (z != u) (o1 < 0 ? o1 : o2) = z;
        if (o1 > o2) std::swap(o1, o2);
        if (avail[static_cast<std::size_t>(o1)] && avail[static_cast<std::size_t>(o2)]) {
          tup[0] = o1;
          tup[1] = o2;
          break;
        }
      }
      if (tup[0] < 0) break;
      avail[static_cast<std::size_t>(tup[0])] = 0;
      avail[static_cast<std::size_t>(tup[1])] = 0;
      for (int id : g.incident(v)) {
        const Edge& e = g.edge(id);
        int o1 = -1, o2 = -1;
        for (int z : e)
          if (z != v) (o1 < 0 ? o1 : o2) = z;
        if (o1 > o2) std::swap(o1, o2);
        if (avail[static_cast<std::size_t>(o1)] && avail[static_cast<std::size_t>(o2)]) {
          tup[2] = o1;
          tup[3] = o2;
          break;
        }
      }
      if (tup[2] < 0) {
        // no second hook; release the first and stop trying this pair
        avail[static_cast<std::size_t>(tup[0])] = 1;
        avail[static_cast<std::size_t>(tup[1])] = 1;
        break;
      }
      avail[static_cast<std::size_t>(tup[2])] = 0;
      avail[static_cast<std::size_t>(tup[3])] = 0;
      // tuple order (w1,w2,w3,w4): u w1 w2 and v w3 w4 are edges
      fam.tuples.push_back(tup);
      fam.tuple_pair.push_back(static_cast<int>(pi));
    }
  }
  return fam;
}

}  // namespace loosehc
