#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <loosehc/connect.hpp>
#include <loosehc/models.hpp>
#include <loosehc/rng.hpp>

using namespace loosehc;

namespace {

BipartiteHypergraph random_bipartite(int ell, int na, int nb, double density, CounterRng& rng) {
  BipartiteHypergraph h;
  h.ell = ell;
  h.a_count = na;
  h.b_count = nb;
  for (int a = 0; a < na; ++a) {
    std::vector<int> all(static_cast<std::size_t>(nb));
    for (int i = 0; i < nb; ++i) all[static_cast<std::size_t>(i)] = i;
    // enumerate candidate B-sides, keep each with the given density
    if (ell == 2) {
      for (int b = 0; b < nb; ++b)
        if (rng.bernoulli(density)) h.add_edge(a, {b});
    } else {
      for (int b1 = 0; b1 < nb; ++b1)
        for (int b2 = b1 + 1; b2 < nb; ++b2)
          if (rng.bernoulli(density)) h.add_edge(a, {b1, b2});
    }
  }
  return h;
}

}  // namespace

TEST_CASE("haxell check hand instances") {
  BipartiteHypergraph pm;
  pm.ell = 2;
  pm.a_count = 2;
  pm.b_count = 2;
  pm.add_edge(0, {0});
  pm.add_edge(1, {1});
  CHECK(haxell_check(pm).status == HaxellResult::Status::pass);

  BipartiteHypergraph shared;
  shared.ell = 2;
  shared.a_count = 2;
  shared.b_count = 2;
  shared.add_edge(0, {0});
  shared.add_edge(1, {0});
  auto viol = haxell_check(shared);
  REQUIRE(viol.status == HaxellResult::Status::violation);
  CHECK(viol.a_witness == std::vector<int>{0, 1});
  CHECK(viol.b_witness == std::vector<int>{0});

  BipartiteHypergraph fan;
  fan.ell = 3;
  fan.a_count = 1;
  fan.b_count = 4;
  fan.add_edge(0, {0, 1});
  fan.add_edge(0, {2, 3});
  CHECK(haxell_check(fan).status == HaxellResult::Status::pass);

  // isolated A-vertex: minimal violation has |A'| = 1
  BipartiteHypergraph lonely;
  lonely.ell = 2;
  lonely.a_count = 2;
  lonely.b_count = 3;
  lonely.add_edge(0, {0});
  auto v2 = haxell_check(lonely);
  REQUIRE(v2.status == HaxellResult::Status::violation);
  CHECK(v2.a_witness == std::vector<int>{1});
  CHECK(v2.b_witness.empty());
}

TEST_CASE("saturating matching hand instances") {
  BipartiteHypergraph pm;
  pm.ell = 2;
  pm.a_count = 2;
  pm.b_count = 2;
  pm.add_edge(0, {0});
  pm.add_edge(1, {1});
  auto res = find_saturating_matching(pm);
  REQUIRE(res.status == MatchingResult::Status::found);
  CHECK(res.edge_ids.size() == 2);

  BipartiteHypergraph shared;
  shared.ell = 2;
  shared.a_count = 2;
  shared.b_count = 2;
  shared.add_edge(0, {0});
  shared.add_edge(1, {0});
  CHECK(find_saturating_matching(shared).status == MatchingResult::Status::none);
}

TEST_CASE("haxell pass implies a matching on random instances") {
  int passes = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    CounterRng rng(seed, 11);
    int ell = 2 + rng.index(2);
    int na = 2 + rng.index(3);
    int nb = ell + rng.index(10);
    auto h = random_bipartite(ell, na, nb, 0.12 + 0.3 * rng.uniform(), rng);
    auto hx = haxell_check(h);
    if (hx.status != HaxellResult::Status::pass) continue;
    ++passes;
    auto m = find_saturating_matching(h);
    CHECK(m.status == MatchingResult::Status::found);
  }
  CHECK(passes > 10);
}

TEST_CASE("connecting a single pair through one reservoir vertex") {
  Hypergraph3 g(3, {{0, 1, 2}});
  ConnectRequest req;
  req.pairs = {{0, 2}};
  req.reservoir = {1};
  ConnectOptions opts;
  opts.pair_fraction = 1.0;
  auto res = connect_pairs(g, req, opts);
  REQUIRE(res.status == ConnectResult::Status::connected);
  CHECK(res.matching.paths[0].vertices == std::vector<int>{0, 1, 2});
  CHECK(validate_connection(g, req, res.matching));
}

TEST_CASE("two pairs in a small complete host stay internally disjoint") {
  auto g = Hypergraph3::complete(9);
  ConnectRequest req;
  req.pairs = {{0, 1}, {2, 3}};
  req.reservoir = {4, 5, 6, 7, 8};
  ConnectOptions opts;
  opts.pair_fraction = 1.0;
  auto res = connect_pairs(g, req, opts);
  REQUIRE(res.status == ConnectResult::Status::connected);
  CHECK(validate_connection(g, req, res.matching));
  // determinism
  auto res2 = connect_pairs(g, req, opts);
  REQUIRE(res2.status == ConnectResult::Status::connected);
  for (std::size_t i = 0; i < res.matching.paths.size(); ++i)
    CHECK(res.matching.paths[i].vertices == res2.matching.paths[i].vertices);
}

TEST_CASE("impossible pairs are disproved on small instances") {
  Hypergraph3 empty(6, {});
  ConnectRequest req;
  req.pairs = {{0, 1}};
  req.reservoir = {2, 3, 4, 5};
  ConnectOptions opts;
  opts.pair_fraction = 1.0;
  auto res = connect_pairs(empty, req, opts);
  CHECK(res.status == ConnectResult::Status::disproved);
  CHECK(res.witness_pair == 0);
}

TEST_CASE("reservoir consumption is bounded by seven per pair") {
  auto g = Hypergraph3::complete(20);
  ConnectRequest req;
  req.pairs = {{0, 1}, {2, 3}, {4, 5}};
  for (int v = 6; v < 20; ++v) req.reservoir.push_back(v);
  ConnectOptions opts;
  opts.pair_fraction = 1.0;
  auto res = connect_pairs(g, req, opts);
  REQUIRE(res.status == ConnectResult::Status::connected);
  std::size_t internals = 0;
  for (const auto& p : res.matching.paths) internals += p.vertices.size() - 2;
  CHECK(internals <= 7 * req.pairs.size());
}

TEST_CASE("request validation") {
  auto g = Hypergraph3::complete(8);
  ConnectRequest overlapping;
  overlapping.pairs = {{0, 1}};
  overlapping.reservoir = {1, 2};
  CHECK_THROWS_AS(connect_pairs(g, overlapping), std::invalid_argument);

  ConnectRequest toomany;
  toomany.pairs = {{0, 1}, {0, 2}, {0, 3}};  // 0 appears three times
  toomany.reservoir = {4, 5, 6, 7};
  CHECK_THROWS_AS(connect_pairs(g, toomany), std::invalid_argument);
}

TEST_CASE("auxiliary hypergraph in codegree mode") {
  auto g = Hypergraph3::complete(7);
  ConnectRequest req;
  req.pairs = {{0, 1}};
  req.reservoir = {2, 3, 4};
  auto aux = build_aux_connection_hypergraph(g, req, 2);
  CHECK(aux.ell == 2);
  CHECK(aux.edges.size() == 3);  // every reservoir vertex closes the pair

  Hypergraph3 empty(7, {});
  auto aux2 = build_aux_connection_hypergraph(empty, req, 2);
  CHECK(aux2.edges.empty());
}

TEST_CASE("auxiliary hypergraph in degree mode lists 7-sets of length-4 paths") {
  // path 0-(1)-2-(3)-4-(5)-6-(7)-8 plus reservoir noise vertex 9
  Hypergraph3 g(10, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}});
  ConnectRequest req;
  req.pairs = {{0, 8}};
  req.reservoir = {1, 2, 3, 4, 5, 6, 7, 9};
  auto aux = build_aux_connection_hypergraph(g, req, 1);
  CHECK(aux.ell == 8);
  REQUIRE(aux.edges.size() == 1);
  std::vector<int> internals;
  for (int b : aux.edges[0].bs) internals.push_back(req.reservoir[static_cast<std::size_t>(b)]);
  CHECK(internals == std::vector<int>{1, 2, 3, 4, 5, 6, 7});

  // a saturating matching in the auxiliary graph is exactly a connection
  auto sat = find_saturating_matching(aux);
  CHECK(sat.status == MatchingResult::Status::found);
}

TEST_CASE("structured mode uses the three reservoir zones") {
  auto g = Hypergraph3::complete(14);
  ConnectRequest req;
  req.pairs = {{0, 1}};
  req.reservoir = {2, 3, 4, 5, 6, 7, 8, 9, 10};  // zones {2,3,4} {5,6,7} {8,9,10}
  ConnectOptions opts;
  opts.pair_fraction = 1.0;
  opts.structured = true;
  auto res = connect_pairs(g, req, opts);
  REQUIRE(res.status == ConnectResult::Status::connected);
  const auto& p = res.matching.paths[0].vertices;
  REQUIRE(p.size() == 9);
  auto zone = [&](int v) { return v <= 4 ? 1 : (v <= 7 ? 2 : 3); };
  CHECK(zone(p[1]) == 1);
  CHECK(zone(p[2]) == 1);
  CHECK(zone(p[3]) == 2);
  CHECK(zone(p[4]) == 2);
  CHECK(zone(p[5]) == 2);
  CHECK(zone(p[6]) == 3);
  CHECK(zone(p[7]) == 3);
  CHECK(validate_connection(g, req, res.matching));
}
