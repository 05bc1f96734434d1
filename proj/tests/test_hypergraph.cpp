#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <loosehc/hypergraph.hpp>
#include <loosehc/models.hpp>
#include <loosehc/paths.hpp>
#include <loosehc/rng.hpp>

using namespace loosehc;

namespace {

long long naive_e_triple(const Hypergraph3& g, const std::vector<int>& xs,
                         const std::vector<int>& ys, const std::vector<int>& zs) {
  long long count = 0;
  for (int x : xs)
    for (int y : ys)
      for (int z : zs)
        if (x != y && y != z && x != z && g.has_edge(x, y, z)) ++count;
  return count;
}

std::vector<int> range_vec(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace

TEST_CASE("degree operators on small graphs") {
  auto k5 = Hypergraph3::complete(5);
  CHECK(deg_set(k5, {0}) == 6);     // C(4,2)
  CHECK(deg_set(k5, {1, 3}) == 3);  // n-2

  Hypergraph3 single(5, {{0, 1, 2}});
  std::vector<int> w{3, 4};
  CHECK(deg_set(single, {0}, &w) == 0);
  std::vector<int> w2{1, 2};
  CHECK(deg_set(single, {0}, &w2) == 1);

  auto k6 = Hypergraph3::complete(6);
  CHECK(min_d_degree(k6, 1) == 10);
  CHECK(min_d_degree(k6, 2) == 4);
  Hypergraph3 empty5(5, {});
  CHECK(min_d_degree(empty5, 1) == 0);

  CHECK_THROWS_AS(deg_set(k5, {0, 9}), std::invalid_argument);
  CHECK_THROWS_AS(min_d_degree(Hypergraph3(2, {}), 1), std::invalid_argument);
}

TEST_CASE("e_triple and e_pairs") {
  Hypergraph3 g(4, {{0, 1, 2}});
  CHECK(e_triple(g, {0}, {1}, {2}) == 1);
  CHECK(e_triple(g, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}) == 6);
  CHECK(e_triple(g, {3}, {0, 1, 2}, {0, 1, 2}) == 0);

  CHECK(e_pairs(g, {{0, 1}}, {2}) == 1);
  CHECK(e_pairs(g, {{0, 1}, {0, 2}}, {1, 2}) == 2);
  CHECK(e_pairs(g, {}, {0, 1, 2, 3}) == 0);
}

TEST_CASE("neighborhoods") {
  Hypergraph3 g(5, {{0, 1, 2}});
  CHECK(neighborhood(g, 0, {1, 2}) == std::vector<int>{1, 2});
  CHECK(neighborhood(g, 0, {1, 3}) == std::vector<int>{});
  CHECK(neighborhood(g, {0, 1}, {2, 3}) == std::vector<int>{2});
  Hypergraph3 empty(4, {});
  CHECK(neighborhood(empty, 0, {1, 2, 3}).empty());
}

TEST_CASE("loose path and cycle validation") {
  Hypergraph3 g(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
  CHECK(validate_loose_path(g, LoosePath{{0, 1, 2, 3, 4}}).ok);
  CHECK(validate_loose_path(g, LoosePath{{3}}).ok);  // length zero

  auto even = validate_loose_path(g, LoosePath{{0, 1, 2, 3}});
  CHECK_FALSE(even.ok);
  CHECK(even.defect == PathDefect::even_vertex_count);

  auto dup = validate_loose_path(g, LoosePath{{0, 1, 2, 1, 4}});
  CHECK(dup.defect == PathDefect::duplicate_vertex);

  auto missing = validate_loose_path(g, LoosePath{{0, 1, 2, 5, 3}});
  CHECK(missing.defect == PathDefect::missing_edge);
  CHECK(missing.where == 1);

  CHECK(validate_loose_cycle(g, LooseCycle{{0, 1, 2, 3, 4, 5}}).ok);
  CHECK(LooseCycle{{0, 1, 2, 3, 4, 5}}.is_hamilton(g));
  CHECK(validate_loose_cycle(g, LooseCycle{{0, 1, 2, 3, 4}}).defect ==
        PathDefect::odd_vertex_count);
  CHECK(validate_loose_cycle(g, LooseCycle{{0, 1, 2, 5, 4, 3}}).defect == PathDefect::missing_edge);
}

TEST_CASE("e_triple matches the naive loop on random graphs") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto g = sample_h3np({14, 0.3, seed});
    CounterRng rng(seed, 77);
    auto xs = rng.sample_indices(14, 5);
    auto ys = rng.sample_indices(14, 7);
    auto zs = rng.sample_indices(14, 6);
    CHECK(e_triple(g, xs, ys, zs) == naive_e_triple(g, xs, ys, zs));
    // overlapping sets
    CHECK(e_triple(g, xs, xs, ys) == naive_e_triple(g, xs, xs, ys));
  }
}

TEST_CASE("pair degree equals pair neighborhood size") {
  auto g = sample_h3np({12, 0.4, 5});
  auto everything = range_vec(12);
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b) {
      std::vector<int> rest;
      for (int v = 0; v < 12; ++v)
        if (v != a && v != b) rest.push_back(v);
      CHECK(deg_set(g, {a, b}, &rest) ==
            static_cast<long long>(neighborhood(g, {a, b}, everything).size()));
    }
}

TEST_CASE("complete graph degree formulas") {
  for (int n : {6, 9, 12}) {
    auto g = Hypergraph3::complete(n);
    CHECK(min_d_degree(g, 1) == static_cast<long long>(n - 1) * (n - 2) / 2);
    CHECK(min_d_degree(g, 2) == n - 2);
  }
}

TEST_CASE("file round trips are bit exact") {
  auto g = sample_h3np({20, 0.15, 99});
  auto text = g.to_text();
  auto back = Hypergraph3::from_text(text);
  CHECK(back.to_text() == text);
  CHECK(back.edges() == g.edges());

  auto js = g.to_json();
  auto back2 = Hypergraph3::from_json(js);
  CHECK(back2.to_json() == js);
  CHECK(back2.edges() == g.edges());

  CHECK_THROWS(Hypergraph3::from_text("bogus"));
  CHECK_THROWS_AS(Hypergraph3(4, {{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph3(3, {{0, 1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph3::make_edge(1, 1, 2), std::invalid_argument);
}

TEST_CASE("load sniffs text and json files") {
  auto g = sample_h3np({15, 0.25, 8});
  g.save("/tmp/loosehc_t.txt", "text");
  g.save("/tmp/loosehc_t.json", "json");
  CHECK(Hypergraph3::load("/tmp/loosehc_t.txt").edges() == g.edges());
  CHECK(Hypergraph3::load("/tmp/loosehc_t.json").edges() == g.edges());
  CHECK_THROWS(Hypergraph3::load("/tmp/loosehc_missing_file.txt"));
  CHECK_THROWS_AS(g.save("/tmp/loosehc_t.bin", "binary"), std::invalid_argument);
}

TEST_CASE("restriction keeps only inner edges") {
  Hypergraph3 g(6, {{0, 1, 2}, {1, 2, 3}, {3, 4, 5}});
  auto r = g.restriction({0, 1, 2, 3});
  CHECK(r.edge_count() == 2);
  CHECK(r.vertex_count() == 6);
  CHECK(r.has_edge(0, 1, 2));
  CHECK_FALSE(r.has_edge(3, 4, 5));
}

TEST_CASE("pair bitmasks agree with copair lists") {
  auto g = sample_h3np({30, 0.2, 3});
  REQUIRE(g.has_pair_masks());
  for (int a = 0; a < 30; ++a)
    for (int b = a + 1; b < 30; ++b) {
      std::uint64_t mask = g.copair_mask(a, b);
      std::uint64_t rebuilt = 0;
      for (int c : g.copair(a, b)) rebuilt |= 1ULL << c;
      CHECK(mask == rebuilt);
    }
}
