#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <loosehc/models.hpp>
#include <loosehc/oracle.hpp>

using namespace loosehc;

namespace {
long long binom3(long long n) { return n * (n - 1) * (n - 2) / 6; }
long long binom2(long long n) { return n * (n - 1) / 2; }
}  // namespace

TEST_CASE("binomial model endpoints and determinism") {
  CHECK(sample_h3np({9, 1.0, 4}).edge_count() == static_cast<std::size_t>(binom3(9)));
  CHECK(sample_h3np({9, 0.0, 4}).edge_count() == 0);

  auto a = sample_h3np({40, 0.3, 123});
  auto b = sample_h3np({40, 0.3, 123});
  CHECK(a.to_text() == b.to_text());
  auto c = sample_h3np({40, 0.3, 124});
  CHECK(a.to_text() != c.to_text());
}

TEST_CASE("binomial model mean edge count stays within three sigma") {
  const int samples = 1000;
  const double p = 0.1;
  const double mu = p * binom3(100);
  const double sigma = std::sqrt(binom3(100) * p * (1 - p));
  double total = 0;
  for (int s = 0; s < samples; ++s)
    total += static_cast<double>(sample_h3np({100, p, static_cast<std::uint64_t>(s)}).edge_count());
  double mean = total / samples;
  CHECK(std::abs(mean - mu) <= 3 * sigma);
}

TEST_CASE("extremal construction closed forms") {
  for (int n : {8, 10, 12}) {
    auto inst = extremal_codegree(n);
    int a = extremal_blocker_size(n);
    CHECK(static_cast<int>(inst.blocker.size()) == a);
    CHECK(min_d_degree(inst.graph, 2) == a);
    CHECK(inst.graph.edge_count() ==
          static_cast<std::size_t>(binom3(n) - binom3(n - a)));
    // vertices outside A: degree = C(n-1,2) - C(n-1-a,2)
    long long expect = binom2(n - 1) - binom2(n - 1 - a);
    CHECK(deg_set(inst.graph, {n - 1}) == expect);
  }
  // n=12: |A|=2, outside degree 55-36=19
  CHECK(deg_set(extremal_degree(12).graph, {11}) == 19);
  CHECK_THROWS_AS(extremal_codegree(6), std::invalid_argument);
  CHECK_THROWS_AS(extremal_codegree(9), std::invalid_argument);
}

TEST_CASE("every extremal edge meets the blocker and n=8 has no cycle") {
  auto inst = extremal_codegree(8);
  int a = extremal_blocker_size(8);
  for (const Edge& e : inst.graph.edges()) CHECK(e[0] < a);
  CHECK_FALSE(has_loose_hc(inst.graph).yes);
  // cover bound: a loose Hamilton cycle would need n/2 edges, the blocker
  // touches at most 2|A| of them
  CHECK(2 * a < 8 / 2);
}

TEST_CASE("degree ratio drifts toward 7/16") {
  double target = 7.0 / 16.0;
  double prev_gap = 1.0;
  for (int n : {40, 80, 160}) {
    int a = extremal_blocker_size(n);
    double deg = static_cast<double>(binom2(n - 1) - binom2(n - 1 - a));
    double ratio = deg / static_cast<double>(binom2(n - 1));
    double gap = std::abs(ratio - target);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 0.07);
}

TEST_CASE("adversary pruning") {
  auto h = sample_h3np({30, 0.5, 11});

  AdversaryStrategy keep_all;
  keep_all.kind = AdversaryKind::random_thinning;
  keep_all.removal_rate = 0.0;
  keep_all.target_fraction = 0.01;
  keep_all.d = 2;
  auto same = adversary_prune(h, keep_all, 0.5, 1);
  REQUIRE(same.feasible);
  CHECK(same.graph->edges() == h.edges());

  AdversaryStrategy pattern;
  pattern.kind = AdversaryKind::extremal_pattern;
  pattern.d = 2;
  auto k12 = Hypergraph3::complete(12);
  auto carved = adversary_prune(k12, pattern, 1.0, 0);
  CHECK(carved.graph->edges() == extremal_codegree(12).graph.edges());

  AdversaryStrategy thin;
  thin.kind = AdversaryKind::random_thinning;
  thin.removal_rate = 0.5;
  thin.target_fraction = 0.3;
  thin.d = 2;
  auto res = adversary_prune(sample_h3np({60, 0.5, 7}), thin, 0.5, 21);
  if (res.feasible) {
    CHECK(min_d_degree(*res.graph, 2) >= res.floor_value);
    // spanning subgraph of the input
    auto host = sample_h3np({60, 0.5, 7});
    for (const Edge& e : res.graph->edges()) CHECK(host.has_edge(e));
  }
}

TEST_CASE("custom mask pruning keeps exactly the intersection") {
  auto h = sample_h3np({15, 0.5, 2});
  AdversaryStrategy mask;
  mask.kind = AdversaryKind::custom_mask;
  mask.d = 1;
  mask.keep_mask = {h.edge(0), h.edge(2), Hypergraph3::make_edge(0, 1, 2)};
  auto res = adversary_prune(h, mask, 0.5, 0);
  REQUIRE(res.feasible);
  for (const Edge& e : res.graph->edges()) {
    CHECK(h.has_edge(e));
    CHECK(std::find(mask.keep_mask.begin(), mask.keep_mask.end(), e) != mask.keep_mask.end());
  }
  CHECK(res.graph->edge_count() >= 2);
}

TEST_CASE("varying size sets checker flags planted dense spots") {
  // concentrated bundle: every triple meeting {0,1} on 40 vertices
  std::vector<Edge> edges;
  for (int b = 2; b < 40; ++b)
    for (int c = b + 1; c < 40; ++c) {
      edges.push_back({0, b, c});
      edges.push_back({1, b, c});
    }
  Hypergraph3 lumpy(40, edges);
  ConcentrationParams params;
  params.lemma = LemmaId::varying_size_sets;
  params.p = 0.02;  // pretend density: the bundle is far above it
  params.gamma = 0.5;
  params.lambda = 0.2;
  params.trials = 60;
  params.seed = 6;
  auto rep = check_concentration(lumpy, params);
  CHECK(rep.violations > 0);
  bool witnessed = false;
  for (const auto& rec : rep.details)
    if (rec.violated) {
      REQUIRE(rec.witness_sets.size() == 2);
      CHECK(static_cast<long long>(rec.witness_sets[0].size()) == rec.sizes[0]);
      witnessed = true;
    }
  CHECK(witnessed);

  Hypergraph3 empty(40, {});
  params.seed = 7;
  CHECK(check_concentration(empty, params).violations == 0);
}

TEST_CASE("checker reports replay byte-identically") {
  auto h = sample_h3np({60, 0.2, 13});
  ConcentrationParams params;
  params.lemma = LemmaId::general_edge;
  params.p = 0.2;
  params.trials = 25;
  params.seed = 99;
  params.sizes = SizePolicy::explicit_range(15, 40);
  auto a = check_concentration(h, params);
  auto b = check_concentration(h, params);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_csv() == b.to_csv());
}

TEST_CASE("extremal instance at n=14 is still exhaustively cycle-free") {
  auto inst = extremal_codegree(14);
  CHECK(min_d_degree(inst.graph, 2) == extremal_blocker_size(14));
  auto res = has_loose_hc(inst.graph);
  CHECK(res.exhaustive);
  CHECK_FALSE(res.yes);
}

TEST_CASE("prune reports infeasible floors explicitly") {
  Hypergraph3 sparse(12, {{0, 1, 2}});
  AdversaryStrategy thin;
  thin.kind = AdversaryKind::random_thinning;
  thin.removal_rate = 0.2;
  thin.target_fraction = 0.9;
  thin.d = 1;
  auto res = adversary_prune(sparse, thin, 1.0, 3);
  CHECK_FALSE(res.feasible);
  CHECK_FALSE(res.graph.has_value());
}

TEST_CASE("concentration checkers on exact hosts") {
  auto complete = Hypergraph3::complete(30);
  ConcentrationParams params;
  params.lemma = LemmaId::general_edge;
  params.p = 1.0;
  params.epsilon = 0.2;
  params.trials = 60;
  params.seed = 5;
  params.sizes = SizePolicy::explicit_range(5, 30);
  auto rep = check_concentration(complete, params);
  CHECK(rep.trials_run == 60);
  CHECK(rep.violations == 0);

  Hypergraph3 empty(30, {});
  params.p = 0.5;
  auto rep2 = check_concentration(empty, params);
  CHECK(rep2.violations == 0);

  params.lemma = LemmaId::one_edge;
  params.sub_regime = 2;
  auto rep3 = check_concentration(empty, params);
  CHECK(rep3.violations == 0);

  params.lemma = LemmaId::two_edge;
  auto rep4 = check_concentration(empty, params);
  CHECK(rep4.violations == 0);
}

TEST_CASE("default regimes at small n report skips, not passes") {
  auto h = sample_h3np({60, 0.05, 9});
  ConcentrationParams params;
  params.lemma = LemmaId::one_edge;
  params.sub_regime = 2;
  params.p = 0.05;
  params.epsilon = 0.1;
  params.trials = 10;
  params.sizes = SizePolicy::asymptotic();
  auto rep = check_concentration(h, params);
  CHECK(rep.regime_skipped);
  CHECK(rep.trials_run == 0);
  CHECK_FALSE(rep.skip_reason.empty());
}

TEST_CASE("upper uniformity checker") {
  Hypergraph3 empty(40, {});
  auto rep = check_upper_uniform(empty, 0.2, 1.5, 0.3, 50, 1);
  CHECK(rep.violations == 0);

  auto complete = Hypergraph3::complete(30);
  auto rep2 = check_upper_uniform(complete, 0.2, 2.0, 1.0, 50, 2);
  CHECK(rep2.violations == 0);

  auto h = sample_h3np({150, 0.1, 17});
  auto rep3 = check_upper_uniform(h, 0.2, 1.5, 0.1, 200, 3);
  CHECK(rep3.trials_run == 200);
  CHECK(rep3.violations == 0);
}

TEST_CASE("report serialization shapes") {
  auto h = sample_h3np({40, 0.2, 2});
  ConcentrationParams params;
  params.lemma = LemmaId::general_edge;
  params.p = 0.2;
  params.trials = 5;
  params.sizes = SizePolicy::explicit_range(10, 30);
  auto rep = check_concentration(h, params);
  auto js = rep.to_json();
  CHECK(js.find("\"lemma_id\":\"general_edge\"") != std::string::npos);
  auto csv = rep.to_csv();
  CHECK(csv.rfind("lemma_id,trial,sizes,observed,bound,violated\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + 5 rows
}
