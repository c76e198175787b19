#include <vector>

#include "checks.hpp"
#include "doctest.h"
#include "pmsched/errors.hpp"
#include "pmsched/graph.hpp"
#include "pmsched/priority.hpp"
#include "pmsched/regions.hpp"
#include "pmsched/rng.hpp"

using namespace pmsched;

namespace {

InterferenceGraph star8() { return generate_topology(StarTopology{8}); }
InterferenceGraph two_clique() { return generate_topology(CliqueIntersectionTopology{2, 6}); }

// hub (id 8) gets the smallest value
PriorityVector center_highest() { return PriorityVector{{2, 3, 4, 5, 6, 7, 8, 9, 1}}; }
// hub gets the largest value
PriorityVector center_lowest() { return PriorityVector{{1, 2, 3, 4, 5, 6, 7, 8, 9}}; }

}  // namespace

TEST_SUITE("regions") {

TEST_CASE("worst-case neighborhood constraint") {
  const auto g = star8();
  const RateVector uniform_half(9, 0.5);
  const auto bad = in_worst_case_region(g, uniform_half);
  CHECK_FALSE(bad.member);
  CHECK(bad.violated == std::vector<int>{8});  // hub sums to 4.5

  CHECK(in_worst_case_region(g, RateVector(9, 0.0)).member);

  const InterferenceGraph free2(2, {});
  CHECK(in_worst_case_region(free2, RateVector{1.0, 1.0}).member);

  CHECK_THROWS_AS(in_worst_case_region(g, RateVector(3, 0.1)), ValidationError);
}

TEST_CASE("priority region constraint counts only outranking neighbors") {
  const auto g = star8();
  RateVector r(9, 0.5);
  r[8] = 0.49;
  CHECK(in_priority_region(g, center_highest(), r).member);
  const auto bad = in_priority_region(g, center_lowest(), r);
  CHECK_FALSE(bad.member);
  CHECK(bad.violated == std::vector<int>{8});

  CHECK(in_priority_region(g, center_lowest(), RateVector(9, 0.0)).member);

  // equal values contribute nothing, even at full rate
  const InterferenceGraph free2(2, {});
  CHECK(in_priority_region(free2, PriorityVector{{1, 1}}, RateVector{1.0, 1.0}).member);
}

TEST_CASE("priority region works on exact rationals") {
  const auto g = two_clique();
  std::vector<Rational> r(11, Rational(49, 500));
  r[0] = Rational(1, 2);
  // hub last: its constraint is the whole-graph sum 0.5 + 10 * 0.098 > 1
  PriorityVector hub_last{{11, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}};
  const auto bad = in_priority_region(g, hub_last, r);
  CHECK_FALSE(bad.member);
  CHECK(bad.violated == std::vector<int>{0});
  // hub first: every clique constraint is exactly 0.99
  PriorityVector hub_first{{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
  CHECK(in_priority_region(g, hub_first, r).member);
}

TEST_CASE("membership is monotone and scaling-stable") {
  Rng rng(21);
  int members = 0;
  for (int it = 0; it < 60; ++it) {
    const int n = 2 + rng.uniform_int(7);
    const auto g = checks::random_graph(rng, n, 0.4);
    const auto p = checks::random_permutation_priority(rng, n);
    RateVector r = sample_capacity_region(g, rng, 0.5 + 0.5 * rng.uniform01());
    if (!in_priority_region(g, p, r).member) continue;
    ++members;
    RateVector down = r;
    for (double& v : down) v *= 0.7;
    CHECK(in_priority_region(g, p, down).member);
  }
  CHECK(members > 5);  // the loop exercised the property
}

TEST_CASE("worst-case region is contained in every priority region") {
  Rng rng(22);
  int members = 0;
  for (int it = 0; it < 200; ++it) {
    const int n = 2 + rng.uniform_int(7);
    const auto g = checks::random_graph(rng, n, 0.5);
    RateVector r(static_cast<std::size_t>(n));
    for (double& v : r) v = rng.uniform01() * 0.5;
    if (!in_worst_case_region(g, r).member) continue;
    ++members;
    const auto p = checks::random_permutation_priority(rng, n);
    CHECK(in_priority_region(g, p, r).member);
  }
  CHECK(members > 20);
}

TEST_CASE("interference degree per link") {
  const auto star = interference_degree(star8());
  CHECK(star.overall == 8);
  CHECK(star.per_link[8] == 8);
  for (int i = 0; i < 8; ++i) CHECK(star.per_link[static_cast<std::size_t>(i)] == 1);

  CHECK(interference_degree(InterferenceGraph(1, {})).overall == 1);

  const auto tc = interference_degree(two_clique());
  CHECK(tc.overall == 2);
  CHECK(tc.per_link[0] == 2);  // shared link sees one pick per clique
  for (int i = 1; i <= 10; ++i) CHECK(tc.per_link[static_cast<std::size_t>(i)] == 1);
}

TEST_CASE("prioritized degree never exceeds the plain degree") {
  const auto g = star8();
  CHECK(prioritized_interference_degree(g, center_highest()).overall == 1);
  const auto low = prioritized_interference_degree(g, center_lowest());
  CHECK(low.overall == 8);
  CHECK(low.per_link[8] == 8);

  Rng rng(23);
  for (int it = 0; it < 40; ++it) {
    const int n = 2 + rng.uniform_int(9);
    const auto gg = checks::random_graph(rng, n, 0.4);
    const auto p = checks::random_permutation_priority(rng, n);
    const auto dp = prioritized_interference_degree(gg, p);
    const auto d = interference_degree(gg);
    int top = 0;
    for (int i = 1; i < n; ++i) {
      if (p.values[static_cast<std::size_t>(i)] < p.values[static_cast<std::size_t>(top)]) top = i;
    }
    CHECK(dp.per_link[static_cast<std::size_t>(top)] == 1);
    for (int i = 0; i < n; ++i) {
      CHECK(dp.per_link[static_cast<std::size_t>(i)] <= d.per_link[static_cast<std::size_t>(i)]);
      CHECK(dp.per_link[static_cast<std::size_t>(i)] >= 1);
    }
  }
}

TEST_CASE("best-priority degree matches factorial search") {
  CHECK(min_prioritized_interference_degree(star8()).value == 1);
  CHECK(min_prioritized_interference_degree(InterferenceGraph(3, {{0, 1}, {1, 2}, {0, 2}})).value ==
        1);
  const auto tc = min_prioritized_interference_degree(two_clique());
  CHECK(tc.value == 1);
  CHECK(prioritized_interference_degree(two_clique(), tc.witness).overall == 1);

  Rng rng(24);
  for (int it = 0; it < 20; ++it) {
    const int n = 2 + rng.uniform_int(5);  // factorial reference up to 6
    const auto g = checks::random_graph(rng, n, 0.5);
    const auto exact = min_prioritized_interference_degree(g);
    CHECK(exact.value == checks::min_prioritized_degree_by_permutation(g));
    CHECK(prioritized_interference_degree(g, exact.witness).overall == exact.value);
    const auto greedy = min_prioritized_interference_degree_greedy(g);
    CHECK(greedy.value >= exact.value);
    CHECK(prioritized_interference_degree(g, greedy.witness).overall == greedy.value);
  }
}

TEST_CASE("elimination searches refuse oversized graphs") {
  InterferenceGraph big(kEliminationSearchLimit + 1, {});
  CHECK_THROWS_AS(min_prioritized_interference_degree(big), SizeLimitError);
  CHECK_THROWS_AS(in_any_priority_region(big, RateVector(13, 0.0)), SizeLimitError);
}

TEST_CASE("capacity sampling stays inside the scaled hull") {
  Rng rng(25);
  const auto g = two_clique();
  for (double scale : {1.0, 0.5, 0.05}) {
    const RateVector r = sample_capacity_region(g, rng, scale);
    REQUIRE(r.size() == 11);
    for (double v : r) {
      CHECK(v >= 0.0);
      CHECK(v <= scale + 1e-12);
    }
  }
  Rng a(7), b(7);
  CHECK(sample_capacity_region(g, a, 0.8) == sample_capacity_region(g, b, 0.8));
}

TEST_CASE("explicit independent-set mixes") {
  const auto g = star8();
  std::vector<LinkSet> sets{LinkSet{8}, LinkSet{0, 1, 2, 3, 4, 5, 6, 7}};
  std::vector<double> w{0.5, 0.5};
  const RateVector r = mix_independent_sets(g, sets, w, 1.0);
  for (double v : r) CHECK(v == doctest::Approx(0.5));

  std::vector<double> short_w{0.25, 0.25};
  CHECK_THROWS_AS(mix_independent_sets(g, sets, short_w, 1.0), ValidationError);
  std::vector<LinkSet> conflicting{LinkSet{0, 8}, LinkSet{1}};
  CHECK_THROWS_AS(mix_independent_sets(g, conflicting, w, 1.0), ValidationError);
}

TEST_CASE("some-priority membership: named cases") {
  const InterferenceGraph pair(2, {{0, 1}});
  CHECK_FALSE(in_any_priority_region(pair, RateVector{0.6, 0.6}).member);

  const auto yes = in_any_priority_region(pair, RateVector{0.2, 0.7});
  REQUIRE(yes.member);
  REQUIRE(yes.witness.has_value());
  CHECK(in_priority_region(pair, *yes.witness, RateVector{0.2, 0.7}).member);

  const auto zero = in_any_priority_region(star8(), RateVector(9, 0.0));
  CHECK(zero.member);
}

TEST_CASE("some-priority membership matches trying every permutation") {
  Rng rng(26);
  int accepted = 0;
  int rejected = 0;
  for (int it = 0; it < 60; ++it) {
    const int n = 2 + rng.uniform_int(6);  // up to 7: factorial reference
    const auto g = checks::random_graph(rng, n, 0.3 + 0.2 * rng.uniform_int(3));
    std::vector<Rational> r;
    if (it % 2 == 0) {
      r = checks::random_rational_capacity_point(g, rng, 8 + rng.uniform_int(9));
    } else {
      r = checks::random_rational_rates(rng, n);  // often infeasible
    }
    const auto fast = in_any_priority_region(g, r);
    const bool slow = checks::any_priority_accepts_by_permutation(g, r);
    CHECK(fast.member == slow);
    if (fast.member) {
      ++accepted;
      REQUIRE(fast.witness.has_value());
      CHECK(in_priority_region(g, *fast.witness, r).member);
    } else {
      ++rejected;
    }
  }
  CHECK(accepted > 5);
  CHECK(rejected > 5);
}

TEST_CASE("degree scaling pulls sampled points into the guaranteed regions") {
  Rng rng(27);
  for (int it = 0; it < 10; ++it) {
    const int n = 3 + rng.uniform_int(6);
    const auto g = checks::random_graph(rng, n, 0.4);
    const RateVector lam = sample_capacity_region(g, rng, 1.0);

    const auto p = checks::random_permutation_priority(rng, n);
    const int dp = prioritized_interference_degree(g, p).overall;
    RateVector scaled = lam;
    for (double& v : scaled) v /= dp;
    CHECK(in_priority_region(g, p, scaled).member);

    const int dsp = min_prioritized_interference_degree(g).value;
    RateVector sp = lam;
    for (double& v : sp) v /= dsp;
    CHECK(in_any_priority_region(g, sp).member);
  }
}

TEST_CASE("forests always admit a degree-1 priority") {
  Rng rng(28);
  for (int it = 0; it < 10; ++it) {
    const int n = 2 + rng.uniform_int(11);
    const auto g = generate_topology(RandomTreeTopology{n, rng.next_u64()});
    CHECK(min_prioritized_interference_degree(g).value == 1);
  }
}

}  // TEST_SUITE
