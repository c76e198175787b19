#include <vector>

#include "checks.hpp"
#include "doctest.h"
#include "pmsched/errors.hpp"
#include "pmsched/graph.hpp"
#include "pmsched/priority.hpp"
#include "pmsched/sched.hpp"

using namespace pmsched;

namespace {

InterferenceGraph star8() { return generate_topology(StarTopology{8}); }

long long schedule_weight(const Schedule& s, const QueueState& q) {
  long long w = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (s.selected[i]) w += q[i];
  }
  return w;
}

}  // namespace

TEST_SUITE("sched") {

TEST_CASE("scan orders") {
  CHECK(priority_scan_order(PriorityVector{{2, 1}}) == std::vector<int>{1, 0});
  CHECK(priority_scan_order(PriorityVector{{1, 1, 2}}) == std::vector<int>{0, 1, 2});
  CHECK(lqf_scan_order(QueueState{3, 5, 5}) == std::vector<int>{1, 2, 0});
  CHECK(lqf_scan_order(QueueState{0, 0}) == std::vector<int>{0, 1});
}

TEST_CASE("priority scan: hub rank decides the star") {
  const auto g = star8();
  const QueueState all_backlogged(9, 3);
  PriorityVector hub_first{{2, 2, 2, 2, 2, 2, 2, 2, 1}};
  const auto s1 = schedule_priority_maximal(g, hub_first, all_backlogged);
  CHECK(s1.members() == LinkSet{8});

  PriorityVector hub_last{{1, 1, 1, 1, 1, 1, 1, 1, 2}};
  const auto s2 = schedule_priority_maximal(g, hub_last, all_backlogged);
  CHECK(s2.members() == LinkSet{0, 1, 2, 3, 4, 5, 6, 7});

  QueueState only4(9, 0);
  only4[4] = 1;
  CHECK(schedule_priority_maximal(g, hub_first, only4).members() == LinkSet{4});

  CHECK(schedule_priority_maximal(g, hub_first, QueueState(9, 0)).members().empty());
}

TEST_CASE("longest queue first with id tie-break") {
  const InterferenceGraph pair(2, {{0, 1}});
  CHECK(schedule_lqf(pair, QueueState{5, 3}).members() == LinkSet{0});
  CHECK(schedule_lqf(pair, QueueState{3, 3}).members() == LinkSet{0});
  CHECK(schedule_lqf(pair, QueueState{3, 4}).members() == LinkSet{1});

  QueueState q(9, 1);
  q[8] = 10;
  CHECK(schedule_lqf(star8(), q).members() == LinkSet{8});
}

TEST_CASE("fixed scan order") {
  const auto g = star8();
  std::vector<int> hub_last{0, 1, 2, 3, 4, 5, 6, 7, 8};
  const auto s = schedule_fixed_maximal(g, hub_last, QueueState(9, 2));
  CHECK(s.members() == LinkSet{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(schedule_fixed_maximal(g, hub_last, QueueState(9, 0)).members().empty());
}

TEST_CASE("fixed scan matches the priority scan it realizes") {
  Rng rng(41);
  for (int it = 0; it < 50; ++it) {
    const int n = 1 + rng.uniform_int(10);
    const auto g = checks::random_graph(rng, n, 0.4);
    const auto p = checks::random_permutation_priority(rng, n);
    const auto q = checks::random_queues(rng, n, 4);
    CHECK(schedule_priority_maximal(g, p, q) ==
          schedule_fixed_maximal(g, priority_scan_order(p), q));
  }
}

TEST_CASE("every greedy schedule is independent, backlogged-only, maximal") {
  Rng rng(42);
  for (int it = 0; it < 60; ++it) {
    const int n = 1 + rng.uniform_int(10);
    const auto g = checks::random_graph(rng, n, 0.3 + 0.2 * rng.uniform_int(3));
    const auto q = checks::random_queues(rng, n, 3);
    const auto p = checks::random_permutation_priority(rng, n);
    const auto order = checks::random_id_order(rng, n);
    for (const Schedule& s : {schedule_priority_maximal(g, p, q), schedule_lqf(g, q),
                              schedule_fixed_maximal(g, order, q)}) {
      CHECK(checks::selection_valid(g, q, s));
      CHECK(checks::selection_maximal(g, q, s));
    }
  }
}

TEST_CASE("coverage guarantee holds and its checker catches violations") {
  const auto g = star8();
  const QueueState q(9, 1);
  std::vector<int> hub_first_order{8, 0, 1, 2, 3, 4, 5, 6, 7};
  const auto good = schedule_fixed_maximal(g, hub_first_order, q);
  CHECK(covers_backlogged(g, hub_first_order, q, good));

  // a lone peripheral serves nobody ranked before it: links 1..7 uncovered
  Schedule broken;
  broken.selected.assign(9, 0);
  broken.selected[0] = 1;
  CHECK_FALSE(covers_backlogged(g, hub_first_order, q, broken));

  Rng rng(43);
  for (int it = 0; it < 40; ++it) {
    const int n = 1 + rng.uniform_int(10);
    const auto gg = checks::random_graph(rng, n, 0.4);
    const auto qq = checks::random_queues(rng, n, 3);
    const auto p = checks::random_permutation_priority(rng, n);
    CHECK(covers_backlogged(gg, priority_scan_order(p), qq,
                            schedule_priority_maximal(gg, p, qq)));
    CHECK(covers_backlogged(gg, lqf_scan_order(qq), qq, schedule_lqf(gg, qq)));
    const auto order = checks::random_id_order(rng, n);
    CHECK(covers_backlogged(gg, order, qq, schedule_fixed_maximal(gg, order, qq)));
  }
}

TEST_CASE("equal-valued links never block each other") {
  // two conflict-free links share a value: both transmit
  const InterferenceGraph free2(2, {});
  const auto s = schedule_priority_maximal(free2, PriorityVector{{1, 1}}, QueueState{2, 2});
  CHECK(s.members() == LinkSet{0, 1});
}

TEST_CASE("max-weight: named instances") {
  const auto g = star8();
  QueueState q(9, 1);
  q[8] = 10;  // hub outweighs the 8 peripherals
  CHECK(schedule_max_weight(g, q).members() == LinkSet{8});
  q[8] = 7;  // now it does not
  CHECK(schedule_max_weight(g, q).members() == LinkSet{0, 1, 2, 3, 4, 5, 6, 7});

  CHECK(schedule_max_weight(g, QueueState(9, 0)).members().empty());

  const InterferenceGraph free2(2, {});
  CHECK(schedule_max_weight(free2, QueueState{2, 3}).members() == LinkSet{0, 1});

  // weight tie between {0} and {1}: lexicographically smallest indicator
  const InterferenceGraph pair(2, {{0, 1}});
  CHECK(schedule_max_weight(pair, QueueState{2, 2}).members() == LinkSet{1});

  InterferenceGraph big(kExactSearchLimit + 1, {});
  CHECK_THROWS_AS(schedule_max_weight(big, QueueState(25, 1)), SizeLimitError);
}

TEST_CASE("max-weight matches enumeration and dominates the greedy family") {
  Rng rng(44);
  for (int it = 0; it < 50; ++it) {
    const int n = 1 + rng.uniform_int(10);
    const auto g = checks::random_graph(rng, n, 0.4);
    const auto q = checks::random_queues(rng, n, 6);
    const auto mw = schedule_max_weight(g, q);
    CHECK(checks::selection_valid(g, q, mw));
    const long long best = checks::max_weight_by_enumeration(g, q);
    CHECK(schedule_weight(mw, q) == best);

    const auto p = checks::random_permutation_priority(rng, n);
    CHECK(schedule_weight(schedule_priority_maximal(g, p, q), q) <= best);
    CHECK(schedule_weight(schedule_lqf(g, q), q) <= best);
    const auto order = checks::random_id_order(rng, n);
    CHECK(schedule_weight(schedule_fixed_maximal(g, order, q), q) <= best);
  }
}

}  // TEST_SUITE
