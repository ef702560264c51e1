#include "catch_amalgamated.hpp"

#include <map>

#include "farsight/gale_shapley.hpp"
#include "farsight/oracle.hpp"
#include "fixtures.hpp"

using namespace farsight;

namespace {

// Independent man-optimality oracle: the best-for-every-boy matching among
// all strictly stable matchings found by exhaustive enumeration.
bool is_man_optimal_among(const Instance& inst, const Matching& candidate,
                          const std::vector<Matching>& stable) {
  for (const Matching& m : stable)
    for (Index b = 0; b < inst.n(); ++b)
      if (rank_in_boy_list(inst, b, candidate.match_of_boy[b]) >
          rank_in_boy_list(inst, b, m.match_of_boy[b]))
        return false;
  return true;
}

}  // namespace

TEST_CASE("seven-boy instance reproduces the published GS matching") {
  Instance inst = fixtures::load("paper_ex1.txt");
  CHECK(solve_gs(inst).matching == fixtures::ex1_gs());
}

TEST_CASE("n=1 run has a single event") {
  Instance inst(1, {{0}}, {{0}});
  GsResult gs = solve_gs(inst);
  CHECK(gs.matching.match_of_boy == std::vector<Index>{0});
  CHECK(gs.trace.events.size() == 1);
  CHECK(last_proposal(gs.trace) == std::pair<Index, Index>{0, 0});
}

TEST_CASE("GS equals the enumeration oracle's man-optimal stable matching") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    Index n = 2 + static_cast<Index>(seed % 5);  // n in 2..6
    Instance inst = gen_random_instance(n, seed);
    Matching gs = solve_gs(inst).matching;
    auto stable = enumerate_stable_matchings(inst);
    REQUIRE(!stable.empty());
    bool found = false;
    for (const Matching& m : stable)
      if (m == gs) found = true;
    CHECK(found);
    CHECK(is_man_optimal_among(inst, gs, stable));
    ++checked;
  }
  CHECK(checked >= 200);
}

TEST_CASE("trace properties over random instances") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Index n = 1 + static_cast<Index>(seed % 8);
    Instance inst = gen_random_instance(n, seed);
    GsResult gs = solve_gs(inst);

    CHECK(gs.trace.events.size() <=
          static_cast<std::size_t>(n) * static_cast<std::size_t>(n));

    // the girl of the final proposal has exactly one proposer
    auto [b_last, g_last] = last_proposal(gs.trace);
    int proposers = 0;
    for (const ProposalEvent& e : gs.trace.events)
      if (e.girl == g_last) ++proposers;
    CHECK(proposers == 1);
    CHECK(gs.matching.match_of_boy[static_cast<std::size_t>(b_last)] ==
          g_last);

    // each boy proposes strictly down his own list
    std::map<Index, Index> last_rank;
    for (const ProposalEvent& e : gs.trace.events) {
      auto it = last_rank.find(e.boy);
      Index r = rank_in_boy_list(inst, e.boy, e.girl);
      if (it != last_rank.end()) CHECK(r > it->second);
      last_rank[e.boy] = r;
    }

    // temperature: each girl's held-partner rank never worsens
    std::vector<Index> held(static_cast<std::size_t>(n), UNMATCHED);
    for (const ProposalEvent& e : gs.trace.events) {
      if (e.outcome == ProposalOutcome::Rejected) continue;
      Index prev = held[static_cast<std::size_t>(e.girl)];
      if (prev != UNMATCHED)
        CHECK(inst.girl_rank_of_boy(e.girl, e.boy) <
              inst.girl_rank_of_boy(e.girl, prev));
      if (e.outcome == ProposalOutcome::AcceptedDisplacing)
        CHECK(e.displaced == prev);
      held[static_cast<std::size_t>(e.girl)] = e.boy;
    }

    CHECK(is_strictly_stable(inst, gs.matching));
  }
}

TEST_CASE("is_strictly_stable detects blocking pairs") {
  Instance inst = fixtures::load("paper_ex1.txt");
  CHECK(is_strictly_stable(inst, fixtures::ex1_gs()));
  // the farsighted matching trades stability away
  CHECK_FALSE(is_strictly_stable(inst, fixtures::ex1_farsighted()));

  Instance tiny(2, {{0, 1}, {0, 1}}, {{0, 1}, {0, 1}});
  CHECK_FALSE(is_strictly_stable(tiny, Matching{{1, 0}}));

  CHECK_THROWS_AS(is_strictly_stable(tiny, Matching{{1, UNMATCHED}}),
                  PartialMatching);
}

TEST_CASE("last_proposal on an empty trace throws") {
  CHECK_THROWS_AS(last_proposal(ProposalTrace{}), EmptyTrace);
}

TEST_CASE("trace renders in play notation") {
  Instance inst(2, {{0, 1}, {0, 1}}, {{1, 0}, {0, 1}});
  GsResult gs = solve_gs(inst);
  CHECK(render_trace(gs.trace) == "b0->g0|b1->g0(b1)|b0->g1");
}
