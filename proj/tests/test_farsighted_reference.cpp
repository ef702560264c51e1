#include "catch_amalgamated.hpp"

#include <set>

#include "farsight/farsighted_linear.hpp"
#include "farsight/farsighted_reference.hpp"
#include "farsight/oracle.hpp"
#include "fixtures.hpp"

using namespace farsight;

TEST_CASE("seven-boy instance: published farsighted matching") {
  Instance inst = fixtures::load("paper_ex1.txt");
  CHECK(solve_farsighted_ref(inst) == fixtures::ex1_farsighted());
}

TEST_CASE("six-boy truthful instance: published farsighted matching") {
  Instance inst = fixtures::load("paper_ex2_truthful.txt");
  CHECK(solve_farsighted_ref(inst) == fixtures::ex2_truthful_farsighted());
}

// The published outcome for the swapped-list variant is not reproducible by
// the elimination algorithms (see the acceptance suite); here we pin the
// facts that are forced by the instance itself.
TEST_CASE("six-boy swapped-list instance: forced structure") {
  Instance inst = fixtures::load("paper_ex2_lied.txt");
  Matching far = solve_farsighted_ref(inst);
  CHECK(far == solve_farsighted_linear(inst));
  CHECK(check_theorem1(inst).pass);
  // boy 3 is girl 2's top choice and ranks her second, so he can never end
  // up below her
  CHECK(rank_in_boy_list(inst, 3, far.match_of_boy[3]) <= 1);
}

TEST_CASE("n=1 under any chooser") {
  Instance inst(1, {{0}}, {{0}});
  CHECK(solve_farsighted_ref(inst).match_of_boy == std::vector<Index>{0});
  CHECK(solve_farsighted_ref_with_choice(inst, choosers::lowest_index)
            .match_of_boy == std::vector<Index>{0});
  CHECK(solve_farsighted_ref_with_choice(inst, choosers::highest_index)
            .match_of_boy == std::vector<Index>{0});
}

TEST_CASE("chooser policy does not change the outcome on the seven-boy instance") {
  Instance inst = fixtures::load("paper_ex1.txt");
  Matching base = solve_farsighted_ref(inst);
  CHECK(solve_farsighted_ref_with_choice(inst, choosers::lowest_index) == base);
  CHECK(solve_farsighted_ref_with_choice(inst, choosers::highest_index) ==
        base);
}

TEST_CASE("a chooser picking a multi-proposal girl is rejected") {
  Instance inst = fixtures::load("paper_ex1.txt");
  // girl 2 receives several proposals in the first GS run
  auto bad = [](const RoundView&) -> Index { return 2; };
  CHECK_THROWS_AS(solve_farsighted_ref_with_choice(inst, bad),
                  ChooserPickedInvalidGirl);
}

TEST_CASE("theorem 1: farsighted weakly dominates GS for every boy") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Index n = 1 + static_cast<Index>(seed % 10);
    Instance inst = gen_random_instance(n, seed);
    Matching gs = solve_gs(inst).matching;
    Matching far = solve_farsighted_ref(inst);
    for (Index b = 0; b < n; ++b)
      CHECK(rank_in_boy_list(inst, b, far.match_of_boy[b]) <=
            rank_in_boy_list(inst, b, gs.match_of_boy[b]));
  }
}

TEST_CASE("theorem 2: the round-1 hopeless man keeps his GS partner") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Index n = 1 + static_cast<Index>(seed % 10);
    Instance inst = gen_random_instance(n, seed);
    GsResult gs = solve_gs(inst);
    auto [b, g] = last_proposal(gs.trace);
    CHECK(solve_farsighted_ref(inst).match_of_boy[static_cast<std::size_t>(
              b)] == g);
  }
}

TEST_CASE("uniqueness: all chooser policies and the linear solver agree") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Index n = 1 + static_cast<Index>(seed % 8);
    Instance inst = gen_random_instance(n, seed);
    CHECK(check_uniqueness(inst).pass);
  }
}

TEST_CASE("round structure: n rounds, proposal sets contract") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Index n = 2 + static_cast<Index>(seed % 7);
    Instance inst = gen_random_instance(n, seed);

    // mirror the elimination loop by hand to observe each round's GS run
    std::vector<bool> boy_in(static_cast<std::size_t>(n), true);
    std::vector<bool> girl_in(static_cast<std::size_t>(n), true);
    std::set<std::pair<Index, Index>> prev_proposals;
    int rounds = 0;
    while (true) {
      bool any = false;
      for (bool x : boy_in) any = any || x;
      if (!any) break;
      GsResult gs = solve_gs_masked(inst, boy_in, girl_in);
      std::set<std::pair<Index, Index>> proposals;
      for (const ProposalEvent& e : gs.trace.events)
        proposals.insert({e.boy, e.girl});
      if (rounds > 0) {
        // subset of the previous round's proposals restricted to remaining
        for (const auto& p : proposals)
          CHECK(prev_proposals.count(p) == 1);
      }
      prev_proposals = std::move(proposals);
      auto [b, g] = last_proposal(gs.trace);
      boy_in[static_cast<std::size_t>(b)] = false;
      girl_in[static_cast<std::size_t>(g)] = false;
      ++rounds;
    }
    CHECK(rounds == n);
  }
}
