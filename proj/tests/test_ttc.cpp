#include "catch_amalgamated.hpp"

#include <algorithm>

#include "farsight/farsighted_linear.hpp"
#include "farsight/oracle.hpp"
#include "farsight/ttc.hpp"
#include "fixtures.hpp"

using namespace farsight;

namespace {

// cycle equality up to rotation
bool same_cycle(const CycleReport& c, std::vector<Index> boys,
                std::vector<Index> girls) {
  if (c.boys.size() != boys.size()) return false;
  for (std::size_t shift = 0; shift < boys.size(); ++shift) {
    bool ok = true;
    for (std::size_t k = 0; k < boys.size(); ++k) {
      std::size_t j = (k + shift) % boys.size();
      if (c.boys[k] != boys[j] || c.girls[k] != girls[j]) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("seven-boy instance: first-round top cycle") {
  Instance inst = fixtures::load("paper_ex1.txt");
  auto cycles = first_top_cycle(inst);
  // the published 3-cycle: b6 takes g1, b2 takes g4, b3 takes g2
  bool found = false;
  for (const CycleReport& c : cycles)
    if (same_cycle(c, {3, 2, 6}, {2, 4, 1})) found = true;
  CHECK(found);
}

TEST_CASE("seven-boy instance: full TTC output and divergence witness") {
  Instance inst = fixtures::load("paper_ex1.txt");
  Matching ttc = solve_ttc(inst);
  // hand-executed rounds: the 3-cycle materializes, everyone else self-loops
  CHECK(ttc == Matching{{0, 6, 4, 2, 3, 5, 1}});

  Matching far = solve_farsighted_linear(inst);
  CHECK(!(ttc == far));
  std::vector<Index> differing;
  for (Index b = 0; b < 7; ++b)
    if (ttc.match_of_boy[b] != far.match_of_boy[b]) differing.push_back(b);
  CHECK(differing == std::vector<Index>{3, 5, 6});
  // boy 5 strictly better under farsighted; boys 3 and 6 under TTC
  CHECK(rank_in_boy_list(inst, 5, far.match_of_boy[5]) <
        rank_in_boy_list(inst, 5, ttc.match_of_boy[5]));
  CHECK(rank_in_boy_list(inst, 3, ttc.match_of_boy[3]) <
        rank_in_boy_list(inst, 3, far.match_of_boy[3]));
  CHECK(rank_in_boy_list(inst, 6, ttc.match_of_boy[6]) <
        rank_in_boy_list(inst, 6, far.match_of_boy[6]));
}

TEST_CASE("all-first-choice instance: n singleton cycles, TTC = GS") {
  // boy b's top girl is b, girl g's top boy is g
  const Index n = 4;
  std::vector<std::vector<Index>> boys, girls;
  for (Index i = 0; i < n; ++i) {
    std::vector<Index> row{i};
    for (Index j = 0; j < n; ++j)
      if (j != i) row.push_back(j);
    boys.push_back(row);
    girls.push_back(row);
  }
  Instance inst(n, boys, girls);
  auto cycles = first_top_cycle(inst);
  CHECK(cycles.size() == static_cast<std::size_t>(n));
  for (const CycleReport& c : cycles) CHECK(c.boys.size() == 1);
  CHECK(solve_ttc(inst) == solve_gs(inst).matching);
}

TEST_CASE("TTC weakly dominates GS; first-round cycles never hurt") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Index n = 1 + static_cast<Index>(seed % 6);
    Instance inst = gen_random_instance(n, seed);
    Matching gs = solve_gs(inst).matching;
    Matching ttc = solve_ttc(inst);
    for (Index b = 0; b < n; ++b)
      CHECK(rank_in_boy_list(inst, b, ttc.match_of_boy[b]) <=
            rank_in_boy_list(inst, b, gs.match_of_boy[b]));
    for (const CycleReport& c : first_top_cycle(inst))
      for (std::size_t k = 0; k < c.boys.size(); ++k)
        CHECK(rank_in_boy_list(inst, c.boys[k], c.girls[k]) <=
              rank_in_boy_list(inst, c.boys[k],
                               gs.match_of_boy[static_cast<std::size_t>(
                                   c.boys[k])]));
  }
}
