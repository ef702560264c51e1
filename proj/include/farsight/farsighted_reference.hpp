#pragma once

// Reference computation of the unique man-optimal farsightedly stable
// matching by iterated hopeless-man elimination: run deferred acceptance on
// the remaining sub-instance, permanently fix a pair whose girl received a
// single proposal, remove both, repeat n times. O(n^3); serves as the
// correctness oracle for the incremental solver.
//
// Sub-instances are represented by "still in play" masks over the original
// instance so indices stay stable for differential comparison.

#include <functional>
#include <stdexcept>
#include <vector>

#include "farsight/gale_shapley.hpp"
#include "farsight/instance.hpp"

namespace farsight {

struct ChooserPickedInvalidGirl : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One elimination round as seen by a chooser policy: the round's GS result
// plus per-girl proposal counts (girls out of play have count 0).
struct RoundView {
  const Instance& instance;
  const GsResult& gs;
  std::vector<Index> proposals_per_girl;
  const std::vector<bool>& girl_in_play;
};

// Selects a girl who received exactly one proposal in this round's GS run.
using HopelessChooser = std::function<Index(const RoundView&)>;

namespace choosers {

// The girl of the round's final proposal. Default policy.
inline Index trace_last(const RoundView& view) {
  return last_proposal(view.gs.trace).second;
}

inline Index lowest_index(const RoundView& view) {
  for (Index g = 0; g < view.instance.n(); ++g)
    if (view.girl_in_play[static_cast<std::size_t>(g)] &&
        view.proposals_per_girl[static_cast<std::size_t>(g)] == 1)
      return g;
  return UNMATCHED;
}

inline Index highest_index(const RoundView& view) {
  for (Index g = view.instance.n() - 1; g >= 0; --g)
    if (view.girl_in_play[static_cast<std::size_t>(g)] &&
        view.proposals_per_girl[static_cast<std::size_t>(g)] == 1)
      return g;
  return UNMATCHED;
}

}  // namespace choosers

inline Matching solve_farsighted_ref_with_choice(const Instance& inst,
                                                 const HopelessChooser& choose) {
  const Index n = inst.n();
  std::vector<bool> boy_in(static_cast<std::size_t>(n), true);
  std::vector<bool> girl_in(static_cast<std::size_t>(n), true);
  Matching result{std::vector<Index>(static_cast<std::size_t>(n), UNMATCHED)};

  for (Index round = 0; round < n; ++round) {
    GsResult gs = solve_gs_masked(inst, boy_in, girl_in);

    RoundView view{inst, gs,
                   std::vector<Index>(static_cast<std::size_t>(n), 0),
                   girl_in};
    for (const ProposalEvent& e : gs.trace.events)
      ++view.proposals_per_girl[static_cast<std::size_t>(e.girl)];

    Index g = choose(view);
    if (g == UNMATCHED || !girl_in[static_cast<std::size_t>(g)] ||
        view.proposals_per_girl[static_cast<std::size_t>(g)] != 1)
      throw ChooserPickedInvalidGirl("chooser selected girl " +
                                     std::to_string(g));

    // Her sole proposer is her GS partner in this round.
    Index b = UNMATCHED;
    for (Index cand = 0; cand < n; ++cand)
      if (gs.matching.match_of_boy[static_cast<std::size_t>(cand)] == g) {
        b = cand;
        break;
      }
    result.match_of_boy[static_cast<std::size_t>(b)] = g;
    boy_in[static_cast<std::size_t>(b)] = false;
    girl_in[static_cast<std::size_t>(g)] = false;
  }
  return result;
}

inline Matching solve_farsighted_ref(const Instance& inst) {
  return solve_farsighted_ref_with_choice(inst, choosers::trace_last);
}

}  // namespace farsight
