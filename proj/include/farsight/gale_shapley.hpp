#pragma once

// Man-proposing deferred acceptance with a full ordered proposal trace.
// Among currently free boys, the lowest-index one proposes next; the outcome
// matching is order-independent but the trace is deterministic under this
// rule.

#include <functional>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "farsight/instance.hpp"

namespace farsight {

struct EmptyTrace : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PartialMatching : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ProposalOutcome { AcceptedNew, AcceptedDisplacing, Rejected };

struct ProposalEvent {
  Index boy;
  Index girl;
  ProposalOutcome outcome;
  Index displaced;  // valid only for AcceptedDisplacing

  bool operator==(const ProposalEvent&) const = default;
};

struct ProposalTrace {
  std::vector<ProposalEvent> events;
};

struct GsResult {
  Matching matching;
  ProposalTrace trace;
};

// Deferred acceptance restricted to the boys/girls flagged in the masks.
// Boys propose down their lists skipping masked-out girls. Used directly by
// the round-based reference solver; the full-instance entry point below
// passes all-true masks.
inline GsResult solve_gs_masked(const Instance& inst,
                                const std::vector<bool>& boy_in,
                                const std::vector<bool>& girl_in) {
  const Index n = inst.n();
  Matching m{std::vector<Index>(static_cast<std::size_t>(n), UNMATCHED)};
  std::vector<Index> holder(static_cast<std::size_t>(n), UNMATCHED);
  std::vector<Index> next_choice(static_cast<std::size_t>(n), 0);
  ProposalTrace trace;

  // Each in-play boy's list, compressed to the in-play girls, so the
  // proposal loop below runs on the sub-instance with no skip checks.
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<Index> lists(un * un);
  for (Index b = 0; b < n; ++b) {
    if (!boy_in[static_cast<std::size_t>(b)]) continue;
    std::size_t len = 0;
    for (Index g : inst.boy_prefs()[static_cast<std::size_t>(b)])
      if (girl_in[static_cast<std::size_t>(g)])
        lists[static_cast<std::size_t>(b) * un + len++] = g;
  }

  // Lowest-index free boy proposes next; boys enter the heap once at start
  // and again each time they are displaced.
  std::priority_queue<Index, std::vector<Index>, std::greater<Index>> free;
  for (Index b = n - 1; b >= 0; --b)
    if (boy_in[static_cast<std::size_t>(b)]) free.push(b);

  while (!free.empty()) {
    Index b = free.top();
    free.pop();
    Index g = lists[static_cast<std::size_t>(b) * un +
                    static_cast<std::size_t>(
                        next_choice[static_cast<std::size_t>(b)])];
    ++next_choice[static_cast<std::size_t>(b)];

    Index cur = holder[static_cast<std::size_t>(g)];
    if (cur == UNMATCHED) {
      holder[static_cast<std::size_t>(g)] = b;
      m.match_of_boy[static_cast<std::size_t>(b)] = g;
      trace.events.push_back({b, g, ProposalOutcome::AcceptedNew, UNMATCHED});
    } else if (inst.girl_rank_of_boy(g, b) < inst.girl_rank_of_boy(g, cur)) {
      holder[static_cast<std::size_t>(g)] = b;
      m.match_of_boy[static_cast<std::size_t>(b)] = g;
      m.match_of_boy[static_cast<std::size_t>(cur)] = UNMATCHED;
      trace.events.push_back({b, g, ProposalOutcome::AcceptedDisplacing, cur});
      free.push(cur);
    } else {
      trace.events.push_back({b, g, ProposalOutcome::Rejected, UNMATCHED});
      free.push(b);
    }
  }
  return {std::move(m), std::move(trace)};
}

inline GsResult solve_gs(const Instance& inst) {
  std::vector<bool> all(static_cast<std::size_t>(inst.n()), true);
  return solve_gs_masked(inst, all, all);
}

// The (boy, girl) of the final trace event. That girl received exactly one
// proposal in the whole run, which makes her proposer a hopeless-man witness.
inline std::pair<Index, Index> last_proposal(const ProposalTrace& trace) {
  if (trace.events.empty()) throw EmptyTrace("trace has no events");
  const ProposalEvent& e = trace.events.back();
  return {e.boy, e.girl};
}

// True iff no boy-girl pair each prefer the other over their assigned
// partners. Checked over all n^2 pairs.
inline bool is_strictly_stable(const Instance& inst, const Matching& m) {
  const Index n = inst.n();
  if (!m.is_perfect()) throw PartialMatching("matching is not perfect");
  std::vector<Index> partner_of_girl(static_cast<std::size_t>(n), UNMATCHED);
  for (Index b = 0; b < n; ++b)
    partner_of_girl[static_cast<std::size_t>(
        m.match_of_boy[static_cast<std::size_t>(b)])] = b;
  for (Index b = 0; b < n; ++b) {
    Index gb = m.match_of_boy[static_cast<std::size_t>(b)];
    for (Index g = 0; g < n; ++g) {
      if (g == gb) continue;
      bool boy_prefers =
          inst.boy_rank_of_girl(b, g) < inst.boy_rank_of_girl(b, gb);
      Index bg = partner_of_girl[static_cast<std::size_t>(g)];
      bool girl_prefers =
          inst.girl_rank_of_boy(g, b) < inst.girl_rank_of_boy(g, bg);
      if (boy_prefers && girl_prefers) return false;
    }
  }
  return true;
}

// Play rendering: "b0->g2|b1->g2(b1)|..." with the winner shown in
// parentheses when a proposal displaced a prior holder. Display-only.
inline std::string render_trace(const ProposalTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const ProposalEvent& e = trace.events[i];
    if (i) out << '|';
    out << 'b' << e.boy << "->g" << e.girl;
    if (e.outcome == ProposalOutcome::AcceptedDisplacing)
      out << "(b" << e.boy << ')';
  }
  return out.str();
}

}  // namespace farsight
