#pragma once

// Incremental computation of the man-optimal farsightedly stable matching in
// O(n^2) total work (linear in the size of the preference input). Instead of
// re-running deferred acceptance after each hopeless-man elimination, the
// solver keeps the live proposal set and repairs it by materializing trading
// cycles that cannot be legitimately vetoed.
//
// All rank arithmetic is in best-first order: smaller rank = better. The
// proposal set of a boy is always a prefix of his list ending at
// index_of_boy[b]; a girl's in-play proposers are tracked by the ranks of her
// best (top) and second-best (second) ones.
//
// The depth-first cycle walk is iterative with an explicit stack. State
// invariants on every consultation of the successor map:
//   (i)   each in-play boy is the best in-play proposer at his index girl
//   (ii)  his successor prefers that girl over his own index girl
//   (iii) his successor is her second-best in-play proposer

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "farsight/gale_shapley.hpp"
#include "farsight/instance.hpp"

namespace farsight {

struct NoHopelessGirl : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BoyNotInPlay : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StateAuditFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr Index EMPTY = -1;

enum class Seen : std::uint8_t { Unvisited = 0, OnStack = 1, Done = 2 };

enum class WalkOutcome { DeadEnd, Progressed };

// Deterministic work counters; the quadratic bound shows up as
// removals <= initial_proposals <= n^2 and per-girl second-scan <= n.
struct SolveStats {
  std::size_t initial_proposals = 0;
  std::size_t removals = 0;
  std::size_t second_scan_steps = 0;
  std::size_t cycle_materializations = 0;
  std::vector<std::size_t> second_scan_per_girl;
};

class SolverState {
 public:
  explicit SolverState(const Instance& inst, bool audit = false)
      : inst_(inst),
        n_(inst.n()),
        exists_(static_cast<std::size_t>(n_),
                std::vector<bool>(static_cast<std::size_t>(n_), false)),
        index_of_boy_(static_cast<std::size_t>(n_), EMPTY),
        top_of_girl_(static_cast<std::size_t>(n_), EMPTY),
        second_of_girl_(static_cast<std::size_t>(n_), EMPTY),
        num_proposals_(static_cast<std::size_t>(n_), 0),
        seen_(static_cast<std::size_t>(n_), Seen::Unvisited),
        in_play_(static_cast<std::size_t>(n_), true),
        index_girl_(static_cast<std::size_t>(n_), EMPTY),
        top_boy_(static_cast<std::size_t>(n_), EMPTY),
        second_boy_(static_cast<std::size_t>(n_), EMPTY),
        pos_on_stack_(static_cast<std::size_t>(n_), 0),
        result_{std::vector<Index>(static_cast<std::size_t>(n_), UNMATCHED)},
        audit_(audit) {
    stats_.second_scan_per_girl.assign(static_cast<std::size_t>(n_), 0);
    seed();
  }

  const Instance& instance() const { return inst_; }
  Index n() const { return n_; }
  bool exists(Index b, Index g) const {
    return exists_[static_cast<std::size_t>(b)][static_cast<std::size_t>(g)];
  }
  Index index_of_boy(Index b) const {
    return index_of_boy_[static_cast<std::size_t>(b)];
  }
  Index top_of_girl(Index g) const {
    return top_of_girl_[static_cast<std::size_t>(g)];
  }
  Index second_of_girl(Index g) const {
    return second_of_girl_[static_cast<std::size_t>(g)];
  }
  Index num_proposals(Index g) const {
    return num_proposals_[static_cast<std::size_t>(g)];
  }
  Seen seen(Index b) const { return seen_[static_cast<std::size_t>(b)]; }
  bool in_play(Index b) const { return in_play_[static_cast<std::size_t>(b)]; }
  const Matching& result() const { return result_; }
  const SolveStats& stats() const { return stats_; }

  // Girl at the worst end of b's in-play proposal prefix. Cached in an
  // n-sized array so the cycle walk stays out of the n^2 preference tables.
  Index index_girl(Index b) const {
    return index_girl_[static_cast<std::size_t>(b)];
  }

  // Successor in the trading-cycle graph: the second-best in-play proposer
  // of b's index girl, or EMPTY when she has no second proposer.
  Index successor(Index b) const {
    Index g = index_girl(b);
    if (second_of_girl(g) == EMPTY) return EMPTY;
    return second_boy_[static_cast<std::size_t>(g)];
  }

  // Removes b's proposals strictly less preferred than stop_girl, walking
  // from index_of_boy[b] toward better choices. stop_girl == EMPTY removes
  // everything. The stop proposal itself is kept and index_of_boy rests
  // there.
  void eliminate_proposals_by_boy(Index b, Index stop_girl) {
    if (index_of_boy(b) == EMPTY && stop_girl != EMPTY)
      throw BoyNotInPlay("boy " + std::to_string(b) + " has no proposals");
    while (index_of_boy_[static_cast<std::size_t>(b)] >= 0) {
      Index g = index_girl(b);
      if (g == stop_girl) break;
      remove_proposal(b, g);
      Index idx = --index_of_boy_[static_cast<std::size_t>(b)];
      index_girl_[static_cast<std::size_t>(b)] =
          idx < 0 ? EMPTY
                  : inst_.boy_prefs()[static_cast<std::size_t>(b)]
                                     [static_cast<std::size_t>(idx)];
    }
    if (audit_) audit_state();
  }

  // Depth-first walk over the successor map starting at b. Detected cycles
  // are materialized immediately (every member acquires his predecessor's
  // girl) and the walk resumes from the cycle's parent; cycle members are
  // re-marked Unvisited so they are re-explored against the updated graph.
  // Returns DeadEnd when the path ends in a boy with no successor or in
  // already-explored territory; Progressed when a cycle involving the walk
  // root was materialized and the root must be revisited.
  WalkOutcome find_and_eliminate_trading_cycles(Index start_boy) {
    // Reused buffers: pos_on_stack entries are only read for OnStack boys,
    // whose positions were recorded earlier in this same walk, so stale
    // entries from previous walks are never consulted.
    std::vector<Index>& stack = walk_stack_;
    std::vector<std::size_t>& pos_on_stack = pos_on_stack_;
    stack.clear();
    stack.push_back(start_boy);
    mark(start_boy, Seen::OnStack);
    pos_on_stack[static_cast<std::size_t>(start_boy)] = 0;

    while (!stack.empty()) {
      Index b = stack.back();
      Index next = successor(b);

      if (next == EMPTY || seen(next) == Seen::Done) {
        for (Index x : stack) mark(x, Seen::Done);
        return WalkOutcome::DeadEnd;
      }

      if (seen(next) == Seen::OnStack) {
        materialize_cycle(stack, pos_on_stack[static_cast<std::size_t>(next)]);
        if (stack.empty()) return WalkOutcome::Progressed;
        continue;  // resume from the cycle's parent
      }

      pos_on_stack[static_cast<std::size_t>(next)] = stack.size();
      stack.push_back(next);
      mark(next, Seen::OnStack);
    }
    return WalkOutcome::Progressed;
  }

  // One elimination round: fix the sole proposer of a single-proposal girl,
  // drop his proposals, then exhaust the cycle walk over in-play boys.
  void run_round() {
    Index g1 = EMPTY;
    for (Index g = 0; g < n_; ++g)
      if (num_proposals(g) == 1) {
        g1 = g;
        break;
      }
    if (g1 == EMPTY)
      throw NoHopelessGirl("no girl with exactly one in-play proposal");

    Index b1 = top_boy_[static_cast<std::size_t>(g1)];
    result_.match_of_boy[static_cast<std::size_t>(b1)] = g1;
    in_play_[static_cast<std::size_t>(b1)] = false;
    eliminate_proposals_by_boy(b1, EMPTY);

    for (Index b = 0; b < n_; ++b)
      if (in_play(b)) seen_[static_cast<std::size_t>(b)] = Seen::Unvisited;
    for (Index b = 0; b < n_; ++b)
      while (in_play(b) && seen(b) == Seen::Unvisited)
        find_and_eliminate_trading_cycles(b);
  }

  Matching solve() {
    for (Index round = 0; round < n_; ++round) run_round();
    return result_;
  }

  // Recomputes top/second/num for every girl from the exists table and
  // compares against the maintained values (including the boy caches and
  // per-boy index girls). Test/audit path only.
  void audit_state() const {
    for (Index b = 0; b < n_; ++b) {
      Index idx = index_of_boy(b);
      Index expect = idx < 0 ? EMPTY
                             : inst_.boy_prefs()[static_cast<std::size_t>(b)]
                                                [static_cast<std::size_t>(idx)];
      if (idx >= 0 && index_girl_[static_cast<std::size_t>(b)] != expect)
        throw StateAuditFailure("boy " + std::to_string(b) +
                                ": cached index girl out of sync");
    }
    for (Index g = 0; g < n_; ++g) {
      Index top = EMPTY, second = EMPTY, count = 0;
      for (Index r = 0; r < n_; ++r) {
        Index b = inst_.girl_prefs()[static_cast<std::size_t>(g)]
                                    [static_cast<std::size_t>(r)];
        if (!exists(b, g)) continue;
        ++count;
        if (top == EMPTY)
          top = r;
        else if (second == EMPTY)
          second = r;
      }
      Index top_b = top == EMPTY
                        ? EMPTY
                        : inst_.girl_prefs()[static_cast<std::size_t>(g)]
                                            [static_cast<std::size_t>(top)];
      Index second_b =
          second == EMPTY
              ? EMPTY
              : inst_.girl_prefs()[static_cast<std::size_t>(g)]
                                  [static_cast<std::size_t>(second)];
      if (top_b != top_boy_[static_cast<std::size_t>(g)] ||
          second_b != second_boy_[static_cast<std::size_t>(g)])
        throw StateAuditFailure("girl " + std::to_string(g) +
                                ": cached proposer boys out of sync");
      if (top != top_of_girl(g) || second != second_of_girl(g) ||
          count != num_proposals(g))
        throw StateAuditFailure(
            "girl " + std::to_string(g) + ": maintained (top=" +
            std::to_string(top_of_girl(g)) + ", second=" +
            std::to_string(second_of_girl(g)) + ", num=" +
            std::to_string(num_proposals(g)) + ") vs recomputed (top=" +
            std::to_string(top) + ", second=" + std::to_string(second) +
            ", num=" + std::to_string(count) + ")");
    }
  }

  // A materialized cycle is veto-proof: no in-play boy outside it both
  // prefers a cycle girl over his own index girl and outranks her new
  // partner in her list. Test/audit path only.
  void audit_veto_proof(const std::vector<Index>& cycle_boys,
                        const std::vector<Index>& new_girls) const {
    for (Index z = 0; z < n_; ++z) {
      if (!in_play(z) || index_of_boy(z) == EMPTY) continue;
      bool on_cycle = false;
      for (Index cb : cycle_boys)
        if (cb == z) on_cycle = true;
      if (on_cycle) continue;
      for (std::size_t k = 0; k < cycle_boys.size(); ++k) {
        Index g = new_girls[k];
        bool prefers = inst_.boy_rank_of_girl(z, g) <
                       inst_.boy_rank_of_girl(z, index_girl(z));
        bool outranks = inst_.girl_rank_of_boy(g, z) <
                        inst_.girl_rank_of_boy(g, cycle_boys[k]);
        if (prefers && outranks)
          throw StateAuditFailure("boy " + std::to_string(z) +
                                  " can veto girl " + std::to_string(g));
      }
    }
  }

 private:
  // Populates the state from a full deferred-acceptance run: exists holds
  // every proposal ever made, each boy's index rests at his GS partner, and
  // top/second are the true best and second-best in-play ranks per girl.
  void seed() {
    GsResult gs = solve_gs(inst_);
    for (const ProposalEvent& e : gs.trace.events) {
      exists_[static_cast<std::size_t>(e.boy)]
             [static_cast<std::size_t>(e.girl)] = true;
      ++index_of_boy_[static_cast<std::size_t>(e.boy)];
      ++num_proposals_[static_cast<std::size_t>(e.girl)];
    }
    stats_.initial_proposals = gs.trace.events.size();
    for (Index b = 0; b < n_; ++b) {
      Index idx = index_of_boy(b);
      if (idx >= 0)
        index_girl_[static_cast<std::size_t>(b)] =
            inst_.boy_prefs()[static_cast<std::size_t>(b)]
                             [static_cast<std::size_t>(idx)];
    }
    for (Index g = 0; g < n_; ++g) {
      for (Index r = 0; r < n_; ++r) {
        Index b = inst_.girl_prefs()[static_cast<std::size_t>(g)]
                                    [static_cast<std::size_t>(r)];
        if (!exists(b, g)) continue;
        if (top_of_girl(g) == EMPTY) {
          top_of_girl_[static_cast<std::size_t>(g)] = r;
          top_boy_[static_cast<std::size_t>(g)] = b;
        } else {
          second_of_girl_[static_cast<std::size_t>(g)] = r;
          second_boy_[static_cast<std::size_t>(g)] = b;
          break;
        }
      }
    }
    if (audit_) audit_state();
  }

  void mark(Index b, Seen s) { seen_[static_cast<std::size_t>(b)] = s; }

  void remove_proposal(Index b, Index g) {
    exists_[static_cast<std::size_t>(b)][static_cast<std::size_t>(g)] = false;
    --num_proposals_[static_cast<std::size_t>(g)];
    ++stats_.removals;

    Index rb = inst_.girl_rank_of_boy(g, b);
    if (top_of_girl(g) == rb) {
      top_of_girl_[static_cast<std::size_t>(g)] = second_of_girl(g);
      top_boy_[static_cast<std::size_t>(g)] =
          second_boy_[static_cast<std::size_t>(g)];
      second_of_girl_[static_cast<std::size_t>(g)] =
          second_of_girl(g) == EMPTY ? EMPTY : second_of_girl(g) + 1;
    }
    // Advance second past removed proposals toward worse ranks.
    if (second_of_girl(g) != EMPTY) {
      Index r = second_of_girl(g);
      Index sb = EMPTY;
      while (r < n_) {
        sb = inst_.girl_prefs()[static_cast<std::size_t>(g)]
                               [static_cast<std::size_t>(r)];
        if (exists(sb, g)) break;
        ++r;
        ++stats_.second_scan_steps;
        ++stats_.second_scan_per_girl[static_cast<std::size_t>(g)];
      }
      second_of_girl_[static_cast<std::size_t>(g)] = r == n_ ? EMPTY : r;
      second_boy_[static_cast<std::size_t>(g)] = r == n_ ? EMPTY : sb;
    }
  }

  // stack[head_pos..end] form the cycle, closed by the edge from stack.back()
  // to stack[head_pos]. Every member acquires his predecessor's girl; members
  // are popped and re-marked Unvisited so the walk resumes from the parent.
  void materialize_cycle(std::vector<Index>& stack, std::size_t head_pos) {
    Index head = stack[head_pos];
    Index head_new_girl = index_girl(stack.back());

    std::vector<Index> cycle_boys, new_girls;
    // Unwind from the deepest member toward the head, mirroring the order in
    // which a recursive walk would fold back.
    for (std::size_t j = stack.size() - 1; j > head_pos; --j) {
      Index acquired = index_girl(stack[j - 1]);
      eliminate_proposals_by_boy(stack[j], acquired);
      cycle_boys.push_back(stack[j]);
      new_girls.push_back(acquired);
    }
    eliminate_proposals_by_boy(head, head_new_girl);
    cycle_boys.push_back(head);
    new_girls.push_back(head_new_girl);
    ++stats_.cycle_materializations;

    if (audit_) audit_veto_proof(cycle_boys, new_girls);

    while (stack.size() > head_pos) {
      mark(stack.back(), Seen::Unvisited);
      stack.pop_back();
    }
  }

  const Instance& inst_;
  Index n_;
  std::vector<std::vector<bool>> exists_;
  std::vector<Index> index_of_boy_;
  std::vector<Index> top_of_girl_;
  std::vector<Index> second_of_girl_;
  std::vector<Index> num_proposals_;
  std::vector<Seen> seen_;
  std::vector<bool> in_play_;
  // O(n)-sized caches of table lookups, kept in sync with the rank state so
  // the per-round walks never read the n^2 preference tables.
  std::vector<Index> index_girl_;
  std::vector<Index> top_boy_;
  std::vector<Index> second_boy_;
  std::vector<Index> walk_stack_;
  std::vector<std::size_t> pos_on_stack_;
  Matching result_;
  bool audit_;
  SolveStats stats_;
};

inline Matching solve_farsighted_linear(const Instance& inst,
                                        bool audit = false,
                                        SolveStats* stats_out = nullptr) {
  SolverState state(inst, audit);
  Matching m = state.solve();
  if (stats_out) *stats_out = state.stats();
  return m;
}

}  // namespace farsight
