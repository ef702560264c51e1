#pragma once

// Top-trading-cycles improvement over the deferred-acceptance matching.
// Starting from the GS outcome, each unfixed boy points at the current
// holder of his most-preferred unfixed girl; every cycle in this functional
// graph (self-loops included) is materialized simultaneously and its pairs
// fixed. Veto-checking is deliberately absent here.

#include <stdexcept>
#include <vector>

#include "farsight/gale_shapley.hpp"
#include "farsight/instance.hpp"

namespace farsight {

// A trading cycle: boys[k] acquires girls[k] (held before materialization by
// boys[(k+1) % size]). A singleton cycle is a boy keeping his own girl.
struct CycleReport {
  std::vector<Index> boys;
  std::vector<Index> girls;
};

namespace detail {

// Cycles of the round-1 pointing graph plus the pointing map itself.
inline std::vector<CycleReport> round_cycles(const Instance& inst,
                                             const Matching& current,
                                             const std::vector<bool>& fixed_boy,
                                             const std::vector<bool>& fixed_girl) {
  const Index n = inst.n();
  std::vector<Index> wants(static_cast<std::size_t>(n), UNMATCHED);
  std::vector<Index> holder(static_cast<std::size_t>(n), UNMATCHED);
  for (Index b = 0; b < n; ++b)
    if (!fixed_boy[static_cast<std::size_t>(b)])
      holder[static_cast<std::size_t>(
          current.match_of_boy[static_cast<std::size_t>(b)])] = b;

  std::vector<Index> points_to(static_cast<std::size_t>(n), UNMATCHED);
  for (Index b = 0; b < n; ++b) {
    if (fixed_boy[static_cast<std::size_t>(b)]) continue;
    for (Index g : inst.boy_prefs()[static_cast<std::size_t>(b)]) {
      if (fixed_girl[static_cast<std::size_t>(g)]) continue;
      wants[static_cast<std::size_t>(b)] = g;
      points_to[static_cast<std::size_t>(b)] =
          holder[static_cast<std::size_t>(g)];
      break;
    }
  }

  // Every node of a functional graph on a finite set reaches a cycle; a node
  // is on a cycle iff following the map from it returns to it.
  std::vector<CycleReport> cycles;
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0/1/2
  for (Index b = 0; b < n; ++b) {
    if (fixed_boy[static_cast<std::size_t>(b)] ||
        state[static_cast<std::size_t>(b)] != 0)
      continue;
    std::vector<Index> path;
    Index x = b;
    while (state[static_cast<std::size_t>(x)] == 0) {
      state[static_cast<std::size_t>(x)] = 1;
      path.push_back(x);
      x = points_to[static_cast<std::size_t>(x)];
    }
    if (state[static_cast<std::size_t>(x)] == 1) {
      CycleReport c;
      std::size_t start = 0;
      while (path[start] != x) ++start;
      for (std::size_t k = start; k < path.size(); ++k) {
        c.boys.push_back(path[k]);
        c.girls.push_back(wants[static_cast<std::size_t>(path[k])]);
      }
      cycles.push_back(std::move(c));
    }
    for (Index y : path) state[static_cast<std::size_t>(y)] = 2;
  }
  return cycles;
}

}  // namespace detail

// All cycles of the first TTC round over the GS matching; for an instance
// where GS already gives every boy his first choice this is n singletons.
inline std::vector<CycleReport> first_top_cycle(const Instance& inst) {
  const Index n = inst.n();
  Matching gs = solve_gs(inst).matching;
  std::vector<bool> none(static_cast<std::size_t>(n), false);
  return detail::round_cycles(inst, gs, none, none);
}

inline Matching solve_ttc(const Instance& inst) {
  const Index n = inst.n();
  Matching current = solve_gs(inst).matching;
  std::vector<bool> fixed_boy(static_cast<std::size_t>(n), false);
  std::vector<bool> fixed_girl(static_cast<std::size_t>(n), false);

  Index fixed_count = 0;
  while (fixed_count < n) {
    auto cycles = detail::round_cycles(inst, current, fixed_boy, fixed_girl);
    for (const CycleReport& c : cycles) {
      for (std::size_t k = 0; k < c.boys.size(); ++k) {
        current.match_of_boy[static_cast<std::size_t>(c.boys[k])] = c.girls[k];
        fixed_boy[static_cast<std::size_t>(c.boys[k])] = true;
        fixed_girl[static_cast<std::size_t>(c.girls[k])] = true;
        ++fixed_count;
      }
    }
  }
  return current;
}

}  // namespace farsight
