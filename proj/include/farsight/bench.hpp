#pragma once

// Scaling harness for the complexity claims. Wall time is noisy, so the
// primary signal lives in the deterministic work counters (SolveStats); this
// module provides the median-time sweep and its CSV rendering.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "farsight/farsighted_linear.hpp"
#include "farsight/farsighted_reference.hpp"
#include "farsight/gale_shapley.hpp"
#include "farsight/oracle.hpp"
#include "farsight/ttc.hpp"

namespace farsight {

enum class Algorithm { Gs, FarsightedRef, FarsightedLinear, Ttc };

inline const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Gs: return "gs";
    case Algorithm::FarsightedRef: return "farsighted-ref";
    case Algorithm::FarsightedLinear: return "farsighted-linear";
    case Algorithm::Ttc: return "ttc";
  }
  return "?";
}

inline Matching run_algorithm(Algorithm a, const Instance& inst) {
  switch (a) {
    case Algorithm::Gs: return solve_gs(inst).matching;
    case Algorithm::FarsightedRef: return solve_farsighted_ref(inst);
    case Algorithm::FarsightedLinear: return solve_farsighted_linear(inst);
    case Algorithm::Ttc: return solve_ttc(inst);
  }
  throw std::logic_error("unknown algorithm");
}

struct ScalingRow {
  std::string algorithm;
  Index n;
  std::uint64_t median_ns;
  double ratio_to_prev;  // NaN-free: < 0 means "no previous row"
};

// Median wall time per (algorithm, n) over `repeats` runs, one fresh seeded
// instance per repeat. Rows come back in the order of n_values.
inline std::vector<ScalingRow> run_scaling(Algorithm algo,
                                           const std::vector<Index>& n_values,
                                           int repeats, std::uint64_t seed) {
  std::vector<ScalingRow> rows;
  for (Index n : n_values) {
    std::vector<std::uint64_t> times;
    for (int r = 0; r < repeats; ++r) {
      Instance inst = gen_random_instance(
          n, seed + static_cast<std::uint64_t>(r) * 1000003u +
                 static_cast<std::uint64_t>(n));
      auto t0 = std::chrono::steady_clock::now();
      Matching m = run_algorithm(algo, inst);
      auto t1 = std::chrono::steady_clock::now();
      if (!m.is_perfect()) throw std::logic_error("imperfect matching");
      times.push_back(static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
              .count()));
    }
    std::sort(times.begin(), times.end());
    std::uint64_t median = times[times.size() / 2];
    double ratio = rows.empty()
                       ? -1.0
                       : static_cast<double>(median) /
                             static_cast<double>(rows.back().median_ns);
    rows.push_back({algorithm_name(algo), n, median, ratio});
  }
  return rows;
}

inline void write_scaling_csv(const std::vector<ScalingRow>& rows,
                              std::ostream& out) {
  out << "algorithm,n,median_ns,ratio_to_prev\n";
  for (const ScalingRow& r : rows) {
    out << r.algorithm << ',' << r.n << ',' << r.median_ns << ',';
    if (r.ratio_to_prev >= 0.0) out << r.ratio_to_prev;
    out << '\n';
  }
}

}  // namespace farsight
