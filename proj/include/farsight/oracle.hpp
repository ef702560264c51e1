#pragma once

// Instance generation and the brute-force / differential check surface:
// exhaustive stable-matching enumeration, the two theorem properties
// (farsighted weakly dominates GS; the round-1 hopeless man keeps his GS
// partner), chooser-policy uniqueness, and linear-vs-reference equivalence.
//
// PRNG: xorshift64* with a splitmix64-mixed seed, shuffled by Fisher-Yates.
// The exact procedure is pinned so other implementations can reproduce the
// same instances from the same seeds:
//   state = splitmix64(seed ^ 0x9E3779B97F4A7C15)   (state 0 remapped to 1)
//   next(): x ^= x >> 12; x ^= x << 25; x ^= x >> 27;
//           return x * 2685821657736338717
//   shuffle(row of n): for i = n-1 down to 1: j = next() % (i+1); swap(i, j)
// Rows are shuffled in order: boy 0..n-1 then girl 0..n-1, each starting
// from the identity permutation.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "farsight/farsighted_linear.hpp"
#include "farsight/farsighted_reference.hpp"
#include "farsight/gale_shapley.hpp"
#include "farsight/instance.hpp"

namespace farsight {

struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) {
    std::uint64_t z = seed ^ 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z = z ^ (z >> 31);
    state_ = z ? z : 1;
  }
  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 2685821657736338717ull;
  }

 private:
  std::uint64_t state_;
};

inline Instance gen_random_instance(Index n, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  auto shuffled_rows = [&rng, n]() {
    std::vector<std::vector<Index>> rows(static_cast<std::size_t>(n));
    for (auto& row : rows) {
      row.resize(static_cast<std::size_t>(n));
      std::iota(row.begin(), row.end(), 0);
      for (Index i = n - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(
            rng.next() % static_cast<std::uint64_t>(i + 1));
        std::swap(row[static_cast<std::size_t>(i)], row[j]);
      }
    }
    return rows;
  };
  auto boys = shuffled_rows();
  auto girls = shuffled_rows();
  return Instance(n, std::move(boys), std::move(girls));
}

// All perfect matchings with no blocking pair, by exhaustive permutation
// enumeration. Guarded to n <= 8.
inline std::vector<Matching> enumerate_stable_matchings(const Instance& inst) {
  const Index n = inst.n();
  if (n > 8) throw TooLarge("enumeration limited to n <= 8");
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Matching> out;
  do {
    Matching m{perm};
    if (is_strictly_stable(inst, m)) out.push_back(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Every boy's own-list rank under the farsighted matching is no worse than
// under GS.
inline Verdict check_theorem1(const Instance& inst) {
  Matching gs = solve_gs(inst).matching;
  Matching far = solve_farsighted_linear(inst);
  for (Index b = 0; b < inst.n(); ++b) {
    Index rg = rank_in_boy_list(inst, b,
                                gs.match_of_boy[static_cast<std::size_t>(b)]);
    Index rf = rank_in_boy_list(inst, b,
                                far.match_of_boy[static_cast<std::size_t>(b)]);
    if (rf > rg)
      return {false, "boy " + std::to_string(b) + " worse than GS (rank " +
                         std::to_string(rf) + " vs " + std::to_string(rg) +
                         ")"};
  }
  return {};
}

// The round-1 hopeless man (proposer of the final GS proposal) keeps his
// full-instance GS partner in the farsighted matching.
inline Verdict check_theorem2(const Instance& inst) {
  GsResult gs = solve_gs(inst);
  auto [b, g] = last_proposal(gs.trace);
  Matching far = solve_farsighted_linear(inst);
  if (far.match_of_boy[static_cast<std::size_t>(b)] != g)
    return {false, "hopeless man " + std::to_string(b) + " expected girl " +
                       std::to_string(g) + ", got " +
                       std::to_string(
                           far.match_of_boy[static_cast<std::size_t>(b)])};
  return {};
}

// The reference solver under several hopeless-chooser policies and the
// linear solver all agree exactly.
inline Verdict check_uniqueness(const Instance& inst) {
  const HopelessChooser policies[] = {choosers::trace_last,
                                      choosers::lowest_index,
                                      choosers::highest_index};
  Matching base = solve_farsighted_linear(inst);
  for (std::size_t k = 0; k < std::size(policies); ++k) {
    Matching m = solve_farsighted_ref_with_choice(inst, policies[k]);
    if (!(m == base))
      return {false, "chooser policy " + std::to_string(k) +
                         " disagrees with linear solver"};
  }
  return {};
}

}  // namespace farsight
