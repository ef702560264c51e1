#pragma once

// Stable Marriage instance model: complete strict preference profiles for n
// boys and n girls, plus the text format used by the CLI and test fixtures.
//
// Conventions used throughout the library:
//   - all indices are 0-based
//   - preference rows are stored best-first (rank 0 = most preferred)
//   - girl_rank_of_boy caches the inverse of girl_prefs for O(1) comparisons

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace farsight {

using Index = std::int32_t;

// Distinguished "no partner" value for Matching entries.
inline constexpr Index UNMATCHED = -1;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DuplicateEntry : ParseError {
  using ParseError::ParseError;
};
struct OutOfRange : ParseError {
  using ParseError::ParseError;
};
struct ShapeMismatch : ParseError {
  using ParseError::ParseError;
};
struct IncompleteWithoutFlag : ParseError {
  using ParseError::ParseError;
};

// Boy -> girl assignment; entries may be UNMATCHED while under construction.
struct Matching {
  std::vector<Index> match_of_boy;

  bool is_perfect() const {
    for (Index g : match_of_boy)
      if (g == UNMATCHED) return false;
    return true;
  }
  bool operator==(const Matching&) const = default;
};

// Extends each partial row to a full permutation of 0..n-1 by appending the
// missing indices in ascending numeric order. Idempotent on complete rows.
inline std::vector<std::vector<Index>> complete_partial_lists(
    const std::vector<std::vector<Index>>& rows, Index n) {
  std::vector<std::vector<Index>> out;
  out.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Index> row;
    row.reserve(static_cast<std::size_t>(n));
    for (Index v : rows[r]) {
      if (v < 0 || v >= n)
        throw OutOfRange("row " + std::to_string(r) + ": index " +
                         std::to_string(v) + " out of range for n=" +
                         std::to_string(n));
      if (seen[static_cast<std::size_t>(v)])
        throw DuplicateEntry("row " + std::to_string(r) + ": index " +
                             std::to_string(v) + " repeated");
      seen[static_cast<std::size_t>(v)] = true;
      row.push_back(v);
    }
    for (Index v = 0; v < n; ++v)
      if (!seen[static_cast<std::size_t>(v)]) row.push_back(v);
    out.push_back(std::move(row));
  }
  return out;
}

class Instance {
 public:
  Instance(Index n, std::vector<std::vector<Index>> boy_prefs,
           std::vector<std::vector<Index>> girl_prefs)
      : n_(n),
        boy_prefs_(std::move(boy_prefs)),
        girl_prefs_(std::move(girl_prefs)) {
    validate();
    build_rank_tables();
  }

  Index n() const { return n_; }
  const std::vector<std::vector<Index>>& boy_prefs() const {
    return boy_prefs_;
  }
  const std::vector<std::vector<Index>>& girl_prefs() const {
    return girl_prefs_;
  }

  // Position of boy b in girl g's list (0 = she likes him best).
  Index girl_rank_of_boy(Index g, Index b) const {
    return girl_rank_[static_cast<std::size_t>(g)][static_cast<std::size_t>(b)];
  }
  // Position of girl g in boy b's list.
  Index boy_rank_of_girl(Index b, Index g) const {
    return boy_rank_[static_cast<std::size_t>(b)][static_cast<std::size_t>(g)];
  }

 private:
  void validate() const {
    if (n_ <= 0) throw ShapeMismatch("n must be positive");
    auto check_side = [this](const std::vector<std::vector<Index>>& rows,
                             const char* side) {
      if (rows.size() != static_cast<std::size_t>(n_))
        throw ShapeMismatch(std::string(side) + ": expected " +
                            std::to_string(n_) + " rows, got " +
                            std::to_string(rows.size()));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != static_cast<std::size_t>(n_))
          throw ShapeMismatch(std::string(side) + " row " + std::to_string(r) +
                              ": expected " + std::to_string(n_) + " entries");
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        for (Index v : rows[r]) {
          if (v < 0 || v >= n_)
            throw OutOfRange(std::string(side) + " row " + std::to_string(r) +
                             ": index " + std::to_string(v) + " out of range");
          if (seen[static_cast<std::size_t>(v)])
            throw DuplicateEntry(std::string(side) + " row " +
                                 std::to_string(r) + ": index " +
                                 std::to_string(v) + " repeated");
          seen[static_cast<std::size_t>(v)] = true;
        }
      }
    };
    check_side(boy_prefs_, "boys");
    check_side(girl_prefs_, "girls");
  }

  void build_rank_tables() {
    auto invert = [this](const std::vector<std::vector<Index>>& rows) {
      std::vector<std::vector<Index>> inv(
          static_cast<std::size_t>(n_),
          std::vector<Index>(static_cast<std::size_t>(n_), 0));
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t k = 0; k < rows[r].size(); ++k)
          inv[r][static_cast<std::size_t>(rows[r][k])] =
              static_cast<Index>(k);
      return inv;
    };
    girl_rank_ = invert(girl_prefs_);
    boy_rank_ = invert(boy_prefs_);
  }

  Index n_;
  std::vector<std::vector<Index>> boy_prefs_;
  std::vector<std::vector<Index>> girl_prefs_;
  std::vector<std::vector<Index>> girl_rank_;
  std::vector<std::vector<Index>> boy_rank_;
};

inline Index rank_in_boy_list(const Instance& inst, Index b, Index g) {
  return inst.boy_rank_of_girl(b, g);
}

// Text format:
//   - lines starting with '#' are comments, blank lines are ignored
//   - first data line: n
//   - n boy rows then n girl rows, space-separated indices, best first
//   - a row consisting of a single '-' denotes an empty partial row
inline Instance parse_instance(std::istream& in, bool allow_partial = false) {
  std::vector<std::string> data_lines;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    data_lines.push_back(line);
  }
  if (data_lines.empty()) throw ShapeMismatch("empty input");

  Index n;
  {
    std::istringstream ss(data_lines[0]);
    long long v;
    if (!(ss >> v)) throw ShapeMismatch("first line must be n");
    n = static_cast<Index>(v);
  }
  if (n <= 0) throw ShapeMismatch("n must be positive");
  if (data_lines.size() != 1 + 2 * static_cast<std::size_t>(n))
    throw ShapeMismatch("expected " + std::to_string(2 * n) +
                        " preference rows, got " +
                        std::to_string(data_lines.size() - 1));

  auto parse_row = [](const std::string& text) {
    std::vector<Index> row;
    std::istringstream ss(text);
    std::string tok;
    while (ss >> tok) {
      if (tok == "-") continue;  // explicit empty-row marker
      std::size_t pos = 0;
      long long v;
      try {
        v = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        throw ShapeMismatch("bad token '" + tok + "'");
      }
      if (pos != tok.size()) throw ShapeMismatch("bad token '" + tok + "'");
      row.push_back(static_cast<Index>(v));
    }
    return row;
  };

  std::vector<std::vector<Index>> boys, girls;
  for (Index i = 0; i < n; ++i)
    boys.push_back(parse_row(data_lines[1 + static_cast<std::size_t>(i)]));
  for (Index i = 0; i < n; ++i)
    girls.push_back(
        parse_row(data_lines[1 + static_cast<std::size_t>(n + i)]));

  auto is_complete = [n](const std::vector<std::vector<Index>>& rows) {
    for (const auto& r : rows)
      if (r.size() != static_cast<std::size_t>(n)) return false;
    return true;
  };
  if (!allow_partial && (!is_complete(boys) || !is_complete(girls)))
    throw IncompleteWithoutFlag(
        "partial preference rows require allow_partial");

  return Instance(n, complete_partial_lists(boys, n),
                  complete_partial_lists(girls, n));
}

inline Instance parse_instance(const std::string& text,
                               bool allow_partial = false) {
  std::istringstream ss(text);
  return parse_instance(ss, allow_partial);
}

inline std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << inst.n() << '\n';
  auto emit = [&out](const std::vector<std::vector<Index>>& rows) {
    for (const auto& row : rows) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (k) out << ' ';
        out << row[k];
      }
      out << '\n';
    }
  };
  emit(inst.boy_prefs());
  emit(inst.girl_prefs());
  return out.str();
}

}  // namespace farsight
