#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include "farsight/instance.hpp"

namespace fixtures {

inline farsight::Instance load(const std::string& name) {
  std::string path = std::string(FARSIGHT_DATA_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  return farsight::parse_instance(in, /*allow_partial=*/true);
}

// Published matchings for the seven-boy instance, 0-indexed.
inline farsight::Matching ex1_gs() { return {{0, 6, 2, 1, 3, 5, 4}}; }
inline farsight::Matching ex1_farsighted() { return {{0, 6, 4, 1, 3, 2, 5}}; }

// Six-boy lying instance, truthful lists.
inline farsight::Matching ex2_truthful_farsighted() {
  return {{0, 4, 3, 1, 2, 5}};
}

}  // namespace fixtures
