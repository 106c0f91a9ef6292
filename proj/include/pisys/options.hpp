#pragma once

#include "pisys/gcm.hpp"
#include "pisys/roots.hpp"

#include <cstddef>

namespace pisys {

class FiniteMultTable;

// Limits and knobs shared by the enumerating operations.
struct Options {
  int rank_cap = kDefaultRankCap;
  // partial assignments visited by a backtracking search
  std::size_t node_budget = 1'000'000;
  std::size_t root_budget = kDefaultRootBudget;
  unsigned threads = 1;
  // finite_mult is recomputed live up to this rank of the ambient finite
  // diagram; above it only the table can answer
  int finite_live_cap = 12;
  const FiniteMultTable* table = nullptr;
};

}  // namespace pisys
