#pragma once

#include <cstdint>
#include <string>

#include "parkhanoi/error.hpp"

namespace parkhanoi {

// Limits for the exhaustive routines. The defaults keep the full oracle
// suite well under a minute.
struct Budget {
  // Largest n for scans over all n^n preference vectors.
  int max_n = 7;
  // Largest n for filtering all of {0..n}^(n+1) through the ideal predicate.
  int max_n_state_filter = 4;
  // Largest (n+1)^(n+1) state space a Hanoi search may allocate (7^7).
  std::uint64_t max_states = 823'543;

  void require_n(int n, const char* what) const {
    if (n > max_n) {
      throw budget_exceeded(std::string(what) + ": n=" + std::to_string(n) +
                            " exceeds budget_n=" + std::to_string(max_n));
    }
  }
};

}  // namespace parkhanoi
