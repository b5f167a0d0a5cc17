#pragma once

/**
 * @file enumeration.hpp
 * @brief Exhaustive and constructive enumerators, closed-form counts, and the
 * count-comparison harness.
 *
 * The for_each_* functions stream in lexicographic order and hold one vector
 * at a time; the enumerate_* wrappers collect the stream.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "parkhanoi/budget.hpp"
#include "parkhanoi/hanoi.hpp"
#include "parkhanoi/parking.hpp"

namespace parkhanoi {

using big_int = boost::multiprecision::cpp_int;

// Every vector in [n]^n, lexicographically.
template <class Visitor>
void for_each_preference_vector(int n, Visitor&& visit) {
  if (n < 1) throw validation_error("n must be positive, got " + std::to_string(n));
  std::vector<int> prefs(static_cast<std::size_t>(n), 1);
  for (;;) {
    visit(PreferenceVector(prefs));
    int i = n - 1;
    while (i >= 0 && prefs[static_cast<std::size_t>(i)] == n) {
      prefs[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) return;
    ++prefs[static_cast<std::size_t>(i)];
  }
}

template <class Visitor>
void for_each_parking_function(int n, Visitor&& visit, const Budget& budget = {}) {
  budget.require_n(n, "parking function enumeration");
  for_each_preference_vector(n, [&](const PreferenceVector& a) {
    if (is_parking_function(a)) visit(a);
  });
}

// Parking functions with total displacement exactly d; empty past n(n-1)/2.
template <class Visitor>
void for_each_pf_displacement(int n, int d, Visitor&& visit, const Budget& budget = {}) {
  if (d < 0) throw validation_error("displacement must be non-negative");
  budget.require_n(n, "displacement enumeration");
  for_each_preference_vector(n, [&](const PreferenceVector& a) {
    const ParkingOutcome out = park(a);
    if (out.parked() && out.total_displacement == d) visit(a);
  });
}

inline std::vector<PreferenceVector> enumerate_pf(int n, const Budget& budget = {}) {
  std::vector<PreferenceVector> out;
  for_each_parking_function(n, [&](const PreferenceVector& a) { out.push_back(a); }, budget);
  return out;
}

inline std::vector<PreferenceVector> enumerate_pf_displacement(int n, int d,
                                                               const Budget& budget = {}) {
  std::vector<PreferenceVector> out;
  for_each_pf_displacement(n, d, [&](const PreferenceVector& a) { out.push_back(a); }, budget);
  return out;
}

/// PF_n(1) built from its structure rather than by parking: pick the
/// repeated spot j in [1, n-1], the two cars k < k' that prefer it, and an
/// arrangement of [n] \ {j, j+1} over the other cars. Sorted.
inline std::vector<PreferenceVector> pf_displacement_one_constructive(int n) {
  if (n < 1) throw validation_error("n must be positive, got " + std::to_string(n));
  std::vector<PreferenceVector> out;
  for (int j = 1; j <= n - 1; ++j) {
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v) {
      if (v != j && v != j + 1) rest.push_back(v);
    }
    for (int k = 0; k < n; ++k) {
      for (int k2 = k + 1; k2 < n; ++k2) {
        std::vector<int> perm = rest;
        do {
          std::vector<int> prefs(static_cast<std::size_t>(n));
          auto it = perm.begin();
          for (int car = 0; car < n; ++car) {
            prefs[static_cast<std::size_t>(car)] = (car == k || car == k2) ? j : *it++;
          }
          out.emplace_back(std::move(prefs));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// n! (n-1) / 2: the number of ideal states of the (n+1)x(n+1) game, equally of
// PF_n(1).
inline big_int lah_count(int n) {
  if (n < 1) throw validation_error("n must be positive, got " + std::to_string(n));
  big_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f * (n - 1) / 2;
}

// (n+1)^(n-1): the number of parking functions of length n.
inline big_int cayley_count(int n) {
  if (n < 1) throw validation_error("n must be positive, got " + std::to_string(n));
  return boost::multiprecision::pow(big_int(n + 1), static_cast<unsigned>(n - 1));
}

// Filters all of {0..n}^(n+1) through is_ideal_state.
inline std::uint64_t count_ideal_states_by_filter(int n, const Budget& budget = {}) {
  require_game_size(n);
  if (n > budget.max_n_state_filter) {
    throw budget_exceeded("ideal-state filter: n=" + std::to_string(n) +
                          " exceeds its budget of " + std::to_string(budget.max_n_state_filter));
  }
  std::uint64_t count = 0;
  std::vector<int> pegs(static_cast<std::size_t>(n) + 1, 0);
  for (;;) {
    if (is_ideal_state(HanoiState(pegs))) ++count;
    int i = n;
    while (i >= 0 && pegs[static_cast<std::size_t>(i)] == n) {
      pegs[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return count;
    ++pegs[static_cast<std::size_t>(i)];
  }
}

enum class Statistic { all_pf, pf_by_displacement, ideal_states };

struct CountReport {
  int n = 0;
  Statistic statistic = Statistic::all_pf;
  int displacement = 0;  // meaningful for pf_by_displacement
  big_int closed_form;
  std::optional<std::uint64_t> brute_force;  // absent when past budget
  std::optional<bool> match;                 // absent iff brute_force is

  std::string statistic_name() const {
    switch (statistic) {
      case Statistic::all_pf:
        return "all_pf";
      case Statistic::pf_by_displacement:
        return "pf_by_displacement(" + std::to_string(displacement) + ")";
      case Statistic::ideal_states:
        return "ideal_states";
    }
    return {};
  }

  void set_brute_force(std::uint64_t value) {
    brute_force = value;
    match = closed_form == value;
  }
};

/// Compares |PF_n|, |PF_n(1)| and |TH_{n+1}| against their closed forms.
/// The parking counts scan [n]^n; the ideal-state count filters
/// {0..n}^(n+1) up to Budget::max_n_state_filter and uses the constructive
/// enumerator beyond it. A statistic past its budget keeps only the closed
/// form. For n = 1 the ideal-state set is empty by convention.
inline std::vector<CountReport> brute_force_counts(int n, const Budget& budget = {}) {
  if (n < 1) throw validation_error("n must be positive, got " + std::to_string(n));
  std::vector<CountReport> reports(3);
  reports[0].statistic = Statistic::all_pf;
  reports[0].closed_form = cayley_count(n);
  reports[1].statistic = Statistic::pf_by_displacement;
  reports[1].displacement = 1;
  reports[1].closed_form = lah_count(n);
  reports[2].statistic = Statistic::ideal_states;
  reports[2].closed_form = lah_count(n);
  for (auto& r : reports) r.n = n;

  if (n <= budget.max_n) {
    std::uint64_t all = 0;
    std::uint64_t one = 0;
    for_each_preference_vector(n, [&](const PreferenceVector& a) {
      const ParkingOutcome out = park(a);
      if (!out.parked()) return;
      ++all;
      if (out.total_displacement == 1) ++one;
    });
    reports[0].set_brute_force(all);
    reports[1].set_brute_force(one);
  }

  if (n == 1) {
    reports[2].set_brute_force(0);
  } else if (n <= budget.max_n_state_filter) {
    reports[2].set_brute_force(count_ideal_states_by_filter(n, budget));
  } else if (reports[2].closed_form <= budget.max_states) {
    std::uint64_t count = 0;
    for_each_ideal_state(n, [&](const HanoiState&) { ++count; });
    reports[2].set_brute_force(count);
  }
  return reports;
}

}  // namespace parkhanoi
