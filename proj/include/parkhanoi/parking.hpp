#pragma once

/**
 * @file parking.hpp
 * @brief Parking on a one-way street of n spots.
 *
 * Car i drives to its preferred spot a_i and takes the first free spot at or
 * after it. The preference vector is a parking function when every car finds
 * a spot. Cars and spots are 1-indexed in every public interface.
 */

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "parkhanoi/error.hpp"

namespace parkhanoi {

class PreferenceVector {
public:
  PreferenceVector() = default;

  // Throws validation_error unless prefs is non-empty with entries in [1, n].
  explicit PreferenceVector(std::vector<int> prefs) : prefs_(std::move(prefs)) {
    if (prefs_.empty()) {
      throw validation_error("preference vector must have at least one car");
    }
    const int n = size();
    for (std::size_t i = 0; i < prefs_.size(); ++i) {
      if (prefs_[i] < 1 || prefs_[i] > n) {
        throw validation_error("preference of car " + std::to_string(i + 1) + " is " +
                               std::to_string(prefs_[i]) + ", outside [1, " +
                               std::to_string(n) + "]");
      }
    }
  }

  int size() const noexcept { return static_cast<int>(prefs_.size()); }

  // Preferred spot of car `car` (1-indexed).
  int preference(int car) const { return prefs_.at(static_cast<std::size_t>(car - 1)); }

  std::span<const int> values() const noexcept { return prefs_; }

  friend bool operator==(const PreferenceVector&, const PreferenceVector&) = default;
  friend auto operator<=>(const PreferenceVector&, const PreferenceVector&) = default;

private:
  std::vector<int> prefs_;
};

struct ParkingOutcome {
  std::vector<int> assignment;     // spot of car i, empty on failure
  std::vector<int> displacements;  // k_i = assignment[i] - a_i
  int total_displacement = 0;
  int lucky_count = 0;
  std::optional<int> failed_car;   // first car that found no spot

  bool parked() const noexcept { return !failed_car.has_value(); }
};

inline ParkingOutcome park(const PreferenceVector& alpha) {
  const int n = alpha.size();
  std::vector<bool> occupied(static_cast<std::size_t>(n) + 1, false);
  ParkingOutcome out;
  out.assignment.reserve(static_cast<std::size_t>(n));
  out.displacements.reserve(static_cast<std::size_t>(n));

  for (int car = 1; car <= n; ++car) {
    const int wanted = alpha.preference(car);
    int spot = wanted;
    while (spot <= n && occupied[static_cast<std::size_t>(spot)]) ++spot;
    if (spot > n) {
      return ParkingOutcome{{}, {}, 0, 0, car};
    }
    occupied[static_cast<std::size_t>(spot)] = true;
    out.assignment.push_back(spot);
    out.displacements.push_back(spot - wanted);
    out.total_displacement += spot - wanted;
    if (spot == wanted) ++out.lucky_count;
  }
  return out;
}

// The i-th smallest preference is at most i.
inline bool satisfies_sorted_criterion(const PreferenceVector& alpha) {
  std::vector<int> sorted(alpha.values().begin(), alpha.values().end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] > static_cast<int>(i) + 1) return false;
  }
  return true;
}

inline bool is_parking_function(const PreferenceVector& alpha) {
  const bool parked = park(alpha).parked();
  assert(parked == satisfies_sorted_criterion(alpha));
  return parked;
}

inline int displacement(const PreferenceVector& alpha) {
  const ParkingOutcome out = park(alpha);
  if (!out.parked()) {
    throw domain_error("displacement is undefined: car " + std::to_string(*out.failed_car) +
                       " cannot park");
  }
  return out.total_displacement;
}

inline bool is_permutation_vector(const PreferenceVector& alpha) {
  std::vector<bool> seen(static_cast<std::size_t>(alpha.size()) + 1, false);
  for (int a : alpha.values()) {
    if (seen[static_cast<std::size_t>(a)]) return false;
    seen[static_cast<std::size_t>(a)] = true;
  }
  return true;
}

/// Structural description of a displacement-one parking function: the value
/// j in [1, n-1] preferred by exactly two cars k < k2, with every other car
/// preferring a distinct spot outside {j, j+1}.
struct DisplacementOneWitness {
  int repeated = 0;   // j
  int first_car = 0;  // k, 1-indexed
  int second_car = 0; // k', 1-indexed
};

/// Result of checking the two structural conditions. `violated` is empty when
/// both hold, otherwise the number (1 or 2) of the first condition that
/// fails; `reason` describes the failure.
struct DisplacementOneCheck {
  std::optional<int> violated;
  std::string reason;
  DisplacementOneWitness witness;

  explicit operator bool() const noexcept { return !violated.has_value(); }
};

/// Decides membership in PF_n(1) from the entries alone, without parking.
///
/// Condition 1: some j in [1, n-1] is preferred by exactly two cars.
/// Condition 2: the other n-2 preferences are exactly [n] \ {j, j+1}.
inline DisplacementOneCheck check_displacement_one(const PreferenceVector& alpha) {
  const int n = alpha.size();
  std::vector<int> count(static_cast<std::size_t>(n) + 2, 0);
  for (int a : alpha.values()) ++count[static_cast<std::size_t>(a)];

  DisplacementOneCheck check;
  int j = 0;
  for (int v = 1; v <= n - 1; ++v) {
    if (count[static_cast<std::size_t>(v)] == 2) {
      j = v;
      break;
    }
  }
  if (j == 0) {
    check.violated = 1;
    check.reason = "no spot in [1, n-1] is preferred by exactly two cars";
    return check;
  }

  for (int v = 1; v <= n; ++v) {
    const int c = count[static_cast<std::size_t>(v)];
    const bool ok = (v == j) || (v == j + 1 ? c == 0 : c == 1);
    if (!ok) {
      check.violated = 2;
      check.reason = "remaining preferences are not exactly [n] \\ {" + std::to_string(j) +
                     ", " + std::to_string(j + 1) + "} (spot " + std::to_string(v) +
                     " preferred " + std::to_string(c) + " times)";
      return check;
    }
  }

  check.witness.repeated = j;
  for (int car = 1; car <= n; ++car) {
    if (alpha.preference(car) != j) continue;
    if (check.witness.first_car == 0) {
      check.witness.first_car = car;
    } else {
      check.witness.second_car = car;
    }
  }
  return check;
}

inline bool is_displacement_one_characterized(const PreferenceVector& alpha) {
  return static_cast<bool>(check_displacement_one(alpha));
}

}  // namespace parkhanoi
