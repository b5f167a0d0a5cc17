#pragma once

// The map between ideal Hanoi states and displacement-one parking functions.
//
// Forward: drop x_n = 0 and shift every peg label above the doubled peg j up
// by one, so a_{i+1} = x_i + 1 if x_i > j, else x_i. The interior pegs
// [n-1] \ {j} land on [n] \ {j, j+1}. The inverse shifts preferences above
// j+1 back down; j+1 itself never occurs.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "parkhanoi/budget.hpp"
#include "parkhanoi/enumeration.hpp"
#include "parkhanoi/hanoi.hpp"
#include "parkhanoi/parking.hpp"

namespace parkhanoi {

struct BijectionRecord {
  int n = 0;
  HanoiState ideal;
  PreferenceVector pf;
  int doubled_value = 0;
};

inline PreferenceVector th_to_pf(const HanoiState& x) {
  const IdealCheck check = check_ideal_state(x);
  if (!check) {
    throw domain_error("not an ideal state: condition " + std::to_string(*check.violated) +
                           " failed: " + check.reason,
                       *check.violated);
  }
  const int n = x.largest_disk();
  const int j = check.witness.doubled_peg;
  std::vector<int> prefs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int peg = x.peg_of(i);
    prefs[static_cast<std::size_t>(i)] = peg > j ? peg + 1 : peg;
  }
  return PreferenceVector(std::move(prefs));
}

inline HanoiState pf_to_th(const PreferenceVector& alpha) {
  const DisplacementOneCheck check = check_displacement_one(alpha);
  if (!check) {
    throw domain_error("not a displacement-one parking function: condition " +
                           std::to_string(*check.violated) + " failed: " + check.reason,
                       *check.violated);
  }
  const int n = alpha.size();
  const int j = check.witness.repeated;
  std::vector<int> pegs(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    const int a = alpha.preference(i + 1);
    pegs[static_cast<std::size_t>(i)] = a > j + 1 ? a - 1 : a;
  }
  return HanoiState(std::move(pegs));
}

inline BijectionRecord make_record(const HanoiState& x) {
  return {x.largest_disk(), x, th_to_pf(x), check_ideal_state(x).witness.doubled_peg};
}

struct BijectionReport {
  int n = 0;
  std::size_t ideal_count = 0;
  std::size_t pf1_count = 0;          // exhaustive PF_n(1), or the constructive set past budget
  bool pf1_exhaustive = false;        // pf1 set came from scanning [n]^n
  bool injective = false;
  bool image_matches = false;
  bool round_trip_th = false;         // pf_to_th(th_to_pf(x)) == x
  bool round_trip_pf = false;         // th_to_pf(pf_to_th(a)) == a
  bool j_preserved = false;
  bool sizes_match_lah = false;

  bool all() const noexcept {
    return injective && image_matches && round_trip_th && round_trip_pf && j_preserved &&
           sizes_match_lah;
  }
};

/// Checks that th_to_pf is a bijection from the ideal states onto PF_n(1).
/// PF_n(1) is taken from the exhaustive scan of [n]^n when n fits the budget,
/// otherwise from the structural generator. n = 1 is the empty bijection.
inline BijectionReport verify_bijection(int n, const Budget& budget = {}) {
  if (n < 1) throw validation_error("n must be positive, got " + std::to_string(n));
  BijectionReport report;
  report.n = n;

  std::vector<PreferenceVector> pf1;
  if (n <= budget.max_n) {
    pf1 = enumerate_pf_displacement(n, 1, budget);
    report.pf1_exhaustive = true;
  } else {
    pf1 = pf_displacement_one_constructive(n);
  }
  report.pf1_count = pf1.size();
  const auto lah = lah_count(n);

  if (n == 1) {
    report.injective = report.image_matches = report.round_trip_th = report.round_trip_pf =
        report.j_preserved = true;
    report.sizes_match_lah = pf1.empty() && lah == 0;
    return report;
  }

  const std::vector<HanoiState> ideal = enumerate_ideal_states(n);
  report.ideal_count = ideal.size();

  std::vector<PreferenceVector> image;
  image.reserve(ideal.size());
  report.round_trip_th = true;
  report.j_preserved = true;
  for (const HanoiState& x : ideal) {
    PreferenceVector a = th_to_pf(x);
    report.round_trip_th = report.round_trip_th && pf_to_th(a) == x;
    report.j_preserved = report.j_preserved && check_displacement_one(a).witness.repeated ==
                                                   check_ideal_state(x).witness.doubled_peg;
    image.push_back(std::move(a));
  }
  std::sort(image.begin(), image.end());
  report.injective = std::adjacent_find(image.begin(), image.end()) == image.end();
  report.image_matches = image == pf1;

  report.round_trip_pf = true;
  for (const PreferenceVector& a : pf1) {
    report.round_trip_pf = report.round_trip_pf && th_to_pf(pf_to_th(a)) == a;
  }
  report.sizes_match_lah = lah == ideal.size() && lah == pf1.size();
  return report;
}

}  // namespace parkhanoi
