#pragma once

// States and moves of the (n+1)x(n+1) Tower of Hanoi: disks 0..n by size,
// pegs 0..n, source peg 0, destination peg n, interior pegs 1..n-1.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "parkhanoi/error.hpp"

namespace parkhanoi {

class HanoiState {
public:
  HanoiState() = default;

  // pegs[i] is the peg holding disk i; n = pegs.size() - 1 must be >= 2.
  explicit HanoiState(std::vector<int> pegs) : pegs_(std::move(pegs)) {
    if (pegs_.size() < 3) {
      throw validation_error("a state needs n+1 >= 3 disks, got " +
                             std::to_string(pegs_.size()));
    }
    const int n = largest_disk();
    for (std::size_t i = 0; i < pegs_.size(); ++i) {
      if (pegs_[i] < 0 || pegs_[i] > n) {
        throw validation_error("disk " + std::to_string(i) + " is on peg " +
                               std::to_string(pegs_[i]) + ", outside [0, " + std::to_string(n) +
                               "]");
      }
    }
  }

  // n: the largest disk label, also the destination peg label.
  int largest_disk() const noexcept { return static_cast<int>(pegs_.size()) - 1; }
  int disk_count() const noexcept { return static_cast<int>(pegs_.size()); }

  int peg_of(int disk) const { return pegs_.at(static_cast<std::size_t>(disk)); }

  std::span<const int> pegs() const noexcept { return pegs_; }

  // Smallest disk on `peg`, which is the one on top.
  std::optional<int> top(int peg) const noexcept {
    for (std::size_t d = 0; d < pegs_.size(); ++d) {
      if (pegs_[d] == peg) return static_cast<int>(d);
    }
    return std::nullopt;
  }

  // Disks on `peg` from top to bottom.
  std::vector<int> stack(int peg) const {
    std::vector<int> disks;
    for (std::size_t d = 0; d < pegs_.size(); ++d) {
      if (pegs_[d] == peg) disks.push_back(static_cast<int>(d));
    }
    return disks;
  }

  HanoiState with_disk_on(int disk, int peg) const {
    HanoiState next = *this;
    next.pegs_.at(static_cast<std::size_t>(disk)) = peg;
    return next;
  }

  friend bool operator==(const HanoiState&, const HanoiState&) = default;
  friend auto operator<=>(const HanoiState&, const HanoiState&) = default;

private:
  std::vector<int> pegs_;
};

struct HanoiMove {
  int disk = 0;
  int from_peg = 0;
  int to_peg = 0;

  friend bool operator==(const HanoiMove&, const HanoiMove&) = default;
  friend auto operator<=>(const HanoiMove&, const HanoiMove&) = default;
};

inline void require_game_size(int n) {
  if (n < 2) {
    throw validation_error("the (n+1)x(n+1) game needs n >= 2, got n=" + std::to_string(n));
  }
}

inline HanoiState starting_state(int n) {
  require_game_size(n);
  return HanoiState(std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
}

inline HanoiState ending_state(int n) {
  require_game_size(n);
  return HanoiState(std::vector<int>(static_cast<std::size_t>(n) + 1, n));
}

inline bool is_legal(const HanoiState& s, const HanoiMove& m) {
  const int n = s.largest_disk();
  if (m.disk < 0 || m.disk > n || m.from_peg < 0 || m.from_peg > n || m.to_peg < 0 ||
      m.to_peg > n || m.from_peg == m.to_peg) {
    return false;
  }
  if (s.top(m.from_peg) != m.disk) return false;
  const auto dest = s.top(m.to_peg);
  return !dest || *dest > m.disk;
}

// Sorted by (disk, from_peg, to_peg).
inline std::vector<HanoiMove> legal_moves(const HanoiState& s) {
  const int pegs = s.largest_disk() + 1;
  std::vector<std::optional<int>> tops(static_cast<std::size_t>(pegs));
  for (int d = s.largest_disk(); d >= 0; --d) tops[static_cast<std::size_t>(s.peg_of(d))] = d;

  std::vector<HanoiMove> moves;
  for (int d = 0; d < s.disk_count(); ++d) {
    const int from = s.peg_of(d);
    if (tops[static_cast<std::size_t>(from)] != d) continue;
    for (int to = 0; to < pegs; ++to) {
      const auto& t = tops[static_cast<std::size_t>(to)];
      if (to != from && (!t || *t > d)) moves.push_back({d, from, to});
    }
  }
  return moves;
}

inline HanoiState apply_move(const HanoiState& s, const HanoiMove& m) {
  const int n = s.largest_disk();
  if (m.disk < 0 || m.disk > n || m.from_peg < 0 || m.from_peg > n || m.to_peg < 0 ||
      m.to_peg > n) {
    throw validation_error("move references a disk or peg outside [0, " + std::to_string(n) +
                           "]");
  }
  if (!is_legal(s, m)) {
    throw domain_error("illegal move: disk " + std::to_string(m.disk) + " from peg " +
                       std::to_string(m.from_peg) + " to peg " + std::to_string(m.to_peg));
  }
  return s.with_disk_on(m.disk, m.to_peg);
}

/// An ideal state written as its parts: the interior peg j carrying two disks
/// k < k2, and the remaining disks below n, each alone on an interior peg.
struct IdealStateWitness {
  int doubled_peg = 0;
  int first_disk = 0;
  int second_disk = 0;
  // (disk, peg) for the n-2 singleton disks, ascending by disk.
  std::vector<std::pair<int, int>> singletons;

  HanoiState to_state(int n) const {
    std::vector<int> pegs(static_cast<std::size_t>(n) + 1, 0);
    pegs[static_cast<std::size_t>(first_disk)] = doubled_peg;
    pegs[static_cast<std::size_t>(second_disk)] = doubled_peg;
    for (const auto& [disk, peg] : singletons) pegs[static_cast<std::size_t>(disk)] = peg;
    pegs[static_cast<std::size_t>(n)] = 0;
    return HanoiState(std::move(pegs));
  }
};

/// Outcome of the vector characterization of ideal states. `violated` is
/// empty when it holds, else the number of the first failing condition:
///   0: disk n sits on peg 0;
///   1: some interior peg j carries exactly two of the disks 0..n-1;
///   2: the other n-2 disks occupy the interior pegs other than j, one each.
struct IdealCheck {
  std::optional<int> violated;
  std::string reason;
  IdealStateWitness witness;

  explicit operator bool() const noexcept { return !violated.has_value(); }
};

inline IdealCheck check_ideal_state(const HanoiState& s) {
  const int n = s.largest_disk();
  IdealCheck check;
  if (s.peg_of(n) != 0) {
    check.violated = 0;
    check.reason = "disk " + std::to_string(n) + " is not on peg 0";
    return check;
  }

  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (int d = 0; d < n; ++d) ++count[static_cast<std::size_t>(s.peg_of(d))];

  int j = 0;
  for (int p = 1; p <= n - 1; ++p) {
    if (count[static_cast<std::size_t>(p)] == 2) {
      j = p;
      break;
    }
  }
  if (j == 0) {
    check.violated = 1;
    check.reason = "no interior peg holds exactly two of disks 0.." + std::to_string(n - 1);
    return check;
  }

  for (int p = 0; p <= n; ++p) {
    const int c = count[static_cast<std::size_t>(p)];
    const bool interior = p >= 1 && p <= n - 1;
    const bool ok = (p == j) || (interior ? c == 1 : c == 0);
    if (!ok) {
      check.violated = 2;
      check.reason = "peg " + std::to_string(p) + " holds " + std::to_string(c) +
                     " of disks 0.." + std::to_string(n - 1) + "; every interior peg other than " +
                     std::to_string(j) + " must hold exactly one and pegs 0, n none";
      return check;
    }
  }

  check.witness.doubled_peg = j;
  bool seen_first = false;
  for (int d = 0; d < n; ++d) {
    const int p = s.peg_of(d);
    if (p != j) {
      check.witness.singletons.emplace_back(d, p);
    } else if (!seen_first) {
      check.witness.first_disk = d;
      seen_first = true;
    } else {
      check.witness.second_disk = d;
    }
  }
  return check;
}

inline bool is_ideal_state(const HanoiState& s) { return static_cast<bool>(check_ideal_state(s)); }

/// Streams every ideal state of the (n+1)x(n+1) game in lexicographic order.
///
/// The states are words x_0..x_{n-1} over the interior pegs 1..n-1 in which
/// exactly one peg appears twice and every other peg once, followed by
/// x_n = 0. Any prefix with per-peg counts at most two and at most one doubled
/// peg extends to such a word, so a depth-first walk over pegs in increasing
/// order emits them in order with no filtering.
template <class Visitor>
void for_each_ideal_state(int n, Visitor&& visit) {
  require_game_size(n);
  std::vector<int> pegs(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> used(static_cast<std::size_t>(n), 0);
  bool doubled = false;

  auto place = [&](auto&& self, int disk) -> void {
    if (disk == n) {
      visit(HanoiState(pegs));
      return;
    }
    for (int p = 1; p <= n - 1; ++p) {
      int& c = used[static_cast<std::size_t>(p)];
      if (c == 2 || (c == 1 && doubled)) continue;
      const bool makes_double = c == 1;
      ++c;
      doubled = doubled || makes_double;
      pegs[static_cast<std::size_t>(disk)] = p;
      self(self, disk + 1);
      --c;
      if (makes_double) doubled = false;
    }
  };
  place(place, 0);
}

inline std::vector<HanoiState> enumerate_ideal_states(int n) {
  std::vector<HanoiState> states;
  for_each_ideal_state(n, [&](const HanoiState& s) { states.push_back(s); });
  return states;
}

}  // namespace parkhanoi
