#pragma once

// Text encodings: comma-separated vectors, JSON objects, the peg table and
// the DOT export of the approach graph.

#include <charconv>
#include <cstdint>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "parkhanoi/bijection.hpp"
#include "parkhanoi/enumeration.hpp"
#include "parkhanoi/hanoi.hpp"
#include "parkhanoi/parking.hpp"
#include "parkhanoi/search.hpp"

namespace parkhanoi {

using json = nlohmann::json;

// "3,1,1,3,2" -> {3,1,1,3,2}. Surrounding spaces around entries are allowed.
inline std::vector<int> parse_csv(std::string_view text) {
  std::vector<int> values;
  if (text.empty()) throw validation_error("empty vector");
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos
                                                                              : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
      throw validation_error("cannot parse '" + std::string(field) + "' as an integer");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return values;
}

inline std::string to_csv(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

inline std::string to_csv(const PreferenceVector& a) { return to_csv(a.values()); }
inline std::string to_csv(const HanoiState& s) { return to_csv(s.pegs()); }

inline PreferenceVector parse_preference_vector(std::string_view text) {
  return PreferenceVector(parse_csv(text));
}
inline HanoiState parse_state(std::string_view text) { return HanoiState(parse_csv(text)); }

inline PreferenceVector preference_vector_from_json(const json& j) {
  if (!j.is_array()) throw validation_error("preference vector must be a JSON array");
  std::vector<int> prefs;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw validation_error("preference must be an integer");
    prefs.push_back(v.get<int>());
  }
  return PreferenceVector(std::move(prefs));
}

inline json to_json(const PreferenceVector& a) {
  return json(std::vector<int>(a.values().begin(), a.values().end()));
}
inline json to_json(const HanoiState& s) {
  return json(std::vector<int>(s.pegs().begin(), s.pegs().end()));
}

inline json to_json(const ParkingOutcome& out) {
  json j;
  if (out.parked()) {
    j["assignment"] = out.assignment;
    j["displacements"] = out.displacements;
    j["total_displacement"] = out.total_displacement;
    j["lucky_count"] = out.lucky_count;
    j["failed_car"] = nullptr;
  } else {
    j["assignment"] = nullptr;
    j["displacements"] = nullptr;
    j["total_displacement"] = nullptr;
    j["lucky_count"] = nullptr;
    j["failed_car"] = *out.failed_car;
  }
  return j;
}

inline json to_json(const HanoiMove& m) {
  return {{"disk", m.disk}, {"from", m.from_peg}, {"to", m.to_peg}};
}

inline json to_json(const Strategy& s) {
  json moves = json::array();
  for (const auto& m : s.moves) moves.push_back(to_json(m));
  return moves;
}

inline json to_json(const BijectionRecord& r) {
  return {{"n", r.n}, {"ideal", to_json(r.ideal)}, {"pf", to_json(r.pf)}, {"j", r.doubled_value}};
}

// Exact integers go out as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise.
inline json big_to_json(const big_int& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return json(v.convert_to<std::uint64_t>());
  }
  return json(v.str());
}

inline json to_json(const CountReport& r) {
  json j;
  j["n"] = r.n;
  j["statistic"] = r.statistic_name();
  j["closed_form"] = big_to_json(r.closed_form);
  j["brute_force"] = r.brute_force ? json(*r.brute_force) : json(nullptr);
  j["match"] = r.match ? json(*r.match) : json(nullptr);
  return j;
}

inline json to_json(const IdealLayerReport& r) {
  auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  return {{"n", r.n},
          {"ideal_count", r.ideal_count},
          {"min_win_moves", r.min_win_moves},
          {"ideal_at_level", opt(r.ideal_at_level)},
          {"ideal_to_end", opt(r.ideal_to_end)},
          {"shortest_win_count", r.shortest_win_count},
          {"wins_through_ideal", r.wins_through_ideal},
          {"flags", {{"a", r.flag_a}, {"b", r.flag_b}, {"c", r.flag_c}}}};
}

inline json to_json(const BijectionReport& r) {
  return {{"n", r.n},
          {"ideal_count", r.ideal_count},
          {"pf1_count", r.pf1_count},
          {"pf1_exhaustive", r.pf1_exhaustive},
          {"injective", r.injective},
          {"image_matches", r.image_matches},
          {"round_trip_th", r.round_trip_th},
          {"round_trip_pf", r.round_trip_pf},
          {"j_preserved", r.j_preserved},
          {"sizes_match_lah", r.sizes_match_lah}};
}

/// Draws the pegs left to right, 0..n, each disk d as a bar of 2d+1 '='
/// centred on its peg, smallest on top. Rows carry no trailing spaces.
inline std::string render_table(const HanoiState& s) {
  const int n = s.largest_disk();
  const int width = 2 * n + 3;
  const int height = n + 1;
  std::vector<std::vector<int>> stacks(static_cast<std::size_t>(n) + 1);
  for (int p = 0; p <= n; ++p) stacks[static_cast<std::size_t>(p)] = s.stack(p);

  std::ostringstream out;
  for (int row = 0; row < height; ++row) {
    std::string line;
    for (int p = 0; p <= n; ++p) {
      const auto& st = stacks[static_cast<std::size_t>(p)];
      const int from_bottom = height - 1 - row;
      std::string cell(static_cast<std::size_t>(width), ' ');
      const int centre = width / 2;
      if (from_bottom < static_cast<int>(st.size())) {
        const int disk = st[st.size() - 1 - static_cast<std::size_t>(from_bottom)];
        for (int c = centre - disk; c <= centre + disk; ++c) cell[static_cast<std::size_t>(c)] = '=';
      } else {
        cell[static_cast<std::size_t>(centre)] = '|';
      }
      line += cell;
      if (p < n) line += ' ';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  std::string base;
  std::string labels;
  for (int p = 0; p <= n; ++p) {
    base += std::string(static_cast<std::size_t>(width), '-');
    std::string label(static_cast<std::size_t>(width), ' ');
    const std::string num = std::to_string(p);
    label.replace(static_cast<std::size_t>(width / 2), num.size(), num);
    labels += label;
    if (p < n) {
      base += ' ';
      labels += ' ';
    }
  }
  while (!labels.empty() && labels.back() == ' ') labels.pop_back();
  out << base << '\n' << labels << '\n';
  return out.str();
}

inline std::string to_dot(const ApproachGraph& g) {
  std::ostringstream out;
  out << "digraph ideal_approach {\n  rankdir=TB;\n";
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    out << "  s" << i << " [label=\"(" << to_csv(g.states[i]) << ")\"";
    if (is_ideal_state(g.states[i])) out << ", shape=box";
    out << "];\n";
  }
  for (const auto& [from, to] : g.edges) out << "  s" << from << " -> s" << to << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace parkhanoi
