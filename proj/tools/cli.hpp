#pragma once

// Command-line driver. run_cli() takes the arguments after the program name
// and writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 success, 1 domain or verification failure, 2 parse or
// validation error, 3 budget exceeded.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parkhanoi/parkhanoi.hpp"

namespace parkhanoi::cli {

enum ExitCode : int { ok = 0, failure = 1, invalid = 2, over_budget = 3 };

struct CliConfig {
  std::uint64_t budget_states = Budget{}.max_states;
  int budget_n = Budget{}.max_n;
  std::string output_format;  // json | lines | table; empty picks the command default

  Budget budget() const {
    Budget b;
    b.max_states = budget_states;
    b.max_n = budget_n;
    return b;
  }

  std::string format_or(const char* fallback) const {
    return output_format.empty() ? fallback : output_format;
  }
};

namespace detail {

inline PreferenceVector read_preferences(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) throw validation_error("invalid JSON: " + text);
    return preference_vector_from_json(parsed);
  }
  return parse_preference_vector(text);
}

inline HanoiState read_state(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_array()) {
      throw validation_error("invalid JSON state: " + text);
    }
    std::vector<int> pegs;
    for (const auto& v : parsed) {
      if (!v.is_number_integer()) throw validation_error("peg must be an integer");
      pegs.push_back(v.get<int>());
    }
    return HanoiState(std::move(pegs));
  }
  return parse_state(text);
}

inline int cmd_park(const std::string& prefs, const CliConfig& config, std::ostream& out) {
  const PreferenceVector alpha = read_preferences(prefs);
  const ParkingOutcome outcome = park(alpha);
  const std::string format = config.format_or("json");
  if (format == "json") {
    out << to_json(outcome).dump() << '\n';
  } else if (format == "lines") {
    if (outcome.parked()) {
      out << "assignment " << to_csv(outcome.assignment) << '\n'
          << "displacements " << to_csv(outcome.displacements) << '\n'
          << "total_displacement " << outcome.total_displacement << '\n'
          << "lucky_count " << outcome.lucky_count << '\n';
    } else {
      out << "failed_car " << *outcome.failed_car << '\n';
    }
  } else {
    out << "car  pref  spot  bump\n";
    for (int car = 1; car <= alpha.size(); ++car) {
      const auto i = static_cast<std::size_t>(car - 1);
      char row[64];
      if (outcome.parked()) {
        std::snprintf(row, sizeof row, "%3d  %4d  %4d  %4d", car, alpha.preference(car),
                      outcome.assignment[i], outcome.displacements[i]);
      } else {
        std::snprintf(row, sizeof row, "%3d  %4d", car, alpha.preference(car));
      }
      out << row << '\n';
    }
    if (outcome.parked()) {
      out << "total displacement " << outcome.total_displacement << ", lucky cars "
          << outcome.lucky_count << '\n';
    } else {
      out << "car " << *outcome.failed_car << " cannot park\n";
    }
  }
  return outcome.parked() ? ok : failure;
}

template <class T>
void emit_vectors(const std::vector<T>& items, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& v : items) arr.push_back(to_json(v));
    out << arr.dump() << '\n';
  } else {
    for (const auto& v : items) out << to_csv(v) << '\n';
  }
}

inline int cmd_enumerate(const std::string& kind, int n, bool dot, const CliConfig& config,
                         std::ostream& out, std::ostream& err) {
  const std::string format = config.format_or("lines");
  const Budget budget = config.budget();
  std::size_t count = 0;

  if (kind == "ideal") {
    if (dot) {
      out << to_dot(ideal_approach_graph(n, budget));
      return ok;
    }
    if (format == "table") {
      for_each_ideal_state(n, [&](const HanoiState& s) {
        if (count++) out << '\n';
        out << "(" << to_csv(s) << ")\n" << render_table(s);
      });
    } else if (format == "json") {
      const auto states = enumerate_ideal_states(n);
      count = states.size();
      emit_vectors(states, format, out);
    } else {
      for_each_ideal_state(n, [&](const HanoiState& s) {
        out << to_csv(s) << '\n';
        ++count;
      });
    }
  } else {
    const int d = kind == "pf1" ? 1 : -1;
    auto visit = [&](const PreferenceVector& a) {
      out << to_csv(a) << '\n';
      ++count;
    };
    if (format == "json") {
      const auto items = d < 0 ? enumerate_pf(n, budget) : enumerate_pf_displacement(n, d, budget);
      count = items.size();
      emit_vectors(items, format, out);
    } else if (d < 0) {
      for_each_parking_function(n, visit, budget);
    } else {
      for_each_pf_displacement(n, d, visit, budget);
    }
  }
  err << "count: " << count << '\n';
  return ok;
}

inline int cmd_map(const std::string& direction, const std::string& vector,
                   const CliConfig& config, std::ostream& out) {
  const std::string format = config.format_or("lines");
  BijectionRecord record;
  if (direction == "th2pf") {
    record = make_record(read_state(vector));
  } else {
    const PreferenceVector alpha = read_preferences(vector);
    const HanoiState x = pf_to_th(alpha);
    record = make_record(x);
  }
  if (format == "json") {
    out << to_json(record).dump() << '\n';
  } else if (direction == "th2pf") {
    out << to_csv(record.pf) << '\n';
  } else {
    out << to_csv(record.ideal) << '\n';
  }
  return ok;
}

inline json verification_battery(int n, const Budget& budget, bool& pass) {
  json report;
  report["n"] = n;
  json diff = json::array();

  json counts = json::array();
  for (const CountReport& r : brute_force_counts(n, budget)) {
    counts.push_back(to_json(r));
    if (r.match && !*r.match) {
      diff.push_back({{"check", r.statistic_name()},
                      {"expected", big_to_json(r.closed_form)},
                      {"actual", *r.brute_force}});
    }
  }
  report["counts"] = counts;

  const BijectionReport bij = verify_bijection(n, budget);
  report["bijection"] = to_json(bij);
  if (!bij.all()) {
    diff.push_back({{"check", "bijection"},
                    {"expected", {{"ideal_count", big_to_json(lah_count(n))},
                                  {"pf1_count", big_to_json(lah_count(n))}}},
                    {"actual", to_json(bij)}});
  }

  if (n >= 2) {
    const IdealLayerReport layer = optimal_strategies_through_ideal(n, budget);
    report["hanoi"] = to_json(layer);
    const bool ok_len = layer.min_win_moves == 2 * n + 3;
    if (!ok_len || !layer.all()) {
      diff.push_back({{"check", "hanoi"},
                      {"expected", {{"min_win_moves", 2 * n + 3},
                                    {"ideal_at_level", n + 1},
                                    {"ideal_to_end", n + 2},
                                    {"flags", {{"a", true}, {"b", true}, {"c", true}}}}},
                      {"actual", to_json(layer)}});
    }
  } else {
    report["hanoi"] = nullptr;
  }

  pass = diff.empty();
  report["pass"] = pass;
  report["diff"] = diff;
  return report;
}

inline int cmd_verify(int n, const CliConfig& config, std::ostream& out) {
  bool pass = false;
  const json report = verification_battery(n, config.budget(), pass);
  const std::string format = config.format_or("json");
  if (format == "json") {
    out << report.dump() << '\n';
  } else {
    for (const auto& c : report["counts"]) {
      out << c["statistic"].get<std::string>() << ' ' << c["closed_form"].dump() << ' '
          << c["brute_force"].dump() << ' ' << c["match"].dump() << '\n';
    }
    out << "bijection " << (report["bijection"]["injective"].get<bool>() ? "injective" : "-")
        << ' ' << report["bijection"]["pf1_count"].dump() << '\n';
    if (!report["hanoi"].is_null()) {
      out << "min_win_moves " << report["hanoi"]["min_win_moves"].dump() << '\n'
          << "ideal_at_level " << report["hanoi"]["ideal_at_level"].dump() << '\n';
    }
    out << (pass ? "pass" : "FAIL") << '\n';
  }
  return pass ? ok : failure;
}

inline int cmd_solve(int n, bool dot, const CliConfig& config, std::ostream& out) {
  const Budget budget = config.budget();
  if (dot) {
    out << to_dot(ideal_approach_graph(n, budget));
    return ok;
  }
  const ShortestWinAnalysis analysis(n, budget);
  const Strategy strategy = analysis.first_shortest_win();
  const int ideal_move = n + 1;
  const std::string format = config.format_or("json");
  if (format == "json") {
    json states = json::array();
    for (const auto& s : strategy.states) states.push_back(to_json(s));
    out << json{{"n", n},
                {"min_win_moves", analysis.min_win_moves()},
                {"ideal_move", ideal_move},
                {"ideal_state", to_json(strategy.states[static_cast<std::size_t>(ideal_move)])},
                {"ideal_verified", is_ideal_state(strategy.states[static_cast<std::size_t>(ideal_move)])},
                {"moves", to_json(strategy)},
                {"states", states}}
               .dump()
        << '\n';
  } else {
    for (std::size_t i = 0; i < strategy.states.size(); ++i) {
      const HanoiState& s = strategy.states[i];
      std::string line = "move " + std::to_string(i);
      if (i > 0) {
        const HanoiMove& m = strategy.moves[i - 1];
        line += ": disk " + std::to_string(m.disk) + " " + std::to_string(m.from_peg) + "->" +
                std::to_string(m.to_peg);
      }
      line += " (" + to_csv(s) + ")";
      if (static_cast<int>(i) == ideal_move && is_ideal_state(s)) line += " ideal";
      out << line << '\n';
      if (format == "table") out << render_table(s);
    }
  }
  return ok;
}

inline int cmd_count(int n, const CliConfig& config, std::ostream& out) {
  const auto reports = brute_force_counts(n, config.budget());
  bool all_match = true;
  const std::string format = config.format_or("json");
  json arr = json::array();
  for (const auto& r : reports) {
    if (r.match && !*r.match) all_match = false;
    if (format == "json") {
      arr.push_back(to_json(r));
    } else {
      out << r.statistic_name() << ' ' << r.closed_form.str() << ' '
          << (r.brute_force ? std::to_string(*r.brute_force) : "null") << ' '
          << (r.match ? (*r.match ? "true" : "false") : "null") << '\n';
    }
  }
  if (format == "json") out << arr.dump() << '\n';
  return all_match ? ok : failure;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parking functions, ideal Tower of Hanoi states, and the map between them",
               "parkhanoi"};
  app.require_subcommand(1);

  CliConfig config;
  app.add_option("--format", config.output_format, "Output format")
      ->check(CLI::IsMember({"json", "lines", "table"}))
      ->envname("PARKHANOI_FORMAT");
  app.add_option("--budget-states", config.budget_states,
                 "Largest Hanoi state space a search may allocate")
      ->check(CLI::PositiveNumber)
      ->envname("PARKHANOI_BUDGET_STATES");
  app.add_option("--budget-n", config.budget_n, "Largest n for scans over [n]^n")
      ->check(CLI::PositiveNumber)
      ->envname("PARKHANOI_BUDGET_N");

  std::string prefs;
  auto* park_cmd = app.add_subcommand("park", "Park the cars of a preference vector");
  park_cmd->add_option("prefs", prefs, "Comma-separated preferences or a JSON array")
      ->required();

  std::string kind;
  int n = 0;
  bool dot = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "Stream pf, pf1 or ideal, one per line");
  enum_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"pf", "pf1", "ideal"}));
  enum_cmd->add_option("n,--n", n)->required()->envname("PARKHANOI_N");
  enum_cmd->add_flag("--dot", dot, "For ideal: DOT graph of the shortest approach");

  std::string direction;
  std::string vector;
  auto* map_cmd = app.add_subcommand("map", "Map an ideal state to its parking function or back");
  map_cmd->add_option("direction", direction)
      ->required()
      ->check(CLI::IsMember({"th2pf", "pf2th"}));
  map_cmd->add_option("vector", vector)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run every check for one n");
  verify_cmd->add_option("n,--n", n)->required()->envname("PARKHANOI_N");

  auto* solve_cmd = app.add_subcommand("solve", "Print a shortest winning strategy");
  solve_cmd->add_option("n,--n", n)->required()->envname("PARKHANOI_N");
  solve_cmd->add_flag("--dot", dot, "DOT graph of the shortest approach to the ideal states");

  auto* count_cmd = app.add_subcommand("count", "Closed-form versus brute-force counts");
  count_cmd->add_option("n,--n", n)->required()->envname("PARKHANOI_N");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : invalid;
  }

  try {
    if (park_cmd->parsed()) return detail::cmd_park(prefs, config, out);
    if (enum_cmd->parsed()) return detail::cmd_enumerate(kind, n, dot, config, out, err);
    if (map_cmd->parsed()) return detail::cmd_map(direction, vector, config, out);
    if (verify_cmd->parsed()) return detail::cmd_verify(n, config, out);
    if (solve_cmd->parsed()) return detail::cmd_solve(n, dot, config, out);
    if (count_cmd->parsed()) return detail::cmd_count(n, config, out);
  } catch (const validation_error& e) {
    err << "error: " << e.what() << '\n';
    return invalid;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  } catch (const budget_exceeded& e) {
    err << "error: " << e.what() << '\n';
    return over_budget;
  }
  return invalid;
}

}  // namespace parkhanoi::cli
