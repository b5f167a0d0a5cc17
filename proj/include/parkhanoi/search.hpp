#pragma once

/**
 * @file search.hpp
 * @brief Breadth-first search over the full state graph of the
 * (n+1)x(n+1) Tower of Hanoi.
 *
 * A state x_0..x_n is packed into the integer sum x_i (n+1)^i, so the graph
 * lives in flat arrays of (n+1)^(n+1) entries. Every search checks that size
 * against Budget::max_states before allocating.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "parkhanoi/budget.hpp"
#include "parkhanoi/hanoi.hpp"

namespace parkhanoi {

struct Strategy {
  std::vector<HanoiMove> moves;
  std::vector<HanoiState> states;  // states[0] is the start, states[i] follows moves[i-1]
};

class StateGraph {
public:
  using code_t = std::uint32_t;
  static constexpr std::int16_t unreached = -1;

  StateGraph(int n, const Budget& budget) : n_(n), radix_(static_cast<code_t>(n) + 1) {
    require_game_size(n);
    std::uint64_t size = 1;
    for (int i = 0; i <= n; ++i) {
      size *= radix_;
      if (size > budget.max_states || size > std::numeric_limits<code_t>::max()) {
        throw budget_exceeded("state space of the " + std::to_string(n + 1) + "x" +
                              std::to_string(n + 1) + " game exceeds budget_states=" +
                              std::to_string(budget.max_states));
      }
    }
    size_ = static_cast<code_t>(size);
  }

  int n() const noexcept { return n_; }
  code_t size() const noexcept { return size_; }

  code_t encode(const HanoiState& s) const {
    code_t code = 0;
    for (int d = n_; d >= 0; --d) code = code * radix_ + static_cast<code_t>(s.peg_of(d));
    return code;
  }

  HanoiState decode(code_t code) const {
    std::vector<int> pegs(static_cast<std::size_t>(n_) + 1);
    for (auto& p : pegs) {
      p = static_cast<int>(code % radix_);
      code /= radix_;
    }
    return HanoiState(std::move(pegs));
  }

  // Calls visit(move, neighbour_code) for every legal move out of `code`,
  // in (disk, from_peg, to_peg) order.
  template <class Visitor>
  void for_each_neighbour(code_t code, Visitor&& visit) const {
    int pegs[16];
    int top[16];
    code_t weight[16];
    code_t w = 1;
    for (int d = 0; d <= n_; ++d) {
      pegs[d] = static_cast<int>(code % radix_);
      code /= radix_;
      weight[d] = w;
      w *= radix_;
    }
    const code_t base = encode_raw(pegs);
    for (int p = 0; p <= n_; ++p) top[p] = -1;
    for (int d = n_; d >= 0; --d) top[pegs[d]] = d;

    for (int d = 0; d <= n_; ++d) {
      const int from = pegs[d];
      if (top[from] != d) continue;
      for (int to = 0; to <= n_; ++to) {
        if (to == from || (top[to] != -1 && top[to] < d)) continue;
        const code_t next = base - static_cast<code_t>(from) * weight[d] +
                            static_cast<code_t>(to) * weight[d];
        visit(HanoiMove{d, from, to}, next);
      }
    }
  }

  // Distances from `source` and the codes in nondecreasing distance order.
  std::pair<std::vector<std::int16_t>, std::vector<code_t>> bfs(code_t source) const {
    std::vector<std::int16_t> dist(size_, unreached);
    std::vector<code_t> order;
    order.reserve(size_);
    dist[source] = 0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const code_t v = order[head];
      const auto next_dist = static_cast<std::int16_t>(dist[v] + 1);
      for_each_neighbour(v, [&](const HanoiMove&, code_t u) {
        if (dist[u] == unreached) {
          dist[u] = next_dist;
          order.push_back(u);
        }
      });
    }
    return {std::move(dist), std::move(order)};
  }

private:
  code_t encode_raw(const int* pegs) const {
    code_t code = 0;
    for (int d = n_; d >= 0; --d) code = code * radix_ + static_cast<code_t>(pegs[d]);
    return code;
  }

  int n_;
  code_t radix_;
  code_t size_ = 0;
};

/// Distances from both the start and the end, restricted views of the
/// shortest winning paths, and path counts through each state.
class ShortestWinAnalysis {
public:
  using code_t = StateGraph::code_t;

  explicit ShortestWinAnalysis(int n, const Budget& budget = {}) : graph_(n, budget) {
    start_ = graph_.encode(starting_state(n));
    end_ = graph_.encode(ending_state(n));
    std::tie(from_start_, start_order_) = graph_.bfs(start_);
    std::tie(from_end_, end_order_) = graph_.bfs(end_);
    if (from_start_[end_] == StateGraph::unreached) {
      throw std::logic_error("ending state unreachable");
    }
    length_ = from_start_[end_];
    paths_from_start_ = count_paths(start_order_, from_start_, from_end_);
    paths_to_end_ = count_paths(end_order_, from_end_, from_start_);
  }

  const StateGraph& graph() const noexcept { return graph_; }
  int min_win_moves() const noexcept { return length_; }

  int distance_from_start(const HanoiState& s) const { return from_start_[graph_.encode(s)]; }
  int distance_to_end(const HanoiState& s) const { return from_end_[graph_.encode(s)]; }

  bool on_shortest_win(code_t v) const noexcept {
    return from_start_[v] + from_end_[v] == length_;
  }

  std::uint64_t shortest_win_count() const noexcept { return paths_from_start_[end_]; }

  // Number of shortest winning strategies whose state after move
  // distance_from_start(s) is s.
  std::uint64_t shortest_wins_through(const HanoiState& s) const {
    const code_t v = graph_.encode(s);
    if (!on_shortest_win(v)) return 0;
    return checked_mul(paths_from_start_[v], paths_to_end_[v]);
  }

  // States on some shortest winning path, in nondecreasing distance from start.
  std::vector<code_t> shortest_win_states() const {
    std::vector<code_t> out;
    for (code_t v : start_order_) {
      if (on_shortest_win(v)) out.push_back(v);
    }
    return out;
  }

  // The first shortest winning strategy in (disk, from_peg, to_peg) order.
  Strategy first_shortest_win() const {
    Strategy strategy;
    code_t v = start_;
    strategy.states.push_back(graph_.decode(v));
    for (int step = 0; step < length_; ++step) {
      std::optional<std::pair<HanoiMove, code_t>> pick;
      graph_.for_each_neighbour(v, [&](const HanoiMove& m, code_t u) {
        if (!pick && from_start_[u] == step + 1 && on_shortest_win(u)) pick.emplace(m, u);
      });
      strategy.moves.push_back(pick->first);
      v = pick->second;
      strategy.states.push_back(graph_.decode(v));
    }
    return strategy;
  }

private:
  static std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("path count overflow");
    return r;
  }
  static std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("path count overflow");
    return r;
  }

  // Counts shortest paths from the BFS root of `order` to every state lying
  // on a shortest winning path.
  std::vector<std::uint64_t> count_paths(const std::vector<code_t>& order,
                                         const std::vector<std::int16_t>& near,
                                         const std::vector<std::int16_t>& far) const {
    std::vector<std::uint64_t> ways(graph_.size(), 0);
    ways[order.front()] = 1;
    for (code_t v : order) {
      if (near[v] + far[v] != length_ || ways[v] == 0) continue;
      graph_.for_each_neighbour(v, [&](const HanoiMove&, code_t u) {
        if (near[u] == near[v] + 1 && near[u] + far[u] == length_) {
          ways[u] = checked_add(ways[u], ways[v]);
        }
      });
    }
    return ways;
  }

  StateGraph graph_;
  code_t start_ = 0;
  code_t end_ = 0;
  int length_ = 0;
  std::vector<std::int16_t> from_start_;
  std::vector<std::int16_t> from_end_;
  std::vector<code_t> start_order_;
  std::vector<code_t> end_order_;
  std::vector<std::uint64_t> paths_from_start_;
  std::vector<std::uint64_t> paths_to_end_;
};

inline int shortest_win_length(int n, const Budget& budget = {}) {
  const StateGraph graph(n, budget);
  const auto [dist, order] = graph.bfs(graph.encode(starting_state(n)));
  return dist[graph.encode(ending_state(n))];
}

struct IdealLayerReport {
  int n = 0;
  std::uint64_t ideal_count = 0;
  int min_win_moves = 0;
  // Common distance of every ideal state from the start / to the end, if any.
  std::optional<int> ideal_at_level;
  std::optional<int> ideal_to_end;
  std::uint64_t shortest_win_count = 0;
  std::uint64_t wins_through_ideal = 0;  // shortest wins whose move n+1 lands on an ideal state
  std::uint64_t ideal_off_layer = 0;     // ideal states on shortest wins at another move
  bool flag_a = false;  // every ideal state is n+1 moves from the start
  bool flag_b = false;  // every ideal state is n+2 moves from the end
  bool flag_c = false;  // every shortest win visits exactly one ideal state, at move n+1

  bool all() const noexcept { return flag_a && flag_b && flag_c; }
};

inline IdealLayerReport optimal_strategies_through_ideal(int n, const Budget& budget = {}) {
  const ShortestWinAnalysis analysis(n, budget);
  IdealLayerReport report;
  report.n = n;
  report.min_win_moves = analysis.min_win_moves();
  report.shortest_win_count = analysis.shortest_win_count();

  std::optional<int> level;
  std::optional<int> to_end;
  bool level_common = true;
  bool to_end_common = true;
  report.flag_a = true;
  report.flag_b = true;
  for_each_ideal_state(n, [&](const HanoiState& s) {
    ++report.ideal_count;
    const int ds = analysis.distance_from_start(s);
    const int de = analysis.distance_to_end(s);
    if (level && *level != ds) level_common = false;
    if (to_end && *to_end != de) to_end_common = false;
    level = ds;
    to_end = de;
    report.flag_a = report.flag_a && ds == n + 1;
    report.flag_b = report.flag_b && de == n + 2;
    if (ds == n + 1) report.wins_through_ideal += analysis.shortest_wins_through(s);
  });
  if (level_common) report.ideal_at_level = level;
  if (to_end_common) report.ideal_to_end = to_end;

  for (auto v : analysis.shortest_win_states()) {
    const HanoiState s = analysis.graph().decode(v);
    if (is_ideal_state(s) && analysis.distance_from_start(s) != n + 1) ++report.ideal_off_layer;
  }

  // Each shortest win passes through exactly one state at move n+1; the sum
  // over ideal states there covers all wins iff every win lands on one.
  report.flag_c = report.shortest_win_count > 0 &&
                  report.wins_through_ideal == report.shortest_win_count &&
                  report.ideal_off_layer == 0;
  return report;
}

/// Edges (parent, child) of the layered graph from the start to the ideal
/// states: every state within n+1 moves of the start that lies on a shortest
/// winning path, linked to its successors one layer further.
struct ApproachGraph {
  std::vector<HanoiState> states;  // nondecreasing distance from start
  std::vector<int> layers;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // indices into states
};

inline ApproachGraph ideal_approach_graph(int n, const Budget& budget = {}) {
  const ShortestWinAnalysis analysis(n, budget);
  ApproachGraph out;
  std::vector<StateGraph::code_t> codes;
  for (auto v : analysis.shortest_win_states()) {
    const HanoiState s = analysis.graph().decode(v);
    const int layer = analysis.distance_from_start(s);
    if (layer > n + 1) break;
    codes.push_back(v);
    out.states.push_back(s);
    out.layers.push_back(layer);
  }
  for (std::size_t i = 0; i < codes.size(); ++i) {
    analysis.graph().for_each_neighbour(codes[i], [&](const HanoiMove&, StateGraph::code_t u) {
      const auto it = std::find(codes.begin(), codes.end(), u);
      if (it == codes.end()) return;
      const auto j = static_cast<std::size_t>(it - codes.begin());
      if (out.layers[j] == out.layers[i] + 1) out.edges.emplace_back(i, j);
    });
  }
  return out;
}

}  // namespace parkhanoi
