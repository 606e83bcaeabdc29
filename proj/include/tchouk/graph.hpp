// Copyright 2026 The Tchouk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Tchoukaillon on a directed graph.
//
// A sowing graph is a directed graph with a nonempty set of Ruma vertices. A
// sowing move empties a non-Ruma vertex v holding b_v stones and drops one
// stone on each vertex of a walk of exactly b_v edges that ends on a Ruma.
// Walks may revisit vertices, including v itself, and pass through other
// Rumas on the way.
//
// Ruma labels count captured stones. Game-graph nodes identify boards by their
// non-Ruma labels only, so nodes are stored with every Ruma label at zero.

#ifndef TCHOUK_GRAPH_HPP
#define TCHOUK_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tchouk/board.hpp"
#include "tchouk/stone_count.hpp"

namespace tchouk {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

class SowingGraph {
 public:
  SowingGraph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<Vertex> ruma)
      : out_(vertex_count), is_ruma_(vertex_count, false), edges_(std::move(edges)), ruma_(std::move(ruma)) {
    if (vertex_count == 0) throw std::invalid_argument("sowing graph needs at least one vertex");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto [a, b] = edges_[i];
      if (a >= vertex_count || b >= vertex_count) {
        throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") references a missing vertex");
      }
      if (i > 0 && edges_[i - 1] == edges_[i]) {
        throw std::invalid_argument("parallel edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      out_[a].push_back(b);
    }
    if (ruma_.empty()) throw std::invalid_argument("sowing graph needs at least one Ruma vertex");
    std::sort(ruma_.begin(), ruma_.end());
    for (std::size_t i = 0; i < ruma_.size(); ++i) {
      if (ruma_[i] >= vertex_count) throw std::invalid_argument("Ruma vertex " + std::to_string(ruma_[i]) + " is missing");
      if (i > 0 && ruma_[i - 1] == ruma_[i]) {
        throw std::invalid_argument("Ruma vertex " + std::to_string(ruma_[i]) + " listed twice");
      }
      is_ruma_[ruma_[i]] = true;
    }
  }

  [[nodiscard]] std::size_t vertex_count() const { return out_.size(); }
  [[nodiscard]] std::span<const Vertex> successors(Vertex v) const { return out_.at(v); }
  [[nodiscard]] bool is_ruma(Vertex v) const { return is_ruma_.at(v); }
  [[nodiscard]] const std::vector<Vertex>& ruma() const { return ruma_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] bool has_edge(Vertex a, Vertex b) const {
    return a < out_.size() && std::binary_search(out_[a].begin(), out_[a].end(), b);
  }

  friend bool operator==(const SowingGraph&, const SowingGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> out_;  // sorted
  std::vector<bool> is_ruma_;
  std::vector<Edge> edges_;  // sorted
  std::vector<Vertex> ruma_;  // sorted
};

struct GraphBoard {
  std::vector<BinCount> labels;

  friend bool operator==(const GraphBoard&, const GraphBoard&) = default;
  friend auto operator<=>(const GraphBoard&, const GraphBoard&) = default;
};

inline GraphBoard zero_board(const SowingGraph& g) { return {std::vector<BinCount>(g.vertex_count(), 0)}; }

/// `b` with every Ruma label cleared: the game-graph identity of a board.
inline GraphBoard position(const SowingGraph& g, GraphBoard b) {
  for (Vertex r : g.ruma()) b.labels.at(r) = 0;
  return b;
}

/// Stones on non-Ruma vertices.
inline StoneCount stones_on_board(const SowingGraph& g, const GraphBoard& b) {
  StoneCount total;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_ruma(v)) total += StoneCount{b.labels.at(v)};
  }
  return total;
}

/// A sowing move: empty `vertex` along `path`, which starts at `vertex` and
/// ends at the Ruma `ruma`.
struct SowingMove {
  Vertex vertex = 0;
  Vertex ruma = 0;
  std::vector<Vertex> path;

  friend bool operator==(const SowingMove&, const SowingMove&) = default;
  friend auto operator<=>(const SowingMove&, const SowingMove&) = default;
};

namespace detail {

inline void check_board(const SowingGraph& g, const GraphBoard& b) {
  if (b.labels.size() != g.vertex_count()) {
    throw std::invalid_argument("board has " + std::to_string(b.labels.size()) + " labels for a graph with " +
                                std::to_string(g.vertex_count()) + " vertices");
  }
}

inline void check_walk(const SowingGraph& g, Vertex v, const std::vector<Vertex>& path) {
  if (v >= g.vertex_count()) throw std::invalid_argument("vertex " + std::to_string(v) + " does not exist");
  if (g.is_ruma(v)) throw std::invalid_argument("cannot sow from Ruma vertex " + std::to_string(v));
  if (path.size() < 2) throw std::invalid_argument("walk must have at least one edge");
  if (path.front() != v) throw std::invalid_argument("walk must start at the sown vertex");
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!g.has_edge(path[i - 1], path[i])) {
      throw std::invalid_argument("walk uses missing edge (" + std::to_string(path[i - 1]) + "," +
                                  std::to_string(path[i]) + ")");
    }
  }
  if (!g.is_ruma(path.back())) throw std::invalid_argument("walk must end at a Ruma vertex");
}

}  // namespace detail

/// Empties `v` and adds one stone to each vertex after it on `path`.
inline GraphBoard sow_move(const SowingGraph& g, const GraphBoard& b, Vertex v, const std::vector<Vertex>& path) {
  detail::check_board(g, b);
  detail::check_walk(g, v, path);
  const BinCount stones = b.labels[v];
  if (stones == 0) throw std::invalid_argument("vertex " + std::to_string(v) + " is empty");
  if (path.size() - 1 != stones) {
    throw std::invalid_argument("walk has " + std::to_string(path.size() - 1) + " edges but vertex " +
                                std::to_string(v) + " holds " + std::to_string(stones) + " stones");
  }
  GraphBoard out = b;
  out.labels[v] = 0;
  for (std::size_t i = 1; i < path.size(); ++i) ++out.labels[path[i]];
  return out;
}

/// Inverse of sow_move: takes one stone from each non-Ruma vertex after `v`
/// on `path` (once per visit) and puts the walk's edge count on `v`. Because
/// sowing refills `v` once per revisit, `v` must hold exactly as many stones
/// as the walk revisits it. Ruma labels are left alone.
inline GraphBoard unplay_move(const SowingGraph& g, const GraphBoard& b, Vertex v, Vertex r,
                              const std::vector<Vertex>& path) {
  detail::check_board(g, b);
  detail::check_walk(g, v, path);
  if (path.back() != r) throw std::invalid_argument("walk does not end at Ruma " + std::to_string(r));
  GraphBoard out = b;
  std::vector<BinCount> visits(g.vertex_count(), 0);
  for (std::size_t i = 1; i < path.size(); ++i) ++visits[path[i]];
  if (b.labels[v] != visits[v]) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " holds " + std::to_string(b.labels[v]) +
                                " stones but the walk revisits it " + std::to_string(visits[v]) + " times");
  }
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (g.is_ruma(x) || x == v) continue;
    if (b.labels[x] < visits[x]) {
      throw std::invalid_argument("vertex " + std::to_string(x) + " holds " + std::to_string(b.labels[x]) +
                                  " stones but the walk passes it " + std::to_string(visits[x]) + " times");
    }
    out.labels[x] -= visits[x];
  }
  out.labels[v] = path.size() - 1;
  return out;
}

// ---------------------------------------------------------------------------
// Structure

namespace detail {

/// Strongly connected components (Tarjan); returns the component id of each
/// vertex.
inline std::vector<std::size_t> strong_components(const SowingGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::size_t next_index = 0, next_comp = 0;

  std::function<void(Vertex)> visit = [&](Vertex v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (Vertex w : g.successors(v)) {
      if (index[w] == kUnset) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      Vertex w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = next_comp;
      } while (w != v);
      ++next_comp;
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    if (index[v] == kUnset) visit(v);
  }
  return comp;
}

/// Vertices lying on some directed cycle (self-loops included).
inline std::vector<bool> cyclic_vertices(const SowingGraph& g) {
  const auto comp = strong_components(g);
  std::vector<std::size_t> size(g.vertex_count(), 0);
  for (std::size_t c : comp) ++size[c];
  std::vector<bool> out(g.vertex_count(), false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = size[comp[v]] > 1 || g.has_edge(v, v);
  return out;
}

/// Vertices reachable from `sources` (which count as reached), following
/// edges forward or, with `reverse`, backward.
inline std::vector<bool> reachable(const SowingGraph& g, const std::vector<Vertex>& sources, bool reverse) {
  std::vector<std::vector<Vertex>> adj(g.vertex_count());
  for (const auto& [a, b] : g.edges()) {
    if (reverse) {
      adj[b].push_back(a);
    } else {
      adj[a].push_back(b);
    }
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

inline bool ruma_subgraph_has_cycle(const SowingGraph& g) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (g.is_ruma(e.first) && g.is_ruma(e.second)) edges.push_back(e);
  }
  if (edges.empty()) return false;
  const auto cyclic = cyclic_vertices(SowingGraph(g.vertex_count(), std::move(edges), g.ruma()));
  return std::find(cyclic.begin(), cyclic.end(), true) != cyclic.end();
}

}  // namespace detail

enum class InfiniteReason {
  kNone,
  kMixedCycle,  // a directed cycle through both a Ruma and a non-Ruma vertex
  kRumaCycle,   // a cycle of Rumas reachable from a non-Ruma vertex
  kBinCycle,    // a cycle of non-Ruma vertices that can reach a Ruma
};

struct FinitenessReport {
  bool finite = true;
  InfiniteReason reason = InfiniteReason::kNone;
  /// kMixedCycle: (Ruma, non-Ruma) on a common cycle. Otherwise (u, c): a
  /// non-Ruma vertex u whose walks reach the cyclic vertex c and then a Ruma.
  std::optional<std::pair<Vertex, Vertex>> witness;

  explicit operator bool() const { return finite; }
};

/// Decides whether the sowing graph has finitely many winning boards.
///
/// A cycle through both a Ruma and a non-Ruma vertex always yields infinitely
/// many; this is detected per strongly connected component, since two
/// vertices in one component lie on a common closed walk. Because sowing
/// walks may repeat vertices, any non-Ruma vertex with walks of unbounded
/// length to a Ruma also gives infinitely many, which happens exactly when
/// some cyclic vertex is reachable from it and can reach a Ruma. Otherwise
/// every label is bounded by the longest walk from its vertex, so the game
/// graph is finite.
inline FinitenessReport has_finite_game_graph(const SowingGraph& g) {
  const auto comp = detail::strong_components(g);
  std::map<std::size_t, std::pair<std::optional<Vertex>, std::optional<Vertex>>> seen;  // comp -> (ruma, bin)
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto& [r, b] = seen[comp[v]];
    (g.is_ruma(v) ? r : b) = v;
    if (r && b) return {false, InfiniteReason::kMixedCycle, std::pair{*r, *b}};
  }

  std::vector<Vertex> bins;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_ruma(v)) bins.push_back(v);
  }
  const auto from_bins = detail::reachable(g, bins, false);
  const auto to_ruma = detail::reachable(g, g.ruma(), true);
  const auto cyclic = detail::cyclic_vertices(g);
  for (Vertex c = 0; c < g.vertex_count(); ++c) {
    if (!(cyclic[c] && from_bins[c] && to_ruma[c])) continue;
    const auto feeds_c = detail::reachable(g, {c}, true);
    for (Vertex u : bins) {
      if (feeds_c[u]) {
        return {false, g.is_ruma(c) ? InfiniteReason::kRumaCycle : InfiniteReason::kBinCycle, std::pair{u, c}};
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Move generation

/// Longest walk unplay_options needs to consider on board `b`. Every non-Ruma
/// step of an unplay walk consumes a stone, so with no cycle among the Rumas a
/// walk has at most S non-Ruma steps and at most S+1 runs of at most |R| Ruma
/// steps, S being the stones on the board. With a Ruma cycle the length is
/// unbounded and `fallback` is used.
inline std::size_t unplay_walk_bound(const SowingGraph& g, const GraphBoard& b, bool ruma_cycle, std::size_t fallback) {
  if (ruma_cycle) return fallback;
  const StoneCount s = stones_on_board(g, b);
  const StoneCount bound = s + (s + StoneCount{1}) * StoneCount{g.ruma().size()};
  return bound.fits_u64() ? static_cast<std::size_t>(bound.raw()) : fallback;
}

namespace detail {

/// Depth-first search over walks from `v`, in lexicographic order of vertex
/// sequences. `admit(w, visits)` decides whether the walk may step to `w`;
/// `arrive(cur, path, visits)` is called on every walk prefix and returns
/// whether to extend it. Prefixes that reach an already seen (vertex, length,
/// non-Ruma visit counts) state are cut, since everything after them has been
/// seen.
template <typename Admit, typename Arrive>
void search_walks(const SowingGraph& g, Vertex v, Admit admit, Arrive arrive) {
  struct Frame {
    Vertex at;
    std::size_t next;
  };
  std::vector<BinCount> visits(g.vertex_count(), 0);
  std::vector<Vertex> path{v};
  std::set<std::vector<std::uint64_t>> explored;
  auto enter = [&](Vertex cur) {
    std::vector<std::uint64_t> state{cur, path.size()};
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      if (!g.is_ruma(x)) state.push_back(visits[x]);
    }
    if (!explored.insert(std::move(state)).second) return false;
    return arrive(cur, path, visits);
  };
  std::vector<Frame> stack;
  if (enter(v)) stack.push_back({v, 0});
  while (!stack.empty()) {
    const auto succ = g.successors(stack.back().at);
    if (stack.back().next == succ.size()) {
      stack.pop_back();
      if (!stack.empty()) {
        --visits[path.back()];
        path.pop_back();
      }
      continue;
    }
    const Vertex w = succ[stack.back().next++];
    if (!admit(w, visits)) continue;
    ++visits[w];
    path.push_back(w);
    if (enter(w)) {
      stack.push_back({w, 0});
    } else {
      path.pop_back();
      --visits[w];
    }
  }
}

inline void sort_moves(std::vector<SowingMove>& moves) {
  std::sort(moves.begin(), moves.end(), [](const SowingMove& a, const SowingMove& c) {
    return std::tie(a.vertex, a.ruma, a.path) < std::tie(c.vertex, c.ruma, c.path);
  });
}

}  // namespace detail

/// Unplay moves available on `b` with walks of at most `max_walk` edges,
/// sorted by (vertex, ruma, path). The result of a move depends only on the
/// walk's end, length and visit counts, so walks that agree on these are
/// merged and the lexicographically first one is kept. `cut_short`, when
/// given, is set if some walk was stopped by `max_walk` before reaching its
/// end.
inline std::vector<SowingMove> unplay_options(const SowingGraph& g, const GraphBoard& b, std::size_t max_walk,
                                              bool* cut_short = nullptr) {
  detail::check_board(g, b);
  const auto to_ruma = detail::reachable(g, g.ruma(), true);
  std::vector<SowingMove> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_ruma(v)) continue;
    detail::search_walks(
        g, v,
        [&](Vertex w, const std::vector<BinCount>& visits) {
          return to_ruma[w] && (g.is_ruma(w) || visits[w] < b.labels[w]);
        },
        [&](Vertex cur, const std::vector<Vertex>& path, const std::vector<BinCount>& visits) {
          if (path.size() > 1 && g.is_ruma(cur) && visits[v] == b.labels[v]) out.push_back({v, cur, path});
          if (path.size() - 1 < max_walk) return true;
          if (cut_short) *cut_short = true;
          return false;
        });
  }
  detail::sort_moves(out);
  return out;
}

/// Legal sowing moves on `b`, merged and sorted as in unplay_options.
inline std::vector<SowingMove> play_options(const SowingGraph& g, const GraphBoard& b) {
  detail::check_board(g, b);
  const auto to_ruma = detail::reachable(g, g.ruma(), true);
  std::vector<SowingMove> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_ruma(v) || b.labels[v] == 0) continue;
    const std::size_t len = b.labels[v];
    detail::search_walks(
        g, v, [&](Vertex w, const std::vector<BinCount>&) { return to_ruma[w]; },
        [&](Vertex cur, const std::vector<Vertex>& path, const std::vector<BinCount>&) {
          if (path.size() - 1 < len) return true;
          if (g.is_ruma(cur)) out.push_back({v, cur, path});
          return false;
        });
  }
  detail::sort_moves(out);
  return out;
}

// ---------------------------------------------------------------------------
// Game graph

/// Sowing `from` with any of `moves` gives `to`.
struct GameEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::vector<SowingMove> moves;
};

struct GameGraph {
  std::vector<GraphBoard> nodes;  // nodes[0] is the zero board
  std::vector<GameEdge> edges;
  bool truncated = false;  // the node cap, or a walk cap on an infinite graph, cut the search
  FinitenessReport finiteness;

  [[nodiscard]] std::optional<std::size_t> find(const GraphBoard& b) const {
    auto it = std::find(nodes.begin(), nodes.end(), b);
    if (it == nodes.end()) return std::nullopt;
    return static_cast<std::size_t>(it - nodes.begin());
  }
  [[nodiscard]] std::size_t out_degree(std::size_t node) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [&](const GameEdge& e) { return e.from == node; }));
  }
};

/// Breadth-first closure of unplay moves from the zero board, keeping at most
/// `cap` boards. Boards are numbered in discovery order. Once the cap is hit
/// the board being expanded is finished and the search stops, so boards
/// queued after it have no outgoing edges recorded.
inline GameGraph enumerate_winning_boards(const SowingGraph& g, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("enumerate_winning_boards: cap must be positive");
  GameGraph out;
  out.finiteness = has_finite_game_graph(g);
  const bool ruma_cycle = detail::ruma_subgraph_has_cycle(g);
  const std::size_t fallback = cap * g.vertex_count();

  bool walks_cut = false;
  std::map<GraphBoard, std::size_t> ids;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_ids;
  out.nodes.push_back(zero_board(g));
  ids.emplace(out.nodes[0], 0);

  for (std::size_t cur = 0; cur < out.nodes.size() && !out.truncated; ++cur) {
    const GraphBoard board = out.nodes[cur];
    std::size_t max_walk = unplay_walk_bound(g, board, ruma_cycle, fallback);
    bool cut = false;
    if (!out.finiteness.finite) max_walk = std::min(max_walk, fallback);
    auto moves = unplay_options(g, board, max_walk, &cut);
    walks_cut = walks_cut || (cut && !out.finiteness.finite);
    for (SowingMove& mv : moves) {
      GraphBoard next = position(g, unplay_move(g, board, mv.vertex, mv.ruma, mv.path));
      auto it = ids.find(next);
      if (it == ids.end()) {
        if (out.nodes.size() >= cap) {
          out.truncated = true;
          continue;
        }
        it = ids.emplace(next, out.nodes.size()).first;
        out.nodes.push_back(std::move(next));
      }
      const auto key = std::pair{it->second, cur};
      auto e = edge_ids.find(key);
      if (e == edge_ids.end()) {
        e = edge_ids.emplace(key, out.edges.size()).first;
        out.edges.push_back({it->second, cur, {}});
      }
      out.edges[e->second].moves.push_back(std::move(mv));
    }
  }
  out.truncated = out.truncated || walks_cut;
  return out;
}

// ---------------------------------------------------------------------------
// Standard shapes. Vertex 0 is always the (single) Ruma.

/// Bins 1..length in a row, each sowing toward the Ruma at vertex 0.
inline SowingGraph make_path(std::size_t length) {
  if (length < 1) throw std::invalid_argument("make_path: length must be >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= length; ++i) edges.emplace_back(i, i - 1);
  return SowingGraph(length + 1, std::move(edges), {0});
}

/// A directed cycle on `length` vertices: i -> i-1, and the Ruma 0 -> length-1.
inline SowingGraph make_cycle(std::size_t length) {
  if (length < 1) throw std::invalid_argument("make_cycle: length must be >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < length; ++i) edges.emplace_back(i, i - 1);
  edges.emplace_back(0, length - 1);
  return SowingGraph(length, std::move(edges), {0});
}

/// `spokes` paths of `length` bins draining into a central Ruma. Bin j of
/// spoke s is vertex 1 + s * length + (j - 1).
inline SowingGraph make_star(std::size_t spokes, std::size_t length) {
  if (spokes < 1 || length < 1) throw std::invalid_argument("make_star: spokes and length must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < spokes; ++s) {
    const Vertex base = 1 + s * length;
    edges.emplace_back(base, 0);
    for (std::size_t j = 1; j < length; ++j) edges.emplace_back(base + j, base + j - 1);
  }
  return SowingGraph(1 + spokes * length, std::move(edges), {0});
}

/// Board of a path graph as a linear Board (and back).
inline Board path_board(const GraphBoard& b) {
  return Board(std::vector<BinCount>(b.labels.begin() + 1, b.labels.end()));
}
inline GraphBoard path_graph_board(const Board& b, std::size_t length) {
  GraphBoard out{std::vector<BinCount>(length + 1, 0)};
  for (BinIndex i = 1; i <= b.length(); ++i) out.labels.at(i) = b[i];
  return out;
}

/// The unplay move chosen on a make_cycle(length) board: into the non-Ruma
/// vertex of least label nearest the Ruma (walking backward), with a walk
/// that wraps the cycle once per stone it holds.
inline SowingMove cycle_unplay_move(std::size_t length, const GraphBoard& b) {
  if (length < 2) throw std::invalid_argument("cycle game needs at least one bin");
  Vertex best = 1;
  for (Vertex v = 2; v < length; ++v) {
    if (b.labels.at(v) < b.labels.at(best)) best = v;
  }
  const StoneCount walk_len = StoneCount{best} + StoneCount{b.labels[best]} * StoneCount{length};
  SowingMove mv{best, 0, {best}};
  Vertex cur = best;
  for (std::uint64_t step = 0; StoneCount{step} < walk_len; ++step) {
    cur = cur == 0 ? length - 1 : cur - 1;
    mv.path.push_back(cur);
  }
  return mv;
}

struct CycleGameOptions {
  std::uint64_t max_walk = 10'000'000;
};

/// Stones on the first `board_limit` boards of the cycle game, starting from
/// the empty board and applying cycle_unplay_move.
inline std::vector<StoneCount> cycle_attained_counts(std::size_t length, std::size_t board_limit,
                                                     const CycleGameOptions& opts = {}) {
  if (length < 2) throw std::invalid_argument("cycle_attained_counts: length must be >= 2");
  const SowingGraph g = make_cycle(length);
  std::vector<StoneCount> out;
  GraphBoard b = zero_board(g);
  while (out.size() < board_limit) {
    out.push_back(stones_on_board(g, b));
    if (out.size() == board_limit) break;
    Vertex best = 1;
    for (Vertex v = 2; v < length; ++v) {
      if (b.labels[v] < b.labels[best]) best = v;
    }
    if (StoneCount{best} + StoneCount{b.labels[best]} * StoneCount{length} > StoneCount{opts.max_walk}) {
      throw LimitError("cycle game walk exceeds " + std::to_string(opts.max_walk) + " edges");
    }
    const SowingMove mv = cycle_unplay_move(length, b);
    b = unplay_move(g, b, mv.vertex, mv.ruma, mv.path);
  }
  return out;
}

}  // namespace tchouk

#endif  // TCHOUK_GRAPH_HPP
