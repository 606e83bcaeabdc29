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

// Text and JSON forms shared by the command-line tool and the tests.
//
//   Board              [1,2,0,2,4,6]
//   PartialConstraint  {"indexing": "paper-section-4", "3": 1, "7": 2}
//   SowingGraph        {"vertices": 4, "edges": [[1,0],[2,1]], "ruma": [0]}
//   GameGraph          {"nodes": [...], "edges": [...], "truncated": false, ...}

#ifndef TCHOUK_IO_HPP
#define TCHOUK_IO_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tchouk/board.hpp"
#include "tchouk/crt.hpp"
#include "tchouk/graph.hpp"
#include "tchouk/stone_count.hpp"

namespace tchouk {

/// Value of the "indexing" field of a constraint file. Bins are numbered from 2.
inline constexpr const char* kConstraintIndexing = "paper-section-4";

/// Stone counts go to JSON as numbers when they fit in 64 bits, else as
/// decimal strings.
inline nlohmann::json stone_count_to_json(StoneCount s) {
  if (s.fits_u64()) return s.to_u64();
  return s.to_string();
}

inline StoneCount stone_count_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return StoneCount{j.get<std::uint64_t>()};
  if (j.is_string()) return StoneCount::parse(j.get<std::string>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return StoneCount{j.get<std::uint64_t>()};
  throw std::invalid_argument("expected a non-negative integer, got " + j.dump());
}

inline nlohmann::json board_to_json(const Board& b) {
  return nlohmann::json(std::vector<BinCount>(b.bins().begin(), b.bins().end()));
}

inline Board board_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("board must be a JSON array");
  std::vector<BinCount> bins;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      throw std::invalid_argument("bin counts must be non-negative integers, got " + v.dump());
    }
    bins.push_back(v.get<BinCount>());
  }
  if (!bins.empty() && bins.back() == 0) throw std::invalid_argument("board has trailing zeros");
  return Board(std::move(bins));
}

inline nlohmann::json partial_constraint_to_json(const PartialConstraint& pc) {
  nlohmann::json j = nlohmann::json::object();
  j["indexing"] = kConstraintIndexing;
  for (const auto& [i, m] : pc.entries()) j[std::to_string(i)] = m;
  return j;
}

inline PartialConstraint partial_constraint_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("constraints must be a JSON object");
  if (!j.contains("indexing") || j["indexing"] != kConstraintIndexing) {
    throw std::invalid_argument(std::string("constraints need \"indexing\": \"") + kConstraintIndexing + "\"");
  }
  PartialConstraint pc;
  for (const auto& [key, value] : j.items()) {
    if (key == "indexing") continue;
    if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("constraint key '" + key + "' is not a decimal bin index");
    }
    if (!value.is_number_unsigned()) throw std::invalid_argument("constraint value for bin " + key + " must be a non-negative integer");
    pc.set(std::stoull(key), value.get<BinCount>());
  }
  return pc;
}

inline nlohmann::json sowing_graph_to_json(const SowingGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return {{"vertices", g.vertex_count()}, {"edges", edges}, {"ruma", g.ruma()}};
}

inline SowingGraph sowing_graph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("vertices").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a [from, to] pair: " + e.dump());
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    return SowingGraph(n, std::move(edges), j.at("ruma").get<std::vector<Vertex>>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed sowing graph: ") + e.what());
  }
}

inline const char* to_string(InfiniteReason r) {
  switch (r) {
    case InfiniteReason::kNone: return "none";
    case InfiniteReason::kMixedCycle: return "mixed-cycle";
    case InfiniteReason::kRumaCycle: return "ruma-cycle";
    case InfiniteReason::kBinCycle: return "bin-cycle";
  }
  return "unknown";
}

inline nlohmann::json finiteness_to_json(const FinitenessReport& r) {
  nlohmann::json j = {{"finite", r.finite}, {"reason", to_string(r.reason)}};
  if (r.witness) j["witness"] = {r.witness->first, r.witness->second};
  return j;
}

inline nlohmann::json game_graph_to_json(const SowingGraph& g, const GameGraph& gg) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < gg.nodes.size(); ++i) {
    nodes.push_back({{"id", i}, {"labels", gg.nodes[i].labels}, {"stones", stone_count_to_json(stones_on_board(g, gg.nodes[i]))}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : gg.edges) {
    nlohmann::json moves = nlohmann::json::array();
    for (const auto& m : e.moves) moves.push_back({{"vertex", m.vertex}, {"ruma", m.ruma}, {"path", m.path}});
    edges.push_back({{"from", e.from}, {"to", e.to}, {"moves", moves}});
  }
  return {{"graph", sowing_graph_to_json(g)},
          {"nodes", nodes},
          {"edges", edges},
          {"truncated", gg.truncated},
          {"finiteness", finiteness_to_json(gg.finiteness)}};
}

/// "(1,2,0)": labels of the non-Ruma vertices in vertex order.
inline std::string bin_labels(const SowingGraph& g, const GraphBoard& b) {
  std::string out = "(";
  bool first = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_ruma(v)) continue;
    if (!first) out += ',';
    first = false;
    out += std::to_string(b.labels.at(v));
  }
  return out + ")";
}

/// Graphviz rendering; edges point in the sowing direction and are labelled
/// with the sown vertex.
inline std::string game_graph_to_dot(const SowingGraph& g, const GameGraph& gg) {
  std::ostringstream os;
  os << "digraph game {\n";
  for (const auto& b : gg.nodes) os << "  \"" << bin_labels(g, b) << "\";\n";
  for (const auto& e : gg.edges) {
    std::string label;
    for (const auto& m : e.moves) {
      const std::string v = std::to_string(m.vertex);
      if (label.find(v) == std::string::npos) label += (label.empty() ? "" : ",") + v;
    }
    os << "  \"" << bin_labels(g, gg.nodes[e.from]) << "\" -> \"" << bin_labels(g, gg.nodes[e.to])
       << "\" [label=\"" << label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Board tables: one row per n with columns n, length, b_1 .. b_K.

struct TableRow {
  StoneCount n;
  BinIndex length = 0;
  std::vector<BinCount> bins;  // exactly K entries
};

/// Rows for n = 0..n_max. `bins` defaults to the longest board in range.
inline std::vector<TableRow> board_table(std::uint64_t n_max, std::optional<BinIndex> bins = std::nullopt) {
  std::vector<Board> boards;
  Board b;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    boards.push_back(b);
    if (n < n_max) b = unplay(b);
  }
  const BinIndex k = bins.value_or(boards.back().length());
  std::vector<TableRow> rows;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    TableRow row{StoneCount{n}, boards[n].length(), {}};
    for (BinIndex i = 1; i <= k; ++i) row.bins.push_back(boards[n][i]);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string render_table_text(const std::vector<TableRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  const std::size_t k = rows.empty() ? 0 : rows.front().bins.size();
  std::vector<std::string> header = {"n", "l"};
  for (std::size_t i = 1; i <= k; ++i) header.push_back("b" + std::to_string(i));
  cells.push_back(header);
  for (const auto& r : rows) {
    std::vector<std::string> line = {r.n.to_string(), std::to_string(r.length)};
    for (BinCount v : r.bins) line.push_back(std::to_string(v));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::string out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out += ' ';
      out += std::string(width[c] - line[c].size(), ' ') + line[c];
    }
    out += '\n';
  }
  return out;
}

inline std::string render_table_csv(const std::vector<TableRow>& rows) {
  const std::size_t k = rows.empty() ? 0 : rows.front().bins.size();
  std::string out = "n,l";
  for (std::size_t i = 1; i <= k; ++i) out += ",b" + std::to_string(i);
  out += '\n';
  for (const auto& r : rows) {
    out += r.n.to_string() + ',' + std::to_string(r.length);
    for (BinCount v : r.bins) out += ',' + std::to_string(v);
    out += '\n';
  }
  return out;
}

inline nlohmann::json table_to_json(const std::vector<TableRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) out.push_back({{"n", stone_count_to_json(r.n)}, {"length", r.length}, {"bins", r.bins}});
  return out;
}

/// Parses CSV produced by render_table_csv back into boards.
inline std::vector<std::pair<StoneCount, Board>> parse_table_csv(const std::string& text) {
  std::vector<std::pair<StoneCount, Board>> out;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::istringstream cells(line);
    std::string cell;
    std::vector<std::string> fields;
    while (std::getline(cells, cell, ',')) fields.push_back(cell);
    if (fields.size() < 2) throw std::invalid_argument("short CSV row: " + line);
    std::vector<BinCount> bins;
    for (std::size_t c = 2; c < fields.size(); ++c) bins.push_back(std::stoull(fields[c]));
    out.emplace_back(StoneCount::parse(fields[0]), Board(std::move(bins)));
  }
  return out;
}

}  // namespace tchouk

#endif  // TCHOUK_IO_HPP
