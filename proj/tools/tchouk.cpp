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

// tchouk: command-line front end to the Tchoukaillon library.
//
// Exit codes: 0 success, 1 negative answer (infeasible constraints, infinite
// or truncated game graph), 2 usage, parse or overflow error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tchouk/io.hpp"
#include "tchouk/tchouk.hpp"

namespace {

using tchouk::StoneCount;

enum class OutputFormat { kTable, kJson, kCsv, kDot };

const std::map<std::string, OutputFormat> kFormats = {
    {"table", OutputFormat::kTable}, {"json", OutputFormat::kJson},
    {"csv", OutputFormat::kCsv},     {"dot", OutputFormat::kDot}};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_format(CLI::App* cmd, OutputFormat& fmt) {
  cmd->add_option("--format", fmt, "Output format: table, json, csv or dot")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

void reject_dot(OutputFormat fmt) {
  if (fmt == OutputFormat::kDot) throw UsageError("--format dot is only available for game graphs");
}

template <typename T>
std::string join(const std::vector<T>& items, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? sep : "") << items[i];
  return os.str();
}

nlohmann::json counts_to_json(const std::vector<StoneCount>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (auto s : v) out.push_back(tchouk::stone_count_to_json(s));
  return out;
}

void print_counts(const std::vector<StoneCount>& v, OutputFormat fmt) {
  reject_dot(fmt);
  if (fmt == OutputFormat::kJson) {
    std::cout << counts_to_json(v).dump() << '\n';
  } else {
    std::cout << join(v, fmt == OutputFormat::kCsv ? "," : " ") << '\n';
  }
}

tchouk::PartialConstraint parse_constraints(const std::vector<std::string>& pairs, const std::string& file) {
  tchouk::PartialConstraint pc;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open constraint file " + file);
    try {
      pc = tchouk::partial_constraint_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("malformed constraint file: ") + e.what());
    }
  }
  for (const std::string& p : pairs) {
    const auto eq = p.find('=');
    if (p.size() < 4 || p[0] != 'm' || eq == std::string::npos || eq < 2) {
      throw UsageError("constraint '" + p + "' is not of the form m<i>=<v>");
    }
    const StoneCount i = StoneCount::parse(p.substr(1, eq - 1));
    const StoneCount v = StoneCount::parse(p.substr(eq + 1));
    pc.set(i.to_u64(), v.to_u64());
  }
  return pc;
}

int print_reconstruction(const tchouk::Reconstruction& r, OutputFormat fmt) {
  reject_dot(fmt);
  if (fmt == OutputFormat::kJson) {
    nlohmann::json j = {{"feasible", true},
                        {"n", tchouk::stone_count_to_json(r.n)},
                        {"board", tchouk::board_to_json(r.board)},
                        {"completion", r.completion},
                        {"period", tchouk::stone_count_to_json(r.period)}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "n=" << r.n << '\n'
              << "board=" << tchouk::to_string(r.board) << '\n'
              << "completion=[" << join(r.completion, ",") << "]\n"
              << "period=" << r.period << '\n';
  }
  return 0;
}

tchouk::SowingGraph load_graph(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open graph file " + file);
  try {
    return tchouk::sowing_graph_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed graph file: ") + e.what());
  }
}

std::string describe(const tchouk::FinitenessReport& r) {
  if (r.finite) return "finite";
  std::string out = std::string("infinite (") + tchouk::to_string(r.reason);
  if (r.witness) out += ": vertices " + std::to_string(r.witness->first) + "," + std::to_string(r.witness->second);
  return out + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tchoukaillon boards, sieves, partial-board reconstruction and sowing graphs"};
  app.require_subcommand(1);
  OutputFormat fmt = OutputFormat::kTable;

  // board
  std::string board_n;
  bool board_moves = false;
  auto* board_cmd = app.add_subcommand("board", "Winning board with n stones");
  board_cmd->add_option("n", board_n, "Number of stones")->required();
  board_cmd->add_flag("--moves", board_moves, "Also print the bins played to clear it");
  add_format(board_cmd, fmt);

  // table
  std::string table_n;
  std::optional<std::size_t> table_bins;
  auto* table_cmd = app.add_subcommand("table", "Rows n, length, b_1..b_K for n = 0..n_max");
  table_cmd->add_option("n_max", table_n, "Last row")->required();
  table_cmd->add_option("--bins", table_bins, "Number of bin columns (default: longest board)");
  add_format(table_cmd, fmt);

  // enumerate
  std::size_t enum_len = 0;
  auto* enum_cmd = app.add_subcommand("enumerate", "All winning boards of a given length");
  enum_cmd->add_option("length", enum_len, "Board length")->required();
  add_format(enum_cmd, fmt);

  // nf
  std::optional<std::size_t> nf_len, nf_seq;
  auto* nf_cmd = app.add_subcommand("nf", "Minimum stones on a board of a given length");
  nf_cmd->add_option("length", nf_len, "Board length");
  nf_cmd->add_option("--sequence", nf_seq, "Print nf(1..L) instead");
  add_format(nf_cmd, fmt);

  // bounds
  std::size_t bounds_len = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Lower bound, nf and upper bound for a length");
  bounds_cmd->add_option("length", bounds_len, "Board length (>= 2)")->required();
  add_format(bounds_cmd, fmt);

  // sieve
  std::size_t sieve_k = 0, sieve_count = 0;
  bool sieve_steps = false;
  auto* sieve_cmd = app.add_subcommand("sieve", "First elements of sieve stage k");
  sieve_cmd->add_option("k", sieve_k, "Stage")->required();
  sieve_cmd->add_option("count", sieve_count, "Number of elements")->required();
  sieve_cmd->add_flag("--by-steps", sieve_steps, "Compute by repeated positional removal instead of scanning");
  add_format(sieve_cmd, fmt);

  // reconstruct
  std::vector<std::string> rec_pairs;
  std::string rec_file;
  bool rec_minimal = false, rec_prime = false, rec_within = false;
  auto* rec_cmd = app.add_subcommand(
      "reconstruct",
      "Winning board agreeing with constraints m<i>=<v>. Bins are numbered from 2 here: m<i> is bin i-1 of `board`.");
  rec_cmd->add_option("constraints", rec_pairs, "Constraints m<i>=<v>, bins numbered from 2");
  rec_cmd->add_option("--file", rec_file, "JSON constraint file");
  rec_cmd->add_flag("--minimal", rec_minimal, "Search every completion for the least n");
  rec_cmd->add_flag("--within-board", rec_within,
                    "With --minimal: the board must reach the last constrained bin (no zero padding)");
  rec_cmd->add_flag("--prime", rec_prime, "Direct fill for constraints at prime indices only");
  add_format(rec_cmd, fmt);

  // graph
  std::string graph_file, graph_action;
  std::size_t graph_cap = 10000;
  auto* graph_cmd = app.add_subcommand("graph", "Sowing-graph analysis");
  graph_cmd->add_option("file", graph_file, "Graph JSON file")->required()->check(CLI::ExistingFile);
  graph_cmd->add_option("action", graph_action, "check-finite, enumerate or dot")
      ->required()
      ->check(CLI::IsMember({"check-finite", "enumerate", "dot"}));
  graph_cmd->add_option("--cap", graph_cap, "Maximum number of boards to enumerate");
  add_format(graph_cmd, fmt);

  // cycle
  std::size_t cycle_len = 0, cycle_limit = 0;
  auto* cycle_cmd = app.add_subcommand("cycle", "Stone totals along the game on a directed cycle");
  cycle_cmd->add_option("length", cycle_len, "Cycle length including the Ruma")->required();
  cycle_cmd->add_option("limit", cycle_limit, "Number of boards")->required();
  add_format(cycle_cmd, fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (board_cmd->parsed()) {
      reject_dot(fmt);
      const StoneCount n = StoneCount::parse(board_n);
      const tchouk::Board b = tchouk::board_from_stones(n);
      std::vector<tchouk::BinIndex> moves;
      if (board_moves) moves = tchouk::play_sequence(n);
      if (fmt == OutputFormat::kJson) {
        nlohmann::json j = {{"n", tchouk::stone_count_to_json(n)}, {"length", b.length()}, {"board", tchouk::board_to_json(b)}};
        if (board_moves) j["moves"] = moves;
        std::cout << j.dump() << '\n';
      } else if (fmt == OutputFormat::kCsv) {
        std::cout << join(std::vector<tchouk::BinCount>(b.bins().begin(), b.bins().end()), ",") << '\n';
        if (board_moves) std::cout << join(moves, ",") << '\n';
      } else {
        std::cout << tchouk::to_string(b) << '\n' << "n=" << n << " length=" << b.length() << '\n';
        if (board_moves) std::cout << "moves=" << join(moves, " ") << '\n';
      }
    } else if (table_cmd->parsed()) {
      reject_dot(fmt);
      const auto rows = tchouk::board_table(StoneCount::parse(table_n).to_u64(), table_bins);
      if (fmt == OutputFormat::kJson) {
        std::cout << tchouk::table_to_json(rows).dump() << '\n';
      } else if (fmt == OutputFormat::kCsv) {
        std::cout << tchouk::render_table_csv(rows);
      } else {
        std::cout << tchouk::render_table_text(rows);
      }
    } else if (enum_cmd->parsed()) {
      reject_dot(fmt);
      const auto boards = tchouk::enumerate_boards(enum_len);
      if (fmt == OutputFormat::kJson) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& b : boards) j.push_back(tchouk::board_to_json(b));
        std::cout << j.dump() << '\n';
      } else {
        for (const auto& b : boards) {
          if (fmt == OutputFormat::kCsv) {
            std::cout << b.stones() << ',' << join(std::vector<tchouk::BinCount>(b.bins().begin(), b.bins().end()), ",") << '\n';
          } else {
            std::cout << b.stones() << ' ' << tchouk::to_string(b) << '\n';
          }
        }
      }
    } else if (nf_cmd->parsed()) {
      if (nf_seq) {
        print_counts(tchouk::min_stones_sequence(*nf_seq), fmt);
      } else if (nf_len) {
        print_counts({tchouk::min_stones(*nf_len)}, fmt);
      } else {
        throw UsageError("nf needs a length or --sequence L");
      }
    } else if (bounds_cmd->parsed()) {
      reject_dot(fmt);
      const auto b = tchouk::check_bounds(bounds_len);
      if (fmt == OutputFormat::kJson) {
        std::cout << nlohmann::json{{"lower", tchouk::stone_count_to_json(b.lower)},
                                    {"value", tchouk::stone_count_to_json(b.value)},
                                    {"upper", tchouk::stone_count_to_json(b.upper)},
                                    {"holds", b.holds()}}
                         .dump()
                  << '\n';
      } else {
        std::cout << join(std::vector<StoneCount>{b.lower, b.value, b.upper}, fmt == OutputFormat::kCsv ? "," : " ")
                  << '\n';
      }
    } else if (sieve_cmd->parsed()) {
      print_counts(sieve_steps ? tchouk::sieve_stage_by_steps(sieve_k, sieve_count)
                               : tchouk::sieve_stage(sieve_k, sieve_count),
                   fmt);
    } else if (rec_cmd->parsed()) {
      reject_dot(fmt);
      const tchouk::PartialConstraint pc = parse_constraints(rec_pairs, rec_file);
      if (rec_prime) return print_reconstruction(tchouk::prime_reconstruct(pc), fmt);
      if (rec_within && !rec_minimal) throw UsageError("--within-board needs --minimal");
      const auto r = rec_minimal ? tchouk::reconstruct_minimal(pc, {}, {.within_board = rec_within})
                                 : tchouk::reconstruct(pc);
      if (!r) {
        if (fmt == OutputFormat::kJson) {
          std::cout << nlohmann::json{{"feasible", false}, {"reason", r.reason}}.dump() << '\n';
        } else {
          std::cout << "infeasible: " << r.reason << '\n';
        }
        return 1;
      }
      return print_reconstruction(*r.value, fmt);
    } else if (graph_cmd->parsed()) {
      const tchouk::SowingGraph g = load_graph(graph_file);
      if (graph_action == "check-finite") {
        reject_dot(fmt);
        const auto report = tchouk::has_finite_game_graph(g);
        if (fmt == OutputFormat::kJson) {
          std::cout << tchouk::finiteness_to_json(report).dump() << '\n';
        } else {
          std::cout << describe(report) << '\n';
        }
        return report.finite ? 0 : 1;
      }
      const auto gg = tchouk::enumerate_winning_boards(g, graph_cap);
      if (graph_action == "dot" || fmt == OutputFormat::kDot) {
        std::cout << tchouk::game_graph_to_dot(g, gg);
      } else if (fmt == OutputFormat::kJson) {
        std::cout << tchouk::game_graph_to_json(g, gg).dump() << '\n';
      } else {
        for (std::size_t i = 0; i < gg.nodes.size(); ++i) {
          std::cout << i << ' ' << tchouk::bin_labels(g, gg.nodes[i]) << " stones=" << tchouk::stones_on_board(g, gg.nodes[i])
                    << '\n';
        }
        std::cout << "boards=" << gg.nodes.size() << " edges=" << gg.edges.size() << ' ' << describe(gg.finiteness)
                  << (gg.truncated ? " truncated" : "") << '\n';
      }
      if (gg.truncated) {
        std::cerr << "search incomplete: " << gg.nodes.size() << " boards found, cap " << graph_cap << '\n';
      }
      return gg.truncated ? 1 : 0;
    } else if (cycle_cmd->parsed()) {
      print_counts(tchouk::cycle_attained_counts(cycle_len, cycle_limit), fmt);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
