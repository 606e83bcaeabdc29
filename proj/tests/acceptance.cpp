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

// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tchouk/io.hpp"
#include "tchouk/tchouk.hpp"

namespace {

using namespace tchouk;

// Collects failures for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  [[nodiscard]] bool ok() const { return failed_ == 0; }
  [[nodiscard]] std::string summary() const {
    std::string out = std::to_string(failed_) + " failure(s)";
    for (const auto& f : failures_) out += "; " + f;
    return out;
  }
  std::string note;

 private:
  std::vector<std::string> failures_;
  std::size_t failed_ = 0;
};

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Board from(const oracle::Bins& b) { return Board(std::vector<BinCount>(b.begin(), b.end())); }

void golden_table(Check& c) {
  const std::vector<std::vector<BinCount>> rows = {
      {0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0, 0, 0},  {2, 2, 0, 2, 0, 0, 0, 0},  {3, 2, 1, 2, 0, 0, 0, 0},
      {4, 3, 0, 1, 3, 0, 0, 0}, {5, 3, 1, 1, 3, 0, 0, 0},  {6, 4, 0, 0, 2, 4, 0, 0},  {7, 4, 1, 0, 2, 4, 0, 0},
      {8, 4, 0, 2, 2, 4, 0, 0}, {9, 4, 1, 2, 2, 4, 0, 0},  {10, 5, 0, 1, 1, 3, 5, 0}, {11, 5, 1, 1, 1, 3, 5, 0},
      {12, 6, 0, 0, 0, 2, 4, 6}, {13, 6, 1, 0, 0, 2, 4, 6}, {14, 6, 0, 2, 0, 2, 4, 6}, {15, 6, 1, 2, 0, 2, 4, 6},
      {16, 6, 0, 1, 3, 2, 4, 6}, {17, 6, 1, 1, 3, 2, 4, 6}};
  const auto table = board_table(17);
  c.expect(table.size() == 18, "expected 18 rows");
  for (std::size_t n = 0; n < std::min<std::size_t>(table.size(), 18); ++n) {
    std::vector<BinCount> got = {static_cast<BinCount>(table[n].n.to_u64()), table[n].length};
    got.insert(got.end(), table[n].bins.begin(), table[n].bins.end());
    c.expect(got == rows[n], "row " + std::to_string(n));
  }
}

void oracle_equivalence(Check& c) {
  oracle::Bins b;
  for (std::uint64_t n = 0; n <= 10000; ++n) {
    c.expect(board_from_stones(n) == from(b), "n=" + std::to_string(n));
    b = oracle::unmove(b);
  }
}

void nf_prefix(Check& c) {
  c.expect(min_stones_sequence(7) == std::vector<StoneCount>{1, 2, 4, 6, 10, 12, 18}, "sequence prefix");
  for (BinIndex l = 1; l <= 12; ++l) {
    StoneCount least = StoneCount::max();
    for (const auto& b : enumerate_boards(l)) least = std::min(least, b.stones());
    c.expect(least == min_stones(l), "length " + std::to_string(l));
  }
  std::vector<Board> six;
  for (std::uint64_t n = 12; n <= 17; ++n) six.push_back(board_from_stones(n));
  c.expect(enumerate_boards(6) == six, "length-6 boards");
}

void bounds(Check& c) {
  for (BinIndex l = 2; l <= 2000; ++l) c.expect(check_bounds(l).holds(), "length " + std::to_string(l));
  auto ratio = [](BinIndex l) { return min_stones(l).to_double() * std::numbers::pi / (double(l) * double(l)); };
  const double r100 = ratio(100), r1000 = ratio(1000);
  c.expect(std::abs(r1000 - 1) <= 0.05, "ratio at 1000 = " + str(r1000));
  c.expect(std::abs(r1000 - 1) < std::abs(r100 - 1), "no improvement from 100 to 1000");
  c.note = "ratio(100)=" + str(r100) + " ratio(1000)=" + str(r1000);
}

void sieve_rows(Check& c) {
  const std::vector<std::vector<StoneCount>> rows = {{2, 4, 6, 8, 10, 12, 14, 16, 18},
                                                     {4, 6, 10, 12, 16, 18, 22, 24, 28},
                                                     {6, 10, 12, 18, 22, 24, 30, 34, 36},
                                                     {10, 12, 18, 22, 30, 34, 36, 42, 48}};
  for (BinIndex k = 2; k <= 5; ++k) {
    c.expect(sieve_stage(k, 9) == rows[k - 2], "stage " + std::to_string(k));
    c.expect(sieve_stage_by_steps(k, 9) == rows[k - 2], "stage " + std::to_string(k) + " by steps");
  }
  for (BinIndex k = 1; k <= 6; ++k) {
    const auto next = sieve_step(sieve_stage(k, 100), k);
    c.expect(next == sieve_stage(k + 1, next.size()), "step from stage " + std::to_string(k));
  }
  for (BinIndex k = 1; k <= 20; ++k) c.expect(sieve_stage(k, 1).front() == min_stones(k), "first of stage " + std::to_string(k));
}

void crt_suite(Check& c) {
  c.expect(remainder_board(29, 11).residues == std::vector<BinCount>{1, 2, 1, 4, 5, 1, 5, 2, 9, 7}, "c(29)");
  c.expect(increasing_remainder_board(29, 11).values == std::vector<StoneCount>{1, 2, 5, 9, 11, 15, 21, 29, 29, 29},
           "increasing c(29)");
  const std::vector<std::vector<std::uint64_t>> rows = {
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},   {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {0, 2, 2, 2, 2, 2, 0, 2, 2, 2, 2, 2},   {1, 0, 3, 3, 3, 3, 1, 3, 3, 3, 3, 3},
      {0, 1, 0, 4, 4, 4, 0, 1, 4, 4, 4, 4},   {1, 2, 1, 0, 5, 5, 1, 2, 5, 5, 5, 5},
      {0, 0, 2, 1, 0, 6, 0, 0, 2, 6, 6, 6},   {1, 1, 3, 2, 1, 0, 1, 1, 3, 7, 7, 7},
      {0, 2, 0, 3, 2, 1, 0, 2, 4, 8, 8, 8},   {1, 0, 1, 4, 3, 2, 1, 3, 5, 9, 9, 9},
      {0, 1, 2, 0, 4, 3, 0, 1, 2, 5, 10, 10}, {1, 2, 3, 1, 5, 4, 1, 2, 3, 6, 11, 11},
      {0, 0, 0, 2, 0, 5, 0, 0, 0, 2, 6, 12},  {1, 1, 1, 3, 1, 6, 1, 1, 1, 3, 7, 13},
      {0, 2, 2, 4, 2, 0, 0, 2, 2, 4, 8, 14},  {1, 0, 3, 0, 3, 1, 1, 3, 3, 5, 9, 15},
      {0, 1, 0, 1, 4, 2, 0, 1, 4, 6, 10, 16}, {1, 2, 1, 2, 5, 3, 1, 2, 5, 7, 11, 17}};
  for (std::uint64_t n = 0; n < rows.size(); ++n) {
    std::vector<std::uint64_t> got(remainder_board(n, 7).residues);
    for (const auto& v : increasing_remainder_board(n, 7).values) got.push_back(v.to_u64());
    c.expect(got == rows[n], "remainder row " + std::to_string(n));
  }
  // The table of conditions for k <= 12 lists these eleven windows.
  const std::vector<WindowCondition> table = {{4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}, {9, 3},
                                              {10, 2}, {10, 5}, {12, 2}, {12, 3}, {12, 4}};
  const auto generated = consistency_conditions(12);
  c.expect(generated == table, "generated " + std::to_string(generated.size()) + " conditions");
  c.note = std::to_string(generated.size()) + " conditions generated and matched";
}

void reconstruction(Check& c) {
  auto min_n = [](const PartialConstraint& pc) -> std::optional<StoneCount> {
    auto r = reconstruct_minimal(pc);
    if (!r) return std::nullopt;
    return r.value->n;
  };
  c.expect(!reconstruct_minimal({{5, 1}, {6, 2}}), "{5:1, 6:2} should be infeasible");
  c.expect(min_n({{4, 2}, {7, 5}}) == StoneCount{18}, "{4:2, 7:5}");
  // 214 is the least board that reaches the constrained bin 6; with zero
  // padding past the end of the board, 10 stones already agree.
  const auto reach = reconstruct_minimal({{4, 1}, {7, 0}}, {}, {.within_board = true});
  c.expect(reach && reach.value->n == StoneCount{214}, "{4:1, 7:0} on the board");
  c.expect(min_n({{4, 1}, {7, 0}}) == StoneCount{10}, "{4:1, 7:0} with padding");
  const auto first = reconstruct({{3, 1}, {7, 2}});
  c.expect(first && first.value->completion == Completion{0, 1, 1, 0, 2, 2} && first.value->n == StoneCount{202},
           "first completion of {3:1, 7:2}");
  const auto least = reconstruct_minimal({{3, 1}, {7, 2}});
  c.expect(least && least.value->n == StoneCount{34} && least.value->board == Board({0, 1, 1, 2, 0, 2, 4, 6, 8, 10}),
           "minimal for {3:1, 7:2}");
  const auto with9 = reconstruct({{3, 1}, {7, 2}, {9, 3}});
  c.expect(with9 && with9.value->n == StoneCount{202}, "{3:1, 7:2, 9:3}");
  c.expect(!reconstruct({{6, 0}, {7, 1}, {8, 1}, {10, 0}}), "{6:0, 7:1, 8:1, 10:0} should be infeasible");
  const auto m9 = reconstruct({{6, 0}, {7, 1}, {8, 1}, {10, 1}});
  c.expect(m9 && shifted_bin(m9.value->board, 9) == 7, "{6:0, 7:1, 8:1, 10:1} should force m9 = 7");
}

void allowable_realizable(Check& c) {
  for (BinIndex k = 2; k <= 8; ++k) {
    const std::uint64_t period = oracle::lcm_upto(k);
    std::set<std::vector<BinCount>> realized;
    oracle::Bins b;
    for (std::uint64_t n = 0; n < period; ++n) {
      std::vector<BinCount> p;
      for (BinIndex i = 2; i <= k; ++i) p.push_back(i - 2 < b.size() ? b[i - 2] : 0);
      realized.insert(p);
      b = oracle::unmove(b);
    }
    std::set<std::vector<BinCount>> allowable;
    std::vector<BinCount> m(k - 1, 0);
    std::function<void(BinIndex)> rec = [&](BinIndex i) {
      if (i > k) {
        if (allowable_check(m)) allowable.insert(m);
        return;
      }
      for (BinCount v = 0; v < i; ++v) {
        m[i - 2] = v;
        rec(i + 1);
      }
    };
    rec(2);
    c.expect(allowable == realized, "K=" + std::to_string(k) + ": " + std::to_string(allowable.size()) +
                                        " allowable vs " + std::to_string(realized.size()) + " realized");
  }
}

void graph_suite(Check& c) {
  for (std::size_t l = 1; l <= 6; ++l) {
    const SowingGraph g = make_path(l);
    const auto gg = enumerate_winning_boards(g, 100000);
    std::set<GraphBoard> want;
    for (std::uint64_t n = 0; n < min_stones(l + 1).to_u64(); ++n) want.insert(path_graph_board(board_from_stones(n), l));
    c.expect(!gg.truncated && std::set<GraphBoard>(gg.nodes.begin(), gg.nodes.end()) == want,
             "path " + std::to_string(l) + " boards");
    bool is_path = gg.edges.size() + 1 == gg.nodes.size();
    for (std::size_t i = 1; i < gg.nodes.size(); ++i) is_path = is_path && gg.out_degree(i) == 1;
    c.expect(is_path, "path " + std::to_string(l) + " game graph shape");
    c.expect(has_finite_game_graph(g).finite, "path " + std::to_string(l) + " finite");
  }
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t l = 1; l <= 4; ++l) {
      const SowingGraph g = make_star(k, l);
      std::uint64_t want = 1;
      for (std::size_t s = 0; s < k; ++s) want *= min_stones(l + 1).to_u64();
      c.expect(enumerate_winning_boards(g, 100000).nodes.size() == want,
               "star " + std::to_string(k) + "x" + std::to_string(l));
      c.expect(has_finite_game_graph(g).finite, "star finite");
    }
  }
  for (std::size_t l = 2; l <= 8; ++l) c.expect(!has_finite_game_graph(make_cycle(l)).finite, "cycle infinite");

  const SowingGraph cyc = make_cycle(4);
  const std::vector<std::vector<BinCount>> expected = {{0, 0, 0}, {1, 0, 0}, {0, 2, 0}, {1, 2, 0}, {0, 1, 3},
                                                  {1, 1, 3}, {5, 0, 2}, {4, 2, 2}, {1, 10, 0}};
  GraphBoard b = zero_board(cyc);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    c.expect(std::vector<BinCount>(b.labels.begin() + 1, b.labels.end()) == expected[i], "cycle board " + std::to_string(i));
    const auto mv = cycle_unplay_move(4, b);
    b = position(cyc, unplay_move(cyc, b, mv.vertex, mv.ruma, mv.path));
  }
  c.expect(cycle_attained_counts(4, 9) == std::vector<StoneCount>{0, 1, 2, 3, 4, 5, 7, 8, 11}, "cycle stone totals");
}

void properties(Check& c) {
  oracle::Gen gen(20261015);
  std::size_t cases = 0;

  // Prefix and upper-sum congruences.
  for (int t = 0; t < 3000; ++t, ++cases) {
    const std::uint64_t n = gen.uniform(0, 1'000'000);
    const Board b = board_from_stones(n);
    std::uint64_t prefix = 0, upper = 0;
    for (BinIndex i = 1; i <= b.length(); ++i) {
      prefix += b[i];
      c.expect(prefix % (i + 1) == n % (i + 1), "prefix congruence n=" + std::to_string(n));
    }
    for (BinIndex i = b.length(); i >= 1; --i) {
      upper += b[i];
      c.expect(upper % i == 0 && b[i] <= i, "upper-sum congruence n=" + std::to_string(n));
    }
  }
  // Periodicity of short prefixes.
  for (int t = 0; t < 2000; ++t, ++cases) {
    const BinIndex i = gen.uniform(1, 6);
    const std::uint64_t n = gen.uniform(0, 100000), r = gen.uniform(1, 5);
    const Board a = board_from_stones(n), b = board_from_stones(StoneCount{n} + StoneCount{r} * minimal_period(i));
    for (BinIndex j = 1; j <= i; ++j) c.expect(a[j] == b[j], "period i=" + std::to_string(i) + " n=" + std::to_string(n));
  }
  // Play / unplay round trips.
  for (int t = 0; t < 2000; ++t, ++cases) {
    const std::uint64_t n = gen.uniform(0, 1'000'000);
    const Board b = board_from_stones(n);
    c.expect(play(unplay(b)).board == b, "play(unplay) n=" + std::to_string(n));
    if (n > 0) c.expect(unplay(play(b).board) == b, "unplay(play) n=" + std::to_string(n));
  }
  // Sow / unplay round trips on random graphs.
  for (int t = 0; t < 200; ++t) {
    const std::size_t nv = gen.uniform(2, 5);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < nv; ++a) {
      for (Vertex w = 0; w < nv; ++w) {
        if (gen.coin(0.3)) edges.emplace_back(a, w);
      }
    }
    const SowingGraph g(nv, edges, {static_cast<Vertex>(gen.uniform(0, nv - 1))});
    const auto gg = enumerate_winning_boards(g, 60);
    for (const auto& e : gg.edges) {
      for (const auto& mv : e.moves) {
        ++cases;
        c.expect(position(g, sow_move(g, gg.nodes[e.from], mv.vertex, mv.path)) == gg.nodes[e.to], "sow/unplay");
        c.expect(position(g, unplay_move(g, gg.nodes[e.to], mv.vertex, mv.ruma, mv.path)) == gg.nodes[e.from],
                 "unplay/sow");
      }
    }
  }
  // Chinese remaindering against a scan.
  for (int t = 0; t < 3000; ++t, ++cases) {
    std::vector<Congruence> system;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> plain;
    std::uint64_t l = 1;
    const auto size = gen.uniform(1, 4);
    for (std::uint64_t j = 0; j < size; ++j) {
      const std::uint64_t m = gen.uniform(1, 30);
      if (l / oracle::gcd(l, m) * m > 100000) break;
      l = l / oracle::gcd(l, m) * m;
      const std::uint64_t r = gen.uniform(0, m - 1);
      system.push_back({r, m});
      plain.emplace_back(r, m);
    }
    const auto got = crt_solve(system);
    const auto want = oracle::crt_scan(plain);
    c.expect(got.solution.has_value() == want.has_value() && (!want || got.solution->n0 == StoneCount{*want}),
             "crt case " + std::to_string(t));
  }
  c.expect(cases >= 10000, "only " + std::to_string(cases) + " cases");
  c.note = std::to_string(cases) + " cases";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Check&);
  };
  const std::vector<Criterion> criteria = {
      {"golden board table n=0..17", golden_table},
      {"closed form equals iterated unplay, n <= 10^4", oracle_equivalence},
      {"minimum-stones prefix and length enumeration", nf_prefix},
      {"length bounds and 1/pi ratio", bounds},
      {"sieve stages and removal rule", sieve_rows},
      {"remainder boards and consistency conditions", crt_suite},
      {"partial-board reconstruction", reconstruction},
      {"allowable equals realizable, K <= 8", allowable_realizable},
      {"sowing graphs: path, star, cycle", graph_suite},
      {"randomized properties", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].name << " (" << ms
              << " ms)";
    if (!c.note.empty()) std::cout << " [" << c.note << "]";
    if (!c.ok()) std::cout << " -- " << c.summary();
    std::cout << '\n';
    if (!c.ok()) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
