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

// The linear Tchoukaillon game.
//
// Bins are numbered from 1, bin 1 being adjacent to the Ruma. A bin is
// harvestable when it holds exactly as many stones as its index; a winning
// board is cleared by always sowing the harvestable bin closest to the Ruma.
// For every n there is exactly one winning board with n stones.

#ifndef TCHOUK_BOARD_HPP
#define TCHOUK_BOARD_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tchouk/stone_count.hpp"

namespace tchouk {

using BinIndex = std::size_t;
using BinCount = std::uint64_t;

/// Finite sequence of bin stone counts, stored without trailing zeros.
class Board {
 public:
  Board() = default;
  explicit Board(std::vector<BinCount> bins) : bins_(std::move(bins)) { trim(); }
  Board(std::initializer_list<BinCount> bins) : bins_(bins) { trim(); }

  /// Stones in bin `i` (1-based); zero beyond the stored length.
  [[nodiscard]] BinCount operator[](BinIndex i) const {
    if (i == 0) throw std::out_of_range("bins are numbered from 1");
    return i <= bins_.size() ? bins_[i - 1] : 0;
  }
  /// Bin counts in order b_1, b_2, ..., b_length.
  [[nodiscard]] std::span<const BinCount> bins() const { return bins_; }
  [[nodiscard]] BinIndex length() const { return bins_.size(); }
  [[nodiscard]] bool empty() const { return bins_.empty(); }

  [[nodiscard]] StoneCount stones() const {
    StoneCount total;
    for (BinCount b : bins_) total += StoneCount{b};
    return total;
  }

  friend bool operator==(const Board&, const Board&) = default;
  friend auto operator<=>(const Board&, const Board&) = default;

 private:
  void trim() {
    while (!bins_.empty() && bins_.back() == 0) bins_.pop_back();
  }

  std::vector<BinCount> bins_;
};

/// "[1,2,0,2,4,6]"
inline std::string to_string(const Board& b) {
  std::string out = "[";
  for (std::size_t i = 0; i < b.bins().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(b.bins()[i]);
  }
  return out + "]";
}

struct BoardOptions {
  /// board_from_stones refuses to build boards longer than this.
  BinIndex max_length = 100'000'000;
};

/// The unique winning board holding `n` stones, built left to right: bin i
/// takes whatever is needed to leave the stones still in hand divisible by i+1.
inline Board board_from_stones(StoneCount n, const BoardOptions& opts = {}) {
  std::vector<BinCount> bins;
  StoneCount remaining = n;
  for (std::uint64_t i = 1; !remaining.is_zero(); ++i) {
    if (bins.size() >= opts.max_length) {
      throw LimitError("board for n=" + n.to_string() + " is longer than the configured limit of " +
                       std::to_string(opts.max_length) + " bins");
    }
    StoneCount b = remaining % StoneCount{i + 1};
    bins.push_back(static_cast<BinCount>(b.raw()));
    remaining -= b;
  }
  return Board(std::move(bins));
}

/// True iff b_i <= i and every upper sum b_i + ... + b_length is divisible by i.
inline bool is_winning(const Board& b) {
  StoneCount upper;
  for (BinIndex i = b.length(); i >= 1; --i) {
    BinCount bi = b[i];
    if (bi > i) return false;
    upper += StoneCount{bi};
    if (!(upper % StoneCount{i}).is_zero()) return false;
  }
  return true;
}

/// Smallest j with b_j = 0, counting bins past the stored length as empty.
inline BinIndex leftmost_empty(const Board& b) {
  for (BinIndex i = 1; i <= b.length(); ++i) {
    if (b[i] == 0) return i;
  }
  return b.length() + 1;
}

/// Smallest i with b_i = i, or 0 when no bin is harvestable.
inline BinIndex leftmost_harvestable(const Board& b) {
  for (BinIndex i = 1; i <= b.length(); ++i) {
    if (b[i] == i) return i;
  }
  return 0;
}

/// Inverse move: take a stone from the Ruma and one from each bin up to the
/// first empty bin p, then drop all p of them into bin p.
inline Board unplay(const Board& b) {
  if (!is_winning(b)) throw std::invalid_argument("unplay: " + to_string(b) + " is not a winning board");
  const BinIndex p = leftmost_empty(b);
  std::vector<BinCount> bins(b.bins().begin(), b.bins().end());
  if (bins.size() < p) bins.resize(p, 0);
  for (BinIndex i = 1; i < p; ++i) --bins[i - 1];
  bins[p - 1] = p;
  return Board(std::move(bins));
}

struct PlayResult {
  Board board;
  BinIndex bin_played = 0;

  friend bool operator==(const PlayResult&, const PlayResult&) = default;
};

/// Sows the harvestable bin closest to the Ruma; one stone lands in the Ruma.
inline PlayResult play(const Board& b) {
  if (b.empty()) throw std::invalid_argument("play: the board is already empty");
  if (!is_winning(b)) throw std::invalid_argument("play: " + to_string(b) + " is not a winning board");
  const BinIndex i = leftmost_harvestable(b);
  std::vector<BinCount> bins(b.bins().begin(), b.bins().end());
  bins[i - 1] = 0;
  for (BinIndex j = 1; j < i; ++j) ++bins[j - 1];
  return {Board(std::move(bins)), i};
}

struct PlaySequenceOptions {
  std::uint64_t max_moves = 10'000'000;
};

/// Bins played, in order, to clear board_from_stones(n): (p(n-1), ..., p(0)).
inline std::vector<BinIndex> play_sequence(StoneCount n, const PlaySequenceOptions& opts = {}) {
  if (n > StoneCount{opts.max_moves}) {
    throw LimitError("play_sequence: n=" + n.to_string() + " exceeds the move cap of " +
                     std::to_string(opts.max_moves));
  }
  std::vector<BinIndex> moves;
  moves.reserve(static_cast<std::size_t>(n.raw()));
  // Plays in place; each move only touches bins below the played one.
  Board start = board_from_stones(n);
  std::vector<BinCount> bins(start.bins().begin(), start.bins().end());
  for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(n.raw()); ++k) {
    BinIndex i = 1;
    while (bins[i - 1] != i) ++i;
    bins[i - 1] = 0;
    for (BinIndex j = 1; j < i; ++j) ++bins[j - 1];
    moves.push_back(i);
  }
  return moves;
}

/// lcm(2, ..., i+1): the exact period in n of the prefix (b_1(n), ..., b_i(n)).
inline StoneCount minimal_period(BinIndex i) {
  if (i < 1) throw std::invalid_argument("minimal_period: bin index must be >= 1");
  try {
    return lcm_range(static_cast<std::uint64_t>(i) + 1);
  } catch (const OverflowError& e) {
    throw OverflowError("minimal_period(" + std::to_string(i) + "): " + e.what());
  }
}

}  // namespace tchouk

#endif  // TCHOUK_BOARD_HPP
