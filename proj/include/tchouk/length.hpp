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

// Winning boards indexed by their length rather than their stone count.

#ifndef TCHOUK_LENGTH_HPP
#define TCHOUK_LENGTH_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "tchouk/board.hpp"
#include "tchouk/stone_count.hpp"

namespace tchouk {

/// Visits every winning board of length `length`, in increasing order of
/// stones. The visitor returns false to stop early.
///
/// Boards are built right to left: the last bin must hold `length` stones, and
/// bin i must bring the upper sum to a multiple of i, which leaves at most the
/// two choices r and r + i. Taking the smaller one first yields increasing n
/// because every upper sum is non-decreasing in n.
inline void for_each_board_of_length(BinIndex length, const std::function<bool(const Board&)>& visit) {
  if (length == 0) {
    visit(Board{});
    return;
  }
  std::vector<BinCount> bins(length, 0);
  bins[length - 1] = length;
  // suffix[i] = b_i + ... + b_length for the bins already fixed.
  std::vector<StoneCount> suffix(length + 2);
  suffix[length] = StoneCount{length};
  bool stop = false;

  std::function<void(BinIndex)> descend = [&](BinIndex i) {
    if (stop) return;
    if (i == 0) {
      if (!visit(Board(bins))) stop = true;
      return;
    }
    const StoneCount above = suffix[i + 1];
    const StoneCount r = (StoneCount{i} - above % StoneCount{i}) % StoneCount{i};
    for (BinCount choice = static_cast<BinCount>(r.raw()); choice <= i; choice += i) {
      bins[i - 1] = choice;
      suffix[i] = above + StoneCount{choice};
      descend(i - 1);
      if (stop) return;
    }
  };
  descend(length - 1);
}

inline std::vector<Board> enumerate_boards(BinIndex length) {
  std::vector<Board> out;
  for_each_board_of_length(length, [&](const Board& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

/// Minimum stones on a winning board of the given length: start from
/// `length` and round up to the next multiple of length-1, length-2, ..., 1.
inline StoneCount min_stones(BinIndex length) {
  if (length < 1) throw std::invalid_argument("min_stones: length must be >= 1");
  StoneCount x{length};
  for (BinIndex i = length - 1; i >= 1; --i) x = round_up_to_multiple(x, StoneCount{i});
  return x;
}

inline std::vector<StoneCount> min_stones_sequence(BinIndex max_length) {
  if (max_length < 1) throw std::invalid_argument("min_stones_sequence: max length must be >= 1");
  std::vector<StoneCount> out;
  out.reserve(max_length);
  for (BinIndex l = 1; l <= max_length; ++l) out.push_back(min_stones(l));
  return out;
}

struct LengthBounds {
  StoneCount lower;  // sum of (length - 2i) for i = 0..floor(length/2)
  StoneCount value;  // min_stones(length)
  StoneCount upper;  // length (length + 1) / 2

  [[nodiscard]] bool holds() const { return lower <= value && value <= upper; }
};

inline LengthBounds check_bounds(BinIndex length) {
  if (length < 2) throw std::invalid_argument("check_bounds: length must be >= 2");
  LengthBounds out;
  for (BinIndex i = 0; i <= length / 2; ++i) out.lower += StoneCount{length - 2 * i};
  out.value = min_stones(length);
  out.upper = StoneCount{length} * StoneCount{length + 1} / StoneCount{2};
  return out;
}

}  // namespace tchouk

#endif  // TCHOUK_LENGTH_HPP
