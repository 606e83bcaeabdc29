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

// Stage k of the sieve keeps the stone counts n whose winning board is first
// played from bin k or further out. Two routes are provided: a direct scan
// over n, and repeated application of the positional removal rule starting
// from 1, 2, 3, ...

#ifndef TCHOUK_SIEVE_HPP
#define TCHOUK_SIEVE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tchouk/board.hpp"
#include "tchouk/stone_count.hpp"

namespace tchouk {

/// The bin sown first when playing board_from_stones(n), for n >= 1.
/// Builds the board only as far as its first harvestable bin.
inline BinIndex first_played_bin(StoneCount n) {
  if (n.is_zero()) throw std::invalid_argument("first_played_bin: n must be >= 1");
  StoneCount remaining = n;
  for (std::uint64_t i = 1;; ++i) {
    StoneCount b = remaining % StoneCount{i + 1};
    if (b == StoneCount{i}) return i;
    remaining -= b;
  }
}

struct SieveOptions {
  /// Largest n examined by the direct scan.
  std::uint64_t scan_cap = 1'000'000;
};

/// (S_1^(k), ..., S_count^(k)) by scanning n = 1, 2, ...
inline std::vector<StoneCount> sieve_stage(BinIndex k, std::size_t count, const SieveOptions& opts = {}) {
  if (k < 1) throw std::invalid_argument("sieve_stage: k must be >= 1");
  if (count < 1) throw std::invalid_argument("sieve_stage: count must be >= 1");
  std::vector<StoneCount> out;
  out.reserve(count);
  for (std::uint64_t n = 1; out.size() < count; ++n) {
    if (n > opts.scan_cap) {
      throw LimitError("sieve_stage(" + std::to_string(k) + ", " + std::to_string(count) + "): only " +
                       std::to_string(out.size()) + " elements below the scan cap " + std::to_string(opts.scan_cap));
    }
    if (first_played_bin(StoneCount{n}) >= k) out.emplace_back(n);
  }
  return out;
}

/// Turns a prefix of stage k into a prefix of stage k+1 by deleting the
/// entries at 1-based positions 1, (k+1)+1, 2(k+1)+1, ...
inline std::vector<StoneCount> sieve_step(const std::vector<StoneCount>& stage, BinIndex k) {
  if (k < 1) throw std::invalid_argument("sieve_step: k must be >= 1");
  std::vector<StoneCount> out;
  out.reserve(stage.size());
  for (std::size_t pos = 0; pos < stage.size(); ++pos) {
    if (pos % (k + 1) != 0) out.push_back(stage[pos]);
  }
  return out;
}

/// Same result as sieve_stage, computed by sieving 1, 2, 3, ... k-1 times.
inline std::vector<StoneCount> sieve_stage_by_steps(BinIndex k, std::size_t count, const SieveOptions& opts = {}) {
  if (k < 1) throw std::invalid_argument("sieve_stage_by_steps: k must be >= 1");
  if (count < 1) throw std::invalid_argument("sieve_stage_by_steps: count must be >= 1");
  // Size the starting prefix so that `count` survivors remain after k-1 steps.
  auto survivors = [k](std::uint64_t len) {
    for (BinIndex j = 1; j < k; ++j) len -= (len + j) / (j + 1);  // ceil(len / (j+1)) removed
    return len;
  };
  std::uint64_t len = count;
  while (survivors(len) < count) {
    if (len > opts.scan_cap) {
      throw LimitError("sieve_stage_by_steps: starting prefix would exceed the scan cap " +
                       std::to_string(opts.scan_cap));
    }
    len += count;
  }
  std::vector<StoneCount> stage;
  stage.reserve(len);
  for (std::uint64_t n = 1; n <= len; ++n) stage.emplace_back(n);
  for (BinIndex j = 1; j < k; ++j) stage = sieve_step(stage, j);
  stage.resize(count);
  return stage;
}

}  // namespace tchouk

#endif  // TCHOUK_SIEVE_HPP
