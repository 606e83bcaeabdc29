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

// Remainder boards and reconstruction of winning boards from partial bin
// constraints.
//
// Indexing: everything in this header numbers bins from 2, so the residue of n
// modulo i sits next to bin i. Bin i here is bin i-1 of tchouk::Board. The
// conversion happens only in shifted_bin() and board_from_increasing().

#ifndef TCHOUK_CRT_HPP
#define TCHOUK_CRT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tchouk/board.hpp"
#include "tchouk/length.hpp"
#include "tchouk/stone_count.hpp"

namespace tchouk {

/// Bin `i` (numbered from 2) of `b`, i.e. b[i - 1].
inline BinCount shifted_bin(const Board& b, BinIndex i) {
  if (i < 2) throw std::out_of_range("bins are numbered from 2 in remainder-board indexing");
  return b[i - 1];
}

/// (m_2, ..., m_k) read off `b`; index 0 of the result holds m_2.
inline std::vector<BinCount> shifted_prefix(const Board& b, BinIndex k) {
  std::vector<BinCount> out;
  for (BinIndex i = 2; i <= k; ++i) out.push_back(shifted_bin(b, i));
  return out;
}

// ---------------------------------------------------------------------------
// Remainder boards

struct RemainderBoard {
  std::optional<StoneCount> n;
  std::vector<BinCount> residues;  // residues[0] is n mod 2

  [[nodiscard]] BinIndex max_modulus() const { return residues.size() + 1; }
  [[nodiscard]] BinCount at(BinIndex modulus) const { return residues.at(modulus - 2); }
};

/// Weakly increasing lift of a remainder board: values[0] is c~_2.
struct IncreasingRemainderBoard {
  std::vector<StoneCount> values;

  [[nodiscard]] BinIndex max_modulus() const { return values.size() + 1; }
  [[nodiscard]] StoneCount at(BinIndex modulus) const { return values.at(modulus - 2); }

  /// Throws std::invalid_argument unless 0 <= c~_i - c~_{i-1} <= i-1 for
  /// every i (with c~_1 = 0).
  void validate() const {
    StoneCount prev;
    for (BinIndex i = 2; i < values.size() + 2; ++i) {
      const StoneCount cur = values[i - 2];
      if (cur < prev || cur - prev >= StoneCount{i}) {
        throw std::invalid_argument("increasing remainder board: entry for modulus " + std::to_string(i) + " (" +
                                    cur.to_string() + ") is not within [" + prev.to_string() + ", " +
                                    prev.to_string() + " + " + std::to_string(i - 1) + "]");
      }
      prev = cur;
    }
  }
};

inline RemainderBoard remainder_board(StoneCount n, BinIndex k) {
  if (k < 2) throw std::invalid_argument("remainder_board: k must be >= 2");
  RemainderBoard out{n, {}};
  out.residues.reserve(k - 1);
  for (BinIndex i = 2; i <= k; ++i) out.residues.push_back(static_cast<BinCount>((n % StoneCount{i}).raw()));
  return out;
}

inline IncreasingRemainderBoard increasing_remainder_board(StoneCount n, BinIndex k) {
  if (k < 2) throw std::invalid_argument("increasing_remainder_board: k must be >= 2");
  IncreasingRemainderBoard out;
  out.values.reserve(k - 1);
  StoneCount prev;
  for (BinIndex i = 2; i <= k; ++i) {
    const StoneCount mod{i};
    // Smallest value >= prev congruent to n mod i.
    const StoneCount shift = (n % mod + mod - prev % mod) % mod;
    prev = prev + shift;
    out.values.push_back(prev);
  }
  return out;
}

/// Successive differences of the increasing remainder board, as a Board.
inline Board board_from_increasing(const IncreasingRemainderBoard& c) {
  c.validate();
  std::vector<BinCount> bins;
  StoneCount prev;
  for (const StoneCount& v : c.values) {
    bins.push_back(static_cast<BinCount>((v - prev).raw()));
    prev = v;
  }
  return Board(std::move(bins));
}

// ---------------------------------------------------------------------------
// Chinese remaindering over arbitrary (not necessarily coprime) moduli

struct Congruence {
  StoneCount residue;
  StoneCount modulus;

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

struct CrtSolution {
  StoneCount n0;      // least non-negative solution
  StoneCount period;  // lcm of the moduli

  friend bool operator==(const CrtSolution&, const CrtSolution&) = default;
};

struct CrtResult {
  std::optional<CrtSolution> solution;
  /// Indices into the system of two congruences that disagree modulo the gcd
  /// of their moduli; set exactly when there is no solution.
  std::optional<std::pair<std::size_t, std::size_t>> conflict;

  explicit operator bool() const { return solution.has_value(); }
};

namespace detail {

inline uint128_t add_mod(uint128_t a, uint128_t b, uint128_t m) {
  return a >= m - b ? a - (m - b) : a + b;
}

inline uint128_t sub_mod(uint128_t a, uint128_t b, uint128_t m) { return a >= b ? a - b : m - (b - a); }

inline uint128_t mul_mod(uint128_t a, uint128_t b, uint128_t m) {
  a %= m;
  b %= m;
  uint128_t r = 0;
  while (b != 0) {
    if (b & 1) r = add_mod(r, a, m);
    a = add_mod(a, a, m);
    b >>= 1;
  }
  return r;
}

/// Inverse of a modulo m for gcd(a, m) = 1 and m >= 1.
inline uint128_t inverse_mod(uint128_t a, uint128_t m) {
  if (m == 1) return 0;
  uint128_t old_r = a % m, r = m;
  uint128_t old_s = 1, s = 0;  // coefficients of a, kept reduced mod m
  while (r != 0) {
    const uint128_t q = old_r / r;
    uint128_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = sub_mod(old_s, mul_mod(q, s, m), m);
    old_s = s;
    s = t;
  }
  return old_s;
}

inline void validate(const Congruence& c) {
  if (c.modulus.is_zero()) throw std::invalid_argument("congruence modulus must be positive");
  if (c.residue >= c.modulus) {
    throw std::invalid_argument("congruence residue " + c.residue.to_string() + " is not reduced modulo " +
                                c.modulus.to_string());
  }
}

}  // namespace detail

/// Solves the system by merging congruences pairwise. Overflow of the
/// combined modulus throws OverflowError.
inline CrtResult crt_solve(const std::vector<Congruence>& system) {
  if (system.empty()) throw std::invalid_argument("crt_solve: empty system");
  for (const auto& c : system) detail::validate(c);

  uint128_t x = 0, period = 1;
  for (const auto& c : system) {
    const uint128_t a = c.residue.raw(), m = c.modulus.raw();
    const uint128_t g = gcd(StoneCount::from_raw(period), c.modulus).raw();
    if (x % g != a % g) {
      for (std::size_t p = 0; p < system.size(); ++p) {
        for (std::size_t q = p + 1; q < system.size(); ++q) {
          const StoneCount d = gcd(system[p].modulus, system[q].modulus);
          if (system[p].residue % d != system[q].residue % d) return {std::nullopt, std::pair{p, q}};
        }
      }
      throw std::logic_error("crt_solve: merge failed without a pairwise conflict");
    }
    const uint128_t m_g = m / g;
    const StoneCount merged = lcm(StoneCount::from_raw(period), c.modulus);
    const uint128_t diff = detail::sub_mod(a % m, x % m, m) / g;
    const uint128_t t = detail::mul_mod(diff, detail::inverse_mod((period / g) % m_g, m_g), m_g);
    x += period * t;  // period * t < merged, so no overflow
    period = merged.raw();
  }
  return {CrtSolution{StoneCount::from_raw(x), StoneCount::from_raw(period)}, std::nullopt};
}

// ---------------------------------------------------------------------------
// Allowable prefixes

/// Nontrivial proper divisors of i that are prime powers, ascending.
inline std::vector<BinIndex> prime_power_divisors(BinIndex i) {
  std::vector<BinIndex> out;
  auto add_powers = [&](BinIndex p) {
    for (BinIndex q = p; i % q == 0 && q < i; q *= p) out.push_back(q);
  };
  BinIndex rest = i;
  for (BinIndex p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    add_powers(p);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) add_powers(rest);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_prime(BinIndex i) {
  if (i < 2) return false;
  for (BinIndex p = 2; p * p <= i; ++p) {
    if (i % p == 0) return false;
  }
  return true;
}

/// One window congruence: m_i + m_{i-1} + ... + m_{i-d+1} == 0 mod d.
struct WindowCondition {
  BinIndex i = 0;
  BinIndex d = 0;

  friend bool operator==(const WindowCondition&, const WindowCondition&) = default;
  friend auto operator<=>(const WindowCondition&, const WindowCondition&) = default;
};

/// Every window condition constraining (m_2, ..., m_k).
inline std::vector<WindowCondition> consistency_conditions(BinIndex k) {
  std::vector<WindowCondition> out;
  for (BinIndex i = 2; i <= k; ++i) {
    for (BinIndex d : prime_power_divisors(i)) out.push_back({i, d});
  }
  return out;
}

struct AllowableReport {
  bool allowable = true;
  std::vector<WindowCondition> violations;

  explicit operator bool() const { return allowable; }
};

/// Checks a full prefix (m_2, ..., m_k); prefix[0] holds m_2.
inline AllowableReport allowable_check(const std::vector<BinCount>& prefix) {
  const BinIndex k = prefix.size() + 1;
  std::vector<std::uint64_t> sums(k + 1, 0);  // sums[i] = m_2 + ... + m_i
  for (BinIndex i = 2; i <= k; ++i) {
    const BinCount m = prefix[i - 2];
    if (m >= i) {
      throw std::invalid_argument("allowable_check: m_" + std::to_string(i) + " = " + std::to_string(m) +
                                  " is not below " + std::to_string(i));
    }
    sums[i] = sums[i - 1] + m;
  }
  AllowableReport report;
  for (const WindowCondition& w : consistency_conditions(k)) {
    if ((sums[w.i] - sums[w.i - w.d]) % w.d != 0) {
      report.allowable = false;
      report.violations.push_back(w);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Partial constraints and reconstruction

/// Required bin counts m_i at some bin indices i >= 2, with 0 <= m_i < i.
class PartialConstraint {
 public:
  PartialConstraint() = default;
  explicit PartialConstraint(std::map<BinIndex, BinCount> entries) : entries_(std::move(entries)) {
    for (const auto& [i, m] : entries_) check(i, m);
  }
  PartialConstraint(std::initializer_list<std::pair<const BinIndex, BinCount>> entries)
      : PartialConstraint(std::map<BinIndex, BinCount>(entries)) {}

  void set(BinIndex i, BinCount m) {
    check(i, m);
    if (!entries_.emplace(i, m).second) throw std::invalid_argument("duplicate constraint on m_" + std::to_string(i));
  }

  [[nodiscard]] const std::map<BinIndex, BinCount>& entries() const { return entries_; }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  /// Largest constrained index, or 1 when there are no constraints.
  [[nodiscard]] BinIndex max_index() const { return entries_.empty() ? 1 : entries_.rbegin()->first; }
  [[nodiscard]] std::optional<BinCount> get(BinIndex i) const {
    auto it = entries_.find(i);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  /// True iff board `b` holds m_i stones in bin i for every constraint.
  [[nodiscard]] bool agrees_with(const Board& b) const {
    for (const auto& [i, m] : entries_) {
      if (shifted_bin(b, i) != m) return false;
    }
    return true;
  }

  friend bool operator==(const PartialConstraint&, const PartialConstraint&) = default;

 private:
  static void check(BinIndex i, BinCount m) {
    if (i < 2) throw std::invalid_argument("constraint index " + std::to_string(i) + " must be >= 2");
    if (m >= i) {
      throw std::invalid_argument("constraint m_" + std::to_string(i) + " = " + std::to_string(m) +
                                  " must be below " + std::to_string(i));
    }
  }

  std::map<BinIndex, BinCount> entries_;
};

/// A full prefix (m_2, ..., m_K); element 0 holds m_2.
using Completion = std::vector<BinCount>;

struct CompletionOptions {
  /// Backtracking nodes visited before giving up with LimitError.
  std::uint64_t max_nodes = 100'000'000;
  /// Completions examined by reconstruct_minimal before giving up.
  std::uint64_t max_completions = 1'000'000;
};

/// Visits every allowable prefix (m_2, ..., m_K), K = pc.max_index(), that
/// matches `pc`, smallest values first at each index. A window condition is
/// checked as soon as its last entry is assigned. The visitor returns false to
/// stop.
inline void for_each_completion(const PartialConstraint& pc, const std::function<bool(const Completion&)>& visit,
                                const CompletionOptions& opts = {}) {
  const BinIndex k = pc.max_index();
  if (k < 2) {
    visit(Completion{});
    return;
  }
  std::vector<std::vector<BinIndex>> windows(k + 1);
  for (BinIndex i = 2; i <= k; ++i) windows[i] = prime_power_divisors(i);

  Completion m(k - 1, 0);
  std::vector<std::uint64_t> sums(k + 1, 0);
  std::uint64_t nodes = 0;
  bool stop = false;

  auto fits = [&](BinIndex i) {
    for (BinIndex d : windows[i]) {
      if ((sums[i] - sums[i - d]) % d != 0) return false;
    }
    return true;
  };

  std::function<void(BinIndex)> assign = [&](BinIndex i) {
    if (stop) return;
    if (i > k) {
      if (!visit(m)) stop = true;
      return;
    }
    if (++nodes > opts.max_nodes) {
      throw LimitError("completion search exceeded " + std::to_string(opts.max_nodes) + " nodes");
    }
    BinCount lo = 0, hi = i - 1;
    if (auto fixed = pc.get(i)) lo = hi = *fixed;
    for (BinCount v = lo; v <= hi && !stop; ++v) {
      m[i - 2] = v;
      sums[i] = sums[i - 1] + v;
      if (fits(i)) assign(i + 1);
    }
  };
  assign(2);
}

inline std::vector<Completion> complete_constraints(const PartialConstraint& pc, const CompletionOptions& opts = {}) {
  std::vector<Completion> out;
  for_each_completion(
      pc,
      [&](const Completion& c) {
        if (out.size() >= opts.max_completions) {
          throw LimitError("more than " + std::to_string(opts.max_completions) + " completions");
        }
        out.push_back(c);
        return true;
      },
      opts);
  return out;
}

struct Reconstruction {
  StoneCount n;
  Board board;
  Completion completion;  // the prefix (m_2, ..., m_K) that produced n
  StoneCount period;      // lcm(2, ..., K): n + r * period agrees as well
};

struct ReconstructResult {
  std::optional<Reconstruction> value;
  std::string reason;  // why no board exists, when value is empty

  explicit operator bool() const { return value.has_value(); }
};

/// Least n whose remainder board matches the partial sums of `completion`.
/// The completion must be allowable; the result is then guaranteed to exist.
inline Reconstruction reconstruct_from_completion(const Completion& completion) {
  if (completion.empty()) return {StoneCount{}, Board{}, completion, StoneCount{1}};
  std::vector<Congruence> system;
  StoneCount partial;
  for (BinIndex i = 2; i < completion.size() + 2; ++i) {
    partial += StoneCount{completion[i - 2]};
    system.push_back({partial % StoneCount{i}, StoneCount{i}});
  }
  CrtResult solved = crt_solve(system);
  if (!solved) {
    throw std::invalid_argument("completion is not allowable: moduli " + std::to_string(solved.conflict->first + 2) +
                                " and " + std::to_string(solved.conflict->second + 2) + " disagree");
  }
  Board b = board_from_stones(solved.solution->n0);
  if (shifted_prefix(b, completion.size() + 1) != completion) {
    throw std::logic_error("reconstructed board does not realize its completion");
  }
  return {solved.solution->n0, std::move(b), completion, solved.solution->period};
}

/// First completion found by the backtracking search, then Chinese
/// remaindering on its partial sums.
inline ReconstructResult reconstruct(const PartialConstraint& pc, const CompletionOptions& opts = {}) {
  std::optional<Completion> first;
  for_each_completion(
      pc,
      [&](const Completion& c) {
        first = c;
        return false;
      },
      opts);
  if (!first) return {std::nullopt, "no allowable completion of the constrained bins exists"};
  return {reconstruct_from_completion(*first), {}};
}

struct MinimalOptions {
  /// Only accept boards long enough to contain the last constrained bin, so
  /// a constrained zero must be an empty bin on the board, not padding past
  /// its end.
  bool within_board = false;
};

/// Least n over every completion. Each completion fixes n modulo
/// lcm(2, ..., K), so this is the least n whose board agrees with `pc`.
/// Board length never decreases with n, so `within_board` amounts to
/// n >= min_stones(K - 1).
inline ReconstructResult reconstruct_minimal(const PartialConstraint& pc, const CompletionOptions& opts = {},
                                             const MinimalOptions& mopts = {}) {
  (void)lcm_range(pc.max_index());  // fail early if the period does not fit
  const BinIndex last_bin = pc.max_index() - 1;
  const StoneCount floor = mopts.within_board && last_bin >= 1 ? min_stones(last_bin) : StoneCount{};
  std::optional<Reconstruction> best;
  std::uint64_t seen = 0;
  for_each_completion(
      pc,
      [&](const Completion& c) {
        if (++seen > opts.max_completions) {
          throw LimitError("reconstruct_minimal: more than " + std::to_string(opts.max_completions) +
                           " completions to examine");
        }
        Reconstruction r = reconstruct_from_completion(c);
        if (r.n < floor) {
          r.n = r.n + round_up_to_multiple(floor - r.n, r.period);
          r.board = board_from_stones(r.n);
        }
        if (!best || r.n < best->n) best = std::move(r);
        return true;
      },
      opts);
  if (!best) return {std::nullopt, "no allowable completion of the constrained bins exists"};
  return {std::move(*best), {}};
}

/// Reconstruction when every constrained index is prime. Unconstrained primes
/// get 0; every other index gets the least value meeting all of its window
/// conditions, which always exists once the earlier entries are allowable.
inline Reconstruction prime_reconstruct(const PartialConstraint& pc) {
  for (const auto& [i, m] : pc.entries()) {
    if (!is_prime(i)) throw std::invalid_argument("prime_reconstruct: index " + std::to_string(i) + " is not prime");
  }
  const BinIndex k = pc.max_index();
  Completion m;
  std::vector<std::uint64_t> sums(k + 1, 0);
  for (BinIndex i = 2; i <= k; ++i) {
    std::optional<BinCount> value = pc.get(i);
    if (!value && is_prime(i)) value = 0;
    if (!value) {
      const auto divisors = prime_power_divisors(i);
      for (BinCount v = 0; v < i && !value; ++v) {
        bool ok = true;
        for (BinIndex d : divisors) ok = ok && (sums[i - 1] + v - sums[i - d]) % d == 0;
        if (ok) value = v;
      }
    }
    if (!value) {
      // Not expected to happen; fall back to the exhaustive search.
      ReconstructResult r = reconstruct(pc);
      if (!r) throw std::logic_error("prime_reconstruct: no completion for prime-indexed constraints");
      return std::move(*r.value);
    }
    m.push_back(*value);
    sums[i] = sums[i - 1] + *value;
  }
  return reconstruct_from_completion(m);
}

}  // namespace tchouk

#endif  // TCHOUK_CRT_HPP
