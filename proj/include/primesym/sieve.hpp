// Copyright 2026 The primesym Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "primesym/symseq.hpp"

namespace primesym {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultPrefixCap = std::size_t{1} << 20;

// The composed sieve word D_i = M_2 . M_3 . ... . M_{p_i}, held two ways:
// an explicit bit-packed prefix of the infinite stream (bit set = L) and the
// absorbed primes, which answer any position by divisibility.
class SieveState {
 public:
  // D_1 = RL.
  static SieveState initial(std::size_t cap = kDefaultPrefixCap);

  // Rebuilds a state from its parts; checks both representations agree.
  static SieveState from_parts(std::vector<std::uint64_t> primes, std::size_t cap,
                               std::vector<std::uint8_t> prefix_bits);

  std::size_t index() const noexcept { return primes_.size(); }
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  std::uint64_t largest_prime() const noexcept { return primes_.back(); }
  std::size_t cap() const noexcept { return cap_; }
  const BigInt& full_period() const noexcept { return full_period_; }

  // Little-endian packing: bit (q % 8) of byte q / 8 is position q.
  const std::vector<std::uint8_t>& prefix_bits() const noexcept { return bits_; }

  Symbol explicit_symbol(std::size_t q) const;  // q < cap
  Symbol implicit_symbol(std::uint64_t q) const noexcept;

 private:
  friend SieveState sieve_step(const SieveState& state);

  std::vector<std::uint64_t> primes_;
  std::size_t cap_ = 0;
  std::vector<std::uint8_t> bits_;
  BigInt full_period_ = 1;
};

// RL^{p-1}. Rejects p < 2 and composites.
Word m_of_prime(std::uint64_t p);

// Prefix of the periodic extension of d up to its second L, with every R
// after the first L turned into L. For a valid D_i this is M_{p_{i+1}}.
Word f_extract(const Word& d);
Word f_extract(const SieveState& state);

// p_{i+1}, read off the stream as |f(D_i)|.
std::uint64_t next_prime(const SieveState& state);

// D_{i+1} = D_i . f(D_i).
SieveState sieve_step(const SieveState& state);

// D_index built from D_1.
SieveState sieve_to(std::size_t index, std::size_t cap = kDefaultPrefixCap);

// Explicit prefix when q < cap, divisibility rule otherwise.
Symbol symbol_at(const SieveState& state, std::uint64_t q);

// First position where the explicit prefix and the divisibility rule
// disagree, if any.
std::optional<std::size_t> first_inconsistency(const SieveState& state);

// Positions q with 1 < q < limit holding L, i.e. the primes in
// (p_i, limit). Requires limit <= p_{i+1}^2.
std::vector<std::uint64_t> primes_from_state(const SieveState& state, std::uint64_t limit);

// Consecutive-L pairs (q, q + gap) with lo <= q and q + gap <= hi.
std::uint64_t gap_pattern_count(const SieveState& state, std::uint64_t gap,
                                std::uint64_t lo, std::uint64_t hi);

// One full period of D_i as a finite word. Requires full_period <= cap.
Word period_word(const SieveState& state);

// (D_i)^inf. Requires full_period <= cap.
Word stream_word(const SieveState& state);

// Versioned JSON record: {version, i, primes, cap, prefix (hex of the packed
// bytes), full_period (decimal)}.
std::string serialize_state(const SieveState& state);
SieveState deserialize_state(std::string_view text);

}  // namespace primesym
