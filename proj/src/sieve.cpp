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

#include "primesym/sieve.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "primesym/error.hpp"

namespace primesym {

namespace {

constexpr int kStateVersion = 1;

// Positions re-derived by divisibility after every step.
constexpr std::size_t kStepCheckWindow = std::size_t{1} << 16;

bool is_prime_by_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool test_bit(const std::vector<std::uint8_t>& bits, std::size_t q) {
  return (bits[q >> 3] >> (q & 7)) & 1u;
}

void clear_bit(std::vector<std::uint8_t>& bits, std::size_t q) {
  bits[q >> 3] &= static_cast<std::uint8_t>(~(1u << (q & 7)));
}

std::optional<std::size_t> first_inconsistency_below(const SieveState& state,
                                                     std::size_t limit) {
  const std::size_t n = std::min(limit, state.cap());
  for (std::size_t q = 0; q < n; ++q) {
    if (state.explicit_symbol(q) != state.implicit_symbol(q)) return q;
  }
  return std::nullopt;
}

// Shared by the word and state overloads: at(q) yields the periodic stream.
template <typename At>
Word extract_from_stream(At at, std::uint64_t bound) {
  std::optional<std::uint64_t> first_l;
  for (std::uint64_t q = 0; q < bound; ++q) {
    if (at(q) != Symbol::L) continue;
    if (!first_l) {
      first_l = q;
      continue;
    }
    std::vector<Symbol> out(q, Symbol::L);
    std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(*first_l), Symbol::R);
    return Word::finite(std::move(out));
  }
  throw DomainError("f_extract: stream has fewer than two L symbols");
}

std::uint64_t saturating_bound(const BigInt& period) {
  const BigInt twice = period * 2;
  if (twice > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(twice);
}

}  // namespace

SieveState SieveState::initial(std::size_t cap) {
  if (cap < 2) throw DomainError("sieve prefix cap must be at least 2");
  SieveState s;
  s.primes_ = {2};
  s.cap_ = cap;
  s.full_period_ = 2;
  s.bits_.assign((cap + 7) / 8, 0);
  for (std::size_t q = 1; q < cap; q += 2) {
    s.bits_[q >> 3] |= static_cast<std::uint8_t>(1u << (q & 7));
  }
  return s;
}

SieveState SieveState::from_parts(std::vector<std::uint64_t> primes, std::size_t cap,
                                  std::vector<std::uint8_t> prefix_bits) {
  if (primes.empty()) throw DomainError("sieve state needs at least one prime");
  if (cap < 2) throw DomainError("sieve prefix cap must be at least 2");
  if (prefix_bits.size() != (cap + 7) / 8) {
    throw DomainError("prefix byte count does not match cap");
  }
  std::uint64_t expected = 2;
  BigInt product = 1;
  for (std::uint64_t p : primes) {
    if (p != expected) throw DomainError("primes must be the first i primes in order");
    product *= p;
    do {
      ++expected;
    } while (!is_prime_by_trial(expected));
  }
  SieveState s;
  s.primes_ = std::move(primes);
  s.cap_ = cap;
  s.bits_ = std::move(prefix_bits);
  s.full_period_ = std::move(product);
  if (auto bad = first_inconsistency(s)) {
    throw InvariantViolation("prefix disagrees with divisibility at position " +
                             std::to_string(*bad));
  }
  return s;
}

Symbol SieveState::explicit_symbol(std::size_t q) const {
  if (q >= cap_) throw DomainError("position beyond the explicit prefix cap");
  return test_bit(bits_, q) ? Symbol::L : Symbol::R;
}

Symbol SieveState::implicit_symbol(std::uint64_t q) const noexcept {
  if (q == 0) return Symbol::R;
  for (std::uint64_t p : primes_) {
    if (q % p == 0) return Symbol::R;
  }
  return Symbol::L;
}

Word m_of_prime(std::uint64_t p) {
  if (p < 2) throw DomainError("m_of_prime: " + std::to_string(p) + " is not prime");
  if (!is_prime_by_trial(p)) {
    throw DomainError("m_of_prime: " + std::to_string(p) + " is composite");
  }
  std::vector<Symbol> out(p, Symbol::L);
  out[0] = Symbol::R;
  return Word::finite(std::move(out));
}

Word f_extract(const Word& d) {
  if (!d.is_finite() || d.empty() || d.ends_in_c()) {
    throw DomainError("f_extract: expects a nonempty C-free finite word");
  }
  const auto& block = d.preperiod();
  // One L per period puts the second L within two periods.
  return extract_from_stream([&](std::uint64_t q) { return block[q % block.size()]; },
                             2 * block.size());
}

Word f_extract(const SieveState& state) {
  return extract_from_stream([&](std::uint64_t q) { return symbol_at(state, q); },
                             saturating_bound(state.full_period()));
}

std::uint64_t next_prime(const SieveState& state) {
  return f_extract(state).finite_length();
}

SieveState sieve_step(const SieveState& state) {
  const Word m = f_extract(state);
  const std::uint64_t p = m.finite_length();
  if (m != m_of_prime(p)) {
    throw InvariantViolation("f(D_i) is not of the form RL^(p-1)");
  }
  SieveState next = state;
  next.primes_.push_back(p);
  next.full_period_ *= p;
  // Pointwise product with (RL^{p-1})^inf erases exactly the multiples of p.
  for (std::size_t q = 0; q < next.cap_; q += p) clear_bit(next.bits_, q);
  if (auto bad = first_inconsistency_below(next, kStepCheckWindow)) {
    throw InvariantViolation("sieve_step: representations disagree at position " +
                             std::to_string(*bad));
  }
  return next;
}

SieveState sieve_to(std::size_t index, std::size_t cap) {
  if (index < 1) throw DomainError("sieve index starts at 1");
  SieveState s = SieveState::initial(cap);
  while (s.index() < index) s = sieve_step(s);
  return s;
}

Symbol symbol_at(const SieveState& state, std::uint64_t q) {
  if (q < state.cap()) return state.explicit_symbol(static_cast<std::size_t>(q));
  return state.implicit_symbol(q);
}

std::optional<std::size_t> first_inconsistency(const SieveState& state) {
  return first_inconsistency_below(state, state.cap());
}

std::vector<std::uint64_t> primes_from_state(const SieveState& state, std::uint64_t limit) {
  const std::uint64_t next = next_prime(state);
  if (limit > next * next) {
    throw DomainError("primes_from_state: limit " + std::to_string(limit) +
                      " exceeds the soundness bound " + std::to_string(next * next));
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q < limit; ++q) {
    if (symbol_at(state, q) == Symbol::L) out.push_back(q);
  }
  return out;
}

std::uint64_t gap_pattern_count(const SieveState& state, std::uint64_t gap, std::uint64_t lo,
                                std::uint64_t hi) {
  if (gap == 0 || gap % 2 != 0) {
    throw DomainError("gap_pattern_count: gap must be a positive even number");
  }
  if (lo < 1) throw DomainError("gap_pattern_count: lo must be at least 1");
  std::uint64_t count = 0;
  std::optional<std::uint64_t> prev;
  for (std::uint64_t q = lo; q <= hi; ++q) {
    if (symbol_at(state, q) != Symbol::L) continue;
    if (prev && q - *prev == gap) ++count;
    prev = q;
  }
  return count;
}

Word period_word(const SieveState& state) {
  if (state.full_period() > state.cap()) {
    throw DomainError("period " + state.full_period().str() + " exceeds the prefix cap " +
                      std::to_string(state.cap()));
  }
  const auto n = static_cast<std::size_t>(state.full_period());
  std::vector<Symbol> out(n);
  for (std::size_t q = 0; q < n; ++q) out[q] = state.explicit_symbol(q);
  return Word::finite(std::move(out));
}

Word stream_word(const SieveState& state) {
  return Word::periodic(period_word(state).preperiod());
}

std::string serialize_state(const SieveState& state) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(state.prefix_bits().size() * 2);
  for (std::uint8_t b : state.prefix_bits()) {
    hex += kHex[b >> 4];
    hex += kHex[b & 0xf];
  }
  nlohmann::ordered_json j;
  j["version"] = kStateVersion;
  j["i"] = state.index();
  j["primes"] = state.primes();
  j["cap"] = state.cap();
  j["prefix"] = std::move(hex);
  j["full_period"] = state.full_period().str();
  return j.dump();
}

SieveState deserialize_state(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("sieve state: ") + e.what());
  }
  try {
    if (j.at("version").get<int>() != kStateVersion) {
      throw DomainError("sieve state: unsupported version");
    }
    auto primes = j.at("primes").get<std::vector<std::uint64_t>>();
    if (j.at("i").get<std::size_t>() != primes.size()) {
      throw DomainError("sieve state: i does not match the prime list");
    }
    const auto cap = j.at("cap").get<std::size_t>();
    const auto hex = j.at("prefix").get<std::string>();
    if (hex.size() % 2 != 0) throw DomainError("sieve state: odd-length prefix hex");
    auto nibble = [](char c) -> std::uint8_t {
      if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
      if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
      throw DomainError("sieve state: bad hex digit");
    };
    std::vector<std::uint8_t> bytes(hex.size() / 2);
    for (std::size_t k = 0; k < bytes.size(); ++k) {
      bytes[k] = static_cast<std::uint8_t>((nibble(hex[2 * k]) << 4) | nibble(hex[2 * k + 1]));
    }
    SieveState s = SieveState::from_parts(std::move(primes), cap, std::move(bytes));
    if (s.full_period().str() != j.at("full_period").get<std::string>()) {
      throw DomainError("sieve state: full_period is not the product of the primes");
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("sieve state: ") + e.what());
  }
}

}  // namespace primesym
