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
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace primesym {

// Enumerator order is the base order of the kneading comparison.
enum class Symbol : std::uint8_t { L, C, R };

char to_char(Symbol s) noexcept;
std::optional<Symbol> symbol_from_char(char c) noexcept;

// Sieve product: L survives only where both operands are L.
constexpr Symbol dot(Symbol a, Symbol b) noexcept {
  return (a == Symbol::L && b == Symbol::L) ? Symbol::L : Symbol::R;
}

enum class Ordering { Less, Equal, Greater };

std::ostream& operator<<(std::ostream& os, Ordering o);
std::string to_string(Ordering o);

inline constexpr std::size_t kDefaultHorizon = 4096;

// A finite symbol string, or a preperiod followed by a period repeated
// forever. Instances are always canonical: the period is primitive and
// the preperiod cannot be shortened by rotating the period. C appears at
// most once, as the last symbol of a finite word.
class Word {
 public:
  Word() = default;

  static Word finite(std::vector<Symbol> symbols);
  static Word eventually_periodic(std::vector<Symbol> preperiod,
                                  std::vector<Symbol> period);
  static Word periodic(std::vector<Symbol> period) {
    return eventually_periodic({}, std::move(period));
  }

  const std::vector<Symbol>& preperiod() const noexcept { return preperiod_; }
  const std::vector<Symbol>& period() const noexcept { return period_; }

  bool is_finite() const noexcept { return period_.empty(); }
  bool empty() const noexcept { return preperiod_.empty() && period_.empty(); }
  bool ends_in_c() const noexcept {
    return is_finite() && !preperiod_.empty() && preperiod_.back() == Symbol::C;
  }

  // Symbol count of a finite word; preperiod length otherwise.
  std::size_t finite_length() const noexcept { return preperiod_.size(); }

  // Symbol at stream position k, or nullopt past the end of a finite word.
  std::optional<Symbol> at(std::size_t k) const noexcept {
    if (k < preperiod_.size()) return preperiod_[k];
    if (period_.empty()) return std::nullopt;
    return period_[(k - preperiod_.size()) % period_.size()];
  }

  // First n symbols of the stream (fewer if a finite word ends sooner).
  std::vector<Symbol> prefix(std::size_t n) const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Symbol> preperiod_;
  std::vector<Symbol> period_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// Grammar: unit+ where unit := SYM exp? | "(" SYM+ ")" exp?,
// exp := "^" (INT>=2 | "inf"). Throws ParseError.
Word parse_word(std::string_view text);

// Canonical text; runs of five or more equal symbols outside the period are
// written with an exponent.
std::string format_word(const Word& w);

// Pointwise sieve product of two periodic blocks over lcm(|a|, |b|).
Word dot_compose(const Word& a, const Word& b);

// Shortest block whose repetition reproduces the periodic extension of w.
std::size_t minimal_period(const Word& w);
std::size_t minimal_period(std::span<const Symbol> block);

// Drops the first s symbols of the stream.
Word shift(const Word& w, std::size_t s);

// Parity-lexicographic comparison of the two symbol streams over at most
// `horizon` positions. Base order L < C < R, reversed after an odd number
// of R's. Comparison stops at a common C, or when a C-free finite word runs
// out; both cases report Equal.
Ordering parity_compare(const Word& a, const Word& b,
                        std::size_t horizon = kDefaultHorizon);

// Same comparison on shifted streams, without materializing the shifts.
Ordering parity_compare(const Word& a, std::size_t a_offset, const Word& b,
                        std::size_t b_offset, std::size_t horizon);

// Length of the common prefix of the two streams, capped at horizon.
std::size_t common_prefix_length(const Word& a, const Word& b,
                                 std::size_t horizon);

// True iff every shift of k (up to horizon) is parity-<= k. k must begin
// with R.
bool is_admissible(const Word& k, std::size_t horizon = kDefaultHorizon);

// Derrida-Gervois-Pomeau composition. p must end in C.
Word star_compose(const Word& p, const Word& q);

// p * p * ... * p (k factors), k >= 1.
Word star_power(const Word& p, unsigned k);

}  // namespace primesym
