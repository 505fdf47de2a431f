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

#include "primesym/symseq.hpp"

#include <algorithm>
#include <numeric>

#include "primesym/error.hpp"

namespace primesym {

namespace {

// Guard against exponent bombs such as "R^999999999".
constexpr std::size_t kMaxParsedLength = std::size_t{1} << 26;

constexpr std::size_t kCompressRun = 5;

Ordering flip(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return Ordering::Greater;
    case Ordering::Greater:
      return Ordering::Less;
    default:
      return o;
  }
}

void require_block(const Word& w, const char* what) {
  if (!w.is_finite()) throw DomainError(std::string(what) + ": word must be finite");
  if (w.empty()) throw DomainError(std::string(what) + ": word must be nonempty");
  if (w.ends_in_c()) throw DomainError(std::string(what) + ": word must not contain C");
}

}  // namespace

char to_char(Symbol s) noexcept {
  switch (s) {
    case Symbol::L:
      return 'L';
    case Symbol::C:
      return 'C';
    case Symbol::R:
      return 'R';
  }
  return '?';
}

std::optional<Symbol> symbol_from_char(char c) noexcept {
  switch (c) {
    case 'L':
      return Symbol::L;
    case 'C':
      return Symbol::C;
    case 'R':
      return Symbol::R;
    default:
      return std::nullopt;
  }
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return "Less";
    case Ordering::Equal:
      return "Equal";
    case Ordering::Greater:
      return "Greater";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, Ordering o) { return os << to_string(o); }

std::size_t minimal_period(std::span<const Symbol> block) {
  const std::size_t n = block.size();
  if (n == 0) throw DomainError("minimal_period: empty block");
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n; ++i) {
      if (block[i] != block[i - d]) {
        repeats = false;
        break;
      }
    }
    if (repeats) return d;
  }
  return n;
}

std::size_t minimal_period(const Word& w) {
  require_block(w, "minimal_period");
  return minimal_period(std::span<const Symbol>(w.preperiod()));
}

Word Word::finite(std::vector<Symbol> symbols) {
  for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
    if (symbols[i] == Symbol::C) {
      throw DomainError("C may only appear as the last symbol of a word");
    }
  }
  Word w;
  w.preperiod_ = std::move(symbols);
  return w;
}

Word Word::eventually_periodic(std::vector<Symbol> preperiod,
                               std::vector<Symbol> period) {
  if (period.empty()) return finite(std::move(preperiod));
  auto has_c = [](const std::vector<Symbol>& v) {
    return std::find(v.begin(), v.end(), Symbol::C) != v.end();
  };
  if (has_c(preperiod) || has_c(period)) {
    throw DomainError("an infinite word cannot contain C");
  }
  period.resize(minimal_period(std::span<const Symbol>(period)));
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    preperiod.pop_back();
    std::rotate(period.begin(), period.end() - 1, period.end());
  }
  Word w;
  w.preperiod_ = std::move(preperiod);
  w.period_ = std::move(period);
  return w;
}

std::vector<Symbol> Word::prefix(std::size_t n) const {
  std::vector<Symbol> out;
  out.reserve(is_finite() ? std::min(n, preperiod_.size()) : n);
  for (std::size_t k = 0; k < n; ++k) {
    auto s = at(k);
    if (!s) break;
    out.push_back(*s);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << format_word(w); }

Word parse_word(std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty word");

  std::vector<Symbol> preperiod;
  std::vector<Symbol> period;
  bool seen_inf = false;
  bool seen_c = false;
  std::size_t pos = 0;

  while (pos < text.size()) {
    const std::size_t unit_start = pos;
    if (seen_inf) throw ParseError(pos, "'^inf' unit must be last");
    if (seen_c) throw ParseError(pos, "C may only be the final symbol");

    std::vector<Symbol> block;
    std::size_t c_offset = 0;  // text position of a C inside this unit
    if (text[pos] == '(') {
      ++pos;
      while (pos < text.size() && text[pos] != ')') {
        auto s = symbol_from_char(text[pos]);
        if (!s) {
          if (text[pos] == '(') throw ParseError(pos, "nested parenthesis");
          throw ParseError(pos, std::string("unexpected character '") + text[pos] + "'");
        }
        if (!block.empty() && block.back() == Symbol::C) {
          throw ParseError(c_offset, "C may only be the final symbol");
        }
        if (*s == Symbol::C) c_offset = pos;
        block.push_back(*s);
        ++pos;
      }
      if (pos >= text.size()) throw ParseError(unit_start, "unbalanced parenthesis");
      if (block.empty()) throw ParseError(unit_start, "empty group");
      ++pos;  // ')'
    } else if (auto s = symbol_from_char(text[pos])) {
      if (*s == Symbol::C) c_offset = pos;
      block.push_back(*s);
      ++pos;
    } else if (text[pos] == ')') {
      throw ParseError(pos, "unbalanced parenthesis");
    } else {
      throw ParseError(pos, std::string("unexpected character '") + text[pos] + "'");
    }

    const bool block_has_c = block.back() == Symbol::C;
    std::size_t repeat = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (text.substr(pos, 3) == "inf") {
        if (block_has_c) throw ParseError(c_offset, "C cannot repeat forever");
        pos += 3;
        seen_inf = true;
        period = std::move(block);
        continue;
      }
      std::size_t value = 0;
      const std::size_t digits_start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > kMaxParsedLength) throw ParseError(digits_start, "exponent too large");
        ++pos;
      }
      if (pos == digits_start) throw ParseError(pos, "expected exponent after '^'");
      if (value < 2) throw ParseError(digits_start, "exponent must be at least 2");
      if (block_has_c) throw ParseError(c_offset, "C cannot be repeated");
      repeat = value;
    }

    if (preperiod.size() + repeat * block.size() > kMaxParsedLength) {
      throw ParseError(unit_start, "word too long");
    }
    for (std::size_t r = 0; r < repeat; ++r) {
      preperiod.insert(preperiod.end(), block.begin(), block.end());
    }
    seen_c = block_has_c;
  }

  return Word::eventually_periodic(std::move(preperiod), std::move(period));
}

std::string format_word(const Word& w) {
  std::string out;
  const auto& pre = w.preperiod();
  for (std::size_t i = 0; i < pre.size();) {
    std::size_t j = i;
    while (j < pre.size() && pre[j] == pre[i]) ++j;
    const std::size_t run = j - i;
    if (run >= kCompressRun) {
      out += to_char(pre[i]);
      out += '^';
      out += std::to_string(run);
    } else {
      out.append(run, to_char(pre[i]));
    }
    i = j;
  }
  if (!w.is_finite()) {
    out += '(';
    for (Symbol s : w.period()) out += to_char(s);
    out += ")^inf";
  }
  return out;
}

Word dot_compose(const Word& a, const Word& b) {
  require_block(a, "dot_compose");
  require_block(b, "dot_compose");
  const auto& x = a.preperiod();
  const auto& y = b.preperiod();
  const std::size_t n = std::lcm(x.size(), y.size());
  std::vector<Symbol> out(n);
  for (std::size_t q = 0; q < n; ++q) out[q] = dot(x[q % x.size()], y[q % y.size()]);
  return Word::finite(std::move(out));
}

Word shift(const Word& w, std::size_t s) {
  const auto& pre = w.preperiod();
  if (w.is_finite()) {
    if (s >= pre.size()) return Word{};
    return Word::finite({pre.begin() + static_cast<std::ptrdiff_t>(s), pre.end()});
  }
  if (s <= pre.size()) {
    return Word::eventually_periodic(
        {pre.begin() + static_cast<std::ptrdiff_t>(s), pre.end()}, w.period());
  }
  std::vector<Symbol> period = w.period();
  const std::size_t r = (s - pre.size()) % period.size();
  std::rotate(period.begin(), period.begin() + static_cast<std::ptrdiff_t>(r), period.end());
  return Word::periodic(std::move(period));
}

Ordering parity_compare(const Word& a, std::size_t a_offset, const Word& b,
                        std::size_t b_offset, std::size_t horizon) {
  bool odd = false;
  for (std::size_t k = 0; k < horizon; ++k) {
    const auto x = a.at(a_offset + k);
    const auto y = b.at(b_offset + k);
    if (!x || !y) return Ordering::Equal;
    if (*x != *y) {
      const Ordering base = *x < *y ? Ordering::Less : Ordering::Greater;
      return odd ? flip(base) : base;
    }
    if (*x == Symbol::C) return Ordering::Equal;
    if (*x == Symbol::R) odd = !odd;
  }
  return Ordering::Equal;
}

Ordering parity_compare(const Word& a, const Word& b, std::size_t horizon) {
  return parity_compare(a, 0, b, 0, horizon);
}

std::size_t common_prefix_length(const Word& a, const Word& b, std::size_t horizon) {
  std::size_t k = 0;
  for (; k < horizon; ++k) {
    const auto x = a.at(k);
    const auto y = b.at(k);
    if (!x || !y || *x != *y) break;
  }
  return k;
}

bool is_admissible(const Word& k, std::size_t horizon) {
  if (k.at(0) != Symbol::R) throw DomainError("kneading words must begin with R");
  // Shifts beyond preperiod + period repeat earlier ones.
  const std::size_t distinct =
      k.is_finite() ? k.finite_length() - 1 : k.preperiod().size() + k.period().size();
  const std::size_t limit = std::min(horizon, distinct);
  for (std::size_t s = 1; s <= limit; ++s) {
    if (parity_compare(k, s, k, 0, horizon) == Ordering::Greater) return false;
  }
  return true;
}

Word star_compose(const Word& p, const Word& q) {
  if (!p.ends_in_c()) throw DomainError("star_compose: left operand must end in C");
  if (q.empty()) throw DomainError("star_compose: right operand must be nonempty");
  const auto& pre = p.preperiod();
  const std::vector<Symbol> body(pre.begin(), pre.end() - 1);
  const bool odd = std::count(body.begin(), body.end(), Symbol::R) % 2 == 1;
  auto tau = [odd](Symbol s) {
    if (!odd || s == Symbol::C) return s;
    return s == Symbol::L ? Symbol::R : Symbol::L;
  };
  auto expand = [&](const std::vector<Symbol>& in) {
    std::vector<Symbol> out;
    out.reserve(in.size() * (body.size() + 1));
    for (Symbol s : in) {
      out.insert(out.end(), body.begin(), body.end());
      out.push_back(tau(s));
    }
    return out;
  };
  return Word::eventually_periodic(expand(q.preperiod()), expand(q.period()));
}

Word star_power(const Word& p, unsigned k) {
  if (k == 0) throw DomainError("star_power: exponent must be at least 1");
  Word out = p;
  for (unsigned i = 1; i < k; ++i) out = star_compose(p, out);
  return out;
}

}  // namespace primesym
