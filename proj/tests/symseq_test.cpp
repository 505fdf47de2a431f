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

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "oracles.hpp"
#include "primesym/error.hpp"
#include "primesym/sieve.hpp"
#include "primesym/symseq.hpp"

namespace primesym {
namespace {

using testing::random_letters;

std::string letters(const Word& w) {
  std::string s;
  for (Symbol x : w.preperiod()) s += to_char(x);
  return s;
}

Word W(const char* text) { return parse_word(text); }

std::size_t parse_error_position(const char* text) {
  try {
    parse_word(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return std::string::npos;
}

struct TableRow {
  const char* word;
  double u;
};

const TableRow kReference[] = {
    {"RC", 1.0},          {"RLRC", 1.3107},        {"RLR^3LRC", 1.3815},
    {"RLR^2(RL)^inf", 1.4304}, {"RL(R)^inf", 1.5437}, {"RLC", 1.754},
    {"RL(L)^inf", 2.0},
};

TEST(ParseWord, Examples) {
  EXPECT_EQ(letters(W("RLRRRL")), "RLRRRL");
  const Word d_inf = W("RL(R)^inf");
  EXPECT_EQ(d_inf.preperiod(), (std::vector<Symbol>{Symbol::R, Symbol::L}));
  EXPECT_EQ(d_inf.period(), std::vector<Symbol>{Symbol::R});
  EXPECT_EQ(letters(W("R^3")), "RRR");
  EXPECT_EQ(letters(W("RLR^3LRC")), "RLRRRLRC");
  EXPECT_EQ(letters(W("(RL)^3")), "RLRLRL");
}

TEST(ParseWord, Canonicalizes) {
  EXPECT_EQ(W("RLR(R)^inf"), W("RL(R)^inf"));
  EXPECT_EQ(W("(RLRL)^inf"), W("(RL)^inf"));
  EXPECT_EQ(W("R(LR)^inf"), W("(RL)^inf"));
  EXPECT_EQ(W("R^inf"), W("(R)^inf"));
  EXPECT_TRUE(W("(RL)^inf").preperiod().empty());
}

TEST(ParseWord, RejectsWithPosition) {
  EXPECT_EQ(parse_error_position("RLX"), 2u);
  EXPECT_EQ(parse_error_position("R L"), 1u);
  EXPECT_EQ(parse_error_position("R(L"), 1u);
  EXPECT_EQ(parse_error_position("RL)"), 2u);
  EXPECT_EQ(parse_error_position("(R)^infR"), 7u);
  EXPECT_EQ(parse_error_position("RCR"), 2u);
  EXPECT_EQ(parse_error_position("(RCR)"), 2u);
  EXPECT_EQ(parse_error_position("RC^2"), 1u);
  EXPECT_EQ(parse_error_position("R(C)^inf"), 2u);
  EXPECT_EQ(parse_error_position("R^1"), 2u);
  EXPECT_EQ(parse_error_position("R^"), 2u);
  EXPECT_EQ(parse_error_position("()"), 0u);
  EXPECT_EQ(parse_error_position(""), 0u);
}

TEST(FormatWord, Examples) {
  EXPECT_EQ(format_word(W("RL")), "RL");
  EXPECT_EQ(format_word(W("RL(R)^inf")), "RL(R)^inf");
  EXPECT_EQ(format_word(W("RLLLL")), "RLLLL");
  EXPECT_EQ(format_word(W("RLLLLL")), "RL^5");
  EXPECT_EQ(format_word(W("(RLRRRL)^inf")), "(RLRRRL)^inf");
}

TEST(FormatWord, RoundTripsRandomWords) {
  std::mt19937_64 rng(7);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 500; ++trial) {
    std::string text = random_letters(rng, 12);
    if (coin(rng)) {
      text += "(" + random_letters(rng, 6) + ")^inf";
    } else if (coin(rng)) {
      text += "C";
    }
    const Word w = parse_word(text);
    EXPECT_EQ(parse_word(format_word(w)), w) << text;
  }
}

TEST(DotCompose, SymbolTable) {
  EXPECT_EQ(dot(Symbol::L, Symbol::L), Symbol::L);
  EXPECT_EQ(dot(Symbol::R, Symbol::R), Symbol::R);
  EXPECT_EQ(dot(Symbol::R, Symbol::L), Symbol::R);
  EXPECT_EQ(dot(Symbol::L, Symbol::R), Symbol::R);
  const Symbol s[] = {Symbol::R, Symbol::L};
  for (Symbol a : s) {
    for (Symbol b : s) {
      EXPECT_EQ(dot(a, b), dot(b, a));
      EXPECT_EQ(dot(a, a), a);
      for (Symbol c : s) EXPECT_EQ(dot(dot(a, b), c), dot(a, dot(b, c)));
    }
  }
}

TEST(DotCompose, Examples) {
  EXPECT_EQ(letters(dot_compose(W("RL"), W("RLL"))), "RLRRRL");
  EXPECT_EQ(dot_compose(W("RLRRL"), W("RLRRL")), W("RLRRL"));

  // Position q is L iff 2 and 5 both fail to divide q.
  std::string expected;
  for (std::uint64_t q = 0; q < 10; ++q) expected += testing::divisibility_symbol(q, {2, 5});
  EXPECT_EQ(expected, "RLRLRRRLRL");
  EXPECT_EQ(letters(dot_compose(W("RL"), W("RLLLL"))), expected);
}

TEST(DotCompose, RejectsBadOperands) {
  EXPECT_THROW(dot_compose(Word{}, W("RL")), DomainError);
  EXPECT_THROW(dot_compose(W("RC"), W("RL")), DomainError);
  EXPECT_THROW(dot_compose(W("(RL)^inf"), W("RL")), DomainError);
}

TEST(DotCompose, AlgebraOnRandomWords) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Word a = W(random_letters(rng, 12).c_str());
    const Word b = W(random_letters(rng, 12).c_str());
    const Word c = W(random_letters(rng, 12).c_str());
    EXPECT_EQ(dot_compose(a, b), dot_compose(b, a));
    EXPECT_EQ(dot_compose(dot_compose(a, b), c), dot_compose(a, dot_compose(b, c)));
    EXPECT_EQ(dot_compose(a, a), a);
  }
}

TEST(DotCompose, MatchesPointwiseStreams) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string a = random_letters(rng, 10);
    const std::string b = random_letters(rng, 10);
    const auto block = dot_compose(W(a.c_str()), W(b.c_str())).preperiod();
    const std::size_t l = std::lcm(a.size(), b.size());
    ASSERT_EQ(block.size(), l);
    for (std::size_t q = 0; q < 3 * l; ++q) {
      const char want = (a[q % a.size()] == 'L' && b[q % b.size()] == 'L') ? 'L' : 'R';
      ASSERT_EQ(to_char(block[q % l]), want) << a << " . " << b << " at " << q;
    }
  }
}

TEST(MinimalPeriod, Examples) {
  EXPECT_EQ(minimal_period(W("RLRL")), 2u);
  EXPECT_EQ(minimal_period(W("RLRRRL")), 6u);
  EXPECT_EQ(minimal_period(dot_compose(W("RLL"), W("RLLLL"))), 15u);
  EXPECT_THROW(minimal_period(Word{}), DomainError);
}

TEST(MinimalPeriod, ProductOfDistinctPrimes) {
  const std::uint64_t ps[] = {2, 3, 5, 7, 11, 13};
  for (auto p : ps) {
    for (auto q : ps) {
      if (p == q) continue;
      EXPECT_EQ(minimal_period(dot_compose(m_of_prime(p), m_of_prime(q))), p * q);
    }
  }
}

TEST(MinimalPeriod, AgreesWithDivisorScan) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::string block = random_letters(rng, 4);
    std::uniform_int_distribution<int> reps(1, 4);
    std::string s;
    for (int r = reps(rng); r > 0; --r) s += block;
    std::size_t oracle = s.size();
    for (std::size_t d = 1; d <= s.size(); ++d) {
      if (s.size() % d != 0) continue;
      std::string rebuilt;
      while (rebuilt.size() < s.size()) rebuilt += s.substr(0, d);
      if (rebuilt == s) {
        oracle = d;
        break;
      }
    }
    EXPECT_EQ(minimal_period(W(s.c_str())), oracle) << s;
  }
}

TEST(ParityCompare, Examples) {
  EXPECT_EQ(parity_compare(W("RL(R)^inf"), W("RL(L)^inf"), 64), Ordering::Less);
  EXPECT_EQ(parity_compare(W("(RLRRRL)^inf"), W("RL(R)^inf"), 64), Ordering::Less);
  EXPECT_EQ(parity_compare(W("RLC"), W("RLC"), 5), Ordering::Equal);
  EXPECT_EQ(parity_compare(W("RL(R)^inf"), W("RL(R)^inf"), 4096), Ordering::Equal);
  // C sits between L and R.
  EXPECT_EQ(parity_compare(W("C"), W("R"), 4), Ordering::Less);
  EXPECT_EQ(parity_compare(W("RC"), W("RL(L)^inf"), 4), Ordering::Less);
  // Differences past the horizon are invisible.
  EXPECT_EQ(parity_compare(W("RLRRRL(R)^inf"), W("RLRRR(R)^inf"), 5), Ordering::Equal);
}

TEST(ParityCompare, TotalPreorderOnRandomWords) {
  std::mt19937_64 rng(19);
  auto random_word = [&] {
    std::string text = "R" + random_letters(rng, 5);
    return W((text + "(" + random_letters(rng, 5) + ")^inf").c_str());
  };
  for (int trial = 0; trial < 400; ++trial) {
    const Word a = random_word(), b = random_word(), c = random_word();
    const Ordering ab = parity_compare(a, b, 64);
    const Ordering ba = parity_compare(b, a, 64);
    EXPECT_EQ(ab == Ordering::Less, ba == Ordering::Greater);
    EXPECT_EQ(ab == Ordering::Equal, ba == Ordering::Equal);
    const Ordering bc = parity_compare(b, c, 64);
    if (ab != Ordering::Greater && bc != Ordering::Greater) {
      EXPECT_NE(parity_compare(a, c, 64), Ordering::Greater);
    }
  }
}

TEST(ParityCompare, FollowsTableParameters) {
  for (const auto& x : kReference) {
    for (const auto& y : kReference) {
      if (x.u < y.u) {
        EXPECT_EQ(parity_compare(W(x.word), W(y.word), 4096), Ordering::Less)
            << x.word << " vs " << y.word;
      }
    }
  }
}

TEST(IsAdmissible, Examples) {
  EXPECT_TRUE(is_admissible(W("RL(R)^inf"), 4096));
  EXPECT_FALSE(is_admissible(W("RR(L)^inf"), 4096));
  EXPECT_TRUE(is_admissible(W("(RL)^inf"), 4096));
  EXPECT_THROW(is_admissible(W("LR"), 16), DomainError);
}

TEST(IsAdmissible, TableWords) {
  for (const auto& row : kReference) EXPECT_TRUE(is_admissible(W(row.word), 4096)) << row.word;
}

TEST(IsAdmissible, SieveWords) {
  SieveState s = SieveState::initial(1 << 10);
  EXPECT_TRUE(is_admissible(stream_word(s), 4096));  // (RL)^inf
  s = sieve_step(s);
  EXPECT_TRUE(is_admissible(stream_word(s), 4096));  // (RLRRRL)^inf
  s = sieve_step(s);
  // From D_3 on the composed words are not kneading sequences: shift 22
  // agrees through RLRRRRRLR (seven R's) and then has L where D_3 has R.
  const Word d3 = stream_word(s);
  EXPECT_EQ(parity_compare(shift(d3, 22), d3, 4096), Ordering::Greater);
  EXPECT_FALSE(is_admissible(d3, 4096));
}

TEST(Shift, RotatesIntoPeriod) {
  EXPECT_EQ(shift(W("RL(R)^inf"), 1), W("L(R)^inf"));
  EXPECT_EQ(shift(W("RL(R)^inf"), 5), W("(R)^inf"));
  EXPECT_EQ(shift(W("(RLL)^inf"), 4), W("(LLR)^inf"));
  EXPECT_EQ(shift(W("RLC"), 2), W("C"));
  EXPECT_TRUE(shift(W("RLC"), 3).empty());
}

TEST(StarCompose, Examples) {
  EXPECT_EQ(format_word(star_compose(W("RC"), W("RC"))), "RLRC");
  EXPECT_EQ(star_compose(W("RLRC"), W("RC")), W("RLR^3LRC"));
  EXPECT_EQ(star_compose(W("RC"), W("C")), W("RC"));
}

TEST(StarCompose, EventuallyPeriodicOperand) {
  const Word out = star_compose(W("RC"), W("R(L)^inf"));
  // body "R" is odd: R -> L, L -> R.
  EXPECT_EQ(out, W("RL(RR)^inf"));
  EXPECT_EQ(star_compose(W("RLRC"), W("(RL)^inf")).period().size(), 8u);
}

TEST(StarCompose, RejectsOperandWithoutC) {
  EXPECT_THROW(star_compose(W("RLL"), W("RLLLL")), DomainError);
  EXPECT_THROW(star_compose(W("RC"), Word{}), DomainError);
}

TEST(StarCompose, PeriodDoublingCascadeStaysAdmissible) {
  const Word rc = W("RC");
  for (unsigned k = 1; k <= 7; ++k) {
    const Word w = star_power(rc, k);
    EXPECT_EQ(w.finite_length(), std::size_t{1} << k);
    EXPECT_TRUE(is_admissible(w, 4096)) << k;
  }
  EXPECT_EQ(star_power(rc, 3), W("RLR^3LRC"));
  EXPECT_THROW(star_power(rc, 0), DomainError);
}

TEST(Word, InvariantsEnforced) {
  EXPECT_THROW(Word::finite({Symbol::C, Symbol::R}), DomainError);
  EXPECT_THROW(Word::eventually_periodic({}, {Symbol::R, Symbol::C}), DomainError);
  EXPECT_NO_THROW(Word::finite({Symbol::R, Symbol::C}));
}

}  // namespace
}  // namespace primesym
