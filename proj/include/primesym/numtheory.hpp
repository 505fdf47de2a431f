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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

// Brute-force number theory used as ground truth for the symbolic sieve.
namespace primesym {

struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;  // every prime <= limit, ascending

  bool contains(std::uint64_t n) const;
  // Primes p with lo < p < hi.
  std::uint64_t count_between(std::uint64_t lo, std::uint64_t hi) const;
};

// Eratosthenes over [0, limit]; limit >= 2.
PrimeTable classic_sieve(std::uint64_t limit);

// Newline-delimited decimal, one prime per line.
std::string format_prime_table(const PrimeTable& table);

// Unordered representations n = p + q, p <= q, both prime. n even, n >= 4.
std::uint64_t goldbach_r(std::uint64_t n);

// (n, r(n)) for every even n in [lo, hi], sharing one sieve.
std::vector<std::pair<std::uint64_t, std::uint64_t>> goldbach_range(std::uint64_t lo,
                                                                    std::uint64_t hi);

// Pairs (p, p + 2) of primes with lo <= p and p + 2 <= hi.
std::uint64_t twin_count(std::uint64_t lo, std::uint64_t hi);

// p (p - 2) / (2 ln p), the heuristic count of primes in (p, p^2).
double prime_count_estimate(std::uint64_t p);

}  // namespace primesym
