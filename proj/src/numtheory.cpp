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

#include "primesym/numtheory.hpp"

#include <algorithm>
#include <cmath>

#include "primesym/error.hpp"

namespace primesym {

namespace {

std::vector<bool> composite_flags(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  composite[0] = true;
  if (limit >= 1) composite[1] = true;
  for (std::uint64_t p = 2; p <= limit / p; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
  }
  return composite;
}

}  // namespace

bool PrimeTable::contains(std::uint64_t n) const {
  return std::binary_search(primes.begin(), primes.end(), n);
}

std::uint64_t PrimeTable::count_between(std::uint64_t lo, std::uint64_t hi) const {
  const auto first = std::upper_bound(primes.begin(), primes.end(), lo);
  const auto last = std::lower_bound(primes.begin(), primes.end(), hi);
  return first < last ? static_cast<std::uint64_t>(last - first) : 0;
}

PrimeTable classic_sieve(std::uint64_t limit) {
  if (limit < 2) throw DomainError("classic_sieve: limit must be at least 2");
  const auto composite = composite_flags(limit);
  PrimeTable t;
  t.limit = limit;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (!composite[n]) t.primes.push_back(n);
  }
  return t;
}

std::string format_prime_table(const PrimeTable& table) {
  std::string out;
  for (std::uint64_t p : table.primes) {
    out += std::to_string(p);
    out += '\n';
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> goldbach_range(std::uint64_t lo,
                                                                    std::uint64_t hi) {
  if (lo % 2 != 0 || hi % 2 != 0) throw DomainError("goldbach: n must be even");
  if (lo < 4) throw DomainError("goldbach: n must be at least 4");
  if (hi < lo) throw DomainError("goldbach: empty range");
  const PrimeTable table = classic_sieve(hi);
  const auto& primes = table.primes;
  // Accumulate every prime pair p <= q with p + q <= hi.
  std::vector<std::uint64_t> r(hi / 2 + 1, 0);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i; j < primes.size() && primes[i] + primes[j] <= hi; ++j) {
      const std::uint64_t n = primes[i] + primes[j];
      if (n % 2 == 0) ++r[n / 2];
    }
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve((hi - lo) / 2 + 1);
  for (std::uint64_t n = lo; n <= hi; n += 2) out.emplace_back(n, r[n / 2]);
  return out;
}

std::uint64_t goldbach_r(std::uint64_t n) {
  if (n % 2 != 0) throw DomainError("goldbach: n must be even");
  if (n < 4) throw DomainError("goldbach: n must be at least 4");
  const auto composite = composite_flags(n);
  std::uint64_t r = 0;
  for (std::uint64_t p = 2; p <= n / 2; ++p) {
    if (!composite[p] && !composite[n - p]) ++r;
  }
  return r;
}

std::uint64_t twin_count(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 1 || lo >= hi) throw DomainError("twin_count: need 1 <= lo < hi");
  const auto composite = composite_flags(hi);
  std::uint64_t count = 0;
  for (std::uint64_t p = lo; p + 2 <= hi; ++p) {
    if (!composite[p] && !composite[p + 2]) ++count;
  }
  return count;
}

double prime_count_estimate(std::uint64_t p) {
  if (p < 3) throw DomainError("prime_count_estimate: p must be a prime >= 3");
  for (std::uint64_t d = 2; d <= p / d; ++d) {
    if (p % d == 0) {
      throw DomainError("prime_count_estimate: " + std::to_string(p) + " is composite");
    }
  }
  const double x = static_cast<double>(p);
  return x * (x - 2.0) / (2.0 * std::log(x));
}

}  // namespace primesym
