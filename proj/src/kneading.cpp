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

#include "primesym/kneading.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <string>
#include <thread>

#include "primesym/error.hpp"

namespace primesym {

namespace {

constexpr std::size_t kEntropyGrid = 8192;
// Truncated series are scanned only where the dropped tail is below this.
constexpr double kTruncationTail = 1e-10;

void require_state(double x) {
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("state must lie in [-1, 1]");
}

void require_positive_parameter(double u) {
  if (!(u > 0.0 && u <= 2.0)) throw DomainError("parameter must lie in (0, 2]");
}

double horner(const std::vector<double>& coeffs, double t) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// Divides (1 - t) out of P while P(1) = 0. The quotient's coefficients are
// the prefix sums of P's. Stops early if they outgrow exact doubles.
void deflate_unit_roots(std::vector<double>& coeffs) {
  constexpr double kExact = 9007199254740992.0;  // 2^53
  while (coeffs.size() > 1) {
    double sum = 0.0;
    for (double c : coeffs) sum += c;
    if (sum != 0.0) return;
    std::vector<double> q(coeffs.size() - 1);
    double run = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
      run += coeffs[j];
      if (std::abs(run) >= kExact) return;
      q[j] = run;
    }
    coeffs = std::move(q);
  }
}

}  // namespace

QuadraticMap::QuadraticMap(double parameter) : u(parameter) {
  if (!(parameter >= 0.0 && parameter <= 2.0)) {
    throw DomainError("parameter u=" + std::to_string(parameter) + " outside [0, 2]");
  }
}

std::vector<double> iterate_map(double u, double x0, std::size_t n) {
  const QuadraticMap f(u);
  require_state(x0);
  std::vector<double> orbit;
  orbit.reserve(n);
  double x = x0;
  for (std::size_t k = 0; k < n; ++k) {
    x = f(x);
    orbit.push_back(x);
  }
  return orbit;
}

Word itinerary(double u, std::size_t n, double c_tol) {
  const QuadraticMap f(u);
  std::vector<Symbol> out;
  out.reserve(n);
  double x = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(x) <= c_tol) {
      out.push_back(Symbol::C);
      break;
    }
    out.push_back(x > 0.0 ? Symbol::R : Symbol::L);
    x = f(x);
  }
  return Word::finite(std::move(out));
}

KneadResult u_of_word(const Word& target, std::optional<std::size_t> horizon, double u_tol,
                      std::size_t max_iterations) {
  const std::size_t h =
      horizon.value_or(target.is_finite() ? kFiniteTargetHorizon : kPeriodicTargetHorizon);
  if (h == 0) throw DomainError("u_of_word: horizon must be positive");
  if (!(u_tol > 0.0)) throw DomainError("u_of_word: tolerance must be positive");
  if (!is_admissible(target, h)) {
    throw DomainError("u_of_word: " + format_word(target) + " is not admissible");
  }

  double lo = 0.0;
  double hi = 2.0;
  for (std::size_t iter = 0; iter < max_iterations && hi - lo > u_tol; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // bracket below double resolution
    if (parity_compare(itinerary(mid, h), target, h) == Ordering::Less) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (!(hi - lo <= u_tol)) {
    throw ConvergenceError(lo, hi,
                           "u_of_word: bracket [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "] did not shrink below tolerance");
  }

  KneadResult r;
  r.target = target;
  r.u = hi;
  r.horizon = h;
  r.tolerance = u_tol;
  r.matched_prefix_len = common_prefix_length(itinerary(hi, h), target, h);
  return r;
}

EntropyResult topological_entropy(const Word& k, std::size_t truncation) {
  if (truncation < 64) throw DomainError("topological_entropy: truncation must be >= 64");

  std::vector<double> coeffs{1.0};
  double theta = 1.0;
  bool exact = false;  // series ended at C: a polynomial, no tail
  for (std::size_t n = 0; n < truncation; ++n) {
    const auto s = k.at(n);
    if (!s) break;
    if (*s == Symbol::C) {
      exact = true;
      break;
    }
    theta *= (*s == Symbol::R) ? -1.0 : 1.0;
    coeffs.push_back(theta);
  }

  // A terminated series is an integer polynomial; roots at t = 1 are
  // removed exactly so rounding cannot split them into spurious roots below 1.
  if (exact) deflate_unit_roots(coeffs);

  const double terms = static_cast<double>(coeffs.size());
  const double t_max = exact ? 1.0 - 1e-9 : std::exp(std::log(kTruncationTail) / terms);

  EntropyResult result;
  double t_prev = 0.0;
  double f_prev = coeffs.front();
  for (std::size_t j = 1; j <= kEntropyGrid; ++j) {
    const double t = t_max * static_cast<double>(j) / kEntropyGrid;
    const double f = horner(coeffs, t);
    if (f == 0.0 || (f < 0.0) != (f_prev < 0.0)) {
      double a = t_prev;
      double b = t;
      for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = horner(coeffs, m);
        if (fm != 0.0 && (fm < 0.0) == (f_prev < 0.0)) {
          a = m;
        } else {
          b = m;
        }
      }
      result.root = 0.5 * (a + b);
      result.root_found = true;
      result.entropy = -std::log(result.root);
      return result;
    }
    t_prev = t;
    f_prev = f;
  }
  return result;
}

std::uint64_t lap_count_oracle(double u, unsigned n) {
  require_positive_parameter(u);
  if (n > 22) throw DomainError("lap_count_oracle: n must be at most 22");
  std::vector<double> level{0.0};
  std::uint64_t turning_points = 0;
  for (unsigned k = 0; k < n; ++k) {
    turning_points += level.size();
    if (k + 1 == n) break;
    std::vector<double> next;
    next.reserve(level.size() * 2);
    for (double y : level) {
      const double a = (1.0 - y) / u;
      if (a < 0.0 || a > 1.0) continue;
      if (a == 0.0) {
        next.push_back(0.0);
        continue;
      }
      const double r = std::sqrt(a);
      next.push_back(r);
      next.push_back(-r);
    }
    level = std::move(next);
  }
  return 1 + turning_points;
}

double lap_growth_entropy(double u, unsigned n) {
  if (n < 3) throw DomainError("lap_growth_entropy: n must be at least 3");
  const double ratio = static_cast<double>(lap_count_oracle(u, n)) /
                       static_cast<double>(lap_count_oracle(u, n - 2));
  return 0.5 * std::log(ratio);
}

double lyapunov(double u, std::size_t n, std::size_t burn_in, double x0) {
  require_positive_parameter(u);
  require_state(x0);
  if (n < 10'000) throw DomainError("lyapunov: n must be at least 10^4");
  const QuadraticMap f(u);
  constexpr double kFloor = 1e-300;
  double x = x0;
  for (std::size_t k = 0; k < burn_in; ++k) x = f(x);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ax = std::max(std::abs(x), kFloor);
    sum += std::log(2.0 * u * ax);
    x = f(x);
  }
  return sum / static_cast<double>(n);
}

std::vector<BifurcationPoint> bifurcation_data(double u_min, double u_max, std::size_t u_steps,
                                               std::size_t transient, std::size_t keep,
                                               unsigned workers) {
  if (!(u_min >= 0.0 && u_min < u_max && u_max <= 2.0)) {
    throw DomainError("bifurcation_data: need 0 <= u_min < u_max <= 2");
  }
  if (u_steps == 0) throw DomainError("bifurcation_data: u_steps must be positive");
  std::vector<BifurcationPoint> out(u_steps * keep);

  auto fill = [&](std::size_t first, std::size_t last) {
    for (std::size_t s = first; s < last; ++s) {
      const double u =
          u_steps == 1 ? u_min
                       : u_min + (u_max - u_min) * static_cast<double>(s) /
                                     static_cast<double>(u_steps - 1);
      const QuadraticMap f(std::min(u, u_max));
      double x = 0.3;
      for (std::size_t k = 0; k < transient; ++k) x = f(x);
      for (std::size_t k = 0; k < keep; ++k) {
        x = f(x);
        out[s * keep + k] = {f.u, x};
      }
    }
  };

  const std::size_t parts = std::clamp<std::size_t>(workers, 1, u_steps);
  if (parts == 1) {
    fill(0, u_steps);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(parts);
  for (std::size_t w = 0; w < parts; ++w) {
    pool.emplace_back(fill, u_steps * w / parts, u_steps * (w + 1) / parts);
  }
  for (auto& t : pool) t.join();
  return out;
}

int band_structure(double u, std::size_t samples, std::size_t min_gap_bins) {
  const QuadraticMap f(u);
  if (samples < 2) throw DomainError("band_structure: need at least two samples");
  if (min_gap_bins == 0) throw DomainError("band_structure: min_gap_bins must be positive");

  double x = 0.3;
  for (std::size_t k = 0; k < kBandTransient; ++k) x = f(x);
  std::vector<double> orbit(samples);
  std::vector<std::size_t> hist(kBandBins, 0);
  const double width = 2.0 / kBandBins;
  for (auto& v : orbit) {
    x = f(x);
    v = x;
    const auto bin = std::min(kBandBins - 1, static_cast<std::size_t>((x + 1.0) / width));
    ++hist[bin];
  }

  const auto first = static_cast<std::size_t>(
      std::find_if(hist.begin(), hist.end(), [](std::size_t c) { return c > 0; }) - hist.begin());
  const auto last = kBandBins - 1 -
                    static_cast<std::size_t>(std::find_if(hist.rbegin(), hist.rend(),
                                                          [](std::size_t c) { return c > 0; }) -
                                             hist.rbegin());

  auto alternates_around = [&](double split) {
    bool side = orbit.front() > split;
    for (std::size_t k = 1; k < orbit.size(); ++k) {
      const bool s = orbit[k] > split;
      if (s == side) return false;
      side = s;
    }
    return true;
  };

  for (std::size_t b = first; b <= last;) {
    if (hist[b] != 0) {
      ++b;
      continue;
    }
    const std::size_t start = b;
    while (hist[b] == 0) ++b;  // hist[last] > 0 bounds the scan
    if (b - start >= min_gap_bins) {
      const double split = -1.0 + width * 0.5 * static_cast<double>(start + b);
      if (alternates_around(split)) return 2;
    }
  }
  return 1;
}

}  // namespace primesym
