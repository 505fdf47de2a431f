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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "primesym/symseq.hpp"

namespace primesym {

// Dynamics of x -> 1 - u x^2 on [-1, 1], u in [0, 2].

inline constexpr double kDefaultCriticalTol = 1e-12;
inline constexpr double kDefaultParameterTol = 1e-12;
inline constexpr std::size_t kFiniteTargetHorizon = 256;
inline constexpr std::size_t kPeriodicTargetHorizon = 1024;
inline constexpr std::size_t kDefaultTruncation = 4096;

// u(D_2) and u(D_inf); drawn as reference lines on bifurcation plots.
inline constexpr std::array<double, 2> kBifurcationMarkers{1.476, 1.5437};

struct QuadraticMap {
  double u;

  // Throws DomainError unless 0 <= u <= 2.
  explicit QuadraticMap(double parameter);

  double operator()(double x) const noexcept { return 1.0 - u * x * x; }
};

// x_1..x_n starting from x0.
std::vector<double> iterate_map(double u, double x0, std::size_t n);

// Symbols of the critical orbit x_1 = 1, x_2, ..., at most n of them:
// R for x > c_tol, L for x < -c_tol, C (terminal) otherwise.
Word itinerary(double u, std::size_t n, double c_tol = kDefaultCriticalTol);

struct KneadResult {
  Word target;
  double u = 0.0;
  std::size_t horizon = 0;
  double tolerance = 0.0;
  std::size_t matched_prefix_len = 0;
};

// Bisection on u in [0, 2] against the monotone kneading order. Returns the
// smallest u (within u_tol) whose itinerary is parity->= target. Default
// horizon is 256 for finite targets and 1024 for infinite ones.
KneadResult u_of_word(const Word& target, std::optional<std::size_t> horizon = std::nullopt,
                      double u_tol = kDefaultParameterTol, std::size_t max_iterations = 200);

struct EntropyResult {
  double entropy = 0.0;
  double root = 1.0;        // smallest zero of the kneading series in (0, 1)
  bool root_found = false;  // false: no sign change found, entropy reported as 0
};

// -ln t* for the smallest zero t* of 1 + sum theta_n t^n, theta_n the running
// product of +1 (L) / -1 (R) over the first n symbols. A terminal C ends the
// series. Meaningful for admissible words.
EntropyResult topological_entropy(const Word& k, std::size_t truncation = kDefaultTruncation);

// Lap number of the n-th iterate, counted from backward preimages of 0.
// n <= 22.
std::uint64_t lap_count_oracle(double u, unsigned n);

// 0.5 * ln(laps(n) / laps(n - 2)); the two-step ratio is stable in the
// two-band regime where single-step ratios oscillate.
double lap_growth_entropy(double u, unsigned n);

// Mean of ln|f'(x_k)| = ln|2 u x_k| over n post-burn-in iterates.
double lyapunov(double u, std::size_t n = 10'000'000, std::size_t burn_in = 10'000,
                double x0 = 0.3);

struct BifurcationPoint {
  double u;
  double x;
};

// u_steps equally spaced parameters (both ends included when u_steps > 1),
// keep samples each after a transient, starting at x0 = 0.3. Ordered by
// (u, sample). workers > 1 partitions the grid across threads.
std::vector<BifurcationPoint> bifurcation_data(double u_min, double u_max, std::size_t u_steps,
                                               std::size_t transient, std::size_t keep,
                                               unsigned workers = 1);

inline constexpr std::size_t kBandBins = 512;
inline constexpr std::size_t kBandMinGapBins = 2;
inline constexpr std::size_t kBandTransient = 10'000;

// 2 when the attractor splits into two bands: an interior run of at least
// min_gap_bins empty histogram bins whose midpoint the orbit crosses on
// every step. 1 otherwise.
int band_structure(double u, std::size_t samples = 100'000,
                   std::size_t min_gap_bins = kBandMinGapBins);

}  // namespace primesym
