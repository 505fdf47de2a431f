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

#include <span>
#include <string>

#include "primesym/kneading.hpp"

namespace primesym {

// Standalone SVG scatter of (u, x) samples with a vertical red rule at each
// marker inside [u_min, u_max].
std::string bifurcation_svg(std::span<const BifurcationPoint> points, double u_min, double u_max,
                            std::span<const double> markers);

}  // namespace primesym
