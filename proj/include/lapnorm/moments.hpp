// Copyright 2026 The lapnorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>

namespace lapnorm {

/// Biased (population) moment summary of a sample.
struct MomentsReport {
  std::size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  double skew = 0.0;             // m3 / m2^1.5
  double excess_kurtosis = 0.0;  // m4 / m2^2 - 3
};

double mean(std::span<const double> sample);

/// (1/n) * sum (x_i - mean)^k for 1 <= k <= 8, two-pass.
double central_moment(std::span<const double> sample, int k);

/// Population skewness g1 without small-sample correction. Requires n >= 3.
double skewness(std::span<const double> sample);

/// Population Fisher excess kurtosis g2 = m4/m2^2 - 3. Requires n >= 4.
double excess_kurtosis(std::span<const double> sample);

/// All of the above in one pass over the centered data. Requires n >= 4.
MomentsReport describe(std::span<const double> sample);

}  // namespace lapnorm
