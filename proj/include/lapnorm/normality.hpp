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
#include <vector>

namespace lapnorm {

/// Shapiro-Wilk outcome. `large_n_warning` flags n > 5000, beyond the range
/// the p-value approximation was fitted on; the numbers are still computed.
struct SwResult {
  std::size_t n = 0;
  double w = 0.0;
  double p_value = 0.0;
  bool large_n_warning = false;
};

inline constexpr std::size_t kSwMaxValidatedN = 5000;

/**
 * Full-length Shapiro-Wilk weights for sample size n >= 3 (Royston 1995).
 *
 * Antisymmetric with unit norm: a[i] == -a[n-1-i], sum a_i^2 == 1. The entry
 * for the smallest order statistic is positive, so a = (1/sqrt2, 0, -1/sqrt2)
 * for n = 3.
 */
std::vector<double> sw_coefficients(std::size_t n);

/// Upper-tail p-value of W for a sample of size n (exact for n = 3).
double sw_p_value(double w, std::size_t n);

/// W = (sum a_i x_(i))^2 / sum (x_i - mean)^2 with its p-value. Ties are fine;
/// a constant sample throws Error(Degenerate), n < 3 Error(InsufficientData).
SwResult shapiro_wilk(std::span<const double> sample);

}  // namespace lapnorm
