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

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

#include "lapnorm/distfit.hpp"

namespace lapnorm {

/// Right-continuous empirical CDF: steps[i] = (i + 1) / n at sorted_x[i].
struct EcdfCurve {
  std::vector<double> sorted_x;
  std::vector<double> steps;

  /// Fraction of sample points <= x.
  [[nodiscard]] double operator()(double x) const;
};

EcdfCurve ecdf(std::span<const double> sample);

/**
 * Kolmogorov-Smirnov distance between the sample's ECDF and a continuous CDF:
 * max over sorted i of max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n).
 * Exceptions thrown by `cdf` propagate.
 */
template <class Cdf>
  requires std::invocable<Cdf&, double>
double ks_statistic(std::span<const double> sample, Cdf&& cdf);

double ks_statistic(std::span<const double> sample, const DistParams& params);

double log_likelihood(std::span<const double> sample, const DistParams& params);

struct FitRecord {
  Family family = Family::Normal;
  DistParams params;
  double ks_distance = 0.0;
  double log_likelihood = 0.0;
  double aic = 0.0;  // 2k - 2 ln L with k = 2
};

struct GofReport {
  FitRecord normal;
  FitRecord laplace;
  Family better_fit = Family::Normal;
};

inline constexpr int kParamsPerFamily = 2;

/// Fits both families and scores them. better_fit is the smaller AIC, ties
/// going to the smaller KS distance (and then to normal).
GofReport compare_fits(std::span<const double> sample);

// Implementation.

namespace detail {
void require_nonempty(std::span<const double> sample);
}

template <class Cdf>
  requires std::invocable<Cdf&, double>
double ks_statistic(std::span<const double> sample, Cdf&& cdf) {
  detail::require_nonempty(sample);
  std::vector<double> x(sample.begin(), sample.end());
  std::sort(x.begin(), x.end());
  const auto n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = static_cast<double>(cdf(x[i]));
    const double above = static_cast<double>(i + 1) / n - f;
    const double below = f - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  return d;
}

}  // namespace lapnorm
