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

#include "lapnorm/normality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "lapnorm/distfit.hpp"
#include "lapnorm/error.hpp"

namespace lapnorm {
namespace {

template <std::size_t N>
double polynomial(const std::array<double, N>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Corrections to the two extreme weights, in powers of 1/sqrt(n).
constexpr std::array<double, 6> kFirstWeight{0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
constexpr std::array<double, 6> kSecondWeight{0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};

// Normalising transform of W for 4 <= n <= 11 (powers of n).
constexpr std::array<double, 2> kSmallGamma{-2.273, 0.459};
constexpr std::array<double, 4> kSmallMean{0.5440, -0.39978, 0.025054, -6.714e-4};
constexpr std::array<double, 4> kSmallLogSd{1.3822, -0.77857, 0.062767, -0.0020322};

// Normalising transform of ln(1 - W) for n >= 12 (powers of ln n).
constexpr std::array<double, 4> kLargeMean{-1.5861, -0.31082, -0.083751, 0.0038915};
constexpr std::array<double, 3> kLargeLogSd{-0.4803, -0.082676, 0.0030302};

// Returned when W falls outside the small-n transform's support.
constexpr double kSmallP = 1e-19;

}  // namespace

std::vector<double> sw_coefficients(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorKind::InsufficientData,
                "Shapiro-Wilk needs at least 3 values, got " + std::to_string(n));
  }
  const std::size_t half = n / 2;
  std::vector<double> a(n, 0.0);

  if (n == 3) {
    a[0] = std::numbers::sqrt2 / 2.0;
    a[2] = -a[0];
    return a;
  }

  // Blom scores for the lower half; m[i] < 0.
  const double nn = static_cast<double>(n);
  std::vector<double> m(half);
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < half; ++i) {
    m[i] = normal_quantile((static_cast<double>(i + 1) - 0.375) / (nn + 0.25));
    sum_sq += m[i] * m[i];
  }
  sum_sq *= 2.0;
  const double norm = std::sqrt(sum_sq);
  const double rsn = 1.0 / std::sqrt(nn);

  const double a1 = polynomial(kFirstWeight, rsn) - m[0] / norm;
  std::size_t first_plain;
  double fac;
  if (n > 5) {
    const double a2 = polynomial(kSecondWeight, rsn) - m[1] / norm;
    fac = std::sqrt((sum_sq - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1]) /
                    (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
    a[0] = a1;
    a[1] = a2;
    first_plain = 2;
  } else {
    fac = std::sqrt((sum_sq - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1));
    a[0] = a1;
    first_plain = 1;
  }
  for (std::size_t i = first_plain; i < half; ++i) a[i] = -m[i] / fac;
  for (std::size_t i = 0; i < half; ++i) a[n - 1 - i] = -a[i];
  return a;
}

double sw_p_value(double w, std::size_t n) {
  if (n < 3) {
    throw Error(ErrorKind::InsufficientData,
                "Shapiro-Wilk needs at least 3 values, got " + std::to_string(n));
  }
  if (n == 3) {
    const double p = 6.0 / std::numbers::pi * (std::asin(std::sqrt(w)) - std::numbers::pi / 3.0);
    return std::clamp(p, 0.0, 1.0);
  }
  const double one_minus_w = 1.0 - w;
  if (!(one_minus_w > 0.0)) return 1.0;

  const double nn = static_cast<double>(n);
  double y = std::log(one_minus_w);
  double mu;
  double sd;
  if (n <= 11) {
    const double gamma = polynomial(kSmallGamma, nn);
    if (y >= gamma) return kSmallP;
    y = -std::log(gamma - y);
    mu = polynomial(kSmallMean, nn);
    sd = std::exp(polynomial(kSmallLogSd, nn));
  } else {
    const double ln_n = std::log(nn);
    mu = polynomial(kLargeMean, ln_n);
    sd = std::exp(polynomial(kLargeLogSd, ln_n));
  }
  return standard_normal_sf((y - mu) / sd);
}

SwResult shapiro_wilk(std::span<const double> sample) {
  const std::size_t n = sample.size();
  const auto a = sw_coefficients(n);

  std::vector<double> x(sample.begin(), sample.end());
  std::sort(x.begin(), x.end());
  const double range = x.back() - x.front();
  if (!(range > 0.0)) throw Error(ErrorKind::Degenerate, "Shapiro-Wilk on a constant sample");

  // Centre and scale by the range; W is affine invariant.
  double centre = 0.0;
  for (double v : x) centre += v;
  centre /= static_cast<double>(n);

  double numerator = 0.0;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = (x[i] - centre) / range;
    numerator += a[i] * z;
    ss += z * z;
  }
  const double w = std::min(1.0, numerator * numerator / ss);

  return {n, w, sw_p_value(w, n), n > kSwMaxValidatedN};
}

}  // namespace lapnorm
