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

#include "lapnorm/distfit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "lapnorm/error.hpp"
#include "lapnorm/moments.hpp"

namespace lapnorm {
namespace {

template <std::size_t N>
double horner(const std::array<double, N>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// AS 241 (PPND16) coefficients, lowest order first.
constexpr std::array<double, 8> kCentralNum{
    3.3871328727963666080e0, 1.3314166789178437745e2, 1.9715909503065514427e3,
    1.3731693765509461125e4, 4.5921953931549871457e4, 6.7265770927008700853e4,
    3.3430575583588128105e4, 2.5090809287301226727e3};
constexpr std::array<double, 8> kCentralDen{
    1.0, 4.2313330701600911252e1, 6.8718700749205790830e2, 5.3941960214247511077e3,
    2.1213794301586595867e4, 3.9307895800092710610e4, 2.8729085735721942674e4,
    5.2264952788528545610e3};
constexpr std::array<double, 8> kNearNum{
    1.42343711074968357734e0, 4.63033784615654529590e0, 5.76949722146069140550e0,
    3.64784832476320460504e0, 1.27045825245236838258e0, 2.41780725177450611770e-1,
    2.27238449892691845833e-2, 7.74545014278341407640e-4};
constexpr std::array<double, 8> kNearDen{
    1.0, 2.05319162663775882187e0, 1.67638483018380384940e0, 6.89767334985100004550e-1,
    1.48103976427480074590e-1, 1.51986665636164571966e-2, 5.47593808499534494600e-4,
    1.05075007164441684324e-9};
constexpr std::array<double, 8> kTailNum{
    6.65790464350110377720e0, 5.46378491116411436990e0, 1.78482653991729133580e0,
    2.96560571828504891230e-1, 2.65321895265761230930e-2, 1.24266094738807843860e-3,
    2.71155556874348757815e-5, 2.01033439929228813265e-7};
constexpr std::array<double, 8> kTailDen{
    1.0, 5.99832206555887937690e-1, 1.36929880922735805310e-1, 1.48753612908506148525e-2,
    7.86869131145613259100e-4, 1.84631831751005468180e-5, 1.42151175831644588870e-7,
    2.04426310338993978564e-15};

void require_fit_size(std::span<const double> sample) {
  if (sample.size() < 2) {
    throw Error(ErrorKind::InsufficientData,
                "fit needs at least 2 values, got " + std::to_string(sample.size()));
  }
}

}  // namespace

const char* to_string(Family family) noexcept {
  return family == Family::Normal ? "normal" : "laplace";
}

Family family_of(const DistParams& params) noexcept {
  return std::holds_alternative<NormalParams>(params) ? Family::Normal : Family::Laplace;
}

void validate(const LaplaceParams& p) {
  if (!std::isfinite(p.mu) || !std::isfinite(p.lambda) || !(p.lambda > 0.0)) {
    throw Error(ErrorKind::Domain, "invalid Laplace parameters (mu=" + std::to_string(p.mu) +
                                       ", lambda=" + std::to_string(p.lambda) + ")");
  }
}

void validate(const NormalParams& p) {
  if (!std::isfinite(p.mean) || !std::isfinite(p.sigma) || !(p.sigma > 0.0)) {
    throw Error(ErrorKind::Domain, "invalid normal parameters (mean=" + std::to_string(p.mean) +
                                       ", sigma=" + std::to_string(p.sigma) + ")");
  }
}

double median(std::span<const double> sample) {
  if (sample.empty()) throw Error(ErrorKind::InsufficientData, "median of empty sample");
  std::vector<double> v(sample.begin(), sample.end());
  const auto mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return lower + (upper - lower) / 2.0;
}

LaplaceParams fit_laplace(std::span<const double> sample) {
  require_fit_size(sample);
  const double mu = median(sample);
  double sum = 0.0;
  for (double x : sample) sum += std::abs(x - mu);
  const double lambda = sum / static_cast<double>(sample.size());
  if (!(lambda > 0.0)) throw Error(ErrorKind::Degenerate, "zero Laplace scale: sample is constant");
  return {mu, lambda};
}

NormalParams fit_normal(std::span<const double> sample) {
  require_fit_size(sample);
  const double m2 = central_moment(sample, 2);
  if (!(m2 > 0.0)) throw Error(ErrorKind::Degenerate, "zero variance: sample is constant");
  return {mean(sample), std::sqrt(m2)};
}

double laplace_pdf(double x, const LaplaceParams& p) {
  validate(p);
  return std::exp(-std::abs(x - p.mu) / p.lambda) / (2.0 * p.lambda);
}

double laplace_cdf(double x, const LaplaceParams& p) {
  validate(p);
  const double z = (x - p.mu) / p.lambda;
  if (z < 0.0) return 0.5 * std::exp(z);
  return 1.0 - 0.5 * std::exp(-z);
}

double laplace_quantile(double q, const LaplaceParams& p) {
  validate(p);
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorKind::Domain, "quantile level must be in (0, 1), got " + std::to_string(q));
  }
  const double d = q - 0.5;
  if (d == 0.0) return p.mu;
  // log1p keeps the tails exact: 1 - 2|d| == 2 min(q, 1 - q).
  const double tail = std::log1p(-2.0 * std::abs(d));
  return d > 0.0 ? p.mu - p.lambda * tail : p.mu + p.lambda * tail;
}

double normal_pdf(double x, const NormalParams& p) {
  validate(p);
  const double z = (x - p.mean) / p.sigma;
  return std::exp(-0.5 * z * z) / (p.sigma * std::sqrt(2.0 * std::numbers::pi));
}

double standard_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double standard_normal_sf(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

double normal_cdf(double x, const NormalParams& p) {
  validate(p);
  return standard_normal_cdf((x - p.mean) / p.sigma);
}

double normal_quantile(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorKind::Domain, "quantile level must be in (0, 1), got " + std::to_string(q));
  }
  const double d = q - 0.5;
  if (std::abs(d) <= 0.425) {
    const double r = 0.180625 - d * d;
    return d * horner(kCentralNum, r) / horner(kCentralDen, r);
  }
  double r = std::sqrt(-std::log(d < 0.0 ? q : 1.0 - q));
  double z;
  if (r <= 5.0) {
    r -= 1.6;
    z = horner(kNearNum, r) / horner(kNearDen, r);
  } else {
    r -= 5.0;
    z = horner(kTailNum, r) / horner(kTailDen, r);
  }
  return d < 0.0 ? -z : z;
}

std::vector<double> sample_laplace(std::size_t n, const LaplaceParams& p, RngSeed seed) {
  Rng rng(seed);
  return sample_laplace(n, p, rng);
}

std::vector<double> sample_normal(std::size_t n, const NormalParams& p, RngSeed seed) {
  Rng rng(seed);
  return sample_normal(n, p, rng);
}

}  // namespace lapnorm
