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

#include "lapnorm/gof.hpp"

#include <cmath>
#include <numbers>

#include "lapnorm/error.hpp"

namespace lapnorm {

void detail::require_nonempty(std::span<const double> sample) {
  if (sample.empty()) throw Error(ErrorKind::InsufficientData, "empty sample");
}

double EcdfCurve::operator()(double x) const {
  if (sorted_x.empty()) return 0.0;
  const auto it = std::upper_bound(sorted_x.begin(), sorted_x.end(), x);
  return static_cast<double>(it - sorted_x.begin()) / static_cast<double>(sorted_x.size());
}

EcdfCurve ecdf(std::span<const double> sample) {
  detail::require_nonempty(sample);
  EcdfCurve curve;
  curve.sorted_x.assign(sample.begin(), sample.end());
  std::sort(curve.sorted_x.begin(), curve.sorted_x.end());
  const auto n = static_cast<double>(sample.size());
  curve.steps.resize(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    curve.steps[i] = static_cast<double>(i + 1) / n;
  }
  return curve;
}

double ks_statistic(std::span<const double> sample, const DistParams& params) {
  return std::visit(
      [&](const auto& p) {
        validate(p);
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, NormalParams>) {
          return ks_statistic(sample, [&p](double x) { return normal_cdf(x, p); });
        } else {
          return ks_statistic(sample, [&p](double x) { return laplace_cdf(x, p); });
        }
      },
      params);
}

double log_likelihood(std::span<const double> sample, const DistParams& params) {
  detail::require_nonempty(sample);
  const auto n = static_cast<double>(sample.size());
  return std::visit(
      [&](const auto& p) {
        validate(p);
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, NormalParams>) {
          double ss = 0.0;
          for (double x : sample) {
            const double z = (x - p.mean) / p.sigma;
            ss += z * z;
          }
          return -n * (std::log(p.sigma) + 0.5 * std::log(2.0 * std::numbers::pi)) - 0.5 * ss;
        } else {
          double sad = 0.0;
          for (double x : sample) sad += std::abs(x - p.mu);
          return -n * std::log(2.0 * p.lambda) - sad / p.lambda;
        }
      },
      params);
}

namespace {

FitRecord score(std::span<const double> sample, const DistParams& params) {
  FitRecord r;
  r.family = family_of(params);
  r.params = params;
  r.ks_distance = ks_statistic(sample, params);
  r.log_likelihood = log_likelihood(sample, params);
  r.aic = 2.0 * kParamsPerFamily - 2.0 * r.log_likelihood;
  return r;
}

}  // namespace

GofReport compare_fits(std::span<const double> sample) {
  if (sample.size() < 4) {
    throw Error(ErrorKind::InsufficientData,
                "fit comparison needs at least 4 values, got " + std::to_string(sample.size()));
  }
  GofReport report;
  report.normal = score(sample, fit_normal(sample));
  report.laplace = score(sample, fit_laplace(sample));

  const bool laplace_wins =
      report.laplace.aic < report.normal.aic ||
      (report.laplace.aic == report.normal.aic &&
       report.laplace.ks_distance < report.normal.ks_distance);
  report.better_fit = laplace_wins ? Family::Laplace : Family::Normal;
  return report;
}

}  // namespace lapnorm
