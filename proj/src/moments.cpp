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

#include "lapnorm/moments.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lapnorm/error.hpp"

namespace lapnorm {
namespace {

void require_size(std::span<const double> sample, std::size_t min, const char* what) {
  if (sample.size() < min) {
    throw Error(ErrorKind::InsufficientData, std::string(what) + " needs at least " +
                                                 std::to_string(min) + " values, got " +
                                                 std::to_string(sample.size()));
  }
}

struct Centered {
  double mean, m2, m3, m4;
};

Centered centered_moments(std::span<const double> sample) {
  const double mu = mean(sample);
  double s2 = 0.0, s3 = 0.0, s4 = 0.0;
  for (double x : sample) {
    const double d = x - mu;
    const double d2 = d * d;
    s2 += d2;
    s3 += d2 * d;
    s4 += d2 * d2;
  }
  const auto n = static_cast<double>(sample.size());
  return {mu, s2 / n, s3 / n, s4 / n};
}

void require_spread(double m2) {
  if (!(m2 > 0.0)) throw Error(ErrorKind::Degenerate, "sample has zero variance");
}

}  // namespace

double mean(std::span<const double> sample) {
  require_size(sample, 1, "mean");
  return std::accumulate(sample.begin(), sample.end(), 0.0) /
         static_cast<double>(sample.size());
}

double central_moment(std::span<const double> sample, int k) {
  require_size(sample, 1, "central moment");
  if (k < 1 || k > 8) {
    throw Error(ErrorKind::Domain, "moment order must be in [1, 8], got " + std::to_string(k));
  }
  const double mu = mean(sample);
  double sum = 0.0;
  for (double x : sample) sum += std::pow(x - mu, k);
  return sum / static_cast<double>(sample.size());
}

double skewness(std::span<const double> sample) {
  require_size(sample, 3, "skewness");
  const auto c = centered_moments(sample);
  require_spread(c.m2);
  return c.m3 / std::pow(c.m2, 1.5);
}

double excess_kurtosis(std::span<const double> sample) {
  require_size(sample, 4, "kurtosis");
  const auto c = centered_moments(sample);
  require_spread(c.m2);
  return c.m4 / (c.m2 * c.m2) - 3.0;
}

MomentsReport describe(std::span<const double> sample) {
  require_size(sample, 4, "moment summary");
  const auto c = centered_moments(sample);
  require_spread(c.m2);
  return {sample.size(), c.mean, c.m2, c.m3, c.m4, c.m3 / std::pow(c.m2, 1.5),
          c.m4 / (c.m2 * c.m2) - 3.0};
}

}  // namespace lapnorm
