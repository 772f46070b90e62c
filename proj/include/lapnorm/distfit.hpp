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

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <variant>
#include <vector>

namespace lapnorm {

/// Laplace (double exponential) parameters: centre `mu`, scale `lambda` > 0.
struct LaplaceParams {
  double mu = 0.0;
  double lambda = 1.0;

  friend bool operator==(const LaplaceParams&, const LaplaceParams&) = default;
};

struct NormalParams {
  double mean = 0.0;
  double sigma = 1.0;

  friend bool operator==(const NormalParams&, const NormalParams&) = default;
};

enum class Family { Normal, Laplace };

const char* to_string(Family family) noexcept;

using DistParams = std::variant<NormalParams, LaplaceParams>;

[[nodiscard]] Family family_of(const DistParams& params) noexcept;

/// Throws Error(Domain) unless the location is finite and the scale finite and > 0.
void validate(const LaplaceParams& p);
void validate(const NormalParams& p);

struct RngSeed {
  std::uint64_t value = 0;
};

/// Seeded uniform source on the open interval (0, 1).
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the standard.
/// The top 53 bits of each draw are mapped to (k + 0.5) / 2^53, so 0 and 1 are
/// never produced and the stream is identical on every conforming platform.
class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(seed.value) {}

  double uniform() {
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    return (static_cast<double>(engine_() >> 11) + 0.5) * kScale;
  }

 private:
  std::mt19937_64 engine_;
};

template <class G>
concept UniformSource = requires(G& g) {
  { g.uniform() } -> std::convertible_to<double>;
};

// Order statistics and fits.

/// Middle order statistic (mean of the two middle ones for even n).
double median(std::span<const double> sample);

/// mu = median, lambda = mean absolute deviation about the median.
LaplaceParams fit_laplace(std::span<const double> sample);

/// Maximum likelihood: sample mean and population standard deviation.
NormalParams fit_normal(std::span<const double> sample);

// Densities, distribution functions and quantiles.

double laplace_pdf(double x, const LaplaceParams& p);
double laplace_cdf(double x, const LaplaceParams& p);
double laplace_quantile(double q, const LaplaceParams& p);

double normal_pdf(double x, const NormalParams& p);
double normal_cdf(double x, const NormalParams& p);

/// Standard normal CDF, via erfc so the lower tail keeps full relative precision.
double standard_normal_cdf(double z);

/// Upper tail 1 - Phi(z) without cancellation.
double standard_normal_sf(double z);

/// Standard normal inverse CDF (Wichura AS 241). Throws Error(Domain) outside (0, 1).
double normal_quantile(double q);

// Sampling. Both samplers are inverse-transform, one uniform per variate.

template <UniformSource G>
std::vector<double> sample_laplace(std::size_t n, const LaplaceParams& p, G& source) {
  validate(p);
  std::vector<double> out(n);
  for (auto& x : out) x = laplace_quantile(source.uniform(), p);
  return out;
}

template <UniformSource G>
std::vector<double> sample_normal(std::size_t n, const NormalParams& p, G& source) {
  validate(p);
  std::vector<double> out(n);
  for (auto& x : out) x = p.mean + p.sigma * normal_quantile(source.uniform());
  return out;
}

std::vector<double> sample_laplace(std::size_t n, const LaplaceParams& p, RngSeed seed);
std::vector<double> sample_normal(std::size_t n, const NormalParams& p, RngSeed seed);

}  // namespace lapnorm
