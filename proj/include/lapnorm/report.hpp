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
#include <string>
#include <vector>

#include <json.hpp>

#include "lapnorm/distfit.hpp"

namespace lapnorm {

/// One row of the normality table, extended with the goodness-of-fit scores.
struct AnalysisReport {
  std::string symbol;
  std::size_t n = 0;
  double skew = 0.0;
  double excess_kurtosis = 0.0;
  double shapiro_w = 0.0;
  double shapiro_p = 0.0;
  NormalParams normal_fit;
  LaplaceParams laplace_fit;
  double ks_normal = 0.0;
  double ks_laplace = 0.0;
  double log_lik_normal = 0.0;
  double log_lik_laplace = 0.0;
  double aic_normal = 0.0;
  double aic_laplace = 0.0;
  Family better_fit = Family::Normal;
  std::vector<std::string> warnings;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// moments -> Shapiro-Wilk -> fit comparison over a return sample.
AnalysisReport analyze_returns(std::string symbol, std::span<const double> returns,
                               std::vector<std::string> warnings = {});

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

/// `%.6g`, the precision used for every number in the Markdown table.
std::string format_sig6(double value);

/// Aligned GitHub-style table, one row per report.
std::string to_markdown(std::span<const AnalysisReport> reports);

struct HistogramData {
  std::vector<double> bin_edges;
  std::vector<std::size_t> counts;
  std::vector<double> densities;  // count / (n * width)

  friend bool operator==(const HistogramData&, const HistogramData&) = default;
};

inline constexpr std::size_t kDefaultBins = 100;

/// Equal-width bins over [min, max], the last bin closed on the right. A
/// constant sample gets a single bin of width 1 centred on the value.
HistogramData histogram(std::span<const double> sample, std::size_t bins = kDefaultBins);

void to_json(nlohmann::json& j, const HistogramData& h);
std::string histogram_csv(const HistogramData& h);

/// `x,ecdf,normal_cdf,laplace_cdf`, one row per sorted sample point.
std::string ecdf_csv(std::span<const double> sample);

/// Standalone SVG with the ECDF step curve and both fitted CDFs.
std::string ecdf_svg(std::span<const double> sample, const std::string& title);

}  // namespace lapnorm
