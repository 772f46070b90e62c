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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lapnorm/distfit.hpp"
#include "lapnorm/error.hpp"
#include "lapnorm/market_data.hpp"

// Command implementations behind the `lapnorm` executable. Each run_* returns
// the process exit code and writes diagnostics to `err`.
namespace lapnorm::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitComputation = 3,
};

int exit_code_for(ErrorKind kind) noexcept;

struct LoadedReturns {
  std::string symbol;
  std::vector<double> values;
  std::vector<std::string> warnings;
};

/// Reads an OHLCV CSV (or a one-return-per-line file) and produces returns.
/// The symbol is the file stem.
LoadedReturns load_returns(const std::filesystem::path& path, PriceField field, bool returns_only);

enum class ReportFormat { Json, Markdown };

struct AnalyzeOptions {
  std::vector<std::filesystem::path> inputs;
  PriceField field = PriceField::AdjClose;
  bool returns_only = false;
  ReportFormat format = ReportFormat::Json;
  std::optional<std::filesystem::path> output;  // stdout when empty
};

/// Rendered report text. Multiple inputs are analysed concurrently; JSON is
/// an object for one input and an array (input order) for several.
std::string render_analysis(const AnalyzeOptions& options);
int run_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);

struct SampleOptions {
  Family family = Family::Normal;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  double mu = 0.0;
  std::optional<double> sigma;
  std::optional<double> lambda;
  std::filesystem::path output;
};

int run_sample(const SampleOptions& options, std::ostream& err);

enum class PlotFormat { Csv, Svg };

struct EcdfOptions {
  std::filesystem::path input;
  PriceField field = PriceField::AdjClose;
  bool returns_only = false;
  PlotFormat format = PlotFormat::Csv;
  std::filesystem::path output;
};

int run_ecdf(const EcdfOptions& options, std::ostream& err);

enum class HistFormat { Json, Csv };

struct HistOptions {
  std::filesystem::path input;
  PriceField field = PriceField::AdjClose;
  bool returns_only = false;
  std::int64_t bins = 100;
  HistFormat format = HistFormat::Json;
  std::filesystem::path output;
};

int run_hist(const HistOptions& options, std::ostream& err);

}  // namespace lapnorm::cli
