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

#include "lapnorm/commands.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "lapnorm/report.hpp"

namespace lapnorm::cli {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error(ErrorKind::Io, "write failed for '" + path.string() + "'");
}

std::string shortest(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

int report_error(const Error& e, std::ostream& err) {
  err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
  return exit_code_for(e.kind());
}

int usage_error(const std::string& msg, std::ostream& err) {
  err << "usage error: " << msg << '\n';
  return kExitUsage;
}

// Runs `body`, translating library errors to exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    body();
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Degenerate:
    case ErrorKind::Domain:
      return kExitComputation;
    case ErrorKind::Io:
    case ErrorKind::Format:
    case ErrorKind::Row:
    case ErrorKind::EmptyInput:
    case ErrorKind::InsufficientData:
    case ErrorKind::DivisionDomain:
      return kExitData;
  }
  return kExitData;
}

LoadedReturns load_returns(const std::filesystem::path& path, PriceField field, bool returns_only) {
  const auto text = read_file(path);
  LoadedReturns loaded;
  loaded.symbol = path.stem().string();
  if (returns_only) {
    loaded.values = parse_returns_text(text);
    return loaded;
  }
  auto parsed = parse_ohlcv_csv(text, loaded.symbol);
  loaded.values = simple_returns(parsed.series, field).raw();
  loaded.warnings = std::move(parsed.warnings);
  return loaded;
}

std::string render_analysis(const AnalyzeOptions& options) {
  std::vector<std::future<AnalysisReport>> jobs;
  jobs.reserve(options.inputs.size());
  for (const auto& path : options.inputs) {
    jobs.push_back(std::async(std::launch::async, [&options, path] {
      auto loaded = load_returns(path, options.field, options.returns_only);
      return analyze_returns(std::move(loaded.symbol), loaded.values, std::move(loaded.warnings));
    }));
  }
  std::vector<AnalysisReport> reports;
  for (auto& job : jobs) reports.push_back(job.get());

  if (options.format == ReportFormat::Markdown) return to_markdown(reports);
  const nlohmann::json j = reports.size() == 1 ? nlohmann::json(reports.front())
                                               : nlohmann::json(reports);
  return j.dump(2) + '\n';
}

int run_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
  if (options.inputs.empty()) return usage_error("analyze needs at least one --input", err);
  return guarded(err, [&] {
    const auto text = render_analysis(options);
    if (options.output) {
      write_file(*options.output, text);
    } else {
      out << text;
    }
  });
}

int run_sample(const SampleOptions& options, std::ostream& err) {
  if (options.n < 1) return usage_error("--n must be >= 1", err);
  std::vector<double> values;
  if (options.family == Family::Normal) {
    if (options.lambda) return usage_error("--lambda applies to the laplace family only", err);
    const NormalParams p{options.mu, options.sigma.value_or(1.0)};
    try {
      validate(p);
    } catch (const Error& e) {
      return usage_error(e.what(), err);
    }
    values = sample_normal(static_cast<std::size_t>(options.n), p, RngSeed{options.seed});
  } else {
    if (options.sigma) return usage_error("--sigma applies to the normal family only", err);
    const LaplaceParams p{options.mu, options.lambda.value_or(1.0)};
    try {
      validate(p);
    } catch (const Error& e) {
      return usage_error(e.what(), err);
    }
    values = sample_laplace(static_cast<std::size_t>(options.n), p, RngSeed{options.seed});
  }
  return guarded(err, [&] {
    std::string text;
    text.reserve(values.size() * 24);
    for (double v : values) {
      text += shortest(v);
      text += '\n';
    }
    write_file(options.output, text);
  });
}

int run_ecdf(const EcdfOptions& options, std::ostream& err) {
  return guarded(err, [&] {
    const auto loaded = load_returns(options.input, options.field, options.returns_only);
    const auto text = options.format == PlotFormat::Csv
                          ? ecdf_csv(loaded.values)
                          : ecdf_svg(loaded.values, loaded.symbol + ": ECDF vs fitted CDFs");
    write_file(options.output, text);
  });
}

int run_hist(const HistOptions& options, std::ostream& err) {
  if (options.bins < 1) return usage_error("--bins must be >= 1", err);
  return guarded(err, [&] {
    const auto loaded = load_returns(options.input, options.field, options.returns_only);
    const auto h = histogram(loaded.values, static_cast<std::size_t>(options.bins));
    if (options.format == HistFormat::Csv) {
      write_file(options.output, histogram_csv(h));
    } else {
      write_file(options.output, nlohmann::json(h).dump(2) + '\n');
    }
  });
}

}  // namespace lapnorm::cli
