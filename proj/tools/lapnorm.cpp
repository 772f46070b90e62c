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

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "lapnorm/commands.hpp"

namespace cli = lapnorm::cli;

int main(int argc, char** argv) {
  CLI::App app{"Normality tests and Normal/Laplace fits for daily returns"};
  app.require_subcommand(1);

  const std::map<std::string, lapnorm::PriceField> price_fields{
      {"adj_close", lapnorm::PriceField::AdjClose}, {"close", lapnorm::PriceField::Close}};

  cli::AnalyzeOptions analyze;
  std::vector<std::string> analyze_inputs;
  std::string analyze_output;
  auto* cmd_analyze = app.add_subcommand("analyze", "Moments, Shapiro-Wilk and fit comparison");
  cmd_analyze->add_option("--input", analyze_inputs, "OHLCV CSV (repeatable)")->required();
  cmd_analyze->add_option("--price-column", analyze.field, "Price field for returns")
      ->transform(CLI::CheckedTransformer(price_fields, CLI::ignore_case));
  cmd_analyze->add_flag("--returns-only", analyze.returns_only,
                        "Input holds one return per line, no header");
  cmd_analyze->add_option("--format", analyze.format, "json or markdown")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, cli::ReportFormat>{{"json", cli::ReportFormat::Json},
                                                   {"markdown", cli::ReportFormat::Markdown}},
          CLI::ignore_case));
  cmd_analyze->add_option("--output", analyze_output, "Write the report here instead of stdout");

  cli::SampleOptions sample;
  std::string family = "normal";
  double sigma = 1.0;
  double lambda = 1.0;
  std::string sample_output;
  auto* cmd_sample = app.add_subcommand("sample", "Draw a seeded Normal or Laplace sample");
  cmd_sample->add_option("--dist", family, "normal or laplace")
      ->required()
      ->check(CLI::IsMember({"normal", "laplace"}));
  cmd_sample->add_option("--n", sample.n, "Sample size")->required();
  cmd_sample->add_option("--seed", sample.seed, "64-bit seed")->required();
  cmd_sample->add_option("--mu", sample.mu, "Location (mean or centre)");
  auto* sigma_opt = cmd_sample->add_option("--sigma", sigma, "Normal standard deviation");
  auto* lambda_opt = cmd_sample->add_option("--lambda", lambda, "Laplace scale");
  cmd_sample->add_option("--output", sample_output, "One value per line")->required();

  cli::EcdfOptions ecdf;
  std::string ecdf_input, ecdf_output;
  auto* cmd_ecdf = app.add_subcommand("ecdf", "ECDF against fitted Normal and Laplace CDFs");
  cmd_ecdf->add_option("--input", ecdf_input)->required();
  cmd_ecdf->add_option("--price-column", ecdf.field)
      ->transform(CLI::CheckedTransformer(price_fields, CLI::ignore_case));
  cmd_ecdf->add_flag("--returns-only", ecdf.returns_only);
  cmd_ecdf->add_option("--format", ecdf.format, "csv or svg")
      ->required()
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, cli::PlotFormat>{{"csv", cli::PlotFormat::Csv},
                                                 {"svg", cli::PlotFormat::Svg}},
          CLI::ignore_case));
  cmd_ecdf->add_option("--output", ecdf_output)->required();

  cli::HistOptions hist;
  std::string hist_input, hist_output;
  auto* cmd_hist = app.add_subcommand("hist", "Equal-width histogram of returns");
  cmd_hist->add_option("--input", hist_input)->required();
  cmd_hist->add_option("--price-column", hist.field)
      ->transform(CLI::CheckedTransformer(price_fields, CLI::ignore_case));
  cmd_hist->add_flag("--returns-only", hist.returns_only);
  cmd_hist->add_option("--bins", hist.bins, "Number of bins (default 100)");
  cmd_hist->add_option("--format", hist.format, "json or csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, cli::HistFormat>{{"json", cli::HistFormat::Json},
                                                 {"csv", cli::HistFormat::Csv}},
          CLI::ignore_case));
  cmd_hist->add_option("--output", hist_output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  if (cmd_analyze->parsed()) {
    analyze.inputs.assign(analyze_inputs.begin(), analyze_inputs.end());
    if (!analyze_output.empty()) analyze.output = analyze_output;
    return cli::run_analyze(analyze, std::cout, std::cerr);
  }
  if (cmd_sample->parsed()) {
    sample.family = family == "laplace" ? lapnorm::Family::Laplace : lapnorm::Family::Normal;
    if (sigma_opt->count() > 0) sample.sigma = sigma;
    if (lambda_opt->count() > 0) sample.lambda = lambda;
    sample.output = sample_output;
    return cli::run_sample(sample, std::cerr);
  }
  if (cmd_ecdf->parsed()) {
    ecdf.input = ecdf_input;
    ecdf.output = ecdf_output;
    return cli::run_ecdf(ecdf, std::cerr);
  }
  hist.input = hist_input;
  hist.output = hist_output;
  return cli::run_hist(hist, std::cerr);
}
