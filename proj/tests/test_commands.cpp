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

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "lapnorm/commands.hpp"
#include "lapnorm/report.hpp"

using namespace lapnorm;
using lapnorm::testing::price_csv_from_returns;
using lapnorm::testing::read_text;
using lapnorm::testing::TempDir;

namespace {

// Runs the real executable; returns its exit status.
int run_cli(const std::string& args) {
  const std::string cmd = std::string(LAPNORM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string q(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<double> column(const std::string& csv, std::size_t col) {
  std::vector<double> out;
  const auto lines = lines_of(csv);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::stringstream in(lines[i]);
    std::string cell;
    for (std::size_t c = 0; c <= col; ++c) std::getline(in, cell, ',');
    out.push_back(std::stod(cell));
  }
  return out;
}

}  // namespace

TEST_CASE("sample writes a deterministic file") {
  TempDir dir;
  const auto a = dir.path() / "a.txt";
  const auto b = dir.path() / "b.txt";
  CHECK(run_cli("sample --dist normal --mu 0 --sigma 1 --n 5000 --seed 42 --output " + q(a)) == 0);
  CHECK(run_cli("sample --dist normal --mu 0 --sigma 1 --n 5000 --seed 42 --output " + q(b)) == 0);
  const auto text = read_text(a);
  CHECK(lines_of(text).size() == 5000);
  CHECK(text == read_text(b));
  // Same stream as the library sampler, written losslessly.
  CHECK(parse_returns_text(text) == sample_normal(5000, {0.0, 1.0}, RngSeed{42}));

  CHECK(run_cli("sample --dist laplace --mu 0 --lambda 1 --n 1 --seed 7 --output " + q(a)) == 0);
  CHECK(run_cli("sample --dist laplace --mu 0 --lambda 1 --n 1 --seed 7 --output " + q(b)) == 0);
  CHECK(lines_of(read_text(a)).size() == 1);
  CHECK(read_text(a) == read_text(b));
}

TEST_CASE("sample usage errors") {
  TempDir dir;
  const auto out = q(dir.path() / "x.txt");
  CHECK(run_cli("sample --dist normal --n 0 --seed 1 --output " + out) == 1);
  CHECK(run_cli("sample --dist normal --sigma -1 --n 5 --seed 1 --output " + out) == 1);
  CHECK(run_cli("sample --dist laplace --lambda 0 --n 5 --seed 1 --output " + out) == 1);
  CHECK(run_cli("sample --dist normal --lambda 2 --n 5 --seed 1 --output " + out) == 1);
  CHECK(run_cli("sample --dist cauchy --n 5 --seed 1 --output " + out) == 1);
  CHECK(run_cli("sample --dist normal --n 5 --output " + out) == 1);
  CHECK(run_cli("frobnicate") == 1);
  CHECK(run_cli("") == 1);
}

TEST_CASE("analyze exit codes") {
  TempDir dir;
  const auto one_row = dir.write("one.csv", std::string(kOhlcvHeader) + "\n2012-01-03,1,1,1,1,1,5\n");
  CHECK(run_cli("analyze --input " + q(one_row)) == 2);
  const auto bad = dir.write("bad.csv", "Date,Close\n2012-01-03,1\n");
  CHECK(run_cli("analyze --input " + q(bad)) == 2);
  CHECK(run_cli("analyze --input " + q(dir.path() / "missing.csv")) == 2);
  const auto flat = dir.write("flat.csv", price_csv_from_returns(std::vector<double>(30, 0.0)));
  CHECK(run_cli("analyze --input " + q(flat)) == 3);
  const auto ok = dir.write("ok.csv", price_csv_from_returns(
                                          sample_laplace(50, {0.0, 0.01}, RngSeed{1})));
  CHECK(run_cli("analyze --input " + q(ok)) == 0);
  CHECK(run_cli("analyze --input " + q(ok) + " --format xml") == 1);
  CHECK(run_cli("analyze --input " + q(ok) + " --price-column open") == 1);
  CHECK(run_cli("analyze") == 1);
}

TEST_CASE("analyze on synthetic Laplace prices") {
  TempDir dir;
  const auto returns = sample_laplace(1879, {0.0004, 0.007}, RngSeed{2012});
  const auto path = dir.write("SYN.csv", price_csv_from_returns(returns));
  REQUIRE(lines_of(read_text(path)).size() == 1881);  // header + 1880 rows

  cli::AnalyzeOptions opt;
  opt.inputs = {path};
  const auto j = nlohmann::json::parse(cli::render_analysis(opt));
  CHECK(j["symbol"] == "SYN");
  CHECK(j["n"] == 1879);
  CHECK(j["shapiro_p"].get<double>() < 1e-10);
  CHECK(j["better_fit"] == "laplace");
  CHECK(j["laplace_fit"]["lambda"].get<double>() == doctest::Approx(0.007).epsilon(0.05));

  // The CLI writes the same bytes.
  const auto out = dir.path() / "report.json";
  CHECK(run_cli("analyze --input " + q(path) + " --output " + q(out)) == 0);
  CHECK(read_text(out) == cli::render_analysis(opt));
}

TEST_CASE("analyze is reproducible byte for byte") {
  TempDir dir;
  const auto path = dir.write("R.csv", price_csv_from_returns(
                                           sample_normal(800, {0.0, 0.01}, RngSeed{3})));
  cli::AnalyzeOptions opt;
  opt.inputs = {path};
  for (auto fmt : {cli::ReportFormat::Json, cli::ReportFormat::Markdown}) {
    opt.format = fmt;
    const auto first = cli::render_analysis(opt);
    for (int i = 0; i < 5; ++i) CHECK(cli::render_analysis(opt) == first);
  }
}

TEST_CASE("analyze returns-only closes the sampling loop") {
  TempDir dir;
  const auto file = dir.path() / "std_normal.txt";
  REQUIRE(run_cli("sample --dist normal --n 5000 --seed 42 --output " + q(file)) == 0);
  cli::AnalyzeOptions opt;
  opt.inputs = {file};
  opt.returns_only = true;
  const auto j = nlohmann::json::parse(cli::render_analysis(opt));
  CHECK(j["n"] == 5000);
  CHECK(std::abs(j["skew"].get<double>()) < 0.1);
  CHECK(j["shapiro_w"].get<double>() > 0.999);
  CHECK(j["warnings"].empty());
  CHECK(run_cli("analyze --returns-only --input " + q(file) + " --format markdown") == 0);
}

TEST_CASE("analyze several inputs") {
  TempDir dir;
  cli::AnalyzeOptions opt;
  opt.inputs = {dir.write("A.csv", price_csv_from_returns(sample_laplace(300, {0.0, 0.01}, RngSeed{1}))),
                dir.write("B.csv", price_csv_from_returns(sample_normal(300, {0.0, 0.01}, RngSeed{2}))),
                dir.write("C.csv", price_csv_from_returns(sample_laplace(300, {0.0, 0.02}, RngSeed{3})))};
  const auto j = nlohmann::json::parse(cli::render_analysis(opt));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0]["symbol"] == "A");
  CHECK(j[1]["symbol"] == "B");
  CHECK(j[2]["symbol"] == "C");

  opt.format = cli::ReportFormat::Markdown;
  const auto md = lines_of(cli::render_analysis(opt));
  REQUIRE(md.size() >= 5);
  CHECK(md[2].find("| A ") == 0);
  CHECK(md[4].find("| C ") == 0);
}

TEST_CASE("analyze surfaces skipped rows as warnings") {
  TempDir dir;
  auto csv = price_csv_from_returns(sample_normal(20, {0.0, 0.01}, RngSeed{9}));
  csv += "2099-01-01,null,null,null,null,null,null\n";
  cli::AnalyzeOptions opt;
  opt.inputs = {dir.write("W.csv", csv)};
  const auto j = nlohmann::json::parse(cli::render_analysis(opt));
  REQUIRE(j["warnings"].size() == 1);
  CHECK(j["n"] == 20);
}

TEST_CASE("ecdf command") {
  TempDir dir;
  const auto returns = sample_laplace(400, {0.0, 0.01}, RngSeed{5});
  const auto input = dir.write("E.csv", price_csv_from_returns(returns));
  const auto csv = dir.path() / "e.csv";
  const auto svg = dir.path() / "e.svg";
  CHECK(run_cli("ecdf --input " + q(input) + " --format csv --output " + q(csv)) == 0);
  CHECK(run_cli("ecdf --input " + q(input) + " --format svg --output " + q(svg)) == 0);
  CHECK(run_cli("ecdf --input " + q(input) + " --format png --output " + q(svg)) == 1);

  const auto text = read_text(csv);
  CHECK(lines_of(text).size() == returns.size() + 1);
  const auto f = column(text, 1);
  for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] >= f[i - 1]);
  CHECK(f.back() == 1.0);
  CHECK(read_text(svg).find("<svg") == 0);
}

TEST_CASE("ecdf CSV tracks the Laplace curve on Laplace data") {
  TempDir dir;
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto input = dir.write("L.txt", [&] {
      std::string s;
      for (double r : sample_laplace(1879, {0.0, 0.01}, RngSeed{seed})) s += std::to_string(r) + "\n";
      return s;
    }());
    cli::EcdfOptions opt;
    opt.input = input;
    opt.returns_only = true;
    opt.output = dir.path() / "out.csv";
    std::ostringstream err;
    REQUIRE(cli::run_ecdf(opt, err) == 0);
    const auto text = read_text(opt.output);
    const auto f = column(text, 1), fn = column(text, 2), fl = column(text, 3);
    double dn = 0.0, dl = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      dn = std::max(dn, std::abs(f[i] - fn[i]));
      dl = std::max(dl, std::abs(f[i] - fl[i]));
    }
    if (dl < dn) ++wins;
  }
  CHECK(wins >= 95);
}

TEST_CASE("hist command") {
  TempDir dir;
  const auto returns = sample_laplace(777, {0.0, 0.01}, RngSeed{8});
  const auto input = dir.write("H.csv", price_csv_from_returns(returns));
  const auto out = dir.path() / "h.json";
  CHECK(run_cli("hist --input " + q(input) + " --bins 0 --output " + q(out)) == 1);
  CHECK(run_cli("hist --input " + q(input) + " --bins 40 --output " + q(out)) == 0);
  const auto j = nlohmann::json::parse(read_text(out));
  REQUIRE(j["counts"].size() == 40);
  REQUIRE(j["bin_edges"].size() == 41);
  std::size_t total = 0;
  for (const auto& c : j["counts"]) total += c.get<std::size_t>();
  CHECK(total == returns.size());

  CHECK(run_cli("hist --input " + q(input) + " --output " + q(out)) == 0);
  CHECK(nlohmann::json::parse(read_text(out))["counts"].size() == kDefaultBins);

  const auto csv_out = dir.path() / "h.csv";
  CHECK(run_cli("hist --input " + q(input) + " --format csv --bins 5 --output " + q(csv_out)) == 0);
  CHECK(lines_of(read_text(csv_out)).size() == 6);

  std::string constant_text;
  for (int i = 0; i < 50; ++i) constant_text += "0.01\n";
  const auto constant = dir.write("c.txt", constant_text);
  CHECK(run_cli("hist --returns-only --input " + q(constant) + " --bins 1 --output " + q(out)) == 0);
  const auto c = nlohmann::json::parse(read_text(out));
  REQUIRE(c["counts"].size() == 1);
  CHECK(c["counts"][0] == 50);
}
