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
#include <numeric>
#include <regex>
#include <sstream>
#include <vector>

#include "lapnorm/error.hpp"
#include "lapnorm/report.hpp"

using namespace lapnorm;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::string strip(const std::string& s) {
  const auto a = s.find_first_not_of(' ');
  const auto b = s.find_last_not_of(' ');
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace

TEST_CASE("analysis report fields") {
  const auto x = sample_laplace(1879, {0.0005, 0.008}, RngSeed{1});
  const auto r = analyze_returns("SYN", x, {"note"});
  CHECK(r.symbol == "SYN");
  CHECK(r.n == 1879);
  CHECK(r.shapiro_p < 1e-10);
  CHECK(r.better_fit == Family::Laplace);
  CHECK(r.excess_kurtosis > 2.0);
  CHECK(r.aic_normal == doctest::Approx(4.0 - 2.0 * r.log_lik_normal));
  CHECK(r.aic_laplace == doctest::Approx(4.0 - 2.0 * r.log_lik_laplace));
  CHECK(r.warnings == std::vector<std::string>{"note"});
  for (double v : {r.skew, r.excess_kurtosis, r.shapiro_w, r.shapiro_p, r.ks_normal, r.ks_laplace,
                   r.log_lik_normal, r.log_lik_laplace, r.aic_normal, r.aic_laplace}) {
    CHECK(std::isfinite(v));
  }

  const auto big = analyze_returns("BIG", sample_normal(5001, {0.0, 1.0}, RngSeed{2}));
  REQUIRE(big.warnings.size() == 1);
  CHECK(big.warnings[0].find("5000") != std::string::npos);
}

TEST_CASE("JSON round-trips exactly") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = analyze_returns("S" + std::to_string(seed),
                                   sample_normal(200 + seed, {0.001, 0.01}, RngSeed{seed}),
                                   {"w1", "w2"});
    const nlohmann::json j = r;
    const auto back = nlohmann::json::parse(j.dump()).get<AnalysisReport>();
    CHECK(back == r);
  }
}

TEST_CASE("JSON uses the documented key names") {
  const nlohmann::json j = analyze_returns("K", sample_laplace(100, {0.0, 1.0}, RngSeed{4}));
  for (const char* key :
       {"symbol", "n", "skew", "excess_kurtosis", "shapiro_w", "shapiro_p", "normal_fit",
        "laplace_fit", "ks_normal", "ks_laplace", "log_lik_normal", "log_lik_laplace",
        "aic_normal", "aic_laplace", "better_fit", "warnings"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["normal_fit"].contains("mean"));
  CHECK(j["normal_fit"].contains("sigma"));
  CHECK(j["laplace_fit"].contains("mu"));
  CHECK(j["laplace_fit"].contains("lambda"));
  CHECK(j["better_fit"] == "laplace");
}

TEST_CASE("Markdown cells equal the JSON values at six significant digits") {
  std::vector<AnalysisReport> reports{
      analyze_returns("A", sample_laplace(600, {0.0, 0.01}, RngSeed{1})),
      analyze_returns("B", sample_normal(700, {0.0, 0.01}, RngSeed{2}))};
  const auto md = to_markdown(reports);
  const auto lines = split(md, '\n');
  REQUIRE(lines.size() >= 4);
  CHECK(lines[0].find("| Sample") == 0);
  // Aligned: every table line has the same width.
  for (std::size_t i = 1; i < 4; ++i) CHECK(lines[i].size() == lines[0].size());

  for (std::size_t r = 0; r < reports.size(); ++r) {
    auto cells = split(lines[2 + r], '|');
    cells.erase(cells.begin());
    for (auto& c : cells) c = strip(c);
    const nlohmann::json j = nlohmann::json::parse(nlohmann::json(reports[r]).dump());
    const std::vector<double> values{
        j["skew"],           j["excess_kurtosis"], j["shapiro_w"],       j["shapiro_p"],
        j["normal_fit"]["mean"], j["normal_fit"]["sigma"], j["laplace_fit"]["mu"],
        j["laplace_fit"]["lambda"], j["ks_normal"], j["ks_laplace"], j["log_lik_normal"],
        j["log_lik_laplace"], j["aic_normal"], j["aic_laplace"]};
    CHECK(cells[0] == reports[r].symbol);
    CHECK(cells[1] == std::to_string(reports[r].n));
    for (std::size_t k = 0; k < values.size(); ++k) CHECK(cells[2 + k] == format_sig6(values[k]));
    CHECK(cells[16] == j["better_fit"].get<std::string>());
  }
}

TEST_CASE("histogram partitions the sample and integrates to one") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto x = sample_laplace(1000 + seed, {0.0, 0.01}, RngSeed{seed});
    for (std::size_t bins : {1u, 7u, 100u}) {
      const auto h = histogram(x, bins);
      REQUIRE(h.counts.size() == bins);
      REQUIRE(h.bin_edges.size() == bins + 1);
      CHECK(std::accumulate(h.counts.begin(), h.counts.end(), std::size_t{0}) == x.size());
      double mass = 0.0;
      for (std::size_t i = 0; i < bins; ++i) {
        CHECK(h.bin_edges[i + 1] > h.bin_edges[i]);
        mass += h.densities[i] * (h.bin_edges[i + 1] - h.bin_edges[i]);
      }
      CHECK(std::abs(mass - 1.0) <= 1e-9);
      CHECK(h.bin_edges.front() == *std::min_element(x.begin(), x.end()));
      CHECK(h.bin_edges.back() == *std::max_element(x.begin(), x.end()));
    }
  }
}

TEST_CASE("constant sample gets one unit-width bin") {
  const std::vector<double> x(25, 0.01);
  for (std::size_t bins : {1u, 10u}) {
    const auto h = histogram(x, bins);
    REQUIRE(h.counts.size() == 1);
    CHECK(h.counts[0] == 25);
    CHECK(h.bin_edges[1] - h.bin_edges[0] == doctest::Approx(1.0));
    CHECK((h.bin_edges[0] + h.bin_edges[1]) / 2 == doctest::Approx(0.01));
    CHECK(h.densities[0] == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(histogram(x, 0), Error);
}

TEST_CASE("Laplace histogram peaks at the centre") {
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const LaplaceParams p{0.0, 1.0};
    const auto h = histogram(sample_laplace(20000, p, RngSeed{seed}), 50);
    const auto peak = std::max_element(h.counts.begin(), h.counts.end()) - h.counts.begin();
    const auto idx = static_cast<std::size_t>(peak);
    if (h.bin_edges[idx] <= p.mu && p.mu < h.bin_edges[idx + 1]) ++hits;
  }
  CHECK(hits >= 95);
}

TEST_CASE("ecdf CSV") {
  const auto x = sample_laplace(300, {0.0, 0.02}, RngSeed{6});
  const auto lines = split(ecdf_csv(x), '\n');
  REQUIRE(lines.size() == x.size() + 1);
  CHECK(lines[0] == "x,ecdf,normal_cdf,laplace_cdf");
  double prev_x = -INFINITY, prev_f = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i], ',');
    REQUIRE(cells.size() == 4);
    const double xi = std::stod(cells[0]);
    const double f = std::stod(cells[1]);
    CHECK(xi >= prev_x);
    CHECK(f >= prev_f);
    for (std::size_t c = 1; c < 4; ++c) {
      CHECK(std::stod(cells[c]) >= 0.0);
      CHECK(std::stod(cells[c]) <= 1.0);
    }
    prev_x = xi;
    prev_f = f;
  }
  CHECK(prev_f == 1.0);
}

TEST_CASE("ecdf SVG has three curves and a legend") {
  const auto svg = ecdf_svg(sample_normal(100, {0.0, 1.0}, RngSeed{1}), "T & <x>");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  const std::regex poly("<polyline");
  CHECK(std::distance(std::sregex_iterator(svg.begin(), svg.end(), poly), std::sregex_iterator()) == 3);
  CHECK(svg.find("Laplace fit") != std::string::npos);
  CHECK(svg.find("Normal fit") != std::string::npos);
  CHECK(svg.find("ECDF") != std::string::npos);
  CHECK(svg.find("T &amp; &lt;x&gt;") != std::string::npos);
}
