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

#include "lapnorm/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "lapnorm/error.hpp"
#include "lapnorm/gof.hpp"
#include "lapnorm/moments.hpp"
#include "lapnorm/normality.hpp"

namespace lapnorm {
namespace {

std::string shortest(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

Family parse_family(const std::string& s) {
  if (s == "normal") return Family::Normal;
  if (s == "laplace") return Family::Laplace;
  throw Error(ErrorKind::Format, "unknown distribution family '" + s + "'");
}

}  // namespace

AnalysisReport analyze_returns(std::string symbol, std::span<const double> returns,
                               std::vector<std::string> warnings) {
  const auto moments = describe(returns);
  const auto sw = shapiro_wilk(returns);
  const auto gof = compare_fits(returns);

  AnalysisReport r;
  r.symbol = std::move(symbol);
  r.n = returns.size();
  r.skew = moments.skew;
  r.excess_kurtosis = moments.excess_kurtosis;
  r.shapiro_w = sw.w;
  r.shapiro_p = sw.p_value;
  r.normal_fit = std::get<NormalParams>(gof.normal.params);
  r.laplace_fit = std::get<LaplaceParams>(gof.laplace.params);
  r.ks_normal = gof.normal.ks_distance;
  r.ks_laplace = gof.laplace.ks_distance;
  r.log_lik_normal = gof.normal.log_likelihood;
  r.log_lik_laplace = gof.laplace.log_likelihood;
  r.aic_normal = gof.normal.aic;
  r.aic_laplace = gof.laplace.aic;
  r.better_fit = gof.better_fit;
  r.warnings = std::move(warnings);
  if (sw.large_n_warning) {
    r.warnings.push_back("n = " + std::to_string(sw.n) +
                         " exceeds 5000; Shapiro-Wilk p-value is extrapolated");
  }
  return r;
}

void to_json(nlohmann::json& j, const AnalysisReport& r) {
  j = nlohmann::json{
      {"symbol", r.symbol},
      {"n", r.n},
      {"skew", r.skew},
      {"excess_kurtosis", r.excess_kurtosis},
      {"shapiro_w", r.shapiro_w},
      {"shapiro_p", r.shapiro_p},
      {"normal_fit", {{"mean", r.normal_fit.mean}, {"sigma", r.normal_fit.sigma}}},
      {"laplace_fit", {{"mu", r.laplace_fit.mu}, {"lambda", r.laplace_fit.lambda}}},
      {"ks_normal", r.ks_normal},
      {"ks_laplace", r.ks_laplace},
      {"log_lik_normal", r.log_lik_normal},
      {"log_lik_laplace", r.log_lik_laplace},
      {"aic_normal", r.aic_normal},
      {"aic_laplace", r.aic_laplace},
      {"better_fit", to_string(r.better_fit)},
      {"warnings", r.warnings},
  };
}

void from_json(const nlohmann::json& j, AnalysisReport& r) {
  j.at("symbol").get_to(r.symbol);
  j.at("n").get_to(r.n);
  j.at("skew").get_to(r.skew);
  j.at("excess_kurtosis").get_to(r.excess_kurtosis);
  j.at("shapiro_w").get_to(r.shapiro_w);
  j.at("shapiro_p").get_to(r.shapiro_p);
  j.at("normal_fit").at("mean").get_to(r.normal_fit.mean);
  j.at("normal_fit").at("sigma").get_to(r.normal_fit.sigma);
  j.at("laplace_fit").at("mu").get_to(r.laplace_fit.mu);
  j.at("laplace_fit").at("lambda").get_to(r.laplace_fit.lambda);
  j.at("ks_normal").get_to(r.ks_normal);
  j.at("ks_laplace").get_to(r.ks_laplace);
  j.at("log_lik_normal").get_to(r.log_lik_normal);
  j.at("log_lik_laplace").get_to(r.log_lik_laplace);
  j.at("aic_normal").get_to(r.aic_normal);
  j.at("aic_laplace").get_to(r.aic_laplace);
  r.better_fit = parse_family(j.at("better_fit").get<std::string>());
  j.at("warnings").get_to(r.warnings);
}

std::string format_sig6(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string to_markdown(std::span<const AnalysisReport> reports) {
  const std::vector<std::string> header{
      "Sample",     "N",          "Skew",      "Kurtosis",   "W",         "p-value",
      "Normal mean", "Normal sigma", "Laplace mu", "Laplace lambda", "KS normal", "KS laplace",
      "LL normal",  "LL laplace", "AIC normal", "AIC laplace", "Better fit"};

  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    rows.push_back({r.symbol, std::to_string(r.n), format_sig6(r.skew),
                    format_sig6(r.excess_kurtosis), format_sig6(r.shapiro_w),
                    format_sig6(r.shapiro_p), format_sig6(r.normal_fit.mean),
                    format_sig6(r.normal_fit.sigma), format_sig6(r.laplace_fit.mu),
                    format_sig6(r.laplace_fit.lambda), format_sig6(r.ks_normal),
                    format_sig6(r.ks_laplace), format_sig6(r.log_lik_normal),
                    format_sig6(r.log_lik_laplace), format_sig6(r.aic_normal),
                    format_sig6(r.aic_laplace), to_string(r.better_fit)});
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }

  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line = "|";
    for (std::size_t c = 0; c < cells.size(); ++c) {
      line += ' ';
      // Text left, numbers right.
      const bool left = c == 0 || c + 1 == cells.size();
      const std::string pad(width[c] - cells[c].size(), ' ');
      line += left ? cells[c] + pad : pad + cells[c];
      line += " |";
    }
    return line + '\n';
  };

  std::string out = emit(header);
  out += '|';
  for (std::size_t c = 0; c < header.size(); ++c) {
    const bool left = c == 0 || c + 1 == header.size();
    out += left ? ' ' + std::string(width[c], '-') + " |"
                : ' ' + std::string(width[c] - 1, '-') + ": |";
  }
  out += '\n';
  for (const auto& row : rows) out += emit(row);

  for (const auto& r : reports) {
    for (const auto& w : r.warnings) out += "\n> " + r.symbol + ": " + w;
  }
  if (std::any_of(reports.begin(), reports.end(),
                  [](const AnalysisReport& r) { return !r.warnings.empty(); })) {
    out += '\n';
  }
  return out;
}

HistogramData histogram(std::span<const double> sample, std::size_t bins) {
  if (sample.empty()) throw Error(ErrorKind::InsufficientData, "histogram of empty sample");
  if (bins == 0) throw Error(ErrorKind::Domain, "histogram needs at least one bin");

  const auto [lo_it, hi_it] = std::minmax_element(sample.begin(), sample.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const auto n = static_cast<double>(sample.size());
  HistogramData h;

  if (!(hi > lo)) {
    h.bin_edges = {lo - 0.5, lo + 0.5};
    h.counts = {sample.size()};
    h.densities = {1.0};
    return h;
  }

  const double width = (hi - lo) / static_cast<double>(bins);
  h.bin_edges.resize(bins + 1);
  for (std::size_t i = 0; i < bins; ++i) h.bin_edges[i] = lo + static_cast<double>(i) * width;
  h.bin_edges[bins] = hi;

  h.counts.assign(bins, 0);
  for (double x : sample) {
    auto idx = static_cast<std::size_t>((x - lo) / width);
    idx = std::min(idx, bins - 1);
    // Floating edges: make sure x lands in [edge[idx], edge[idx+1]).
    while (idx > 0 && x < h.bin_edges[idx]) --idx;
    while (idx + 1 < bins && x >= h.bin_edges[idx + 1]) ++idx;
    ++h.counts[idx];
  }

  h.densities.resize(bins);
  for (std::size_t i = 0; i < bins; ++i) {
    const double w = h.bin_edges[i + 1] - h.bin_edges[i];
    h.densities[i] = static_cast<double>(h.counts[i]) / (n * w);
  }
  return h;
}

void to_json(nlohmann::json& j, const HistogramData& h) {
  j = nlohmann::json{{"bin_edges", h.bin_edges}, {"counts", h.counts}, {"densities", h.densities}};
}

std::string histogram_csv(const HistogramData& h) {
  std::string out = "bin_lo,bin_hi,count,density\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    out += shortest(h.bin_edges[i]) + ',' + shortest(h.bin_edges[i + 1]) + ',' +
           std::to_string(h.counts[i]) + ',' + shortest(h.densities[i]) + '\n';
  }
  return out;
}

std::string ecdf_csv(std::span<const double> sample) {
  const auto curve = ecdf(sample);
  const auto normal = fit_normal(sample);
  const auto laplace = fit_laplace(sample);
  std::string out = "x,ecdf,normal_cdf,laplace_cdf\n";
  for (double x : curve.sorted_x) {
    out += shortest(x) + ',' + shortest(curve(x)) + ',' + shortest(normal_cdf(x, normal)) + ',' +
           shortest(laplace_cdf(x, laplace)) + '\n';
  }
  return out;
}

namespace {

std::string fixed(double v, int digits = 2) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string ecdf_svg(std::span<const double> sample, const std::string& title) {
  const auto curve = ecdf(sample);
  const auto normal = fit_normal(sample);
  const auto laplace = fit_laplace(sample);

  constexpr double kWidth = 800, kHeight = 500;
  constexpr double kLeft = 70, kRight = 30, kTop = 50, kBottom = 60;
  constexpr double kPlotW = kWidth - kLeft - kRight, kPlotH = kHeight - kTop - kBottom;
  constexpr int kGrid = 400;

  double lo = curve.sorted_x.front();
  double hi = curve.sorted_x.back();
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.02 * (hi - lo);
  lo -= pad;
  hi += pad;
  auto px = [&](double x) { return kLeft + (x - lo) / (hi - lo) * kPlotW; };
  auto py = [&](double p) { return kTop + (1.0 - p) * kPlotH; };
  auto pt = [&](double x, double p) { return fixed(px(x)) + ',' + fixed(py(p)) + ' '; };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kWidth, 0) + "\" height=\"" +
       fixed(kHeight, 0) + "\" viewBox=\"0 0 " + fixed(kWidth, 0) + ' ' + fixed(kHeight, 0) +
       "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + fixed(kWidth / 2) + "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"16\">" + xml_escape(title) + "</text>\n";

  // Axes and ticks.
  s += "<g stroke=\"black\" stroke-width=\"1\">\n";
  s += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(py(0)) + "\" x2=\"" + fixed(kLeft + kPlotW) +
       "\" y2=\"" + fixed(py(0)) + "\"/>\n";
  s += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(py(0)) + "\" x2=\"" + fixed(kLeft) +
       "\" y2=\"" + fixed(py(1)) + "\"/>\n";
  s += "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double p = i / 4.0;
    s += "<line x1=\"" + fixed(kLeft - 5) + "\" y1=\"" + fixed(py(p)) + "\" x2=\"" + fixed(kLeft) +
         "\" y2=\"" + fixed(py(p)) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fixed(kLeft - 8) + "\" y=\"" + fixed(py(p) + 4) +
         "\" text-anchor=\"end\">" + fixed(p) + "</text>\n";
  }
  for (int i = 0; i <= 5; ++i) {
    const double x = lo + (hi - lo) * i / 5.0;
    s += "<line x1=\"" + fixed(px(x)) + "\" y1=\"" + fixed(py(0)) + "\" x2=\"" + fixed(px(x)) +
         "\" y2=\"" + fixed(py(0) + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fixed(px(x)) + "\" y=\"" + fixed(py(0) + 20) +
         "\" text-anchor=\"middle\">" + tick_label(x) + "</text>\n";
  }
  s += "<text x=\"" + fixed(kLeft + kPlotW / 2) + "\" y=\"" + fixed(kHeight - 15) +
       "\" text-anchor=\"middle\">daily return</text>\n";
  s += "<text x=\"18\" y=\"" + fixed(kTop + kPlotH / 2) +
       "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " + fixed(kTop + kPlotH / 2) +
       ")\">F(x)</text>\n</g>\n";

  // ECDF as a step curve.
  std::string steps = pt(lo, 0.0);
  double level = 0.0;
  for (std::size_t i = 0; i < curve.sorted_x.size(); ++i) {
    const double x = curve.sorted_x[i];
    if (i + 1 < curve.sorted_x.size() && curve.sorted_x[i + 1] == x) continue;
    steps += pt(x, level);
    level = curve(x);
    steps += pt(x, level);
  }
  steps += pt(hi, 1.0);
  s += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"" + steps + "\"/>\n";

  std::string normal_pts, laplace_pts;
  for (int i = 0; i <= kGrid; ++i) {
    const double x = lo + (hi - lo) * i / kGrid;
    normal_pts += pt(x, normal_cdf(x, normal));
    laplace_pts += pt(x, laplace_cdf(x, laplace));
  }
  s += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\" "
       "points=\"" + normal_pts + "\"/>\n";
  s += "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" points=\"" + laplace_pts +
       "\"/>\n";

  // Legend.
  const double lx = kLeft + 15, ly = kTop + 10;
  s += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  struct Entry {
    const char* colour;
    const char* dash;
    const char* label;
  };
  const std::array<Entry, 3> entries{{{"black", "none", "ECDF"},
                                      {"#1f77b4", "6 3", "Normal fit"},
                                      {"#d62728", "none", "Laplace fit"}}};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double y = ly + 18.0 * static_cast<double>(i);
    s += "<line x1=\"" + fixed(lx) + "\" y1=\"" + fixed(y) + "\" x2=\"" + fixed(lx + 25) +
         "\" y2=\"" + fixed(y) + "\" stroke=\"" + entries[i].colour +
         "\" stroke-dasharray=\"" + entries[i].dash + "\" stroke-width=\"2\"/>\n";
    s += "<text x=\"" + fixed(lx + 32) + "\" y=\"" + fixed(y + 4) + "\">" + entries[i].label +
         "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace lapnorm
