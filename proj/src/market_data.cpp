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

#include "lapnorm/market_data.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "lapnorm/error.hpp"

namespace lapnorm {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto pos = text.find('\n');
    lines.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto pos = line.find(',');
    fields.push_back(trim(line.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return fields;
}

std::optional<double> parse_double(std::string_view s) {
  double value = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

std::string shortest(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

[[noreturn]] void row_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::Row, "line " + std::to_string(line) + ": " + msg, line);
}

}  // namespace

std::optional<Date> parse_iso_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  auto field = [&](std::size_t pos, std::size_t len) -> std::optional<int> {
    int v = 0;
    const auto* first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, first + len, v);
    if (ec != std::errc{} || ptr != first + len) return std::nullopt;
    return v;
  };
  const auto y = field(0, 4);
  const auto m = field(5, 2);
  const auto d = field(8, 2);
  if (!y || !m || !d) return std::nullopt;
  const Date date{std::chrono::year{*y}, std::chrono::month{static_cast<unsigned>(*m)},
                  std::chrono::day{static_cast<unsigned>(*d)}};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string format_iso_date(const Date& date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf;
}

std::vector<double> ReturnSeries::raw() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& r : values) out.push_back(r.value);
  return out;
}

ParseResult parse_ohlcv_csv(std::string_view text, std::string symbol) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  const auto lines = split_lines(text);
  if (lines.empty() || trim(lines.front()) != kOhlcvHeader) {
    throw Error(ErrorKind::Format,
                "expected header '" + std::string(kOhlcvHeader) + "'");
  }

  ParseResult result;
  result.series.symbol = std::move(symbol);
  std::vector<std::pair<PricePoint, std::size_t>> rows;
  std::size_t data_lines = 0;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    ++data_lines;

    const auto fields = split_fields(line);
    if (fields.size() != 7) {
      row_error(lineno, "expected 7 fields, got " + std::to_string(fields.size()));
    }
    if (std::any_of(fields.begin() + 1, fields.end(),
                    [](std::string_view f) { return f == "null"; })) {
      result.warnings.push_back("line " + std::to_string(lineno) + ": null value, row skipped");
      continue;
    }

    PricePoint p;
    const auto date = parse_iso_date(fields[0]);
    if (!date) row_error(lineno, "unparsable date '" + std::string(fields[0]) + "'");
    p.date = *date;

    const std::array<double*, 5> prices{&p.open, &p.high, &p.low, &p.close, &p.adj_close};
    for (std::size_t k = 0; k < prices.size(); ++k) {
      const auto v = parse_double(fields[k + 1]);
      if (!v || !std::isfinite(*v)) {
        row_error(lineno, "unparsable price '" + std::string(fields[k + 1]) + "'");
      }
      if (*v <= 0.0) row_error(lineno, "non-positive price " + std::string(fields[k + 1]));
      *prices[k] = *v;
    }

    std::uint64_t volume = 0;
    const auto vol = fields[6];
    auto [ptr, ec] = std::from_chars(vol.data(), vol.data() + vol.size(), volume);
    if (ec != std::errc{} || ptr != vol.data() + vol.size()) {
      row_error(lineno, "unparsable volume '" + std::string(vol) + "'");
    }
    p.volume = volume;
    rows.emplace_back(p, lineno);
  }

  if (data_lines == 0) throw Error(ErrorKind::EmptyInput, "no data rows after the header");

  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.first.date < b.first.date; });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].first.date == rows[i - 1].first.date) {
      row_error(rows[i].second, "duplicate date " + format_iso_date(rows[i].first.date));
    }
  }

  result.series.points.reserve(rows.size());
  for (auto& [p, line] : rows) result.series.points.push_back(p);
  return result;
}

std::string serialize_ohlcv_csv(const PriceSeries& series) {
  std::string out(kOhlcvHeader);
  out += '\n';
  for (const auto& p : series.points) {
    out += format_iso_date(p.date);
    for (double v : {p.open, p.high, p.low, p.close, p.adj_close}) {
      out += ',';
      out += shortest(v);
    }
    out += ',';
    out += std::to_string(p.volume);
    out += '\n';
  }
  return out;
}

std::vector<double> parse_returns_text(std::string_view text) {
  std::vector<double> values;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    const auto v = parse_double(line);
    if (!v || !std::isfinite(*v)) {
      row_error(i + 1, "unparsable return '" + std::string(line) + "'");
    }
    values.push_back(*v);
  }
  if (values.empty()) throw Error(ErrorKind::EmptyInput, "no returns in input");
  return values;
}

ReturnSeries simple_returns(const PriceSeries& prices, PriceField field) {
  if (prices.points.size() < 2) {
    throw Error(ErrorKind::InsufficientData,
                "need at least 2 prices for a return, got " + std::to_string(prices.points.size()));
  }
  const auto pick = [field](const PricePoint& p) {
    return field == PriceField::Close ? p.close : p.adj_close;
  };

  ReturnSeries out;
  out.symbol = prices.symbol;
  out.values.reserve(prices.points.size() - 1);
  for (std::size_t i = 1; i < prices.points.size(); ++i) {
    const double prev = pick(prices.points[i - 1]);
    if (prev == 0.0) {
      throw Error(ErrorKind::DivisionDomain,
                  "zero price on " + format_iso_date(prices.points[i - 1].date));
    }
    out.values.push_back({prices.points[i].date, (pick(prices.points[i]) - prev) / prev});
  }
  return out;
}

}  // namespace lapnorm
