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

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lapnorm {

using Date = std::chrono::year_month_day;

/// Parses an ISO `YYYY-MM-DD` date. Returns nullopt for anything else,
/// including calendar-invalid dates such as 2013-02-29.
std::optional<Date> parse_iso_date(std::string_view text);
std::string format_iso_date(const Date& date);

struct PricePoint {
  Date date;
  double open = 0.0;
  double high = 0.0;
  double low = 0.0;
  double close = 0.0;
  double adj_close = 0.0;
  std::uint64_t volume = 0;

  friend bool operator==(const PricePoint&, const PricePoint&) = default;
};

/// Dated price history, strictly ascending by date.
struct PriceSeries {
  std::string symbol;
  std::vector<PricePoint> points;

  friend bool operator==(const PriceSeries&, const PriceSeries&) = default;
};

struct ParseResult {
  PriceSeries series;
  std::vector<std::string> warnings;
};

enum class PriceField { Close, AdjClose };

struct DatedReturn {
  Date date;
  double value = 0.0;
};

struct ReturnSeries {
  std::string symbol;
  std::vector<DatedReturn> values;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] std::vector<double> raw() const;
};

inline constexpr std::string_view kOhlcvHeader = "Date,Open,High,Low,Close,Adj Close,Volume";

/**
 * Parses a Yahoo Finance style OHLCV export.
 *
 * Rows holding the literal `null` in a price field are skipped and reported
 * in `warnings`; if every row is skipped the series is empty. Rows are
 * re-sorted ascending by date.
 *
 * Throws Error with kind Format (bad header), Row (bad date, non-positive
 * price, duplicate date; carries the 1-based line number) or EmptyInput
 * (no data rows after the header).
 */
ParseResult parse_ohlcv_csv(std::string_view text, std::string symbol);

/// Inverse of parse_ohlcv_csv; doubles are written in shortest round-trip form.
std::string serialize_ohlcv_csv(const PriceSeries& series);

/// Reads one return per line (blank lines ignored), the `--returns-only` format.
std::vector<double> parse_returns_text(std::string_view text);

/// Simple returns (P_t - P_{t-1}) / P_{t-1} between consecutive rows, dated at
/// the later row. Calendar gaps between rows are ignored.
ReturnSeries simple_returns(const PriceSeries& prices, PriceField field = PriceField::AdjClose);

}  // namespace lapnorm
