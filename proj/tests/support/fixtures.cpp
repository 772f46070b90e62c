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

#include "fixtures.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>

#include "lapnorm/market_data.hpp"

namespace lapnorm::testing {

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  path_ = std::filesystem::temp_directory_path() /
          ("lapnorm_test_" + std::to_string(stamp) + "_" + std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::filesystem::path TempDir::write(const std::string& name, const std::string& content) const {
  const auto file = path_ / name;
  std::ofstream(file, std::ios::binary) << content;
  return file;
}

std::string price_csv_from_returns(const std::vector<double>& returns) {
  using namespace std::chrono;
  PriceSeries series;
  series.symbol = "SYN";
  sys_days day = sys_days{year{2012} / January / 3};
  double price = 100.0;
  auto push = [&](double p) {
    PricePoint pt;
    pt.date = year_month_day{day};
    pt.open = pt.high = pt.low = pt.close = pt.adj_close = p;
    pt.volume = 1000;
    series.points.push_back(pt);
    do {
      day += days{1};
    } while (weekday{day} == Saturday || weekday{day} == Sunday);
  };
  push(price);
  for (double r : returns) {
    price *= 1.0 + r;
    push(price);
  }
  return serialize_ohlcv_csv(series);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace lapnorm::testing
