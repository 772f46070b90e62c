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
#include <optional>
#include <stdexcept>
#include <string>

namespace lapnorm {

enum class ErrorKind {
  Io,
  Format,            // malformed or missing CSV header
  Row,               // a single unparsable data row
  EmptyInput,        // no usable rows
  InsufficientData,  // sample too small for the requested statistic
  DivisionDomain,    // zero denominator in a return calculation
  Degenerate,        // zero variance / zero scale
  Domain,            // argument outside the mathematical domain
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `line()` is set for row errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

}  // namespace lapnorm
