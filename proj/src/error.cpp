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

#include "lapnorm/error.hpp"

namespace lapnorm {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Io: return "io";
    case ErrorKind::Format: return "format";
    case ErrorKind::Row: return "row";
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::InsufficientData: return "insufficient-data";
    case ErrorKind::DivisionDomain: return "division-domain";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Domain: return "domain";
  }
  return "unknown";
}

}  // namespace lapnorm
