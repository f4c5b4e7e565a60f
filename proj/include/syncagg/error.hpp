// Copyright 2026 The syncagg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace syncagg {

// Failures that are not verdicts. A rejected signature is a `false` return,
// never one of these.
enum class ErrorCode {
  invalid_group_order,
  invalid_parameter,
  backend_mismatch,
  non_invertible_scalar,
  malformed_encoding,
  off_curve,
  not_in_subgroup,
  incoherent_element,
  period_out_of_bounds,
  empty_input,
  length_mismatch,
  mixed_periods,
  duplicate_key,
  invalid_constituent,
  malformed_proof,
  malformed_polynomial,
  sk_retrieval_disabled,
  io_failure,
  internal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  explicit Error(ErrorCode code) : Error(code, std::string(error_code_name(code))) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Aggregation failure that names the offending position (0-based).
class InvalidConstituent : public Error {
 public:
  explicit InvalidConstituent(std::size_t index)
      : Error(ErrorCode::invalid_constituent,
              "invalid constituent signature at index " + std::to_string(index)),
        index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace syncagg
