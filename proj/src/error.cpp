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

#include "syncagg/error.hpp"

namespace syncagg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_group_order: return "invalid group order";
    case ErrorCode::invalid_parameter: return "invalid parameter";
    case ErrorCode::backend_mismatch: return "backend mismatch";
    case ErrorCode::non_invertible_scalar: return "non-invertible scalar";
    case ErrorCode::malformed_encoding: return "malformed encoding";
    case ErrorCode::off_curve: return "off-curve point";
    case ErrorCode::not_in_subgroup: return "point not in the prime-order subgroup";
    case ErrorCode::incoherent_element: return "incoherent element";
    case ErrorCode::period_out_of_bounds: return "period out of bounds";
    case ErrorCode::empty_input: return "empty input";
    case ErrorCode::length_mismatch: return "length mismatch";
    case ErrorCode::mixed_periods: return "mixed periods";
    case ErrorCode::duplicate_key: return "duplicate verification key";
    case ErrorCode::invalid_constituent: return "invalid constituent signature";
    case ErrorCode::malformed_proof: return "malformed proof";
    case ErrorCode::malformed_polynomial: return "malformed polynomial";
    case ErrorCode::sk_retrieval_disabled: return "sk retrieval disabled";
    case ErrorCode::io_failure: return "i/o failure";
    case ErrorCode::internal: return "internal error";
  }
  return "unknown error";
}

}  // namespace syncagg
