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

// JSON mirror of the binary artifact formats. Binary is authoritative; each
// JSON document carries a "type" field naming the record kind, with group
// elements and scalars as base64 of their binary encodings.

#pragma once

#include <string>

#include "syncagg/registry.hpp"

namespace syncagg {

// Record kind from the first byte of a binary artifact.
WireKind detect_kind(ByteView binary);
std::string_view wire_kind_name(WireKind kind);

// Converts any binary artifact to JSON. All kinds except params need the
// public parameters to parse their elements (pp may be null for params).
std::string binary_to_json(const SasParams* pp, ByteView binary);
// Inverse of binary_to_json; throws malformed_encoding.
Bytes json_to_binary(const SasParams* pp, const std::string& json);

}  // namespace syncagg
