// Copyright 2026 The symprot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMPROT_SERIALIZE_HPP_
#define SYMPROT_SERIALIZE_HPP_

#include <nlohmann/json.hpp>

#include "symprot/dfs.hpp"
#include "symprot/entangle.hpp"
#include "symprot/fock.hpp"
#include "symprot/protect.hpp"
#include "symprot/scatter.hpp"
#include "symprot/states.hpp"

namespace symprot {

// Keys keep insertion order so that output is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "symprot/1";

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// Row-major nested arrays of [re, im] pairs.
Json matrix_to_json(const CMatrix& m);
/// Throws InvalidArgument on ragged or malformed input.
CMatrix matrix_from_json(const Json& j);

/// {"schema", "space", "n", "basis", "amplitudes"}; "basis" lists the
/// occupation vectors in amplitude order.
Json to_json(const FockState& state);
/// Accepts the document written by to_json. "basis" is optional; when
/// present it must match the canonical order. Throws InvalidArgument.
FockState fock_state_from_json(const Json& j);

Json to_json(const ValidationReport& r);
Json to_json(const SymmetricScattering& s);
Json to_json(const ProtectionReport& r);
Json to_json(const ProtectedRay& r);
Json to_json(const SearchResult& r);
Json to_json(const UniquenessReport& r);
Json to_json(const SlaterReport& r);
Json to_json(const ChannelOutcome& r);
Json to_json(const ProtectedCount& c);

}  // namespace symprot

#endif  // SYMPROT_SERIALIZE_HPP_
