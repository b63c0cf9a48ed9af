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

#ifndef SYMPROT_PERMANENT_HPP_
#define SYMPROT_PERMANENT_HPP_

#include "symprot/types.hpp"

namespace symprot {

/// Permanent of a square complex matrix by Ryser's inclusion-exclusion
/// formula, visiting column subsets in Gray-code order so that each step
/// updates the row sums with a single column. O(2^n n) time, O(n) memory.
/// The permanent of the 0x0 matrix is 1.
Complex permanent(const CMatrix& a);

}  // namespace symprot

#endif  // SYMPROT_PERMANENT_HPP_
