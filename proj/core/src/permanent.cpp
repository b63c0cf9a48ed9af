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

#include "symprot/permanent.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace symprot {

// perm(A) = (-1)^n sum_{T subset cols} (-1)^{|T|} prod_i sum_{j in T} a_ij
Complex permanent(const CMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("permanent of a non-square matrix");
  const auto n = a.rows();
  if (n == 0) return {1.0, 0.0};
  if (n > 30) throw InvalidArgument("permanent: matrix too large for Ryser");

  std::vector<Complex> row_sums(static_cast<std::size_t>(n), Complex{});
  Complex total{};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int j = std::countr_zero(k);
    const std::uint64_t bit = std::uint64_t{1} << j;
    gray ^= bit;
    if (gray & bit) {
      for (Eigen::Index i = 0; i < n; ++i) row_sums[static_cast<std::size_t>(i)] += a(i, j);
    } else {
      for (Eigen::Index i = 0; i < n; ++i) row_sums[static_cast<std::size_t>(i)] -= a(i, j);
    }
    Complex prod = row_sums[0];
    for (std::size_t i = 1; i < row_sums.size(); ++i) prod *= row_sums[i];
    if (std::popcount(gray) % 2 == 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return (n % 2 == 1) ? -total : total;
}

}  // namespace symprot
