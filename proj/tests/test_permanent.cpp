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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "symprot/permanent.hpp"

namespace symprot {
namespace {

TEST(PermanentTest, SmallClosedForms) {
  EXPECT_EQ(permanent(CMatrix(0, 0)), Complex(1.0));
  CMatrix a(2, 2);
  a << 1, 2, 3, 4;
  EXPECT_EQ(permanent(a), Complex(10.0));
  EXPECT_NEAR(std::abs(permanent(CMatrix::Ones(5, 5)) - 120.0), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(permanent(CMatrix::Identity(6, 6)) - 1.0), 0.0, 1e-15);
}

TEST(PermanentTest, MatchesLeibnizOnRandomMatrices) {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<Eigen::Index>(1 + trial % 6);
    const CMatrix a = oracle::random_matrix(rng, n, n);
    const Complex ref = oracle::naive_permanent(a);
    const double rel = std::abs(permanent(a) - ref) / std::max(std::abs(ref), 1e-300);
    worst = std::max(worst, rel);
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(PermanentTest, InvariantUnderRowPermutationAndTranspose) {
  std::mt19937_64 rng(3);
  const CMatrix a = oracle::random_matrix(rng, 5, 5);
  Eigen::PermutationMatrix<Eigen::Dynamic> p(5);
  p.indices() << 3, 0, 4, 1, 2;
  const Complex base = permanent(a);
  EXPECT_NEAR(std::abs(permanent(p * a) - base), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(permanent(a.transpose()) - base), 0.0, 1e-12);
}

TEST(PermanentTest, RejectsBadShapes) {
  EXPECT_THROW(permanent(CMatrix::Ones(2, 3)), InvalidArgument);
  EXPECT_THROW(permanent(CMatrix::Ones(31, 31)), InvalidArgument);
}

}  // namespace
}  // namespace symprot
