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
#include "symprot/entangle.hpp"
#include "symprot/states.hpp"

namespace symprot {
namespace {

FockState make(const std::string& name) { return build(StateRecipe::parse(name)); }

double reconstruction_error(const SlaterReport& r, const CMatrix& c) {
  const CMatrix& u = r.takagi_vectors;
  const CMatrix d = r.takagi_values.cast<Complex>().asDiagonal();
  return (u * d * u.transpose() - c).norm();
}

TEST(TwoPhotonMatrixTest, RoundTrip) {
  for (const char* name : {"phi1", "phi2", "phi3", "s1", "s2", "psi1", "psi2", "psi3", "psi4"}) {
    const auto psi = make(name);
    const auto m = to_matrix(psi);
    EXPECT_EQ(m.c, m.c.transpose()) << name;
    EXPECT_NEAR(m.c.norm(), 1.0 / std::sqrt(2.0), 1e-14) << name;
    EXPECT_LT((from_matrix(m).amplitudes() - psi.amplitudes()).norm(), 1e-14) << name;
  }
}

TEST(TwoPhotonMatrixTest, MatchesPolynomialOracle) {
  std::mt19937_64 rng(4);
  const auto basis = FockBasis::make(ModeSpace::hm(1), 2);
  for (int t = 0; t < 20; ++t) {
    const CMatrix c = oracle::random_matrix(rng, 4, 4);
    const CMatrix sym = 0.5 * (c + c.transpose());
    CVector amps = CVector::Zero(10);
    for (Eigen::Index i = 0; i < 4; ++i) {
      for (Eigen::Index j = 0; j < 4; ++j) {
        CVector ei = CVector::Zero(4), ej = CVector::Zero(4);
        ei(i) = 1;
        ej(j) = 1;
        oracle::CreationPolynomial p(4);
        p.times(ei).times(ej).scale(sym(i, j));
        amps += p.on_vacuum(*basis);
      }
    }
    const auto psi = from_matrix({ModeSpace::hm(1), sym});
    EXPECT_LT((psi.amplitudes() - amps).norm(), 1e-12);
  }
}

TEST(TwoPhotonMatrixTest, RejectsOtherPhotonNumbers) {
  EXPECT_THROW(to_matrix(make("pair:m=1,N=4")), InvalidArgument);
}

TEST(TakagiTest, CatalogRanks) {
  const auto phi3 = takagi(to_matrix(make("phi3")));
  EXPECT_EQ(phi3.slater_rank, 2);
  EXPECT_TRUE(phi3.is_single_product);
  const auto psi4 = takagi(to_matrix(make("psi4")));
  EXPECT_EQ(psi4.slater_rank, 4);
  EXPECT_FALSE(psi4.is_single_product);
  EXPECT_FALSE(single_product_modes(psi4).has_value());
  EXPECT_EQ(takagi(to_matrix(make("s1"))).slater_rank, 1);
  EXPECT_EQ(takagi(to_matrix(make("phi1"))).slater_rank, 2);
  EXPECT_EQ(takagi(to_matrix(make("psi1"))).slater_rank, 2);
  EXPECT_EQ(takagi(to_matrix(make("psi3"))).slater_rank, 4);
}

TEST(TakagiTest, ReconstructionOnCatalogAndRandom) {
  for (const char* name : {"phi1", "phi2", "phi3", "s1", "s2", "psi1", "psi2", "psi3", "psi4"}) {
    const auto m = to_matrix(make(name));
    const auto r = takagi(m);
    EXPECT_LT(reconstruction_error(r, m.c), 1e-10) << name;
    const auto n = r.takagi_vectors.rows();
    EXPECT_LT((r.takagi_vectors.adjoint() * r.takagi_vectors - CMatrix::Identity(n, n)).norm(),
              1e-10);
  }
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const CMatrix c = oracle::random_matrix(rng, 6, 6);
    const CMatrix sym = 0.5 * (c + c.transpose());
    EXPECT_LT(reconstruction_error(takagi({ModeSpace::parse("h0+hm:1"), sym}), sym), 1e-10);
  }
}

TEST(TakagiTest, DegenerateValues) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const CMatrix u = oracle::random_unitary(rng, 4);
    const CMatrix c = u * u.transpose();
    const auto r = takagi({ModeSpace::hm(1), c});
    EXPECT_LT(reconstruction_error(r, c), 1e-10);
    EXPECT_NEAR(r.takagi_values.maxCoeff(), 1.0, 1e-12);
    EXPECT_NEAR(r.takagi_values.minCoeff(), 1.0, 1e-12);
  }
}

TEST(TakagiTest, ValuesInvariantUnderModeUnitaries) {
  std::mt19937_64 rng(21);
  for (const char* name : {"phi3", "psi4", "psi3"}) {
    const auto m = to_matrix(make(name));
    const auto base = takagi(m).takagi_values;
    const auto n = m.c.rows();
    for (int t = 0; t < 100; ++t) {
      const CMatrix u = oracle::random_unitary(rng, n);
      const CMatrix rotated = u * m.c * u.transpose();
      EXPECT_LT((takagi({m.space, rotated}).takagi_values - base).norm(), 1e-10);
    }
  }
}

TEST(TakagiTest, SingleProductModesRebuildState) {
  for (const char* name : {"phi1", "phi3", "s1", "s2", "psi1", "psi2"}) {
    const auto psi = make(name);
    const auto r = takagi(to_matrix(psi));
    const auto modes = single_product_modes(r);
    ASSERT_TRUE(modes.has_value()) << name;
    oracle::CreationPolynomial p(psi.basis().space().size());
    p.times(modes->first).times(modes->second);
    const CVector v = p.on_vacuum(psi.basis());
    EXPECT_NEAR(std::abs(v.dot(psi.amplitudes())) / v.norm(), 1.0, 1e-10) << name;
  }
}

}  // namespace
}  // namespace symprot
