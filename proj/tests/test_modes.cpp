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

#include "symprot/modes.hpp"

namespace symprot {
namespace {

CMatrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  CMatrix m(static_cast<Eigen::Index>(rows.size()),
            static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

TEST(ModeSpaceTest, H0LabelsAndOperators) {
  const auto h0 = ModeSpace::h0();
  ASSERT_EQ(h0.size(), 2u);
  EXPECT_EQ(h0.labels()[0], (ModeLabel{0, +1}));
  EXPECT_EQ(h0.labels()[1], (ModeLabel{0, -1}));
  EXPECT_EQ(h0.jz(), CMatrix::Zero(2, 2));
  EXPECT_EQ(h0.mirror(), real_matrix({{0, 1}, {1, 0}}));
}

TEST(ModeSpaceTest, HmLabelsAndOperators) {
  const auto hm = ModeSpace::hm(1);
  ASSERT_EQ(hm.size(), 4u);
  EXPECT_EQ(hm.labels()[0], (ModeLabel{1, +1}));
  EXPECT_EQ(hm.labels()[1], (ModeLabel{1, -1}));
  EXPECT_EQ(hm.labels()[2], (ModeLabel{-1, +1}));
  EXPECT_EQ(hm.labels()[3], (ModeLabel{-1, -1}));
  EXPECT_EQ(hm.jz(), real_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}));
  EXPECT_EQ(hm.mirror(),
            real_matrix({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}));
}

TEST(ModeSpaceTest, RejectsNonPositiveM) {
  EXPECT_THROW(ModeSpace::hm(0), InvalidArgument);
  EXPECT_THROW(ModeSpace::hm(-2), InvalidArgument);
}

TEST(ModeSpaceTest, MirrorIdentities) {
  for (const auto& space : {ModeSpace::h0(), ModeSpace::hm(1), ModeSpace::hm(3),
                            ModeSpace::parse("h0+hm:2")}) {
    const auto& my = space.mirror();
    const auto n = static_cast<Eigen::Index>(space.size());
    EXPECT_EQ(my * my, CMatrix::Identity(n, n)) << space.to_string();
    EXPECT_EQ(my, my.transpose());
    EXPECT_EQ(my.imag(), Eigen::MatrixXd::Zero(n, n));
    EXPECT_EQ(CMatrix(my * space.jz() * my), CMatrix(-space.jz()))
        << space.to_string();
  }
  const auto h0 = ModeSpace::h0();
  EXPECT_EQ(commutator_norm(h0.mirror(), h0.jz()), 0.0);
}

TEST(ModeSpaceTest, ParseAndPrint) {
  EXPECT_EQ(ModeSpace::parse("h0"), ModeSpace::h0());
  EXPECT_EQ(ModeSpace::parse("hm:4"), ModeSpace::hm(4));
  EXPECT_EQ(ModeSpace::parse("h0+hm:1").to_string(), "h0+hm:1");
  EXPECT_EQ(ModeSpace::parse("h0+hm:1").size(), 6u);
  EXPECT_THROW(ModeSpace::parse("hm:1+hm:1"), InvalidArgument);
  EXPECT_THROW(ModeSpace::parse("hx"), InvalidArgument);
  EXPECT_THROW(ModeSpace::parse("hm:0"), InvalidArgument);
  EXPECT_THROW(ModeSpace::parse("hm:a"), InvalidArgument);
  EXPECT_THROW(ModeSpace::parse(""), InvalidArgument);
}

TEST(ModeSpaceTest, DirectSumBlocks) {
  const auto s = ModeSpace::parse("hm:2+h0");
  EXPECT_EQ(s.blocks()[1].offset, 4u);
  EXPECT_EQ(s.mirror_image(4), 5u);
  EXPECT_EQ(s.mirror_image(0), 3u);
  EXPECT_EQ(s.jz()(2, 2), Complex(-2.0));
}

TEST(MirrorEigenbasisTest, DiagonalizesMirrorOnH0) {
  const auto h0 = ModeSpace::h0();
  const CMatrix u = mirror_eigenbasis(h0);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_EQ(u, real_matrix({{r, r}, {r, -r}}));
  const CMatrix d = u.adjoint() * h0.mirror() * u;
  EXPECT_NEAR((d - real_matrix({{1, 0}, {0, -1}})).norm(), 0.0, 1e-15);
  EXPECT_LT((u.adjoint() * u - CMatrix::Identity(2, 2)).norm(), 1e-14);
}

TEST(MirrorEigenbasisTest, RejectsHm) {
  EXPECT_THROW(mirror_eigenbasis(ModeSpace::hm(1)), InvalidArgument);
  EXPECT_THROW(mirror_eigenbasis(ModeSpace::parse("h0+hm:1")), InvalidArgument);
}

}  // namespace
}  // namespace symprot
