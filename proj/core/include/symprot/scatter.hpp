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

#ifndef SYMPROT_SCATTER_HPP_
#define SYMPROT_SCATTER_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "symprot/modes.hpp"
#include "symprot/types.hpp"

namespace symprot {

enum class Unitarity { Unitary, Subunitary };

/// Residuals of a candidate single-particle matrix against the cylindrical
/// symmetry constraints. All norms are Frobenius norms.
struct ValidationReport {
  static constexpr double kTolerance = 1e-12;

  double jz_commutator = 0.0;      // ||[S, J_z]||
  double mirror_commutator = 0.0;  // ||[S, M_y]||
  double shape_residual = 0.0;     // distance to the [[a,b],[b,a]] / S_m (+) X S_m X family
  double sigma_excess = 0.0;       // sigma_max(S) - 1
  bool ok = false;
};

/// Throws InvalidArgument if `s` is not square of the space's dimension.
ValidationReport validate(const CMatrix& s, const ModeSpace& space);

/// Single-particle scattering matrix known to commute with rotations about z
/// and with M_y, and to be a contraction.
class SymmetricScattering {
 public:
  /// Validates `matrix` against `space`; throws InvalidArgument on violation.
  static SymmetricScattering from_matrix(const ModeSpace& space, CMatrix matrix);

  const ModeSpace& space() const { return space_; }
  const CMatrix& matrix() const { return matrix_; }
  Unitarity unitarity() const { return unitarity_; }

  /// The 2x2 block acting on block `b`: [[alpha, beta],[beta, alpha]] for
  /// H0 and S_m for Hm (S_{-m} is its flip).
  Eigen::Matrix2cd block(std::size_t b) const;

  /// c * S. Throws if the result stops being a contraction.
  SymmetricScattering scaled(Complex c) const;

 private:
  SymmetricScattering(ModeSpace space, CMatrix matrix, Unitarity u)
      : space_(std::move(space)), matrix_(std::move(matrix)), unitarity_(u) {}

  ModeSpace space_;
  CMatrix matrix_;
  Unitarity unitarity_;
};

/// Seeded source of generic symmetric scattering matrices.
///
/// Free parameters are i.i.d. complex Gaussians. Unitary samples use uniform
/// phases on H0 and a Haar 2x2 block on Hm; subunitary samples are rescaled
/// to sigma_max = r with r ~ U(floor, 1). A draw is rejected unless every
/// block has |det| and eigenvalue gap above the genericity floor.
class ScatterSampler {
 public:
  static constexpr int kMaxAttempts = 10000;

  ScatterSampler(std::uint64_t seed, Unitarity unitarity,
                 double genericity_floor = 1e-3);

  SymmetricScattering sample(const ModeSpace& space);

  std::uint64_t seed() const { return seed_; }
  Unitarity unitarity() const { return unitarity_; }
  double genericity_floor() const { return floor_; }

 private:
  CMatrix draw(const ModeSpace& space);
  bool generic(const CMatrix& s, const ModeSpace& space) const;

  std::uint64_t seed_;
  Unitarity unitarity_;
  double floor_;
  std::mt19937_64 rng_;
};

/// Eigenpair of a symmetric scattering matrix, embedded in the full space.
struct EigenMode {
  Complex value;
  CVector vector;       // unit norm
  std::size_t block = 0;
  int m = 0;            // signed J_z of the support
  std::optional<Tau> tau;  // set on H0 blocks only
};

/// Per block: on H0 the mirror modes with s_tau = alpha + tau*beta; on Hm the
/// pair (nu_+, nu_-) of S_m, each twice (m block and flipped -m block).
/// Throws NonGenericSample if a block's eigenvalue gap is below `gap_floor`.
std::vector<EigenMode> eigen_modes(const SymmetricScattering& s,
                                   double gap_floor = 1e-3);

/// splitmix64 finaliser; derives independent sub-stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace symprot

#endif  // SYMPROT_SCATTER_HPP_
