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

#include "symprot/scatter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace symprot {

namespace {

Eigen::Matrix2cd flip(const Eigen::Matrix2cd& a) {
  Eigen::Matrix2cd out;
  out << a(1, 1), a(1, 0), a(0, 1), a(0, 0);
  return out;
}

// Closest member of the symmetric family (orthogonal projection).
CMatrix project_to_family(const CMatrix& s, const ModeSpace& space) {
  CMatrix p = CMatrix::Zero(s.rows(), s.cols());
  for (const auto& b : space.blocks()) {
    const auto o = static_cast<Eigen::Index>(b.offset);
    if (b.kind == BlockKind::H0) {
      const Complex alpha = 0.5 * (s(o, o) + s(o + 1, o + 1));
      const Complex beta = 0.5 * (s(o, o + 1) + s(o + 1, o));
      p(o, o) = p(o + 1, o + 1) = alpha;
      p(o, o + 1) = p(o + 1, o) = beta;
    } else {
      const Eigen::Matrix2cd upper = s.block<2, 2>(o, o);
      const Eigen::Matrix2cd lower = s.block<2, 2>(o + 2, o + 2);
      const Eigen::Matrix2cd sm = 0.5 * (upper + flip(lower));
      p.block<2, 2>(o, o) = sm;
      p.block<2, 2>(o + 2, o + 2) = flip(sm);
    }
  }
  return p;
}

std::pair<Complex, Complex> eigenvalues2(const Eigen::Matrix2cd& a) {
  const Complex half_tr = 0.5 * (a(0, 0) + a(1, 1));
  const Complex det = a.determinant();
  const Complex disc = std::sqrt(half_tr * half_tr - det);
  return {half_tr + disc, half_tr - disc};
}

Complex gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  const double re = nd(rng);
  const double im = nd(rng);
  return {re, im};
}

Eigen::Matrix2cd haar_unitary2(std::mt19937_64& rng) {
  Eigen::Matrix2cd g;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) g(i, j) = gaussian(rng);
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
  Eigen::Matrix2cd q = qr.householderQ();
  const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 2; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

}  // namespace

ValidationReport validate(const CMatrix& s, const ModeSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.size());
  if (s.rows() != n || s.cols() != n) {
    throw InvalidArgument("scattering matrix is " + std::to_string(s.rows()) + "x" +
                          std::to_string(s.cols()) + " but space " +
                          space.to_string() + " has " + std::to_string(n) + " modes");
  }
  ValidationReport r;
  r.jz_commutator = commutator_norm(s, space.jz());
  r.mirror_commutator = commutator_norm(s, space.mirror());
  r.shape_residual = (s - project_to_family(s, space)).norm();
  r.sigma_excess = spectral_norm(s) - 1.0;
  const double tol = ValidationReport::kTolerance;
  r.ok = r.jz_commutator <= tol && r.mirror_commutator <= tol &&
         r.shape_residual <= tol && r.sigma_excess <= tol;
  return r;
}

SymmetricScattering SymmetricScattering::from_matrix(const ModeSpace& space,
                                                     CMatrix matrix) {
  const auto report = validate(matrix, space);
  if (!report.ok) {
    throw InvalidArgument(
        "matrix is not a cylindrically symmetric contraction: [S,Jz]=" +
        std::to_string(report.jz_commutator) +
        " [S,My]=" + std::to_string(report.mirror_commutator) +
        " shape=" + std::to_string(report.shape_residual) +
        " sigma_max-1=" + std::to_string(report.sigma_excess));
  }
  const auto n = matrix.rows();
  const double defect = (matrix.adjoint() * matrix - CMatrix::Identity(n, n)).norm();
  const auto u = defect < ValidationReport::kTolerance ? Unitarity::Unitary
                                                        : Unitarity::Subunitary;
  return SymmetricScattering(space, std::move(matrix), u);
}

Eigen::Matrix2cd SymmetricScattering::block(std::size_t b) const {
  const auto o = static_cast<Eigen::Index>(space_.blocks().at(b).offset);
  return matrix_.block<2, 2>(o, o);
}

SymmetricScattering SymmetricScattering::scaled(Complex c) const {
  return from_matrix(space_, c * matrix_);
}

ScatterSampler::ScatterSampler(std::uint64_t seed, Unitarity unitarity,
                               double genericity_floor)
    : seed_(seed), unitarity_(unitarity), floor_(genericity_floor), rng_(seed) {
  if (!(genericity_floor > 0.0) || genericity_floor >= 1.0) {
    throw InvalidArgument("genericity floor must lie in (0, 1)");
  }
}

CMatrix ScatterSampler::draw(const ModeSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.size());
  CMatrix s = CMatrix::Zero(n, n);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  for (const auto& b : space.blocks()) {
    const auto o = static_cast<Eigen::Index>(b.offset);
    if (b.kind == BlockKind::H0) {
      Complex alpha, beta;
      if (unitarity_ == Unitarity::Unitary) {
        const Complex e1 = std::polar(1.0, phase(rng_));
        const Complex e2 = std::polar(1.0, phase(rng_));
        alpha = 0.5 * (e1 + e2);
        beta = 0.5 * (e1 - e2);
      } else {
        alpha = gaussian(rng_);
        beta = gaussian(rng_);
      }
      s(o, o) = s(o + 1, o + 1) = alpha;
      s(o, o + 1) = s(o + 1, o) = beta;
    } else {
      Eigen::Matrix2cd sm;
      if (unitarity_ == Unitarity::Unitary) {
        sm = haar_unitary2(rng_);
      } else {
        for (int j = 0; j < 2; ++j)
          for (int i = 0; i < 2; ++i) sm(i, j) = gaussian(rng_);
      }
      s.block<2, 2>(o, o) = sm;
      s.block<2, 2>(o + 2, o + 2) = flip(sm);
    }
  }
  if (unitarity_ == Unitarity::Subunitary) {
    std::uniform_real_distribution<double> radius(floor_, 1.0);
    s *= radius(rng_) / spectral_norm(s);
  }
  return s;
}

bool ScatterSampler::generic(const CMatrix& s, const ModeSpace& space) const {
  for (const auto& b : space.blocks()) {
    const auto o = static_cast<Eigen::Index>(b.offset);
    const Eigen::Matrix2cd blk = s.block<2, 2>(o, o);
    const auto [e1, e2] = eigenvalues2(blk);
    // On H0 these are alpha^2 - beta^2 and |s_+ - s_-| = 2|beta|.
    if (std::abs(blk.determinant()) <= floor_) return false;
    if (std::abs(e1 - e2) <= floor_) return false;
  }
  return true;
}

SymmetricScattering ScatterSampler::sample(const ModeSpace& space) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    CMatrix s = draw(space);
    if (generic(s, space)) return SymmetricScattering::from_matrix(space, std::move(s));
  }
  throw NonGenericSample("no generic sample within " + std::to_string(kMaxAttempts) +
                         " attempts; genericity floor " + std::to_string(floor_) +
                         " is probably too large");
}

std::vector<EigenMode> eigen_modes(const SymmetricScattering& s, double gap_floor) {
  const auto& space = s.space();
  const auto n = static_cast<Eigen::Index>(space.size());
  std::vector<EigenMode> out;
  for (std::size_t bi = 0; bi < space.blocks().size(); ++bi) {
    const auto& b = space.blocks()[bi];
    const auto o = static_cast<Eigen::Index>(b.offset);
    const Eigen::Matrix2cd blk = s.block(bi);
    if (b.kind == BlockKind::H0) {
      const Complex alpha = blk(0, 0);
      const Complex beta = blk(0, 1);
      if (std::abs(2.0 * beta) <= gap_floor) {
        throw NonGenericSample("degenerate H0 block: |s_+ - s_-| = " +
                               std::to_string(std::abs(2.0 * beta)));
      }
      const double r = 1.0 / std::sqrt(2.0);
      for (const Tau tau : {Tau::Plus, Tau::Minus}) {
        CVector v = CVector::Zero(n);
        v(o) = r;
        v(o + 1) = r * to_int(tau);
        out.push_back({alpha + static_cast<double>(to_int(tau)) * beta, v, bi, 0, tau});
      }
      continue;
    }
    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(blk);
    Eigen::Vector2cd values = es.eigenvalues();
    Eigen::Matrix2cd vectors = es.eigenvectors();
    if (std::abs(values(0) - values(1)) <= gap_floor) {
      throw NonGenericSample("degenerate S_m block: |nu_+ - nu_-| = " +
                             std::to_string(std::abs(values(0) - values(1))));
    }
    // nu_+ is the eigenvalue with the larger real part.
    if (values(1).real() > values(0).real()) {
      std::swap(values(0), values(1));
      vectors.col(0).swap(vectors.col(1));
    }
    for (int k = 0; k < 2; ++k) {
      const Eigen::Vector2cd v = vectors.col(k).normalized();
      CVector up = CVector::Zero(n);
      up.segment<2>(o) = v;
      CVector down = CVector::Zero(n);
      down(o + 2) = v(1);
      down(o + 3) = v(0);
      out.push_back({values(k), up, bi, b.m, std::nullopt});
      out.push_back({values(k), down, bi, -b.m, std::nullopt});
    }
  }
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace symprot
