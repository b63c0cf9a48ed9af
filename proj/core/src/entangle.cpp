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

#include "symprot/entangle.hpp"

#include <cmath>

namespace symprot {

TwoPhotonMatrix to_matrix(const FockState& state) {
  const auto& basis = state.basis();
  if (basis.n_photons() != 2) {
    throw InvalidArgument("Slater analysis needs a two-photon state, got N = " +
                          std::to_string(basis.n_photons()));
  }
  const auto m = static_cast<Eigen::Index>(basis.space().size());
  CMatrix c = CMatrix::Zero(m, m);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& modes = basis.mode_list(k);
    const Complex a = state.amplitudes()(static_cast<Eigen::Index>(k));
    const auto i = modes[0];
    const auto j = modes[1];
    if (i == j) {
      c(i, i) = a / std::sqrt(2.0);
    } else {
      c(i, j) = c(j, i) = a / 2.0;
    }
  }
  return {basis.space(), std::move(c)};
}

FockState from_matrix(const TwoPhotonMatrix& m) {
  const CMatrix c = 0.5 * (m.c + m.c.transpose());
  auto basis = FockBasis::make(m.space, 2);
  CVector amps(static_cast<Eigen::Index>(basis->size()));
  for (std::size_t k = 0; k < basis->size(); ++k) {
    const auto& modes = basis->mode_list(k);
    const auto i = modes[0];
    const auto j = modes[1];
    amps(static_cast<Eigen::Index>(k)) = i == j ? c(i, i) * std::sqrt(2.0) : 2.0 * c(i, j);
  }
  return FockState(std::move(basis), std::move(amps));
}

SlaterReport takagi(const TwoPhotonMatrix& m, double rank_tol) {
  const CMatrix c = 0.5 * (m.c + m.c.transpose());
  const auto n = c.rows();
  Eigen::JacobiSVD<CMatrix> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const CMatrix& w = svd.matrixU();
  const CMatrix z = w.adjoint() * svd.matrixV().conjugate();

  // z is unitary and (up to rounding) symmetric; its principal square root
  // is a polynomial in z, hence symmetric as well.
  Eigen::ComplexSchur<CMatrix> schur(z);
  const CMatrix& t = schur.matrixT();
  CMatrix root_diag = CMatrix::Zero(n, n);
  // Equal eigenvalues must share a branch of the square root.
  for (Eigen::Index i = 0; i < n; ++i) {
    root_diag(i, i) = std::sqrt(t(i, i));
    for (Eigen::Index j = 0; j < i; ++j) {
      if (std::abs(t(i, i) - t(j, j)) < 1e-8) {
        root_diag(i, i) = root_diag(j, j);
        break;
      }
    }
  }
  const CMatrix root = schur.matrixU() * root_diag * schur.matrixU().adjoint();

  SlaterReport report;
  report.takagi_values = svd.singularValues();
  report.takagi_vectors = w * root;
  for (Eigen::Index i = 0; i < n; ++i)
    if (report.takagi_values(i) > rank_tol) ++report.slater_rank;
  report.is_single_product = report.slater_rank <= 2;
  return report;
}

std::optional<std::pair<CVector, CVector>> single_product_modes(const SlaterReport& report) {
  if (report.slater_rank > 2) return std::nullopt;
  const auto n = report.takagi_vectors.rows();
  const auto sigma = [&](Eigen::Index i) {
    return i < report.takagi_values.size() ? report.takagi_values(i) : 0.0;
  };
  const CVector x = report.takagi_vectors.col(0);
  const CVector y = n > 1 ? CVector(report.takagi_vectors.col(1)) : CVector::Zero(n);
  const Complex i_unit{0.0, 1.0};
  const double r = 1.0 / std::sqrt(2.0);
  CVector u = r * (std::sqrt(sigma(0)) * x + i_unit * std::sqrt(sigma(1)) * y);
  CVector v = r * (std::sqrt(sigma(0)) * x - i_unit * std::sqrt(sigma(1)) * y);
  return std::make_pair(std::move(u), std::move(v));
}

}  // namespace symprot
