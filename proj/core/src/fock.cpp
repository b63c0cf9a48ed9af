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

#include "symprot/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "symprot/permanent.hpp"

namespace symprot {

namespace {

constexpr int kDefaultMaxPhotons = 10;

void enumerate(std::size_t mode, int remaining, Occupation& current,
               std::vector<Occupation>& out) {
  if (mode + 1 == current.size()) {
    current[mode] = remaining;
    out.push_back(current);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    current[mode] = k;
    enumerate(mode + 1, remaining - k, current, out);
  }
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

int max_photons() {
  if (const char* env = std::getenv("SYMPROT_NMAX")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 64) return static_cast<int>(v);
  }
  return kDefaultMaxPhotons;
}

std::string ket_label(const Occupation& occupation) {
  std::string out = "|";
  for (std::size_t i = 0; i < occupation.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(occupation[i]);
  }
  return out + ">";
}

FockBasis::FockBasis(ModeSpace space, int n) : space_(std::move(space)), n_(n) {
  Occupation current(space_.size(), 0);
  enumerate(0, n, current, states_);
  const auto& labels = space_.labels();
  for (std::size_t i = 0; i < states_.size(); ++i) {
    const auto& occ = states_[i];
    index_.emplace(occ, i);
    int mt = 0;
    double nf = 1.0;
    std::vector<int> modes;
    for (std::size_t k = 0; k < occ.size(); ++k) {
      mt += occ[k] * labels[k].m;
      nf *= factorial(occ[k]);
      modes.insert(modes.end(), static_cast<std::size_t>(occ[k]), static_cast<int>(k));
    }
    m_tot_.push_back(mt);
    norm_factors_.push_back(std::sqrt(nf));
    mode_lists_.push_back(std::move(modes));
  }
}

std::shared_ptr<const FockBasis> FockBasis::make(const ModeSpace& space, int n) {
  if (n < 0) throw InvalidArgument("photon number must be non-negative");
  if (n > max_photons()) {
    throw InvalidArgument("N = " + std::to_string(n) + " exceeds N_max = " +
                          std::to_string(max_photons()) + " (set SYMPROT_NMAX to raise it)");
  }
  return std::shared_ptr<const FockBasis>(new FockBasis(space, n));
}

std::optional<std::size_t> FockBasis::index_of(const Occupation& occupation) const {
  const auto it = index_.find(occupation);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::map<int, std::vector<std::size_t>> sector_split(const FockBasis& basis) {
  std::map<int, std::vector<std::size_t>> sectors;
  for (std::size_t i = 0; i < basis.size(); ++i) sectors[basis.m_tot(i)].push_back(i);
  return sectors;
}

FockState::FockState(BasisPtr basis, CVector amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (!basis_) throw InvalidArgument("FockState without a basis");
  if (static_cast<std::size_t>(amplitudes_.size()) != basis_->size()) {
    throw InvalidArgument("amplitude vector has length " +
                          std::to_string(amplitudes_.size()) + ", basis has " +
                          std::to_string(basis_->size()) + " states");
  }
  if (!amplitudes_.allFinite()) throw InvalidArgument("non-finite amplitude");
}

FockState FockState::basis_state(BasisPtr basis, const Occupation& occupation) {
  const auto idx = basis->index_of(occupation);
  if (!idx) throw InvalidArgument(ket_label(occupation) + " is not in the basis");
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(basis->size()));
  amps(static_cast<Eigen::Index>(*idx)) = 1.0;
  return FockState(std::move(basis), std::move(amps));
}

FockState FockState::normalized() const {
  const double n = amplitudes_.norm();
  if (n == 0.0) throw InvalidArgument("cannot normalize the zero vector");
  return FockState(basis_, amplitudes_ / n);
}

FockState FockState::canonical() const {
  FockState out = normalized();
  const double cutoff = 1e-9 * out.amplitudes_.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < out.amplitudes_.size(); ++i) {
    const Complex a = out.amplitudes_(i);
    if (std::abs(a) > cutoff) {
      out.amplitudes_ *= std::conj(a) / std::abs(a);
      out.amplitudes_(i) = std::abs(a);
      break;
    }
  }
  return out;
}

Complex FockState::amplitude(const Occupation& occupation) const {
  const auto idx = basis_->index_of(occupation);
  if (!idx) throw InvalidArgument(ket_label(occupation) + " is not in the basis");
  return amplitudes_(static_cast<Eigen::Index>(*idx));
}

namespace {

void check_dimension(const CMatrix& s, const FockBasis& basis) {
  const auto m = static_cast<Eigen::Index>(basis.space().size());
  if (s.rows() != m || s.cols() != m) {
    throw InvalidArgument("single-particle matrix is " + std::to_string(s.rows()) + "x" +
                          std::to_string(s.cols()) + ", expected " + std::to_string(m) +
                          "x" + std::to_string(m));
  }
}

Complex lifted_element(const CMatrix& s, const FockBasis& basis, std::size_t row,
                       std::size_t col, CMatrix& scratch) {
  const auto& rmodes = basis.mode_list(row);
  const auto& cmodes = basis.mode_list(col);
  const auto n = static_cast<Eigen::Index>(rmodes.size());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      scratch(i, j) = s(rmodes[static_cast<std::size_t>(i)], cmodes[static_cast<std::size_t>(j)]);
  return permanent(scratch) / (basis.norm_factor(row) * basis.norm_factor(col));
}

}  // namespace

LiftedOperator lift(const CMatrix& s, BasisPtr basis) {
  check_dimension(s, *basis);
  const auto dim = basis->size();
  std::vector<std::size_t> all(dim);
  for (std::size_t i = 0; i < dim; ++i) all[i] = i;
  CMatrix m = lift_block(s, *basis, all, all);
  return {std::move(basis), std::move(m)};
}

CMatrix lift_block(const CMatrix& s, const FockBasis& basis,
                   std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  check_dimension(s, basis);
  const auto n = basis.n_photons();
  CMatrix scratch(n, n);
  CMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows.size(); ++i)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          lifted_element(s, basis, rows[i], cols[j], scratch);
  return out;
}

CVector apply_lifted(const CMatrix& s, const FockState& psi) {
  const auto& basis = psi.basis();
  check_dimension(s, basis);
  const auto& amps = psi.amplitudes();
  std::vector<std::size_t> rows(basis.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (amps(static_cast<Eigen::Index>(j)) != Complex{}) cols.push_back(j);
  if (cols.empty()) return CVector::Zero(amps.size());
  const CMatrix block = lift_block(s, basis, rows, cols);
  CVector sub(static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k)
    sub(static_cast<Eigen::Index>(k)) = amps(static_cast<Eigen::Index>(cols[k]));
  return block * sub;
}

LiftedOperator lift_jz(BasisPtr basis) {
  const auto dim = static_cast<Eigen::Index>(basis->size());
  CMatrix m = CMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    m(i, i) = static_cast<double>(basis->m_tot(static_cast<std::size_t>(i)));
  return {std::move(basis), std::move(m)};
}

LiftedOperator lift_mirror(BasisPtr basis) {
  const auto& space = basis->space();
  const auto dim = static_cast<Eigen::Index>(basis->size());
  CMatrix m = CMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < basis->size(); ++j) {
    const auto& occ = basis->state(j);
    Occupation image(occ.size(), 0);
    for (std::size_t k = 0; k < occ.size(); ++k) image[space.mirror_image(k)] = occ[k];
    const auto i = *basis->index_of(image);
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  }
  return {std::move(basis), std::move(m)};
}

LiftedOperator postselect_projector(BasisPtr basis, std::span<const std::size_t> sub_modes) {
  const auto n_modes = basis->space().size();
  std::vector<bool> keep(n_modes, false);
  for (const auto k : sub_modes) {
    if (k >= n_modes) {
      throw InvalidArgument("postselection mode " + std::to_string(k) + " out of range");
    }
    keep[k] = true;
  }
  if (sub_modes.empty() && basis->n_photons() > 0) {
    throw InvalidArgument("empty postselection mode set with N > 0");
  }
  const auto dim = static_cast<Eigen::Index>(basis->size());
  CMatrix p = CMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const auto& occ = basis->state(i);
    bool supported = true;
    for (std::size_t k = 0; k < n_modes; ++k)
      if (occ[k] > 0 && !keep[k]) supported = false;
    if (supported) p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return {std::move(basis), std::move(p)};
}

LiftedOperator postselect(const LiftedOperator& op, const LiftedOperator& projector) {
  if (op.matrix.rows() != projector.matrix.rows()) {
    throw InvalidArgument("operator and projector live on different bases");
  }
  return {op.basis, projector.matrix * op.matrix * projector.matrix.adjoint()};
}

}  // namespace symprot
