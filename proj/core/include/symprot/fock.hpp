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

#ifndef SYMPROT_FOCK_HPP_
#define SYMPROT_FOCK_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symprot/modes.hpp"
#include "symprot/types.hpp"

namespace symprot {

/// Photon count per mode, in the mode order of the owning ModeSpace.
using Occupation = std::vector<int>;

/// Largest photon number accepted by FockBasis::make. 10 unless the
/// SYMPROT_NMAX environment variable holds a positive integer.
int max_photons();

/// "|n1,n2,...>" in the usual ket notation.
std::string ket_label(const Occupation& occupation);

/// All occupation vectors of N photons over a mode space.
///
/// Order: lexicographically decreasing in the counts, i.e. the first mode is
/// filled first. For H0, N=2 this is [|2,0>, |1,1>, |0,2>]; for Hm, N=2 it is
/// exactly [|2000>, |1100>, |1010>, |1001>, |0200>, |0110>, |0101>, |0020>,
/// |0011>, |0002>]. Serialized amplitude vectors always refer to this order.
class FockBasis {
 public:
  /// Throws InvalidArgument if n < 0 or n > max_photons().
  static std::shared_ptr<const FockBasis> make(const ModeSpace& space, int n);

  const ModeSpace& space() const { return space_; }
  int n_photons() const { return n_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<Occupation>& states() const { return states_; }
  const Occupation& state(std::size_t i) const { return states_[i]; }
  std::optional<std::size_t> index_of(const Occupation& occupation) const;

  /// Total angular momentum sum_i n_i m_i of state i.
  int m_tot(std::size_t i) const { return m_tot_[i]; }

  /// Modes of state i listed with multiplicity, e.g. |2,0,1> -> [0,0,2].
  const std::vector<int>& mode_list(std::size_t i) const { return mode_lists_[i]; }

  /// sqrt(prod_i n_i!) of state i.
  double norm_factor(std::size_t i) const { return norm_factors_[i]; }

 private:
  FockBasis(ModeSpace space, int n);

  ModeSpace space_;
  int n_;
  std::vector<Occupation> states_;
  std::map<Occupation, std::size_t> index_;
  std::vector<int> m_tot_;
  std::vector<std::vector<int>> mode_lists_;
  std::vector<double> norm_factors_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;

inline BasisPtr enumerate_basis(const ModeSpace& space, int n) {
  return FockBasis::make(space, n);
}

/// Partition of basis indices by total angular momentum. Keys ascend;
/// indices inside each sector keep the basis order.
std::map<int, std::vector<std::size_t>> sector_split(const FockBasis& basis);

/// Pure state over a Fock basis.
class FockState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Throws InvalidArgument on length mismatch or non-finite amplitudes.
  FockState(BasisPtr basis, CVector amplitudes);

  static FockState basis_state(BasisPtr basis, const Occupation& occupation);

  const BasisPtr& basis_ptr() const { return basis_; }
  const FockBasis& basis() const { return *basis_; }
  const CVector& amplitudes() const { return amplitudes_; }

  bool is_normalized() const {
    return std::abs(amplitudes_.norm() - 1.0) <= kNormTolerance;
  }
  /// Throws InvalidArgument for the zero vector.
  FockState normalized() const;
  /// Normalized, with the first non-negligible amplitude real positive.
  FockState canonical() const;

  Complex amplitude(const Occupation& occupation) const;

 private:
  BasisPtr basis_;
  CVector amplitudes_;
};

/// Dense matrix of a Fock-space operator in the order of `basis`.
struct LiftedOperator {
  BasisPtr basis;
  CMatrix matrix;
};

/// Matrix of the N-photon operator induced by the single-particle matrix S,
/// a_j^dag -> sum_i S_ij a_i^dag. In the orthonormal Fock basis
///   <n'|S^|n> = Per(S[n', n]) / sqrt(prod_i n_i! prod_j n'_j!)
/// where S[n', n] repeats row i n'_i times and column j n_j times.
/// Throws InvalidArgument if S does not match the number of modes.
LiftedOperator lift(const CMatrix& s, BasisPtr basis);

/// The (rows x cols) sub-block of lift(s) for the given basis indices.
CMatrix lift_block(const CMatrix& s, const FockBasis& basis,
                   std::span<const std::size_t> rows,
                   std::span<const std::size_t> cols);

/// lift(s) * psi, evaluating only the columns where psi is non-zero.
CVector apply_lifted(const CMatrix& s, const FockState& psi);

/// Diagonal J_z^ with entries m_tot.
LiftedOperator lift_jz(BasisPtr basis);

/// M_y^ as the permutation of occupation vectors induced by the mode mirror.
LiftedOperator lift_mirror(BasisPtr basis);

/// Diagonal 0/1 projector keeping the states whose photons all sit in
/// `sub_modes`. Throws InvalidArgument for out-of-range modes or an empty
/// mode set with N > 0.
LiftedOperator postselect_projector(BasisPtr basis,
                                    std::span<const std::size_t> sub_modes);

/// P S^ P^dag.
LiftedOperator postselect(const LiftedOperator& op, const LiftedOperator& projector);

}  // namespace symprot

#endif  // SYMPROT_FOCK_HPP_
