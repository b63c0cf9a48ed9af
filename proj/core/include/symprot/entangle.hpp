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

#ifndef SYMPROT_ENTANGLE_HPP_
#define SYMPROT_ENTANGLE_HPP_

#include <optional>
#include <utility>

#include "symprot/fock.hpp"

namespace symprot {

/// Symmetric coefficient matrix of a two-photon state,
///   |psi> = sum_ij C_ij a_i^dag a_j^dag |0>.
/// With this convention C_ii = <2_i|psi>/sqrt2 and C_ij = <1_i 1_j|psi>/2.
struct TwoPhotonMatrix {
  ModeSpace space;
  CMatrix c;
};

/// Throws InvalidArgument unless the state has exactly two photons.
TwoPhotonMatrix to_matrix(const FockState& state);

/// Inverse of to_matrix; `c` is symmetrized first.
FockState from_matrix(const TwoPhotonMatrix& m);

struct SlaterReport {
  int slater_rank = 0;
  Eigen::VectorXd takagi_values;  // descending, equal to the singular values of C
  CMatrix takagi_vectors;         // unitary U with C = U diag(sigma) U^T
  bool is_single_product = false; // slater_rank <= 2
};

/// Autonne-Takagi factorization via the SVD C = W S V^H: the phase matrix
/// Z = W^H conj(V) is symmetric unitary and commutes with S, so
/// U = W sqrt(Z) gives C = U S U^T.
SlaterReport takagi(const TwoPhotonMatrix& m, double rank_tol = 1e-10);

/// For rank <= 2, modes u, v with C = u v^T + v u^T, i.e. the state is the
/// single product 2 (u.a^dag)(v.a^dag)|0>. nullopt for rank > 2.
std::optional<std::pair<CVector, CVector>> single_product_modes(const SlaterReport& report);

}  // namespace symprot

#endif  // SYMPROT_ENTANGLE_HPP_
