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

#ifndef SYMPROT_STATES_HPP_
#define SYMPROT_STATES_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symprot/fock.hpp"
#include "symprot/modes.hpp"

namespace symprot {

/// The two-photon catalog: Phi1..Phi3, S1, S2 on H0 and Psi1..Psi4 on Hm.
enum class NamedState { Phi1, Phi2, Phi3, S1, S2, Psi1, Psi2, Psi3, Psi4 };

/// How to construct a catalog state.
///
///   MirrorFock{ns, na}: (a_s^dag)^ns (a_a^dag)^na |0> on H0 with
///                       a_{s,a}^dag = (a_+^dag +- a_-^dag)/sqrt2.
///   PairPower{m, k}:    (a_{m,+}^dag a_{-m,+}^dag - a_{m,-}^dag a_{-m,-}^dag)^k |0>
///                       on Hm(m), N = 2k.
///   Named{which, m}:    one of the two-photon catalog states (m is used by
///                       the Psi states only).
///   Product{factors}:   product state over the direct sum of the factors'
///                       spaces (which must be disjoint).
struct StateRecipe {
  struct MirrorFock {
    int ns = 0;
    int na = 0;
  };
  struct PairPower {
    int m = 1;
    int k = 1;
  };
  struct Named {
    NamedState which = NamedState::Phi3;
    int m = 1;
  };
  struct Product {
    std::vector<StateRecipe> factors;
  };

  std::variant<MirrorFock, PairPower, Named, Product> construction;

  /// Parses "phi3", "psi4", "psi4:m=2", "pair:m=1,N=4",
  /// "mirrorfock:ns=2,na=1" and '*'-joined products of these. Psi states
  /// without an explicit m take `default_m`. Throws InvalidArgument.
  static StateRecipe parse(std::string_view text, int default_m = 1);

  /// Canonical text form, accepted by parse().
  std::string name() const;
  ModeSpace space() const;
  int n_photons() const;
};

/// Normalized state in the canonical basis of recipe.space().
/// Throws InvalidArgument for out-of-range parameters.
FockState build(const StateRecipe& recipe);

/// Creation-operator polynomial: coefficient of prod_i (a_i^dag)^{n_i}.
using IntPolynomial = std::map<Occupation, std::int64_t>;

/// Exact integer expansion of the unnormalized recipe polynomial for the
/// MirrorFock (up to the 2^{-N/2} prefactor) and PairPower families.
IntPolynomial recipe_polynomial(const StateRecipe& recipe);

/// Amplitudes divided by sqrt(prod n_i!): the coefficient of each
/// creation-operator monomial. Entries below `cutoff` are dropped.
std::map<Occupation, Complex> monomial_coefficients(const FockState& state,
                                                    double cutoff = 1e-12);

/// Mirror eigenvalue of a catalog state: (-1)^na for MirrorFock, (-1)^k for
/// PairPower, the tabulated value for Named, the product over factors.
Tau mirror_parity(const StateRecipe& recipe);

struct ProtectedCount {
  int symmetric = 0;
  int antisymmetric = 0;
  int total = 0;
};

/// Number of protected N-photon rays. On H0: N+1 mirror Fock states split by
/// parity. On Hm: one pair-power ray for even N, none for odd N.
/// Throws InvalidArgument for direct-sum spaces or N < 0.
ProtectedCount count_protected(const ModeSpace& space, int n);

/// [(-1)^l C(k, l)] for l = 0..k: helicity-basis coefficients of the unique
/// protected state with 2k photons in Hm.
std::vector<std::int64_t> pair_coefficients(int k);

/// Product state over disjoint spaces; occupations are concatenated.
FockState tensor_product(const FockState& a, const FockState& b);

std::string to_string(NamedState s);
/// Every named catalog state, in declaration order.
std::vector<NamedState> all_named_states();

}  // namespace symprot

#endif  // SYMPROT_STATES_HPP_
