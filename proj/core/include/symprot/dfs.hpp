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

#ifndef SYMPROT_DFS_HPP_
#define SYMPROT_DFS_HPP_

#include <span>
#include <vector>

#include "symprot/fock.hpp"
#include "symprot/protect.hpp"
#include "symprot/scatter.hpp"

namespace symprot {

/// sum_i a_i P(t_i)|0>: one protected N-photon carrier in a superposition of
/// d time bins. Each bin is a separate copy of the carrier's mode space.
class TimeBinQudit {
 public:
  /// Throws InvalidArgument if d < 2, the coefficients are not unit norm,
  /// or the carrier does not certify as Protected under `cfg`.
  static TimeBinQudit make(CVector coefficients, FockState carrier,
                           const CertificationConfig& cfg = {});

  int dimension() const { return static_cast<int>(coefficients_.size()); }
  const CVector& coefficients() const { return coefficients_; }
  const FockState& carrier() const { return carrier_; }

 private:
  TimeBinQudit(CVector coefficients, FockState carrier)
      : coefficients_(std::move(coefficients)), carrier_(std::move(carrier)) {}

  CVector coefficients_;
  FockState carrier_;
};

struct ChannelOutcome {
  double success_probability = 0.0;  // all N photons found in one bin
  double fidelity = 0.0;             // with the input, after postselection
  Complex eigenvalue;                // carrier eigenvalue under the (first) S
};

/// Static scatterer: the same S acts on every bin.
ChannelOutcome transmit(const TimeBinQudit& qudit, const SymmetricScattering& s);

/// One scattering matrix per bin. Throws InvalidArgument on a count or
/// space mismatch.
ChannelOutcome transmit_per_bin(const TimeBinQudit& qudit,
                                std::span<const SymmetricScattering> per_bin);

/// Scatterer drifts after the first bin: S_1 on bin 1, S_2 on the rest.
/// Returns the post-postselection fidelity.
double drift_experiment(const TimeBinQudit& qudit, const SymmetricScattering& s1,
                        const SymmetricScattering& s2);

/// Quantum capacity of the erasure channel with erasure probability eps:
/// max(0, 1 - 2 eps) one-way, 1 - eps with two-way classical communication.
/// Throws InvalidArgument unless 0 <= eps <= 1.
double erasure_capacity(double epsilon, bool two_way);

struct CapacityPoint {
  double epsilon = 0.0;
  double one_way = 0.0;
  double two_way = 0.0;
};

/// eps = 0, 1/steps, ..., 1.
std::vector<CapacityPoint> capacity_curve(int steps = 100);

}  // namespace symprot

#endif  // SYMPROT_DFS_HPP_
