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

#include "symprot/dfs.hpp"

#include <algorithm>
#include <cmath>

namespace symprot {

TimeBinQudit TimeBinQudit::make(CVector coefficients, FockState carrier,
                                const CertificationConfig& cfg) {
  if (coefficients.size() < 2) throw InvalidArgument("a time-bin qudit needs d >= 2");
  if (!coefficients.allFinite() || std::abs(coefficients.norm() - 1.0) > 1e-12) {
    throw InvalidArgument("time-bin coefficients must have unit norm");
  }
  const auto report = certify(carrier, cfg);
  if (report.verdict != Verdict::Protected) {
    throw InvalidArgument("carrier is not symmetry-protected (worst residual " +
                          std::to_string(report.worst_residual) +
                          "); its decoherence would depend on S");
  }
  return TimeBinQudit(std::move(coefficients), std::move(carrier));
}

ChannelOutcome transmit(const TimeBinQudit& qudit, const SymmetricScattering& s) {
  const std::vector<SymmetricScattering> bins(static_cast<std::size_t>(qudit.dimension()), s);
  return transmit_per_bin(qudit, bins);
}

ChannelOutcome transmit_per_bin(const TimeBinQudit& qudit,
                                std::span<const SymmetricScattering> per_bin) {
  if (per_bin.size() != static_cast<std::size_t>(qudit.dimension())) {
    throw InvalidArgument("need one scattering matrix per time bin");
  }
  const auto& psi = qudit.carrier();
  const auto& a = qudit.coefficients();
  Complex overlap{};
  double success = 0.0;
  ChannelOutcome outcome;
  for (std::size_t i = 0; i < per_bin.size(); ++i) {
    if (!(per_bin[i].space() == psi.basis().space())) {
      throw InvalidArgument("scattering matrix and carrier live on different mode spaces");
    }
    // N photons in bin i, vacuum (amplitude 1) in every other bin.
    const CVector out = a(static_cast<Eigen::Index>(i)) * apply_lifted(per_bin[i].matrix(), psi);
    success += out.squaredNorm();
    overlap += std::conj(a(static_cast<Eigen::Index>(i))) * psi.amplitudes().dot(out);
    if (i == 0) outcome.eigenvalue = psi.amplitudes().dot(apply_lifted(per_bin[0].matrix(), psi));
  }
  outcome.success_probability = success;
  outcome.fidelity = success > 0.0 ? std::min(1.0, std::norm(overlap) / success) : 0.0;
  return outcome;
}

double drift_experiment(const TimeBinQudit& qudit, const SymmetricScattering& s1,
                        const SymmetricScattering& s2) {
  std::vector<SymmetricScattering> bins(static_cast<std::size_t>(qudit.dimension()), s2);
  bins.front() = s1;
  return transmit_per_bin(qudit, bins).fidelity;
}

double erasure_capacity(double epsilon, bool two_way) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw InvalidArgument("erasure probability must lie in [0, 1]");
  }
  return two_way ? 1.0 - epsilon : std::max(0.0, 1.0 - 2.0 * epsilon);
}

std::vector<CapacityPoint> capacity_curve(int steps) {
  if (steps < 1) throw InvalidArgument("capacity curve needs at least one step");
  std::vector<CapacityPoint> out;
  for (int i = 0; i <= steps; ++i) {
    const double eps = static_cast<double>(i) / steps;
    out.push_back({eps, erasure_capacity(eps, false), erasure_capacity(eps, true)});
  }
  return out;
}

}  // namespace symprot
