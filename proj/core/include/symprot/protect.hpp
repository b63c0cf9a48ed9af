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

#ifndef SYMPROT_PROTECT_HPP_
#define SYMPROT_PROTECT_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "symprot/fock.hpp"
#include "symprot/scatter.hpp"

namespace symprot {

struct CertificationConfig {
  int n_samples = 64;
  double residual_tol = 1e-10;
  double cluster_tol = 1e-8;
  std::uint64_t seed = 0;
  /// Class of the matrices used for certification. The eigenspace search
  /// always intersects unitary samples and then certifies with this class.
  Unitarity unitarity = Unitarity::Subunitary;
  double genericity_floor = 1e-3;
  /// Sample budget per sector before the search reports Inconclusive.
  int max_search_samples = 32;

  /// Throws InvalidArgument if any field is out of range.
  void check() const;
};

enum class Verdict { Protected, NotProtected, Inconclusive };

const char* to_string(Verdict v);

/// One state against one scattering matrix.
struct SampleEvaluation {
  Complex eigenvalue;  // <psi| S^ |psi>
  /// ||S^ psi - eigenvalue psi|| / sigma_max(S)^N, i.e. measured in units of
  /// ||S^||; equal to the plain residual for unitary S.
  double residual = 0.0;
};

/// Throws InvalidArgument if psi is not normalized or S has the wrong size.
SampleEvaluation evaluate(const FockState& psi, const CMatrix& s);

struct ProtectionReport {
  Verdict verdict = Verdict::Inconclusive;
  double worst_residual = 0.0;
  std::vector<double> residuals;      // one per sample
  std::vector<Complex> eigenvalues;   // one per sample
  std::optional<std::size_t> witness_sample_index;  // set iff NotProtected
  std::vector<SymmetricScattering> samples;
};

/// Evaluates psi against cfg.n_samples generic symmetric matrices drawn from
/// cfg.seed. Protected iff every residual is below cfg.residual_tol;
/// otherwise the witness is the sample with the largest residual.
ProtectionReport certify(const FockState& psi, const CertificationConfig& cfg);

struct ProtectedRay {
  FockState state;  // normalized, first non-negligible amplitude real positive
  int m_tot = 0;
  std::optional<Tau> tau;  // set when the ray is an M_y^ eigenvector
};

/// Protected subspace of dimension > 1 on which every sample acts as a scalar.
struct ProtectedSubspace {
  BasisPtr basis;
  CMatrix vectors;  // orthonormal columns over the full basis
  int m_tot = 0;
};

struct SearchResult {
  Verdict verdict = Verdict::Inconclusive;  // Protected: search completed
  std::vector<ProtectedRay> rays;
  std::vector<ProtectedSubspace> subspaces;
  int samples_used = 0;           // eigenspace-intersection samples, all sectors
  int rejected_candidates = 0;    // survivors that failed final certification
  std::vector<int> inconclusive_sectors;
};

/// Finds every protected ray (and subspace) of N photons over `space`,
/// sector by sector: eigenspaces of the lifted unitary samples are
/// intersected until the candidate set is unchanged for two further samples,
/// then each survivor is certified with fresh samples. Restrict to one
/// m_tot sector with `sector`.
SearchResult find_protected(const ModeSpace& space, int n, const CertificationConfig& cfg,
                            std::optional<int> sector = std::nullopt);

struct UniquenessReport {
  bool unique = false;              // exactly one ray, no subspaces
  double overlap = 0.0;             // |<found|pair power>|
  std::vector<std::int64_t> expected;
  std::vector<std::int64_t> observed;  // monomial coefficients / x_0, rounded
  double rounding_error = 0.0;      // max |x_l/x_0 - round(x_l/x_0)|
  bool coefficients_match = false;
  SearchResult search;
};

/// Searches the m_tot = 0 sector of Hm^N and compares the result with the
/// pair-power state and its (-1)^l C(K,l) coefficient law, K = N/2.
/// Throws InvalidArgument unless space is Hm and N is even.
UniquenessReport verify_uniqueness(const ModeSpace& space, int n,
                                   const CertificationConfig& cfg);

/// Orthonormal basis of span(a) intersected with span(b), for orthonormal
/// column sets a and b: directions whose principal-angle cosine exceeds
/// 1 - tol.
CMatrix intersect_subspaces(const CMatrix& a, const CMatrix& b, double tol);

}  // namespace symprot

#endif  // SYMPROT_PROTECT_HPP_
