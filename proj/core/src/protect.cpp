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

#include "symprot/protect.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "symprot/states.hpp"

namespace symprot {

namespace {

constexpr int kStableRounds = 2;
constexpr double kMirrorTol = 1e-8;

// Eigenspaces of a normal matrix from its Schur vectors, clustered by
// eigenvalue. Returns nullopt when two distinct clusters sit closer than
// `separation`, which makes the sample useless for intersection.
std::optional<std::vector<CMatrix>> eigenspaces(const CMatrix& op, double cluster_tol,
                                                double separation) {
  const auto d = op.rows();
  if (d == 0) return std::vector<CMatrix>{};
  Eigen::ComplexSchur<CMatrix> schur(op);
  const CMatrix& t = schur.matrixT();
  const CMatrix& u = schur.matrixU();
  const double off = t.triangularView<Eigen::StrictlyUpper>().toDenseMatrix().norm();
  if (off > 1e-8 * std::max(1.0, t.norm())) {
    throw Error("eigenspace search expects a normal lifted matrix; Schur off-diagonal norm " +
                std::to_string(off));
  }

  std::vector<Eigen::Index> cluster(static_cast<std::size_t>(d));
  std::iota(cluster.begin(), cluster.end(), 0);
  const auto root = [&](Eigen::Index i) {
    while (cluster[static_cast<std::size_t>(i)] != i) i = cluster[static_cast<std::size_t>(i)];
    return i;
  };
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      if (std::abs(t(i, i) - t(j, j)) <= cluster_tol) {
        const auto a = root(i);
        const auto b = root(j);
        cluster[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      if (root(i) != root(j) && std::abs(t(i, i) - t(j, j)) <= separation) return std::nullopt;
    }
  }

  std::vector<CMatrix> spaces;
  std::vector<Eigen::Index> roots;
  for (Eigen::Index i = 0; i < d; ++i) {
    const auto r = root(i);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      spaces.emplace_back(u.col(i));
    } else {
      auto& m = spaces[static_cast<std::size_t>(it - roots.begin())];
      m.conservativeResize(Eigen::NoChange, m.cols() + 1);
      m.col(m.cols() - 1) = u.col(i);
    }
  }
  return spaces;
}

std::vector<Eigen::Index> signature(const std::vector<CMatrix>& spaces) {
  std::vector<Eigen::Index> dims;
  for (const auto& s : spaces) dims.push_back(s.cols());
  std::sort(dims.begin(), dims.end());
  return dims;
}

std::optional<Tau> mirror_eigenvalue(const FockState& psi) {
  const CVector image = lift_mirror(psi.basis_ptr()).matrix * psi.amplitudes();
  if ((image - psi.amplitudes()).norm() < kMirrorTol) return Tau::Plus;
  if ((image + psi.amplitudes()).norm() < kMirrorTol) return Tau::Minus;
  return std::nullopt;
}

std::uint64_t sector_stream(int m_tot) {
  return 0x5EC7000ULL + static_cast<std::uint64_t>(static_cast<std::int64_t>(m_tot) + (1 << 20));
}

struct SectorOutcome {
  std::vector<CMatrix> candidates;  // over the sector indices
  int samples = 0;
  bool stabilized = false;
};

SectorOutcome intersect_sector(const ModeSpace& space, const FockBasis& basis,
                               const std::vector<std::size_t>& idx,
                               const CertificationConfig& cfg, int m_tot) {
  ScatterSampler sampler(mix_seed(cfg.seed, sector_stream(m_tot)), Unitarity::Unitary,
                         cfg.genericity_floor);
  const auto next_spaces = [&](SectorOutcome& out) {
    for (int attempt = 0; attempt < ScatterSampler::kMaxAttempts; ++attempt) {
      const auto s = sampler.sample(space);
      const CMatrix block = lift_block(s.matrix(), basis, idx, idx);
      if (auto spaces = eigenspaces(block, cfg.cluster_tol, cfg.genericity_floor)) {
        ++out.samples;
        return std::move(*spaces);
      }
    }
    throw NonGenericSample("could not draw a sample with separated lifted eigenvalues");
  };

  SectorOutcome out;
  out.candidates = next_spaces(out);
  auto previous = signature(out.candidates);
  int unchanged = -1;  // the first intersection does not count as a repeat
  while (out.samples < cfg.max_search_samples) {
    const auto spaces = next_spaces(out);
    std::vector<CMatrix> next;
    for (const auto& c : out.candidates) {
      for (const auto& f : spaces) {
        CMatrix shared = intersect_subspaces(c, f, cfg.cluster_tol);
        if (shared.cols() > 0) next.push_back(std::move(shared));
      }
    }
    out.candidates = std::move(next);
    const auto sig = signature(out.candidates);
    unchanged = (sig == previous && unchanged >= 0) ? unchanged + 1 : 0;
    previous = sig;
    if (out.candidates.empty() || unchanged >= kStableRounds) {
      out.stabilized = true;
      break;
    }
  }
  return out;
}

FockState embed(const BasisPtr& basis, const std::vector<std::size_t>& idx, const CVector& v) {
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(basis->size()));
  for (std::size_t k = 0; k < idx.size(); ++k)
    amps(static_cast<Eigen::Index>(idx[k])) = v(static_cast<Eigen::Index>(k));
  return FockState(basis, std::move(amps));
}

bool subspace_is_protected(const ModeSpace& space, const FockBasis& basis,
                           const std::vector<std::size_t>& idx, const CMatrix& q,
                           const CertificationConfig& cfg, std::uint64_t stream) {
  ScatterSampler sampler(mix_seed(cfg.seed, stream), cfg.unitarity, cfg.genericity_floor);
  const auto d = q.cols();
  for (int k = 0; k < cfg.n_samples; ++k) {
    const auto s = sampler.sample(space);
    const double scale = std::pow(spectral_norm(s.matrix()), basis.n_photons());
    const CMatrix lq = lift_block(s.matrix(), basis, idx, idx) * q;
    const CMatrix restricted = q.adjoint() * lq;
    const Complex scalar = restricted.trace() / static_cast<double>(d);
    const double leak = (lq - q * restricted).norm();
    const double spread = (restricted - scalar * CMatrix::Identity(d, d)).norm();
    if (scale > 0 && (leak + spread) / scale >= cfg.residual_tol) return false;
  }
  return true;
}

bool ray_less(const ProtectedRay& a, const ProtectedRay& b) {
  if (a.m_tot != b.m_tot) return a.m_tot > b.m_tot;
  const auto& x = a.state.amplitudes();
  const auto& y = b.state.amplitudes();
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double xr = std::round(x(i).real() * 1e9);
    const double yr = std::round(y(i).real() * 1e9);
    if (xr != yr) return xr > yr;
    const double xi = std::round(x(i).imag() * 1e9);
    const double yi = std::round(y(i).imag() * 1e9);
    if (xi != yi) return xi > yi;
  }
  return false;
}

}  // namespace

void CertificationConfig::check() const {
  if (n_samples < 3) throw InvalidArgument("n_samples must be >= 3");
  if (!(residual_tol > 0) || !(cluster_tol > 0)) {
    throw InvalidArgument("tolerances must be positive");
  }
  if (!(genericity_floor > 0) || genericity_floor >= 1) {
    throw InvalidArgument("genericity floor must lie in (0, 1)");
  }
  if (max_search_samples < 4) throw InvalidArgument("max_search_samples must be >= 4");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Protected: return "Protected";
    case Verdict::NotProtected: return "NotProtected";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

SampleEvaluation evaluate(const FockState& psi, const CMatrix& s) {
  if (!psi.is_normalized()) throw InvalidArgument("certification needs a normalized state");
  const CVector phi = apply_lifted(s, psi);
  const Complex lambda = psi.amplitudes().dot(phi);  // conjugates the first argument
  const double scale = std::pow(spectral_norm(s), psi.basis().n_photons());
  const double raw = (phi - lambda * psi.amplitudes()).norm();
  return {lambda, scale > 0 ? raw / scale : raw};
}

ProtectionReport certify(const FockState& psi, const CertificationConfig& cfg) {
  cfg.check();
  if (!psi.is_normalized()) throw InvalidArgument("certification needs a normalized state");
  ScatterSampler sampler(mix_seed(cfg.seed, 1), cfg.unitarity, cfg.genericity_floor);
  ProtectionReport report;
  std::size_t worst = 0;
  for (int k = 0; k < cfg.n_samples; ++k) {
    auto s = sampler.sample(psi.basis().space());
    const auto e = evaluate(psi, s.matrix());
    report.residuals.push_back(e.residual);
    report.eigenvalues.push_back(e.eigenvalue);
    report.samples.push_back(std::move(s));
    if (e.residual > report.residuals[worst]) worst = static_cast<std::size_t>(k);
  }
  report.worst_residual = report.residuals[worst];
  if (report.worst_residual < cfg.residual_tol) {
    report.verdict = Verdict::Protected;
  } else {
    report.verdict = Verdict::NotProtected;
    report.witness_sample_index = worst;
  }
  return report;
}

CMatrix intersect_subspaces(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.cols() == 0 || b.cols() == 0) return CMatrix(a.rows(), 0);
  Eigen::JacobiSVD<CMatrix> svd(a.adjoint() * b, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  Eigen::Index k = 0;
  while (k < sv.size() && sv(k) > 1.0 - tol) ++k;
  if (k == 0) return CMatrix(a.rows(), 0);
  CMatrix shared = a * svd.matrixU().leftCols(k);
  Eigen::HouseholderQR<CMatrix> qr(shared);
  return qr.householderQ() * CMatrix::Identity(shared.rows(), k);
}

SearchResult find_protected(const ModeSpace& space, int n, const CertificationConfig& cfg,
                            std::optional<int> sector) {
  cfg.check();
  const auto basis = FockBasis::make(space, n);
  const auto sectors = sector_split(*basis);
  SearchResult result;
  std::uint64_t certify_stream = 0;

  for (auto it = sectors.rbegin(); it != sectors.rend(); ++it) {
    const int m_tot = it->first;
    if (sector && *sector != m_tot) continue;
    const auto& idx = it->second;
    auto outcome = intersect_sector(space, *basis, idx, cfg, m_tot);
    result.samples_used += outcome.samples;
    if (!outcome.stabilized) {
      result.inconclusive_sectors.push_back(m_tot);
      continue;
    }
    for (const auto& q : outcome.candidates) {
      ++certify_stream;
      if (q.cols() == 1) {
        FockState ray = embed(basis, idx, q.col(0)).canonical();
        CertificationConfig ray_cfg = cfg;
        ray_cfg.seed = mix_seed(cfg.seed, 0xCE47ULL + certify_stream);
        if (certify(ray, ray_cfg).verdict == Verdict::Protected) {
          auto tau = mirror_eigenvalue(ray);
          result.rays.push_back({std::move(ray), m_tot, tau});
        } else {
          ++result.rejected_candidates;
        }
      } else if (subspace_is_protected(space, *basis, idx, q, cfg, 0xCE47ULL + certify_stream)) {
        CMatrix full = CMatrix::Zero(static_cast<Eigen::Index>(basis->size()), q.cols());
        for (std::size_t k = 0; k < idx.size(); ++k)
          full.row(static_cast<Eigen::Index>(idx[k])) = q.row(static_cast<Eigen::Index>(k));
        result.subspaces.push_back({basis, std::move(full), m_tot});
      } else {
        ++result.rejected_candidates;
      }
    }
  }
  std::stable_sort(result.rays.begin(), result.rays.end(), ray_less);
  result.verdict = result.inconclusive_sectors.empty() ? Verdict::Protected
                                                       : Verdict::Inconclusive;
  return result;
}

UniquenessReport verify_uniqueness(const ModeSpace& space, int n,
                                   const CertificationConfig& cfg) {
  if (!space.is_hm()) throw InvalidArgument("uniqueness check needs an Hm space");
  if (n < 0 || n % 2 != 0) throw InvalidArgument("uniqueness check needs an even N");
  const int k = n / 2;
  const int m = space.blocks()[0].m;

  UniquenessReport report;
  report.search = find_protected(space, n, cfg, 0);
  report.expected = pair_coefficients(k);
  report.unique = report.search.verdict == Verdict::Protected &&
                  report.search.rays.size() == 1 && report.search.subspaces.empty();
  if (report.search.rays.empty()) return report;

  const FockState& found = report.search.rays.front().state;
  const FockState expected = build(StateRecipe{StateRecipe::PairPower{m, k}});
  report.overlap = std::abs(found.amplitudes().dot(expected.amplitudes()));

  const auto coeffs = monomial_coefficients(found, 1e-9);
  const Complex x0 = found.amplitude({k, 0, k, 0}) / found.basis().norm_factor(
                         *found.basis().index_of({k, 0, k, 0}));
  bool only_expected_monomials = std::abs(x0) > 1e-9;
  for (const auto& [occ, c] : coeffs) {
    const bool pair_pattern = occ[0] == occ[2] && occ[1] == occ[3] && occ[0] + occ[1] == k;
    if (!pair_pattern) only_expected_monomials = false;
  }
  if (only_expected_monomials) {
    for (int l = 0; l <= k; ++l) {
      const Occupation occ{k - l, l, k - l, l};
      const auto it = coeffs.find(occ);
      const Complex ratio = it == coeffs.end() ? Complex{} : it->second / x0;
      const double rounded = std::round(ratio.real());
      report.rounding_error =
          std::max(report.rounding_error, std::abs(ratio - Complex{rounded, 0.0}));
      report.observed.push_back(static_cast<std::int64_t>(rounded));
    }
  }
  report.coefficients_match = only_expected_monomials && report.rounding_error < 1e-6 &&
                              report.observed == report.expected;
  return report;
}

}  // namespace symprot
