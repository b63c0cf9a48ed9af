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

// Test-only reference implementations. Nothing here calls into the
// permanent/lift code paths it is used to check.
#ifndef SYMPROT_TESTS_ORACLES_HPP_
#define SYMPROT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "symprot/fock.hpp"
#include "symprot/types.hpp"

namespace symprot::oracle {

/// Leibniz sum over all permutations.
inline Complex naive_permanent(const CMatrix& a) {
  const auto n = a.rows();
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Complex total{};
  do {
    Complex prod{1.0, 0.0};
    for (Eigen::Index i = 0; i < n; ++i) prod *= a(i, perm[static_cast<std::size_t>(i)]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Polynomial in commuting creation operators: monomial -> coefficient.
class CreationPolynomial {
 public:
  explicit CreationPolynomial(std::size_t n_modes) : n_modes_(n_modes) {
    terms_[Occupation(n_modes, 0)] = 1.0;
  }

  /// Multiplies by the linear form sum_i coeffs[i] a_i^dag.
  CreationPolynomial& times(const CVector& coeffs) {
    std::map<Occupation, Complex> next;
    for (const auto& [occ, c] : terms_) {
      for (std::size_t i = 0; i < n_modes_; ++i) {
        const Complex w = coeffs(static_cast<Eigen::Index>(i));
        if (w == Complex{}) continue;
        Occupation o = occ;
        ++o[i];
        next[o] += c * w;
      }
    }
    terms_ = std::move(next);
    return *this;
  }

  CreationPolynomial& scale(Complex s) {
    for (auto& [occ, c] : terms_) c *= s;
    return *this;
  }

  /// Amplitudes of poly(a^dag)|0>: (a^dag)^n |0> = sqrt(n!) |n>.
  CVector on_vacuum(const FockBasis& basis) const {
    CVector out = CVector::Zero(static_cast<Eigen::Index>(basis.size()));
    for (const auto& [occ, c] : terms_) {
      double f = 1.0;
      for (int k : occ)
        for (int j = 2; j <= k; ++j) f *= j;
      out(static_cast<Eigen::Index>(*basis.index_of(occ))) += c * std::sqrt(f);
    }
    return out;
  }

 private:
  std::size_t n_modes_;
  std::map<Occupation, Complex> terms_;
};

inline double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Column n of the lifted operator by expanding prod_j (sum_i S_ij a_i^dag)^{n_j}.
inline CMatrix lift_by_expansion(const CMatrix& s, const FockBasis& basis) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  CMatrix out(dim, dim);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& occ = basis.state(col);
    CreationPolynomial p(occ.size());
    double norm = 1.0;
    for (std::size_t j = 0; j < occ.size(); ++j) {
      for (int k = 0; k < occ[j]; ++k) p.times(s.col(static_cast<Eigen::Index>(j)));
      norm *= factorial(occ[j]);
    }
    out.col(static_cast<Eigen::Index>(col)) = p.on_vacuum(basis) / std::sqrt(norm);
  }
  return out;
}

inline Complex gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  const double re = nd(rng);
  return {re, nd(rng)};
}

inline CMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols,
                             double scale = 1.0) {
  CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = scale * gaussian(rng);
  return m;
}

inline CVector random_unit_vector(std::mt19937_64& rng, Eigen::Index n) {
  CVector v = random_matrix(rng, n, 1);
  return v / v.norm();
}

inline CMatrix random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  Eigen::HouseholderQR<CMatrix> qr(random_matrix(rng, n, n));
  return qr.householderQ() * CMatrix::Identity(n, n);
}

}  // namespace symprot::oracle

#endif  // SYMPROT_TESTS_ORACLES_HPP_
