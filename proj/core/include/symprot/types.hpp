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

#ifndef SYMPROT_TYPES_HPP_
#define SYMPROT_TYPES_HPP_

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace symprot {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad parameters, dimension
/// mismatch, unknown names). The CLI maps these to usage errors.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A random sample failed a genericity requirement and could not be redrawn
/// within the attempt budget, or a caller handed in a non-generic matrix.
class NonGenericSample : public Error {
 public:
  using Error::Error;
};

/// Frobenius norm of AB - BA.
inline double commutator_norm(const CMatrix& a, const CMatrix& b) {
  return (a * b - b * a).norm();
}

/// Largest singular value.
inline double spectral_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

}  // namespace symprot

#endif  // SYMPROT_TYPES_HPP_
