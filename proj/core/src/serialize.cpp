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

#include "symprot/serialize.hpp"

#include <string>

namespace symprot {

namespace {

Json tau_to_json(const std::optional<Tau>& tau) {
  return tau ? Json(to_int(*tau)) : Json(nullptr);
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidArgument("expected a [re, im] pair, got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].is_array() ? j[0].size() : 0);
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw InvalidArgument("ragged matrix row " + std::to_string(i));
    }
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json to_json(const FockState& state) {
  const auto& basis = state.basis();
  Json basis_json = Json::array();
  Json amps = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    basis_json.push_back(basis.state(i));
    amps.push_back(complex_to_json(state.amplitudes()(static_cast<Eigen::Index>(i))));
  }
  return Json{{"schema", kSchemaVersion},
              {"space", basis.space().to_string()},
              {"n", basis.n_photons()},
              {"basis", std::move(basis_json)},
              {"amplitudes", std::move(amps)}};
}

FockState fock_state_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InvalidArgument("state document must be a JSON object");
    if (j.contains("schema") && j.at("schema") != kSchemaVersion) {
      throw InvalidArgument("unsupported schema " + j.at("schema").dump());
    }
    const auto space = ModeSpace::parse(j.at("space").get<std::string>());
    const auto basis = FockBasis::make(space, j.at("n").get<int>());
    const auto& amps_json = j.at("amplitudes");
    if (!amps_json.is_array() || amps_json.size() != basis->size()) {
      throw InvalidArgument("expected " + std::to_string(basis->size()) + " amplitudes");
    }
    if (j.contains("basis")) {
      const auto& listed = j.at("basis");
      if (!listed.is_array() || listed.size() != basis->size()) {
        throw InvalidArgument("basis listing has the wrong length");
      }
      for (std::size_t i = 0; i < basis->size(); ++i) {
        if (listed[i].get<Occupation>() != basis->state(i)) {
          throw InvalidArgument("basis entry " + std::to_string(i) +
                                " does not follow the canonical order");
        }
      }
    }
    CVector amps(static_cast<Eigen::Index>(basis->size()));
    for (std::size_t i = 0; i < basis->size(); ++i)
      amps(static_cast<Eigen::Index>(i)) = complex_from_json(amps_json[i]);
    return FockState(basis, std::move(amps));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed state document: ") + e.what());
  }
}

Json to_json(const ValidationReport& r) {
  return Json{{"schema", kSchemaVersion},
              {"ok", r.ok},
              {"jz_commutator", r.jz_commutator},
              {"mirror_commutator", r.mirror_commutator},
              {"shape_residual", r.shape_residual},
              {"sigma_excess", r.sigma_excess},
              {"tolerance", ValidationReport::kTolerance}};
}

Json to_json(const SymmetricScattering& s) {
  return Json{{"space", s.space().to_string()},
              {"unitarity", s.unitarity() == Unitarity::Unitary ? "unitary" : "subunitary"},
              {"matrix", matrix_to_json(s.matrix())}};
}

Json to_json(const ProtectionReport& r) {
  Json eigenvalues = Json::array();
  for (const auto& z : r.eigenvalues) eigenvalues.push_back(complex_to_json(z));
  return Json{{"schema", kSchemaVersion},
              {"verdict", to_string(r.verdict)},
              {"worst_residual", r.worst_residual},
              {"witness_sample_index",
               r.witness_sample_index ? Json(*r.witness_sample_index) : Json(nullptr)},
              {"residuals", r.residuals},
              {"eigenvalues", std::move(eigenvalues)}};
}

Json to_json(const ProtectedRay& r) {
  return Json{{"m_tot", r.m_tot}, {"tau", tau_to_json(r.tau)}, {"state", to_json(r.state)}};
}

Json to_json(const SearchResult& r) {
  Json rays = Json::array();
  for (const auto& ray : r.rays) rays.push_back(to_json(ray));
  Json subspaces = Json::array();
  for (const auto& s : r.subspaces) {
    subspaces.push_back(Json{{"m_tot", s.m_tot},
                             {"dimension", s.vectors.cols()},
                             {"vectors", matrix_to_json(s.vectors)}});
  }
  return Json{{"schema", kSchemaVersion},
              {"verdict", r.verdict == Verdict::Protected ? "Complete" : to_string(r.verdict)},
              {"n_rays", r.rays.size()},
              {"rays", std::move(rays)},
              {"subspaces", std::move(subspaces)},
              {"samples_used", r.samples_used},
              {"rejected_candidates", r.rejected_candidates},
              {"inconclusive_sectors", r.inconclusive_sectors}};
}

Json to_json(const UniquenessReport& r) {
  return Json{{"schema", kSchemaVersion},
              {"unique", r.unique},
              {"overlap", r.overlap},
              {"expected_coefficients", r.expected},
              {"observed_coefficients", r.observed},
              {"rounding_error", r.rounding_error},
              {"coefficients_match", r.coefficients_match},
              {"search", to_json(r.search)}};
}

Json to_json(const SlaterReport& r) {
  std::vector<double> values(r.takagi_values.data(),
                             r.takagi_values.data() + r.takagi_values.size());
  return Json{{"schema", kSchemaVersion},
              {"slater_rank", r.slater_rank},
              {"takagi_values", values},
              {"is_single_product", r.is_single_product}};
}

Json to_json(const ChannelOutcome& r) {
  return Json{{"success_probability", r.success_probability},
              {"fidelity", r.fidelity},
              {"eigenvalue", complex_to_json(r.eigenvalue)}};
}

Json to_json(const ProtectedCount& c) {
  return Json{{"symmetric", c.symmetric}, {"antisymmetric", c.antisymmetric}, {"total", c.total}};
}

}  // namespace symprot
