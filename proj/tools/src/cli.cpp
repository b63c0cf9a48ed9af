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

#include "symprot/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symprot/symprot.hpp"

namespace symprot::cli {

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::string output = "json";
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "Seed for every random draw")->capture_default_str();
  sub->add_option("--output", c.output, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
}

struct CertifyOptions {
  int samples = 64;
  double residual_tol = 1e-10;
  double cluster_tol = 1e-8;
  double floor = 1e-3;
  std::string unitarity = "subunitary";
};

void add_certify_options(CLI::App* sub, CertifyOptions& o) {
  sub->add_option("--samples", o.samples, "Number of random symmetric samples")
      ->capture_default_str();
  sub->add_option("--residual-tol", o.residual_tol, "Residual tolerance")->capture_default_str();
  sub->add_option("--cluster-tol", o.cluster_tol, "Eigenvalue clustering tolerance")
      ->capture_default_str();
  sub->add_option("--floor", o.floor, "Genericity floor for samples")->capture_default_str();
  sub->add_option("--unitarity", o.unitarity, "Sample family used for certification")
      ->check(CLI::IsMember({"unitary", "subunitary"}))
      ->capture_default_str();
}

CertificationConfig make_config(const CertifyOptions& o, const Common& c) {
  CertificationConfig cfg;
  cfg.n_samples = o.samples;
  cfg.residual_tol = o.residual_tol;
  cfg.cluster_tol = o.cluster_tol;
  cfg.genericity_floor = o.floor;
  cfg.seed = c.seed;
  cfg.unitarity = o.unitarity == "unitary" ? Unitarity::Unitary : Unitarity::Subunitary;
  return cfg;
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string num(double v) { return fmt("%.17g", v); }

std::string complex_pretty(Complex z) {
  return fmt("%+.9f", z.real()) + fmt("%+.9fi", z.imag());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

struct ResolvedState {
  std::string name;
  FockState state;
  std::optional<StateRecipe> recipe;
};

int default_m(const std::optional<std::string>& space) {
  if (!space) return 1;
  const auto s = ModeSpace::parse(*space);
  return s.is_hm() ? s.blocks()[0].m : 1;
}

ResolvedState resolve_state(const std::string& text, const std::optional<std::string>& space) {
  std::optional<ResolvedState> r;
  const bool is_file = text.rfind("file:", 0) == 0 ||
                       (text.size() > 5 && text.compare(text.size() - 5, 5, ".json") == 0);
  if (is_file) {
    const std::string path = text.rfind("file:", 0) == 0 ? text.substr(5) : text;
    auto state = fock_state_from_json(parse_json_file(path));
    r = ResolvedState{path, std::move(state), std::nullopt};
  } else {
    auto recipe = StateRecipe::parse(text, default_m(space));
    auto state = build(recipe);
    r = ResolvedState{recipe.name(), std::move(state), recipe};
  }
  if (space && !(ModeSpace::parse(*space) == r->state.basis().space())) {
    throw InvalidArgument("state '" + r->name + "' lives on " +
                          r->state.basis().space().to_string() + ", not " + *space);
  }
  return std::move(*r);
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void print_state_table(std::ostream& out, const FockState& psi, const std::string& indent = "  ") {
  std::size_t width = 3;
  for (std::size_t i = 0; i < psi.basis().size(); ++i)
    width = std::max(width, ket_label(psi.basis().state(i)).size());
  out << indent << "ket" << std::string(width - 3 + 2, ' ') << "amplitude\n";
  for (std::size_t i = 0; i < psi.basis().size(); ++i) {
    const Complex a = psi.amplitudes()(static_cast<Eigen::Index>(i));
    if (std::abs(a) <= 1e-12) continue;
    const auto label = ket_label(psi.basis().state(i));
    out << indent << label << std::string(width - label.size() + 2, ' ') << complex_pretty(a)
        << '\n';
  }
}

void print_state_csv_rows(std::ostream& out, const std::string& prefix, const FockState& psi) {
  for (std::size_t i = 0; i < psi.basis().size(); ++i) {
    const Complex a = psi.amplitudes()(static_cast<Eigen::Index>(i));
    if (std::abs(a) <= 1e-12) continue;
    out << prefix << '"' << ket_label(psi.basis().state(i)) << "\"," << num(a.real()) << ','
        << num(a.imag()) << '\n';
  }
}

std::string tau_text(const std::optional<Tau>& tau) {
  if (!tau) return "none";
  return *tau == Tau::Plus ? "+1" : "-1";
}

// ---------------------------------------------------------------- certify

struct CertifyCmd {
  Common common;
  CertifyOptions opts;
  std::optional<std::string> space;
  std::string state;
  std::optional<std::string> expect;
};

int do_certify(const CertifyCmd& c, std::ostream& out) {
  const auto resolved = resolve_state(c.state, c.space);
  const auto report = certify(resolved.state, make_config(c.opts, c.common));
  if (c.common.output == "json") {
    Json j = to_json(report);
    Json head{{"schema", kSchemaVersion},
              {"state", resolved.name},
              {"space", resolved.state.basis().space().to_string()},
              {"n", resolved.state.basis().n_photons()},
              {"seed", c.common.seed},
              {"samples", c.opts.samples},
              {"unitarity", c.opts.unitarity}};
    for (auto& [k, v] : j.items())
      if (k != "schema") head[k] = v;
    print_json(out, head);
  } else if (c.common.output == "csv") {
    out << "sample,residual,eigenvalue_re,eigenvalue_im\n";
    for (std::size_t k = 0; k < report.residuals.size(); ++k) {
      out << k << ',' << num(report.residuals[k]) << ',' << num(report.eigenvalues[k].real())
          << ',' << num(report.eigenvalues[k].imag()) << '\n';
    }
  } else {
    out << "state   " << resolved.name << " on " << resolved.state.basis().space().to_string()
        << ", N = " << resolved.state.basis().n_photons() << '\n';
    print_state_table(out, resolved.state);
    out << "verdict " << to_string(report.verdict) << " (" << report.residuals.size() << ' '
        << c.opts.unitarity << " samples, seed " << c.common.seed << ")\n";
    out << "worst residual " << fmt("%.3e", report.worst_residual) << '\n';
    if (report.witness_sample_index) {
      out << "witness sample " << *report.witness_sample_index << '\n';
    } else if (!report.eigenvalues.empty()) {
      out << "eigenvalue on sample 0 " << complex_pretty(report.eigenvalues.front()) << '\n';
    }
  }
  if (c.expect) {
    const bool want_protected = *c.expect == "protected";
    const bool got_protected = report.verdict == Verdict::Protected;
    if (want_protected != got_protected) return kExpectationFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------- search

struct SearchCmd {
  Common common;
  CertifyOptions opts;
  std::string space;
  int n = 0;
  std::optional<int> sector;
  int max_samples = 32;
  bool uniqueness = false;
};

void print_search_pretty(std::ostream& out, const SearchResult& r) {
  out << "search " << (r.verdict == Verdict::Protected ? "complete" : "inconclusive") << ": "
      << r.rays.size() << " protected ray(s), " << r.subspaces.size()
      << " protected subspace(s), " << r.samples_used << " samples\n";
  for (std::size_t i = 0; i < r.rays.size(); ++i) {
    out << "ray " << i << "  m_tot = " << r.rays[i].m_tot << "  tau = " << tau_text(r.rays[i].tau)
        << '\n';
    print_state_table(out, r.rays[i].state, "    ");
  }
  for (const auto& s : r.subspaces)
    out << "subspace m_tot = " << s.m_tot << " dimension " << s.vectors.cols() << '\n';
  for (int m : r.inconclusive_sectors) out << "inconclusive sector m_tot = " << m << '\n';
}

int do_search(const SearchCmd& c, std::ostream& out) {
  const auto space = ModeSpace::parse(c.space);
  auto cfg = make_config(c.opts, c.common);
  cfg.max_search_samples = c.max_samples;
  if (c.uniqueness) {
    const auto report = verify_uniqueness(space, c.n, cfg);
    if (c.common.output == "json") {
      print_json(out, to_json(report));
    } else if (c.common.output == "csv") {
      out << "l,expected,observed\n";
      for (std::size_t l = 0; l < report.expected.size(); ++l) {
        out << l << ',' << report.expected[l] << ','
            << (l < report.observed.size() ? std::to_string(report.observed[l]) : "") << '\n';
      }
    } else {
      print_search_pretty(out, report.search);
      out << "unique " << (report.unique ? "yes" : "no") << ", overlap with pair state "
          << fmt("%.12f", report.overlap) << ", coefficients "
          << (report.coefficients_match ? "match" : "differ") << '\n';
    }
    return kOk;
  }
  const auto result = find_protected(space, c.n, cfg, c.sector);
  if (c.common.output == "json") {
    print_json(out, to_json(result));
  } else if (c.common.output == "csv") {
    out << "ray,m_tot,tau,ket,re,im\n";
    for (std::size_t i = 0; i < result.rays.size(); ++i) {
      print_state_csv_rows(out,
                           std::to_string(i) + ',' + std::to_string(result.rays[i].m_tot) + ',' +
                               tau_text(result.rays[i].tau) + ',',
                           result.rays[i].state);
    }
  } else {
    print_search_pretty(out, result);
  }
  return kOk;
}

// ---------------------------------------------------------------- catalog

struct CatalogCmd {
  Common common;
  std::optional<std::string> state;
  std::optional<std::string> space;
  bool count = false;
  int n = 2;
};

int do_catalog(const CatalogCmd& c, std::ostream& out) {
  if (c.count) {
    if (!c.space) throw InvalidArgument("--count needs --space");
    const auto count = count_protected(ModeSpace::parse(*c.space), c.n);
    if (c.common.output == "json") {
      Json j{{"schema", kSchemaVersion}, {"space", *c.space}, {"n", c.n}};
      const Json counts = to_json(count);
      for (const auto& [k, v] : counts.items()) j[k] = v;
      print_json(out, j);
    } else if (c.common.output == "csv") {
      out << "space,n,symmetric,antisymmetric,total\n"
          << *c.space << ',' << c.n << ',' << count.symmetric << ',' << count.antisymmetric << ','
          << count.total << '\n';
    } else {
      out << "protected states on " << *c.space << " with N = " << c.n << ": " << count.total
          << " (" << count.symmetric << " symmetric, " << count.antisymmetric
          << " antisymmetric)\n";
    }
    return kOk;
  }

  std::vector<ResolvedState> entries;
  if (c.state) {
    entries.push_back(resolve_state(*c.state, c.space));
  } else {
    std::optional<ModeSpace> filter;
    if (c.space) {
      filter = ModeSpace::parse(*c.space);
      if (!filter->is_single_block()) {
        throw InvalidArgument("the catalog lists states on h0 or hm:<m> only");
      }
    }
    for (const auto s : all_named_states()) {
      const auto name = to_string(s);
      const bool on_hm = name.rfind("psi", 0) == 0;
      if (filter && filter->is_hm() != on_hm) continue;
      entries.push_back(resolve_state(name, on_hm ? c.space : std::nullopt));
    }
  }
  const auto parity = [](const ResolvedState& e) -> std::optional<Tau> {
    if (e.recipe) return mirror_parity(*e.recipe);
    return std::nullopt;
  };
  if (c.common.output == "json") {
    Json list = Json::array();
    for (const auto& e : entries) {
      const auto tau = parity(e);
      list.push_back(Json{{"name", e.name},
                          {"space", e.state.basis().space().to_string()},
                          {"n", e.state.basis().n_photons()},
                          {"tau", tau ? Json(to_int(*tau)) : Json(nullptr)},
                          {"state", to_json(e.state)}});
    }
    print_json(out, Json{{"schema", kSchemaVersion}, {"states", std::move(list)}});
  } else if (c.common.output == "csv") {
    out << "name,space,n,tau,ket,re,im\n";
    for (const auto& e : entries) {
      print_state_csv_rows(out,
                           e.name + ',' + e.state.basis().space().to_string() + ',' +
                               std::to_string(e.state.basis().n_photons()) + ',' +
                               tau_text(parity(e)) + ',',
                           e.state);
    }
  } else {
    for (const auto& e : entries) {
      out << e.name << "  (" << e.state.basis().space().to_string()
          << ", N = " << e.state.basis().n_photons() << ", tau = " << tau_text(parity(e))
          << ")\n";
      print_state_table(out, e.state);
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- entangle

struct EntangleCmd {
  Common common;
  std::string state;
  std::optional<std::string> space;
};

int do_entangle(const EntangleCmd& c, std::ostream& out) {
  const auto resolved = resolve_state(c.state, c.space);
  const auto m = to_matrix(resolved.state);
  const auto report = takagi(m);
  const auto modes = single_product_modes(report);
  if (c.common.output == "json") {
    Json j{{"schema", kSchemaVersion},
           {"state", resolved.name},
           {"space", m.space.to_string()}};
    const Json slater = to_json(report);
    for (const auto& [k, v] : slater.items())
      if (k != "schema") j[k] = v;
    if (modes) {
      Json u = Json::array(), v = Json::array();
      for (Eigen::Index i = 0; i < modes->first.size(); ++i) {
        u.push_back(complex_to_json(modes->first(i)));
        v.push_back(complex_to_json(modes->second(i)));
      }
      j["product_modes"] = Json::array({std::move(u), std::move(v)});
    } else {
      j["product_modes"] = nullptr;
    }
    print_json(out, j);
  } else if (c.common.output == "csv") {
    out << "index,takagi_value\n";
    for (Eigen::Index i = 0; i < report.takagi_values.size(); ++i)
      out << i << ',' << num(report.takagi_values(i)) << '\n';
  } else {
    out << "state " << resolved.name << " on " << m.space.to_string() << '\n';
    out << "Slater rank " << report.slater_rank << ", "
        << (report.is_single_product ? "single product of two photons"
                                     : "not a single product")
        << '\n';
    out << "Takagi values";
    for (Eigen::Index i = 0; i < report.takagi_values.size(); ++i)
      out << ' ' << fmt("%.9f", report.takagi_values(i));
    out << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- dfs

struct DfsCmd {
  Common common;
  CertifyOptions opts;
  std::string carrier = "pair:m=1,N=2";
  int d = 2;
  std::optional<double> loss;
  std::optional<std::string> curve;
  int steps = 100;
};

void write_curve_csv(std::ostream& out, int steps) {
  out << "epsilon,one_way,two_way\n";
  for (const auto& p : capacity_curve(steps))
    out << num(p.epsilon) << ',' << num(p.one_way) << ',' << num(p.two_way) << '\n';
}

int do_dfs(const DfsCmd& c, std::ostream& out) {
  if (c.d < 2) throw InvalidArgument("--d must be at least 2");
  if (c.loss && !(*c.loss >= 0.0 && *c.loss < 1.0)) {
    throw InvalidArgument("--loss must lie in [0, 1)");
  }
  const auto resolved = resolve_state(c.carrier, std::nullopt);
  const auto cfg = make_config(c.opts, c.common);
  const CVector coeffs =
      CVector::Constant(c.d, Complex(1.0 / std::sqrt(static_cast<double>(c.d))));
  const auto qudit = TimeBinQudit::make(coeffs, resolved.state, cfg);
  const auto& space = resolved.state.basis().space();
  const int n = resolved.state.basis().n_photons();

  ScatterSampler sampler(mix_seed(c.common.seed, 0xDF5),
                         c.loss ? Unitarity::Unitary : Unitarity::Subunitary, c.opts.floor);
  auto s = sampler.sample(space);
  if (c.loss && *c.loss > 0.0) s = s.scaled(std::pow(1.0 - *c.loss, 1.0 / (2.0 * n)));
  const auto outcome = transmit(qudit, s);
  const double eps = std::clamp(1.0 - outcome.success_probability, 0.0, 1.0);

  if (c.curve) {
    std::ofstream file(*c.curve);
    if (!file) throw InvalidArgument("cannot write '" + *c.curve + "'");
    write_curve_csv(file, c.steps);
  }
  if (c.common.output == "json") {
    print_json(out, Json{{"schema", kSchemaVersion},
                         {"carrier", resolved.name},
                         {"space", space.to_string()},
                         {"n", n},
                         {"d", c.d},
                         {"seed", c.common.seed},
                         {"loss", c.loss ? Json(*c.loss) : Json(nullptr)},
                         {"outcome", to_json(outcome)},
                         {"erasure_probability", eps},
                         {"capacity", Json{{"one_way", erasure_capacity(eps, false)},
                                           {"two_way", erasure_capacity(eps, true)}}},
                         {"scattering", to_json(s)}});
  } else if (c.common.output == "csv") {
    write_curve_csv(out, c.steps);
  } else {
    out << "carrier " << resolved.name << " on " << space.to_string() << ", N = " << n
        << ", d = " << c.d << '\n';
    out << "success probability " << fmt("%.12f", outcome.success_probability) << '\n';
    out << "fidelity            " << fmt("%.12f", outcome.fidelity) << '\n';
    out << "eigenvalue          " << complex_pretty(outcome.eigenvalue) << '\n';
    out << "erasure capacity    one-way " << fmt("%.6f", erasure_capacity(eps, false))
        << ", two-way " << fmt("%.6f", erasure_capacity(eps, true)) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- capacity

struct CapacityCmd {
  Common common;
  std::optional<double> eps;
  bool two_way = false;
  int steps = 100;
};

int do_capacity(const CapacityCmd& c, std::ostream& out) {
  if (c.eps) {
    const double value = erasure_capacity(*c.eps, c.two_way);
    if (c.common.output == "json") {
      print_json(out, Json{{"schema", kSchemaVersion},
                           {"epsilon", *c.eps},
                           {"two_way", c.two_way},
                           {"capacity", value}});
    } else if (c.common.output == "csv") {
      out << "epsilon,two_way,capacity\n"
          << num(*c.eps) << ',' << (c.two_way ? "true" : "false") << ',' << num(value) << '\n';
    } else {
      out << (c.two_way ? "two-way" : "one-way") << " erasure capacity at epsilon = "
          << num(*c.eps) << ": " << num(value) << '\n';
    }
    return kOk;
  }
  if (c.common.output == "json") {
    Json points = Json::array();
    for (const auto& p : capacity_curve(c.steps)) {
      points.push_back(
          Json{{"epsilon", p.epsilon}, {"one_way", p.one_way}, {"two_way", p.two_way}});
    }
    print_json(out, Json{{"schema", kSchemaVersion}, {"curve", std::move(points)}});
  } else {
    write_curve_csv(out, c.steps);
  }
  return kOk;
}

// ---------------------------------------------------------------- validate

struct ValidateCmd {
  Common common;
  std::string matrix;
  std::string space;
};

int do_validate(const ValidateCmd& c, std::ostream& out) {
  const auto space = ModeSpace::parse(c.space);
  const Json doc = parse_json_file(c.matrix);
  const CMatrix m = matrix_from_json(doc.is_object() && doc.contains("matrix") ? doc.at("matrix")
                                                                                : doc);
  const auto report = validate(m, space);
  const auto n = m.rows();
  const bool unitary =
      report.ok && (m.adjoint() * m - CMatrix::Identity(n, n)).norm() < ValidationReport::kTolerance;
  const std::string kind = report.ok ? (unitary ? "unitary" : "subunitary") : "invalid";
  if (c.common.output == "json") {
    Json j = to_json(report);
    j["space"] = space.to_string();
    j["unitarity"] = kind;
    print_json(out, j);
  } else if (c.common.output == "csv") {
    out << "ok,jz_commutator,mirror_commutator,shape_residual,sigma_excess,unitarity\n"
        << (report.ok ? "true" : "false") << ',' << num(report.jz_commutator) << ','
        << num(report.mirror_commutator) << ',' << num(report.shape_residual) << ','
        << num(report.sigma_excess) << ',' << kind << '\n';
  } else {
    out << "matrix " << (report.ok ? "is" : "is not") << " a symmetric scattering matrix on "
        << space.to_string() << " (" << kind << ")\n";
    out << "||[S,Jz]|| " << fmt("%.3e", report.jz_commutator) << ", ||[S,My]|| "
        << fmt("%.3e", report.mirror_commutator) << ", shape " << fmt("%.3e", report.shape_residual)
        << ", sigma_max - 1 " << fmt("%.3e", report.sigma_excess) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetry-protected multiphoton states under postselected scattering", "symprot"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("symprot 0.1.0"));

  CertifyCmd certify_cmd;
  auto* certify_app = app.add_subcommand("certify", "Certify a state against random symmetric S");
  add_common(certify_app, certify_cmd.common);
  add_certify_options(certify_app, certify_cmd.opts);
  certify_app->add_option("--space", certify_cmd.space, "Mode space (h0, hm:<m>)");
  certify_app->add_option("--state", certify_cmd.state, "State name, recipe, or JSON file")
      ->required();
  certify_app->add_option("--expect", certify_cmd.expect, "Exit 1 unless the verdict matches")
      ->check(CLI::IsMember({"protected", "not-protected"}));

  SearchCmd search_cmd;
  auto* search_app = app.add_subcommand("search", "Find every protected state of N photons");
  add_common(search_app, search_cmd.common);
  add_certify_options(search_app, search_cmd.opts);
  search_app->add_option("--space", search_cmd.space, "Mode space")->required();
  search_app->add_option("--n", search_cmd.n, "Photon number")->required();
  search_app->add_option("--sector", search_cmd.sector, "Restrict to one total J_z sector");
  search_app->add_option("--max-samples", search_cmd.max_samples,
                         "Sample budget per sector for the intersection")
      ->capture_default_str();
  search_app->add_flag("--uniqueness", search_cmd.uniqueness,
                       "Check that the pair state is the unique zero-sector ray");

  CatalogCmd catalog_cmd;
  auto* catalog_app = app.add_subcommand("catalog", "List named states or count protected states");
  add_common(catalog_app, catalog_cmd.common);
  catalog_app->add_option("--state", catalog_cmd.state, "Show one state");
  catalog_app->add_option("--space", catalog_cmd.space, "Mode space");
  catalog_app->add_flag("--count", catalog_cmd.count, "Closed-form protected-state count");
  catalog_app->add_option("--n", catalog_cmd.n, "Photon number for --count")
      ->capture_default_str();

  EntangleCmd entangle_cmd;
  auto* entangle_app = app.add_subcommand("entangle", "Slater rank of a two-photon state");
  add_common(entangle_app, entangle_cmd.common);
  entangle_app->add_option("--state", entangle_cmd.state, "State name, recipe, or JSON file")
      ->required();
  entangle_app->add_option("--space", entangle_cmd.space, "Mode space");

  DfsCmd dfs_cmd;
  auto* dfs_app = app.add_subcommand("dfs", "Send a time-bin qudit through a static scatterer");
  add_common(dfs_app, dfs_cmd.common);
  add_certify_options(dfs_app, dfs_cmd.opts);
  dfs_app->add_option("--carrier", dfs_cmd.carrier, "Protected carrier state")
      ->capture_default_str();
  dfs_app->add_option("--d", dfs_cmd.d, "Number of time bins")->capture_default_str();
  dfs_app->add_option("--loss", dfs_cmd.loss,
                      "Carrier loss probability; rescales a unitary sample");
  dfs_app->add_option("--curve", dfs_cmd.curve, "Write the capacity curve CSV to this file");
  dfs_app->add_option("--steps", dfs_cmd.steps, "Capacity curve steps")->capture_default_str();

  CapacityCmd capacity_cmd;
  auto* capacity_app = app.add_subcommand("capacity", "Erasure channel capacity");
  add_common(capacity_app, capacity_cmd.common);
  capacity_app->add_option("--eps", capacity_cmd.eps, "Erasure probability");
  capacity_app->add_option("--two-way", capacity_cmd.two_way, "Allow two-way classical comms")
      ->capture_default_str();
  capacity_app->add_option("--steps", capacity_cmd.steps, "Curve steps when --eps is absent")
      ->capture_default_str();

  ValidateCmd validate_cmd;
  auto* validate_app = app.add_subcommand("validate", "Check a matrix for the scatterer symmetry");
  add_common(validate_app, validate_cmd.common);
  validate_app->add_option("--matrix", validate_cmd.matrix, "JSON file with [re, im] rows")
      ->required();
  validate_app->add_option("--space", validate_cmd.space, "Mode space")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (certify_app->parsed()) return do_certify(certify_cmd, out);
    if (search_app->parsed()) return do_search(search_cmd, out);
    if (catalog_app->parsed()) return do_catalog(catalog_cmd, out);
    if (entangle_app->parsed()) return do_entangle(entangle_cmd, out);
    if (dfs_app->parsed()) return do_dfs(dfs_cmd, out);
    if (capacity_app->parsed()) return do_capacity(capacity_cmd, out);
    if (validate_app->parsed()) return do_validate(validate_cmd, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace symprot::cli
