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

#include "symprot/states.hpp"

#include <charconv>
#include <cmath>
#include <utility>

namespace symprot {

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct NamedEntry {
  NamedState which;
  const char* name;
  bool on_hm;
  Tau tau;
};

constexpr NamedEntry kNamed[] = {
    {NamedState::Phi1, "phi1", false, Tau::Plus},
    {NamedState::Phi2, "phi2", false, Tau::Plus},
    {NamedState::Phi3, "phi3", false, Tau::Minus},
    {NamedState::S1, "s1", false, Tau::Plus},
    {NamedState::S2, "s2", false, Tau::Plus},
    {NamedState::Psi1, "psi1", true, Tau::Plus},
    {NamedState::Psi2, "psi2", true, Tau::Plus},
    {NamedState::Psi3, "psi3", true, Tau::Plus},
    {NamedState::Psi4, "psi4", true, Tau::Minus},
};

const NamedEntry& entry(NamedState s) {
  for (const auto& e : kNamed)
    if (e.which == s) return e;
  throw InvalidArgument("unknown named state");
}

int parse_int(std::string_view text, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("bad integer '" + std::string(text) + "' in '" +
                          std::string(context) + "'");
  }
  return value;
}

std::map<std::string, int> parse_params(std::string_view params, std::string_view context) {
  std::map<std::string, int> out;
  std::size_t start = 0;
  while (start < params.size()) {
    const auto end = std::min(params.find(',', start), params.size());
    const auto item = params.substr(start, end - start);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("expected key=value in '" + std::string(context) + "'");
    }
    out[std::string(item.substr(0, eq))] = parse_int(item.substr(eq + 1), context);
    start = end + 1;
  }
  return out;
}

int take(std::map<std::string, int>& params, const std::string& key, std::string_view context) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw InvalidArgument("missing parameter '" + key + "' in '" + std::string(context) + "'");
  }
  const int v = it->second;
  params.erase(it);
  return v;
}

void reject_leftovers(const std::map<std::string, int>& params, std::string_view context) {
  if (!params.empty()) {
    throw InvalidArgument("unknown parameter '" + params.begin()->first + "' in '" +
                          std::string(context) + "'");
  }
}

StateRecipe parse_factor(std::string_view token, int default_m) {
  const auto colon = token.find(':');
  const auto head = token.substr(0, colon);
  auto params = colon == std::string_view::npos ? std::map<std::string, int>{}
                                                : parse_params(token.substr(colon + 1), token);
  if (head == "pair") {
    const int m = take(params, "m", token);
    const int n = take(params, "N", token);
    reject_leftovers(params, token);
    if (m < 1) throw InvalidArgument("pair states need m >= 1; got " + std::to_string(m));
    if (n % 2 != 0 || n < 2) {
      throw InvalidArgument("pair states need an even N >= 2; got " + std::to_string(n));
    }
    return {StateRecipe::PairPower{m, n / 2}};
  }
  if (head == "mirrorfock") {
    const int ns = take(params, "ns", token);
    const int na = take(params, "na", token);
    reject_leftovers(params, token);
    if (ns < 0 || na < 0 || ns + na == 0) {
      throw InvalidArgument("mirrorfock needs ns, na >= 0 and at least one photon");
    }
    return {StateRecipe::MirrorFock{ns, na}};
  }
  for (const auto& e : kNamed) {
    if (head == e.name) {
      int m = default_m;
      if (params.count("m")) {
        if (!e.on_hm) throw InvalidArgument(std::string(e.name) + " takes no parameters");
        m = take(params, "m", token);
      }
      if (e.on_hm && m < 1) throw InvalidArgument("m must be >= 1; got " + std::to_string(m));
      reject_leftovers(params, token);
      return {StateRecipe::Named{e.which, e.on_hm ? m : 0}};
    }
  }
  throw InvalidArgument("unknown state '" + std::string(token) + "'");
}

CVector amplitudes_from(const FockBasis& basis,
                        const std::vector<std::pair<Occupation, Complex>>& terms) {
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(basis.size()));
  for (const auto& [occ, a] : terms) amps(static_cast<Eigen::Index>(*basis.index_of(occ))) += a;
  return amps;
}

FockState from_polynomial(const ModeSpace& space, int n, const IntPolynomial& poly) {
  auto basis = FockBasis::make(space, n);
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(basis->size()));
  for (const auto& [occ, coef] : poly) {
    const auto idx = *basis->index_of(occ);
    amps(static_cast<Eigen::Index>(idx)) =
        static_cast<double>(coef) * basis->norm_factor(idx);
  }
  return FockState(std::move(basis), std::move(amps)).normalized();
}

void check_hm(int m) {
  if (m <= 0) throw InvalidArgument("m must be >= 1, got " + std::to_string(m));
}

FockState build_named(const StateRecipe::Named& named) {
  const double r = 1.0 / std::sqrt(2.0);
  const auto& e = entry(named.which);
  if (e.on_hm) check_hm(named.m);
  const ModeSpace space = e.on_hm ? ModeSpace::hm(named.m) : ModeSpace::h0();
  auto basis = FockBasis::make(space, 2);
  std::vector<std::pair<Occupation, Complex>> terms;
  switch (named.which) {
    case NamedState::Phi1: terms = {{{1, 1}, 1.0}}; break;
    case NamedState::Phi2: terms = {{{2, 0}, r}, {{0, 2}, r}}; break;
    case NamedState::Phi3: terms = {{{2, 0}, r}, {{0, 2}, -r}}; break;
    case NamedState::S1: terms = {{{2, 0}, 0.5}, {{1, 1}, r}, {{0, 2}, 0.5}}; break;
    case NamedState::S2: terms = {{{2, 0}, 0.5}, {{1, 1}, -r}, {{0, 2}, 0.5}}; break;
    case NamedState::Psi1: terms = {{{1, 0, 0, 1}, 1.0}}; break;
    case NamedState::Psi2: terms = {{{0, 1, 1, 0}, 1.0}}; break;
    case NamedState::Psi3: terms = {{{1, 0, 1, 0}, r}, {{0, 1, 0, 1}, r}}; break;
    case NamedState::Psi4: terms = {{{1, 0, 1, 0}, r}, {{0, 1, 0, 1}, -r}}; break;
  }
  CVector amps = amplitudes_from(*basis, terms);
  return FockState(std::move(basis), std::move(amps)).normalized();
}

}  // namespace

std::string to_string(NamedState s) { return entry(s).name; }

std::vector<NamedState> all_named_states() {
  std::vector<NamedState> out;
  for (const auto& e : kNamed) out.push_back(e.which);
  return out;
}

StateRecipe StateRecipe::parse(std::string_view text, int default_m) {
  if (text.empty()) throw InvalidArgument("empty state name");
  std::vector<StateRecipe> factors;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('*', start), text.size());
    factors.push_back(parse_factor(text.substr(start, end - start), default_m));
    start = end + 1;
  }
  if (factors.size() == 1) return factors.front();
  StateRecipe product{Product{std::move(factors)}};
  product.space();
  return product;
}

std::string StateRecipe::name() const {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, MirrorFock>) {
          return "mirrorfock:ns=" + std::to_string(c.ns) + ",na=" + std::to_string(c.na);
        } else if constexpr (std::is_same_v<T, PairPower>) {
          return "pair:m=" + std::to_string(c.m) + ",N=" + std::to_string(2 * c.k);
        } else if constexpr (std::is_same_v<T, Named>) {
          const auto& e = entry(c.which);
          return e.on_hm ? std::string(e.name) + ":m=" + std::to_string(c.m) : e.name;
        } else {
          std::string out;
          for (const auto& f : c.factors) out += (out.empty() ? "" : "*") + f.name();
          return out;
        }
      },
      construction);
}

ModeSpace StateRecipe::space() const {
  return std::visit(
      [](const auto& c) -> ModeSpace {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, MirrorFock>) {
          return ModeSpace::h0();
        } else if constexpr (std::is_same_v<T, PairPower>) {
          return ModeSpace::hm(c.m);
        } else if constexpr (std::is_same_v<T, Named>) {
          return entry(c.which).on_hm ? ModeSpace::hm(c.m) : ModeSpace::h0();
        } else {
          if (c.factors.empty()) throw InvalidArgument("empty product");
          ModeSpace s = c.factors.front().space();
          for (std::size_t i = 1; i < c.factors.size(); ++i)
            s = ModeSpace::direct_sum(s, c.factors[i].space());
          return s;
        }
      },
      construction);
}

int StateRecipe::n_photons() const {
  return std::visit(
      [](const auto& c) -> int {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, MirrorFock>) {
          return c.ns + c.na;
        } else if constexpr (std::is_same_v<T, PairPower>) {
          return 2 * c.k;
        } else if constexpr (std::is_same_v<T, Named>) {
          return 2;
        } else {
          int n = 0;
          for (const auto& f : c.factors) n += f.n_photons();
          return n;
        }
      },
      construction);
}

IntPolynomial recipe_polynomial(const StateRecipe& recipe) {
  if (const auto* mf = std::get_if<StateRecipe::MirrorFock>(&recipe.construction)) {
    if (mf->ns < 0 || mf->na < 0) throw InvalidArgument("negative mirror occupation");
    IntPolynomial poly;
    // (a_+ + a_-)^ns (a_+ - a_-)^na
    for (int i = 0; i <= mf->ns; ++i) {
      for (int j = 0; j <= mf->na; ++j) {
        const std::int64_t c = binomial(mf->ns, i) * binomial(mf->na, j) * (j % 2 ? -1 : 1);
        poly[{mf->ns - i + mf->na - j, i + j}] += c;
      }
    }
    std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
    return poly;
  }
  if (const auto* pp = std::get_if<StateRecipe::PairPower>(&recipe.construction)) {
    check_hm(pp->m);
    if (pp->k < 0) throw InvalidArgument("negative pair power");
    IntPolynomial poly;
    const auto coeffs = pair_coefficients(pp->k);
    for (int l = 0; l <= pp->k; ++l)
      poly[{pp->k - l, l, pp->k - l, l}] = coeffs[static_cast<std::size_t>(l)];
    return poly;
  }
  throw InvalidArgument("recipe_polynomial: only MirrorFock and PairPower have integer expansions");
}

FockState build(const StateRecipe& recipe) {
  return std::visit(
      [&](const auto& c) -> FockState {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, StateRecipe::Named>) {
          return build_named(c);
        } else if constexpr (std::is_same_v<T, StateRecipe::Product>) {
          if (c.factors.empty()) throw InvalidArgument("empty product");
          FockState out = build(c.factors.front());
          for (std::size_t i = 1; i < c.factors.size(); ++i)
            out = tensor_product(out, build(c.factors[i]));
          return out;
        } else {
          return from_polynomial(recipe.space(), recipe.n_photons(), recipe_polynomial(recipe));
        }
      },
      recipe.construction);
}

std::map<Occupation, Complex> monomial_coefficients(const FockState& state, double cutoff) {
  std::map<Occupation, Complex> out;
  const auto& basis = state.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Complex a = state.amplitudes()(static_cast<Eigen::Index>(i));
    if (std::abs(a) > cutoff) out[basis.state(i)] = a / basis.norm_factor(i);
  }
  return out;
}

Tau mirror_parity(const StateRecipe& recipe) {
  return std::visit(
      [](const auto& c) -> Tau {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, StateRecipe::MirrorFock>) {
          return c.na % 2 ? Tau::Minus : Tau::Plus;
        } else if constexpr (std::is_same_v<T, StateRecipe::PairPower>) {
          return c.k % 2 ? Tau::Minus : Tau::Plus;
        } else if constexpr (std::is_same_v<T, StateRecipe::Named>) {
          return entry(c.which).tau;
        } else {
          int sign = 1;
          for (const auto& f : c.factors) sign *= to_int(mirror_parity(f));
          return sign > 0 ? Tau::Plus : Tau::Minus;
        }
      },
      recipe.construction);
}

ProtectedCount count_protected(const ModeSpace& space, int n) {
  if (n < 0) throw InvalidArgument("photon number must be non-negative");
  if (space.is_h0()) {
    if (n % 2 == 1) return {(n + 1) / 2, (n + 1) / 2, n + 1};
    return {n / 2 + 1, n / 2, n + 1};
  }
  if (space.is_hm()) {
    if (n % 2 == 1) return {0, 0, 0};
    return (n / 2) % 2 == 0 ? ProtectedCount{1, 0, 1} : ProtectedCount{0, 1, 1};
  }
  throw InvalidArgument("count_protected is defined for H0 and Hm only, got " +
                        space.to_string());
}

std::vector<std::int64_t> pair_coefficients(int k) {
  if (k < 0) throw InvalidArgument("k must be non-negative");
  std::vector<std::int64_t> out;
  for (int l = 0; l <= k; ++l) out.push_back((l % 2 ? -1 : 1) * binomial(k, l));
  return out;
}

FockState tensor_product(const FockState& a, const FockState& b) {
  const ModeSpace space = ModeSpace::direct_sum(a.basis().space(), b.basis().space());
  auto basis = FockBasis::make(space, a.basis().n_photons() + b.basis().n_photons());
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(basis->size()));
  for (std::size_t i = 0; i < a.basis().size(); ++i) {
    for (std::size_t j = 0; j < b.basis().size(); ++j) {
      Occupation occ = a.basis().state(i);
      const auto& tail = b.basis().state(j);
      occ.insert(occ.end(), tail.begin(), tail.end());
      amps(static_cast<Eigen::Index>(*basis->index_of(occ))) =
          a.amplitudes()(static_cast<Eigen::Index>(i)) *
          b.amplitudes()(static_cast<Eigen::Index>(j));
    }
  }
  return FockState(std::move(basis), std::move(amps));
}

}  // namespace symprot
