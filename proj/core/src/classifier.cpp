// Copyright 2026 The stabspec developers
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

#include "stabspec/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <atomic>
#include <thread>

#include <nlohmann/json.hpp>

#include "stabspec/errors.hpp"
#include "stabspec/io.hpp"
#include "stabspec/operator_algebra.hpp"
#include "stabspec/rng.hpp"

namespace stabspec {

using json = nlohmann::ordered_json;

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void require_odd_prime(int d, const char* where) {
  if (!is_supported_prime(d) || d == 2)
    throw std::invalid_argument(std::string(where) + ": requires odd prime d");
}

std::string fmt6(double x) {
  double r = std::round(x * 1e6) / 1e6;
  if (r == 0.0) r = 0.0;  // normalize -0
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", r);
  return buf;
}

}  // namespace

Spectrum qubit_cnc_spectrum(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("qubit_cnc_spectrum: m out of range");
  const int N = 1 << n;
  const double root = std::sqrt(2.0 * m + 1.0);
  const double scale = std::pow(2.0, -m);
  std::vector<double> vals;
  vals.reserve(N);
  const int mult = 1 << (m - 1);
  for (int i = 0; i < mult; ++i) vals.push_back((1.0 + root) * scale);
  for (int i = 0; i < N - 2 * mult; ++i) vals.push_back(0.0);
  for (int i = 0; i < mult; ++i) vals.push_back((1.0 - root) * scale);
  return Spectrum(std::move(vals));
}

std::vector<Spectrum> cnc_orbit_spectra_qubits(int n) {
  std::vector<Spectrum> out;
  out.reserve(n);
  for (int m = 1; m <= n; ++m) out.push_back(qubit_cnc_spectrum(n, m));
  return out;
}

Spectrum phase_point_spectrum(int d, int n) {
  require_odd_prime(d, "phase_point_spectrum");
  const std::int64_t N = ipow(d, n);
  std::vector<double> vals;
  vals.reserve(N);
  for (std::int64_t i = 0; i < (N + 1) / 2; ++i) vals.push_back(1.0);
  for (std::int64_t i = 0; i < (N - 1) / 2; ++i) vals.push_back(-1.0);
  return Spectrum(std::move(vals));
}

std::vector<Spectrum> qutrit_vertex_orbit_spectra() {
  const double r5 = std::sqrt(5.0);
  return {Spectrum({1.0, 1.0, -1.0}), Spectrum({(1.0 + r5) / 2.0, 0.0, (1.0 - r5) / 2.0})};
}

const std::vector<TwoQubitOrbit>& two_qubit_orbit_table() {
  static const std::vector<TwoQubitOrbit> table = [] {
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0),
                 r7 = std::sqrt(7.0), r15 = std::sqrt(15.0);
    std::vector<TwoQubitOrbit> t;
    t.push_back({"CNC(m=1)",
                 Spectrum({(1.0 + r3) / 2.0, 0.0, 0.0, (1.0 - r3) / 2.0}),
                 Rational(2), true});
    t.push_back({"CNC(m=2)",
                 Spectrum({(1.0 + r5) / 4.0, (1.0 + r5) / 4.0, (1.0 - r5) / 4.0,
                           (1.0 - r5) / 4.0}),
                 Rational(3, 2), true});
    {
      const double a = r3 / 8.0;
      const double b1 = std::sqrt(15.0 / 64.0 + r3 / 8.0);
      const double b2 = std::sqrt(15.0 / 64.0 - r3 / 8.0);
      t.push_back({"non-CNC 1",
                   Spectrum({0.25 + a + b1, 0.25 - a + b2, 0.25 - a - b2, 0.25 + a - b1}),
                   Rational(11, 8), false});
    }
    {
      const double c = r2 / 8.0;
      const double d1 = std::sqrt(7.0 / 32.0 + r2 / 8.0);
      const double d2 = std::sqrt(7.0 / 32.0 - r2 / 8.0);
      t.push_back({"non-CNC 2",
                   Spectrum({0.25 + c + d1, 0.25 - c + d2, 0.25 - c - d2, 0.25 + c - d1}),
                   Rational(5, 4), false});
    }
    t.push_back({"non-CNC 3", Spectrum({0.5 + r7 / 4.0, 0.0, 0.0, 0.5 - r7 / 4.0}),
                 Rational(11, 8), false});
    {
      const double e1 = r2 * std::sqrt(5.0 - r5) / 8.0;
      const double e2 = r2 * std::sqrt(5.0 + r5) / 8.0;
      t.push_back({"non-CNC 4", Spectrum({0.25 + e2, 0.25 + e1, 0.25 - e1, 0.25 - e2}),
                   Rational(7, 8), false});
    }
    t.push_back({"non-CNC 5", Spectrum({0.5 + r15 / 6.0, 0.0, 0.0, 0.5 - r15 / 6.0}),
                 Rational(4, 3), false});
    {
      const double f = r5 / 8.0;
      const double g1 = std::sqrt(25.0 / 128.0 + 11.0 * r5 / 128.0);
      const double g2 = std::sqrt(25.0 / 128.0 - 11.0 * r5 / 128.0);
      t.push_back({"non-CNC 6",
                   Spectrum({0.25 + f + g1, 0.25 - f + g2, 0.25 - f - g2, 0.25 + f - g1}),
                   Rational(43, 32), false});
    }
    return t;
  }();
  return table;
}

bool astab_test(const Spectrum& s, const std::vector<Spectrum>& vertex_spectra, double tol) {
  if (vertex_spectra.empty()) throw std::invalid_argument("astab_test: empty vertex set");
  for (const auto& a : vertex_spectra)
    if (kyfan_min_pairing(s, a) < -tol) return false;
  return true;
}

bool awp_test(const Spectrum& s, int d, double tol) {
  require_odd_prime(d, "awp_test");
  const int N = s.size();
  const int k = (N - 1) / 2;
  double top = 0.0;
  for (int i = 0; i < k; ++i) top += s.sorted_desc()[i];
  return top <= 0.5 + tol;
}

bool wp_test(const HermitianOperator& rho, double tol) {
  require_odd_prime(rho.d, "wp_test");
  return wigner_function(rho).min() >= -tol;
}

SpectralVerdicts spectral_verdicts(const Spectrum& s, int d, int n) {
  if (!is_supported_prime(d)) throw std::invalid_argument("spectral_verdicts: unsupported d");
  if (s.size() != ipow(d, n))
    throw std::invalid_argument("spectral_verdicts: spectrum length != d^n");

  SpectralVerdicts v;
  std::vector<std::pair<std::string, Spectrum>> constraints;
  if (d == 2) {
    for (int m = 1; m <= n; ++m)
      constraints.emplace_back("CNC(m=" + std::to_string(m) + ")", qubit_cnc_spectrum(n, m));
    v.astab_conditional = n >= 3;
  } else if (d == 3 && n == 1) {
    const auto orbits = qutrit_vertex_orbit_spectra();
    constraints.emplace_back("phase-point", orbits[0]);
    constraints.emplace_back("CNC(nonlinear)", orbits[1]);
  } else {
    constraints.emplace_back("phase-point", phase_point_spectrum(d, n));
    v.astab_necessary_only = true;
  }

  v.astab = true;
  for (const auto& [label, a] : constraints) {
    const double val = kyfan_min_pairing(s, a);
    if (val < -1e-10) {
      v.astab = false;
      v.violated.push_back(label + ": " + fmt6(val));
    }
  }
  if (d != 2) v.awp = awp_test(s, d);
  return v;
}

namespace {

TriState stab_hull_membership(const HermitianOperator& rho) {
  const std::int64_t N = ipow(rho.d, rho.n);
  if (N > 64) return TriState::Unknown;
  const auto states = enumerate_stabilizer_states(rho.d, rho.n);
  const int nv = static_cast<int>(states.size());
  const Eigen::VectorXd target = hermitian_to_real(rho.mat);

  LinearProgram<double> lp;
  lp.nvars = nv;
  lp.maximize = false;
  lp.objective.assign(nv, 0.0);
  lp.nonneg.assign(nv, true);

  std::vector<Eigen::VectorXd> cols;
  cols.reserve(nv);
  for (const auto& st : states) cols.push_back(hermitian_to_real(st.mat));
  for (int row = 0; row < target.size(); ++row) {
    LpConstraint<double> c;
    c.rel = Rel::Eq;
    c.b = target(row);
    c.a.resize(nv);
    for (int j = 0; j < nv; ++j) c.a[j] = cols[j](row);
    lp.cons.push_back(std::move(c));
  }
  LpConstraint<double> sum;
  sum.rel = Rel::Eq;
  sum.b = 1.0;
  sum.a.assign(nv, 1.0);
  lp.cons.push_back(std::move(sum));

  return solve_lp(lp, 1e-9).status == LpStatus::Optimal ? TriState::Yes : TriState::No;
}

void fill_common_report(ClassificationReport& r) {
  const double N = static_cast<double>(ipow(r.d, r.n));
  r.purity = purity(r.spectrum);
  r.purity_inball = r.d == 2 ? 1.0 / (N - 0.5) : 1.0 / (N - 1.0 / N);
  if (r.d != 2) r.purity_awp_necessity = 1.0 / (N - 1.0);
  const auto radii = radii_report(r.d, r.n);
  r.purity_gb = 1.0 / N + radii.r_gb * radii.r_gb;
  r.purity_psd = 1.0 / (N - 1.0);
}

}  // namespace

ClassificationReport classify_spectrum(const Spectrum& s, int d, int n) {
  ClassificationReport r;
  r.d = d;
  r.n = n;
  r.spectrum = s;
  r.verdicts = spectral_verdicts(s, d, n);
  if (d != 2) {
    const int N = s.size();
    CMatrix diag = CMatrix::Zero(N, N);
    for (int i = 0; i < N; ++i) diag(i, i) = s.values()[i];
    r.wp = wp_test(HermitianOperator{d, n, "generic", std::move(diag)});
    r.wp_basis = "diagonal";
  }
  if (r.verdicts.astab && !r.verdicts.astab_conditional && !r.verdicts.astab_necessary_only)
    r.in_stab_hull = TriState::Yes;
  fill_common_report(r);
  return r;
}

ClassificationReport classify_operator(const HermitianOperator& rho) {
  ClassificationReport r;
  r.d = rho.d;
  r.n = rho.n;
  r.spectrum = eigen_spectrum(rho);
  r.verdicts = spectral_verdicts(r.spectrum, rho.d, rho.n);
  if (rho.d != 2) {
    r.wp = wp_test(rho);
    r.wp_basis = "matrix";
  }
  r.in_stab_hull = stab_hull_membership(rho);
  fill_common_report(r);
  return r;
}

std::string report_to_json(const ClassificationReport& r) {
  json j;
  j["d"] = r.d;
  j["n"] = r.n;
  j["spectrum"] = r.spectrum.values();
  j["purity"] = r.purity;
  json verdicts;
  verdicts["astab"] = r.verdicts.astab;
  verdicts["astab_conditional"] = r.verdicts.astab_conditional;
  verdicts["astab_necessary_only"] = r.verdicts.astab_necessary_only;
  if (r.verdicts.awp.has_value()) verdicts["awp"] = *r.verdicts.awp;
  if (r.wp.has_value()) {
    verdicts["wp"] = *r.wp;
    verdicts["wp_basis"] = r.wp_basis;
  }
  switch (r.in_stab_hull) {
    case TriState::Yes: verdicts["in_stab_hull"] = "yes"; break;
    case TriState::No: verdicts["in_stab_hull"] = "no"; break;
    case TriState::Unknown: verdicts["in_stab_hull"] = "unknown"; break;
  }
  j["verdicts"] = std::move(verdicts);
  j["violated_constraints"] = r.verdicts.violated;
  json purity_pos;
  purity_pos["inball_threshold"] = r.purity_inball;
  purity_pos["gb_ball_threshold"] = r.purity_gb;
  purity_pos["psd_ball_threshold"] = r.purity_psd;
  if (r.purity_awp_necessity.has_value()) purity_pos["awp_necessity"] = *r.purity_awp_necessity;
  purity_pos["below_inball"] = r.purity <= r.purity_inball + 1e-12;
  purity_pos["below_gb_ball"] = r.purity <= r.purity_gb + 1e-12;
  purity_pos["below_psd_ball"] = r.purity <= r.purity_psd + 1e-12;
  j["purity_position"] = std::move(purity_pos);
  j["boundary_tolerance"] = r.boundary_tolerance;
  return j.dump(2);
}

// ---- spectral polytopes ----

SpectralPolytope build_astab_spectral_polytope(int d, int n) {
  std::vector<Spectrum> constraints;
  if (d == 2 && n >= 1 && n <= 3) {
    constraints = cnc_orbit_spectra_qubits(n);
  } else if (d == 3 && n == 1) {
    constraints = qutrit_vertex_orbit_spectra();
  } else {
    throw std::invalid_argument("build_astab_spectral_polytope: unsupported (d, n)");
  }
  const int N = static_cast<int>(ipow(d, n));

  SpectralPolytope out;
  out.conditional = d == 2 && n >= 3;
  out.chamber = weyl_chamber<double>(N);
  for (const auto& a : constraints) {
    LinearConstraint<double> cut;
    cut.a = a.sorted_asc();
    cut.b = 0.0;
    intersect_halfspace(out.chamber, cut);
  }
  if (N <= 6) {
    out.full = out.chamber;
    permutation_closure(out.full);
  }
  return out;
}

std::vector<std::vector<Rational>> awp_chamber_vertices_exact(int N) {
  std::vector<std::vector<Rational>> out;
  const int half = (N - 1) / 2;
  for (int k = 1; k <= N - 2; ++k) {
    std::vector<Rational> v(N);
    if (k < half) {
      for (int i = 0; i < k; ++i) v[i] = Rational(k + 1, k * (N + 1));
      for (int i = k; i < N; ++i) v[i] = Rational(1, N + 1);
    } else {
      for (int i = 0; i < k; ++i) v[i] = Rational(1, N - 1);
      for (int i = k; i < N; ++i) v[i] = Rational(N - 1 - k, (N - 1) * (N - k));
    }
    out.push_back(std::move(v));
  }
  {
    std::vector<Rational> v(N, Rational(0));
    for (int i = 0; i < N - 1; ++i) v[i] = Rational(1, N - 1);
    out.push_back(std::move(v));
  }
  out.push_back(std::vector<Rational>(N, Rational(1, N)));
  return out;
}

std::vector<std::vector<Rational>> awp_generator_vertices_exact(int N) {
  std::vector<std::vector<Rational>> out;
  {
    std::vector<Rational> v1p(N, Rational(1, N + 1));
    v1p[0] = Rational(2, N + 1);
    out.push_back(std::move(v1p));
  }
  {
    std::vector<Rational> v(N, Rational(0));
    for (int i = 0; i < N - 1; ++i) v[i] = Rational(1, N - 1);
    out.push_back(std::move(v));
  }
  return out;
}

SpectralPolytope build_awp_spectral_polytope(int d, int n) {
  require_odd_prime(d, "build_awp_spectral_polytope");
  const std::int64_t N64 = ipow(d, n);
  if (N64 > 27) throw guard_error("build_awp_spectral_polytope: d^n > 27 guard");
  const int N = static_cast<int>(N64);

  SpectralPolytope out;
  out.chamber = weyl_chamber<double>(N);
  LinearConstraint<double> cut;
  cut.a.assign(N, 0.0);
  for (int i = 0; i < (N - 1) / 2; ++i) cut.a[i] = -1.0;
  cut.b = -0.5;
  intersect_halfspace(out.chamber, cut);

  // Closed-form orbit V-representation.
  std::vector<std::vector<double>> points;
  for (const auto& gen : awp_generator_vertices_exact(N)) {
    std::vector<double> w(N);
    for (int i = 0; i < N; ++i) w[i] = to_double(gen[i]);
    std::sort(w.begin(), w.end());
    do {
      points.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // Drop non-extreme points (for N = 3 the v_1' orbit is redundant).
  std::vector<std::vector<double>> extreme;
  for (std::size_t i = 0; i < points.size(); ++i) {
    LinearProgram<double> lp;
    lp.nvars = static_cast<int>(points.size()) - 1;
    lp.maximize = false;
    lp.objective.assign(lp.nvars, 0.0);
    lp.nonneg.assign(lp.nvars, true);
    for (int row = 0; row < N; ++row) {
      LpConstraint<double> c;
      c.rel = Rel::Eq;
      c.b = points[i][row];
      for (std::size_t j = 0; j < points.size(); ++j)
        if (j != i) c.a.push_back(points[j][row]);
      lp.cons.push_back(std::move(c));
    }
    LpConstraint<double> sum;
    sum.rel = Rel::Eq;
    sum.b = 1.0;
    sum.a.assign(lp.nvars, 1.0);
    lp.cons.push_back(std::move(sum));
    if (solve_lp(lp).status != LpStatus::Optimal) extreme.push_back(points[i]);
  }
  out.full = polytope_from_vertices<double>(N, std::move(extreme));
  return out;
}

// ---- radii ----

RadiiReport radii_report(int d, int n) {
  if (!is_supported_prime(d) || n < 1) throw std::invalid_argument("radii_report: bad (d, n)");
  RadiiReport r;
  r.d = d;
  r.n = n;
  const double N = static_cast<double>(ipow(d, n));

  if (d == 2) {
    r.r_stab = 1.0 / std::sqrt(N * (2.0 * N - 1.0));
    r.r_stab_conditional = true;
    r.purity_inball = 1.0 / (N - 0.5);
  } else {
    r.r_stab = 1.0 / std::sqrt(N * (N * N - 1.0));
    r.r_stab_conditional = false;
    r.r_wp = r.r_stab;
    r.R_awp = 1.0 / std::sqrt(N * (N - 1.0));
    r.purity_inball = 1.0 / (N - 1.0 / N);
    r.purity_awp_necessity = 1.0 / (N - 1.0);
  }
  r.r_gb = 2.0 / std::pow(std::sqrt(2.0) * d, n);
  r.r_psd = 1.0 / std::sqrt(N * (N - 1.0));

  r.chain_stab_eq_wp = d == 2 || std::abs(r.r_stab - *r.r_wp) <= 1e-15;
  r.chain_stab_lt_gb = r.r_stab < r.r_gb - 1e-15;
  r.chain_gb_lt_psd = r.r_gb < r.r_psd - 1e-15;
  r.chain_psd_eq_rawp = d == 2 || std::abs(r.r_psd - *r.R_awp) <= 1e-15;
  r.chain_holds =
      r.chain_stab_eq_wp && r.chain_stab_lt_gb && r.chain_gb_lt_psd && r.chain_psd_eq_rawp;
  return r;
}

std::string radii_to_json(const RadiiReport& r) {
  json j;
  j["d"] = r.d;
  j["n"] = r.n;
  j["r_stab"] = r.r_stab;
  j["r_stab_conditional"] = r.r_stab_conditional;
  if (r.r_wp.has_value()) j["r_wp"] = *r.r_wp;
  if (r.R_awp.has_value()) j["R_awp"] = *r.R_awp;
  j["r_gb"] = r.r_gb;
  j["r_psd"] = r.r_psd;
  json purities;
  purities["inball"] = r.purity_inball;
  if (r.purity_awp_necessity.has_value()) purities["awp_necessity"] = *r.purity_awp_necessity;
  j["purity_thresholds"] = std::move(purities);
  json chain;
  chain["stab_eq_wp"] = r.chain_stab_eq_wp;
  chain["stab_lt_gb"] = r.chain_stab_lt_gb;
  chain["gb_lt_psd"] = r.chain_gb_lt_psd;
  chain["psd_eq_R_awp"] = r.chain_psd_eq_rawp;
  chain["holds"] = r.chain_holds;
  j["ordering_chain"] = std::move(chain);
  return j.dump(2);
}

// ---- Lambda vertex sampling ----

namespace {

struct LambdaSystem {
  int n;
  int dim;  // 4^n - 1
  std::vector<std::vector<double>> signs;  // per stabilizer state
  std::vector<CMatrix> paulis;             // nonzero labels in index order
};

const LambdaSystem& lambda_system(int n) {
  static std::map<int, LambdaSystem> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  LambdaSystem sys;
  sys.n = n;
  sys.dim = static_cast<int>(ipow(4, n)) - 1;
  for (const auto& label : enumerate_stabilizer_labels(2, n)) {
    const auto s = qubit_sign_vector(label);
    sys.signs.emplace_back(s.begin(), s.end());
  }
  const PauliAlgebra alg(2, n);
  for (std::int64_t i = 1; i <= sys.dim; ++i)
    sys.paulis.push_back(alg.pauli(SymplecticVector::from_index(2, n, i)));
  return cache.emplace(n, std::move(sys)).first->second;
}

SampledVertex sample_one(const LambdaSystem& sys, std::uint64_t seed, int draw) {
  CounterRng rng(seed, static_cast<std::uint64_t>(draw));
  const int N = 1 << sys.n;
  const Eigen::VectorXcd psi = haar_state(N, rng);

  std::vector<double> obj(sys.dim);
  for (int a = 0; a < sys.dim; ++a) {
    const std::complex<double> e = psi.adjoint() * sys.paulis[a] * psi;
    obj[a] = e.real();
  }

  // Dual of  max c.x  s.t.  s_sigma . x >= -1:
  //   min 1.y  s.t.  -S^T y = c, y >= 0;
  // the equality-row prices are the primal optimizer.
  LinearProgram<double> lp;
  lp.nvars = static_cast<int>(sys.signs.size());
  lp.maximize = false;
  lp.objective.assign(lp.nvars, 1.0);
  lp.nonneg.assign(lp.nvars, true);
  for (int a = 0; a < sys.dim; ++a) {
    LpConstraint<double> c;
    c.rel = Rel::Eq;
    c.b = obj[a];
    c.a.resize(lp.nvars);
    for (int j = 0; j < lp.nvars; ++j) c.a[j] = -sys.signs[j][a];
    lp.cons.push_back(std::move(c));
  }
  const auto sol = solve_lp(lp, 1e-9);
  if (sol.status != LpStatus::Optimal)
    throw solver_error("sample_lambda_vertices: dual LP not optimal");

  std::vector<double> x(sol.multipliers.begin(), sol.multipliers.end());
  // Certify: x must be feasible and attain the dual value.
  double support = 0.0;
  for (int a = 0; a < sys.dim; ++a) support += obj[a] * x[a];
  if (std::abs(support - to_double(sol.value)) > 1e-6)
    throw solver_error("sample_lambda_vertices: duality gap in recovered vertex");
  for (const auto& s : sys.signs) {
    double lhs = 1.0;
    for (int a = 0; a < sys.dim; ++a) lhs += s[a] * x[a];
    if (lhs < -1e-7) throw solver_error("sample_lambda_vertices: recovered point not in Lambda");
  }

  CMatrix mat = CMatrix::Identity(N, N);
  for (int a = 0; a < sys.dim; ++a) mat += x[a] * sys.paulis[a];
  mat /= static_cast<double>(N);

  SampledVertex out;
  out.coords = std::move(x);
  out.spectrum = eigen_spectrum(mat);
  double norm_sq = 1.0;
  for (double xa : out.coords) norm_sq += xa * xa;
  out.hs_norm_sq = norm_sq / N;

  std::string fp;
  for (double v : out.spectrum.sorted_desc()) {
    fp += fmt6(v);
    fp += ",";
  }
  fp += "|";
  fp += fmt6(out.hs_norm_sq);
  out.fingerprint = std::move(fp);
  return out;
}

}  // namespace

std::vector<SampledVertex> sample_lambda_vertices(int n, int count, std::uint64_t seed,
                                                  int jobs) {
  if (n < 1 || n > 3) throw std::invalid_argument("sample_lambda_vertices: n must be 1..3");
  if (count < 0) throw std::invalid_argument("sample_lambda_vertices: negative count");
  const LambdaSystem& sys = lambda_system(n);

  std::vector<SampledVertex> out(count);
  jobs = std::max(1, std::min(jobs, count == 0 ? 1 : count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) out[i] = sample_one(sys, seed, i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (;;) {
          const int i = next.fetch_add(1);
          if (i >= count) return;
          out[i] = sample_one(sys, seed, i);
        }
      });
    for (auto& th : pool) th.join();
  }
  return out;
}

// ---- conjecture harness ----

ConjectureReport conjecture_harness(int n, int samples, std::uint64_t seed, bool exhaustive,
                                    int jobs) {
  if (n < 1 || n > 3) throw std::invalid_argument("conjecture_harness: n must be 1..3");
  if (exhaustive && n > 2)
    throw std::invalid_argument("conjecture_harness: exhaustive mode requires n <= 2");

  ConjectureReport rep;
  rep.n = n;
  rep.exhaustive = exhaustive;
  rep.seed = seed;

  const auto generators = cnc_orbit_spectra_qubits(n);
  const Spectrum m1 = generators.front();

  auto is_cnc_spectrum = [&](const Spectrum& s) {
    for (const auto& g : generators) {
      double diff = 0.0;
      for (int i = 0; i < s.size(); ++i)
        diff = std::max(diff, std::abs(s.sorted_desc()[i] - g.sorted_desc()[i]));
      if (diff <= 1e-5) return true;
    }
    return false;
  };

  if (exhaustive) {
    std::vector<std::pair<std::string, Spectrum>> orbits;
    std::vector<double> norms;
    if (n == 1) {
      orbits.emplace_back("CNC(m=1)", qubit_cnc_spectrum(1, 1));
      norms.push_back(2.0);
    } else {
      for (const auto& o : two_qubit_orbit_table()) {
        orbits.emplace_back(o.label, o.spectrum);
        norms.push_back(to_double(o.hs_norm_sq));
      }
    }
    rep.samples = static_cast<int>(orbits.size());
    rep.distinct_fingerprints = orbits.size();
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      const auto& [label, spec] = orbits[i];
      if (!mixture_majorization_feasible(spec, generators)) ++rep.mixture_failures;
      if (!is_cnc_spectrum(spec) && !majorizes(m1, spec)) ++rep.direct_failures;
      if (norms[i] > 2.0 + 1e-9) ++rep.norm_failures;
      rep.max_hs_norm_sq = std::max(rep.max_hs_norm_sq, norms[i]);
      rep.lorenz_curves.emplace_back(label, spec);
      rep.hs_norms.push_back(norms[i]);
    }
    return rep;
  }

  rep.samples = samples;
  const auto verts = sample_lambda_vertices(n, samples, seed, jobs);
  std::map<std::string, std::string> orbit_labels;  // fingerprint -> label
  for (const auto& v : verts) {
    if (!mixture_majorization_feasible(v.spectrum, generators)) ++rep.mixture_failures;
    if (!is_cnc_spectrum(v.spectrum) && !majorizes(m1, v.spectrum)) ++rep.direct_failures;
    if (v.hs_norm_sq > 2.0 + 1e-9) ++rep.norm_failures;
    rep.max_hs_norm_sq = std::max(rep.max_hs_norm_sq, v.hs_norm_sq);
    rep.hs_norms.push_back(v.hs_norm_sq);
    if (orbit_labels.size() < 200 && !orbit_labels.count(v.fingerprint)) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "orbit-%03zu", orbit_labels.size() + 1);
      orbit_labels.emplace(v.fingerprint, buf);
      rep.lorenz_curves.emplace_back(buf, v.spectrum);
    }
  }
  rep.distinct_fingerprints = [&] {
    std::set<std::string> fps;
    for (const auto& v : verts) fps.insert(v.fingerprint);
    return fps.size();
  }();
  for (int m = 1; m <= n; ++m)
    rep.lorenz_curves.emplace_back("CNC(m=" + std::to_string(m) + ")", qubit_cnc_spectrum(n, m));
  return rep;
}

std::string conjecture_summary_json(const ConjectureReport& r) {
  json j;
  j["n"] = r.n;
  j["mode"] = r.exhaustive ? "exhaustive" : "sampled";
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["distinct_fingerprints"] = r.distinct_fingerprints;
  j["max_hs_norm_sq"] = r.max_hs_norm_sq;
  json failures;
  failures["mixture_majorization"] = r.mixture_failures;
  failures["direct_majorization"] = r.direct_failures;
  failures["hs_norm"] = r.norm_failures;
  j["failures"] = std::move(failures);
  j["majorization_conjecture_ok"] = r.mixture_failures == 0;
  j["hs_norm_conjecture_ok"] = r.norm_failures == 0;
  return j.dump(2);
}

}  // namespace stabspec
