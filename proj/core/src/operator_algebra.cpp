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

#include "stabspec/operator_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "stabspec/errors.hpp"

namespace stabspec {

namespace {

using Complex = std::complex<double>;

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Z^a X^b on a single qudit: (Z^a X^b)|j> = omega^{a(j+b)} |j+b>.
CMatrix zx_factor(int d, int a, int b) {
  CMatrix m = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    const int t = (j + b) % d;
    m(t, j) = unit_phase(2.0 * M_PI * (static_cast<double>(a) * t) / d);
  }
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::string vec_label(const SymplecticVector& u) {
  std::ostringstream os;
  os << "u=" << u.index();
  return os.str();
}

}  // namespace

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

CMatrix pauli_word(const SymplecticVector& u) {
  const int d = u.d;
  CMatrix word = CMatrix::Identity(1, 1);
  int zx_dot = 0;
  for (int k = 0; k < u.n; ++k) {
    word = kron(word, zx_factor(d, u.z[k], u.x[k]));
    zx_dot += u.z[k] * u.x[k];
  }
  // tau = (-1)^d e^{i pi / d} = e^{i theta}, applied as tau^{-z.x}.
  const double theta = M_PI / d + (d % 2 == 1 ? M_PI : 0.0);
  return unit_phase(-theta * zx_dot) * word;
}

Eigen::VectorXd hermitian_to_real(const CMatrix& m) {
  const int n = static_cast<int>(m.rows());
  Eigen::VectorXd v(n * n);
  int k = 0;
  for (int i = 0; i < n; ++i) v(k++) = m(i, i).real();
  const double s = std::sqrt(2.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      v(k++) = s * m(i, j).real();
      v(k++) = s * m(i, j).imag();
    }
  return v;
}

PauliAlgebra::PauliAlgebra(int d, int n) : d_(d), n_(n), dim_(static_cast<int>(ipow(d, n))) {
  if (!is_supported_prime(d)) throw std::invalid_argument("PauliAlgebra: unsupported d");
  if (n < 1 || dim_ > 64) throw guard_error("PauliAlgebra: d^n > 64 materialization guard");
  const std::int64_t points = ipow(d, 2 * n);
  table_.reserve(points);
  for (std::int64_t i = 0; i < points; ++i)
    table_.push_back(pauli_word(SymplecticVector::from_index(d, n, i)));
}

std::complex<double> PauliAlgebra::omega() const { return unit_phase(2.0 * M_PI / d_); }

const CMatrix& PauliAlgebra::pauli(const SymplecticVector& u) const {
  if (u.d != d_ || u.n != n_) throw std::invalid_argument("PauliAlgebra::pauli: mismatched (d, n)");
  return table_[static_cast<std::size_t>(u.index())];
}

int PauliAlgebra::beta(const SymplecticVector& u, const SymplecticVector& v) const {
  if (symplectic_form(u, v) != 0)
    throw contract_error("beta: [" + vec_label(u) + "," + vec_label(v) + "] != 0");
  const std::uint64_t key =
      static_cast<std::uint64_t>(u.index()) * static_cast<std::uint64_t>(num_points()) +
      static_cast<std::uint64_t>(v.index());
  if (auto it = beta_cache_.find(key); it != beta_cache_.end()) return it->second;

  const CMatrix prod = pauli(u) * pauli(v);
  const CMatrix& target = pauli(u + v);
  const Complex phase = (target.adjoint() * prod).trace() / static_cast<double>(dim_);
  if (std::abs(std::abs(phase) - 1.0) > 1e-9)
    throw consistency_error("beta: product is not proportional to T_{u+v}");
  int best = 0;
  double best_err = 1e9;
  for (int b = 0; b < d_; ++b) {
    const double err = std::abs(phase - unit_phase(-2.0 * M_PI * b / d_));
    if (err < best_err) {
      best_err = err;
      best = b;
    }
  }
  if (best_err > 1e-9) throw consistency_error("beta: phase is not a d-th root of unity");
  beta_cache_.emplace(key, best);
  return best;
}

int ValueAssignment::at(const SymplecticVector& u) const {
  auto it = values.find(u);
  if (it == values.end()) throw contract_error("ValueAssignment: undefined at " + vec_label(u));
  return it->second;
}

std::vector<SymplecticVector> ValueAssignment::domain() const {
  std::vector<SymplecticVector> dom;
  dom.reserve(values.size());
  for (const auto& [u, _] : values) dom.push_back(u);
  return dom;
}

std::optional<ViolatingTriple> find_inconsistency(const PauliAlgebra& alg,
                                                  const ValueAssignment& va) {
  const auto dom = va.domain();
  for (const auto& u : dom)
    for (const auto& v : dom) {
      if (symplectic_form(u, v) != 0) continue;
      const SymplecticVector w = u + v;
      if (!va.defined(w)) continue;
      const int lhs = (va.at(u) + va.at(v)) % alg.d();
      const int rhs = ((va.at(w) - alg.beta(u, v)) % alg.d() + alg.d()) % alg.d();
      if (lhs != rhs) return ViolatingTriple{u, v, w};
    }
  return std::nullopt;
}

ValueAssignment subspace_assignment(const PauliAlgebra& alg, const IsotropicSubspace& iso,
                                    std::span<const int> basis_values) {
  if (static_cast<int>(basis_values.size()) != iso.dim())
    throw std::invalid_argument("subspace_assignment: basis value count mismatch");
  const int d = alg.d();
  const int k = iso.dim();
  ValueAssignment va;
  va.values[SymplecticVector::zero(iso.d, iso.n)] = 0;

  // Lex order over coefficient tuples guarantees u - b_i was already visited.
  std::vector<int> coeff(k, 0);
  const std::int64_t total = ipow(d, k);
  for (std::int64_t t = 1; t < total; ++t) {
    std::int64_t rem = t;
    for (int i = k - 1; i >= 0; --i) {
      coeff[i] = static_cast<int>(rem % d);
      rem /= d;
    }
    int first = 0;
    while (coeff[first] == 0) ++first;
    SymplecticVector u = SymplecticVector::zero(iso.d, iso.n);
    for (int i = 0; i < k; ++i) u = u + scale(coeff[i], iso.basis[i]);
    const SymplecticVector prev = u + (-iso.basis[first]);
    const int value =
        (basis_values[first] % d + va.at(prev) + alg.beta(iso.basis[first], prev)) % d;
    va.values[u] = (value + d) % d;
  }
  return va;
}

HermitianOperator stabilizer_projector(const PauliAlgebra& alg, const IsotropicSubspace& iso,
                                       const ValueAssignment& r) {
  const auto elems = iso.elements();
  for (const auto& u : elems)
    if (!r.defined(u))
      throw contract_error("stabilizer_projector: r undefined on subspace element " +
                           vec_label(u));
  if (auto bad = find_inconsistency(alg, r)) {
    std::ostringstream os;
    os << "stabilizer_projector: inconsistent outcomes at (" << vec_label(bad->u) << ", "
       << vec_label(bad->v) << ", " << vec_label(bad->sum) << ")";
    throw contract_error(os.str());
  }

  const int N = alg.dim();
  CMatrix sum = CMatrix::Zero(N, N);
  for (const auto& u : elems) {
    const double angle = -2.0 * M_PI * r.at(u) / alg.d();
    sum += Complex(std::cos(angle), std::sin(angle)) * alg.pauli(u);
  }
  HermitianOperator op;
  op.d = alg.d();
  op.n = alg.n();
  op.label = "stabilizer";
  op.mat = sum / static_cast<double>(elems.size());
  return op;
}

std::vector<StabilizerLabel> enumerate_stabilizer_labels(int d, int n) {
  const PauliAlgebra alg(d, n);
  const auto lagrangians = enumerate_isotropic(d, n, n);
  std::vector<StabilizerLabel> out;
  out.reserve(lagrangians.size() * ipow(d, n));
  std::vector<int> bvals(n, 0);
  for (const auto& lag : lagrangians) {
    const std::int64_t total = ipow(d, n);
    for (std::int64_t t = 0; t < total; ++t) {
      std::int64_t rem = t;
      for (int i = n - 1; i >= 0; --i) {
        bvals[i] = static_cast<int>(rem % d);
        rem /= d;
      }
      out.push_back(StabilizerLabel{lag, subspace_assignment(alg, lag, bvals)});
    }
  }
  return out;
}

std::vector<HermitianOperator> enumerate_stabilizer_states(int d, int n) {
  if (ipow(d, n) > 64)
    throw guard_error("enumerate_stabilizer_states: d^n > 64 materialization guard");
  const PauliAlgebra alg(d, n);
  std::vector<HermitianOperator> out;
  for (const auto& label : enumerate_stabilizer_labels(d, n)) {
    auto op = stabilizer_projector(alg, label.lagrangian, label.r);
    op.label = "stabilizer";
    out.push_back(std::move(op));
  }
  return out;
}

std::vector<int> qubit_sign_vector(const StabilizerLabel& label) {
  const int d = label.lagrangian.d;
  if (d != 2) throw std::invalid_argument("qubit_sign_vector: d must be 2");
  const int n = label.lagrangian.n;
  const std::int64_t points = ipow(2, 2 * n);
  std::vector<int> signs(points - 1, 0);
  for (const auto& u : label.lagrangian.elements()) {
    if (u.is_zero()) continue;
    signs[u.index() - 1] = label.r.at(u) == 0 ? 1 : -1;
  }
  return signs;
}

// ---- CNC (qubits) ----

namespace {

// Coset representatives (minimal index per coset) of I inside its
// symplectic complement, zero coset excluded.
std::vector<SymplecticVector> perp_coset_reps(const IsotropicSubspace& iso) {
  const auto points = all_vectors(iso.d, iso.n);
  std::set<std::int64_t> seen;
  std::vector<SymplecticVector> reps;
  const auto iso_elems = iso.elements();
  for (const auto& v : points) {
    bool in_perp = true;
    for (const auto& b : iso.basis)
      if (symplectic_form(v, b) != 0) {
        in_perp = false;
        break;
      }
    if (!in_perp || iso.contains(v)) continue;
    if (seen.count(v.index())) continue;
    reps.push_back(v);
    for (const auto& e : iso_elems) seen.insert((v + e).index());
  }
  return reps;
}

CncSet build_cnc_set(int n, int m, const IsotropicSubspace& iso,
                     std::vector<SymplecticVector> anchors) {
  CncSet set;
  set.n = n;
  set.m = m;
  set.iso = iso;
  set.anchors = std::move(anchors);
  std::set<std::int64_t> omega_idx;
  std::vector<SymplecticVector> omega;
  auto add = [&](const SymplecticVector& v) {
    if (omega_idx.insert(v.index()).second) omega.push_back(v);
  };
  for (const auto& e : iso.elements()) add(e);
  for (const auto& a : set.anchors)
    for (const auto& e : iso.elements()) add(a + e);
  std::sort(omega.begin(), omega.end(),
            [](const auto& x, const auto& y) { return x.index() < y.index(); });
  set.omega = std::move(omega);
  const std::int64_t expected = (2 * m + 2) * ipow(2, n - m);
  if (static_cast<std::int64_t>(set.omega.size()) != expected)
    throw consistency_error("CNC set size != (2m+2) 2^{n-m}");
  return set;
}

}  // namespace

std::vector<CncSet> enumerate_maximal_cnc_sets(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("enumerate_maximal_cnc_sets: m out of range");
  if (n > 3) throw guard_error("enumerate_maximal_cnc_sets: n > 3 enumeration guard");

  std::vector<CncSet> out;
  const int xi = 2 * m + 1;
  for (const auto& iso : enumerate_isotropic(2, n, n - m)) {
    const auto reps = perp_coset_reps(iso);
    // Pairwise anticommuting xi-subsets of cosets (well-defined modulo I).
    std::vector<int> pick;
    auto backtrack = [&](auto&& self, int start) -> void {
      if (static_cast<int>(pick.size()) == xi) {
        std::vector<SymplecticVector> anchors;
        for (int i : pick) anchors.push_back(reps[i]);
        out.push_back(build_cnc_set(n, m, iso, std::move(anchors)));
        return;
      }
      for (int i = start; i < static_cast<int>(reps.size()); ++i) {
        bool ok = true;
        for (int j : pick)
          if (symplectic_form(reps[i], reps[j]) != 1) {
            ok = false;
            break;
          }
        if (!ok) continue;
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    backtrack(backtrack, 0);
  }
  return out;
}

std::vector<ValueAssignment> cnc_value_assignments(const PauliAlgebra& alg, const CncSet& set) {
  const int free_iso = set.iso.dim();
  const int xi = static_cast<int>(set.anchors.size());
  const auto iso_elems = set.iso.elements();

  std::vector<ValueAssignment> out;
  out.reserve(ipow(2, free_iso + xi));
  std::vector<int> bvals(free_iso, 0);
  for (std::int64_t ib = 0; ib < ipow(2, free_iso); ++ib) {
    for (int i = 0; i < free_iso; ++i) bvals[i] = static_cast<int>((ib >> i) & 1);
    const ValueAssignment base = subspace_assignment(alg, set.iso, bvals);
    for (std::int64_t ia = 0; ia < ipow(2, xi); ++ia) {
      ValueAssignment gamma = base;
      for (int k = 0; k < xi; ++k) {
        const int ak_val = static_cast<int>((ia >> k) & 1);
        for (const auto& e : iso_elems) {
          const int v = (ak_val + base.at(e) + alg.beta(set.anchors[k], e)) % 2;
          gamma.values[set.anchors[k] + e] = v;
        }
      }
      if (auto bad = find_inconsistency(alg, gamma))
        throw consistency_error("cnc_value_assignments: inferred assignment inconsistent");
      out.push_back(std::move(gamma));
    }
  }
  return out;
}

HermitianOperator cnc_operator(const PauliAlgebra& alg, const CncSet& set,
                               const ValueAssignment& gamma) {
  const int N = alg.dim();
  CMatrix sum = CMatrix::Zero(N, N);
  for (const auto& v : set.omega) {
    const double angle = -2.0 * M_PI * gamma.at(v) / alg.d();
    sum += Complex(std::cos(angle), std::sin(angle)) * alg.pauli(v);
  }
  HermitianOperator op;
  op.d = 2;
  op.n = set.n;
  op.label = "CNC(m=" + std::to_string(set.m) + ")";
  op.mat = sum / static_cast<double>(N);
  return op;
}

void for_each_cnc_operator(
    const PauliAlgebra& alg, int n, int m,
    const std::function<void(const CncSet&, const ValueAssignment&, const HermitianOperator&)>&
        visit) {
  for (const auto& set : enumerate_maximal_cnc_sets(n, m))
    for (const auto& gamma : cnc_value_assignments(alg, set))
      visit(set, gamma, cnc_operator(alg, set, gamma));
}

std::vector<HermitianOperator> enumerate_cnc_operators(int n, int m) {
  const PauliAlgebra alg(2, n);
  std::vector<HermitianOperator> out;
  for_each_cnc_operator(alg, n, m,
                        [&](const CncSet&, const ValueAssignment&, const HermitianOperator& op) {
                          out.push_back(op);
                        });
  return out;
}

bool contains_mermin_square(std::span<const SymplecticVector> omega) {
  std::vector<SymplecticVector> v;
  std::set<std::int64_t> members;
  for (const auto& u : omega) {
    members.insert(u.index());
    if (!u.is_zero()) v.push_back(u);
  }
  const int k = static_cast<int>(v.size());
  // Grid corners (p,q;r,s): rows/columns commute, diagonals anticommute.
  for (int ip = 0; ip < k; ++ip)
    for (int iq = 0; iq < k; ++iq) {
      if (iq == ip || symplectic_form(v[ip], v[iq]) != 0) continue;
      for (int ir = 0; ir < k; ++ir) {
        if (ir == ip || ir == iq || symplectic_form(v[ip], v[ir]) != 0 ||
            symplectic_form(v[iq], v[ir]) != 1)
          continue;
        for (int is = 0; is < k; ++is) {
          if (is == ip || is == iq || is == ir) continue;
          if (symplectic_form(v[iq], v[is]) != 0 || symplectic_form(v[ir], v[is]) != 0 ||
              symplectic_form(v[ip], v[is]) != 1)
            continue;
          const std::array<SymplecticVector, 9> grid = {
              v[ip],          v[iq],          v[ip] + v[iq],
              v[ir],          v[is],          v[ir] + v[is],
              v[ip] + v[ir],  v[iq] + v[is],  (v[ip] + v[iq]) + (v[ir] + v[is])};
          std::set<std::int64_t> distinct;
          bool ok = true;
          for (const auto& g : grid) {
            if (g.is_zero() || !members.count(g.index())) {
              ok = false;
              break;
            }
            distinct.insert(g.index());
          }
          if (ok && distinct.size() == 9) return true;
        }
      }
    }
  return false;
}

// ---- Wigner machinery (odd d) ----

namespace {

void require_odd(int d, const char* where) {
  if (d % 2 == 0)
    throw std::invalid_argument(std::string(where) + ": defined for odd prime d only");
  if (!is_supported_prime(d)) throw std::invalid_argument(std::string(where) + ": unsupported d");
}

}  // namespace

HermitianOperator parity_operator(int d, int n) {
  require_odd(d, "parity_operator");
  const int N = static_cast<int>(ipow(d, n));
  CMatrix a0 = CMatrix::Zero(N, N);
  for (int j = 0; j < N; ++j) {
    // |-j><j| with digitwise negation mod d.
    int rem = j, neg = 0, place = 1;
    for (int k = 0; k < n; ++k) {
      const int digit = rem % d;
      neg += ((d - digit) % d) * place;
      rem /= d;
      place *= d;
    }
    a0(neg, j) = 1.0;
  }
  return HermitianOperator{d, n, "phase-point", std::move(a0)};
}

std::vector<HermitianOperator> phase_point_operators(int d, int n) {
  require_odd(d, "phase_point_operators");
  const PauliAlgebra alg(d, n);
  const HermitianOperator a0 = parity_operator(d, n);
  std::vector<HermitianOperator> out;
  out.reserve(alg.num_points());
  for (const auto& u : all_vectors(d, n)) {
    const CMatrix& t = alg.pauli(u);
    out.push_back(HermitianOperator{d, n, "phase-point", t * a0.mat * t.adjoint()});
  }
  return out;
}

double WignerFunction::min() const { return *std::min_element(values.begin(), values.end()); }

double WignerFunction::sum() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

WignerFunction wigner_function(const HermitianOperator& rho) {
  require_odd(rho.d, "wigner_function");
  const auto points = phase_point_operators(rho.d, rho.n);
  WignerFunction w;
  w.d = rho.d;
  w.n = rho.n;
  w.values.reserve(points.size());
  const double N = static_cast<double>(rho.dim());
  for (const auto& a : points) {
    const Complex t = (rho.mat * a.mat).trace();
    if (std::abs(t.imag()) > 1e-9)
      throw contract_error("wigner_function: input is not Hermitian");
    w.values.push_back(t.real() / N);
  }
  return w;
}

HermitianOperator wigner_reconstruct(const WignerFunction& w) {
  const auto points = phase_point_operators(w.d, w.n);
  const int N = points.front().dim();
  CMatrix m = CMatrix::Zero(N, N);
  for (std::size_t i = 0; i < points.size(); ++i) m += w.values[i] * points[i].mat;
  return HermitianOperator{w.d, w.n, "generic", std::move(m)};
}

std::vector<HermitianOperator> qutrit_lambda_vertices() {
  const PauliAlgebra alg(3, 1);
  // Lines through the origin of Z_3^2, one representative each.
  const std::vector<SymplecticVector> line_reps = {
      SymplecticVector(3, 1, {0}, {1}),
      SymplecticVector(3, 1, {1}, {0}),
      SymplecticVector(3, 1, {1}, {1}),
      SymplecticVector(3, 1, {1}, {2}),
  };

  const auto stab = enumerate_stabilizer_states(3, 1);

  std::vector<HermitianOperator> out;
  out.reserve(81);
  for (int g0 = 0; g0 < 3; ++g0)
    for (int g1 = 0; g1 < 3; ++g1)
      for (int g2 = 0; g2 < 3; ++g2)
        for (int g3 = 0; g3 < 3; ++g3) {
          const std::array<int, 4> g = {g0, g1, g2, g3};
          ValueAssignment gamma;
          gamma.values[SymplecticVector::zero(3, 1)] = 0;
          for (int line = 0; line < 4; ++line)
            for (int c = 1; c < 3; ++c)
              gamma.values[scale(c, line_reps[line])] = c * g[line] % 3;

          // Linear iff gamma(u) = s.u for some functional s.
          bool linear = false;
          for (int s0 = 0; s0 < 3 && !linear; ++s0)
            for (int s1 = 0; s1 < 3 && !linear; ++s1) {
              bool match = true;
              for (const auto& [u, val] : gamma.values)
                if ((s0 * u.z[0] + s1 * u.x[0]) % 3 != val) {
                  match = false;
                  break;
                }
              linear = match;
            }

          CMatrix sum = CMatrix::Zero(3, 3);
          for (const auto& [u, val] : gamma.values) {
            const double angle = -2.0 * M_PI * val / 3.0;
            sum += Complex(std::cos(angle), std::sin(angle)) * alg.pauli(u);
          }
          HermitianOperator op{3, 1, linear ? "CNC(linear)" : "CNC(nonlinear)", sum / 3.0};

          // Certify: in Lambda, with a tight facet set of full affine rank.
          std::vector<Eigen::VectorXd> tight;
          for (const auto& sigma : stab) {
            const double overlap = (op.mat * sigma.mat).trace().real();
            if (overlap < -1e-12)
              throw consistency_error("qutrit_lambda_vertices: operator violates Lambda");
            if (overlap <= 1e-9) {
              const CMatrix traceless = sigma.mat - CMatrix::Identity(3, 3) / 3.0;
              tight.push_back(hermitian_to_real(traceless));
            }
          }
          if (tight.size() < 8) throw consistency_error("qutrit_lambda_vertices: not a vertex");
          Eigen::MatrixXd normals(static_cast<int>(tight.size()), 9);
          for (std::size_t i = 0; i < tight.size(); ++i) normals.row(static_cast<int>(i)) = tight[i];
          Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(normals);
          qr.setThreshold(1e-9);
          if (qr.rank() < 8)
            throw consistency_error("qutrit_lambda_vertices: tight set rank deficient");

          out.push_back(std::move(op));
        }
  return out;
}

}  // namespace stabspec
