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

#include <complex>
#include <set>

#include "doctest.h"
#include "stabspec/errors.hpp"
#include "stabspec/rng.hpp"
#include "stabspec/spectral_core.hpp"

using namespace stabspec;
using Complex = std::complex<double>;

namespace {

SymplecticVector sv(int d, std::vector<int> z, std::vector<int> x) {
  const int n = static_cast<int>(z.size());
  return SymplecticVector(d, n, std::move(z), std::move(x));
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

CMatrix pauli2(char c) {
  CMatrix m(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default:  m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

TEST_CASE("pauli_word goldens") {
  CHECK(max_abs_diff(pauli_word(sv(2, {1}, {0})), pauli2('Z')) < 1e-15);
  CHECK(max_abs_diff(pauli_word(sv(2, {0}, {1})), pauli2('X')) < 1e-15);
  // u = (1,1) evaluates to the Hermitian Pauli Y with the tau convention.
  CHECK(max_abs_diff(pauli_word(sv(2, {1}, {1})), pauli2('Y')) < 1e-15);

  CMatrix z3 = CMatrix::Zero(3, 3);
  const Complex w = std::polar(1.0, 2.0 * M_PI / 3.0);
  z3(0, 0) = 1;
  z3(1, 1) = w;
  z3(2, 2) = w * w;
  CHECK(max_abs_diff(pauli_word(sv(3, {1}, {0})), z3) < 1e-14);
}

TEST_CASE("pauli orthogonality Tr(T_u^dag T_v) = d^n delta") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}}) {
    const PauliAlgebra alg(d, n);
    const auto pts = all_vectors(d, n);
    for (const auto& u : pts)
      for (const auto& v : pts) {
        const Complex tr = alg.pauli(u).conjugate().cwiseProduct(alg.pauli(v)).sum();
        const double expect = (u == v) ? static_cast<double>(alg.dim()) : 0.0;
        CHECK(std::abs(tr - expect) < 1e-10);
      }
  }
}

TEST_CASE("beta is zero for odd d and obeys the product identity") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}}) {
    const PauliAlgebra alg(d, n);
    const auto pts = all_vectors(d, n);
    for (const auto& u : pts)
      for (const auto& v : pts) {
        if (symplectic_form(u, v) != 0) continue;
        CHECK(alg.beta(u, v) == 0);
      }
  }
}

TEST_CASE("beta qubit goldens and the defining identity") {
  const PauliAlgebra alg(2, 1);
  CHECK(alg.beta(sv(2, {1}, {0}), sv(2, {1}, {0})) == 0);  // Z Z = I
  CHECK(alg.beta(sv(2, {1}, {1}), sv(2, {1}, {1})) == 0);  // Y Y = I
  CHECK_THROWS_AS(alg.beta(sv(2, {1}, {0}), sv(2, {0}, {1})), contract_error);

  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    const PauliAlgebra a(d, n);
    const Complex omega = a.omega();
    for (const auto& u : all_vectors(d, n))
      for (const auto& v : all_vectors(d, n)) {
        if (symplectic_form(u, v) != 0) continue;
        const int b = a.beta(u, v);
        const CMatrix lhs = a.pauli(u) * a.pauli(v);
        const CMatrix rhs = std::pow(omega, -b) * a.pauli(u + v);
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);
      }
  }
}

TEST_CASE("stabilizer projector: trivial subspace gives the identity") {
  const PauliAlgebra alg(2, 2);
  const auto iso = make_isotropic_subspace(2, 2, std::vector<SymplecticVector>{});
  const auto r = subspace_assignment(alg, iso, std::vector<int>{});
  const auto op = stabilizer_projector(alg, iso, r);
  CHECK(max_abs_diff(op.mat, CMatrix::Identity(4, 4)) < 1e-14);
}

TEST_CASE("stabilizer projector: Z=+1 eigenprojector is |0><0|") {
  const PauliAlgebra alg(2, 1);
  const std::vector<SymplecticVector> gens = {sv(2, {1}, {0})};
  const auto iso = make_isotropic_subspace(2, 1, gens);
  const std::vector<int> vals = {0};
  const auto op = stabilizer_projector(alg, iso, subspace_assignment(alg, iso, vals));
  CMatrix expect = CMatrix::Zero(2, 2);
  expect(0, 0) = 1;
  CHECK(max_abs_diff(op.mat, expect) < 1e-14);
}

TEST_CASE("projector laws over all labels") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    const PauliAlgebra alg(d, n);
    for (const auto& label : enumerate_stabilizer_labels(d, n)) {
      const auto op = stabilizer_projector(alg, label.lagrangian, label.r);
      CHECK(is_hermitian(op.mat, 1e-12));
      CHECK(max_abs_diff(op.mat * op.mat, op.mat) < 1e-10);
      CHECK(std::abs(op.mat.trace().real() - 1.0) < 1e-10);  // rank 1 for Lagrangians
    }
    // A non-Lagrangian isotropic subspace gives rank d^n / |I|.
    for (const auto& iso : enumerate_isotropic(d, n, n - 1)) {
      std::vector<int> vals(iso.dim(), 0);
      const auto op = stabilizer_projector(alg, iso, subspace_assignment(alg, iso, vals));
      CHECK(max_abs_diff(op.mat * op.mat, op.mat) < 1e-10);
      const double rank = op.mat.trace().real();
      CHECK(rank == doctest::Approx(static_cast<double>(alg.dim()) / iso.size()).epsilon(1e-10));
    }
  }
}

TEST_CASE("inconsistent outcome function is rejected with the violating triple") {
  const PauliAlgebra alg(2, 2);
  const auto lagr = enumerate_isotropic(2, 2, 2).front();
  std::vector<int> vals = {0, 0};
  auto r = subspace_assignment(alg, lagr, vals);
  const auto sum = lagr.basis[0] + lagr.basis[1];
  r.values[sum] = (r.values[sum] + 1) % 2;
  CHECK_THROWS_AS(stabilizer_projector(alg, lagr, r), contract_error);
}

TEST_CASE("stabilizer state counts") {
  CHECK(enumerate_stabilizer_states(2, 1).size() == 6);
  CHECK(enumerate_stabilizer_states(2, 2).size() == 60);
  CHECK(enumerate_stabilizer_states(3, 1).size() == 12);
  CHECK(enumerate_stabilizer_labels(2, 3).size() == 1080);
}

TEST_CASE("qubit sign vectors match matrix traces") {
  for (int n : {1, 2}) {
    const PauliAlgebra alg(2, n);
    const auto pts = all_vectors(2, n);
    for (const auto& label : enumerate_stabilizer_labels(2, n)) {
      const auto op = stabilizer_projector(alg, label.lagrangian, label.r);
      const auto signs = qubit_sign_vector(label);
      for (std::size_t a = 1; a < pts.size(); ++a) {
        const double tr = (op.mat * alg.pauli(pts[a])).trace().real();
        CHECK(tr == doctest::Approx(static_cast<double>(signs[a - 1])).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("single-qubit maximal CNC operators are the cube vertices") {
  const auto ops = enumerate_cnc_operators(1, 1);
  REQUIRE(ops.size() == 8);
  std::vector<CMatrix> expected;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1})
        expected.push_back(
            (pauli2('I') + sx * pauli2('X') + sy * pauli2('Y') + sz * pauli2('Z')) / 2.0);
  for (const auto& op : ops) {
    bool found = false;
    for (const auto& e : expected)
      if (max_abs_diff(op.mat, e) < 1e-12) found = true;
    CHECK(found);
  }
}

TEST_CASE("CNC enumeration counts") {
  CHECK(enumerate_maximal_cnc_sets(1, 1).size() == 1);
  CHECK(enumerate_maximal_cnc_sets(2, 1).size() == 15);
  CHECK(enumerate_maximal_cnc_sets(2, 2).size() == 6);
  CHECK(enumerate_maximal_cnc_sets(3, 1).size() == 315);
  CHECK(enumerate_maximal_cnc_sets(3, 2).size() == 378);
  CHECK(enumerate_maximal_cnc_sets(3, 3).size() == 288);
  CHECK_THROWS_AS(enumerate_maximal_cnc_sets(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_maximal_cnc_sets(4, 1), guard_error);
}

TEST_CASE("CNC value assignment count is 2^{(n-m)+(2m+1)}") {
  const PauliAlgebra alg2(2, 2);
  for (int m : {1, 2}) {
    const auto sets = enumerate_maximal_cnc_sets(2, m);
    for (const auto& s : sets)
      CHECK(cnc_value_assignments(alg2, s).size() ==
            static_cast<std::size_t>(1) << ((2 - m) + (2 * m + 1)));
  }
}

TEST_CASE("CNC set sizes match (2m+2) 2^{n-m}") {
  for (int n : {1, 2, 3})
    for (int m = 1; m <= n; ++m)
      for (const auto& s : enumerate_maximal_cnc_sets(n, m))
        CHECK(static_cast<int>(s.omega.size()) == (2 * m + 2) * (1 << (n - m)));
}

TEST_CASE("CNC operators: Hermitian, unit trace, norm law |Omega|/d^n") {
  for (int n : {1, 2}) {
    const PauliAlgebra alg(2, n);
    for (int m = 1; m <= n; ++m)
      for_each_cnc_operator(alg, n, m,
                            [&](const CncSet& set, const ValueAssignment&,
                                const HermitianOperator& op) {
                              CHECK(is_hermitian(op.mat, 1e-12));
                              CHECK(std::abs(op.mat.trace().real() - 1.0) < 1e-12);
                              const double hs = (op.mat * op.mat).trace().real();
                              const double expect =
                                  static_cast<double>(set.omega.size()) / alg.dim();
                              CHECK(hs == doctest::Approx(expect).epsilon(1e-10));
                            });
  }
}

TEST_CASE("Mermin square detector: positive control") {
  // XI IX XX / IZ ZI ZZ / XZ ZX YY
  const std::vector<SymplecticVector> square = {
      sv(2, {0, 0}, {1, 0}), sv(2, {0, 0}, {0, 1}), sv(2, {0, 0}, {1, 1}),
      sv(2, {0, 1}, {0, 0}), sv(2, {1, 0}, {0, 0}), sv(2, {1, 1}, {0, 0}),
      sv(2, {0, 1}, {1, 0}), sv(2, {1, 0}, {0, 1}), sv(2, {1, 1}, {1, 1})};
  CHECK(contains_mermin_square(square));
}

TEST_CASE("no enumerated CNC set contains a Mermin square") {
  for (int n : {2, 3})
    for (int m = 1; m <= n; ++m)
      for (const auto& s : enumerate_maximal_cnc_sets(n, m))
        CHECK_FALSE(contains_mermin_square(s.omega));
}

TEST_CASE("parity operator is the |-j><j| permutation") {
  const auto a0 = parity_operator(3, 1);
  CMatrix expect = CMatrix::Zero(3, 3);
  expect(0, 0) = 1;
  expect(2, 1) = 1;
  expect(1, 2) = 1;
  CHECK(max_abs_diff(a0.mat, expect) < 1e-15);
  // Pauli-sum form: A_0 = (1/d^n) sum_u T_u.
  const PauliAlgebra alg(3, 1);
  CMatrix sum = CMatrix::Zero(3, 3);
  for (const auto& u : all_vectors(3, 1)) sum += alg.pauli(u);
  CHECK(max_abs_diff(a0.mat, sum / 3.0) < 1e-13);
}

TEST_CASE("phase point operators: count, trace, involution, orthogonality") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}}) {
    const auto pts = phase_point_operators(d, n);
    const double N = std::pow(d, n);
    CHECK(pts.size() == static_cast<std::size_t>(N * N));
    for (const auto& a : pts) {
      CHECK(is_hermitian(a.mat, 1e-12));
      CHECK(std::abs(a.mat.trace().real() - 1.0) < 1e-12);
      CHECK(max_abs_diff(a.mat * a.mat, CMatrix::Identity(a.dim(), a.dim())) < 1e-12);
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) {
        const double tr = (pts[i].mat * pts[j].mat).trace().real();
        CHECK(std::abs(tr - (i == j ? N : 0.0)) < 1e-10);
      }
  }
  CHECK_THROWS_AS(phase_point_operators(2, 1), std::invalid_argument);
}

TEST_CASE("wigner function: normalization, uniformity, reconstruction") {
  // Maximally mixed state: uniform value 1/d^{2n}.
  {
    HermitianOperator rho{3, 1, "generic", CMatrix::Identity(3, 3) / 3.0};
    const auto w = wigner_function(rho);
    for (double v : w.values) CHECK(v == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  }
  // Random qutrit pure state: sums to one, reconstructs to 1e-10.
  CounterRng rng(20260810, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const auto psi = haar_state(3, rng);
    HermitianOperator rho{3, 1, "generic", psi * psi.adjoint()};
    const auto w = wigner_function(rho);
    CHECK(std::abs(w.sum() - 1.0) < 1e-12);
    CHECK(max_abs_diff(wigner_reconstruct(w).mat, rho.mat) < 1e-10);
  }
  // Stabilizer states are Wigner-nonnegative.
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}}) {
    for (const auto& st : enumerate_stabilizer_states(d, n))
      CHECK(wigner_function(st).min() >= -1e-12);
  }
  CHECK_THROWS_AS(wigner_function(HermitianOperator{2, 1, "g", CMatrix::Identity(2, 2) / 2.0}),
                  std::invalid_argument);
}

TEST_CASE("qutrit Lambda vertices: 81 certified, 9 linear = phase points") {
  const auto verts = qutrit_lambda_vertices();
  REQUIRE(verts.size() == 81);
  int linear = 0;
  const auto points = phase_point_operators(3, 1);
  const auto stab = enumerate_stabilizer_states(3, 1);
  for (const auto& v : verts) {
    CHECK(is_hermitian(v.mat, 1e-12));
    CHECK(std::abs(v.mat.trace().real() - 1.0) < 1e-12);
    for (const auto& s : stab)
      CHECK((v.mat * s.mat).trace().real() >= -1e-12);
    if (v.label == "CNC(linear)") {
      ++linear;
      bool matched = false;
      for (const auto& p : points)
        if (max_abs_diff(v.mat, p.mat) < 1e-12) matched = true;
      CHECK(matched);
    }
  }
  CHECK(linear == 9);

  // Spectra: (1,1,-1) for linear gamma, golden-ratio triple otherwise.
  const double r5 = std::sqrt(5.0);
  for (const auto& v : verts) {
    const auto spec = eigen_spectrum(v).sorted_desc();
    if (v.label == "CNC(linear)") {
      CHECK(spec[0] == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(spec[1] == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(spec[2] == doctest::Approx(-1.0).epsilon(1e-10));
    } else {
      CHECK(spec[0] == doctest::Approx((1.0 + r5) / 2.0).epsilon(1e-10));
      CHECK(std::abs(spec[1]) < 1e-10);
      CHECK(spec[2] == doctest::Approx((1.0 - r5) / 2.0).epsilon(1e-10));
    }
  }
}
