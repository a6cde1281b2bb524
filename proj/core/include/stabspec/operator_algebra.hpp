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

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stabspec/phase_space.hpp"

namespace stabspec {

using CMatrix = Eigen::MatrixXcd;

struct HermitianOperator {
  int d = 2;
  int n = 1;
  std::string label;
  CMatrix mat;

  int dim() const { return static_cast<int>(mat.rows()); }
};

bool is_hermitian(const CMatrix& m, double tol = 1e-12);

// T_u = tau^{-u_z.u_x} (x)_k Z^{z_k} X^{x_k},  tau = (-1)^d e^{i pi/d}.
CMatrix pauli_word(const SymplecticVector& u);

// Hermitian operators as vectors of R^{N^2} with the Hilbert-Schmidt inner
// product preserved: (diagonal, sqrt(2) Re upper, sqrt(2) Im upper).
Eigen::VectorXd hermitian_to_real(const CMatrix& m);

// Cached Pauli words for a fixed (d, n), and the phase function beta defined
// operationally through matrix products:
//   T_u T_v = omega^{-beta(u,v)} T_{u+v}   whenever [u,v] = 0.
class PauliAlgebra {
 public:
  PauliAlgebra(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  int dim() const { return dim_; }           // d^n
  std::int64_t num_points() const { return static_cast<std::int64_t>(table_.size()); }
  std::complex<double> omega() const;        // e^{2 pi i / d}

  const CMatrix& pauli(const SymplecticVector& u) const;
  // Requires [u,v] = 0 (contract_error otherwise).
  int beta(const SymplecticVector& u, const SymplecticVector& v) const;

 private:
  int d_, n_, dim_;
  std::vector<CMatrix> table_;
  mutable std::unordered_map<std::uint64_t, int> beta_cache_;
};

// Outcome function on a subset of phase space (stabilizer r / CNC gamma).
struct ValueAssignment {
  std::map<SymplecticVector, int> values;

  int at(const SymplecticVector& u) const;
  bool defined(const SymplecticVector& u) const { return values.count(u) != 0; }
  std::vector<SymplecticVector> domain() const;
};

struct ViolatingTriple {
  SymplecticVector u, v, sum;
};

// First commuting pair in the domain with gamma(u)+gamma(v) !=
// gamma(u+v) - beta(u,v) (and u+v in the domain), if any.
std::optional<ViolatingTriple> find_inconsistency(const PauliAlgebra& alg,
                                                  const ValueAssignment& va);

// Extends free basis values over the whole subspace via
// r(u+v) = r(u) + r(v) + beta(u,v).
ValueAssignment subspace_assignment(const PauliAlgebra& alg, const IsotropicSubspace& iso,
                                    std::span<const int> basis_values);

// Pi = (1/|I|) sum_u omega^{-r(u)} T_u; rank d^n / |I|.
// Throws contract_error (with the violating triple) if r is inconsistent.
HermitianOperator stabilizer_projector(const PauliAlgebra& alg, const IsotropicSubspace& iso,
                                       const ValueAssignment& r);

struct StabilizerLabel {
  IsotropicSubspace lagrangian;
  ValueAssignment r;
};

std::vector<StabilizerLabel> enumerate_stabilizer_labels(int d, int n);
// All pure stabilizer projectors; count d^n prod_k (d^k + 1). Guard d^n <= 64.
std::vector<HermitianOperator> enumerate_stabilizer_states(int d, int n);

// Qubit Pauli-coordinate signs s_a = Tr(sigma T_a) in {-1,0,1}, nonzero a in
// index order (length 4^n - 1).
std::vector<int> qubit_sign_vector(const StabilizerLabel& label);

// ---- CNC sets and operators (qubits) ----

struct CncSet {
  int n = 1;
  int m = 1;
  IsotropicSubspace iso;                  // dimension n - m
  std::vector<SymplecticVector> anchors;  // 2m+1 coset representatives, pairwise anticommuting
  std::vector<SymplecticVector> omega;    // closure, sorted by index
};

// All inclusion-maximal CNC sets of type m on n qubits (d = 2).
// Guards: 1 <= m <= n (invalid_argument), n <= 3 (guard_error).
std::vector<CncSet> enumerate_maximal_cnc_sets(int n, int m);

// All noncontextual value assignments for a maximal set: free on a basis of
// I and on each anchor, inferred elsewhere; count 2^{(n-m) + (2m+1)}.
std::vector<ValueAssignment> cnc_value_assignments(const PauliAlgebra& alg, const CncSet& set);

// A = (1/d^n) sum_{v in Omega} omega^{-gamma(v)} T_v.
HermitianOperator cnc_operator(const PauliAlgebra& alg, const CncSet& set,
                               const ValueAssignment& gamma);

// Streaming enumeration over all (set, gamma) pairs of type m.
void for_each_cnc_operator(
    const PauliAlgebra& alg, int n, int m,
    const std::function<void(const CncSet&, const ValueAssignment&, const HermitianOperator&)>&
        visit);

// Materialized list (fine for n <= 2; ~71k operators at n = 3).
std::vector<HermitianOperator> enumerate_cnc_operators(int n, int m);

// True if some 3x3 grid of distinct nonzero vectors from the set has the
// Mermin-square commutation pattern (rows/columns commuting triples summing
// to zero, diagonally opposite corners anticommuting).
bool contains_mermin_square(std::span<const SymplecticVector> omega);

// ---- Discrete Wigner machinery (odd d) ----

// A_0 = sum_j |-j><j| = (1/d^n) sum_u T_u.
HermitianOperator parity_operator(int d, int n);
// A_u = T_u A_0 T_u^dagger for all d^{2n} points, in index order.
std::vector<HermitianOperator> phase_point_operators(int d, int n);

struct WignerFunction {
  int d = 3;
  int n = 1;
  std::vector<double> values;  // indexed by SymplecticVector::index()

  double at(const SymplecticVector& u) const { return values.at(static_cast<std::size_t>(u.index())); }
  double min() const;
  double sum() const;
};

// W_rho(u) = Tr(rho A_u) / d^n.
WignerFunction wigner_function(const HermitianOperator& rho);
// rho = sum_v W(v) A_v.
HermitianOperator wigner_reconstruct(const WignerFunction& w);

// The 81 vertices of the single-qutrit Lambda polytope: CNC operators on all
// of Z_3^2 with value assignments linear on each of the four lines through
// the origin. Each operator is certified to satisfy all 12 stabilizer
// inequalities with a tight set of full affine rank (consistency_error
// otherwise). Labels mark the 9 linear-assignment (phase-point) cases.
std::vector<HermitianOperator> qutrit_lambda_vertices();

}  // namespace stabspec
