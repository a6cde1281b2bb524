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

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace stabspec {

bool is_supported_prime(int d);  // 2, 3, 5, 7

// Point of the finite symplectic phase space Z_d^{2n}, split into the Z-type
// and X-type halves u = (z | x). Entries are kept reduced to [0, d).
struct SymplecticVector {
  int d = 2;
  int n = 1;
  std::vector<int> z;  // length n
  std::vector<int> x;  // length n

  SymplecticVector() = default;
  SymplecticVector(int d, int n, std::vector<int> z, std::vector<int> x);
  static SymplecticVector zero(int d, int n);
  // Inverse of index(); vectors of fixed (d, n) are ordered by this encoding.
  static SymplecticVector from_index(int d, int n, std::int64_t index);

  bool is_zero() const;
  // Mixed-radix encoding: digits z[0..n) then x[0..n), most significant first.
  std::int64_t index() const;

  friend auto operator<=>(const SymplecticVector&, const SymplecticVector&) = default;
};

SymplecticVector operator+(const SymplecticVector& u, const SymplecticVector& v);
SymplecticVector operator-(const SymplecticVector& u);
SymplecticVector scale(int c, const SymplecticVector& u);

// [u,v] = u_z . v_x - u_x . v_z  (mod d); antisymmetric and bilinear.
int symplectic_form(const SymplecticVector& u, const SymplecticVector& v);

// All d^{2n} phase-space points in index order.
std::vector<SymplecticVector> all_vectors(int d, int n);

// Subspace on which the symplectic form vanishes identically. The stored
// basis is the reduced row echelon form of any generating set (rows over
// Z_d in (z|x) column order), which is the unique canonical representative
// of the subspace and therefore a valid dedup key.
struct IsotropicSubspace {
  int d = 2;
  int n = 1;
  std::vector<SymplecticVector> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  std::int64_t size() const;  // d^dim
  // All elements, sorted by index. Includes zero.
  std::vector<SymplecticVector> elements() const;
  bool contains(const SymplecticVector& v) const;

  friend auto operator<=>(const IsotropicSubspace&, const IsotropicSubspace&) = default;
};

// Canonicalizes a generating set; throws contract_error if the span is not
// isotropic.
IsotropicSubspace make_isotropic_subspace(int d, int n, std::span<const SymplecticVector> gens);

// Row-reduce arbitrary generators over Z_d and return an independent RREF
// basis (no isotropy requirement).
std::vector<SymplecticVector> rref_basis(int d, int n, std::span<const SymplecticVector> gens);

// All isotropic subspaces of the given dimension, each exactly once, in
// canonical order. dim == n gives the Lagrangians.
// Guards: dim <= n (invalid_argument), d^n <= 128 (guard_error).
std::vector<IsotropicSubspace> enumerate_isotropic(int d, int n, int dim);

// prod_{k=1..n} (d^k + 1)
std::int64_t expected_lagrangian_count(int d, int n);

}  // namespace stabspec
