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

#include "stabspec/phase_space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "stabspec/errors.hpp"

namespace stabspec {

namespace {

int mod_inverse(int a, int d) {
  a %= d;
  for (int t = 1; t < d; ++t)
    if (a * t % d == 1) return t;
  throw contract_error("mod_inverse: " + std::to_string(a) + " not invertible mod " +
                       std::to_string(d));
}

void require_same_space(const SymplecticVector& u, const SymplecticVector& v,
                        const char* where) {
  if (u.d != v.d || u.n != v.n)
    throw std::invalid_argument(std::string(where) + ": mismatched (d, n): (" +
                                std::to_string(u.d) + "," + std::to_string(u.n) + ") vs (" +
                                std::to_string(v.d) + "," + std::to_string(v.n) + ")");
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Flattened (z|x) row of length 2n.
std::vector<int> to_row(const SymplecticVector& u) {
  std::vector<int> row(u.z);
  row.insert(row.end(), u.x.begin(), u.x.end());
  return row;
}

SymplecticVector from_row(int d, int n, const std::vector<int>& row) {
  return SymplecticVector(d, n, std::vector<int>(row.begin(), row.begin() + n),
                          std::vector<int>(row.begin() + n, row.end()));
}

// In-place RREF over Z_d (d prime). Returns pivot columns; zero rows removed.
std::vector<int> rref_rows(std::vector<std::vector<int>>& rows, int d) {
  const int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  int r = 0;
  std::vector<int> pivots;
  for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] % d != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    const int inv = mod_inverse(rows[r][c], d);
    for (int& e : rows[r]) e = e * inv % d;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const int f = rows[i][c];
      for (int k = 0; k < ncols; ++k) rows[i][k] = ((rows[i][k] - f * rows[r][k]) % d + d) % d;
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

bool is_supported_prime(int d) { return d == 2 || d == 3 || d == 5 || d == 7; }

SymplecticVector::SymplecticVector(int d_, int n_, std::vector<int> z_, std::vector<int> x_)
    : d(d_), n(n_), z(std::move(z_)), x(std::move(x_)) {
  if (!is_supported_prime(d)) throw std::invalid_argument("SymplecticVector: unsupported d");
  if (n < 1 || static_cast<int>(z.size()) != n || static_cast<int>(x.size()) != n)
    throw std::invalid_argument("SymplecticVector: bad component lengths");
  for (int& e : z) e = (e % d + d) % d;
  for (int& e : x) e = (e % d + d) % d;
}

SymplecticVector SymplecticVector::zero(int d, int n) {
  return SymplecticVector(d, n, std::vector<int>(n, 0), std::vector<int>(n, 0));
}

SymplecticVector SymplecticVector::from_index(int d, int n, std::int64_t index) {
  std::vector<int> digits(2 * n);
  for (int k = 2 * n - 1; k >= 0; --k) {
    digits[k] = static_cast<int>(index % d);
    index /= d;
  }
  return SymplecticVector(d, n, std::vector<int>(digits.begin(), digits.begin() + n),
                          std::vector<int>(digits.begin() + n, digits.end()));
}

bool SymplecticVector::is_zero() const {
  return std::all_of(z.begin(), z.end(), [](int e) { return e == 0; }) &&
         std::all_of(x.begin(), x.end(), [](int e) { return e == 0; });
}

std::int64_t SymplecticVector::index() const {
  std::int64_t idx = 0;
  for (int e : z) idx = idx * d + e;
  for (int e : x) idx = idx * d + e;
  return idx;
}

SymplecticVector operator+(const SymplecticVector& u, const SymplecticVector& v) {
  require_same_space(u, v, "operator+");
  SymplecticVector w = u;
  for (int k = 0; k < u.n; ++k) {
    w.z[k] = (u.z[k] + v.z[k]) % u.d;
    w.x[k] = (u.x[k] + v.x[k]) % u.d;
  }
  return w;
}

SymplecticVector operator-(const SymplecticVector& u) { return scale(u.d - 1, u); }

SymplecticVector scale(int c, const SymplecticVector& u) {
  c = (c % u.d + u.d) % u.d;
  SymplecticVector w = u;
  for (int k = 0; k < u.n; ++k) {
    w.z[k] = u.z[k] * c % u.d;
    w.x[k] = u.x[k] * c % u.d;
  }
  return w;
}

int symplectic_form(const SymplecticVector& u, const SymplecticVector& v) {
  require_same_space(u, v, "symplectic_form");
  int s = 0;
  for (int k = 0; k < u.n; ++k) s += u.z[k] * v.x[k] - u.x[k] * v.z[k];
  return (s % u.d + u.d) % u.d;
}

std::vector<SymplecticVector> all_vectors(int d, int n) {
  const std::int64_t total = ipow(d, 2 * n);
  std::vector<SymplecticVector> out;
  out.reserve(total);
  for (std::int64_t i = 0; i < total; ++i) out.push_back(SymplecticVector::from_index(d, n, i));
  return out;
}

std::int64_t IsotropicSubspace::size() const { return ipow(d, dim()); }

std::vector<SymplecticVector> IsotropicSubspace::elements() const {
  std::vector<SymplecticVector> elems{SymplecticVector::zero(d, n)};
  for (const auto& b : basis) {
    std::vector<SymplecticVector> next;
    next.reserve(elems.size() * d);
    for (int c = 0; c < d; ++c)
      for (const auto& e : elems) next.push_back(e + scale(c, b));
    elems = std::move(next);
  }
  std::sort(elems.begin(), elems.end(),
            [](const auto& a, const auto& b) { return a.index() < b.index(); });
  return elems;
}

bool IsotropicSubspace::contains(const SymplecticVector& v) const {
  // Reduce v against the RREF basis.
  std::vector<int> row = to_row(v);
  for (const auto& b : basis) {
    std::vector<int> brow = to_row(b);
    int lead = -1;
    for (int c = 0; c < 2 * n; ++c)
      if (brow[c] != 0) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    const int f = row[lead];  // basis row has a unit pivot
    if (f == 0) continue;
    for (int c = 0; c < 2 * n; ++c) row[c] = ((row[c] - f * brow[c]) % d + d) % d;
  }
  return std::all_of(row.begin(), row.end(), [](int e) { return e == 0; });
}

std::vector<SymplecticVector> rref_basis(int d, int n, std::span<const SymplecticVector> gens) {
  std::vector<std::vector<int>> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.d != d || g.n != n) throw std::invalid_argument("rref_basis: mismatched (d, n)");
    rows.push_back(to_row(g));
  }
  rref_rows(rows, d);
  std::vector<SymplecticVector> basis;
  basis.reserve(rows.size());
  for (const auto& row : rows) basis.push_back(from_row(d, n, row));
  return basis;
}

IsotropicSubspace make_isotropic_subspace(int d, int n,
                                          std::span<const SymplecticVector> gens) {
  IsotropicSubspace s;
  s.d = d;
  s.n = n;
  s.basis = rref_basis(d, n, gens);
  if (s.dim() > n)
    throw contract_error("make_isotropic_subspace: dimension exceeds n");
  for (std::size_t i = 0; i < s.basis.size(); ++i)
    for (std::size_t j = i + 1; j < s.basis.size(); ++j)
      if (symplectic_form(s.basis[i], s.basis[j]) != 0)
        throw contract_error("make_isotropic_subspace: generators do not span an isotropic subspace");
  return s;
}

std::vector<IsotropicSubspace> enumerate_isotropic(int d, int n, int dim) {
  if (!is_supported_prime(d)) throw std::invalid_argument("enumerate_isotropic: unsupported d");
  if (dim < 0 || dim > n) throw std::invalid_argument("enumerate_isotropic: dim out of range");
  if (ipow(d, n) > 128) throw guard_error("enumerate_isotropic: d^n > 128 enumeration guard");

  const auto points = all_vectors(d, n);
  std::set<std::vector<std::vector<int>>> seen;  // canonical basis matrices
  std::vector<IsotropicSubspace> out;

  std::vector<SymplecticVector> chosen;
  // Backtrack over index-increasing tuples of independent, pairwise-isotropic
  // vectors; canonical RREF dedups the multiple bases per subspace.
  auto emit = [&] {
    IsotropicSubspace s = make_isotropic_subspace(d, n, chosen);
    std::vector<std::vector<int>> key;
    for (const auto& b : s.basis) key.push_back(to_row(b));
    if (seen.insert(key).second) out.push_back(std::move(s));
  };

  if (dim == 0) {
    emit();
    return out;
  }

  auto backtrack = [&](auto&& self, std::int64_t min_index) -> void {
    for (std::int64_t i = min_index; i < static_cast<std::int64_t>(points.size()); ++i) {
      const auto& v = points[i];
      if (v.is_zero()) continue;
      bool ok = true;
      for (const auto& c : chosen)
        if (symplectic_form(c, v) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (rref_basis(d, n, chosen).size() + 1 !=
          [&] {
            auto with = chosen;
            with.push_back(v);
            return rref_basis(d, n, with).size();
          }())
        continue;  // dependent
      chosen.push_back(v);
      if (static_cast<int>(chosen.size()) == dim)
        emit();
      else
        self(self, i + 1);
      chosen.pop_back();
    }
  };
  backtrack(backtrack, 0);

  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t expected_lagrangian_count(int d, int n) {
  std::int64_t c = 1;
  for (int k = 1; k <= n; ++k) c *= ipow(d, k) + 1;
  return c;
}

}  // namespace stabspec
