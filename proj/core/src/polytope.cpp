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

#include "stabspec/polytope.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "stabspec/errors.hpp"
#include "stabspec/lp.hpp"
#include "stabspec/operator_algebra.hpp"

namespace stabspec {

namespace {

// ---- scalar kernels ----

template <class K>
struct NumOps;

template <>
struct NumOps<Rational> {
  static constexpr bool exact = true;
  static int sign(const Rational& x, double) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
  static Rational from_double(double x) { return Rational(x); }
  static double to_dbl(const Rational& x) { return to_double(x); }
};

template <>
struct NumOps<double> {
  static constexpr bool exact = false;
  static int sign(double x, double tol) { return std::abs(x) <= tol ? 0 : (x > 0 ? 1 : -1); }
  static double from_double(double x) { return x; }
  static double to_dbl(double x) { return x; }
};

template <class K>
K dot(const std::vector<K>& a, const std::vector<K>& b) {
  K s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Rank by Gaussian elimination; column-pivoted with an absolute pivot
// threshold in floating mode, exact pivoting otherwise. A rejected candidate
// pivot within a factor 100 of the threshold means the rank is not certifiable
// at this tolerance (tolerance_error).
template <class K>
int matrix_rank(std::vector<std::vector<K>> rows, double pivot_tol) {
  int rank = 0;
  const int nr = static_cast<int>(rows.size());
  const int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
  std::vector<bool> used(nr, false);
  double largest_rejected = 0.0;
  for (int c = 0; c < nc && rank < nr; ++c) {
    int piv = -1;
    double best = pivot_tol;
    double column_max = 0.0;
    for (int r = 0; r < nr; ++r) {
      if (used[r]) continue;
      if constexpr (NumOps<K>::exact) {
        if (rows[r][c] != 0) {
          piv = r;
          break;
        }
      } else {
        const double mag = std::abs(NumOps<K>::to_dbl(rows[r][c]));
        column_max = std::max(column_max, mag);
        if (mag > best) {
          best = mag;
          piv = r;
        }
      }
    }
    if (piv < 0) {
      if constexpr (!NumOps<K>::exact) largest_rejected = std::max(largest_rejected, column_max);
      continue;
    }
    used[piv] = true;
    ++rank;
    const K p = rows[piv][c];
    for (int r = 0; r < nr; ++r) {
      if (used[r] || NumOps<K>::sign(rows[r][c], 0.0) == 0) continue;
      const K f = rows[r][c] / p;
      for (int k = c; k < nc; ++k) rows[r][k] -= f * rows[piv][k];
    }
  }
  if constexpr (!NumOps<K>::exact) {
    if (largest_rejected > pivot_tol / 100.0)
      throw tolerance_error(
          "matrix_rank: rejected pivot within the ambiguity window of the pivot threshold");
  }
  return rank;
}

// ---- affine reduction onto the solution set of the equality system ----

// x = x0 + B y with y the free coordinates; reduce/lift both points and
// constraints. Identity when there are no equalities.
template <class K>
struct AffineBasis {
  int dim = 0;
  int reduced_dim = 0;
  bool identity = true;
  std::vector<int> free_cols;
  std::vector<K> x0;                       // particular solution
  std::vector<std::vector<K>> basis;       // reduced_dim columns, ambient length

  std::vector<K> reduce_point(const std::vector<K>& x) const {
    if (identity) return x;
    std::vector<K> y(reduced_dim);
    for (int j = 0; j < reduced_dim; ++j) y[j] = x[free_cols[j]];
    return y;
  }

  std::vector<K> lift_point(const std::vector<K>& y) const {
    if (identity) return y;
    std::vector<K> x = x0;
    for (int j = 0; j < reduced_dim; ++j)
      for (int i = 0; i < dim; ++i) x[i] += y[j] * basis[j][i];
    return x;
  }

  LinearConstraint<K> reduce_constraint(const LinearConstraint<K>& c) const {
    if (identity) return c;
    LinearConstraint<K> out;
    out.a.resize(reduced_dim);
    for (int j = 0; j < reduced_dim; ++j) out.a[j] = dot(c.a, basis[j]);
    out.b = c.b - dot(c.a, x0);
    return out;
  }
};

template <class K>
AffineBasis<K> make_affine_basis(int dim, const std::vector<LinearConstraint<K>>& eqs,
                                 double pivot_tol) {
  AffineBasis<K> ab;
  ab.dim = dim;
  if (eqs.empty()) {
    ab.reduced_dim = dim;
    return ab;
  }
  ab.identity = false;

  // Gaussian elimination on [E | f].
  std::vector<std::vector<K>> m;
  for (const auto& e : eqs) {
    if (static_cast<int>(e.a.size()) != dim)
      throw std::invalid_argument("equality constraint has wrong dimension");
    auto row = e.a;
    row.push_back(e.b);
    m.push_back(std::move(row));
  }
  const int nr = static_cast<int>(m.size());
  std::vector<int> pivot_col_of_row;
  int r = 0;
  for (int c = 0; c < dim && r < nr; ++c) {
    int piv = -1;
    double best = pivot_tol;
    for (int i = r; i < nr; ++i) {
      if constexpr (NumOps<K>::exact) {
        if (m[i][c] != 0) {
          piv = i;
          break;
        }
      } else {
        const double mag = std::abs(NumOps<K>::to_dbl(m[i][c]));
        if (mag > best) {
          best = mag;
          piv = i;
        }
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    const K p = m[r][c];
    for (auto& e : m[r]) e = e / p;
    for (int i = 0; i < nr; ++i) {
      if (i == r || NumOps<K>::sign(m[i][c], 0.0) == 0) continue;
      const K f = m[i][c];
      for (int k = 0; k <= dim; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  for (int i = r; i < nr; ++i)
    if (NumOps<K>::sign(m[i][dim], pivot_tol) != 0)
      throw contract_error("inconsistent equality constraints");

  std::vector<bool> is_pivot(dim, false);
  for (int c : pivot_col_of_row) is_pivot[c] = true;
  for (int c = 0; c < dim; ++c)
    if (!is_pivot[c]) ab.free_cols.push_back(c);
  ab.reduced_dim = static_cast<int>(ab.free_cols.size());

  ab.x0.assign(dim, K{});
  for (int i = 0; i < r; ++i) ab.x0[pivot_col_of_row[i]] = m[i][dim];

  ab.basis.assign(ab.reduced_dim, std::vector<K>(dim, K{}));
  for (int j = 0; j < ab.reduced_dim; ++j) {
    const int fc = ab.free_cols[j];
    ab.basis[j][fc] = K(1);
    for (int i = 0; i < r; ++i) ab.basis[j][pivot_col_of_row[i]] = -m[i][fc];
  }
  return ab;
}

// ---- DD core ----

constexpr int kMaskWords = 3;  // up to 192 constraint rows

struct TightMask {
  std::array<std::uint64_t, kMaskWords> w{};

  void set(int i) { w[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool test(int i) const { return (w[i / 64] >> (i % 64)) & 1; }
  TightMask operator&(const TightMask& o) const {
    TightMask r;
    for (int i = 0; i < kMaskWords; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  bool contains(const TightMask& sub) const {
    for (int i = 0; i < kMaskWords; ++i)
      if (sub.w[i] & ~w[i]) return false;
    return true;
  }
  int popcount() const {
    int c = 0;
    for (auto x : w) c += static_cast<int>(__builtin_popcountll(x));
    return c;
  }
  bool any_of_first(int k) const {
    for (int i = 0; i < k; ++i)
      if (test(i)) return true;
    return false;
  }
};

template <class K>
struct DdVertex {
  std::vector<K> x;
  TightMask tight;
};

// Incremental DD over a bounded region, in already-reduced coordinates.
// Row indexing: 0..r are the auxiliary bounding-simplex rows, then the input
// inequalities in insertion order.
template <class K>
std::vector<DdVertex<K>> dd_reduced(const std::vector<LinearConstraint<K>>& ineqs, int rdim,
                                    const DdOptions& opts) {
  if (rdim < 1) throw std::invalid_argument("dd_reduced: reduced dimension must be >= 1");
  const int n_aux = rdim + 1;
  if (n_aux + static_cast<int>(ineqs.size()) > kMaskWords * 64)
    throw guard_error("dd_reduced: too many inequalities for the tight-set mask");

  const double tol = NumOps<K>::exact ? 0.0 : opts.tolerance;
  const K big = NumOps<K>::from_double(opts.box_bound);

  // Bounding simplex: y_j >= -M and sum y_j <= rdim*M.
  std::vector<DdVertex<K>> verts;
  {
    DdVertex<K> v0;
    v0.x.assign(rdim, -big);
    for (int j = 0; j < rdim; ++j) v0.tight.set(j);
    verts.push_back(std::move(v0));
    for (int i = 0; i < rdim; ++i) {
      DdVertex<K> vi;
      vi.x.assign(rdim, -big);
      vi.x[i] = K(2 * rdim - 1) * big;
      for (int j = 0; j < rdim; ++j)
        if (j != i) vi.tight.set(j);
      vi.tight.set(rdim);
      verts.push_back(std::move(vi));
    }
  }

  // Insertion order: fewest initially-satisfied vertices first (stable).
  std::vector<int> order(ineqs.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> sat_count(ineqs.size(), 0);
  for (std::size_t i = 0; i < ineqs.size(); ++i)
    for (const auto& v : verts)
      if (NumOps<K>::sign(dot(ineqs[i].a, v.x) - ineqs[i].b, tol) >= 0) ++sat_count[i];
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sat_count[a] < sat_count[b]; });

  std::vector<int> slack_sign(verts.size());
  for (std::size_t step = 0; step < order.size(); ++step) {
    const auto& con = ineqs[order[step]];
    const int row_bit = n_aux + static_cast<int>(step);

    std::vector<K> slack(verts.size());
    slack_sign.assign(verts.size(), 0);
    bool any_neg = false;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      slack[i] = dot(con.a, verts[i].x) - con.b;
      slack_sign[i] = NumOps<K>::sign(slack[i], tol);
      if (slack_sign[i] < 0) any_neg = true;
    }

    if (!any_neg) {
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (slack_sign[i] == 0) verts[i].tight.set(row_bit);
      if (opts.progress) opts.progress(static_cast<int>(step) + 1,
                                       static_cast<int>(order.size()), verts.size());
      continue;
    }

    std::vector<DdVertex<K>> created;
    for (std::size_t iu = 0; iu < verts.size(); ++iu) {
      if (slack_sign[iu] >= 0) continue;  // u runs over violating vertices
      for (std::size_t iv = 0; iv < verts.size(); ++iv) {
        if (slack_sign[iv] <= 0) continue;  // v strictly satisfied
        const TightMask common = verts[iu].tight & verts[iv].tight;
        if (common.popcount() < rdim - 1) continue;
        bool adjacent;
        if constexpr (NumOps<K>::exact) {
          adjacent = true;
          for (std::size_t iw = 0; iw < verts.size(); ++iw) {
            if (iw == iu || iw == iv) continue;
            if (verts[iw].tight.contains(common)) {
              adjacent = false;
              break;
            }
          }
        } else {
          // Rank test: the common tight rows must cut out a line.
          std::vector<std::vector<K>> rows;
          for (int bit = 0; bit < row_bit; ++bit) {
            if (!common.test(bit)) continue;
            if (bit < rdim) {
              std::vector<K> e(rdim, K{});
              e[bit] = K(1);
              rows.push_back(std::move(e));
            } else if (bit == rdim) {
              rows.push_back(std::vector<K>(rdim, K(-1)));
            } else {
              rows.push_back(ineqs[order[bit - n_aux]].a);
            }
          }
          adjacent = matrix_rank<K>(std::move(rows), 1e-8) == rdim - 1;
        }
        if (!adjacent) continue;

        // Crossing point of edge (v, u) with the new hyperplane.
        const K t = slack[iv] / (slack[iv] - slack[iu]);
        DdVertex<K> w;
        w.x.resize(rdim);
        for (int k = 0; k < rdim; ++k)
          w.x[k] = verts[iv].x[k] + t * (verts[iu].x[k] - verts[iv].x[k]);
        w.tight = common;
        w.tight.set(row_bit);
        created.push_back(std::move(w));
      }
    }

    std::vector<DdVertex<K>> next;
    next.reserve(verts.size() + created.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (slack_sign[i] < 0) continue;
      if (slack_sign[i] == 0) verts[i].tight.set(row_bit);
      next.push_back(std::move(verts[i]));
    }
    for (auto& w : created) next.push_back(std::move(w));

    if constexpr (!NumOps<K>::exact) {
      // Merge numerically coincident vertices.
      std::vector<DdVertex<K>> merged;
      for (auto& v : next) {
        bool dup = false;
        for (auto& m : merged) {
          double diff = 0.0;
          for (int k = 0; k < rdim; ++k)
            diff = std::max(diff, std::abs(NumOps<K>::to_dbl(v.x[k] - m.x[k])));
          if (diff <= opts.tolerance) {
            for (int wi = 0; wi < kMaskWords; ++wi) m.tight.w[wi] |= v.tight.w[wi];
            dup = true;
            break;
          }
        }
        if (!dup) merged.push_back(std::move(v));
      }
      next = std::move(merged);
    }

    verts = std::move(next);
    if (verts.empty()) throw contract_error("dd_reduced: H-representation is empty");
    if (opts.progress)
      opts.progress(static_cast<int>(step) + 1, static_cast<int>(order.size()), verts.size());
  }

  for (const auto& v : verts)
    if (v.tight.any_of_first(n_aux))
      throw solver_error(
          "dd_reduced: polytope touches the bounding simplex (unbounded input or box_bound too "
          "small)");
  return verts;
}

template <class K>
void sort_vertices(std::vector<std::vector<K>>& verts) {
  std::sort(verts.begin(), verts.end());
}

template <class K>
LinearConstraint<K> canonicalize_constraint(LinearConstraint<K> c) {
  if constexpr (NumOps<K>::exact) {
    // Clear denominators, divide by content.
    boost::multiprecision::mpz_int lcm = 1;
    auto upd = [&](const Rational& q) {
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(q));
    };
    for (const auto& x : c.a) upd(x);
    upd(c.b);
    Rational scale(lcm, 1);
    boost::multiprecision::mpz_int g = 0;
    auto updg = [&](const Rational& q) {
      const Rational scaled = q * scale;
      g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(scaled));
    };
    for (const auto& x : c.a) updg(x);
    updg(c.b);
    if (g != 0) scale /= Rational(g, 1);
    for (auto& x : c.a) x *= scale;
    c.b *= scale;
  } else {
    double norm = 0.0;
    for (double x : c.a) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0) {
      for (auto& x : c.a) x /= norm;
      c.b /= norm;
    }
  }
  return c;
}

}  // namespace

// ---- public operations ----

template <class K>
void double_description(BasicPolytope<K>& p, const DdOptions& opts) {
  if (p.ineqs.empty()) throw std::invalid_argument("double_description: no inequalities");
  for (const auto& c : p.ineqs)
    if (static_cast<int>(c.a.size()) != p.dim)
      throw std::invalid_argument("double_description: inequality dimension mismatch");

  const AffineBasis<K> ab = make_affine_basis<K>(p.dim, p.eqs, 1e-8);
  std::vector<LinearConstraint<K>> reduced;
  reduced.reserve(p.ineqs.size());
  for (const auto& c : p.ineqs) reduced.push_back(ab.reduce_constraint(c));

  const auto dd = dd_reduced<K>(reduced, ab.reduced_dim, opts);
  p.vertices.clear();
  p.vertices.reserve(dd.size());
  for (const auto& v : dd) p.vertices.push_back(ab.lift_point(v.x));
  sort_vertices(p.vertices);
}

template <class K>
BasicPolytope<K> polytope_from_vertices(int dim, std::vector<std::vector<K>> vertices,
                                        const DdOptions& opts) {
  if (vertices.empty()) throw std::invalid_argument("polytope_from_vertices: no vertices");
  for (const auto& v : vertices)
    if (static_cast<int>(v.size()) != dim)
      throw std::invalid_argument("polytope_from_vertices: vertex dimension mismatch");

  // Dedup.
  sort_vertices(vertices);
  if constexpr (NumOps<K>::exact) {
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  } else {
    std::vector<std::vector<K>> kept;
    for (const auto& v : vertices) {
      bool dup = false;
      for (const auto& u : kept) {
        double diff = 0.0;
        for (int k = 0; k < dim; ++k) diff = std::max(diff, std::abs(NumOps<K>::to_dbl(v[k] - u[k])));
        if (diff <= opts.tolerance) {
          dup = true;
          break;
        }
      }
      if (!dup) kept.push_back(v);
    }
    vertices = std::move(kept);
  }

  const std::size_t nv = vertices.size();
  std::vector<K> centroid(dim, K{});
  for (const auto& v : vertices)
    for (int i = 0; i < dim; ++i) centroid[i] += v[i];
  for (auto& c : centroid) c = c / K(static_cast<int>(nv));

  // Direction space of the affine hull.
  std::vector<std::vector<K>> centered;
  centered.reserve(nv);
  for (const auto& v : vertices) {
    std::vector<K> row(dim);
    for (int i = 0; i < dim; ++i) row[i] = v[i] - centroid[i];
    centered.push_back(std::move(row));
  }

  // Row-reduce the centered matrix; pivot columns span the direction space in
  // the coordinates below, and non-pivot rows of the RREF give nothing.
  auto rref = centered;
  std::vector<int> pivot_cols;
  {
    int r = 0;
    const int nr = static_cast<int>(rref.size());
    for (int c = 0; c < dim && r < nr; ++c) {
      int piv = -1;
      double best = NumOps<K>::exact ? 0.0 : 1e-8;
      for (int i = r; i < nr; ++i) {
        if constexpr (NumOps<K>::exact) {
          if (rref[i][c] != 0) {
            piv = i;
            break;
          }
        } else {
          const double mag = std::abs(NumOps<K>::to_dbl(rref[i][c]));
          if (mag > best) {
            best = mag;
            piv = i;
          }
        }
      }
      if (piv < 0) continue;
      std::swap(rref[r], rref[piv]);
      const K pv = rref[r][c];
      for (auto& e : rref[r]) e = e / pv;
      for (int i = 0; i < nr; ++i) {
        if (i == r || NumOps<K>::sign(rref[i][c], 0.0) == 0) continue;
        const K f = rref[i][c];
        for (int k = 0; k < dim; ++k) rref[i][k] -= f * rref[r][k];
      }
      pivot_cols.push_back(c);
      ++r;
    }
    rref.resize(r);
  }
  const int rdim = static_cast<int>(pivot_cols.size());

  BasicPolytope<K> out;
  out.dim = dim;
  out.vertices = vertices;

  // Affine hull equalities from the RREF nullspace: for each non-pivot
  // column j, x_j - sum_i rref[i][j] x_{pivot_i} is constant on the hull.
  {
    std::vector<bool> is_pivot(dim, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    for (int j = 0; j < dim; ++j) {
      if (is_pivot[j]) continue;
      LinearConstraint<K> eq;
      eq.a.assign(dim, K{});
      eq.a[j] = K(1);
      for (int i = 0; i < rdim; ++i) eq.a[pivot_cols[i]] = -rref[i][j];
      eq.b = dot(eq.a, centroid);
      out.eqs.push_back(canonicalize_constraint(std::move(eq)));
    }
  }

  if (rdim == 0) return out;  // single point

  // Reduced coordinates: q = centered restricted to pivot columns. This is a
  // valid linear chart because the RREF pivots parametrize the direction
  // space; B maps q back to ambient directions.
  // The RREF pivots chart the direction space: a direction is determined by
  // its pivot coordinates, and the RREF rows realize the unit charts.
  auto reduce_q = [&](const std::vector<K>& centered_v) {
    std::vector<K> q(rdim);
    for (int i = 0; i < rdim; ++i) q[i] = centered_v[pivot_cols[i]];
    return q;
  };

  // Dual polytope {y : q_i . y <= 1} and its vertices = primal facets.
  BasicPolytope<K> dual;
  dual.dim = rdim;
  for (const auto& cv : centered) {
    LinearConstraint<K> c;
    c.a = reduce_q(cv);
    for (auto& e : c.a) e = -e;
    c.b = K(-1);
    dual.ineqs.push_back(std::move(c));
  }
  DdOptions dopts = opts;
  dopts.progress = nullptr;
  double_description(dual, dopts);

  // Lift dual vertices back to ambient facet inequalities.
  // Facet: y . q(x - centroid) <= 1 with q(u) = pivot coordinates of u; the
  // ambient normal is a with a_j = 0 off the pivot columns.
  for (const auto& y : dual.vertices) {
    LinearConstraint<K> f;
    f.a.assign(dim, K{});
    // q(u) depends on all coordinates of u through the hull constraint; on the
    // hull, u's pivot coordinates determine it, so use a with support on
    // pivot columns: a . u = sum_i y_i u_{pivot_i}.
    for (int i = 0; i < rdim; ++i) f.a[pivot_cols[i]] = -y[i];
    f.b = K(-1) + dot(f.a, centroid);
    out.ineqs.push_back(canonicalize_constraint(std::move(f)));
  }
  std::sort(out.ineqs.begin(), out.ineqs.end(), [](const auto& l, const auto& r) {
    return std::tie(l.a, l.b) < std::tie(r.a, r.b);
  });

  // Input points interior to the hull are not vertices; keep a point only if
  // its tight facet set has full affine rank.
  {
    const AffineBasis<K> ab = make_affine_basis<K>(dim, out.eqs, 1e-8);
    std::vector<LinearConstraint<K>> reduced;
    reduced.reserve(out.ineqs.size());
    for (const auto& c : out.ineqs) reduced.push_back(ab.reduce_constraint(c));
    std::vector<std::vector<K>> kept;
    for (const auto& v : out.vertices) {
      std::vector<std::vector<K>> tight;
      for (std::size_t j = 0; j < out.ineqs.size(); ++j)
        if (NumOps<K>::sign(dot(out.ineqs[j].a, v) - out.ineqs[j].b,
                            NumOps<K>::exact ? 0.0 : opts.tolerance) == 0)
          tight.push_back(reduced[j].a);
      if (static_cast<int>(tight.size()) >= ab.reduced_dim &&
          matrix_rank<K>(std::move(tight), 1e-8) == ab.reduced_dim)
        kept.push_back(v);
    }
    out.vertices = std::move(kept);
  }
  return out;
}

template <class K>
BasicPolytope<K> weyl_chamber(int dim) {
  if (dim < 2) throw std::invalid_argument("weyl_chamber: dim must be >= 2");
  BasicPolytope<K> p;
  p.dim = dim;
  for (int i = 0; i + 1 < dim; ++i) {
    LinearConstraint<K> c;
    c.a.assign(dim, K{});
    c.a[i] = K(1);
    c.a[i + 1] = K(-1);
    c.b = K(0);
    p.ineqs.push_back(std::move(c));
  }
  LinearConstraint<K> last;
  last.a.assign(dim, K{});
  last.a[dim - 1] = K(1);
  last.b = K(0);
  p.ineqs.push_back(std::move(last));

  LinearConstraint<K> norm;
  norm.a.assign(dim, K(1));
  norm.b = K(1);
  p.eqs.push_back(std::move(norm));

  for (int k = 1; k <= dim; ++k) {
    std::vector<K> v(dim, K{});
    for (int i = 0; i < k; ++i) v[i] = K(1) / K(k);
    p.vertices.push_back(std::move(v));
  }
  return p;
}

template <class K>
void intersect_halfspace(BasicPolytope<K>& p, const LinearConstraint<K>& cut,
                         const DdOptions& opts) {
  if (!p.has_h() || !p.has_v())
    throw contract_error("intersect_halfspace: both representations required");
  if (static_cast<int>(cut.a.size()) != p.dim)
    throw std::invalid_argument("intersect_halfspace: dimension mismatch");
  const double tol = NumOps<K>::exact ? 0.0 : opts.tolerance;

  std::vector<K> slack(p.vertices.size());
  std::vector<int> sgn(p.vertices.size());
  bool any_neg = false;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    slack[i] = dot(cut.a, p.vertices[i]) - cut.b;
    sgn[i] = NumOps<K>::sign(slack[i], tol);
    if (sgn[i] < 0) any_neg = true;
  }
  if (!any_neg) return;  // redundant cut

  const AffineBasis<K> ab = make_affine_basis<K>(p.dim, p.eqs, 1e-8);
  std::vector<LinearConstraint<K>> reduced_rows;
  reduced_rows.reserve(p.ineqs.size());
  for (const auto& c : p.ineqs) reduced_rows.push_back(ab.reduce_constraint(c));

  // Tight sets against the existing H-representation.
  std::vector<std::vector<int>> tight(p.vertices.size());
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    for (std::size_t j = 0; j < p.ineqs.size(); ++j)
      if (NumOps<K>::sign(dot(p.ineqs[j].a, p.vertices[i]) - p.ineqs[j].b,
                          std::max(tol, 1e-9)) == 0)
        tight[i].push_back(static_cast<int>(j));

  std::vector<std::vector<K>> next;
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    if (sgn[i] >= 0) next.push_back(p.vertices[i]);

  for (std::size_t iu = 0; iu < p.vertices.size(); ++iu) {
    if (sgn[iu] >= 0) continue;
    for (std::size_t iv = 0; iv < p.vertices.size(); ++iv) {
      if (sgn[iv] <= 0) continue;
      std::vector<int> common;
      std::set_intersection(tight[iu].begin(), tight[iu].end(), tight[iv].begin(),
                            tight[iv].end(), std::back_inserter(common));
      if (static_cast<int>(common.size()) < ab.reduced_dim - 1) continue;
      std::vector<std::vector<K>> rows;
      rows.reserve(common.size());
      for (int j : common) rows.push_back(reduced_rows[j].a);
      if (matrix_rank<K>(std::move(rows), 1e-8) != ab.reduced_dim - 1) continue;

      const K t = slack[iv] / (slack[iv] - slack[iu]);
      std::vector<K> w(p.dim);
      for (int k = 0; k < p.dim; ++k)
        w[k] = p.vertices[iv][k] + t * (p.vertices[iu][k] - p.vertices[iv][k]);
      next.push_back(std::move(w));
    }
  }

  if constexpr (!NumOps<K>::exact) {
    std::vector<std::vector<K>> merged;
    for (auto& v : next) {
      bool dup = false;
      for (const auto& u : merged) {
        double diff = 0.0;
        for (int k = 0; k < p.dim; ++k)
          diff = std::max(diff, std::abs(NumOps<K>::to_dbl(v[k] - u[k])));
        if (diff <= std::max(tol, 1e-12)) {
          dup = true;
          break;
        }
      }
      if (!dup) merged.push_back(std::move(v));
    }
    next = std::move(merged);
  }

  if (next.empty()) throw contract_error("intersect_halfspace: cut empties the polytope");
  sort_vertices(next);
  p.vertices = std::move(next);
  p.ineqs.push_back(cut);
}

template <class K>
void permutation_closure(BasicPolytope<K>& p, const DdOptions& opts) {
  if (!p.has_v()) throw contract_error("permutation_closure: V-representation required");
  if (p.dim > 6)
    throw guard_error("permutation_closure: dim > 6 (factorial image guard)");

  std::vector<std::vector<K>> points;
  for (const auto& v : p.vertices) {
    std::vector<K> w = v;
    std::sort(w.begin(), w.end());
    do {
      points.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
  }
  sort_vertices(points);
  if constexpr (NumOps<K>::exact) {
    points.erase(std::unique(points.begin(), points.end()), points.end());
  } else {
    std::vector<std::vector<K>> kept;
    for (const auto& v : points) {
      bool dup = false;
      for (const auto& u : kept) {
        double diff = 0.0;
        for (int k = 0; k < p.dim; ++k) diff = std::max(diff, std::abs(NumOps<K>::to_dbl(v[k] - u[k])));
        if (diff <= opts.tolerance) {
          dup = true;
          break;
        }
      }
      if (!dup) kept.push_back(v);
    }
    points = std::move(kept);
  }

  // Extreme-point filter: p_i stays iff it is not a convex combination of the
  // other points (LP separation).
  std::vector<std::vector<K>> extreme;
  if (points.size() == 1) extreme = points;
  for (std::size_t i = 0; points.size() > 1 && i < points.size(); ++i) {
    LinearProgram<K> lp;
    lp.nvars = static_cast<int>(points.size()) - 1;
    lp.nonneg.assign(lp.nvars, true);
    lp.objective.assign(lp.nvars, K{});
    for (int row = 0; row < p.dim; ++row) {
      LpConstraint<K> c;
      c.rel = Rel::Eq;
      c.b = points[i][row];
      c.a.reserve(lp.nvars);
      for (std::size_t j = 0; j < points.size(); ++j)
        if (j != i) c.a.push_back(points[j][row]);
      lp.cons.push_back(std::move(c));
    }
    LpConstraint<K> sum;
    sum.rel = Rel::Eq;
    sum.b = K(1);
    sum.a.assign(lp.nvars, K(1));
    lp.cons.push_back(std::move(sum));
    const auto sol = solve_lp(lp, NumOps<K>::exact ? 0.0 : 1e-9);
    if (sol.status != LpStatus::Optimal) extreme.push_back(points[i]);
  }

  BasicPolytope<K> rebuilt = polytope_from_vertices<K>(p.dim, std::move(extreme), opts);
  p = std::move(rebuilt);
}

template <class K>
std::pair<K, K> radius_extremes_squared(const BasicPolytope<K>& p, const std::vector<K>& center) {
  if (!p.has_h() || !p.has_v())
    throw contract_error("radius_extremes: both representations required");
  if (static_cast<int>(center.size()) != p.dim)
    throw std::invalid_argument("radius_extremes: center dimension mismatch");
  const double tol = NumOps<K>::exact ? 0.0 : 1e-9;
  for (const auto& e : p.eqs)
    if (NumOps<K>::sign(dot(e.a, center) - e.b, std::max(tol, 1e-9)) != 0)
      throw contract_error("radius_extremes: center violates an equality constraint");
  for (const auto& c : p.ineqs)
    if (NumOps<K>::sign(dot(c.a, center) - c.b, tol) < 0)
      throw contract_error("radius_extremes: center outside the polytope");

  K circ{};
  for (const auto& v : p.vertices) {
    K d2{};
    for (int i = 0; i < p.dim; ++i) {
      const K diff = v[i] - center[i];
      d2 += diff * diff;
    }
    circ = std::max(circ, d2);
  }

  // Distances measured inside the affine hull: ||P a||^2 = a^T P a with P the
  // orthogonal projector onto the hull's direction space.
  const int ne = static_cast<int>(p.eqs.size());
  std::vector<std::vector<K>> gram;  // N N^T for equality normals
  if (ne > 0) {
    gram.assign(ne, std::vector<K>(ne, K{}));
    for (int i = 0; i < ne; ++i)
      for (int j = 0; j < ne; ++j) gram[i][j] = dot(p.eqs[i].a, p.eqs[j].a);
  }
  auto proj_norm_sq = [&](const std::vector<K>& a) -> K {
    K aa = dot(a, a);
    if (ne == 0) return aa;
    // Solve (N N^T) w = N a, then a^T P a = a.a - (N a) . w.
    std::vector<K> na(ne);
    for (int i = 0; i < ne; ++i) na[i] = dot(p.eqs[i].a, a);
    auto m = gram;
    auto rhs = na;
    for (int c = 0; c < ne; ++c) {
      int piv = -1;
      for (int r = c; r < ne; ++r)
        if (NumOps<K>::sign(m[r][c], 1e-12) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[c], m[piv]);
      std::swap(rhs[c], rhs[piv]);
      for (int r = 0; r < ne; ++r) {
        if (r == c || NumOps<K>::sign(m[r][c], 0.0) == 0) continue;
        const K f = m[r][c] / m[c][c];
        for (int k = c; k < ne; ++k) m[r][k] -= f * m[c][k];
        rhs[r] -= f * rhs[c];
      }
    }
    K correction{};
    for (int i = 0; i < ne; ++i)
      if (NumOps<K>::sign(m[i][i], 1e-12) != 0) correction += na[i] * (rhs[i] / m[i][i]);
    return aa - correction;
  };

  bool have_in = false;
  K inr{};
  for (const auto& c : p.ineqs) {
    const K denom = proj_norm_sq(c.a);
    if (NumOps<K>::sign(denom, 1e-15) <= 0) continue;  // constraint constant on the hull
    const K diff = dot(c.a, center) - c.b;
    const K d2 = diff * diff / denom;
    if (!have_in || d2 < inr) {
      inr = d2;
      have_in = true;
    }
  }
  if (!have_in) throw contract_error("radius_extremes: no effective inequality");
  return {inr, circ};
}

template <class K>
std::pair<double, double> radius_extremes(const BasicPolytope<K>& p,
                                          const std::vector<K>& center) {
  const auto [r2, c2] = radius_extremes_squared(p, center);
  return {std::sqrt(NumOps<K>::to_dbl(r2)), std::sqrt(NumOps<K>::to_dbl(c2))};
}

template <class K>
void verify_vertex_representation(const BasicPolytope<K>& p, double tol) {
  if (!p.has_h() || !p.has_v())
    throw consistency_error("verify_vertex_representation: both representations required");
  const AffineBasis<K> ab = make_affine_basis<K>(p.dim, p.eqs, 1e-8);
  std::vector<LinearConstraint<K>> reduced;
  reduced.reserve(p.ineqs.size());
  for (const auto& c : p.ineqs) reduced.push_back(ab.reduce_constraint(c));
  const double cls_tol = NumOps<K>::exact ? 0.0 : tol;

  for (const auto& v : p.vertices) {
    for (const auto& e : p.eqs)
      if (NumOps<K>::sign(dot(e.a, v) - e.b, std::max(tol, 1e-12)) != 0)
        throw consistency_error("vertex violates an equality constraint");
    std::vector<std::vector<K>> tight_rows;
    for (std::size_t j = 0; j < p.ineqs.size(); ++j) {
      const K slack = dot(p.ineqs[j].a, v) - p.ineqs[j].b;
      const int s = NumOps<K>::sign(slack, std::max(cls_tol, tol));
      if (s < 0) throw consistency_error("vertex violates an inequality");
      if (s == 0) tight_rows.push_back(reduced[j].a);
    }
    if (tight_rows.empty()) throw consistency_error("vertex has no tight inequality");
    if (matrix_rank<K>(std::move(tight_rows), 1e-8) != ab.reduced_dim)
      throw consistency_error("vertex tight set is affine-rank deficient");
  }
}

RationalPolytope lambda_hrep_qubits(int n) {
  if (n < 1 || n > 2)
    throw std::invalid_argument("lambda_hrep_qubits: n must be 1 or 2 for full DD");
  RationalPolytope p;
  p.dim = (1 << (2 * n)) - 1;
  for (const auto& label : enumerate_stabilizer_labels(2, n)) {
    const auto signs = qubit_sign_vector(label);
    LinearConstraint<Rational> c;
    c.a.reserve(signs.size());
    for (int s : signs) c.a.emplace_back(s);
    c.b = Rational(-1);
    p.ineqs.push_back(std::move(c));
  }
  return p;
}

// ---- explicit instantiations ----

template void double_description<Rational>(RationalPolytope&, const DdOptions&);
template void double_description<double>(FloatPolytope&, const DdOptions&);
template BasicPolytope<Rational> polytope_from_vertices<Rational>(
    int, std::vector<std::vector<Rational>>, const DdOptions&);
template BasicPolytope<double> polytope_from_vertices<double>(int,
                                                              std::vector<std::vector<double>>,
                                                              const DdOptions&);
template BasicPolytope<Rational> weyl_chamber<Rational>(int);
template BasicPolytope<double> weyl_chamber<double>(int);
template void intersect_halfspace<Rational>(RationalPolytope&, const LinearConstraint<Rational>&,
                                            const DdOptions&);
template void intersect_halfspace<double>(FloatPolytope&, const LinearConstraint<double>&,
                                          const DdOptions&);
template void permutation_closure<Rational>(RationalPolytope&, const DdOptions&);
template void permutation_closure<double>(FloatPolytope&, const DdOptions&);
template std::pair<Rational, Rational> radius_extremes_squared<Rational>(
    const RationalPolytope&, const std::vector<Rational>&);
template std::pair<double, double> radius_extremes_squared<double>(const FloatPolytope&,
                                                                   const std::vector<double>&);
template std::pair<double, double> radius_extremes<Rational>(const RationalPolytope&,
                                                             const std::vector<Rational>&);
template std::pair<double, double> radius_extremes<double>(const FloatPolytope&,
                                                           const std::vector<double>&);
template void verify_vertex_representation<Rational>(const RationalPolytope&, double);
template void verify_vertex_representation<double>(const FloatPolytope&, double);

}  // namespace stabspec
