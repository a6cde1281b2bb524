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

#include "stabspec/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "stabspec/errors.hpp"

namespace stabspec {

namespace {

template <class K>
struct Num {
  static constexpr bool exact = false;
  static int sign(double x, double tol) { return std::abs(x) <= tol ? 0 : (x > 0 ? 1 : -1); }
};
template <>
struct Num<Rational> {
  static constexpr bool exact = true;
  static int sign(const Rational& x, double) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
};

constexpr long kPivotCap = 1'000'000;
constexpr long kStallCap = 100'000;

template <class K>
class SimplexTableau {
 public:
  SimplexTableau(const LinearProgram<K>& lp, double tol) : lp_(lp), tol_(tol) {
    build();
  }

  LpSolution<K> run() {
    LpSolution<K> out;
    if (has_artificials_) {
      set_phase1_costs();
      iterate(/*phase1=*/true);
      if (Num<K>::sign(obj_val_, std::max(tol_, 1e-7)) > 0) {
        out.status = LpStatus::Infeasible;
        out.pivots = pivots_;
        return out;
      }
      drive_out_artificials();
    }
    set_phase2_costs();
    const bool bounded = iterate(/*phase1=*/false);
    out.pivots = pivots_;
    if (!bounded) {
      out.status = LpStatus::Unbounded;
      return out;
    }
    out.status = LpStatus::Optimal;
    extract(out);
    return out;
  }

 private:
  const LinearProgram<K>& lp_;
  double tol_;

  int m_ = 0;   // rows
  int nc_ = 0;  // structural + logical columns
  std::vector<K> tab_;  // (m) x (nc+1), row-major; last column = rhs
  std::vector<K> cost_; // reduced-cost row, length nc+1 (last = -objective)
  K obj_val_{};
  std::vector<int> basis_;       // column basic in each row
  std::vector<int> col_var_;     // original variable index or -1
  std::vector<int> col_sign_;    // +1 / -1 for split variables
  std::vector<bool> col_art_;
  std::vector<int> row_price_col_;  // artificial or slack column tied to the row
  std::vector<int> row_price_sign_; // +1 if that column carries +e_i, else -1
  std::vector<int> row_flip_;       // -1 if the row was negated during normalization
  std::vector<K> phase2_cost_;      // internal (minimization) costs per column
  bool has_artificials_ = false;
  long pivots_ = 0;

  K& at(int r, int c) { return tab_[static_cast<std::size_t>(r) * (nc_ + 1) + c]; }
  const K& at(int r, int c) const { return tab_[static_cast<std::size_t>(r) * (nc_ + 1) + c]; }

  void build() {
    const int nv = lp_.nvars;
    if (static_cast<int>(lp_.objective.size()) != nv)
      throw std::invalid_argument("solve_lp: objective size mismatch");
    std::vector<bool> nonneg = lp_.nonneg;
    if (nonneg.empty()) nonneg.assign(nv, false);
    if (static_cast<int>(nonneg.size()) != nv)
      throw std::invalid_argument("solve_lp: nonneg size mismatch");

    m_ = static_cast<int>(lp_.cons.size());

    // Structural columns.
    std::vector<int> pos_col(nv), neg_col(nv, -1);
    for (int j = 0; j < nv; ++j) {
      pos_col[j] = static_cast<int>(col_var_.size());
      col_var_.push_back(j);
      col_sign_.push_back(+1);
      col_art_.push_back(false);
      if (!nonneg[j]) {
        neg_col[j] = static_cast<int>(col_var_.size());
        col_var_.push_back(j);
        col_sign_.push_back(-1);
        col_art_.push_back(false);
      }
    }
    const int nstruct = static_cast<int>(col_var_.size());

    // Logical columns, one pass to count.
    row_flip_.assign(m_, +1);
    std::vector<int> slack_col(m_, -1), art_col(m_, -1);
    int extra = 0;
    std::vector<Rel> rel(m_);
    for (int i = 0; i < m_; ++i) {
      if (static_cast<int>(lp_.cons[i].a.size()) != nv)
        throw std::invalid_argument("solve_lp: constraint size mismatch");
      rel[i] = lp_.cons[i].rel;
      if (Num<K>::sign(lp_.cons[i].b, 0.0) < 0) {
        row_flip_[i] = -1;
        if (rel[i] == Rel::Ge)
          rel[i] = Rel::Le;
        else if (rel[i] == Rel::Le)
          rel[i] = Rel::Ge;
      }
      if (rel[i] == Rel::Le) extra += 1;        // slack
      else if (rel[i] == Rel::Ge) extra += 2;   // surplus + artificial
      else extra += 1;                          // artificial
    }
    nc_ = nstruct + extra;
    tab_.assign(static_cast<std::size_t>(m_) * (nc_ + 1), K{});
    basis_.assign(m_, -1);
    row_price_col_.assign(m_, -1);
    row_price_sign_.assign(m_, +1);

    int next = nstruct;
    col_var_.resize(nc_, -1);
    col_sign_.resize(nc_, +1);
    col_art_.resize(nc_, false);
    for (int i = 0; i < m_; ++i) {
      const auto& con = lp_.cons[i];
      const K flip = K(row_flip_[i]);
      for (int j = 0; j < nv; ++j) {
        const K v = flip * con.a[j];
        at(i, pos_col[j]) = v;
        if (neg_col[j] >= 0) at(i, neg_col[j]) = -v;
      }
      at(i, nc_) = flip * con.b;

      if (rel[i] == Rel::Le) {
        slack_col[i] = next;
        at(i, next) = K(1);
        basis_[i] = next;
        row_price_col_[i] = next;
        row_price_sign_[i] = +1;
        ++next;
      } else if (rel[i] == Rel::Ge) {
        at(i, next) = K(-1);  // surplus
        ++next;
        art_col[i] = next;
        col_art_[next] = true;
        at(i, next) = K(1);
        basis_[i] = next;
        row_price_col_[i] = next;
        row_price_sign_[i] = +1;
        has_artificials_ = true;
        ++next;
      } else {
        art_col[i] = next;
        col_art_[next] = true;
        at(i, next) = K(1);
        basis_[i] = next;
        row_price_col_[i] = next;
        row_price_sign_[i] = +1;
        has_artificials_ = true;
        ++next;
      }
    }

    // Internal minimization costs.
    phase2_cost_.assign(nc_, K{});
    for (int j = 0; j < nv; ++j) {
      const K c = lp_.maximize ? -lp_.objective[j] : lp_.objective[j];
      phase2_cost_[pos_col[j]] = c;
      if (neg_col[j] >= 0) phase2_cost_[neg_col[j]] = -c;
    }
  }

  void set_phase1_costs() {
    cost_.assign(nc_ + 1, K{});
    obj_val_ = K{};
    for (int c = 0; c < nc_; ++c)
      if (col_art_[c]) cost_[c] = K(1);
    for (int i = 0; i < m_; ++i) {
      if (!col_art_[basis_[i]]) continue;
      for (int c = 0; c <= nc_; ++c) cost_[c] -= at(i, c);
      obj_val_ += at(i, nc_);
    }
  }

  void set_phase2_costs() {
    cost_.assign(nc_ + 1, K{});
    obj_val_ = K{};
    for (int c = 0; c < nc_; ++c) cost_[c] = phase2_cost_[c];
    for (int i = 0; i < m_; ++i) {
      const K cb = phase2_cost_[basis_[i]];
      if (Num<K>::sign(cb, 0.0) == 0) continue;
      for (int c = 0; c <= nc_; ++c) cost_[c] -= cb * at(i, c);
      obj_val_ += cb * at(i, nc_);
    }
  }

  void pivot(int prow, int pcol) {
    const K pv = at(prow, pcol);
    for (int c = 0; c <= nc_; ++c) at(prow, c) = at(prow, c) / pv;
    for (int r = 0; r < m_; ++r) {
      if (r == prow) continue;
      const K f = at(r, pcol);
      if (Num<K>::sign(f, 0.0) == 0) continue;
      for (int c = 0; c <= nc_; ++c) at(r, c) -= f * at(prow, c);
      at(r, pcol) = K{};
    }
    const K fc = cost_[pcol];
    if (Num<K>::sign(fc, 0.0) != 0) {
      for (int c = 0; c <= nc_; ++c) cost_[c] -= fc * at(prow, c);
      obj_val_ += fc * at(prow, nc_);
      cost_[pcol] = K{};
    }
    basis_[prow] = pcol;
    ++pivots_;
    if (pivots_ > kPivotCap) throw solver_error("solve_lp: pivot cap exceeded");
  }

  // Returns false on unbounded (phase 2 only).
  bool iterate(bool phase1) {
    long degenerate_run = 0;
    for (;;) {
      // Bland: lowest-index improving column.
      int pcol = -1;
      for (int c = 0; c < nc_; ++c) {
        if (!phase1 && col_art_[c]) continue;
        if (Num<K>::sign(cost_[c], tol_) < 0) {
          pcol = c;
          break;
        }
      }
      if (pcol < 0) return true;

      int prow = -1;
      K best{};
      for (int r = 0; r < m_; ++r) {
        if (Num<K>::sign(at(r, pcol), tol_) <= 0) continue;
        const K ratio = at(r, nc_) / at(r, pcol);
        if (prow < 0 || ratio < best || (ratio == best && basis_[r] < basis_[prow])) {
          best = ratio;
          prow = r;
        }
      }
      if (prow < 0) {
        if (phase1) throw solver_error("solve_lp: phase-1 objective unbounded");
        return false;
      }
      if (Num<K>::sign(best, 0.0) == 0) {
        if (++degenerate_run > kStallCap) {
          if constexpr (Num<K>::exact)
            throw solver_error("solve_lp: stalled");
          else
            throw tolerance_error("solve_lp: numerical stall in float mode");
        }
      } else {
        degenerate_run = 0;
      }
      pivot(prow, pcol);
    }
  }

  void drive_out_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (!col_art_[basis_[r]]) continue;
      int pcol = -1;
      for (int c = 0; c < nc_; ++c) {
        if (col_art_[c]) continue;
        if (Num<K>::sign(at(r, c), std::max(tol_, 1e-9)) != 0) {
          pcol = c;
          break;
        }
      }
      if (pcol >= 0) pivot(r, pcol);
      // Otherwise the row is redundant; the artificial stays basic at zero.
    }
  }

  void extract(LpSolution<K>& out) const {
    const int nv = lp_.nvars;
    out.point.assign(nv, K{});
    for (int r = 0; r < m_; ++r) {
      const int c = basis_[r];
      if (col_var_[c] < 0) continue;
      out.point[col_var_[c]] += K(col_sign_[c]) * at(r, nc_);
    }
    out.value = K{};
    for (int j = 0; j < nv; ++j) out.value += lp_.objective[j] * out.point[j];

    // Row prices from the reduced costs of each row's logical column
    // (column +e_i with zero phase-2 cost: reduced cost = -y_i).
    out.multipliers.assign(m_, K{});
    for (int i = 0; i < m_; ++i) {
      const int c = row_price_col_[i];
      K y = -cost_[c] * K(row_price_sign_[i]);
      y = y * K(row_flip_[i]);
      if (lp_.maximize) y = -y;
      out.multipliers[i] = y;
    }

    const double ttol = Num<K>::exact ? 0.0 : std::max(tol_, 1e-8);
    for (int i = 0; i < m_; ++i) {
      K lhs{};
      for (int j = 0; j < nv; ++j) lhs += lp_.cons[i].a[j] * out.point[j];
      if (Num<K>::sign(lhs - lp_.cons[i].b, ttol) == 0) out.tight_set.push_back(i);
    }
  }
};

}  // namespace

template <class K>
LpSolution<K> solve_lp(const LinearProgram<K>& lp, double tol) {
  if (lp.nvars <= 0) throw std::invalid_argument("solve_lp: no variables");
  if constexpr (Num<K>::exact) tol = 0.0;
  SimplexTableau<K> t(lp, tol);
  return t.run();
}

template LpSolution<double> solve_lp<double>(const LinearProgram<double>&, double);
template LpSolution<Rational> solve_lp<Rational>(const LinearProgram<Rational>&, double);

bool mixture_majorization_feasible(const Spectrum& lam, const std::vector<Spectrum>& generators) {
  if (generators.empty())
    throw std::invalid_argument("mixture_majorization_feasible: no generators");
  const int n = lam.size();
  for (const auto& g : generators) {
    if (g.size() != n)
      throw contract_error("mixture_majorization_feasible: generator length mismatch");
    if (std::abs(g.trace() - lam.trace()) > 1e-9)
      throw contract_error("mixture_majorization_feasible: generator sum mismatch");
  }

  const int ng = static_cast<int>(generators.size());
  LinearProgram<double> lp;
  lp.nvars = ng;
  lp.maximize = false;
  lp.objective.assign(ng, 0.0);
  lp.nonneg.assign(ng, true);

  LpConstraint<double> sum;
  sum.rel = Rel::Eq;
  sum.b = 1.0;
  sum.a.assign(ng, 1.0);
  lp.cons.push_back(std::move(sum));

  std::vector<std::vector<double>> gen_lorenz;
  gen_lorenz.reserve(ng);
  for (const auto& g : generators) gen_lorenz.push_back(lorenz_curve(g));
  const auto lam_lorenz = lorenz_curve(lam);
  for (int k = 0; k + 1 < n; ++k) {
    LpConstraint<double> c;
    c.rel = Rel::Ge;
    c.b = lam_lorenz[k] - 1e-9;
    c.a.resize(ng);
    for (int b = 0; b < ng; ++b) c.a[b] = gen_lorenz[b][k];
    lp.cons.push_back(std::move(c));
  }

  return solve_lp(lp).status == LpStatus::Optimal;
}

}  // namespace stabspec
