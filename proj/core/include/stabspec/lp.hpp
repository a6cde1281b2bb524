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

#include <vector>

#include "stabspec/rational.hpp"
#include "stabspec/spectral_core.hpp"

namespace stabspec {

enum class Rel { Ge, Le, Eq };

template <class K>
struct LpConstraint {
  std::vector<K> a;
  Rel rel = Rel::Le;
  K b{};
};

template <class K>
struct LinearProgram {
  int nvars = 0;
  bool maximize = true;
  std::vector<K> objective;
  std::vector<LpConstraint<K>> cons;
  // nonneg[j] restricts x_j >= 0; otherwise the variable is free.
  // Empty means all variables free.
  std::vector<bool> nonneg;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class K>
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  K value{};
  std::vector<K> point;        // original variables
  std::vector<int> tight_set;  // indices of constraints tight at the optimum
  std::vector<K> multipliers;  // dual value per constraint
  long pivots = 0;
};

// Dense-tableau two-phase simplex, Bland's anti-cycling rule throughout.
// Exact arithmetic when K = Rational (tol ignored); otherwise tol is the
// pivot/classification tolerance. Raises solver_error past 10^6 pivots.
template <class K>
LpSolution<K> solve_lp(const LinearProgram<K>& lp, double tol = 1e-9);

// Feasibility of  lam^down <= sum_B p(B) gen_B^down  (majorization order)
// over probability vectors p: one partial-sum constraint per level.
// Generators and lam must share length and total sum.
bool mixture_majorization_feasible(const Spectrum& lam, const std::vector<Spectrum>& generators);

}  // namespace stabspec
