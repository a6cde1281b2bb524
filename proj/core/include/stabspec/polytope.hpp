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

#include <functional>
#include <utility>
#include <vector>

#include "stabspec/rational.hpp"

namespace stabspec {

// a . x >= b  (inequality) or  a . x = b  (equality).
template <class K>
struct LinearConstraint {
  std::vector<K> a;
  K b{};
};

// H-representation / V-representation pair. Either side may be absent.
// `eqs` carries the affine hull (e.g. the unit-trace slice of a spectrum
// simplex); vertices satisfy eqs exactly.
template <class K>
struct BasicPolytope {
  int dim = 0;
  std::vector<LinearConstraint<K>> ineqs;
  std::vector<LinearConstraint<K>> eqs;
  std::vector<std::vector<K>> vertices;

  bool has_h() const { return !ineqs.empty() || !eqs.empty(); }
  bool has_v() const { return !vertices.empty(); }
};

using RationalPolytope = BasicPolytope<Rational>;
using FloatPolytope = BasicPolytope<double>;

struct DdOptions {
  // Classification tolerance in floating mode (ignored in exact mode).
  double tolerance = 1e-9;
  // Scale of the auxiliary bounding simplex; the input must be contained in
  // ||x||_inf < box_bound or DD raises a divergence guard error.
  double box_bound = 1024.0;
  // Optional progress hook: (inequalities processed, total, current vertex count).
  std::function<void(int, int, std::size_t)> progress;
};

// Vertex enumeration by the incremental double description method.
// Requires an H-representation of a bounded polytope; fills `vertices`
// (complete, duplicate-free, lexicographically sorted).
template <class K>
void double_description(BasicPolytope<K>& p, const DdOptions& opts = {});

// H-representation (facets + affine hull) from a vertex set, by DD on the
// polar dual taken about the vertex centroid.
template <class K>
BasicPolytope<K> polytope_from_vertices(int dim, std::vector<std::vector<K>> vertices,
                                        const DdOptions& opts = {});

// The simplex of non-increasing nonnegative vectors summing to one;
// vertices v_k = (1/k, ..., 1/k, 0, ..., 0).
template <class K>
BasicPolytope<K> weyl_chamber(int dim);

// One DD step: cut p (which must carry both representations) with a.x >= b.
// A redundant cut leaves the polytope untouched.
template <class K>
void intersect_halfspace(BasicPolytope<K>& p, const LinearConstraint<K>& cut,
                         const DdOptions& opts = {});

// Close the V-representation under coordinate permutations, drop non-extreme
// points by LP separation, and recompute facets by DD on the dual.
// Guard: dim <= 6 (at most 720 images per vertex).
template <class K>
void permutation_closure(BasicPolytope<K>& p, const DdOptions& opts = {});

// (squared inradius lower bound at `center`, squared circumradius).
// Requires both representations; `center` must lie inside.
template <class K>
std::pair<K, K> radius_extremes_squared(const BasicPolytope<K>& p, const std::vector<K>& center);

// Square roots of the above, as doubles.
template <class K>
std::pair<double, double> radius_extremes(const BasicPolytope<K>& p,
                                          const std::vector<K>& center);

// Consistency check: every vertex satisfies every constraint, is tight on at
// least one inequality, and its tight set has full affine rank. Throws
// consistency_error on failure.
template <class K>
void verify_vertex_representation(const BasicPolytope<K>& p, double tol = 1e-9);

// H-representation of the n-qubit Lambda polytope in Pauli coordinates
// x_a = Tr(X T_a), one integer inequality 1 + sum_a s_a x_a >= 0 per pure
// stabilizer state. n <= 2 (the n = 3 system is used by the LP sampler, not
// by full DD).
RationalPolytope lambda_hrep_qubits(int n);

}  // namespace stabspec
