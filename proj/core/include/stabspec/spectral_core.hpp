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

#include <iosfwd>
#include <string>
#include <vector>

#include "stabspec/operator_algebra.hpp"

namespace stabspec {

// Real eigenvalue vector with cached sorted views.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& sorted_desc() const { return desc_; }
  const std::vector<double>& sorted_asc() const { return asc_; }
  int size() const { return static_cast<int>(values_.size()); }
  double trace() const;
  bool is_density(double neg_tol = 1e-12, double sum_tol = 1e-10) const;

 private:
  std::vector<double> values_;
  std::vector<double> desc_;
  std::vector<double> asc_;
};

struct EigenSystem {
  std::vector<double> values;  // descending
  CMatrix vectors;             // columns, matching order
};

// Cyclic Jacobi for complex Hermitian matrices (deterministic sweep order;
// off-diagonal Frobenius norm driven below 1e-12 relative).
// Throws contract_error if the input is not Hermitian to 1e-10.
EigenSystem eigen_system(const CMatrix& m);
Spectrum eigen_spectrum(const CMatrix& m);
Spectrum eigen_spectrum(const HermitianOperator& op);

// sum_k lambda_k^up(rho) lambda_k^down(A) = min_U Tr(U rho U^dag A).
double kyfan_min_pairing(const Spectrum& rho, const Spectrum& a);

// True iff every descending partial sum of mu dominates that of lam.
// Requires equal lengths and equal sums (to 1e-9).
bool majorizes(const Spectrum& mu, const Spectrum& lam, double tol = 1e-9);

// k-th entry = sum of the k largest values.
std::vector<double> lorenz_curve(const Spectrum& s);

double purity(const Spectrum& s);

// CSV emitter, columns k,S,label; 12 significant digits.
void write_lorenz_csv(std::ostream& os,
                      const std::vector<std::pair<std::string, Spectrum>>& curves);

}  // namespace stabspec
