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
#include "stabspec/polytope.hpp"

namespace stabspec {

// 12 significant digits, '.' decimal separator, locale-independent.
std::string format_sig12(double x);

// {"d":..., "n":..., "label":..., "re":[[...]], "im":[[...]]}, row-major.
std::string operator_to_json(const HermitianOperator& op);
HermitianOperator operator_from_json(const std::string& text);
std::string operators_to_json(const std::vector<HermitianOperator>& ops);

// {"dim":..., "exact":bool, "H":[{"a":[...],"b":...}], "V":[[...]]}.
// Equalities are emitted as paired inequalities inside "H"; rationals as
// "p/q" strings in exact mode, numbers otherwise.
std::string polytope_to_json(const RationalPolytope& p);
std::string polytope_to_json(const FloatPolytope& p);

// Histogram CSV: columns bin_lo,bin_hi,count.
void write_histogram_csv(std::ostream& os, const std::vector<double>& samples, double lo,
                         double hi, int bins);

}  // namespace stabspec
