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

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace stabspec {

// Exact arbitrary-precision rationals (GMP-backed) for the exact polytope
// and LP pipelines.
using Rational = boost::multiprecision::mpq_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

// Canonical "p/q" text form ("p" when the denominator is 1).
std::string rational_to_string(const Rational& q);

// Accepts "p", "p/q", and plain decimal strings like "-0.25".
Rational rational_from_string(const std::string& s);

}  // namespace stabspec
