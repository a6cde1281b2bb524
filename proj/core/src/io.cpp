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

#include "stabspec/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "stabspec/errors.hpp"

namespace stabspec {

using json = nlohmann::ordered_json;

std::string format_sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  os << num;
  if (den != 1) os << "/" << den;
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const boost::multiprecision::mpz_int num(s.substr(0, slash));
    const boost::multiprecision::mpz_int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational_from_string: zero denominator");
    return Rational(num, den);
  }
  const auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(boost::multiprecision::mpz_int(s), 1);
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  const int frac = static_cast<int>(s.size() - dot - 1);
  boost::multiprecision::mpz_int den = 1;
  for (int i = 0; i < frac; ++i) den *= 10;
  return Rational(boost::multiprecision::mpz_int(digits), den);
}

namespace {

json matrix_part_json(const CMatrix& m, bool real) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(real ? m(i, j).real() : m(i, j).imag());
    rows.push_back(std::move(row));
  }
  return rows;
}

json operator_json(const HermitianOperator& op) {
  json j;
  j["d"] = op.d;
  j["n"] = op.n;
  j["label"] = op.label;
  j["re"] = matrix_part_json(op.mat, true);
  j["im"] = matrix_part_json(op.mat, false);
  return j;
}

template <class K>
json constraint_json(const LinearConstraint<K>& c, bool exact) {
  json jc;
  json a = json::array();
  for (const auto& x : c.a) {
    if constexpr (std::is_same_v<K, Rational>) {
      if (exact)
        a.push_back(rational_to_string(x));
      else
        a.push_back(to_double(x));
    } else {
      a.push_back(x);
    }
  }
  jc["a"] = std::move(a);
  if constexpr (std::is_same_v<K, Rational>) {
    if (exact)
      jc["b"] = rational_to_string(c.b);
    else
      jc["b"] = to_double(c.b);
  } else {
    jc["b"] = c.b;
  }
  return jc;
}

template <class K>
json polytope_json(const BasicPolytope<K>& p, bool exact) {
  json j;
  j["dim"] = p.dim;
  j["exact"] = exact;
  json h = json::array();
  for (const auto& c : p.ineqs) h.push_back(constraint_json(c, exact));
  for (const auto& e : p.eqs) {
    h.push_back(constraint_json(e, exact));
    LinearConstraint<K> flipped;
    flipped.a.reserve(e.a.size());
    for (const auto& x : e.a) flipped.a.push_back(-x);
    flipped.b = -e.b;
    h.push_back(constraint_json(flipped, exact));
  }
  j["H"] = std::move(h);
  json v = json::array();
  for (const auto& vert : p.vertices) {
    json row = json::array();
    for (const auto& x : vert) {
      if constexpr (std::is_same_v<K, Rational>) {
        if (exact)
          row.push_back(rational_to_string(x));
        else
          row.push_back(to_double(x));
      } else {
        row.push_back(x);
      }
    }
    v.push_back(std::move(row));
  }
  j["V"] = std::move(v);
  return j;
}

}  // namespace

std::string operator_to_json(const HermitianOperator& op) { return operator_json(op).dump(2); }

HermitianOperator operator_from_json(const std::string& text) {
  const json j = json::parse(text);
  HermitianOperator op;
  op.d = j.at("d").get<int>();
  op.n = j.at("n").get<int>();
  op.label = j.at("label").get<std::string>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  const int rows = static_cast<int>(re.size());
  op.mat.resize(rows, rows);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < rows; ++k)
      op.mat(i, k) = {re[i][k].get<double>(), im[i][k].get<double>()};
  return op;
}

std::string operators_to_json(const std::vector<HermitianOperator>& ops) {
  json arr = json::array();
  for (const auto& op : ops) arr.push_back(operator_json(op));
  json j;
  j["count"] = ops.size();
  j["operators"] = std::move(arr);
  return j.dump(2);
}

std::string polytope_to_json(const RationalPolytope& p) { return polytope_json(p, true).dump(2); }

std::string polytope_to_json(const FloatPolytope& p) { return polytope_json(p, false).dump(2); }

void write_histogram_csv(std::ostream& os, const std::vector<double>& samples, double lo,
                         double hi, int bins) {
  if (bins < 1 || !(hi > lo)) throw std::invalid_argument("write_histogram_csv: bad bin spec");
  std::vector<long> counts(bins, 0);
  for (double s : samples) {
    int b = static_cast<int>(std::floor((s - lo) / (hi - lo) * bins));
    if (b < 0) b = 0;
    if (b >= bins) b = bins - 1;
    ++counts[b];
  }
  os << "bin_lo,bin_hi,count\n";
  const double w = (hi - lo) / bins;
  for (int b = 0; b < bins; ++b)
    os << format_sig12(lo + b * w) << "," << format_sig12(lo + (b + 1) * w) << "," << counts[b]
       << "\n";
}

}  // namespace stabspec
