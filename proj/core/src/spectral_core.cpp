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

#include "stabspec/spectral_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "stabspec/errors.hpp"
#include "stabspec/io.hpp"

namespace stabspec {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  desc_ = values_;
  std::sort(desc_.begin(), desc_.end(), std::greater<>());
  asc_.assign(desc_.rbegin(), desc_.rend());
}

double Spectrum::trace() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

bool Spectrum::is_density(double neg_tol, double sum_tol) const {
  if (values_.empty()) return false;
  if (asc_.front() < -neg_tol) return false;
  return std::abs(trace() - 1.0) <= sum_tol;
}

EigenSystem eigen_system(const CMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::invalid_argument("eigen_system: matrix must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw contract_error("eigen_system: matrix is not Hermitian to 1e-10");

  CMatrix a = (m + m.adjoint()) / 2.0;
  CMatrix v = CMatrix::Identity(n, n);
  const double norm0 = std::max(1.0, a.norm());
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += 2.0 * std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-12 * norm0) break;
    if (sweep == kMaxSweeps - 1)
      throw tolerance_error("eigen_system: Jacobi sweeps did not converge");

    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const std::complex<double> g = a(p, q);
        const double ag = std::abs(g);
        if (ag <= 1e-300) continue;
        const std::complex<double> ph = g / ag;
        const double theta = 0.5 * std::atan2(2.0 * ag, a(p, p).real() - a(q, q).real());
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // J restricted to (p,q): [[ph c, -ph s], [s, c]].
        const std::complex<double> jpp = ph * c, jpq = -ph * s;
        for (int i = 0; i < n; ++i) {  // A <- A J, V <- V J
          const std::complex<double> aip = a(i, p), aiq = a(i, q);
          a(i, p) = aip * jpp + aiq * s;
          a(i, q) = aip * jpq + aiq * c;
          const std::complex<double> vip = v(i, p), viq = v(i, q);
          v(i, p) = vip * jpp + viq * s;
          v(i, q) = vip * jpq + viq * c;
        }
        for (int i = 0; i < n; ++i) {  // A <- J^dag A
          const std::complex<double> api = a(p, i), aqi = a(q, i);
          a(p, i) = std::conj(jpp) * api + s * aqi;
          a(q, i) = std::conj(jpq) * api + c * aqi;
        }
      }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });
  EigenSystem sys;
  sys.values.resize(n);
  sys.vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    sys.values[k] = a(order[k], order[k]).real();
    sys.vectors.col(k) = v.col(order[k]);
  }
  return sys;
}

Spectrum eigen_spectrum(const CMatrix& m) { return Spectrum(eigen_system(m).values); }

Spectrum eigen_spectrum(const HermitianOperator& op) { return eigen_spectrum(op.mat); }

double kyfan_min_pairing(const Spectrum& rho, const Spectrum& a) {
  if (rho.size() != a.size())
    throw std::invalid_argument("kyfan_min_pairing: spectrum lengths differ");
  double s = 0.0;
  for (int k = 0; k < rho.size(); ++k) s += rho.sorted_asc()[k] * a.sorted_desc()[k];
  return s;
}

bool majorizes(const Spectrum& mu, const Spectrum& lam, double tol) {
  if (mu.size() != lam.size()) throw std::invalid_argument("majorizes: spectrum lengths differ");
  if (std::abs(mu.trace() - lam.trace()) > 1e-9)
    throw contract_error("majorizes: sums differ beyond 1e-9");
  double smu = 0.0, slam = 0.0;
  for (int k = 0; k < mu.size(); ++k) {
    smu += mu.sorted_desc()[k];
    slam += lam.sorted_desc()[k];
    if (smu < slam - tol) return false;
  }
  return true;
}

std::vector<double> lorenz_curve(const Spectrum& s) {
  std::vector<double> out;
  out.reserve(s.size());
  double acc = 0.0;
  for (double v : s.sorted_desc()) {
    acc += v;
    out.push_back(acc);
  }
  return out;
}

double purity(const Spectrum& s) {
  double p = 0.0;
  for (double v : s.values()) p += v * v;
  return p;
}

void write_lorenz_csv(std::ostream& os,
                      const std::vector<std::pair<std::string, Spectrum>>& curves) {
  os << "k,S,label\n";
  for (const auto& [label, spec] : curves) {
    const auto curve = lorenz_curve(spec);
    for (std::size_t k = 0; k < curve.size(); ++k)
      os << (k + 1) << "," << format_sig12(curve[k]) << "," << label << "\n";
  }
}

}  // namespace stabspec
