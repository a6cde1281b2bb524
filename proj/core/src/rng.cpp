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

#include "stabspec/rng.hpp"

#include <cmath>

namespace stabspec {

namespace {

// splitmix64 finalizer; full 64-bit avalanche.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t CounterRng::next_u64() {
  std::uint64_t h = mix64(seed_);
  h = mix64(h ^ (stream_ * 0xd1342543de82ef95ULL));
  h = mix64(h ^ counter_);
  ++counter_;
  return h;
}

double CounterRng::next_double() {
  // 53 random bits -> [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::pair<double, double> CounterRng::next_gaussian_pair() {
  double u1 = next_double();
  double u2 = next_double();
  while (u1 <= 0.0) u1 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

double CounterRng::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  auto [a, b] = next_gaussian_pair();
  spare_ = b;
  have_spare_ = true;
  return a;
}

std::complex<double> CounterRng::next_complex_gaussian() {
  auto [a, b] = next_gaussian_pair();
  return {a, b};
}

Eigen::VectorXcd haar_state(int dim, CounterRng& rng) {
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.next_complex_gaussian();
  v.normalize();
  return v;
}

Eigen::MatrixXcd haar_unitary(int dim, CounterRng& rng) {
  Eigen::MatrixXcd g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.next_complex_gaussian();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    std::complex<double> rjj = r(j, j);
    std::complex<double> phase = rjj == std::complex<double>(0.0) ? 1.0 : rjj / std::abs(rjj);
    q.col(j) *= phase;
  }
  return q;
}

}  // namespace stabspec
