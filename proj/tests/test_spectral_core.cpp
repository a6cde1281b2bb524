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

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "stabspec/errors.hpp"
#include "stabspec/rng.hpp"

using namespace stabspec;

namespace {

CMatrix random_hermitian(int dim, CounterRng& rng) {
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.next_complex_gaussian();
  return (g + g.adjoint()) / 2.0;
}

Spectrum random_density_spectrum(int dim, CounterRng& rng) {
  std::vector<double> v(dim);
  double sum = 0.0;
  for (double& x : v) {
    x = std::abs(rng.next_gaussian());
    sum += x;
  }
  for (double& x : v) x /= sum;
  return Spectrum(std::move(v));
}

}  // namespace

TEST_CASE("eigen_spectrum goldens") {
  CHECK(eigen_spectrum(CMatrix::Identity(2, 2) / 2.0).sorted_desc() ==
        std::vector<double>{0.5, 0.5});

  // A_{+++} = (I+X+Y+Z)/2 has eigenvalues (1 +- sqrt 3)/2.
  CMatrix a(2, 2);
  a << std::complex<double>(1, 0), std::complex<double>(0.5, -0.5),
      std::complex<double>(0.5, 0.5), std::complex<double>(0, 0);
  const auto s = eigen_spectrum(a).sorted_desc();
  CHECK(s[0] == doctest::Approx((1 + std::sqrt(3.0)) / 2).epsilon(1e-12));
  CHECK(s[1] == doctest::Approx((1 - std::sqrt(3.0)) / 2).epsilon(1e-12));

  // Diagonal matrix carrying the 2-qubit rank-2 non-CNC orbit spectrum.
  const double r7 = std::sqrt(7.0);
  CMatrix d4 = CMatrix::Zero(4, 4);
  d4(1, 1) = 0.5 - r7 / 4.0;
  d4(2, 2) = 0.5 + r7 / 4.0;
  const auto s4 = eigen_spectrum(d4);
  CHECK(s4.sorted_desc()[0] == doctest::Approx(0.5 + r7 / 4.0).epsilon(1e-12));
  CHECK(s4.sorted_desc()[3] == doctest::Approx(0.5 - r7 / 4.0).epsilon(1e-12));
  CHECK(s4.trace() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(purity(s4) == doctest::Approx(11.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("eigen_system: trace moments and eigenvector residuals") {
  CounterRng rng(11, 0);
  for (int dim = 2; dim <= 8; ++dim)
    for (int rep = 0; rep < 25; ++rep) {
      const CMatrix h = random_hermitian(dim, rng);
      const auto sys = eigen_system(h);
      double sum = 0.0, sum2 = 0.0;
      for (double v : sys.values) {
        sum += v;
        sum2 += v * v;
      }
      CHECK(sum == doctest::Approx(h.trace().real()).epsilon(1e-9));
      CHECK(sum2 == doctest::Approx((h * h).trace().real()).epsilon(1e-9));
      for (int k = 0; k < dim; ++k) {
        const double resid =
            (h * sys.vectors.col(k) - sys.values[k] * sys.vectors.col(k)).norm();
        CHECK(resid < 1e-9);
      }
      CHECK((sys.vectors.adjoint() * sys.vectors - CMatrix::Identity(dim, dim))
                .cwiseAbs()
                .maxCoeff() < 1e-10);
      for (int k = 1; k < dim; ++k) CHECK(sys.values[k - 1] >= sys.values[k]);
    }
}

TEST_CASE("eigen_system rejects non-Hermitian input") {
  CMatrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(eigen_system(m), contract_error);
}

TEST_CASE("kyfan goldens") {
  // Maximally mixed against any unit-trace spectrum gives 1/d^n.
  const Spectrum mixed({0.25, 0.25, 0.25, 0.25});
  const Spectrum a({1.3, 0.2, -0.1, -0.4});
  CHECK(kyfan_min_pairing(mixed, a) == doctest::Approx(0.25).epsilon(1e-12));

  const double r3 = std::sqrt(3.0);
  const Spectrum pure({1.0, 0.0});
  const Spectrum cube({(1 + r3) / 2, (1 - r3) / 2});
  CHECK(kyfan_min_pairing(pure, cube) == doctest::Approx((1 - r3) / 2).epsilon(1e-12));
}

TEST_CASE("kyfan is the exact minimum over unitaries (sampled oracle, dim 2)") {
  const double r3 = std::sqrt(3.0);
  CMatrix rho = CMatrix::Zero(2, 2);
  rho(0, 0) = 1.0;
  CMatrix a(2, 2);
  a << std::complex<double>(1, 0), std::complex<double>(0.5, -0.5),
      std::complex<double>(0.5, 0.5), std::complex<double>(0, 0);
  const double bound = (1 - r3) / 2;

  CounterRng rng(12, 0);
  double lowest = 1e9;
  for (int i = 0; i < 10000; ++i) {
    const CMatrix u = haar_unitary(2, rng);
    const double val = (u * rho * u.adjoint() * a).trace().real();
    CHECK(val >= bound - 1e-9);
    lowest = std::min(lowest, val);
  }
  CHECK(lowest < bound + 0.01);  // the sampled minimum approaches the bound
}

TEST_CASE("kyfan equality witness: aligning eigenbases attains the bound") {
  CounterRng rng(13, 0);
  for (int dim = 2; dim <= 8; ++dim)
    for (int rep = 0; rep < 10; ++rep) {
      const CMatrix rho = random_hermitian(dim, rng);
      const CMatrix a = random_hermitian(dim, rng);
      const auto sys_rho = eigen_system(rho);
      const auto sys_a = eigen_system(a);
      // Ascending eigenvectors of rho paired with descending of a.
      CMatrix v_rho_asc(dim, dim);
      for (int k = 0; k < dim; ++k) v_rho_asc.col(k) = sys_rho.vectors.col(dim - 1 - k);
      const CMatrix u = sys_a.vectors * v_rho_asc.adjoint();
      const double attained = (u * rho * u.adjoint() * a).trace().real();
      const double bound = kyfan_min_pairing(Spectrum(sys_rho.values), Spectrum(sys_a.values));
      CHECK(attained == doctest::Approx(bound).epsilon(1e-10));
    }
}

TEST_CASE("kyfan lower bound against random unitaries, dims 2-8") {
  CounterRng rng(14, 0);
  for (int dim = 2; dim <= 8; ++dim)
    for (int rep = 0; rep < 5; ++rep) {
      const CMatrix rho = random_hermitian(dim, rng);
      const CMatrix a = random_hermitian(dim, rng);
      const double bound = kyfan_min_pairing(eigen_spectrum(rho), eigen_spectrum(a));
      for (int i = 0; i < 400; ++i) {
        const CMatrix u = haar_unitary(dim, rng);
        CHECK((u * rho * u.adjoint() * a).trace().real() >= bound - 1e-9);
      }
    }
}

TEST_CASE("majorization basics") {
  const Spectrum x({0.5, 0.3, 0.2});
  CHECK(majorizes(x, x));
  const Spectrum top({1.0, 0.0, 0.0, 0.0});
  CounterRng rng(15, 0);
  for (int rep = 0; rep < 50; ++rep) CHECK(majorizes(top, random_density_spectrum(4, rng)));
  CHECK_THROWS_AS(majorizes(Spectrum({0.5, 0.5}), Spectrum({0.4, 0.4})), contract_error);
  CHECK_THROWS_AS(majorizes(Spectrum({1.0}), Spectrum({0.5, 0.5})), std::invalid_argument);
}

TEST_CASE("m=1 CNC spectrum majorizes the smallest-norm non-CNC orbit") {
  const double r3 = std::sqrt(3.0), r5 = std::sqrt(5.0), r2 = std::sqrt(2.0);
  const Spectrum m1({(1 + r3) / 2, 0.0, 0.0, (1 - r3) / 2});
  const double e1 = r2 * std::sqrt(5.0 - r5) / 8.0;
  const double e2 = r2 * std::sqrt(5.0 + r5) / 8.0;
  const Spectrum row5({0.25 + e2, 0.25 + e1, 0.25 - e1, 0.25 - e2});
  CHECK(majorizes(m1, row5));
  CHECK_FALSE(majorizes(row5, m1));
}

TEST_CASE("majorization is a partial order on equal-sum vectors") {
  CounterRng rng(16, 0);
  for (int rep = 0; rep < 60; ++rep) {
    const int dim = 3 + static_cast<int>(rng.next_u64() % 5);
    const Spectrum mu1 = random_density_spectrum(dim, rng);
    // T-transforms (partial swaps) are doubly stochastic, so each step is
    // majorized by the previous one.
    auto smooth = [&](const Spectrum& s) {
      std::vector<double> v = s.values();
      const int i = static_cast<int>(rng.next_u64() % dim);
      const int j = static_cast<int>(rng.next_u64() % dim);
      if (i != j) {
        const double t = rng.next_double();
        const double a = v[i], b = v[j];
        v[i] = (1 - t / 2) * a + (t / 2) * b;
        v[j] = (t / 2) * a + (1 - t / 2) * b;
      }
      return Spectrum(v);
    };
    const Spectrum mu2 = smooth(mu1);
    const Spectrum mu3 = smooth(mu2);
    CHECK(majorizes(mu1, mu2));
    CHECK(majorizes(mu2, mu3));
    CHECK(majorizes(mu1, mu3));  // transitivity

    if (majorizes(mu2, mu1)) {  // antisymmetry up to permutation
      auto a = mu1.sorted_desc();
      auto b = mu2.sorted_desc();
      for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-7));
    }
  }
}

TEST_CASE("lorenz curve goldens") {
  const auto flat = lorenz_curve(Spectrum({0.25, 0.25, 0.25, 0.25}));
  CHECK(flat == std::vector<double>{0.25, 0.5, 0.75, 1.0});

  const double r3 = std::sqrt(3.0), r5 = std::sqrt(5.0);
  const auto m1 = lorenz_curve(Spectrum({(1 + r3) / 2, 0.0, 0.0, (1 - r3) / 2}));
  CHECK(m1[0] == doctest::Approx(1.36603).epsilon(1e-5));
  CHECK(m1[1] == doctest::Approx(1.36603).epsilon(1e-5));
  CHECK(m1[2] == doctest::Approx(1.36603).epsilon(1e-5));
  CHECK(m1[3] == doctest::Approx(1.0).epsilon(1e-9));

  const auto m2 =
      lorenz_curve(Spectrum({(1 + r5) / 4, (1 + r5) / 4, (1 - r5) / 4, (1 - r5) / 4}));
  CHECK(m2[0] == doctest::Approx(0.80902).epsilon(1e-5));
  CHECK(m2[1] == doctest::Approx(1.61803).epsilon(1e-5));
  CHECK(m2[2] == doctest::Approx(1.30902).epsilon(1e-5));
  CHECK(m2[3] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("purity goldens") {
  CHECK(purity(Spectrum({0.25, 0.25, 0.25, 0.25})) == doctest::Approx(0.25));
  CHECK(purity(Spectrum({1.0, 0.0})) == doctest::Approx(1.0));
  const double t = 1.0 / std::sqrt(3.0);
  CHECK(purity(Spectrum({(1 + t) / 2, (1 - t) / 2})) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("partial sums of mixtures of sorted vectors are linear in the weight") {
  CounterRng rng(17, 0);
  for (int rep = 0; rep < 40; ++rep) {
    const Spectrum a = random_density_spectrum(5, rng);
    const Spectrum b = random_density_spectrum(5, rng);
    const auto la = lorenz_curve(a);
    const auto lb = lorenz_curve(b);
    for (double p : {0.0, 0.25, 0.5, 0.8, 1.0}) {
      std::vector<double> mix(5);
      for (int i = 0; i < 5; ++i)
        mix[i] = p * a.sorted_desc()[i] + (1 - p) * b.sorted_desc()[i];
      const auto lm = lorenz_curve(Spectrum(mix));
      for (int k = 0; k < 5; ++k)
        CHECK(lm[k] == doctest::Approx(p * la[k] + (1 - p) * lb[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("lorenz CSV emitter") {
  std::ostringstream os;
  write_lorenz_csv(os, {{"flat", Spectrum({0.5, 0.5})}});
  CHECK(os.str() == "k,S,label\n1,0.5,flat\n2,1,flat\n");
}

TEST_CASE("density spectrum validation") {
  CHECK(Spectrum({0.5, 0.5}).is_density());
  CHECK_FALSE(Spectrum({1.5, -0.5}).is_density());
  CHECK_FALSE(Spectrum({0.6, 0.6}).is_density());
}
