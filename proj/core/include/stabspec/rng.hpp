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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <utility>

namespace stabspec {

// Counter-based generator: output i of stream s under seed k is a fixed
// bijective mix of (k, s, i). Streams are independent, so batch sampling can
// assign one stream per draw and stay byte-reproducible under any job count.
// (std::mt19937 + std::normal_distribution would not be portable across
// standard libraries.)
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64();
  // Uniform on [0, 1).
  double next_double();
  // Standard normal pair (Box-Muller on explicit uniforms).
  std::pair<double, double> next_gaussian_pair();
  double next_gaussian();
  std::complex<double> next_complex_gaussian();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Haar-random pure state: complex standard normal vector, normalized.
Eigen::VectorXcd haar_state(int dim, CounterRng& rng);

// Haar-distributed unitary via QR of a complex Ginibre matrix with the
// standard phase correction on R's diagonal.
Eigen::MatrixXcd haar_unitary(int dim, CounterRng& rng);

}  // namespace stabspec
