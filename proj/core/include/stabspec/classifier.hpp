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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabspec/lp.hpp"
#include "stabspec/polytope.hpp"
#include "stabspec/spectral_core.hpp"

namespace stabspec {

// ---- closed-form vertex spectra ----

// Type-m maximal CNC operator spectrum on n qubits:
// (1 +- sqrt(2m+1))/2^m with multiplicity 2^{m-1}, zero elsewhere.
Spectrum qubit_cnc_spectrum(int n, int m);
std::vector<Spectrum> cnc_orbit_spectra_qubits(int n);  // m = 1..n

// Phase-point spectrum: +1 with multiplicity (d^n+1)/2, -1 with (d^n-1)/2.
Spectrum phase_point_spectrum(int d, int n);

// The two unitary orbits of single-qutrit Lambda vertices:
// (1,1,-1) and ((1+sqrt5)/2, 0, (1-sqrt5)/2).
std::vector<Spectrum> qutrit_vertex_orbit_spectra();

// The eight orbits of 2-qubit Lambda vertices (spectra and exact squared
// Hilbert-Schmidt norms).
struct TwoQubitOrbit {
  std::string label;
  Spectrum spectrum;
  Rational hs_norm_sq;
  bool cnc;
};
const std::vector<TwoQubitOrbit>& two_qubit_orbit_table();

// ---- membership predicates ----

// True iff sum_k lambda_k^up(s) lambda_k^down(A) >= -tol for every supplied
// vertex spectrum A.
bool astab_test(const Spectrum& s, const std::vector<Spectrum>& vertex_spectra,
                double tol = 1e-10);

// True iff the sum of the largest (d^n - 1)/2 entries is <= 1/2 + tol.
// Odd d only.
bool awp_test(const Spectrum& s, int d, double tol = 1e-10);

// True iff min_u W_rho(u) >= -tol. Odd d only.
bool wp_test(const HermitianOperator& rho, double tol = 1e-12);

enum class TriState { Yes, No, Unknown };

struct SpectralVerdicts {
  bool astab = false;
  // Qubit n >= 3: the verdict assumes CNC spectra are spectrally generating.
  bool astab_conditional = false;
  // Odd d, n >= 2 (and single qudits with d >= 5): only the phase-point
  // necessary constraint is checked, so astab=true is not conclusive.
  bool astab_necessary_only = false;
  std::optional<bool> awp;            // odd d only
  std::vector<std::string> violated;  // violated constraints with values
};

SpectralVerdicts spectral_verdicts(const Spectrum& s, int d, int n);

struct ClassificationReport {
  int d = 2;
  int n = 1;
  Spectrum spectrum;
  SpectralVerdicts verdicts;
  std::optional<bool> wp;  // from the matrix when given, else of diag(spectrum)
  std::string wp_basis;    // "matrix" or "diagonal"
  TriState in_stab_hull = TriState::Unknown;
  double purity = 0.0;
  double boundary_tolerance = 1e-10;
  double purity_inball = 0.0;                 // purity <= this => in every ball test
  double purity_gb = 0.0;                     // Gurvits-Barnum ball purity
  double purity_psd = 0.0;                    // PSD inball purity (= R_AWP ball, odd d)
  std::optional<double> purity_awp_necessity; // purity > this => not AWP (odd d)
};

ClassificationReport classify_spectrum(const Spectrum& s, int d, int n);
ClassificationReport classify_operator(const HermitianOperator& rho);
std::string report_to_json(const ClassificationReport& r);

// ---- spectral polytopes ----

struct SpectralPolytope {
  FloatPolytope chamber;  // sorted-spectrum slice of the simplex
  FloatPolytope full;     // permutation closure (empty when dim > 6)
  bool conditional = false;
};

// Supported (d,n): (2,1), (2,2), (3,1) unconditional; (2,3) conditional.
SpectralPolytope build_astab_spectral_polytope(int d, int n);

// Odd d, d^n <= 27. Closed-form V-representation from the two generating
// orbits, facets recomputed from the vertex set.
SpectralPolytope build_awp_spectral_polytope(int d, int n);

// Chamber vertices of the AWP cut (v_1', ..., v_{N-2}', v_{N-1}, v_N).
std::vector<std::vector<Rational>> awp_chamber_vertices_exact(int N);
// The two generating orbit representatives v_1' and v_{N-1}.
std::vector<std::vector<Rational>> awp_generator_vertices_exact(int N);

// ---- radii ----

struct RadiiReport {
  int d = 2;
  int n = 1;
  double r_stab = 0.0;
  bool r_stab_conditional = false;  // qubits: relies on the HS-norm conjecture
  std::optional<double> r_wp;       // odd d
  std::optional<double> R_awp;      // odd d
  double r_gb = 0.0;
  double r_psd = 0.0;
  double purity_inball = 0.0;
  std::optional<double> purity_awp_necessity;  // odd d
  bool chain_stab_eq_wp = true;
  bool chain_stab_lt_gb = false;
  bool chain_gb_lt_psd = false;
  bool chain_psd_eq_rawp = true;
  bool chain_holds = false;
};

RadiiReport radii_report(int d, int n);
std::string radii_to_json(const RadiiReport& r);

// ---- Lambda vertex sampling and conjecture evidence (qubits) ----

struct SampledVertex {
  std::vector<double> coords;  // Pauli coordinates x_a
  Spectrum spectrum;
  double hs_norm_sq;
  std::string fingerprint;  // rounded sorted spectrum + rounded norm
};

// Haar-random |psi> objectives maximized over Lambda; each optimum is a
// vertex. n <= 3.
std::vector<SampledVertex> sample_lambda_vertices(int n, int count, std::uint64_t seed,
                                                  int jobs = 1);

struct ConjectureReport {
  int n = 1;
  bool exhaustive = false;
  int samples = 0;
  std::uint64_t seed = 0;
  std::size_t distinct_fingerprints = 0;
  double max_hs_norm_sq = 0.0;
  int mixture_failures = 0;  // not majorized by any CNC mixture
  int direct_failures = 0;   // non-CNC spectrum not majorized by the m=1 spectrum
  int norm_failures = 0;     // Tr(X^2) > 2 + 1e-9
  std::vector<std::pair<std::string, Spectrum>> lorenz_curves;
  std::vector<double> hs_norms;
};

// exhaustive: n = 1 uses the single cube orbit, n = 2 the eight-orbit table;
// otherwise `samples` seeded LP draws.
ConjectureReport conjecture_harness(int n, int samples, std::uint64_t seed, bool exhaustive,
                                    int jobs = 1);
std::string conjecture_summary_json(const ConjectureReport& r);

}  // namespace stabspec
