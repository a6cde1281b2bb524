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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "stabspec/classifier.hpp"
#include "stabspec/errors.hpp"
#include "stabspec/io.hpp"
#include "stabspec/operator_algebra.hpp"
#include "stabspec/polytope.hpp"
#include "stabspec/spectral_core.hpp"

namespace {

using namespace stabspec;

// Exit codes: 0 success, 2 usage, 3 input, 4 resource/guard, 5 internal.
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitGuard = 4;
constexpr int kExitInternal = 5;

struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

std::filesystem::path default_outdir() {
  if (const char* env = std::getenv("STABSPEC_OUTDIR")) return env;
  return ".";
}

std::filesystem::path resolve_out(const std::string& out, const std::string& fallback) {
  if (!out.empty()) return out;
  return default_outdir() / fallback;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw input_error("cannot open output file: " + path.string());
  os << content;
  if (!os.flush()) throw input_error("failed writing: " + path.string());
}

Spectrum parse_spectrum(const std::string& text, int d, int n) {
  std::int64_t dim = 1;
  for (int i = 0; i < n; ++i) dim *= d;
  std::vector<double> vals;
  if (text == "uniform") {
    vals.assign(dim, 1.0 / static_cast<double>(dim));
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        vals.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw input_error("--spectrum: cannot parse entry '" + item + "'");
      }
    }
  }
  if (static_cast<std::int64_t>(vals.size()) != dim)
    throw input_error("--spectrum: expected " + std::to_string(dim) + " entries, got " +
                      std::to_string(vals.size()));
  double sum = 0.0;
  for (double v : vals) {
    if (v < -1e-12) throw input_error("--spectrum: negative entry beyond tolerance");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-8)
    throw input_error("--spectrum: entries sum to " + std::to_string(sum) + ", not 1");
  if (std::abs(sum - 1.0) > 1e-12) {
    std::cerr << "warning: renormalizing spectrum (sum deviates by "
              << format_sig12(sum - 1.0) << ")\n";
    for (double& v : vals) v /= sum;
  }
  return Spectrum(std::move(vals));
}

int run_enumerate(const std::string& kind, int d, int n, int m, bool confirm_long,
                  const std::string& out) {
  if (kind == "stab") {
    const auto states = enumerate_stabilizer_states(d, n);
    write_file(resolve_out(out, "stab_states.json"), operators_to_json(states));
    std::printf("%zu operators\n", states.size());
    return 0;
  }
  if (kind == "lambda") {
    if (d == 3 && n == 1) {
      const auto verts = qutrit_lambda_vertices();
      write_file(resolve_out(out, "lambda_vertices.json"), operators_to_json(verts));
      std::printf("%zu vertices\n", verts.size());
      return 0;
    }
    if (d == 2 && (n == 1 || n == 2)) {
      if (n == 2 && !confirm_long)
        throw usage_error(
            "enumerate lambda -d 2 -n 2 runs exact DD for several minutes; pass --confirm-long");
      RationalPolytope p = lambda_hrep_qubits(n);
      DdOptions opts;
      opts.box_bound = 4.0;
      if (n == 2)
        opts.progress = [](int k, int total, std::size_t nv) {
          std::fprintf(stderr, "inequality %d/%d, vertices so far: %zu\n", k, total, nv);
        };
      double_description(p, opts);
      write_file(resolve_out(out, "lambda_polytope.json"), polytope_to_json(p));
      std::printf("%zu vertices\n", p.vertices.size());
      return 0;
    }
    throw usage_error("enumerate lambda: supported (d,n) are (2,1), (2,2), (3,1)");
  }
  if (kind == "cnc") {
    if (d != 2) throw usage_error("enumerate cnc: qubits only (d = 2)");
    if (m < 1) throw usage_error("enumerate cnc: -m required (1 <= m <= n)");
    const auto ops = enumerate_cnc_operators(n, m);
    write_file(resolve_out(out, "cnc_operators.json"), operators_to_json(ops));
    std::printf("%zu operators\n", ops.size());
    return 0;
  }
  if (kind == "phasepoints") {
    const auto ops = phase_point_operators(d, n);
    write_file(resolve_out(out, "phase_points.json"), operators_to_json(ops));
    std::printf("%zu operators\n", ops.size());
    return 0;
  }
  throw usage_error("enumerate: kind must be stab|lambda|cnc|phasepoints");
}

int run_test(int d, int n, const std::string& spectrum, const std::string& matrix_file,
             const std::string& out) {
  if (spectrum.empty() == matrix_file.empty())
    throw usage_error("test: exactly one of --spectrum / --matrix is required");
  ClassificationReport report;
  if (!spectrum.empty()) {
    report = classify_spectrum(parse_spectrum(spectrum, d, n), d, n);
  } else {
    std::ifstream is(matrix_file);
    if (!is) throw input_error("cannot open --matrix file: " + matrix_file);
    std::stringstream buf;
    buf << is.rdbuf();
    HermitianOperator op;
    try {
      op = operator_from_json(buf.str());
    } catch (const std::exception& e) {
      throw input_error(std::string("--matrix: ") + e.what());
    }
    if (op.d != d || op.n != n) throw input_error("--matrix: (d, n) do not match the flags");
    if (!is_hermitian(op.mat, 1e-10)) throw input_error("--matrix: not Hermitian to 1e-10");
    report = classify_operator(op);
  }
  const std::string text = report_to_json(report);
  if (!out.empty())
    write_file(out, text);
  else
    std::printf("%s\n", text.c_str());
  return 0;  // verdicts never change the exit code
}

int run_spectral_polytope(const std::string& set, int d, int n, const std::string& out) {
  SpectralPolytope sp;
  if (set == "astab")
    sp = build_astab_spectral_polytope(d, n);
  else if (set == "awp")
    sp = build_awp_spectral_polytope(d, n);
  else
    throw usage_error("spectral-polytope: --set must be astab|awp");

  nlohmann::ordered_json j;
  j["set"] = set;
  j["d"] = d;
  j["n"] = n;
  j["conditional"] = sp.conditional;
  j["chamber"] = nlohmann::ordered_json::parse(polytope_to_json(sp.chamber));
  if (sp.full.has_v()) j["full"] = nlohmann::ordered_json::parse(polytope_to_json(sp.full));
  write_file(resolve_out(out, set + "_spectral_polytope.json"), j.dump(2));
  std::printf("chamber vertices: %zu", sp.chamber.vertices.size());
  if (sp.full.has_v())
    std::printf(", closure vertices: %zu, facets: %zu", sp.full.vertices.size(),
                sp.full.ineqs.size());
  std::printf("\n");
  return 0;
}

int run_radii(int d, int n, const std::string& out) {
  const auto report = radii_report(d, n);
  const std::string text = radii_to_json(report);
  if (!out.empty())
    write_file(out, text);
  else
    std::printf("%s\n", text.c_str());
  return 0;
}

int run_sample(int d, int n, int count, std::uint64_t seed, int jobs, const std::string& out) {
  if (d != 2) throw usage_error("sample: qubits only (d = 2)");
  const auto verts = sample_lambda_vertices(n, count, seed, jobs);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : verts) {
    nlohmann::ordered_json jv;
    jv["coords"] = v.coords;
    jv["spectrum"] = v.spectrum.sorted_desc();
    jv["hs_norm_sq"] = v.hs_norm_sq;
    jv["fingerprint"] = v.fingerprint;
    arr.push_back(std::move(jv));
  }
  nlohmann::ordered_json j;
  j["n"] = n;
  j["count"] = count;
  j["seed"] = seed;
  j["vertices"] = std::move(arr);
  write_file(resolve_out(out, "lambda_samples.json"), j.dump(2));
  std::printf("%d vertices sampled\n", count);
  return 0;
}

int run_conjectures(int n, int samples, std::uint64_t seed, bool exhaustive, int jobs,
                    const std::string& outdir_flag) {
  if (!exhaustive && samples <= 0)
    throw usage_error("conjectures: pass --exhaustive or --samples N");
  const auto report = conjecture_harness(n, samples, seed, exhaustive, jobs);

  const std::filesystem::path dir =
      outdir_flag.empty() ? default_outdir() : std::filesystem::path(outdir_flag);
  std::filesystem::create_directories(dir);

  std::ostringstream lorenz;
  write_lorenz_csv(lorenz, report.lorenz_curves);
  write_file(dir / "lorenz.csv", lorenz.str());

  std::ostringstream hist;
  write_histogram_csv(hist, report.hs_norms, 0.75, 2.05, 26);
  write_file(dir / "hsnorm_hist.csv", hist.str());

  write_file(dir / "summary.json", conjecture_summary_json(report));

  std::printf("orbits: %zu, failures: %d/%d/%d, max Tr(X^2) = %s\n",
              report.distinct_fingerprints, report.mixture_failures, report.direct_failures,
              report.norm_failures, format_sig12(report.max_hs_norm_sq).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"basis-independent stabilizerness toolkit"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "construct operator/vertex families");
  std::string kind;
  int e_d = 2, e_n = 1, e_m = 0;
  bool confirm_long = false;
  std::string e_out;
  enumerate->add_option("kind", kind, "stab|lambda|cnc|phasepoints")->required();
  enumerate->add_option("-d", e_d, "prime qudit dimension");
  enumerate->add_option("-n", e_n, "number of qudits");
  enumerate->add_option("-m", e_m, "CNC type parameter");
  enumerate->add_flag("--confirm-long", confirm_long, "allow multi-minute enumerations");
  enumerate->add_option("-o,--output", e_out, "output file");

  // test
  auto* test = app.add_subcommand("test", "classify a state spectrum or matrix");
  int t_d = 2, t_n = 1;
  std::string t_spectrum, t_matrix, t_out;
  test->add_option("-d", t_d, "prime qudit dimension");
  test->add_option("-n", t_n, "number of qudits");
  test->add_option("--spectrum", t_spectrum, "comma list or 'uniform'");
  test->add_option("--matrix", t_matrix, "operator JSON file");
  test->add_option("-o,--output", t_out, "write the report here instead of stdout");

  // spectral-polytope
  auto* spoly = app.add_subcommand("spectral-polytope", "build ASTAB/AWP spectral polytopes");
  std::string s_set = "astab", s_out;
  int s_d = 2, s_n = 1;
  spoly->add_option("--set", s_set, "astab|awp")->required();
  spoly->add_option("-d", s_d, "prime qudit dimension");
  spoly->add_option("-n", s_n, "number of qudits");
  spoly->add_option("-o,--output", s_out, "output file");

  // radii
  auto* radii = app.add_subcommand("radii", "inradius/circumradius report");
  int r_d = 2, r_n = 1;
  std::string r_out;
  radii->add_option("-d", r_d, "prime qudit dimension");
  radii->add_option("-n", r_n, "number of qudits");
  radii->add_option("-o,--output", r_out, "write the report here instead of stdout");

  // sample
  auto* sample = app.add_subcommand("sample", "LP-sample Lambda vertices (qubits)");
  int sm_d = 2, sm_n = 2, sm_count = 100, sm_jobs = 1;
  std::uint64_t sm_seed = 0;
  std::string sm_out;
  sample->add_option("-d", sm_d, "qudit dimension (2)");
  sample->add_option("-n", sm_n, "number of qubits (1..3)");
  sample->add_option("--count", sm_count, "number of draws");
  auto* sm_seed_opt = sample->add_option("--seed", sm_seed, "RNG seed (required)");
  sample->add_option("--jobs", sm_jobs, "parallel workers");
  sample->add_option("-o,--output", sm_out, "output file");

  // conjectures
  auto* conj = app.add_subcommand("conjectures", "majorization / HS-norm evidence pipeline");
  int c_n = 2, c_samples = 0, c_jobs = 1;
  std::uint64_t c_seed = 0;
  bool c_exhaustive = false;
  std::string c_outdir;
  conj->add_option("-n", c_n, "number of qubits (1..3)");
  conj->add_option("--samples", c_samples, "number of LP draws");
  auto* c_seed_opt = conj->add_option("--seed", c_seed, "RNG seed");
  conj->add_flag("--exhaustive", c_exhaustive, "use the complete orbit tables (n <= 2)");
  conj->add_option("--jobs", c_jobs, "parallel workers");
  conj->add_option("--outdir", c_outdir, "directory for lorenz.csv/hsnorm_hist.csv/summary.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(kind, e_d, e_n, e_m, confirm_long, e_out);
    if (test->parsed()) return run_test(t_d, t_n, t_spectrum, t_matrix, t_out);
    if (spoly->parsed()) return run_spectral_polytope(s_set, s_d, s_n, s_out);
    if (radii->parsed()) return run_radii(r_d, r_n, r_out);
    if (sample->parsed()) {
      if (sm_seed_opt->count() == 0)
        throw usage_error("sample: --seed is required for reproducibility");
      return run_sample(sm_d, sm_n, sm_count, sm_seed, sm_jobs, sm_out);
    }
    if (conj->parsed()) {
      if (!c_exhaustive && c_seed_opt->count() == 0)
        throw usage_error("conjectures: --seed is required for sampled runs");
      return run_conjectures(c_n, c_samples, c_seed, c_exhaustive, c_jobs, c_outdir);
    }
    return kExitUsage;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const guard_error& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
