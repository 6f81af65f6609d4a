// Copyright 2026 The cgplab Authors
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

#include "cgplab/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cgplab/cgp.hpp"
#include "cgplab/channel.hpp"
#include "cgplab/coherence.hpp"
#include "cgplab/diffgeo.hpp"
#include "cgplab/errors.hpp"
#include "cgplab/grassmann.hpp"
#include "cgplab/io.hpp"
#include "cgplab/mori.hpp"
#include "cgplab/qubit.hpp"
#include "cgplab/random.hpp"

namespace cgplab::cli {

namespace {

using io::Json;

struct Options {
  double tol_structural = Tolerance{}.structural;
  double tol_equality = Tolerance{}.equality;

  std::string unitary;
  std::string channel;
  std::string basis;
  std::string basis_a;
  std::string basis_b;
  std::string state;
  std::string path;
  std::string method;
  std::size_t samples = 100000;
  std::optional<std::uint64_t> seed;
  std::size_t workers = 1;
  std::size_t superop_cap = kDefaultSuperopCap;
  std::size_t dim = 0;
  std::optional<double> h;
  std::optional<double> step;
  std::vector<double> n;
  std::vector<double> m;
  double theta = 0.0;
  double psi = 0.0;
};

// A file argument together with its digest for the result document.
struct Loaded {
  Json doc;
  Json digest;
};

Loaded load(const std::string& path) {
  const std::string bytes = io::read_file(path);
  return {io::parse_json(bytes, path),
          Json{{"path", path}, {"fnv1a64", io::fnv1a64_hex(bytes)}}};
}

Json finite_or_string(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {
    tol_.structural = opt.tol_structural;
    tol_.equality = opt.tol_equality;
    tol_.validate();
  }

  void cgp() {
    start("cgp");
    const bool use_unitary = !opt_.unitary.empty();
    if (use_unitary) {
      const ComplexMatrix u = load_matrix("unitary", opt_.unitary);
      const Mori b = basis_or_default("basis", opt_.basis, u.rows());
      const std::string method = opt_.method.empty() ? "closed" : opt_.method;
      doc_["method"] = method;
      if (method == "closed") {
        doc_["value"] = cgp_unitary(u, b, tol_);
      } else if (method == "distance") {
        doc_["value"] = cgp_from_distance(u, b, tol_);
      } else if (method == "kraus") {
        doc_["value"] = cgp_unital(KrausChannel::unitary(u), b, tol_);
      } else {
        throw InputError("usage", "cgp: unknown --method " + method);
      }
    } else {
      const KrausChannel t = load_channel(opt_.channel);
      const Mori b = basis_or_default("basis", opt_.basis, t.dim());
      Diagnostics diag;
      doc_["method"] = "kraus";
      doc_["value"] = cgp_unital(t, b, tol_, &diag);
      if (!diag.warnings.empty()) doc_["warnings"] = diag.warnings;
    }
    finish();
  }

  void estimate() {
    start("estimate-cgp");
    const std::uint64_t seed = resolve_seed();
    CgpEstimate est;
    if (!opt_.unitary.empty()) {
      const ComplexMatrix u = load_matrix("unitary", opt_.unitary);
      const Mori b = basis_or_default("basis", opt_.basis, u.rows());
      est = estimate_cgp(u, b, opt_.samples, seed, opt_.workers, tol_);
    } else {
      const KrausChannel t = load_channel(opt_.channel);
      const Mori b = basis_or_default("basis", opt_.basis, t.dim());
      if (!t.is_unital(tol_)) {
        doc_["warnings"] = {"channel is not unital; the closed form assumes unitality"};
      }
      est = estimate_cgp(t, b, opt_.samples, seed, opt_.workers);
    }
    doc_["value"] = est.mean;
    doc_["stderr"] = est.std_error;
    doc_["samples"] = est.samples;
    doc_["seed"] = est.seed;
    doc_["workers"] = est.workers;
    finish();
  }

  void coherence_cmd() {
    start("coherence");
    const ComplexMatrix rho = load_matrix("state", opt_.state);
    const Mori b = basis_or_default("basis", opt_.basis, rho.rows());
    const std::string method = opt_.method.empty() ? "definition" : opt_.method;
    doc_["method"] = method;
    if (method == "definition") {
      doc_["value"] = coherence(rho, b, tol_);
    } else if (method == "commutator") {
      doc_["value"] = coherence_commutator(rho, b, tol_);
    } else {
      throw InputError("usage", "coherence: unknown --method " + method);
    }
    finish();
  }

  void distance() {
    start("distance");
    const Mori a = load_mori("basis_a", opt_.basis_a);
    const Mori b = load_mori("basis_b", opt_.basis_b);
    const std::string method = opt_.method.empty() ? "closed" : opt_.method;
    doc_["method"] = method;
    if (method == "closed") {
      doc_["value"] = masa_distance(a, b);
    } else if (method == "superop") {
      doc_["value"] = masa_distance_superop(a, b, opt_.superop_cap);
    } else if (method == "commutator") {
      doc_["value"] = masa_distance_commutator(a, b);
    } else {
      throw InputError("usage", "distance: unknown --method " + method);
    }
    finish();
  }

  void overlap() {
    start("overlap");
    const Mori a = load_mori("basis_a", opt_.basis_a);
    const Mori b = load_mori("basis_b", opt_.basis_b);
    const OverlapMatrix o = overlap_matrix(a, b);
    doc_["value"] = {{"matrix", io::real_matrix_to_json(o.entries())},
                     {"squared_norm", o.squared_norm()},
                     {"abs_det", abs_det_overlap(o)}};
    finish();
  }

  void dfs() {
    start("dfs");
    const Mori a = load_mori("basis_a", opt_.basis_a);
    const Mori b = load_mori("basis_b", opt_.basis_b);
    doc_["value"] = dfs_distance(a, b);
    finish();
  }

  void phi() {
    start("phi");
    const ComplexMatrix u = load_matrix("unitary", opt_.unitary);
    const Mori b = basis_or_default("basis", opt_.basis, u.rows());
    doc_["value"] = finite_or_string(phi_measure(u, b, tol_));
    doc_["cgp_tilde"] = cgp_tilde(u, b, tol_);
    finish();
  }

  void susceptibility() {
    Loaded file = load(opt_.path);
    io::PathSpec spec = io::path_from_json(file.doc, tol_);
    const double h = opt_.h.value_or(spec.h);
    const double step = opt_.step.value_or(spec.step);
    const SweepResult result = sweep(spec.path, h, step, opt_.workers);
    out_ << sweep_to_csv(result, spec.path.dim());
  }

  void qubit_distance_cmd() {
    start("qubit distance");
    const BlochVector n = bloch(opt_.n);
    const BlochVector m = bloch(opt_.m);
    doc_["inputs"] = {{"n", opt_.n}, {"m", opt_.m}};
    doc_["value"] = qubit_distance(n, m);
    doc_["psi"] = bloch_angle(n, m);
    finish();
  }

  void qubit_cgp_cmd() {
    start("qubit cgp");
    doc_["inputs"] = {{"theta", opt_.theta}};
    doc_["value"] = qubit_cgp(opt_.theta);
    finish();
  }

  void qubit_dfs_cmd() {
    start("qubit dfs");
    doc_["inputs"] = {{"psi", opt_.psi}};
    doc_["value"] = qubit_dfs(opt_.psi);
    finish();
  }

  void haar() {
    start("haar");
    const std::uint64_t seed = resolve_seed();
    doc_["inputs"] = {{"dim", opt_.dim}};
    doc_["value"] = io::matrix_to_json(haar_unitary(opt_.dim, seed));
    doc_["seed"] = seed;
    finish();
  }

  void fourier() {
    start("fourier");
    doc_["inputs"] = {{"dim", opt_.dim}};
    doc_["value"] = io::matrix_to_json(fourier_unitary(opt_.dim));
    finish();
  }

 private:
  void start(const std::string& command) {
    doc_ = Json::object();
    doc_["command"] = command;
    doc_["inputs"] = Json::object();
  }

  void finish() {
    doc_["tolerances"] = {{"structural", tol_.structural}, {"equality", tol_.equality}};
    out_ << io::dump(doc_);
  }

  ComplexMatrix load_matrix(const std::string& key, const std::string& path) {
    Loaded file = load(path);
    doc_["inputs"][key] = file.digest;
    return io::matrix_from_json(file.doc);
  }

  KrausChannel load_channel(const std::string& path) {
    Loaded file = load(path);
    doc_["inputs"]["channel"] = file.digest;
    return io::channel_from_json(file.doc);
  }

  Mori load_mori(const std::string& key, const std::string& path) {
    return mori_from_frame(load_matrix(key, path), tol_);
  }

  Mori basis_or_default(const std::string& key, const std::string& path,
                        Eigen::Index dim) {
    if (path.empty()) {
      doc_["inputs"][key] = "computational";
      return computational_mori(static_cast<std::size_t>(dim));
    }
    Mori b = load_mori(key, path);
    if (static_cast<Eigen::Index>(b.dim()) != dim) {
      throw ShapeError("basis dimension does not match the operator");
    }
    return b;
  }

  BlochVector bloch(const std::vector<double>& v) const {
    return BlochVector(v.at(0), v.at(1), v.at(2), tol_);
  }

  std::uint64_t resolve_seed() const {
    if (opt_.seed) return *opt_.seed;
    if (const char* env = std::getenv("CGPLAB_SEED")) {
      try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used == std::string(env).size()) return v;
      } catch (const std::exception&) {
      }
      throw InputError("usage", "CGPLAB_SEED is not an unsigned integer");
    }
    return 0;
  }

  const Options& opt_;
  std::ostream& out_;
  Tolerance tol_;
  Json doc_;
};

void write_error(std::ostream& out, const std::string& command,
                 const std::string& kind, const std::string& message) {
  Json doc{{"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
  out << io::dump(doc);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Coherence generating power and MASA geometry toolkit", "cgplab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol-structural", opt.tol_structural,
                 "Tolerance for unitarity/hermiticity checks")
      ->capture_default_str();
  app.add_option("--tol-equality", opt.tol_equality, "Tolerance for value comparisons")
      ->capture_default_str();

  auto add_operator = [&](CLI::App* sub) {
    auto* u = sub->add_option("--unitary", opt.unitary, "Unitary matrix JSON");
    auto* c = sub->add_option("--channel", opt.channel, "Kraus channel JSON");
    u->excludes(c);
    sub->add_option("--basis", opt.basis, "Basis frame JSON (default: computational)");
    return std::make_pair(u, c);
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--basis-a", opt.basis_a, "First basis frame JSON")->required();
    sub->add_option("--basis-b", opt.basis_b, "Second basis frame JSON")->required();
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "RNG seed (fallback: $CGPLAB_SEED, then 0)");
  };

  auto* cgp_cmd = app.add_subcommand("cgp", "Closed-form coherence generating power");
  {
    auto [u, c] = add_operator(cgp_cmd);
    cgp_cmd->add_option("--method", opt.method, "closed|distance|kraus (unitary only)");
    cgp_cmd->callback([u = u, c = c] {
      if (u->count() + c->count() != 1) {
        throw CLI::ValidationError("exactly one of --unitary or --channel is required");
      }
    });
  }

  auto* est_cmd = app.add_subcommand("estimate-cgp", "Monte Carlo estimate of the CGP");
  {
    auto [u, c] = add_operator(est_cmd);
    est_cmd->add_option("--samples", opt.samples, "Number of samples")
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    add_seed(est_cmd);
    est_cmd->add_option("--workers", opt.workers, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    est_cmd->callback([u = u, c = c] {
      if (u->count() + c->count() != 1) {
        throw CLI::ValidationError("exactly one of --unitary or --channel is required");
      }
    });
  }

  auto* coh_cmd = app.add_subcommand("coherence", "B-coherence of a state");
  coh_cmd->add_option("--state", opt.state, "Density matrix JSON")->required();
  coh_cmd->add_option("--basis", opt.basis, "Basis frame JSON (default: computational)");
  coh_cmd->add_option("--method", opt.method, "definition|commutator");

  auto* dist_cmd = app.add_subcommand("distance", "Hilbert-Schmidt distance between MASAs");
  add_pair(dist_cmd);
  dist_cmd->add_option("--method", opt.method, "closed|superop|commutator")
      ->check(CLI::IsMember({"closed", "superop", "commutator"}));
  dist_cmd->add_option("--superop-cap", opt.superop_cap,
                       "Largest dimension for superoperator matrices")
      ->capture_default_str();

  auto* ov_cmd = app.add_subcommand("overlap", "Overlap matrix of two bases");
  add_pair(ov_cmd);

  auto* dfs_cmd = app.add_subcommand("dfs", "Fubini-Study distance between MASAs");
  add_pair(dfs_cmd);

  auto* phi_cmd = app.add_subcommand("phi", "Additive CGP measure of a unitary");
  phi_cmd->add_option("--unitary", opt.unitary, "Unitary matrix JSON")->required();
  phi_cmd->add_option("--basis", opt.basis, "Basis frame JSON (default: computational)");

  auto* sus_cmd = app.add_subcommand("susceptibility",
                                     "Fidelity susceptibilities along a Hamiltonian path");
  sus_cmd->add_option("--path", opt.path, "Path JSON")->required();
  sus_cmd->add_option("--half-step", opt.h, "Finite-difference half step (overrides file)");
  sus_cmd->add_option("--step", opt.step, "Grid spacing (overrides file)");
  sus_cmd->add_option("--workers", opt.workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  auto* qubit_cmd = app.add_subcommand("qubit", "Closed-form single-qubit quantities");
  qubit_cmd->require_subcommand(1);
  auto* q_dist = qubit_cmd->add_subcommand("distance", "MASA distance of two Bloch axes");
  q_dist->add_option("--n", opt.n, "Bloch vector x,y,z")->required()->expected(3)->delimiter(',');
  q_dist->add_option("--m", opt.m, "Bloch vector x,y,z")->required()->expected(3)->delimiter(',');
  auto* q_cgp = qubit_cmd->add_subcommand("cgp", "CGP of a rotation by theta");
  q_cgp->add_option("--theta", opt.theta, "Rotation angle")->required();
  auto* q_dfs = qubit_cmd->add_subcommand("dfs", "Fubini-Study distance at Bloch angle psi");
  q_dfs->add_option("--psi", opt.psi, "Bloch angle in [0, pi]")->required();

  auto* haar_cmd = app.add_subcommand("haar", "Haar-random unitary");
  haar_cmd->add_option("--dim", opt.dim, "Dimension")->required()->check(CLI::PositiveNumber);
  add_seed(haar_cmd);

  auto* fourier_cmd = app.add_subcommand("fourier", "Discrete Fourier unitary");
  fourier_cmd->add_option("--dim", opt.dim, "Dimension")->required()->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cgplab: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  std::string command;
  for (const CLI::App* sub : app.get_subcommands()) command = sub->get_name();

  try {
    Runner runner(opt, out);
    if (cgp_cmd->parsed()) {
      runner.cgp();
    } else if (est_cmd->parsed()) {
      runner.estimate();
    } else if (coh_cmd->parsed()) {
      runner.coherence_cmd();
    } else if (dist_cmd->parsed()) {
      runner.distance();
    } else if (ov_cmd->parsed()) {
      runner.overlap();
    } else if (dfs_cmd->parsed()) {
      runner.dfs();
    } else if (phi_cmd->parsed()) {
      runner.phi();
    } else if (sus_cmd->parsed()) {
      runner.susceptibility();
    } else if (q_dist->parsed()) {
      runner.qubit_distance_cmd();
    } else if (q_cgp->parsed()) {
      runner.qubit_cgp_cmd();
    } else if (q_dfs->parsed()) {
      runner.qubit_dfs_cmd();
    } else if (haar_cmd->parsed()) {
      runner.haar();
    } else if (fourier_cmd->parsed()) {
      runner.fourier();
    }
  } catch (const InputError& e) {
    write_error(out, command, e.kind(), e.what());
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    write_error(out, command, "internal", e.what());
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace cgplab::cli
