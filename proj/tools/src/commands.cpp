// Copyright 2026 The lfising Authors
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

#include "lfising_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lfising/errors.hpp"
#include "lfising/lattice.hpp"
#include "lfising/lightfront.hpp"
#include "lfising/resources.hpp"
#include "lfising/verify.hpp"
#include "lfising_cli/table.hpp"

namespace lfising::cli {
namespace {

struct RunConfig {
  int n_sites = 8;
  double spacing = 1.0;
  std::optional<double> coupling;
  std::optional<double> mass;
  std::string frame;  // empty means "both" where that makes sense
  std::string sector = "antiperiodic";
  std::string lambda_range;
  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = VerifyOptions{}.seed;
  int q = 2;
  double perturb_omega = 0.0;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Sector parse_sector(const std::string& s) { return s == "periodic" ? Sector::Periodic : Sector::Antiperiodic; }

// With --lambda the mass follows from m = (1 - lambda)/a; with --mass the coupling is
// 1 - m a. Only the direction a command actually needs is evaluated.
Mass resolve_mass(const RunConfig& cfg) {
  if (cfg.mass) return Mass(*cfg.mass);
  if (cfg.coupling) return mass_from_coupling(*cfg.coupling, cfg.spacing);
  throw InputError("one of --lambda or --mass is required");
}

double resolve_coupling(const RunConfig& cfg) {
  if (cfg.coupling) return *cfg.coupling;
  if (cfg.mass) {
    const double lambda = 1.0 - *cfg.mass * cfg.spacing;
    if (lambda < 0.0) throw InputError("--mass exceeds 1/a, which would need a negative coupling");
    return lambda;
  }
  throw InputError("one of --lambda or --mass is required");
}

ChainSpec chain(const RunConfig& cfg, double coupling) { return ChainSpec(cfg.n_sites, cfg.spacing, coupling); }

Table cmd_spectrum(const RunConfig& cfg) {
  if (cfg.frame == "lf") {
    const Mass m = resolve_mass(cfg);
    // The DLCQ grid depends only on N and a.
    const LFSpectrum spectrum = lf_spectrum(chain(cfg, 1.0), m);
    Table t{{"k_plus", "energy"}, {}};
    for (const auto& row : spectrum.rows) t.add_row({row.k_plus, row.energy});
    return t;
  }
  const double coupling = resolve_coupling(cfg);
  const MomentumGrid grid = make_if_grid(chain(cfg, coupling), parse_sector(cfg.sector));
  Table t{{"k", "omega", "excitation"}, {}};
  for (double k : grid.momenta()) {
    const double w = cfg.mass ? continuum_dispersion(k, Mass(*cfg.mass)) : lattice_dispersion(k, coupling, cfg.spacing);
    t.add_row({k, w, 2.0 * w});
  }
  return t;
}

void append_report(Table& t, const char* frame, const ResourceReport& report) {
  for (const auto& b : report.per_block) t.add_row({std::string(frame), std::string("block"), b.k, b.entanglement_entropy, b.m2});
  t.add_row({std::string(frame), std::string("total"), std::monostate{}, report.total_entropy, report.total_m2});
}

Table cmd_resources(const RunConfig& cfg) {
  const Mass m = resolve_mass(cfg);
  const ChainSpec spec = chain(cfg, 1.0);  // grids only need N and a
  Table t{{"frame", "row", "k", "entanglement_entropy", "m2"}, {}};
  if (cfg.frame != "lf") {
    // Unpaired self-conjugate modes sit in a product state and carry no resources.
    append_report(t, "if", if_resource_report(make_if_grid(spec, parse_sector(cfg.sector)), m, UnpairedModes::Exclude));
  }
  if (cfg.frame != "if") append_report(t, "lf", lf_resource_report(spec, m));
  return t;
}

std::vector<double> parse_range(const std::string& text) {
  double lo = 0, hi = 0;
  long long steps = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> lo >> c1 >> hi >> c2 >> steps) || c1 != ':' || c2 != ':' || !in.eof()) {
    throw InputError("--lambda-range must look like lo:hi:steps");
  }
  if (steps < 1 || steps > 100000) throw InputError("--lambda-range steps must be in [1, 100000]");
  if (steps == 1 && lo != hi) throw InputError("--lambda-range with one step needs lo == hi");
  std::vector<double> values;
  for (long long i = 0; i < steps; ++i) values.push_back(steps == 1 ? lo : lo + (hi - lo) * double(i) / double(steps - 1));
  return values;
}

Table cmd_sweep(const RunConfig& cfg) {
  if (cfg.lambda_range.empty()) throw InputError("sweep requires --lambda-range lo:hi:steps");
  const std::vector<double> couplings = parse_range(cfg.lambda_range);
  Table t{{"lambda", "mass", "total_m2", "total_entropy"}, {}};
  for (const auto& row : magic_sweep(chain(cfg, 1.0), couplings)) {
    t.add_row({row.coupling, row.mass, row.total_m2, row.total_entropy});
  }
  return t;
}

Table cmd_massless(const RunConfig& cfg) {
  if ((cfg.mass && *cfg.mass != 0.0) || (cfg.coupling && *cfg.coupling != 1.0)) {
    throw InputError("massless runs at the critical point; drop --mass/--lambda or pass --mass 0");
  }
  const ChainSpec spec = chain(cfg, 1.0);
  const MomentumGrid grid = make_if_grid(spec, parse_sector(cfg.sector));
  const Mass zero(0.0);
  Table t{{"frame", "row", "k", "energy", "entanglement_entropy", "m2"}, {}};
  const std::monostate none;
  for (double k : grid.momenta()) t.add_row({std::string("if"), std::string("mode"), k, if_excitation_energy(k, zero), none, none});
  const ResourceReport report = if_resource_report(grid, zero, UnpairedModes::Exclude);
  for (const auto& b : report.per_block) {
    t.add_row({std::string("if"), std::string("block"), b.k, none, b.entanglement_entropy, b.m2});
  }
  t.add_row({std::string("if"), std::string("total"), none, none, report.total_entropy, report.total_m2});
  const auto lf_rows = massless_lf_spectrum(grid);
  for (const auto& row : lf_rows) t.add_row({std::string("lf"), std::string("mode"), row.k1, row.energy, none, none});
  // Every LF eigenstate is a single occupation-number product state.
  t.add_row({std::string("lf"), std::string("total"), none, none, 0.0, 0.0});
  return t;
}

Table cmd_verify(const RunConfig& cfg, bool& all_passed) {
  VerifyOptions options;
  options.seed = cfg.seed;
  options.q = cfg.q;
  options.omega_perturbation = cfg.perturb_omega;
  Table t{{"module", "check", "status", "detail"}, {}};
  all_passed = true;
  for (const auto& r : run_invariant_suite(options)) {
    all_passed = all_passed && r.passed;
    t.add_row({r.module, r.name, std::string(r.passed ? "PASS" : "FAIL"), r.detail});
  }
  return t;
}

void add_chain_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n_sites, "Number of sites (even, >= 4)")->capture_default_str();
  sub->add_option("--a", cfg.spacing, "Lattice spacing")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "Output format")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out_path, "Write the table to PATH instead of stdout");
}

void add_coupling_options(CLI::App* sub, RunConfig& cfg) {
  auto* lambda = sub->add_option("--lambda", cfg.coupling, "Transverse field (m = (1 - lambda)/a)");
  auto* mass = sub->add_option("--mass", cfg.mass, "Fermion mass (lambda = 1 - m a)");
  lambda->excludes(mass);
}

void add_sector_option(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--sector", cfg.sector, "Instant-form boundary sector")
      ->capture_default_str()
      ->check(CLI::IsMember({"periodic", "antiperiodic"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Instant-form and light-front transverse-field Ising toolkit"};
  app.require_subcommand(1);

  auto* spectrum = app.add_subcommand(
      "spectrum",
      "Single-particle spectrum. IF columns: k, omega, excitation (= 2 omega); omega is the lattice "
      "dispersion with --lambda and sqrt(m^2 + k^2) with --mass. LF columns: k_plus, energy (= m^2/2k+).");
  add_chain_options(spectrum, cfg);
  add_coupling_options(spectrum, cfg);
  add_sector_option(spectrum, cfg);
  spectrum->add_option("--frame", cfg.frame, "Frame")->check(CLI::IsMember({"if", "lf"}));

  auto* resources = app.add_subcommand(
      "resources", "Entanglement entropy and M2 magic per block plus totals (columns: frame, row, k, "
                   "entanglement_entropy, m2). Both frames unless --frame is given.");
  add_chain_options(resources, cfg);
  add_coupling_options(resources, cfg);
  add_sector_option(resources, cfg);
  resources->add_option("--frame", cfg.frame, "Restrict to one frame")->check(CLI::IsMember({"if", "lf"}));

  auto* sweep = app.add_subcommand("sweep", "IF magic and entropy across couplings (columns: lambda, mass, total_m2, total_entropy)");
  add_chain_options(sweep, cfg);
  sweep->add_option("--lambda-range", cfg.lambda_range, "lo:hi:steps with 0 <= lo, hi <= 1")->required();

  auto* massless = app.add_subcommand(
      "massless", "Massless IF and LF spectra side by side with resource totals (columns: frame, row, k, "
                  "energy, entanglement_entropy, m2)");
  add_chain_options(massless, cfg);
  add_coupling_options(massless, cfg);
  add_sector_option(massless, cfg);

  auto* verify = app.add_subcommand("verify", "Run the invariant suite at N = 4, 6, 8 (exit 1 if any check fails)");
  verify->add_option("--format", cfg.format, "Output format")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", cfg.out_path, "Write the report to PATH instead of stdout");
  verify->add_option("--seed", cfg.seed, "Seed for sampled momenta and angles")->capture_default_str();
  verify->add_option("--q", cfg.q, "Renyi index for the SRE checks")->capture_default_str()->check(CLI::Range(2, 8));
  verify->add_option("--perturb-omega", cfg.perturb_omega)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const Format format = cfg.format == "json" ? Format::Json : Format::Csv;
  Table table;
  bool passed = true;
  try {
    if (spectrum->parsed()) table = cmd_spectrum(cfg);
    else if (resources->parsed()) table = cmd_resources(cfg);
    else if (sweep->parsed()) table = cmd_sweep(cfg);
    else if (massless->parsed()) table = cmd_massless(cfg);
    else table = cmd_verify(cfg, passed);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {  // DomainError and friends
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::length_error& e) {  // CapacityError
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (cfg.out_path.empty()) {
    write_table(out, table, format);
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << " for writing\n";
      return kInputError;
    }
    write_table(file, table, format);
  }
  return passed ? kOk : kCheckFailed;
}

}  // namespace lfising::cli
