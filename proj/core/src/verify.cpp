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

#include "lfising/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "lfising/bogoliubov.hpp"
#include "lfising/errors.hpp"
#include "lfising/exactdiag.hpp"
#include "lfising/lattice.hpp"
#include "lfising/lightfront.hpp"
#include "lfising/resources.hpp"

namespace lfising {
namespace {

using std::numbers::pi;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

Outcome within(double worst, double tol, const std::string& what = "max deviation") {
  return {worst <= tol, what + " " + fmt(worst) + " (tol " + fmt(tol) + ")"};
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options), rng_(options.seed) {}

  void add(std::string module, std::string name, const std::function<Outcome()>& body) {
    CheckResult result{std::move(module), std::move(name), false, ""};
    try {
      const Outcome o = body();
      result.passed = o.passed;
      result.detail = o.detail;
    } catch (const std::exception& e) {
      result.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(result));
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double omega(double k, double lambda, double a) const {
    return lattice_dispersion(k, lambda, a) + options_.omega_perturbation;
  }
  const VerifyOptions& options() const { return options_; }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  VerifyOptions options_;
  std::mt19937_64 rng_;
  std::vector<CheckResult> results_;
};

constexpr double kCouplings[] = {0.0, 0.3, 0.7, 1.0, 1.5, 3.0};

// All 2^N eigenvalues of the quadratic chain from its Bogoliubov blocks: each paired
// block contributes one of {-2w, 0, 0, +2w}.
std::vector<double> block_spectrum(const std::vector<double>& omegas) {
  std::vector<double> levels{0.0};
  for (double w : omegas) {
    std::vector<double> next;
    next.reserve(levels.size() * 4);
    for (double e : levels) {
      for (double shift : {-2.0 * w, 0.0, 0.0, 2.0 * w}) next.push_back(e + shift);
    }
    levels = std::move(next);
  }
  std::sort(levels.begin(), levels.end());
  return levels;
}

double max_sorted_gap(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// Per-block q-th stabilizer Renyi entropy of cos|00> - i sin|11>.
double block_mq(double phi, int q) {
  const double c = std::abs(std::cos(2.0 * phi));
  const double s = std::abs(std::sin(2.0 * phi));
  return std::log((1.0 + std::pow(c, 2 * q) + std::pow(s, 2 * q)) / 2.0) / (1.0 - q);
}

void lattice_checks(Suite& suite) {
  const auto& sizes = suite.options().sizes;
  suite.add("lattice", "grid membership and counts", [&] {
    double worst = 0.0;
    bool ok = true;
    for (int n : sizes) {
      for (double a : {1.0, 0.5}) {
        const ChainSpec spec(n, a, 0.5);
        const auto per = make_if_grid(spec, Sector::Periodic).momenta();
        const auto anti = make_if_grid(spec, Sector::Antiperiodic).momenta();
        const auto lf = make_lf_grid(spec).momenta();
        ok = ok && per.size() == std::size_t(n) && anti.size() == std::size_t(n) && lf.size() == std::size_t(n);
        for (int j = 0; j < n; ++j) {
          const int m = j - n / 2;
          worst = std::max(worst, std::abs(per[j] - 2 * pi * m / (n * a)));
          worst = std::max(worst, std::abs(anti[j] - pi * (2 * m + 1) / (n * a)));
          worst = std::max(worst, std::abs(lf[j] - 2 * pi * (j + 1) / (n * a)));
        }
        ok = ok && std::is_sorted(per.begin(), per.end()) && std::is_sorted(anti.begin(), anti.end()) &&
             std::adjacent_find(per.begin(), per.end()) == per.end();
      }
    }
    Outcome o = within(worst, 1e-12);
    o.passed = o.passed && ok;
    return o;
  });
  suite.add("lattice", "antiperiodic grids fully paired", [&] {
    bool ok = true;
    for (int n : sizes) ok = ok && make_if_grid(ChainSpec(n, 1.0, 0.5), Sector::Antiperiodic).fully_paired();
    return Outcome{ok, ok ? "no self-conjugate momenta" : "found an unpaired momentum"};
  });
  suite.add("lattice", "periodic grids: exactly k=0 and k=-pi/a self-conjugate", [&] {
    bool ok = true;
    for (int n : sizes) {
      const auto grid = make_if_grid(ChainSpec(n, 1.0, 0.5), Sector::Periodic);
      std::vector<int> self;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid.is_self_conjugate(i)) self.push_back(grid.numerators()[i]);
      }
      ok = ok && self == std::vector<int>{-n, 0};
    }
    return Outcome{ok, ok ? "two self-conjugate entries per grid" : "unexpected self-conjugate set"};
  });
  suite.add("lattice", "omega(k) = omega(-k)", [&] {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double k = suite.uniform(-pi, pi), lambda = suite.uniform(0.0, 3.0);
      worst = std::max(worst, std::abs(lattice_dispersion(k, lambda, 1.0) - lattice_dispersion(-k, lambda, 1.0)));
    }
    return within(worst, 0.0, "max asymmetry");
  });
  suite.add("lattice", "|lambda-1| <= omega <= lambda+1 with extrema at 0 and pi/a", [&] {
    bool ok = true;
    for (int i = 0; i < 200; ++i) {
      const double k = suite.uniform(-pi, pi), lambda = suite.uniform(0.0, 3.0);
      const double w = lattice_dispersion(k, lambda, 1.0);
      ok = ok && w >= std::abs(lambda - 1.0) - 1e-14 && w <= lambda + 1.0 + 1e-14;
      ok = ok && std::abs(lattice_dispersion(0.0, lambda, 1.0) - std::abs(lambda - 1.0)) < 1e-14;
      ok = ok && std::abs(lattice_dispersion(pi, lambda, 1.0) - (lambda + 1.0)) < 1e-14;
    }
    return Outcome{ok, ok ? "bounds hold on 200 samples" : "bound violated"};
  });
  suite.add("lattice", "critical identity omega = 2|sin(ka/2)| at lambda = 1", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double a = suite.uniform(0.2, 2.0);
      const double k = suite.uniform(-pi / a, pi / a);
      worst = std::max(worst, std::abs(lattice_dispersion(k, 1.0, a) - 2.0 * std::abs(std::sin(k * a / 2))));
    }
    return within(worst, 1e-12);
  });
  suite.add("lattice", "small-k continuum limit of omega", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double a = suite.uniform(0.5, 2.0);
      const double k = suite.uniform(1e-6, 1e-3) / a;
      const double gap = suite.uniform(0.0, 1e-3);
      const double lattice = lattice_dispersion(k, 1.0 - gap, a) / a;
      const double continuum = continuum_dispersion(k, Mass(gap / a));
      worst = std::max(worst, std::abs(lattice / continuum - 1.0));
    }
    return within(worst, 1e-3, "max |ratio - 1|");
  });
}

void exactdiag_checks(Suite& suite) {
  const auto& sizes = suite.options().sizes;
  suite.add("exactdiag", "canonical anticommutation relations (N <= 6)", [&] {
    double worst = 0.0;
    for (int n = 2; n <= 6; ++n) {
      std::vector<DenseOperator> c;
      for (int j = 1; j <= n; ++j) c.push_back(jw_operator(j, n));
      const auto id = DenseOperator::identity(n).matrix();
      for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) {
          const auto& cj = c[j].matrix();
          const auto& cl = c[l].matrix();
          const Eigen::MatrixXcd mixed = cj * cl.adjoint() + cl.adjoint() * cj - (j == l ? id : 0.0 * id);
          const Eigen::MatrixXcd same = cj * cl + cl * cj;
          worst = std::max({worst, mixed.cwiseAbs().maxCoeff(), same.cwiseAbs().maxCoeff()});
        }
      }
    }
    return within(worst, 1e-14);
  });
  suite.add("exactdiag", "Hamiltonians are Hermitian", [&] {
    double worst = 0.0;
    for (int n : sizes) {
      const ChainSpec spec(n, 1.0, 0.7);
      worst = std::max(worst, build_spin_hamiltonian(spec, true).hermiticity_residue());
      for (auto bc : {Boundary::Open, Boundary::Periodic, Boundary::Antiperiodic}) {
        worst = std::max(worst, build_fermion_hamiltonian(spec, bc).hermiticity_residue());
      }
    }
    return within(worst, 1e-12);
  });
  suite.add("exactdiag", "dense APBC ground energy = -sum_{k>0} 2 omega_k", [&] {
    double worst = 0.0;
    for (int n : sizes) {
      for (double lambda : kCouplings) {
        const ChainSpec spec(n, 1.0, lambda);
        const double dense = ground_state(build_fermion_hamiltonian(spec, Boundary::Antiperiodic)).energy;
        double analytic = 0.0;
        const auto grid = make_if_grid(spec, Sector::Antiperiodic);
        for (int p : grid.positive_numerators()) analytic -= 2.0 * suite.omega(grid.to_momentum(p), lambda, 1.0);
        worst = std::max(worst, std::abs(dense - analytic) / std::abs(analytic));
      }
    }
    return within(worst, 1e-10, "max relative deviation");
  });
  suite.add("exactdiag", "full APBC spectrum = Bogoliubov block combinatorics (N = 4, 6)", [&] {
    double worst = 0.0;
    for (int n : sizes) {
      if (n > 6) continue;
      for (double lambda : kCouplings) {
        const ChainSpec spec(n, 1.0, lambda);
        const auto grid = make_if_grid(spec, Sector::Antiperiodic);
        std::vector<double> omegas;
        for (int p : grid.positive_numerators()) omegas.push_back(suite.omega(grid.to_momentum(p), lambda, 1.0));
        worst = std::max(worst, max_sorted_gap(eigenvalues(build_fermion_hamiltonian(spec, Boundary::Antiperiodic)),
                                               block_spectrum(omegas)));
      }
    }
    return within(worst, 1e-9);
  });
  suite.add("exactdiag", "closed spin chain even sector = half the APBC fermion even sector", [&] {
    double worst = 0.0;
    for (int n : sizes) {
      const ChainSpec spec(n, 1.0, 0.5);
      auto spin = parity_sector_eigenvalues(build_spin_hamiltonian(spec, true), true);
      auto fermion = parity_sector_eigenvalues(build_fermion_hamiltonian(spec, Boundary::Antiperiodic), true);
      for (double& e : fermion) e *= 0.5;
      worst = std::max(worst, max_sorted_gap(spin, fermion));
    }
    return within(worst, 1e-9);
  });
  suite.add("exactdiag", "brute-force SRE vanishes on stabilizer states", [&] {
    const int q = suite.options().q;
    double worst = 0.0;
    const double r = 1.0 / std::sqrt(2.0);
    const std::vector<Eigen::Vector2cd> singles = {
        Eigen::Vector2cd(1, 0), Eigen::Vector2cd(0, 1), Eigen::Vector2cd(r, r),
        Eigen::Vector2cd(r, -r), Eigen::Vector2cd(r, Complex(0, r)), Eigen::Vector2cd(r, Complex(0, -r))};
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 1 + trial % 5;
      StateVector psi(1, singles[static_cast<int>(suite.uniform(0, 6)) % 6]);
      for (int i = 1; i < n; ++i) psi = kron(psi, StateVector(1, singles[static_cast<int>(suite.uniform(0, 6)) % 6]));
      worst = std::max(worst, std::abs(brute_force_sre(psi, q)));
    }
    for (int n = 2; n <= 5; ++n) {
      Eigen::VectorXcd ghz = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
      ghz(0) = r;
      ghz(ghz.size() - 1) = r;
      worst = std::max(worst, std::abs(brute_force_sre(StateVector(n, ghz), q)));
    }
    Eigen::VectorXcd bell(4);
    bell << r, 0, 0, Complex(0, -r);
    worst = std::max(worst, std::abs(brute_force_sre(StateVector(2, bell), q)));
    return within(worst, 1e-10);
  });
  suite.add("exactdiag", "brute-force SRE invariant under qubit permutations", [&] {
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const int n = 3 + trial % 3;
      Eigen::VectorXcd v(Eigen::Index{1} << n);
      for (auto& x : v) x = Complex(suite.uniform(-1, 1), suite.uniform(-1, 1));
      v.normalize();
      const StateVector psi(n, v);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::rotate(perm.begin(), perm.begin() + 1 + trial % (n - 1), perm.end());
      worst = std::max(worst, std::abs(brute_force_sre(psi, suite.options().q) -
                                       brute_force_sre(permute_qubits(psi, perm), suite.options().q)));
    }
    return within(worst, 1e-10);
  });
}

void bogoliubov_checks(Suite& suite) {
  suite.add("bogoliubov", "Bogoliubov rotation diagonalizes the block to {-2w, 0, 0, 2w}", [&] {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double k = suite.uniform(1e-3, pi - 1e-3), lambda = suite.uniform(0.0, 3.0);
      const double theta = bogoliubov_angle_lattice(k, lambda, 1.0);
      const auto u = bogoliubov_rotation(theta).matrix();
      const Eigen::MatrixXcd d = u.adjoint() * block_hamiltonian(k, lambda, 1.0).matrix() * u;
      const double w = suite.omega(k, lambda, 1.0);
      Eigen::Vector4d expected(-2 * w, 0, 0, 2 * w);
      Eigen::MatrixXcd residue = d;
      for (int j = 0; j < 4; ++j) residue(j, j) -= expected(j);
      worst = std::max(worst, residue.cwiseAbs().maxCoeff());
    }
    return within(worst, 1e-10);
  });
  suite.add("bogoliubov", "cos 2theta * omega = lambda - cos ka, sin 2theta * omega = sin ka", [&] {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double k = suite.uniform(1e-3, pi - 1e-3), lambda = suite.uniform(0.0, 3.0);
      const double theta = bogoliubov_angle_lattice(k, lambda, 1.0);
      const double w = suite.omega(k, lambda, 1.0);
      worst = std::max({worst, std::abs(std::cos(2 * theta) * w - (lambda - std::cos(k))),
                        std::abs(std::sin(2 * theta) * w - std::sin(k))});
    }
    return within(worst, 1e-12);
  });
  suite.add("bogoliubov", "lattice angle -> continuum angle as ka, 1-lambda -> 0", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double ka = suite.uniform(1e-6, 1e-3), gap = suite.uniform(1e-6, 1e-3);
      const double theta = bogoliubov_angle_lattice(ka, 1.0 - gap, 1.0);
      const double phi = bogoliubov_angle_continuum(ka, Mass(gap));
      worst = std::max(worst, std::abs(theta - phi) / phi);
    }
    return within(worst, 1e-3, "max relative difference");
  });
  suite.add("bogoliubov", "lattice angle complements the continuum angle: theta + phi -> pi/2", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double ka = suite.uniform(1e-6, 1e-3), gap = suite.uniform(1e-6, 1e-3);
      const double theta = bogoliubov_angle_lattice(ka, 1.0 - gap, 1.0);
      const double phi = bogoliubov_angle_continuum(ka, Mass(gap));
      worst = std::max({worst, std::abs(theta + phi - pi / 2) / (pi / 2),
                        std::abs(std::abs(std::sin(2 * theta)) - std::sin(2 * phi))});
    }
    return within(worst, 1e-3);
  });
  suite.add("bogoliubov", "quasiparticle annihilators kill the block ground state", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double k = suite.uniform(1e-3, pi - 1e-3), lambda = suite.uniform(0.0, 3.0);
      const double theta = bogoliubov_angle_lattice(k, lambda, 1.0);
      const auto [eta_plus, eta_minus] = quasiparticle_operators(theta);
      const auto v = block_ground_state(theta).to_state_vector().amplitudes();
      worst = std::max({worst, (eta_plus.matrix() * v).cwiseAbs().maxCoeff(),
                        (eta_minus.matrix() * v).cwiseAbs().maxCoeff()});
    }
    return within(worst, 1e-12);
  });
  suite.add("bogoliubov", "one quasiparticle raises the block energy by 2 omega", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double k = suite.uniform(1e-3, pi - 1e-3), lambda = suite.uniform(0.0, 3.0);
      const double theta = bogoliubov_angle_lattice(k, lambda, 1.0);
      const auto h = block_hamiltonian(k, lambda, 1.0);
      const auto [eta_plus, eta_minus] = quasiparticle_operators(theta);
      const auto vac = block_ground_state(theta).to_state_vector();
      const double e0 = expectation(vac, h);
      const double w = suite.omega(k, lambda, 1.0);
      for (const auto* eta : {&eta_plus, &eta_minus}) {
        Eigen::VectorXcd excited = eta->adjoint().matrix() * vac.amplitudes();
        const double e1 = expectation(StateVector(2, excited), h);
        worst = std::max(worst, std::abs(e1 - e0 - 2 * w));
      }
    }
    return within(worst, 1e-10);
  });
}

void lightfront_checks(Suite& suite) {
  const auto& sizes = suite.options().sizes;
  suite.add("lightfront", "mass shell (k0)^2 - (k1)^2 = m^2", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double k_plus = suite.uniform(0.5, 5.0);
      const Mass m(suite.uniform(0.0, 3.0));
      const ShellPoint s = mass_shell_check(k_plus, m);
      worst = std::max({worst, std::abs(s.k0 * s.k0 - s.k1 * s.k1 - m.value() * m.value()),
                        std::abs(s.k0 + s.k1 - k_plus), std::abs(s.k0 - s.k1 - s.k_minus)});
    }
    return within(worst, 1e-12);
  });
  suite.add("lightfront", "LF and IF energies describe the same shell point", [&] {
    double worst = 0.0;
    for (int n : sizes) {
      for (double mv : {0.25, 0.5, 1.0, 2.0}) {
        const Mass m(mv);
        for (double k_plus : make_lf_grid(ChainSpec(n, 1.0, 0.0)).momenta()) {
          const ShellPoint s = mass_shell_check(k_plus, m);
          worst = std::max(worst, std::abs(0.5 * (k_plus + mv * mv / k_plus) - continuum_dispersion(s.k1, m)));
        }
      }
    }
    return within(worst, 1e-12);
  });
  suite.add("lightfront", "LF eigenstates have zero entanglement across every mode cut", [&] {
    double worst = 0.0;
    for (int n : sizes) {
      std::vector<LFEigenstate> states{LFEigenstate::vacuum(n)};
      for (int mode = 0; mode < n; ++mode) states.push_back(LFEigenstate::single_particle(n, mode));
      for (const auto& state : states) {
        const StateVector psi = state.to_state_vector();
        for (int q = 0; q < n; ++q) {
          const int single[] = {q};
          worst = std::max(worst, entanglement_entropy(psi, single));
        }
        std::vector<int> half(n / 2);
        std::iota(half.begin(), half.end(), 0);
        worst = std::max(worst, entanglement_entropy(psi, half));
      }
    }
    return within(worst, 1e-12);
  });
  suite.add("lightfront", "massless LF spectrum = {2|k1| : k1 < 0}", [&] {
    bool ok = true;
    for (int n : sizes) {
      for (auto sector : {Sector::Periodic, Sector::Antiperiodic}) {
        const auto grid = make_if_grid(ChainSpec(n, 1.0, 1.0), sector);
        std::vector<double> expected;
        for (double k : grid.momenta()) {
          if (k < 0) expected.push_back(2.0 * std::abs(k));
        }
        std::vector<double> got;
        for (const auto& row : massless_lf_spectrum(grid)) got.push_back(row.energy);
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        ok = ok && got == expected;
      }
    }
    return Outcome{ok, ok ? "exact multiset equality" : "multisets differ"};
  });
}

void resources_checks(Suite& suite) {
  const auto& sizes = suite.options().sizes;
  suite.add("resources", "block Pauli table matches the explicit block vector", [&] {
    double worst = 0.0;
    bool ten_zero = true;
    for (int i = 0; i < 50; ++i) {
      const double phi = suite.uniform(1e-3, pi / 4 - 1e-3);
      IFGroundState one;
      one.blocks.push_back({1.0, {1.0, phi, 1.0, BlockFlavor::Continuum}, block_ground_state(phi)});
      const StateVector psi = assemble_momentum_state(one);
      const BlockPauliTable table = block_pauli_table(phi);
      int zeros = 0;
      for (int w = 0; w < 16; ++w) {
        const double brute = pauli_expectation(psi, PauliString(BlockPauliTable::word(w), QubitLayout::MomentumPairs));
        worst = std::max(worst, std::abs(std::abs(brute) - std::abs(table.values()[w])));
        if (std::abs(brute) < 1e-12) ++zeros;
      }
      ten_zero = ten_zero && zeros == 10;
    }
    Outcome o = within(worst, 1e-12, "max magnitude deviation");
    o.passed = o.passed && ten_zero;
    if (!ten_zero) o.detail += "; zero count != 10";
    return o;
  });
  suite.add("resources", "two printed forms of the per-block magic agree", [&] {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double phi = suite.uniform(0.0, pi / 4);
      const double c = std::cos(2 * phi), s = std::sin(2 * phi);
      worst = std::max(worst, std::abs(-std::log((1 + std::pow(c, 4) + std::pow(s, 4)) / 2) +
                                       std::log(1 - s * s * c * c)));
    }
    return within(worst, 1e-14);
  });
  suite.add("resources", "analytic M_q sum = brute-force SRE of the assembled state", [&] {
    const int q = suite.options().q;
    double worst = 0.0;
    for (int n : sizes) {
      if (n > 6) continue;
      for (double mv : {0.0, 0.5, 1.0, 2.0}) {
        const auto grid = make_if_grid(ChainSpec(n, 1.0, 1.0), Sector::Antiperiodic);
        const Mass m(mv);
        const IFGroundState gs = build_if_ground_state(grid, m);
        double analytic = 0.0;
        if (q == 2) {
          analytic = if_resource_report(grid, m).total_m2;
        } else {
          for (const auto& b : gs.blocks) analytic += block_mq(b.bogoliubov.angle, q);
        }
        worst = std::max(worst, std::abs(analytic - brute_force_sre(assemble_momentum_state(gs), q)));
      }
    }
    return within(worst, 1e-10);
  });
  suite.add("resources", "M2 contribution is non-negative and peaks at k = m", [&] {
    bool ok = true;
    double worst_peak = 0.0;
    for (double mv : {0.3, 1.0, 2.5}) {
      const double step = 1e-3;
      double best_k = 0.0, best = -1.0;
      for (double k = step; k < 10.0; k += step) {
        const double v = analytic_m2_contribution(k, Mass(mv));
        ok = ok && v >= 0.0;
        if (v > best) best = v, best_k = k;
      }
      worst_peak = std::max(worst_peak, std::abs(best_k - mv) / step);
    }
    Outcome o = within(worst_peak, 1.0, "peak offset in grid steps");
    o.passed = o.passed && ok;
    return o;
  });
  suite.add("resources", "IF magic > LF magic = 0 for m > 0; massless entropies", [&] {
    bool ok = true;
    for (int n : sizes) {
      const ChainSpec spec(n, 1.0, 0.5);
      const auto grid = make_if_grid(spec, Sector::Antiperiodic);
      for (double mv : {1e-3, 0.5, 1.0, 2.0, 10.0}) {
        const auto lf = lf_resource_report(spec, Mass(mv));
        ok = ok && if_resource_report(grid, Mass(mv)).total_m2 > lf.total_m2 && lf.total_m2 == 0.0;
      }
      const auto if0 = if_resource_report(grid, Mass(0.0));
      const auto lf0 = lf_resource_report(spec, Mass(0.0));
      ok = ok && std::abs(if0.total_m2) < 1e-12 && lf0.total_m2 == 0.0 && lf0.total_entropy == 0.0 &&
           std::abs(if0.total_entropy - n / 2 * std::log(2.0)) < 1e-12;
    }
    return Outcome{ok, ok ? "strict ordering and massless values hold" : "ordering violated"};
  });
  suite.add("resources", "0 <= pair entropy <= ln 2 with the bounds attained", [&] {
    bool ok = std::abs(pair_entanglement_entropy(0.0)) < 1e-15 &&
              std::abs(pair_entanglement_entropy(pi / 4) - std::log(2.0)) < 1e-15;
    for (int i = 0; i < 200; ++i) {
      const double s = pair_entanglement_entropy(suite.uniform(0.0, pi / 4));
      ok = ok && s >= 0.0 && s <= std::log(2.0) + 1e-15;
    }
    return Outcome{ok, ok ? "bounds hold" : "bound violated"};
  });
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const VerifyOptions& options) {
  if (options.q < 2) throw DomainError("run_invariant_suite: q must be >= 2");
  for (int n : options.sizes) {
    if (n < 4 || n % 2 || n > 10) throw DomainError("run_invariant_suite: sizes must be even in [4, 10]");
  }
  Suite suite(options);
  lattice_checks(suite);
  exactdiag_checks(suite);
  bogoliubov_checks(suite);
  lightfront_checks(suite);
  resources_checks(suite);
  return suite.take();
}

}  // namespace lfising
