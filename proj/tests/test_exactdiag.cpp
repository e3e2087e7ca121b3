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

#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "frozen_values.hpp"
#include "lfising/errors.hpp"
#include "lfising/exactdiag.hpp"
#include "lfising/lattice.hpp"
#include "test_util.hpp"

namespace lfising {
namespace {

using testutil::pi;

DenseOperator dagger(const DenseOperator& op) { return op.adjoint(); }

double max_entry(const DenseOperator& op) { return op.matrix().cwiseAbs().maxCoeff(); }

StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(Eigen::Index{1} << n);
  for (auto& x : v) x = Complex(g(rng), g(rng));
  v.normalize();
  return StateVector(n, v);
}

// The nearest-neighbour fermion chain with the printed site-space prefactors, built
// straight from annihilator matrices.
DenseOperator literal_fermion_chain(int n, double lambda) {
  std::vector<DenseOperator> c;
  for (int j = 1; j <= n; ++j) c.push_back(jw_operator(j, n));
  DenseOperator h = DenseOperator::zero(n);
  const DenseOperator id = DenseOperator::identity(n);
  for (int j = 0; j < n; ++j) h += Complex(lambda / 2) * (Complex(2) * (dagger(c[j]) * c[j]) - id);
  for (int j = 0; j + 1 < n; ++j) h -= Complex(0.5) * ((dagger(c[j]) - c[j]) * (dagger(c[j + 1]) + c[j + 1]));
  return h;
}

TEST(DenseOperator, ShapeChecks) {
  EXPECT_THROW(DenseOperator(2, Eigen::MatrixXcd::Zero(3, 3)), DomainError);
  EXPECT_THROW(DenseOperator(1, Eigen::MatrixXcd::Zero(2, 3)), DomainError);
  EXPECT_THROW(DenseOperator::identity(1) + DenseOperator::identity(2), DomainError);
  EXPECT_TRUE(DenseOperator::identity(3).is_hermitian());
}

TEST(StateVector, RequiresUnitNorm) {
  EXPECT_THROW(StateVector(1, Eigen::Vector2cd(1, 1)), DomainError);
  EXPECT_THROW(StateVector(2, Eigen::Vector2cd(1, 0)), DomainError);
  EXPECT_NO_THROW(StateVector(1, Eigen::Vector2cd(0, Complex(0, 1))));
  const auto b = StateVector::basis(3, 5);
  EXPECT_EQ(b.amplitudes()(5), Complex(1));
}

TEST(SpinHamiltonian, ZeroFieldOpenChainGround) {
  // three X X bonds all satisfied
  const auto h = build_spin_hamiltonian(ChainSpec(4, 1.0, 0.0), false);
  EXPECT_NEAR(ground_state(h).energy, -1.5, 1e-12);
  EXPECT_TRUE(h.is_hermitian());
}

TEST(SpinHamiltonian, FieldDominatedLimit) {
  const double lambda = 1e4;
  const auto gs = ground_state(build_spin_hamiltonian(ChainSpec(4, 1.0, lambda), true));
  EXPECT_NEAR(gs.energy / (-2.0 * lambda), 1.0, 1e-6);
  // all spins along the field: the fully occupied state
  EXPECT_NEAR(std::abs(gs.state.amplitudes()(15)), 1.0, 1e-6);
}

TEST(SpinHamiltonian, ClosedChainMatchesOracle) {
  const auto h = build_spin_hamiltonian(ChainSpec(8, 1.0, 0.5), true);
  EXPECT_NEAR(ground_state(h).energy, frozen::kSpinClosedGround_N8_L0p5, 1e-10);
  const auto fermion_even =
      parity_sector_eigenvalues(build_fermion_hamiltonian(ChainSpec(8, 1.0, 0.5), Boundary::Antiperiodic), true);
  EXPECT_NEAR(ground_state(h).energy, 0.5 * fermion_even.front(), 1e-10);
}

TEST(SpinHamiltonian, RejectsOversizedChains) {
  EXPECT_THROW(build_spin_hamiltonian(ChainSpec(16, 1.0, 0.5), true), CapacityError);
}

TEST(JwOperator, CanonicalAnticommutation) {
  for (auto string : {JwString::PauliZ, JwString::Parity}) {
    const int n = 6;
    std::vector<DenseOperator> c;
    for (int j = 1; j <= n; ++j) c.push_back(jw_operator(j, n, string));
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        const DenseOperator mixed = c[j] * dagger(c[l]) + dagger(c[l]) * c[j];
        const DenseOperator expected = j == l ? DenseOperator::identity(n) : DenseOperator::zero(n);
        EXPECT_LT(max_entry(mixed - expected), 1e-15);
        EXPECT_LT(max_entry(c[j] * c[l] + c[l] * c[j]), 1e-15);
      }
    }
  }
}

TEST(JwOperator, SiteRange) {
  EXPECT_THROW(jw_operator(0, 4), DomainError);
  EXPECT_THROW(jw_operator(5, 4), DomainError);
}

TEST(JwOperator, StringsDifferByAlternatingSign) {
  const int n = 5;
  for (int j = 1; j <= n; ++j) {
    const double sign = (j - 1) % 2 == 0 ? 1.0 : -1.0;
    EXPECT_LT(max_entry(jw_operator(j, n, JwString::Parity) - Complex(sign) * jw_operator(j, n)), 1e-15);
  }
}

TEST(JwOperator, FirstSiteIsLoweringOnLeadingQubit) {
  const auto c = jw_operator(1, 1);
  EXPECT_EQ(c.matrix()(0, 1), Complex(1));
  EXPECT_EQ(c.matrix()(1, 0), Complex(0));
}

TEST(FermionHamiltonian, LiteralChainIsMinusSpinChain) {
  for (double lambda : {0.0, 0.4, 1.3}) {
    const ChainSpec spec(6, 1.0, lambda);
    const DenseOperator literal = literal_fermion_chain(6, lambda);
    EXPECT_LT(max_entry(literal + build_spin_hamiltonian(spec, false)), 1e-14);
    EXPECT_LT(max_entry(Complex(2) * literal - build_fermion_hamiltonian(spec, Boundary::Open)), 1e-14);
  }
}

TEST(FermionHamiltonian, AntiperiodicGroundMatchesOracle) {
  struct Case {
    int n;
    double lambda;
    double energy;
  };
  const Case cases[] = {{4, 0.0, frozen::kApbcGround_N4_L0p0},
                        {4, 0.5, frozen::kApbcGround_N4_L0p5},
                        {6, 0.3, frozen::kApbcGround_N6_L0p3},
                        {6, 1.5, frozen::kApbcGround_N6_L1p5},
                        {8, 0.5, frozen::kApbcGround_N8_L0p5}};
  for (const auto& c : cases) {
    const auto h = build_fermion_hamiltonian(ChainSpec(c.n, 1.0, c.lambda), Boundary::Antiperiodic);
    EXPECT_NEAR(ground_state(h).energy, c.energy, 1e-10) << c.n << " " << c.lambda;
  }
  EXPECT_NEAR(frozen::kApbcGround_N4_L0p0, -4.0, 1e-12);
}

TEST(FermionHamiltonian, ClosedFormN8) {
  const auto h = build_fermion_hamiltonian(ChainSpec(8, 1.0, 0.5), Boundary::Antiperiodic);
  double closed = 0.0;
  for (int j : {1, 3, 5, 7}) closed -= 2.0 * std::sqrt(1.25 - std::cos(j * pi / 8));
  EXPECT_NEAR(ground_state(h).energy, closed, 1e-10);
}

TEST(FermionHamiltonian, TracelessAndParityConserving) {
  for (auto bc : {Boundary::Open, Boundary::Periodic, Boundary::Antiperiodic}) {
    const auto h = build_fermion_hamiltonian(ChainSpec(6, 1.0, 0.8), bc);
    EXPECT_NEAR(std::abs(h.matrix().trace()), 0.0, 1e-12);
    EXPECT_TRUE(h.is_hermitian());
    const auto p = parity_operator(6);
    EXPECT_LT(max_entry(h * p - p * h), 1e-14);
  }
}

TEST(GroundState, Examples) {
  const auto id = ground_state(DenseOperator::identity(2));
  EXPECT_DOUBLE_EQ(id.energy, 1.0);
  EXPECT_TRUE(id.degenerate);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(4, 4);
  d.diagonal() << -3, 0, 0, 5;
  const auto gs = ground_state(DenseOperator(2, d));
  EXPECT_DOUBLE_EQ(gs.energy, -3.0);
  EXPECT_FALSE(gs.degenerate);
  EXPECT_EQ(gs.state.amplitudes()(0), Complex(1));
}

TEST(GroundState, RejectsNonHermitian) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(ground_state(DenseOperator(1, m)), DomainError);
  EXPECT_THROW(eigenvalues(DenseOperator(1, m)), DomainError);
}

TEST(ParitySector, RejectsParityMixingOperators) {
  EXPECT_THROW(parity_sector_eigenvalues(pauli_matrix(PauliString("XI")), true), DomainError);
  const auto both = eigenvalues(build_fermion_hamiltonian(ChainSpec(4, 1.0, 0.7), Boundary::Periodic));
  auto even = parity_sector_eigenvalues(build_fermion_hamiltonian(ChainSpec(4, 1.0, 0.7), Boundary::Periodic), true);
  auto odd = parity_sector_eigenvalues(build_fermion_hamiltonian(ChainSpec(4, 1.0, 0.7), Boundary::Periodic), false);
  EXPECT_EQ(even.size() + odd.size(), both.size());
  even.insert(even.end(), odd.begin(), odd.end());
  EXPECT_LT(testutil::max_abs_diff(even, both), 1e-12);
}

TEST(PauliMatrix, OccupationBasisConvention) {
  const auto y = pauli_matrix(PauliString("Y")).matrix();
  EXPECT_EQ(y(0, 1), Complex(0, 1));
  EXPECT_EQ(y(1, 0), Complex(0, -1));
  const auto z = pauli_matrix(PauliString("Z")).matrix();
  EXPECT_EQ(z(0, 0), Complex(-1));
  // (X - iY)/2 annihilates
  const auto lower = Complex(0.5) * (pauli_matrix(PauliString("X")) - Complex(0, 1) * pauli_matrix(PauliString("Y")));
  EXPECT_EQ(lower.matrix()(0, 1), Complex(1));
  EXPECT_EQ(lower.matrix()(1, 0), Complex(0));
}

TEST(PauliExpectation, Examples) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_DOUBLE_EQ(pauli_expectation(StateVector::basis(n, 0), PauliString(std::string(n, 'Z'))), n % 2 ? -1.0 : 1.0);
  }
  std::mt19937_64 rng(3);
  EXPECT_NEAR(pauli_expectation(random_state(3, rng), PauliString("III")), 1.0, 1e-14);
  Eigen::Vector4cd bell(1 / std::sqrt(2.0), 0, 0, Complex(0, -1 / std::sqrt(2.0)));
  EXPECT_NEAR(std::abs(pauli_expectation(StateVector(2, bell), PauliString("XY", QubitLayout::MomentumPairs))), 1.0,
              1e-14);
  EXPECT_THROW(pauli_expectation(StateVector::basis(2, 0), PauliString("XYZ")), DomainError);
}

TEST(PauliExpectation, MatchesDenseMatrix) {
  std::mt19937_64 rng(5);
  const auto psi = random_state(4, rng);
  for (std::uint64_t x = 0; x < 16; ++x) {
    for (std::uint64_t z = 0; z < 16; ++z) {
      const auto p = PauliString::from_masks(4, x, z);
      const Complex dense = psi.amplitudes().dot(pauli_matrix(p).matrix() * psi.amplitudes());
      EXPECT_NEAR(pauli_expectation(psi, p), dense.real(), 1e-13) << p.word();
    }
  }
}

TEST(PauliString, ParsingAndMasks) {
  const PauliString p("XYZI");
  EXPECT_EQ(p.size(), 4);
  EXPECT_EQ(p.x_mask(), 0b1100u);
  EXPECT_EQ(p.z_mask(), 0b0110u);
  EXPECT_EQ(p.y_count(), 1);
  EXPECT_EQ(PauliString::from_masks(4, p.x_mask(), p.z_mask()), p);
  EXPECT_EQ(p.word(), "XYZI");
  EXPECT_THROW(PauliString("XQ"), DomainError);
  EXPECT_THROW(PauliString(""), DomainError);
}

TEST(BruteForceSre, StabilizerStatesVanish) {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t b : {std::uint64_t{0}, (std::uint64_t{1} << n) - 1}) {
      EXPECT_NEAR(brute_force_sre(StateVector::basis(n, b)), 0.0, 1e-12);
    }
  }
  const double r = 1 / std::sqrt(2.0);
  EXPECT_NEAR(brute_force_sre(StateVector(2, Eigen::Vector4cd(r, 0, 0, Complex(0, -r)))), 0.0, 1e-12);
}

TEST(BruteForceSre, MatchesOracle) {
  const double r = 1 / std::sqrt(2.0);
  const StateVector t(1, Eigen::Vector2cd(r, std::polar(r, pi / 4)));
  EXPECT_NEAR(brute_force_sre(t), frozen::kSreTState, 1e-12);
  EXPECT_NEAR(brute_force_sre(t), std::log(4.0 / 3.0), 1e-12);
  Eigen::VectorXcd v(8);
  v << 1, Complex(0, 2), 3, -1, Complex(0.5, -1), 0, 2, Complex(0, 1);
  v.normalize();
  const StateVector psi(3, v);
  EXPECT_NEAR(brute_force_sre(psi, 2), frozen::kSreFixedState3_q2, 1e-12);
  EXPECT_NEAR(brute_force_sre(psi, 3), frozen::kSreFixedState3_q3, 1e-12);
}

TEST(BruteForceSre, BlockStateAtPiOver8) {
  const double phi = pi / 8;
  const StateVector block(2, Eigen::Vector4cd(std::cos(phi), 0, 0, Complex(0, -std::sin(phi))));
  const double c = std::cos(2 * phi), s = std::sin(2 * phi);
  EXPECT_NEAR(brute_force_sre(block), -std::log((1 + std::pow(c, 4) + std::pow(s, 4)) / 2), 1e-12);
  EXPECT_NEAR(brute_force_sre(block), frozen::kBlockSrePiOver8, 1e-12);
}

TEST(BruteForceSre, ThreadedPathIsDeterministic) {
  std::mt19937_64 rng(9);
  const auto psi = random_state(7, rng);
  const double first = brute_force_sre(psi);
  EXPECT_EQ(first, brute_force_sre(psi));
  EXPECT_GT(first, 0.0);
}

TEST(BruteForceSre, Limits) {
  EXPECT_THROW(brute_force_sre(StateVector::basis(8, 0)), CapacityError);
  EXPECT_THROW(brute_force_sre(StateVector::basis(2, 0), 1), DomainError);
}

TEST(EntanglementEntropy, BellAndProduct) {
  const double r = 1 / std::sqrt(2.0);
  const StateVector bell(2, Eigen::Vector4cd(r, 0, 0, r));
  const int first[] = {0};
  EXPECT_NEAR(entanglement_entropy(bell, first), std::log(2.0), 1e-12);
  EXPECT_NEAR(entanglement_entropy(StateVector::basis(4, 6), first), 0.0, 1e-12);
  const int bad[] = {4};
  EXPECT_THROW(entanglement_entropy(bell, bad), DomainError);
}

TEST(PermuteQubits, MovesBasisStates) {
  // qubit i of the result is qubit perm[i] of the input: |abc> -> |cab>
  const int perm[] = {2, 0, 1};
  const auto out = permute_qubits(StateVector::basis(3, 0b110), perm);
  EXPECT_EQ(out.amplitudes()(0b011), Complex(1));
  std::mt19937_64 rng(13);
  const auto psi = random_state(5, rng);
  const int rot[] = {1, 2, 3, 4, 0};
  EXPECT_NEAR(brute_force_sre(psi), brute_force_sre(permute_qubits(psi, rot)), 1e-12);
}

TEST(Kron, OrdersLeadingFactorFirst) {
  const auto psi = kron(StateVector::basis(1, 1), StateVector::basis(2, 0));
  EXPECT_EQ(psi.amplitudes()(0b100), Complex(1));
  const auto op = kron(pauli_matrix(PauliString("X")), DenseOperator::identity(1));
  EXPECT_LT(max_entry(op - pauli_matrix(PauliString("XI"))), 1e-15);
}

}  // namespace
}  // namespace lfising
