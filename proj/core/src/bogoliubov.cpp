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

#include "lfising/bogoliubov.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lfising/errors.hpp"

namespace lfising {
namespace {

using std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// Qubit order (-k, k) has index 2 n_-k + n_k; the block basis uses 2 n_k + n_-k.
DenseOperator to_block_basis(const DenseOperator& qubit_op) {
  Eigen::PermutationMatrix<4> swap;
  swap.indices() << 0, 2, 1, 3;
  const Eigen::MatrixXcd m = swap * qubit_op.matrix() * swap.transpose();
  return DenseOperator(2, m);
}

DenseOperator pair_hamiltonian(double number_coeff, double pairing_coeff) {
  const auto& [c_plus, c_minus] = pair_mode_operators();
  const DenseOperator cp_dag = c_plus.adjoint();
  const DenseOperator cm_dag = c_minus.adjoint();
  const DenseOperator number = cp_dag * c_plus + cm_dag * c_minus - DenseOperator::identity(2);
  const DenseOperator pairing = cp_dag * cm_dag + c_plus * c_minus;
  return Complex(2.0 * number_coeff) * number - Complex(0.0, 2.0 * pairing_coeff) * pairing;
}

void require_instant_form(const MomentumGrid& grid, const char* what) {
  if (!grid.is_instant_form()) {
    throw DomainError(std::string(what) + ": light-front grids are not instant-form grids");
  }
}

}  // namespace

BlockStateVector::BlockStateVector(const Amplitudes& amplitudes) : amplitudes_(amplitudes) {
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) norm2 += std::norm(a);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) {
    throw DomainError("BlockStateVector: amplitudes are not normalized");
  }
}

StateVector BlockStateVector::to_state_vector() const {
  Eigen::VectorXcd v(4);
  for (int i = 0; i < 4; ++i) v(i) = amplitudes_[i];
  return StateVector(2, std::move(v));
}

double bogoliubov_angle_lattice(double k, double coupling, double spacing) {
  if (!(spacing > 0.0)) throw DomainError("bogoliubov_angle_lattice: spacing must be positive");
  const double ka = k * spacing;
  if (ka < 0.0 || ka > pi) {
    throw DomainError("bogoliubov_angle_lattice: block momenta satisfy 0 <= ka <= pi");
  }
  const double s = std::sin(ka);
  const double d = coupling - std::cos(ka);
  if (s == 0.0 && d == 0.0) {
    throw DegenerateBlockError("bogoliubov_angle_lattice: gapless block at k = 0, lambda = 1");
  }
  return 0.5 * std::atan2(s, d);
}

double bogoliubov_angle_continuum(double k, Mass m) {
  if (!(k > 0.0)) throw DomainError("bogoliubov_angle_continuum: k must be positive");
  return 0.5 * std::atan2(k, m.value());
}

BogoliubovBlock lattice_block(double k, double coupling, double spacing) {
  return {k, bogoliubov_angle_lattice(k, coupling, spacing), lattice_dispersion(k, coupling, spacing),
          BlockFlavor::Lattice};
}

BogoliubovBlock continuum_block(double k, Mass m) {
  return {k, bogoliubov_angle_continuum(k, m), continuum_dispersion(k, m), BlockFlavor::Continuum};
}

const PairModeOperators& pair_mode_operators() {
  static const PairModeOperators ops{
      to_block_basis(jw_operator(2, 2, JwString::Parity)),
      to_block_basis(jw_operator(1, 2, JwString::Parity)),
  };
  return ops;
}

DenseOperator block_hamiltonian(double k, double coupling, double spacing) {
  if (!(spacing > 0.0)) throw DomainError("block_hamiltonian: spacing must be positive");
  const double ka = k * spacing;
  if (!(ka > 0.0 && ka < pi)) {
    throw DomainError("block_hamiltonian: ka must lie strictly inside (0, pi); k = 0 and ka = pi "
                      "are self-conjugate, not pairs");
  }
  return pair_hamiltonian(coupling - std::cos(ka), std::sin(ka));
}

DenseOperator continuum_block_hamiltonian(double k, Mass m) {
  if (!(k > 0.0)) throw DomainError("continuum_block_hamiltonian: k must be positive");
  return pair_hamiltonian(m.value(), k);
}

QuasiparticleOperators quasiparticle_operators(double angle) {
  const auto& [c_plus, c_minus] = pair_mode_operators();
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {Complex(c) * c_plus - kI * s * c_minus.adjoint(),
          Complex(c) * c_minus + kI * s * c_plus.adjoint()};
}

DenseOperator bogoliubov_rotation(double angle) {
  const auto [eta_plus, eta_minus] = quasiparticle_operators(angle);
  const StateVector vac = block_ground_state(angle).to_state_vector();
  const Eigen::VectorXcd& v = vac.amplitudes();
  Eigen::MatrixXcd u(4, 4);
  u.col(0) = v;
  u.col(1) = eta_minus.adjoint().matrix() * v;
  u.col(2) = eta_plus.adjoint().matrix() * v;
  u.col(3) = eta_plus.adjoint().matrix() * (eta_minus.adjoint().matrix() * v);
  return DenseOperator(2, u);
}

BlockStateVector block_ground_state(double angle) {
  if (!(angle >= 0.0 && angle < 0.5 * pi)) {
    throw DomainError("block_ground_state: angle must lie in [0, pi/2)");
  }
  return BlockStateVector({Complex(std::cos(angle)), 0.0, 0.0, -kI * std::sin(angle)});
}

double if_ground_energy(const MomentumGrid& grid, double coupling) {
  require_instant_form(grid, "if_ground_energy");
  // Paired blocks give -2 omega_k once per |k|; each self-conjugate mode is a lone number
  // operator 2 omega (n - 1/2) contributing -omega. Both are -omega per grid entry.
  double energy = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const int p = grid.numerators()[i];
    const double k = grid.momentum(i);
    if (grid.is_self_conjugate(i)) {
      energy -= lattice_dispersion(k, coupling, grid.spacing());
    } else if (p > 0) {
      energy -= 2.0 * lattice_dispersion(k, coupling, grid.spacing());
    }
  }
  return energy;
}

double if_excitation_energy(double k, Mass m) { return 2.0 * continuum_dispersion(k, m); }

IFGroundState build_if_ground_state(const MomentumGrid& grid, Mass m) {
  require_instant_form(grid, "build_if_ground_state");
  IFGroundState out;
  for (int p : grid.positive_numerators()) {
    const double k = grid.to_momentum(p);
    const BogoliubovBlock block = continuum_block(k, m);
    out.blocks.push_back({k, block, block_ground_state(block.angle)});
  }
  return out;
}

IFGroundState build_if_ground_state(const MomentumGrid& grid, double coupling) {
  require_instant_form(grid, "build_if_ground_state");
  IFGroundState out;
  for (int p : grid.positive_numerators()) {
    const double k = grid.to_momentum(p);
    const BogoliubovBlock block = lattice_block(k, coupling, grid.spacing());
    out.blocks.push_back({k, block, block_ground_state(block.angle)});
  }
  return out;
}

}  // namespace lfising
