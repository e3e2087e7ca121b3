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

#ifndef LFISING_BOGOLIUBOV_HPP
#define LFISING_BOGOLIUBOV_HPP

#include <array>
#include <complex>
#include <vector>

#include "lfising/exactdiag.hpp"
#include "lfising/lattice.hpp"

namespace lfising {

// A (+k, -k) block lives in the 4-dim two-mode Fock space with ordered basis
//
//   { |0>_k|0>_-k, |0>_k|1>_-k, |1>_k|0>_-k, |1>_k|1>_-k },   index = 2 n_k + n_-k.
//
// These are the momentum qubits of the pair under the parity-string Jordan-Wigner map with
// -k ordered before +k, so |1>_k|1>_-k = c+_-k c+_k |0>. In this basis the ground state of
// block_hamiltonian is exactly (cos theta, 0, 0, -i sin theta).

enum class BlockFlavor { Lattice, Continuum };

struct BogoliubovBlock {
  double k;       ///< block momentum, > 0
  double angle;   ///< theta_k (lattice) or phi_k (continuum), in [0, pi/2)
  double omega;   ///< quasiparticle dispersion
  BlockFlavor flavor;
};

class BlockStateVector {
 public:
  using Amplitudes = std::array<std::complex<double>, 4>;
  /// Throws DomainError unless the amplitudes have unit norm within 1e-12.
  explicit BlockStateVector(const Amplitudes& amplitudes);

  const Amplitudes& amplitudes() const noexcept { return amplitudes_; }
  const std::complex<double>& operator[](int i) const { return amplitudes_.at(i); }
  /// As a 2-qubit StateVector in the block basis (+k qubit leading).
  StateVector to_state_vector() const;

 private:
  Amplitudes amplitudes_;
};

struct IFBlock {
  double k;
  BogoliubovBlock bogoliubov;
  BlockStateVector state;
};

/// BCS-type product over the positive momenta of an instant-form grid, ascending in k.
struct IFGroundState {
  std::vector<IFBlock> blocks;
};

/// theta_k with 2 theta_k = atan2(sin ka, lambda - cos ka), so that the diagonal
/// Bogoliubov coefficient is +omega_k. Requires 0 <= ka <= pi; throws
/// DegenerateBlockError at k = 0, lambda = 1.
double bogoliubov_angle_lattice(double k, double coupling, double spacing);

/// phi_k = atan2(k, m) / 2 in (0, pi/4]; requires k > 0.
double bogoliubov_angle_continuum(double k, Mass m);

BogoliubovBlock lattice_block(double k, double coupling, double spacing);
BogoliubovBlock continuum_block(double k, Mass m);

/// Two-mode annihilators (c_k, c_-k) in the block basis.
struct PairModeOperators {
  DenseOperator c_plus;
  DenseOperator c_minus;
};
const PairModeOperators& pair_mode_operators();

/// 2 d (n_k + n_-k - 1) - 2 i s (c+_k c+_-k + c_k c_-k) with d = lambda - cos ka and
/// s = sin ka. Requires 0 < ka < pi; the self-conjugate momenta are not pairs.
DenseOperator block_hamiltonian(double k, double coupling, double spacing);

/// The same block with d = m and s = k; spectrum {-2w, 0, 0, 2w}, w = sqrt(m^2 + k^2).
DenseOperator continuum_block_hamiltonian(double k, Mass m);

/// Quasiparticle annihilators that kill block_ground_state(angle):
///   eta_k  = cos(angle) c_k  - i sin(angle) c+_-k
///   eta_-k = cos(angle) c_-k + i sin(angle) c+_k
struct QuasiparticleOperators {
  DenseOperator eta_plus;
  DenseOperator eta_minus;
};
QuasiparticleOperators quasiparticle_operators(double angle);

/// Unitary whose columns are |vac>, eta+_-k|vac>, eta+_k|vac>, eta+_k eta+_-k|vac>
/// (the block basis occupation order, applied to quasiparticles).
DenseOperator bogoliubov_rotation(double angle);

/// (cos angle, 0, 0, -i sin angle); angle in [0, pi/2).
BlockStateVector block_ground_state(double angle);

/// Ground energy of the quadratic chain on an instant-form grid. Paired blocks add
/// -2 omega_k; on periodic grids the unpaired k = 0 and k = -pi/a modes add -|lambda-1|
/// and -(lambda+1). Throws DomainError for light-front grids.
double if_ground_energy(const MomentumGrid& grid, double coupling);

/// 2 sqrt(m^2 + k^2).
double if_excitation_energy(double k, Mass m);

/// Continuum-angle ground state over the positive momenta of an instant-form grid.
IFGroundState build_if_ground_state(const MomentumGrid& grid, Mass m);

/// Lattice-angle ground state; blocks carry theta_k and the lattice dispersion.
IFGroundState build_if_ground_state(const MomentumGrid& grid, double coupling);

}  // namespace lfising

#endif  // LFISING_BOGOLIUBOV_HPP
