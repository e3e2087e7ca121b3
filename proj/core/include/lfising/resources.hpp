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

#ifndef LFISING_RESOURCES_HPP
#define LFISING_RESOURCES_HPP

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "lfising/bogoliubov.hpp"
#include "lfising/exactdiag.hpp"
#include "lfising/lattice.hpp"

namespace lfising {

/// Momentum qubits in the opposite-pair order (-k1, k1, -k2, k2, ...), k_i > 0 ascending.
struct QubitOrdering {
  std::vector<int> numerators;  ///< on the grid's pi/(Na) lattice
  std::vector<double> momenta;
  /// Self-conjugate momenta dropped under UnpairedModes::Exclude.
  std::vector<int> excluded;
};

enum class UnpairedModes { Reject, Exclude };

/// Momentum-qubit annihilator c_k = ((X - iY)/2) exp(i pi sum_{k' before k} n_k') for
/// qubit `qubit` (0-based) of an `n_qubits` pair-ordered register.
DenseOperator momentum_annihilator(int qubit, int n_qubits);

/// Throws DomainError for light-front grids and, under Reject, for grids containing
/// self-conjugate momenta (k = 0, k = -pi/a on periodic grids).
QubitOrdering qubitize_ordering(const MomentumGrid& grid,
                                UnpairedModes unpaired = UnpairedModes::Reject);

/// Writes the blocks of an instant-form state on 2B momentum qubits in pair order. Blocks
/// have even parity, so the parity strings of other blocks act trivially and the full
/// state is the tensor product of the per-block qubit pairs.
StateVector assemble_momentum_state(const IFGroundState& state);

/// The sixteen two-qubit expectations of one (-k, k) pair, indexed by two-letter words
/// whose first letter acts on the -k qubit.
class BlockPauliTable {
 public:
  explicit BlockPauliTable(const std::array<double, 16>& values) : values_(values) {}

  /// Throws DomainError for words that are not two letters from IXYZ.
  double at(std::string_view word) const;
  const std::array<double, 16>& values() const noexcept { return values_; }
  static std::string_view word(int index);

 private:
  std::array<double, 16> values_;
};

/// <II> = <ZZ> = 1, <IZ> = <ZI> = -cos 2phi, <XY> = <YX> = +sin 2phi, others 0.
/// The XY/YX sign follows from the pair order (-k, k), the parity string and the
/// (cos, -i sin) block phase; magnitudes do not depend on those conventions.
BlockPauliTable block_pauli_table(double phi);

/// -cos^2 ln cos^2 - sin^2 ln sin^2 (nats), the entropy of either mode of a block.
double pair_entanglement_entropy(double phi);

/// -ln(1 - (k m / (k^2 + m^2))^2), the q = 2 stabilizer Renyi entropy of one block.
double analytic_m2_contribution(double k, Mass m);

enum class ReportFrame { InstantForm, LightFront };

struct BlockResources {
  double k;
  double entanglement_entropy;
  double m2;
};

struct ResourceReport {
  ReportFrame frame;
  std::vector<BlockResources> per_block;
  double total_entropy = 0.0;
  double total_m2 = 0.0;
};

ResourceReport if_resource_report(const MomentumGrid& grid, Mass m,
                                  UnpairedModes unpaired = UnpairedModes::Reject);

/// Rows per DLCQ momentum of the light-front vacuum; every entry is zero because the
/// state is an occupation-number product.
ResourceReport lf_resource_report(const ChainSpec& spec, Mass m);

struct SweepRow {
  double coupling;
  double mass;
  double total_m2;
  double total_entropy;
};

/// if_resource_report on the antiperiodic grid for each coupling in [0, 1].
std::vector<SweepRow> magic_sweep(const ChainSpec& spec, std::span<const double> couplings);

}  // namespace lfising

#endif  // LFISING_RESOURCES_HPP
