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

#include "lfising/resources.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lfising/errors.hpp"

namespace lfising {
namespace {

constexpr std::string_view kLetters = "IXYZ";

int letter_index(char c) {
  const auto pos = kLetters.find(c);
  if (pos == std::string_view::npos) throw DomainError(std::string("BlockPauliTable: bad letter ") + c);
  return static_cast<int>(pos);
}

double xlogx(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

}  // namespace

DenseOperator momentum_annihilator(int qubit, int n_qubits) {
  return jw_operator(qubit + 1, n_qubits, JwString::Parity);
}

QubitOrdering qubitize_ordering(const MomentumGrid& grid, UnpairedModes unpaired) {
  if (!grid.is_instant_form()) throw DomainError("qubitize_ordering: light-front grid");
  QubitOrdering out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const int p = grid.numerators()[i];
    if (grid.is_self_conjugate(i)) {
      if (unpaired == UnpairedModes::Reject) {
        throw DomainError("qubitize_ordering: unpaired momentum " + std::to_string(grid.momentum(i)) +
                          " (pass UnpairedModes::Exclude to drop it)");
      }
      out.excluded.push_back(p);
    } else if (!grid.contains_numerator(-p)) {
      throw DomainError("qubitize_ordering: momentum without a -k partner");
    }
  }
  for (int p : grid.positive_numerators()) {
    for (int signed_p : {-p, p}) {
      out.numerators.push_back(signed_p);
      out.momenta.push_back(grid.to_momentum(signed_p));
    }
  }
  return out;
}

StateVector assemble_momentum_state(const IFGroundState& state) {
  if (state.blocks.empty()) throw DomainError("assemble_momentum_state: no blocks");
  auto pair_qubits = [](const BlockStateVector& block) {
    // block index 2 n_k + n_-k -> qubit index 2 n_-k + n_k
    const auto& a = block.amplitudes();
    Eigen::VectorXcd v(4);
    v << a[0], a[2], a[1], a[3];
    return StateVector(2, std::move(v));
  };
  StateVector out = pair_qubits(state.blocks.front().state);
  for (std::size_t b = 1; b < state.blocks.size(); ++b) out = kron(out, pair_qubits(state.blocks[b].state));
  return out;
}

double BlockPauliTable::at(std::string_view word) const {
  if (word.size() != 2) throw DomainError("BlockPauliTable: words have two letters");
  return values_[4 * letter_index(word[0]) + letter_index(word[1])];
}

std::string_view BlockPauliTable::word(int index) {
  static constexpr std::string_view kWords[16] = {"II", "IX", "IY", "IZ", "XI", "XX", "XY", "XZ",
                                                  "YI", "YX", "YY", "YZ", "ZI", "ZX", "ZY", "ZZ"};
  return kWords[index];
}

BlockPauliTable block_pauli_table(double phi) {
  std::array<double, 16> v{};
  const double c2 = std::cos(2.0 * phi);
  const double s2 = std::sin(2.0 * phi);
  v[0] = 1.0;        // II
  v[15] = 1.0;       // ZZ
  v[3] = -c2;        // IZ
  v[12] = -c2;       // ZI
  v[6] = s2;         // XY
  v[9] = s2;         // YX
  return BlockPauliTable(v);
}

double pair_entanglement_entropy(double phi) {
  const double c2 = std::cos(phi) * std::cos(phi);
  const double s2 = std::sin(phi) * std::sin(phi);
  return std::max(0.0, -xlogx(c2) - xlogx(s2));
}

double analytic_m2_contribution(double k, Mass m) {
  if (!(k > 0.0)) throw DomainError("analytic_m2_contribution: k must be positive");
  const double mv = m.value();
  const double r = k * mv / (k * k + mv * mv);
  return -std::log1p(-r * r);
}

ResourceReport if_resource_report(const MomentumGrid& grid, Mass m, UnpairedModes unpaired) {
  qubitize_ordering(grid, unpaired);
  ResourceReport report{ReportFrame::InstantForm, {}, 0.0, 0.0};
  for (int p : grid.positive_numerators()) {
    const double k = grid.to_momentum(p);
    const double phi = bogoliubov_angle_continuum(k, m);
    report.per_block.push_back({k, pair_entanglement_entropy(phi), analytic_m2_contribution(k, m)});
  }
  for (const auto& row : report.per_block) {
    report.total_entropy += row.entanglement_entropy;
    report.total_m2 += row.m2;
  }
  return report;
}

ResourceReport lf_resource_report(const ChainSpec& spec, Mass m) {
  (void)m;  // every LF eigenstate is an occupation product, whatever the mass
  const MomentumGrid grid = make_lf_grid(spec);
  ResourceReport report{ReportFrame::LightFront, {}, 0.0, 0.0};
  // Each mode of an occupation product state is pure and a Z eigenstate: no entanglement
  // and no magic, block by block.
  for (double k_plus : grid.momenta()) report.per_block.push_back({k_plus, 0.0, 0.0});
  return report;
}

std::vector<SweepRow> magic_sweep(const ChainSpec& spec, std::span<const double> couplings) {
  std::vector<SweepRow> rows;
  rows.reserve(couplings.size());
  for (double lambda : couplings) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
      throw DomainError("magic_sweep: coupling " + std::to_string(lambda) + " outside [0, 1]");
    }
    const ChainSpec point(spec.n_sites(), spec.spacing(), lambda);
    const Mass m = mass_from_coupling(lambda, spec.spacing());
    const ResourceReport report = if_resource_report(make_if_grid(point, Sector::Antiperiodic), m);
    rows.push_back({lambda, m.value(), report.total_m2, report.total_entropy});
  }
  return rows;
}

}  // namespace lfising
