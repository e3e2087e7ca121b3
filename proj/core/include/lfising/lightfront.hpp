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

#ifndef LFISING_LIGHTFRONT_HPP
#define LFISING_LIGHTFRONT_HPP

#include <set>
#include <span>
#include <vector>

#include "lfising/exactdiag.hpp"
#include "lfising/lattice.hpp"

namespace lfising {

// The light-front energy is already diagonal in LF momentum, so this module never builds
// a matrix for it: spectra are tables and eigenstates are occupation-number products.

struct LFRow {
  double k_plus;
  double energy;
};

struct LFSpectrum {
  std::vector<LFRow> rows;  ///< ascending in k+, so energies descend
  Mass mass;
};

/// m^2 / (2 k+). Throws DomainError for k+ <= 0 and MasslessError for m = 0.
double lf_energy(double k_plus, Mass m);

/// One row per DLCQ momentum of the chain. Throws MasslessError for m = 0.
LFSpectrum lf_spectrum(const ChainSpec& spec, Mass m);

struct ShellPoint {
  double k_plus;
  double k_minus;
  double k0;
  double k1;
};

/// k- = m^2 / k+, k0 = (k+ + k-)/2, k1 = (k+ - k-)/2. Throws DomainError for k+ <= 0.
ShellPoint mass_shell_check(double k_plus, Mass m);

struct LightConeSplit {
  double k_plus;
  double k_minus;
};

/// Massless on-shell split: k1 > 0 -> (2 k1, 0), k1 < 0 -> (0, -2 k1).
/// Throws ZeroModeError for k1 = 0.
LightConeSplit massless_case_split(double k1);

struct MasslessLFRow {
  double k1;       ///< the negative instant-form momentum the mode comes from
  double k_minus;  ///< -2 k1
  double energy;   ///< k- = 2 |k1|
};

/// Quantization in k-: one row per strictly negative k1, ascending in k1. The zero mode
/// and positive momenta (k- = 0) carry no row.
std::vector<MasslessLFRow> massless_lf_rows(std::span<const double> k1_values);

/// massless_lf_rows over an instant-form grid. Throws DomainError for a DLCQ grid.
std::vector<MasslessLFRow> massless_lf_spectrum(const MomentumGrid& grid);

/// An occupation-number product state over `n_modes` LF modes (mode index = row index
/// of the corresponding spectrum).
class LFEigenstate {
 public:
  /// Throws DomainError for modes outside [0, n_modes).
  LFEigenstate(int n_modes, std::set<int> occupied);
  static LFEigenstate vacuum(int n_modes) { return LFEigenstate(n_modes, {}); }
  static LFEigenstate single_particle(int n_modes, int mode) { return LFEigenstate(n_modes, {mode}); }

  int n_modes() const noexcept { return n_modes_; }
  const std::set<int>& occupied() const noexcept { return occupied_; }
  /// Always true: the state is a computational-basis vector of the mode qubits.
  bool is_product_state() const noexcept { return true; }

  /// Sum of the occupied rows' energies.
  double energy(const LFSpectrum& spectrum) const;
  double energy(std::span<const MasslessLFRow> rows) const;

  /// Occupation-basis vector; mode 0 is the leading qubit.
  StateVector to_state_vector() const;

 private:
  int n_modes_;
  std::set<int> occupied_;
};

}  // namespace lfising

#endif  // LFISING_LIGHTFRONT_HPP
