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

#include "lfising/lightfront.hpp"

#include <algorithm>
#include <string>

#include "lfising/errors.hpp"

namespace lfising {

double lf_energy(double k_plus, Mass m) {
  if (!(k_plus > 0.0)) throw DomainError("lf_energy: k+ must be positive");
  if (m.is_zero()) {
    throw MasslessError("lf_energy: m = 0 makes k- vanish for every k+; quantize in k- instead");
  }
  return m.value() * m.value() / (2.0 * k_plus);
}

LFSpectrum lf_spectrum(const ChainSpec& spec, Mass m) {
  if (m.is_zero()) throw MasslessError("lf_spectrum: massless chains use massless_lf_spectrum");
  const MomentumGrid grid = make_lf_grid(spec);
  LFSpectrum out{{}, m};
  out.rows.reserve(grid.size());
  for (double k_plus : grid.momenta()) out.rows.push_back({k_plus, lf_energy(k_plus, m)});
  return out;
}

ShellPoint mass_shell_check(double k_plus, Mass m) {
  if (!(k_plus > 0.0)) throw DomainError("mass_shell_check: k+ must be positive");
  const double k_minus = m.value() * m.value() / k_plus;
  return {k_plus, k_minus, 0.5 * (k_plus + k_minus), 0.5 * (k_plus - k_minus)};
}

LightConeSplit massless_case_split(double k1) {
  if (k1 > 0.0) return {2.0 * k1, 0.0};
  if (k1 < 0.0) return {0.0, -2.0 * k1};
  throw ZeroModeError("massless_case_split: k1 = 0 is the zero mode");
}

std::vector<MasslessLFRow> massless_lf_rows(std::span<const double> k1_values) {
  std::vector<MasslessLFRow> rows;
  for (double k1 : k1_values) {
    if (!(k1 < 0.0)) continue;
    const LightConeSplit split = massless_case_split(k1);
    rows.push_back({k1, split.k_minus, split.k_minus});
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.k1 < b.k1; });
  return rows;
}

std::vector<MasslessLFRow> massless_lf_spectrum(const MomentumGrid& grid) {
  if (!grid.is_instant_form()) {
    throw DomainError("massless_lf_spectrum: the massless path quantizes in k- from an "
                      "instant-form grid, not a DLCQ grid");
  }
  const std::vector<double> k1 = grid.momenta();
  return massless_lf_rows(k1);
}

LFEigenstate::LFEigenstate(int n_modes, std::set<int> occupied)
    : n_modes_(n_modes), occupied_(std::move(occupied)) {
  if (n_modes < 1) throw DomainError("LFEigenstate: need at least one mode");
  for (int mode : occupied_) {
    if (mode < 0 || mode >= n_modes) {
      throw DomainError("LFEigenstate: mode " + std::to_string(mode) + " out of range");
    }
  }
}

double LFEigenstate::energy(const LFSpectrum& spectrum) const {
  if (static_cast<int>(spectrum.rows.size()) != n_modes_) {
    throw DomainError("LFEigenstate::energy: spectrum size mismatch");
  }
  double e = 0.0;
  for (int mode : occupied_) e += spectrum.rows[mode].energy;
  return e;
}

double LFEigenstate::energy(std::span<const MasslessLFRow> rows) const {
  if (static_cast<int>(rows.size()) != n_modes_) {
    throw DomainError("LFEigenstate::energy: spectrum size mismatch");
  }
  double e = 0.0;
  for (int mode : occupied_) e += rows[mode].energy;
  return e;
}

StateVector LFEigenstate::to_state_vector() const {
  if (n_modes_ > kDenseSiteCap) throw CapacityError("LFEigenstate: too many modes for a dense vector");
  std::uint64_t index = 0;
  for (int mode : occupied_) index |= std::uint64_t{1} << (n_modes_ - 1 - mode);
  return StateVector::basis(n_modes_, index);
}

}  // namespace lfising
