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

#include "lfising/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lfising/errors.hpp"

namespace lfising {

ChainSpec::ChainSpec(int n_sites, double spacing, double coupling)
    : n_sites_(n_sites), spacing_(spacing), coupling_(coupling) {
  if (n_sites < 4 || n_sites % 2 != 0) {
    throw DomainError("ChainSpec: n_sites must be even and >= 4, got " + std::to_string(n_sites));
  }
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw DomainError("ChainSpec: spacing must be positive and finite");
  }
  if (!(coupling >= 0.0) || !std::isfinite(coupling)) {
    throw DomainError("ChainSpec: coupling must be non-negative and finite");
  }
}

Mass::Mass(double value) : value_(value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw DomainError("Mass: value must be finite and non-negative");
  }
}

const char* to_string(Frame frame) noexcept {
  switch (frame) {
    case Frame::IfPeriodic:
      return "if-periodic";
    case Frame::IfAntiperiodic:
      return "if-antiperiodic";
    case Frame::LfDlcq:
      return "lf-dlcq";
  }
  return "?";
}

const char* to_string(Sector sector) noexcept {
  return sector == Sector::Periodic ? "periodic" : "antiperiodic";
}

MomentumGrid::MomentumGrid(Frame frame, int n_sites, double spacing, std::vector<int> numerators)
    : frame_(frame), n_sites_(n_sites), spacing_(spacing), numerators_(std::move(numerators)) {}

double MomentumGrid::to_momentum(int numerator) const noexcept {
  return numerator * std::numbers::pi / (n_sites_ * spacing_);
}

double MomentumGrid::momentum(std::size_t i) const { return to_momentum(numerators_.at(i)); }

std::vector<double> MomentumGrid::momenta() const {
  std::vector<double> out;
  out.reserve(numerators_.size());
  for (int p : numerators_) out.push_back(to_momentum(p));
  return out;
}

bool MomentumGrid::is_self_conjugate(std::size_t i) const {
  // k = -k mod 2pi/a  <=>  2p = 0 mod 2N  <=>  p = 0 mod N
  return numerators_.at(i) % n_sites_ == 0;
}

bool MomentumGrid::contains_numerator(int numerator) const noexcept {
  return std::binary_search(numerators_.begin(), numerators_.end(), numerator);
}

bool MomentumGrid::fully_paired() const {
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    if (is_self_conjugate(i) || !contains_numerator(-numerators_[i])) return false;
  }
  return true;
}

std::vector<int> MomentumGrid::positive_numerators() const {
  std::vector<int> out;
  std::copy_if(numerators_.begin(), numerators_.end(), std::back_inserter(out),
               [](int p) { return p > 0; });
  return out;
}

MomentumGrid make_if_grid(const ChainSpec& spec, Sector sector) {
  const int n = spec.n_sites();
  std::vector<int> numerators;
  numerators.reserve(n);
  for (int j = -n / 2; j < n / 2; ++j) {
    numerators.push_back(sector == Sector::Periodic ? 2 * j : 2 * j + 1);
  }
  return MomentumGrid(sector == Sector::Periodic ? Frame::IfPeriodic : Frame::IfAntiperiodic, n,
                      spec.spacing(), std::move(numerators));
}

MomentumGrid make_lf_grid(const ChainSpec& spec) {
  const int n = spec.n_sites();
  std::vector<int> numerators;
  numerators.reserve(n);
  for (int j = 1; j <= n; ++j) numerators.push_back(2 * j);
  return MomentumGrid(Frame::LfDlcq, n, spec.spacing(), std::move(numerators));
}

double lattice_dispersion(double k, double coupling, double spacing) {
  if (!(spacing > 0.0)) throw DomainError("lattice_dispersion: spacing must be positive");
  // lambda^2 - 2 lambda cos(ka) + 1 = (lambda - cos ka)^2 + sin^2 ka, which stays
  // non-negative under rounding and is exactly symmetric in k.
  const double ka = k * spacing;
  return std::hypot(coupling - std::cos(ka), std::sin(std::abs(ka)));
}

double continuum_dispersion(double k, Mass m) { return std::hypot(m.value(), k); }

double signed_mass_from_coupling(double coupling, double spacing) {
  if (!(spacing > 0.0)) throw DomainError("mass_from_coupling: spacing must be positive");
  return (1.0 - coupling) / spacing;
}

Mass mass_from_coupling(double coupling, double spacing) {
  const double m = signed_mass_from_coupling(coupling, spacing);
  if (m < 0.0) {
    throw DomainError("mass_from_coupling: lambda > 1 gives a negative continuum mass");
  }
  return Mass(m);
}

}  // namespace lfising
