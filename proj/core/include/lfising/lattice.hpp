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

#ifndef LFISING_LATTICE_HPP
#define LFISING_LATTICE_HPP

#include <cstddef>
#include <vector>

namespace lfising {

/// A transverse-field Ising chain: N spins with lattice constant a and field strength lambda.
class ChainSpec {
 public:
  /// Throws DomainError unless n_sites is even and >= 4, spacing > 0 and coupling >= 0.
  ChainSpec(int n_sites, double spacing, double coupling);

  int n_sites() const noexcept { return n_sites_; }
  double spacing() const noexcept { return spacing_; }
  double coupling() const noexcept { return coupling_; }
  double length() const noexcept { return n_sites_ * spacing_; }

 private:
  int n_sites_;
  double spacing_;
  double coupling_;
};

/// Non-negative fermion mass in units of 1/length.
class Mass {
 public:
  constexpr Mass() = default;
  /// Throws DomainError for negative or non-finite values.
  explicit Mass(double value);

  constexpr double value() const noexcept { return value_; }
  constexpr bool is_zero() const noexcept { return value_ == 0.0; }

 private:
  double value_ = 0.0;
};

enum class Frame { IfPeriodic, IfAntiperiodic, LfDlcq };
enum class Sector { Periodic, Antiperiodic };

const char* to_string(Frame frame) noexcept;
const char* to_string(Sector sector) noexcept;

// Momenta are held as integer numerators p of k = p * pi / (N a). Every grid in this
// library lives on that lattice, so membership, pairing and self-conjugacy are decided
// on integers and only converted to floating point at the boundary.
class MomentumGrid {
 public:
  Frame frame() const noexcept { return frame_; }
  int n_sites() const noexcept { return n_sites_; }
  double spacing() const noexcept { return spacing_; }
  std::size_t size() const noexcept { return numerators_.size(); }
  bool is_instant_form() const noexcept { return frame_ != Frame::LfDlcq; }

  const std::vector<int>& numerators() const noexcept { return numerators_; }
  double momentum(std::size_t i) const;
  std::vector<double> momenta() const;

  /// Converts a numerator on this grid's pi/(Na) lattice to a momentum.
  double to_momentum(int numerator) const noexcept;

  /// k == -k modulo the Brillouin-zone period 2 pi / a.
  bool is_self_conjugate(std::size_t i) const;
  bool contains_numerator(int numerator) const noexcept;
  /// True when every entry has its partner -k in the grid and none is self-conjugate.
  bool fully_paired() const;

  /// Numerators of the strictly positive momenta, ascending.
  std::vector<int> positive_numerators() const;

 private:
  friend MomentumGrid make_if_grid(const ChainSpec&, Sector);
  friend MomentumGrid make_lf_grid(const ChainSpec&);
  MomentumGrid(Frame frame, int n_sites, double spacing, std::vector<int> numerators);

  Frame frame_;
  int n_sites_;
  double spacing_;
  std::vector<int> numerators_;
};

/// Instant-form grid: 2 pi n / (Na) (periodic) or pi (2n+1) / (Na) (antiperiodic),
/// n = -N/2 .. N/2-1, ascending.
MomentumGrid make_if_grid(const ChainSpec& spec, Sector sector);

/// DLCQ light-front grid k+ = 2 pi n / (Na), n = 1 .. N.
MomentumGrid make_lf_grid(const ChainSpec& spec);

/// Lattice quasiparticle dispersion sqrt(lambda^2 - 2 lambda cos(ka) + 1) (dimensionless).
double lattice_dispersion(double k, double coupling, double spacing);

/// Relativistic dispersion sqrt(m^2 + k^2).
double continuum_dispersion(double k, Mass m);

/// (1 - lambda) / a. May be negative; lattice-level code uses this form.
double signed_mass_from_coupling(double coupling, double spacing);

/// (1 - lambda) / a as a Mass. Throws DomainError for lambda > 1, where the
/// continuum mass would be negative.
Mass mass_from_coupling(double coupling, double spacing);

}  // namespace lfising

#endif  // LFISING_LATTICE_HPP
