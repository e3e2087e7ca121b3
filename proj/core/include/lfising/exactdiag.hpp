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

#ifndef LFISING_EXACTDIAG_HPP
#define LFISING_EXACTDIAG_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lfising/lattice.hpp"
#include "lfising/pauli.hpp"

namespace lfising {

using Complex = std::complex<double>;

/// Largest chain handled by the dense constructions (2^14 x 2^14 complex entries).
inline constexpr int kDenseSiteCap = 14;
/// Largest state handled by the 4^n Pauli enumeration.
inline constexpr int kSreQubitCap = 7;

/// A 2^n x 2^n complex matrix acting on n qubits.
class DenseOperator {
 public:
  /// Throws DomainError unless the matrix is square with dimension 2^n_qubits.
  DenseOperator(int n_qubits, Eigen::MatrixXcd matrix);
  static DenseOperator zero(int n_qubits);
  static DenseOperator identity(int n_qubits);

  int qubits() const noexcept { return n_qubits_; }
  Eigen::Index dim() const noexcept { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
  Eigen::MatrixXcd& matrix() noexcept { return matrix_; }

  DenseOperator adjoint() const;
  /// max |H - H^dagger| over entries.
  double hermiticity_residue() const;
  bool is_hermitian(double tol = 1e-12) const { return hermiticity_residue() < tol; }

  DenseOperator& operator+=(const DenseOperator& other);
  DenseOperator& operator-=(const DenseOperator& other);
  DenseOperator& operator*=(Complex scale);
  friend DenseOperator operator+(DenseOperator lhs, const DenseOperator& rhs) { return lhs += rhs; }
  friend DenseOperator operator-(DenseOperator lhs, const DenseOperator& rhs) { return lhs -= rhs; }
  friend DenseOperator operator*(Complex s, DenseOperator op) { return op *= s; }
  friend DenseOperator operator*(const DenseOperator& lhs, const DenseOperator& rhs);

 private:
  int n_qubits_;
  Eigen::MatrixXcd matrix_;
};

/// Normalized amplitudes over 2^n basis states.
class StateVector {
 public:
  /// Throws DomainError if the length is not 2^n_qubits or the norm differs from 1 by
  /// more than 1e-12.
  StateVector(int n_qubits, Eigen::VectorXcd amplitudes);
  /// Computational basis state with the given index.
  static StateVector basis(int n_qubits, std::uint64_t index);

  int qubits() const noexcept { return n_qubits_; }
  Eigen::Index dim() const noexcept { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }

 private:
  int n_qubits_;
  Eigen::VectorXcd amplitudes_;
};

/// Tensor product |a> (x) |b>, with a's qubits leading.
StateVector kron(const StateVector& a, const StateVector& b);
/// Kronecker product of operators, lhs on the leading qubits.
DenseOperator kron(const DenseOperator& lhs, const DenseOperator& rhs);

/// -(1/2) sum_j X_j X_{j+1} - (lambda/2) sum_j Z_j on N qubits; `closed` adds X_N X_1.
DenseOperator build_spin_hamiltonian(const ChainSpec& spec, bool closed);

/// String convention of a Jordan-Wigner annihilator.
enum class JwString {
  PauliZ,  ///< prod_{j'<j} Z_{j'}: the site-space form
  Parity,  ///< exp(i pi sum_{j'<j} n_{j'}): the momentum-qubit form
};

/// c_j = ((X_j - i Y_j) / 2) * string for 1 <= j <= n_sites. The two strings differ by
/// (-1)^{j-1}, which leaves the anticommutators unchanged but flips the sign of
/// bilinears between sites of opposite index parity.
DenseOperator jw_operator(int site, int n_sites, JwString string = JwString::PauliZ);

enum class Boundary { Open, Periodic, Antiperiodic };

/// Quadratic fermion chain
///
///   sum_j [ lambda (2 c+_j c_j - 1) - (c+_j - c_j)(c+_{j+1} + c_{j+1}) ]
///
/// with c_{N+1} = +c_1 (Periodic), -c_1 (Antiperiodic) or dropped (Open). This is twice
/// the site-space prefactor of the spin chain; it is the operator whose momentum blocks
/// are 2(lambda - cos ka)(n_k + n_-k - 1) - 2i sin(ka)(c+_k c+_-k + c_k c_-k).
DenseOperator build_fermion_hamiltonian(const ChainSpec& spec, Boundary bc);

/// Fermion parity (-1)^{N_f} as a diagonal operator; in the Pauli basis prod_j (-Z_j).
DenseOperator parity_operator(int n_qubits);

struct GroundState {
  double energy;
  StateVector state;
  /// Set when the lowest eigenvalue is degenerate within `degeneracy_tol`.
  bool degenerate;
};

/// Lowest eigenpair of a Hermitian operator. The returned vector's largest amplitude is
/// made real and positive. Throws DomainError for non-Hermitian input.
GroundState ground_state(const DenseOperator& h, double degeneracy_tol = 1e-9);

/// Full spectrum, ascending. Throws DomainError for non-Hermitian input.
std::vector<double> eigenvalues(const DenseOperator& h);

/// Spectrum restricted to the even (or odd) fermion-parity subspace.
std::vector<double> parity_sector_eigenvalues(const DenseOperator& h, bool even);

/// <psi|H|psi>; the imaginary part is checked against 1e-10.
double expectation(const StateVector& psi, const DenseOperator& h);

/// Dense matrix of a Pauli string in the occupation-basis convention.
DenseOperator pauli_matrix(const PauliString& p);

/// <psi|P|psi>. Throws DomainError on a size mismatch and ConventionError if the
/// imaginary residue exceeds 1e-10.
double pauli_expectation(const StateVector& psi, const PauliString& p);

/// Stabilizer Renyi entropy
///
///   M_q = 1/(1-q) ln( sum_P <psi|P|psi>^{2q} / 2^n )
///
/// by exhaustive enumeration of all 4^n strings. Requires n <= kSreQubitCap and q >= 2.
double brute_force_sre(const StateVector& psi, int q = 2);

/// Von Neumann entropy (nats) of the reduced state on `subsystem` (qubit indices).
double entanglement_entropy(const StateVector& psi, std::span<const int> subsystem);

/// Reorders qubits: qubit i of the result is qubit perm[i] of the input.
StateVector permute_qubits(const StateVector& psi, std::span<const int> perm);

}  // namespace lfising

#endif  // LFISING_EXACTDIAG_HPP
