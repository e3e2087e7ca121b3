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

#include "lfising/exactdiag.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <optional>
#include <string>

#include <Eigen/Eigenvalues>

#include "lfising/errors.hpp"

namespace lfising {
namespace {

constexpr double kImagResidueTol = 1e-10;
constexpr double kNormTol = 1e-12;

using Index = std::uint64_t;

// Qubit i (0-based, leading tensor factor first) is bit n-1-i of a basis index.
constexpr Index qubit_bit(int qubit, int n_qubits) { return Index{1} << (n_qubits - 1 - qubit); }

bool is_power_of_two_dim(Eigen::Index dim, int n_qubits) {
  return n_qubits >= 0 && n_qubits < 63 && dim == (Eigen::Index{1} << n_qubits);
}

void check_dense_cap(int n_sites, const char* what) {
  if (n_sites > kDenseSiteCap) {
    throw CapacityError(std::string(what) + ": N = " + std::to_string(n_sites) +
                        " exceeds the dense cap of " + std::to_string(kDenseSiteCap));
  }
}

// Sign of the Jordan-Wigner string in front of `site` on basis state `b`. With
// Z = 2n - 1, the Pauli-Z string counts empty modes; the parity string counts occupied.
int jw_string_sign(Index b, int site, int n_qubits, JwString string) {
  int count = 0;
  for (int q = 0; q < site; ++q) {
    const bool occupied = b & qubit_bit(q, n_qubits);
    if (occupied == (string == JwString::Parity)) ++count;
  }
  return (count % 2 == 0) ? 1 : -1;
}

// A fermionic ladder operator on a basis state: returns the signed image or nothing.
struct Ladder {
  int site;  // 0-based
  bool create;
  JwString string = JwString::PauliZ;
};

struct SignedBasis {
  Index state;
  int sign;
};

std::optional<SignedBasis> apply_ladder(const Ladder& op, SignedBasis in, int n_qubits) {
  const Index bit = qubit_bit(op.site, n_qubits);
  const bool occupied = in.state & bit;
  if (occupied == op.create) return std::nullopt;
  return SignedBasis{in.state ^ bit, in.sign * jw_string_sign(in.state, op.site, n_qubits, op.string)};
}

// Adds coeff * (ops[0] ops[1] ...) to h; the rightmost operator acts first.
void add_fermion_product(Eigen::MatrixXcd& h, int n_qubits, Complex coeff,
                         std::initializer_list<Ladder> ops) {
  const Index dim = Index{1} << n_qubits;
  for (Index b = 0; b < dim; ++b) {
    std::optional<SignedBasis> cur = SignedBasis{b, 1};
    for (auto it = std::rbegin(ops); it != std::rend(ops) && cur; ++it) {
      cur = apply_ladder(*it, *cur, n_qubits);
    }
    if (cur) h(static_cast<Eigen::Index>(cur->state), static_cast<Eigen::Index>(b)) += coeff * double(cur->sign);
  }
}

void require_hermitian(const DenseOperator& h, const char* what) {
  const double residue = h.hermiticity_residue();
  if (residue >= 1e-12) {
    throw DomainError(std::string(what) + ": operator is not Hermitian (residue " +
                      std::to_string(residue) + ")");
  }
}

// In-place Walsh-Hadamard transform: out[z] = sum_b in[b] (-1)^{popcount(b & z)}.
void walsh_hadamard(std::vector<Complex>& v) {
  const std::size_t n = v.size();
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t i = 0; i < n; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const Complex a = v[j];
        const Complex b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
}

Complex i_power(int k) {
  switch (k & 3) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

}  // namespace

// ---------------------------------------------------------------------------------------
// DenseOperator / StateVector

DenseOperator::DenseOperator(int n_qubits, Eigen::MatrixXcd matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || !is_power_of_two_dim(matrix_.rows(), n_qubits)) {
    throw DomainError("DenseOperator: matrix must be 2^n x 2^n");
  }
}

DenseOperator DenseOperator::zero(int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return DenseOperator(n_qubits, Eigen::MatrixXcd::Zero(dim, dim));
}

DenseOperator DenseOperator::identity(int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return DenseOperator(n_qubits, Eigen::MatrixXcd::Identity(dim, dim));
}

DenseOperator DenseOperator::adjoint() const { return DenseOperator(n_qubits_, matrix_.adjoint()); }

double DenseOperator::hermiticity_residue() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& other) {
  if (other.n_qubits_ != n_qubits_) throw DomainError("DenseOperator: size mismatch");
  matrix_ += other.matrix_;
  return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& other) {
  if (other.n_qubits_ != n_qubits_) throw DomainError("DenseOperator: size mismatch");
  matrix_ -= other.matrix_;
  return *this;
}

DenseOperator& DenseOperator::operator*=(Complex scale) {
  matrix_ *= scale;
  return *this;
}

DenseOperator operator*(const DenseOperator& lhs, const DenseOperator& rhs) {
  if (lhs.qubits() != rhs.qubits()) throw DomainError("DenseOperator: size mismatch");
  return DenseOperator(lhs.qubits(), lhs.matrix() * rhs.matrix());
}

StateVector::StateVector(int n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (!is_power_of_two_dim(amplitudes_.size(), n_qubits)) {
    throw DomainError("StateVector: length must be 2^n");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTol) {
    throw DomainError("StateVector: amplitudes are not normalized");
  }
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (static_cast<Eigen::Index>(index) >= dim) throw DomainError("StateVector::basis: index out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(n_qubits, std::move(v));
}

StateVector kron(const StateVector& a, const StateVector& b) {
  const Eigen::Index db = b.dim();
  Eigen::VectorXcd out(a.dim() * db);
  for (Eigen::Index i = 0; i < a.dim(); ++i) out.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
  // Renormalize away the rounding of the product so long chains of kron stay valid.
  out.normalize();
  return StateVector(a.qubits() + b.qubits(), std::move(out));
}

DenseOperator kron(const DenseOperator& lhs, const DenseOperator& rhs) {
  const Eigen::Index dr = rhs.dim();
  Eigen::MatrixXcd out(lhs.dim() * dr, lhs.dim() * dr);
  for (Eigen::Index i = 0; i < lhs.dim(); ++i) {
    for (Eigen::Index j = 0; j < lhs.dim(); ++j) {
      out.block(i * dr, j * dr, dr, dr) = lhs.matrix()(i, j) * rhs.matrix();
    }
  }
  return DenseOperator(lhs.qubits() + rhs.qubits(), std::move(out));
}

// ---------------------------------------------------------------------------------------
// Hamiltonians

DenseOperator build_spin_hamiltonian(const ChainSpec& spec, bool closed) {
  const int n = spec.n_sites();
  check_dense_cap(n, "build_spin_hamiltonian");
  const double lambda = spec.coupling();
  DenseOperator h = DenseOperator::zero(n);
  const Index dim = Index{1} << n;
  for (Index b = 0; b < dim; ++b) {
    double diag = 0.0;
    for (int j = 0; j < n; ++j) diag += (b & qubit_bit(j, n)) ? 1.0 : -1.0;
    h.matrix()(b, b) = -0.5 * lambda * diag;
    const int bonds = closed ? n : n - 1;
    for (int j = 0; j < bonds; ++j) {
      const Index flip = qubit_bit(j, n) | qubit_bit((j + 1) % n, n);
      h.matrix()(static_cast<Eigen::Index>(b ^ flip), static_cast<Eigen::Index>(b)) += -0.5;
    }
  }
  return h;
}

DenseOperator jw_operator(int site, int n_sites, JwString string) {
  if (n_sites < 1) throw DomainError("jw_operator: n_sites must be positive");
  if (site < 1 || site > n_sites) {
    throw DomainError("jw_operator: site " + std::to_string(site) + " outside [1, " +
                      std::to_string(n_sites) + "]");
  }
  check_dense_cap(n_sites, "jw_operator");
  DenseOperator c = DenseOperator::zero(n_sites);
  const Index dim = Index{1} << n_sites;
  for (Index b = 0; b < dim; ++b) {
    if (auto out = apply_ladder({site - 1, false, string}, {b, 1}, n_sites)) {
      c.matrix()(static_cast<Eigen::Index>(out->state), static_cast<Eigen::Index>(b)) = double(out->sign);
    }
  }
  return c;
}

DenseOperator build_fermion_hamiltonian(const ChainSpec& spec, Boundary bc) {
  const int n = spec.n_sites();
  check_dense_cap(n, "build_fermion_hamiltonian");
  const double lambda = spec.coupling();
  DenseOperator h = DenseOperator::zero(n);
  auto& m = h.matrix();
  const Index dim = Index{1} << n;
  for (Index b = 0; b < dim; ++b) {
    double diag = 0.0;
    for (int j = 0; j < n; ++j) diag += (b & qubit_bit(j, n)) ? 1.0 : -1.0;
    m(b, b) = lambda * diag;
  }
  for (int j = 0; j < n; ++j) {
    int next = j + 1;
    double wrap = 1.0;
    if (next == n) {
      if (bc == Boundary::Open) break;
      next = 0;
      wrap = (bc == Boundary::Periodic) ? 1.0 : -1.0;
    }
    // -(c+_j - c_j)(c+_next + c_next), with c_next scaled by the boundary sign.
    add_fermion_product(m, n, -wrap, {{j, true}, {next, true}});
    add_fermion_product(m, n, -wrap, {{j, true}, {next, false}});
    add_fermion_product(m, n, +wrap, {{j, false}, {next, true}});
    add_fermion_product(m, n, +wrap, {{j, false}, {next, false}});
  }
  return h;
}

DenseOperator parity_operator(int n_qubits) {
  DenseOperator p = DenseOperator::zero(n_qubits);
  const Index dim = Index{1} << n_qubits;
  for (Index b = 0; b < dim; ++b) p.matrix()(b, b) = (std::popcount(b) % 2 == 0) ? 1.0 : -1.0;
  return p;
}

// ---------------------------------------------------------------------------------------
// Diagonalization

GroundState ground_state(const DenseOperator& h, double degeneracy_tol) {
  require_hermitian(h, "ground_state");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix());
  if (solver.info() != Eigen::Success) throw DomainError("ground_state: eigensolver failed");
  const auto& values = solver.eigenvalues();
  Eigen::VectorXcd v = solver.eigenvectors().col(0);
  Eigen::Index pivot = 0;
  v.cwiseAbs().maxCoeff(&pivot);
  v *= std::conj(v(pivot)) / std::abs(v(pivot));
  v.normalize();
  const bool degenerate = values.size() > 1 && (values(1) - values(0)) < degeneracy_tol;
  return GroundState{values(0), StateVector(h.qubits(), std::move(v)), degenerate};
}

std::vector<double> eigenvalues(const DenseOperator& h) {
  require_hermitian(h, "eigenvalues");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("eigenvalues: eigensolver failed");
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

std::vector<double> parity_sector_eigenvalues(const DenseOperator& h, bool even) {
  require_hermitian(h, "parity_sector_eigenvalues");
  std::vector<Eigen::Index> inside;
  std::vector<Eigen::Index> outside;
  for (Eigen::Index b = 0; b < h.dim(); ++b) {
    ((std::popcount(static_cast<Index>(b)) % 2 == 0) == even ? inside : outside).push_back(b);
  }
  double leak = 0.0;
  for (auto r : outside) {
    for (auto c : inside) leak = std::max(leak, std::abs(h.matrix()(r, c)));
  }
  if (leak > 1e-12) throw DomainError("parity_sector_eigenvalues: operator mixes parity sectors");
  const auto sz = static_cast<Eigen::Index>(inside.size());
  Eigen::MatrixXcd block(sz, sz);
  for (Eigen::Index r = 0; r < sz; ++r) {
    for (Eigen::Index c = 0; c < sz; ++c) block(r, c) = h.matrix()(inside[r], inside[c]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

double expectation(const StateVector& psi, const DenseOperator& h) {
  if (psi.qubits() != h.qubits()) throw DomainError("expectation: size mismatch");
  const Complex value = psi.amplitudes().dot(h.matrix() * psi.amplitudes());
  if (std::abs(value.imag()) > kImagResidueTol * std::max(1.0, std::abs(value.real()))) {
    throw ConventionError("expectation: imaginary residue " + std::to_string(value.imag()));
  }
  return value.real();
}

// ---------------------------------------------------------------------------------------
// Pauli strings

DenseOperator pauli_matrix(const PauliString& p) {
  const int n = p.size();
  const Index dim = Index{1} << n;
  DenseOperator out = DenseOperator::zero(n);
  const Complex phase = i_power(p.y_count());
  const int z_weight = std::popcount(p.z_mask());
  for (Index b = 0; b < dim; ++b) {
    const int ones = std::popcount(b & p.z_mask());
    const double sign = ((z_weight - ones) % 2 == 0) ? 1.0 : -1.0;
    out.matrix()(static_cast<Eigen::Index>(b ^ p.x_mask()), static_cast<Eigen::Index>(b)) = phase * sign;
  }
  return out;
}

double pauli_expectation(const StateVector& psi, const PauliString& p) {
  if (psi.qubits() != p.size()) {
    throw DomainError("pauli_expectation: string has " + std::to_string(p.size()) +
                      " letters but state has " + std::to_string(psi.qubits()) + " qubits");
  }
  // P|b> = i^{#Y} prod_{z}(2 b_j - 1) |b ^ x>
  const auto& a = psi.amplitudes();
  const Index dim = Index{1} << p.size();
  const int z_weight = std::popcount(p.z_mask());
  Complex acc = 0.0;
  for (Index b = 0; b < dim; ++b) {
    const int ones = std::popcount(b & p.z_mask());
    const double sign = ((z_weight - ones) % 2 == 0) ? 1.0 : -1.0;
    acc += std::conj(a(static_cast<Eigen::Index>(b ^ p.x_mask()))) * a(static_cast<Eigen::Index>(b)) * sign;
  }
  acc *= i_power(p.y_count());
  if (std::abs(acc.imag()) > kImagResidueTol) {
    throw ConventionError("pauli_expectation: imaginary residue " + std::to_string(acc.imag()) +
                          " for " + p.word());
  }
  return acc.real();
}

double brute_force_sre(const StateVector& psi, int q) {
  const int n = psi.qubits();
  if (n > kSreQubitCap) {
    throw CapacityError("brute_force_sre: " + std::to_string(n) + " qubits exceeds the cap of " +
                        std::to_string(kSreQubitCap));
  }
  if (q < 2) throw DomainError("brute_force_sre: q must be >= 2");
  const Index dim = Index{1} << n;
  const auto& a = psi.amplitudes();

  // For fixed x, <P_{x,z}> = i^{popcount(x&z)} (-1)^{|z|} WHT_z[ conj(a_{b^x}) a_b ], so
  // all 2^n z-strings come out of one transform. The x range is cut into a fixed number
  // of chunks that are summed in order, so the result does not depend on thread count.
  auto chunk_sum = [&](Index x_begin, Index x_end) {
    std::vector<Complex> w(dim);
    double sum = 0.0;
    for (Index x = x_begin; x < x_end; ++x) {
      for (Index b = 0; b < dim; ++b) w[b] = std::conj(a(static_cast<Eigen::Index>(b ^ x))) * a(static_cast<Eigen::Index>(b));
      walsh_hadamard(w);
      for (Index z = 0; z < dim; ++z) {
        Complex value = w[z] * i_power(std::popcount(x & z));
        if (std::popcount(z) % 2 == 1) value = -value;
        if (std::abs(value.imag()) > kImagResidueTol) {
          throw ConventionError("brute_force_sre: imaginary Pauli expectation");
        }
        sum += std::pow(value.real() * value.real(), q);
      }
    }
    return sum;
  };

  const Index chunks = std::min<Index>(dim, 8);
  const Index per = dim / chunks;
  std::vector<double> partial(chunks, 0.0);
  if (n >= 6) {
    std::vector<std::future<double>> futures;
    futures.reserve(chunks);
    for (Index c = 0; c < chunks; ++c) {
      futures.push_back(std::async(std::launch::async, chunk_sum, c * per, (c + 1) * per));
    }
    for (Index c = 0; c < chunks; ++c) partial[c] = futures[c].get();
  } else {
    for (Index c = 0; c < chunks; ++c) partial[c] = chunk_sum(c * per, (c + 1) * per);
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return std::log(total / static_cast<double>(dim)) / (1.0 - q);
}

// ---------------------------------------------------------------------------------------
// Entanglement

StateVector permute_qubits(const StateVector& psi, std::span<const int> perm) {
  const int n = psi.qubits();
  if (static_cast<int>(perm.size()) != n) throw DomainError("permute_qubits: permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw DomainError("permute_qubits: not a permutation");
    seen[p] = true;
  }
  const Index dim = Index{1} << n;
  Eigen::VectorXcd out(static_cast<Eigen::Index>(dim));
  for (Index b = 0; b < dim; ++b) {
    Index target = 0;
    for (int i = 0; i < n; ++i) {
      if (b & qubit_bit(perm[i], n)) target |= qubit_bit(i, n);
    }
    out(static_cast<Eigen::Index>(target)) = psi.amplitudes()(static_cast<Eigen::Index>(b));
  }
  return StateVector(n, std::move(out));
}

double entanglement_entropy(const StateVector& psi, std::span<const int> subsystem) {
  const int n = psi.qubits();
  std::vector<bool> in_sub(n, false);
  std::vector<int> perm;
  for (int q : subsystem) {
    if (q < 0 || q >= n || in_sub[q]) throw DomainError("entanglement_entropy: bad subsystem");
    in_sub[q] = true;
    perm.push_back(q);
  }
  for (int q = 0; q < n; ++q) {
    if (!in_sub[q]) perm.push_back(q);
  }
  const StateVector reordered = permute_qubits(psi, perm);
  const Eigen::Index rows = Eigen::Index{1} << subsystem.size();
  const Eigen::Index cols = reordered.dim() / rows;
  // Row-major reshape: the subsystem qubits lead, so they index rows.
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) m.row(r) = reordered.amplitudes().segment(r * cols, cols).transpose();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  double s = 0.0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double p = svd.singularValues()(i) * svd.singularValues()(i);
    if (p > 1e-300) s -= p * std::log(p);
  }
  return std::max(0.0, s);
}

}  // namespace lfising
