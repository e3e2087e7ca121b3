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

#ifndef LFISING_PAULI_HPP
#define LFISING_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace lfising {

// All Pauli matrices here are written in the occupation basis {|0>, |1>} where |0> is
// the empty mode and the -1 eigenstate of Z:
//
//   Z = diag(-1, +1),  X = [[0, 1], [1, 0]],  Y = i X Z = [[0, i], [-i, 0]].
//
// With this choice (X - iY)/2 = |0><1| annihilates and Z = 2 n - 1.

/// Which qubit-ordering convention a string's letters refer to.
enum class QubitLayout {
  Sites,          ///< qubit j is chain site j
  MomentumPairs,  ///< qubits run (-k1, k1, -k2, k2, ...)
};

/// A word over {I, X, Y, Z}, one letter per qubit. Letter 0 acts on the most significant
/// bit of a basis index (the leftmost tensor factor).
class PauliString {
 public:
  /// Throws DomainError for letters outside IXYZ, empty words or more than 62 qubits.
  explicit PauliString(std::string_view word, QubitLayout layout = QubitLayout::Sites);

  /// Builds the string with the given X/Z bit masks (bit i of a mask = qubit n-1-i).
  static PauliString from_masks(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
                                QubitLayout layout = QubitLayout::Sites);

  int size() const noexcept { return n_qubits_; }
  QubitLayout layout() const noexcept { return layout_; }
  std::uint64_t x_mask() const noexcept { return x_mask_; }
  std::uint64_t z_mask() const noexcept { return z_mask_; }
  int y_count() const noexcept;
  std::string word() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  PauliString() = default;
  int n_qubits_ = 0;
  std::uint64_t x_mask_ = 0;
  std::uint64_t z_mask_ = 0;
  QubitLayout layout_ = QubitLayout::Sites;
};

}  // namespace lfising

#endif  // LFISING_PAULI_HPP
