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

#include "lfising/pauli.hpp"

#include <bit>

#include "lfising/errors.hpp"

namespace lfising {

PauliString::PauliString(std::string_view word, QubitLayout layout)
    : n_qubits_(static_cast<int>(word.size())), layout_(layout) {
  if (word.empty() || word.size() > 62) {
    throw DomainError("PauliString: word length must be in [1, 62]");
  }
  for (std::size_t i = 0; i < word.size(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << (word.size() - 1 - i);
    switch (word[i]) {
      case 'I':
        break;
      case 'X':
        x_mask_ |= bit;
        break;
      case 'Z':
        z_mask_ |= bit;
        break;
      case 'Y':
        x_mask_ |= bit;
        z_mask_ |= bit;
        break;
      default:
        throw DomainError(std::string("PauliString: invalid letter '") + word[i] + "'");
    }
  }
}

PauliString PauliString::from_masks(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
                                    QubitLayout layout) {
  if (n_qubits < 1 || n_qubits > 62) throw DomainError("PauliString: qubit count out of range");
  const std::uint64_t full = (std::uint64_t{1} << n_qubits) - 1;
  if ((x_mask | z_mask) & ~full) throw DomainError("PauliString: mask exceeds qubit count");
  PauliString p;
  p.n_qubits_ = n_qubits;
  p.x_mask_ = x_mask;
  p.z_mask_ = z_mask;
  p.layout_ = layout;
  return p;
}

int PauliString::y_count() const noexcept { return std::popcount(x_mask_ & z_mask_); }

std::string PauliString::word() const {
  std::string out(n_qubits_, 'I');
  for (int i = 0; i < n_qubits_; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << (n_qubits_ - 1 - i);
    const bool x = x_mask_ & bit;
    const bool z = z_mask_ & bit;
    out[i] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

}  // namespace lfising
