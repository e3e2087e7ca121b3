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

#ifndef LFISING_ERRORS_HPP
#define LFISING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lfising {

/// Input outside an operation's domain (bad size, negative mass, wrong grid frame, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense construction refused because the Hilbert space would exceed the size cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Bogoliubov block with vanishing gap and pairing (k = 0 at the critical coupling).
class DegenerateBlockError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The k1 = 0 mode of the massless light-cone split, which belongs to neither branch.
class ZeroModeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A massive light-front formula was handed m = 0; use the massless path instead.
class MasslessError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Numerical evidence of an operator/state convention bug, e.g. a Pauli expectation
/// with a non-negligible imaginary part.
class ConventionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lfising

#endif  // LFISING_ERRORS_HPP
