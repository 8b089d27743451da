// Copyright 2026 The qcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qcf {

/// Root of the qcf exception hierarchy.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operand shapes or declared dimensions do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix required to be Hermitian is not, beyond tolerance.
class HermiticityError : public Error {
 public:
  using Error::Error;
};

/// An eigenvalue of a nominally PSD operator is negative beyond tolerance.
class NegativityError : public Error {
 public:
  using Error::Error;
};

/// The trace of a state differs from 1 beyond tolerance.
class TraceError : public Error {
 public:
  using Error::Error;
};

/// POVM effects do not sum to the identity.
class CompletenessError : public Error {
 public:
  using Error::Error;
};

/// Kraus operators do not satisfy sum_m K_m^dag K_m = I.
class TracePreservationError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be inverted (or inverse-square-rooted) is singular.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A state required to be full rank is rank deficient.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Conditioning on an outcome whose marginal probability is numerically zero.
class ZeroMarginalError : public Error {
 public:
  using Error::Error;
};

/// A no-signalling check was requested on a scenario without an alternate POVM.
class MissingAltPovmError : public Error {
 public:
  using Error::Error;
};

/// Requested preset scenario does not exist.
class UnknownPresetError : public Error {
 public:
  using Error::Error;
};

/// Scenario text could not be parsed; the message carries the field path.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An identity that holds for every valid input failed. Indicates a bug, not
/// bad input.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcf
