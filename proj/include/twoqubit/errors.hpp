// Copyright 2026 The twoqubit Authors
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

namespace twoqubit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violated a documented precondition (index range, Hermiticity,
/// trace, positivity, normalization, parameter range).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A closed-form result failed its own consistency check. Signals a
/// coefficient or branch bug; never returned silently.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// The requested quantity is not defined for this input (e.g. a bound that
/// requires a full-rank state).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// An iterative oracle hit its iteration cap.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

}  // namespace twoqubit
