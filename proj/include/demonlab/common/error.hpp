// Copyright 2026 The demonlab Authors
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

#pragma once

#include <stdexcept>

namespace demonlab {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Qubit counts or matrix sizes that do not line up.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// A precondition on an argument failed (bad index, empty set, size out of range).
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

/// A quantum state violates its type invariants (not normalized, not PSD, ...).
class InvalidState : public Error {
   public:
    using Error::Error;
};

class RegressionError : public Error {
   public:
    using Error::Error;
};

/// Unknown key, unparsable value or out-of-range setting in a run configuration.
class ConfigError : public Error {
   public:
    using Error::Error;
};

/// A numerical invariant (norm, trace, non-negativity) drifted past tolerance mid-run.
class InvariantViolation : public Error {
   public:
    using Error::Error;
};

}  // namespace demonlab
