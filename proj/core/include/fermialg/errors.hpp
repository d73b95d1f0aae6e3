// Copyright 2026 The fermialg Authors
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
#include <string>

namespace fermialg {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A dimension or problem size exceeds a configured cap.
struct CapacityError : Error {
    using Error::Error;
};

/// Operands have incompatible dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// An argument violates a precondition (bad mode index, non-Hermitian input,
/// unnormalized state, unsupported qubit count, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A computed object failed a structural check (e.g. a basis that is not
/// closed under the bracket).
struct NumericalError : Error {
    using Error::Error;
};

/// Malformed text input: operator specs or JSON documents.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace fermialg
