// Copyright 2026 The Blindgate Authors
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

#ifndef BLINDGATE_ERRORS_H
#define BLINDGATE_ERRORS_H

#include <stdexcept>
#include <string>

namespace blindgate {

/// Operands have incompatible widths or shapes.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input violates a documented precondition (non-unitary gate, bad density matrix, ...).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Requested size exceeds what the dense simulator supports.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A gate does not decompose over the support basis it was paired with.
struct UnsupportedGateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A dense unitary was expected to be Clifford but is not.
struct NotCliffordError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Something that holds by construction did not hold. Always a bug.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace blindgate

#endif
