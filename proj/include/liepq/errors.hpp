#pragma once

#include <stdexcept>
#include <string>

namespace liepq {

// Shape mismatch between operands.
struct DimensionError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation was violated by the caller.
struct ContractError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

// A commutator of basis elements fell outside the span of the basis.
struct NotClosedError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// A map that should preserve a subspace (transpose, conjugation) does not.
struct NotStableError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// Operation not available for this realization or parameter choice.
struct UnsupportedError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

// Smallest-module dimension not known for this signature.
struct UnknownMError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

// Invariant that must hold by construction failed; always a bug.
struct InternalError : std::logic_error {
	using std::logic_error::logic_error;
};

} // namespace liepq
