#pragma once

#include <stdexcept>
#include <string>

namespace milnorkit {

// Base class for everything this library throws on bad input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed JSON / braid text / schema violation.
struct ParseError : Error {
    using Error::Error;
};

// Structurally broken link diagram (arc degree, adjacency, ...).
struct InvalidDiagram : Error {
    using Error::Error;
};

// Generator, arc or component index out of range.
struct IndexError : Error {
    using Error::Error;
};

// Requested truncation degree / nilpotency class above the configured ceiling.
struct DegreeOverflow : Error {
    using Error::Error;
};

// Multi-index longer than the table it is looked up in.
struct LengthOverflow : Error {
    using Error::Error;
};

// Words of different free-group ranks combined.
struct RankMismatch : Error {
    using Error::Error;
};

// Series of different rank or degree bound combined.
struct ShapeMismatch : Error {
    using Error::Error;
};

// Series with non-unit constant term passed to invert().
struct NotAUnit : Error {
    using Error::Error;
};

// Two links with different component counts compared.
struct ComponentMismatch : Error {
    using Error::Error;
};

// A comparison whose vanishing hypothesis fails; message names the index.
struct HypothesisUnmet : Error {
    using Error::Error;
};

// Quotient map does not reach the whole finite group.
struct NotSurjective : Error {
    using Error::Error;
};

// Word handed to subgroup rewriting does not map to the identity.
struct NotInKernel : Error {
    using Error::Error;
};

// Iterative longitude reduction failed to stabilize. Internal bug, not user input.
struct NonConvergence : Error {
    using Error::Error;
};

// Broken internal invariant (overflow in exact arithmetic, inconsistent state).
struct InternalError : Error {
    using Error::Error;
};

} // namespace milnorkit
