#pragma once

#include <stdexcept>
#include <string>

namespace z2z2u {

// Enumeration would exceed the configured codeword cap.
struct CodeTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation that needs a nonzero codeword was handed the zero code {0}.
struct ZeroCode : std::domain_error {
    using std::domain_error::domain_error;
};

// The MacWilliams transform produced a non-integer coefficient; the input
// enumerator cannot belong to a linear code of the claimed size.
struct NonIntegerResult : std::domain_error {
    using std::domain_error::domain_error;
};

// A one-weight-only operation was handed a code with mixed weights.
struct NotOneWeight : std::domain_error {
    using std::domain_error::domain_error;
};

// A hypothesis-checked operation found an identically-zero coordinate.
struct ZeroColumn : std::domain_error {
    using std::domain_error::domain_error;
};

// Cyclic generator tuple failed a hard validity condition.
struct ValidationFailed : std::domain_error {
    using std::domain_error::domain_error;
};

// A constructed cyclic code is not closed under the shift (construction bug).
struct NotShiftClosed : std::logic_error {
    using std::logic_error::logic_error;
};

// A search exceeded its tuple or size budget.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text input could not be parsed; carries a 1-based line number.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

} // namespace z2z2u
