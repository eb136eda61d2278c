#ifndef APERY8_ERRORS_HPP
#define APERY8_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace apery8 {

// Division by a series with no invertible leading coefficient.
struct DivisionByZeroSeries : std::domain_error {
    using std::domain_error::domain_error;
};

// compose(outer, inner) requires inner to vanish at the origin.
struct CompositionValuationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Eta quotient whose 24th-root prefactor is not an integer power of q.
struct FractionalExponentError : std::domain_error {
    using std::domain_error::domain_error;
};

// A recurrence step that must stay integral left a remainder.
struct IntegralityError : std::logic_error {
    using std::logic_error::logic_error;
};

// Continuant pair violating the determinant identity.
struct DeterminantMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

// Convergent with a vanishing denominator.
struct ZeroDenominator : std::domain_error {
    using std::domain_error::domain_error;
};

// Numeric evaluation outside the supported domain (e.g. Im tau too small).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Two independent routes to the same constant disagree at the target precision.
struct PrecisionUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace apery8

#endif
