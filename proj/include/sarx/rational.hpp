#ifndef SARX_RATIONAL_HPP
#define SARX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace sarx {

/// Arbitrary-precision rational, always kept in canonical form
/// (reduced, positive denominator, zero is 0/1).
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Parses "8", "-3/2", "0.001", "1.5e-3" into an exact rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parseRational(std::string_view text);

/// Canonical "p/q" form, e.g. "-8/1", "1/1000".
std::string toFractionString(const Rational& r);

inline bool isZero(const Rational& r) { return sgn(r) == 0; }

}  // namespace sarx

#endif  // SARX_RATIONAL_HPP
