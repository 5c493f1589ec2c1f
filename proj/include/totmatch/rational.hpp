#ifndef TOTMATCH_RATIONAL_HPP
#define TOTMATCH_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace totmatch {

// Exact arbitrary-precision rational. GMP keeps values reduced with a
// positive denominator, which every comparison and serialization below
// relies on.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using QVec = std::vector<Rational>;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    // Division canonicalizes; the two-argument mpq constructor does not.
    return Rational(num) / Rational(den);
}

// Accepts "p" or "p/q" with optional leading minus on p; q must be positive.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

std::string to_string(const QVec& values, char separator = ' ');

inline bool is_integer(const Rational& value) { return denominator(value) == 1; }

} // namespace totmatch

#endif
