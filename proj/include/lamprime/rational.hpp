#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lamprime {

/// Exact rational scalar used for every objective, LP and certificate value.
using Rational = mpq_class;

/// Thrown when a caller violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an input document cannot be parsed.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "num/den", an integer, or a finite decimal ("0.125", "-3.5e-2") exactly.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; integers are written as "num/1" so that every
/// value round-trips through the same shape.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// 2^-e as an exact rational.
Rational pow2_neg(unsigned e);

/// base^e for non-negative integer exponents.
Rational pow(const Rational& base, unsigned e);

mpz_class floor(const Rational& q);
mpz_class ceil(const Rational& q);

inline Rational binom2(std::int64_t n) { return Rational(n * (n - 1) / 2); }

}  // namespace lamprime
