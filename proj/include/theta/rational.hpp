#ifndef THETA_RATIONAL_HPP
#define THETA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace theta {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_integer(const Rational& q);

/// Returns q as an integer; throws InternalError naming `what` otherwise.
Integer to_integer(const Rational& q, const std::string& what);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

Integer pow_int(long base, unsigned long exp);

}  // namespace theta

#endif
