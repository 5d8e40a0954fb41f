#include "theta/rational.hpp"

#include "theta/errors.hpp"

namespace theta {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q, const std::string& what) {
    if (!is_integer(q)) {
        throw InternalError(what + " is not an integer: " + to_string(q));
    }
    return q.get_num();
}

std::string to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

static_assert(sizeof(long) == sizeof(std::int64_t), "64-bit long expected");

bool fits_int64(const Integer& z) { return z.fits_slong_p(); }

std::int64_t to_int64(const Integer& z) {
    if (!fits_int64(z)) throw ResourceError("integer does not fit in 64 bits: " + z.get_str());
    return z.get_si();
}

Integer pow_int(long base, unsigned long exp) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
    if (base < 0 && (exp % 2 == 1)) r = -r;
    return r;
}

}  // namespace theta
