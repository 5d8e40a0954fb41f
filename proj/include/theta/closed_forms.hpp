#ifndef THETA_CLOSED_FORMS_HPP
#define THETA_CLOSED_FORMS_HPP

#include <string>

#include "theta/rational.hpp"

namespace theta {

/// Number of partitions of m into at most three parts; 0 for m < 0.
Integer p3(long m);
/// Number of partitions of n into at most two parts, 1 + floor(n/2).
Integer p2(long n);

/// The mod-2/mod-3 quadratics for p3(n) and p3(n - 3), n >= 1.
Rational p3_quadratic(long n);
Rational p3_shifted_quadratic(long n);

enum class SpecCase { A, B1, B2, C, D, E, F, G };

/// Z_n (case a) or Z_m x (one of the six non-cyclic families).
struct SphericalSpec {
    SpecCase kase = SpecCase::A;
    long m = 1;
    long n = 1;
    long p = 0;
    long k = 0;

    static SphericalSpec cyclic(long n);
    static SphericalSpec binary_dihedral(long m, long p);  // B1 or B2 by parity of p
    static SphericalSpec dprime(long m, long k, long p);
    static SphericalSpec tstar(long m);
    static SphericalSpec tprime(long m, long k);  // k == 1 gives case D
    static SphericalSpec ostar(long m);
    static SphericalSpec istar(long m);

    friend bool operator==(const SphericalSpec&, const SphericalSpec&) = default;
};

std::string case_name(SpecCase c);

/// Throws InvalidParameter naming the violated constraint.
void validate(const SphericalSpec& s);

Integer spec_order(const SphericalSpec& s);

struct ClosedDims {
    Integer dim_cpi;
    Integer dim_ker;
};

ClosedDims closed_dims(const SphericalSpec& s);
Integer closed_z2_orbit(const SphericalSpec& s);

}  // namespace theta

#endif
