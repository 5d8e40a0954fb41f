#include "theta/closed_forms.hpp"

#include <numeric>

#include "theta/errors.hpp"

namespace theta {

namespace {

Rational R(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational Z(const Integer& z) { return Rational(z); }

long mod(long a, long b) { return ((a % b) + b) % b; }

Integer integral(const Rational& q, const SphericalSpec& s, const char* what) {
    if (!is_integer(q)) {
        throw InternalError(std::string(what) + " for case " + case_name(s.kase) + " is not integral: " + to_string(q));
    }
    return q.get_num();
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidParameter(msg);
}

}  // namespace

Integer p3(long m) {
    if (m < 0) return 0;
    // round((m+3)^2 / 12)
    Integer t = Integer(m + 3) * (m + 3);
    Integer q = (t + 6) / 12;
    return q;
}

Integer p2(long n) {
    if (n < 0) return 0;
    return Integer(1 + n / 2);
}

Rational p3_quadratic(long n) {
    const bool even = n % 2 == 0, three = n % 3 == 0;
    Rational base = R(n * n, 12) + R(n, 2);
    if (even && three) return base + 1;
    if (even) return base + R(2, 3);
    if (three) return base + R(3, 4);
    return base + R(5, 12);
}

Rational p3_shifted_quadratic(long n) {
    const bool even = n % 2 == 0, three = n % 3 == 0;
    Rational base = R(n * n, 12);
    if (even && three) return base;
    if (even) return base - R(1, 3);
    if (three) return base + R(1, 4);
    return base - R(1, 12);
}

SphericalSpec SphericalSpec::cyclic(long n) {
    SphericalSpec s;
    s.kase = SpecCase::A;
    s.n = n;
    return s;
}

SphericalSpec SphericalSpec::binary_dihedral(long m, long p) {
    SphericalSpec s;
    s.kase = p % 2 == 0 ? SpecCase::B1 : SpecCase::B2;
    s.m = m;
    s.p = p;
    return s;
}

SphericalSpec SphericalSpec::dprime(long m, long k, long p) {
    SphericalSpec s;
    s.kase = SpecCase::C;
    s.m = m;
    s.k = k;
    s.p = p;
    return s;
}

SphericalSpec SphericalSpec::tstar(long m) {
    SphericalSpec s;
    s.kase = SpecCase::D;
    s.m = m;
    return s;
}

SphericalSpec SphericalSpec::tprime(long m, long k) {
    if (k == 1) return tstar(m);
    SphericalSpec s;
    s.kase = SpecCase::E;
    s.m = m;
    s.k = k;
    return s;
}

SphericalSpec SphericalSpec::ostar(long m) {
    SphericalSpec s;
    s.kase = SpecCase::F;
    s.m = m;
    return s;
}

SphericalSpec SphericalSpec::istar(long m) {
    SphericalSpec s;
    s.kase = SpecCase::G;
    s.m = m;
    return s;
}

std::string case_name(SpecCase c) {
    switch (c) {
        case SpecCase::A: return "a";
        case SpecCase::B1: return "b1";
        case SpecCase::B2: return "b2";
        case SpecCase::C: return "c";
        case SpecCase::D: return "d";
        case SpecCase::E: return "e";
        case SpecCase::F: return "f";
        case SpecCase::G: return "g";
    }
    return "?";
}

void validate(const SphericalSpec& s) {
    const std::string tag = "case (" + case_name(s.kase) + "): ";
    if (s.kase == SpecCase::A) {
        require(s.n >= 1, tag + "n >= 1 required");
        return;
    }
    require(s.m >= 1, tag + "m >= 1 required");
    switch (s.kase) {
        case SpecCase::B1:
        case SpecCase::B2:
            require(s.p >= 1, tag + "p > 0 required");
            require((s.p % 2 == 0) == (s.kase == SpecCase::B1), tag + "parity of p does not match the case");
            require(std::gcd(s.m, 2 * s.p) == 1, tag + "(m, 2p) = 1 required");
            break;
        case SpecCase::C:
            require(s.k >= 0, tag + "k >= 0 required");
            require(s.k <= 1000, tag + "k <= 1000 required");
            require(s.p >= 3 && s.p % 2 == 1, tag + "p >= 3 odd required");
            require(std::gcd(s.m, 2 * s.p) == 1, tag + "(m, 2p) = 1 required");
            break;
        case SpecCase::D:
        case SpecCase::F:
            require(std::gcd(s.m, 6L) == 1, tag + "(m, 6) = 1 required");
            break;
        case SpecCase::E:
            require(s.k >= 2, tag + "k >= 2 required (k = 1 is case d)");
            require(s.k <= 1000, tag + "k <= 1000 required");
            require(std::gcd(s.m, 6L) == 1, tag + "(m, 6) = 1 required");
            break;
        case SpecCase::G:
            require(std::gcd(s.m, 30L) == 1, tag + "(m, 30) = 1 required");
            break;
        case SpecCase::A: break;
    }
}

Integer spec_order(const SphericalSpec& s) {
    const Integer m(s.m);
    switch (s.kase) {
        case SpecCase::A: return Integer(s.n);
        case SpecCase::B1:
        case SpecCase::B2: return m * 4 * s.p;
        case SpecCase::C: return m * pow_int(2, static_cast<unsigned long>(s.k + 2)) * s.p;
        case SpecCase::D: return m * 24;
        case SpecCase::E: return m * 8 * pow_int(3, static_cast<unsigned long>(s.k));
        case SpecCase::F: return m * 48;
        case SpecCase::G: return m * 120;
    }
    return 0;
}

ClosedDims closed_dims(const SphericalSpec& s) {
    validate(s);
    ClosedDims out;
    if (s.kase == SpecCase::A) {
        const Rational dim = p3_quadratic(s.n), ker = p3_shifted_quadratic(s.n);
        out.dim_cpi = integral(dim, s, "dim");
        out.dim_ker = integral(ker, s, "dim Ker");
        if (out.dim_cpi != p3(s.n) || out.dim_ker != p3(s.n - 3)) {
            throw InternalError("case (a) quadratic disagrees with p3 at n = " + std::to_string(s.n));
        }
        return out;
    }

    const Rational m(s.m), p(s.p);
    const bool A = mod(s.p, 3) != 0 && mod(s.m, 3) != 0;
    Rational dim, ker;
    switch (s.kase) {
        case SpecCase::B1: {
            const Rational common = m * m * p * p / 6 + m * m * p / 2 + R(2, 3) * m * m + p * p / 6;
            dim = common + R(3, 2) * m * p + m + p / 2 + (A ? R(1) : R(4, 3));
            ker = common + m * p - m / 2 - (A ? R(1, 2) : R(1, 6));
            break;
        }
        case SpecCase::B2: {
            const Rational common = m * m * p * p / 6 + m * m * p / 2 + R(2, 3) * m * m + p * p / 6;
            dim = common + R(3, 2) * m * p + m / 2 + (A ? R(1, 2) : R(5, 6));
            ker = common + m * p - m - p / 2 + (A ? R(0) : R(1, 3));
            break;
        }
        case SpecCase::C: {
            const Rational K = Z(pow_int(2, static_cast<unsigned long>(s.k)));
            const Rational common =
                K * K * m * m * p * p / 6 + K * K * m * m * p / 2 + R(2, 3) * K * K * m * m + p * p / 6;
            dim = common + R(3, 2) * K * m * p + K * m / 2 + (A ? R(1, 2) : R(5, 6));
            ker = common + K * m * p - K * m - p / 2 + (A ? R(0) : R(1, 3));
            break;
        }
        case SpecCase::D:
            dim = R(19, 3) * m * m + 6 * m + R(8, 3);
            ker = R(19, 3) * m * m + R(5, 2) * m + R(7, 6);
            break;
        case SpecCase::E: {
            const Rational T = Z(pow_int(3, static_cast<unsigned long>(s.k)));
            const Rational lead = 19 * Z(pow_int(3, static_cast<unsigned long>(2 * s.k - 3))) * m * m;
            dim = lead + 2 * T * m + 3;
            ker = lead + R(5, 6) * T * m + R(3, 2);
            break;
        }
        case SpecCase::F:
            dim = R(34, 3) * m * m + 12 * m + R(35, 3);
            ker = R(34, 3) * m * m + 8 * m + R(23, 3);
            break;
        case SpecCase::G:
            dim = R(74, 3) * m * m + 19 * m + R(64, 3);
            ker = R(74, 3) * m * m + R(29, 2) * m + R(101, 6);
            break;
        case SpecCase::A: break;
    }
    out.dim_cpi = integral(dim, s, "dim");
    out.dim_ker = integral(ker, s, "dim Ker");
    return out;
}

Integer closed_z2_orbit(const SphericalSpec& s) {
    validate(s);
    const Rational m(s.m), p(s.p);
    Rational v;
    switch (s.kase) {
        case SpecCase::A: return p2(s.n);
        case SpecCase::B1: v = m * p / 2 + R(3, 2) * m + p / 2 + R(3, 2); break;
        case SpecCase::B2: v = m * p / 2 + R(3, 2) * m + p / 2 + R(1, 2); break;
        case SpecCase::C: {
            const Rational K = Z(pow_int(2, static_cast<unsigned long>(s.k)));
            v = K * m * p / 2 + R(3, 2) * K * m + p / 2 + R(1, 2);
            break;
        }
        case SpecCase::D: v = R(7, 2) * m + R(3, 2); break;
        case SpecCase::E: v = R(7, 6) * Z(pow_int(3, static_cast<unsigned long>(s.k))) * m + R(3, 2); break;
        case SpecCase::F: v = 4 * m + 4; break;
        case SpecCase::G: v = R(9, 2) * m + R(9, 2); break;
    }
    return integral(v, s, "dim (C pi-hat)_Z2");
}

}  // namespace theta
