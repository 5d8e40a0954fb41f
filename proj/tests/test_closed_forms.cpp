#include <doctest.h>

#include <numeric>

#include "theta/closed_forms.hpp"
#include "theta/errors.hpp"

using namespace theta;

namespace {

long brute_p3(long m) {
    if (m < 0) return 0;
    long c = 0;
    for (long x = 0; 3 * x <= m; ++x)
        for (long y = x; x + 2 * y <= m; ++y) c += (m - x - y) >= y;
    return c;
}

std::vector<SphericalSpec> sweep() {
    std::vector<SphericalSpec> v;
    for (long n = 1; n <= 200; ++n) v.push_back(SphericalSpec::cyclic(n));
    for (long m = 1; m <= 50; ++m) {
        for (long p = 1; p <= 50; ++p) {
            if (std::gcd(m, 2 * p) == 1) v.push_back(SphericalSpec::binary_dihedral(m, p));
            if (p >= 3 && p % 2 == 1 && std::gcd(m, 2 * p) == 1) {
                for (long k = 0; k <= 9; ++k) v.push_back(SphericalSpec::dprime(m, k, p));
            }
        }
        if (std::gcd(m, 6L) == 1) {
            v.push_back(SphericalSpec::tstar(m));
            v.push_back(SphericalSpec::ostar(m));
            for (long k = 2; k <= 9; ++k) v.push_back(SphericalSpec::tprime(m, k));
        }
        if (std::gcd(m, 30L) == 1) v.push_back(SphericalSpec::istar(m));
    }
    return v;
}

}  // namespace

TEST_CASE("p3 and p2") {
    CHECK(p3(6) == 7);
    CHECK(p3(-1) == 0);
    CHECK(p2(4) == 3);
    for (long m = -5; m <= 300; ++m) {
        CAPTURE(m);
        CHECK(p3(m) == brute_p3(m));
    }
    for (long n = 1; n <= 300; ++n) {
        CHECK(p3_quadratic(n) == Rational(p3(n)));
        CHECK(p3_shifted_quadratic(n) == Rational(p3(n - 3)));
        long two = 0;
        for (long x = 0; 2 * x <= n; ++x) ++two;
        CHECK(p2(n) == two);
    }
}

TEST_CASE("printed values") {
    CHECK(closed_dims(SphericalSpec::istar(1)).dim_cpi == 65);
    CHECK(closed_dims(SphericalSpec::istar(1)).dim_ker == 56);
    CHECK(closed_dims(SphericalSpec::binary_dihedral(1, 15)).dim_cpi == 107);
    CHECK(closed_dims(SphericalSpec::binary_dihedral(1, 15)).dim_ker == 90);
    CHECK(closed_dims(SphericalSpec::tprime(1, 9)).dim_cpi == 272668602);
    CHECK(closed_dims(SphericalSpec::tprime(1, 9)).dim_ker == 272645637);
    CHECK(closed_z2_orbit(SphericalSpec::istar(1)) == 9);
    CHECK(closed_z2_orbit(SphericalSpec::tstar(1)) == 5);
    CHECK(closed_z2_orbit(SphericalSpec::dprime(1, 0, 3)) == 5);

    const std::pair<long, long> table_d4p[] = {{4, 1},   {9, 4},   {11, 6},  {18, 11}, {20, 13},
                                               {30, 21}, {32, 23}, {44, 33}, {47, 36}, {61, 48},
                                               {64, 51}, {81, 66}, {84, 69}, {103, 86}, {107, 90}};
    for (long p = 1; p <= 15; ++p) {
        const auto d = closed_dims(SphericalSpec::binary_dihedral(1, p));
        CHECK(d.dim_cpi == table_d4p[p - 1].first);
        CHECK(d.dim_ker == table_d4p[p - 1].second);
    }
    const std::pair<long, long> table_t[] = {{15, 10},         {78, 66},          {570, 537},
                                             {4782, 4686},     {42042, 41757},    {375438, 374586},
                                             {3370170, 3367617}, {30305262, 30297606}, {272668602, 272645637}};
    for (long k = 1; k <= 9; ++k) {
        const auto d = closed_dims(SphericalSpec::tprime(1, k));
        CHECK(d.dim_cpi == table_t[k - 1].first);
        CHECK(d.dim_ker == table_t[k - 1].second);
    }
}

TEST_CASE("Tprime(1) is rerouted to the Tstar case") {
    CHECK(SphericalSpec::tprime(5, 1).kase == SpecCase::D);
    SphericalSpec raw;
    raw.kase = SpecCase::E;
    raw.k = 1;
    CHECK_THROWS_AS(closed_dims(raw), InvalidParameter);
}

TEST_CASE("integrality and the class-count identity over the sweep") {
    for (const auto& s : sweep()) {
        CAPTURE(case_name(s.kase));
        CAPTURE(s.m);
        CAPTURE(s.p);
        CAPTURE(s.k);
        const ClosedDims d = closed_dims(s);  // throws if a branch is not integral
        CHECK(d.dim_cpi - d.dim_ker == closed_z2_orbit(s));
        CHECK(d.dim_ker >= 0);
    }
}

TEST_CASE("dim - dim Ker is linear in m") {
    // second difference in m vanishes whenever three consecutive admissible m step evenly
    auto z2 = [](SpecCase c, long m) {
        switch (c) {
            case SpecCase::D: return closed_z2_orbit(SphericalSpec::tstar(m));
            case SpecCase::F: return closed_z2_orbit(SphericalSpec::ostar(m));
            case SpecCase::G: return closed_z2_orbit(SphericalSpec::istar(m));
            default: return closed_z2_orbit(SphericalSpec::tprime(m, 3));
        }
    };
    for (SpecCase c : {SpecCase::D, SpecCase::E, SpecCase::F}) {
        for (long m = 1; m + 12 <= 60; m += 6) CHECK(z2(c, m + 12) - 2 * z2(c, m + 6) + z2(c, m) == 0);
    }
    for (long m = 1; m + 60 <= 200; m += 30) CHECK(z2(SpecCase::G, m + 60) - 2 * z2(SpecCase::G, m + 30) + z2(SpecCase::G, m) == 0);
}

TEST_CASE("constraint violations") {
    CHECK_THROWS_AS(closed_dims(SphericalSpec::binary_dihedral(2, 3)), InvalidParameter);
    CHECK_THROWS_AS(closed_dims(SphericalSpec::binary_dihedral(3, 3)), InvalidParameter);
    CHECK_THROWS_AS(closed_dims(SphericalSpec::dprime(1, 0, 4)), InvalidParameter);
    CHECK_THROWS_AS(closed_dims(SphericalSpec::tstar(3)), InvalidParameter);
    CHECK_THROWS_AS(closed_dims(SphericalSpec::istar(5)), InvalidParameter);
    CHECK_THROWS_AS(closed_dims(SphericalSpec::cyclic(0)), InvalidParameter);
    CHECK_NOTHROW(closed_dims(SphericalSpec::istar(7)));
    CHECK(spec_order(SphericalSpec::dprime(5, 2, 3)) == 5 * 16 * 3);
}
