#include <doctest.h>

#include <complex>

#include "theta/characters.hpp"
#include "theta/conjugacy.hpp"
#include "theta/errors.hpp"
#include "theta/group.hpp"

using namespace theta;

namespace {

std::vector<FamilyParams> suite() {
    std::vector<FamilyParams> v;
    for (long n : {1, 2, 3, 4, 6, 9, 10}) v.push_back(FamilyParams::cyclic(n));
    for (long p = 1; p <= 7; ++p) v.push_back(FamilyParams::binary_dihedral(p));
    for (long k = 0; k <= 2; ++k) {
        for (long p : {3, 5, 9}) v.push_back(FamilyParams::dprime(k, p));
    }
    v.push_back(FamilyParams::tstar());
    v.push_back(FamilyParams::tprime(1));
    v.push_back(FamilyParams::tprime(2));
    v.push_back(FamilyParams::ostar());
    v.push_back(FamilyParams::istar());
    return v;
}

struct Built {
    FiniteGroup g;
    ClassData cd;
    CharacterTable t;
};

Built build(const FamilyParams& f) {
    FiniteGroup g = construct_family(f);
    ClassData cd = compute_classes(g);
    CharacterTable t = family_table(f, g, cd);
    return {std::move(g), std::move(cd), std::move(t)};
}

// a_ijk = |C_i||C_j|/|G| sum_chi chi(i) chi(j) conj(chi(k)) / chi(1), compared with the
// number of x in C_i with x^-1 z_k in C_j.
void check_structure_constants(const FiniteGroup& g, const ClassData& cd, const CharacterTable& t) {
    const std::size_t r = cd.num_classes();
    std::vector<std::vector<Elem>> members(r);
    for (Elem x = 0; x < g.order(); ++x) members[cd.class_of[x]].push_back(x);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < r; ++k) {
            std::vector<long> count(r, 0);
            const Elem z = cd.representatives[k];
            for (Elem x : members[i]) ++count[cd.class_of[g.mul(g.inv(x), z)]];
            for (std::size_t j = 0; j < r; ++j) {
                CycloNumber s;
                for (std::size_t c = 0; c < t.num_rows(); ++c) {
                    s += (t.values[c][i] * t.values[c][j] * t.values[c][k].conj()).scaled(Rational(1, t.degrees[c]));
                }
                s = s.scaled(Rational(static_cast<long>(cd.sizes[i] * cd.sizes[j]), static_cast<long>(g.order())));
                CAPTURE(i);
                CAPTURE(j);
                CAPTURE(k);
                CHECK(s == CycloNumber(count[j]));
            }
        }
    }
}

}  // namespace

TEST_CASE("orthogonality of family tables") {
    for (const auto& f : suite()) {
        CAPTURE(family_name(f));
        const Built b = build(f);
        CHECK(b.t.num_rows() == b.cd.num_classes());
        const auto rep = check_orthogonality(b.t, b.g.order());
        CHECK(rep.ok());
        CAPTURE(rep.detail);
    }
}

TEST_CASE("class algebra structure constants agree with multiplication") {
    for (const auto& f : suite()) {
        if (construct_family(f).order() > 72) continue;
        CAPTURE(family_name(f));
        const Built b = build(f);
        check_structure_constants(b.g, b.cd, b.t);
    }
    const Built o = build(FamilyParams::ostar());
    check_structure_constants(o.g, o.cd, o.t);
    const Built i = build(FamilyParams::istar());
    check_structure_constants(i.g, i.cd, i.t);
}

TEST_CASE("Frobenius-Schur indicators") {
    // nu(chi) = (1/|G|) sum |C| chi(g^2) is 1 or -1 for real characters and 0 otherwise
    for (const auto& f : suite()) {
        CAPTURE(family_name(f));
        const Built b = build(f);
        for (std::size_t c = 0; c < b.t.num_rows(); ++c) {
            CycloNumber nu;
            for (std::size_t k = 0; k < b.cd.num_classes(); ++k) {
                nu += b.t.values[c][b.cd.square_class[k]].scaled(static_cast<long>(b.cd.sizes[k]));
            }
            nu = nu.scaled(Rational(1, static_cast<long>(b.g.order())));
            const auto q = nu.as_rational();
            REQUIRE(q.has_value());
            CHECK((*q == 1 || *q == -1 || *q == 0));
            CHECK((*q != 0) == static_cast<bool>(b.t.real_flags[c]));
        }
    }
}

TEST_CASE("values from the printed tables") {
    const Built t = build(FamilyParams::tstar());
    const CycloNumber w = CycloNumber::root(3, 1);
    // V5 at z is -zeta_3 for the class of z, V7 at x^2y is -1
    bool found_v5 = false;
    const auto cz = t.cd.class_of[t.g.evaluate("z")];
    const auto cxy = t.cd.class_of[t.g.evaluate("x^2y")];
    for (std::size_t r = 0; r < t.t.num_rows(); ++r) {
        if (t.t.degrees[r] == 3) CHECK(t.t.values[r][cxy] == CycloNumber(-1));
        if (t.t.degrees[r] == 2 && t.t.values[r][cz] == -w) found_v5 = true;
    }
    CHECK(found_v5);

    const Built i = build(FamilyParams::istar());
    const CycloNumber phi = -(CycloNumber::root(5, 2) + CycloNumber::root(5, 3));
    const auto cb = i.cd.class_of[i.g.evaluate("b")];
    int phis = 0;
    for (std::size_t r = 0; r < i.t.num_rows(); ++r) phis += i.t.values[r][cb] == phi;
    CHECK(phis == 2);  // A2 and A4
    CHECK(real_char_sum(i.t, 0) == 1 + 2 + 2 + 3 + 3 + 4 + 4 + 5 + 6);
}

TEST_CASE("d2 from characters on the binary polyhedral groups") {
    auto d2 = [](const FamilyParams& f) {
        const Built b = build(f);
        return d2_char_formula(b.t, b.cd);
    };
    CHECK(d2(FamilyParams::tstar()) == 9);
    CHECK(d2(FamilyParams::ostar()) == 34);
    CHECK(d2(FamilyParams::istar()) == 59);
}

TEST_CASE("real character sums") {
    // Z(n): real characters are trivial and, for even n, the sign character
    for (long n = 1; n <= 12; ++n) {
        const Built b = build(FamilyParams::cyclic(n));
        for (long m = 0; m < n; ++m) {
            const auto c = b.cd.class_of[b.g.pow(*b.g.named('a'), m)];
            CHECK(real_char_sum(b.t, c) == (n % 2 == 0 ? 1 + (m % 2 == 0 ? 1 : -1) : 1));
        }
        long real_rows = 0;
        for (bool r : b.t.real_flags) real_rows += r;
        CHECK(real_rows == (n % 2 == 0 ? 2 : 1));
    }
}

TEST_CASE("product tables") {
    const Built a = build(FamilyParams::cyclic(5));
    const Built b = build(FamilyParams::tstar());
    const CharacterTable t = product_table(a.t, b.t);
    const ClassData cd = product_classes(a.cd, b.cd);
    CHECK(t.num_rows() == 35);
    CHECK(check_orthogonality(t, 120).ok());
    const FiniteGroup g = direct_product(a.g, b.g);
    check_structure_constants(g, cd, t);
}

TEST_CASE("sparse forms of product tables match the values") {
    const Built a = build(FamilyParams::cyclic(11));
    const Built b = build(FamilyParams::binary_dihedral(3));
    const CharacterTable t = product_table(product_table(a.t, b.t), build(FamilyParams::tstar()).t);
    REQUIRE(t.packed.size() == t.num_rows());
    CycloAccumulator acc(t.conductor);
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        for (std::size_t c = 0; c < t.num_classes(); ++c) {
            acc.clear();
            acc.add(t.packed[i][c], 1);
            CHECK(acc.value() == t.values[i][c]);
        }
    }
}

TEST_CASE("pretty printing") {
    CHECK(pretty(CycloNumber(-2)) == "-2");
    CHECK(pretty(CycloNumber::root(4, 1)) == "i");
    CHECK(pretty(CycloNumber::root(8, 1) + CycloNumber::root(8, 7)) == "sqrt2");
    CHECK(pretty(-(CycloNumber::root(5, 2) + CycloNumber::root(5, 3))) == "phi");
    CHECK(pretty(CycloNumber::root(3, 2)) == "z3^2");
    const std::string csv = format_table_csv(build(FamilyParams::ostar()).t);
    CHECK(csv.rfind("irreducible,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
}
