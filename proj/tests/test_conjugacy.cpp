#include <doctest.h>

#include <set>

#include "theta/conjugacy.hpp"
#include "theta/group.hpp"

using namespace theta;

namespace {

// Brute-force classes: x ~ y iff y = t x t^-1 for some t.
std::vector<std::set<Elem>> brute_classes(const FiniteGroup& g) {
    std::vector<std::set<Elem>> out;
    std::vector<char> done(g.order(), 0);
    for (Elem x = 0; x < g.order(); ++x) {
        if (done[x]) continue;
        std::set<Elem> c;
        for (Elem t = 0; t < g.order(); ++t) c.insert(g.mul(g.mul(t, x), g.inv(t)));
        for (Elem y : c) done[y] = 1;
        out.push_back(std::move(c));
    }
    return out;
}

struct PowerRow {
    const char* g;
    std::size_t size;
    const char* square;
    const char* cube;
};

void check_power_table(const FamilyParams& f, const std::vector<PowerRow>& rows, std::size_t num_classes) {
    const FiniteGroup g = construct_family(f);
    const ClassData cd = compute_classes(g);
    CHECK(cd.num_classes() == num_classes);
    std::set<std::uint32_t> seen;
    for (const auto& r : rows) {
        CAPTURE(r.g);
        const auto c = cd.class_of[g.evaluate(r.g)];
        seen.insert(c);
        CHECK(cd.sizes[c] == r.size);
        CHECK(cd.square_class[c] == cd.class_of[g.evaluate(r.square)]);
        CHECK(cd.cube_class[c] == cd.class_of[g.evaluate(r.cube)]);
    }
    CHECK(seen.size() == num_classes);
}

std::vector<FamilyParams> suite() {
    std::vector<FamilyParams> v;
    for (long n = 1; n <= 12; ++n) v.push_back(FamilyParams::cyclic(n));
    for (long p = 1; p <= 8; ++p) v.push_back(FamilyParams::binary_dihedral(p));
    for (long k = 0; k <= 2; ++k) {
        for (long p : {3, 5, 9}) v.push_back(FamilyParams::dprime(k, p));
    }
    v.push_back(FamilyParams::tstar());
    v.push_back(FamilyParams::tprime(2));
    v.push_back(FamilyParams::ostar());
    v.push_back(FamilyParams::istar());
    return v;
}

}  // namespace

TEST_CASE("classes match brute-force conjugation") {
    for (const auto& f : suite()) {
        CAPTURE(family_name(f));
        const FiniteGroup g = construct_family(f);
        const ClassData cd = compute_classes(g);
        const auto brute = brute_classes(g);
        REQUIRE(cd.num_classes() == brute.size());
        for (std::size_t i = 0; i < brute.size(); ++i) {
            const auto c = cd.class_of[*brute[i].begin()];
            CHECK(cd.sizes[c] == brute[i].size());
            CHECK(cd.representatives[c] == *brute[i].begin());
            for (Elem x : brute[i]) CHECK(cd.class_of[x] == c);
        }
        for (Elem x = 0; x < g.order(); ++x) {
            CHECK(cd.square_class[cd.class_of[x]] == cd.class_of[g.mul(x, x)]);
            CHECK(cd.cube_class[cd.class_of[x]] == cd.class_of[g.mul(g.mul(x, x), x)]);
            CHECK(cd.inverse_class[cd.class_of[x]] == cd.class_of[g.inv(x)]);
        }
    }
}

TEST_CASE("class numbers of the families") {
    CHECK(compute_classes(construct_family(FamilyParams::tstar())).num_classes() == 7);
    CHECK(compute_classes(construct_family(FamilyParams::ostar())).num_classes() == 8);
    CHECK(compute_classes(construct_family(FamilyParams::istar())).num_classes() == 9);
    for (long p = 1; p <= 10; ++p) CHECK(compute_classes(construct_family(FamilyParams::binary_dihedral(p))).num_classes() == static_cast<std::size_t>(p + 3));
    // 7 classes for each residue of z^3m
    for (long k = 1; k <= 3; ++k) {
        const auto n = compute_classes(construct_family(FamilyParams::tprime(k))).num_classes();
        CHECK(n == static_cast<std::size_t>(7 * pow_int(3, k - 1).get_si()));
    }
}

TEST_CASE("power maps of Tstar") {
    check_power_table(FamilyParams::tstar(),
                      {{"1", 1, "1", "1"},
                       {"z", 4, "z^2", "1"},
                       {"x^2y", 6, "x^2", "x^2y"},
                       {"x^2", 1, "1", "x^2"},
                       {"z^2", 4, "z", "1"},
                       {"x^2z", 4, "z^2", "x^2"},
                       {"x^3z^2", 4, "z", "x^2"}},
                      7);
}

TEST_CASE("power maps of Ostar") {
    check_power_table(FamilyParams::ostar(),
                      {{"1", 1, "1", "1"},
                       {"ab", 12, "a^3", "ab"},
                       {"a^2", 8, "a^2", "1"},
                       {"b^2", 6, "a^3", "b^2"},
                       {"a^3", 1, "1", "a^3"},
                       {"b", 6, "b^2", "a^2b"},
                       {"a", 8, "a^2", "a^3"},
                       {"a^2b", 6, "b^2", "b"}},
                      8);
}

TEST_CASE("power maps of Istar") {
    check_power_table(FamilyParams::istar(),
                      {{"1", 1, "1", "1"},
                       {"a^3", 1, "1", "a^3"},
                       {"(a^2b^2)^2a", 30, "a^3", "(a^2b^2)^2a"},
                       {"aba^2b", 20, "aba^2b", "1"},
                       {"a", 20, "aba^2b", "a^3"},
                       {"(a^2b^2)^2", 12, "a^2b^2", "a^2b^2"},
                       {"a^2b^2", 12, "(a^2b^2)^2", "(a^2b^2)^2"},
                       {"a^2b^2a", 12, "a^2b^2", "b"},
                       {"b", 12, "(a^2b^2)^2", "a^2b^2a"}},
                      9);
}

TEST_CASE("product classes equal classes of the product") {
    const std::vector<std::pair<FamilyParams, FamilyParams>> pairs{
        {FamilyParams::cyclic(5), FamilyParams::tstar()},
        {FamilyParams::cyclic(3), FamilyParams::binary_dihedral(4)},
        {FamilyParams::binary_dihedral(3), FamilyParams::cyclic(4)},
        {FamilyParams::cyclic(7), FamilyParams::dprime(1, 3)},
    };
    for (const auto& [fa, fb] : pairs) {
        const FiniteGroup a = construct_family(fa), b = construct_family(fb);
        const ClassData direct = compute_classes(direct_product(a, b));
        const ClassData fast = product_classes(compute_classes(a), compute_classes(b));
        CHECK(direct.num_classes() == fast.num_classes());
        CHECK(direct.class_of.size() == fast.class_of.size());
        // same partition and maps up to renumbering
        std::map<std::uint32_t, std::uint32_t> ren;
        for (std::size_t x = 0; x < direct.class_of.size(); ++x) {
            auto [it, fresh] = ren.emplace(fast.class_of[x], direct.class_of[x]);
            CHECK(it->second == direct.class_of[x]);
        }
        for (const auto& [f, d] : ren) {
            CHECK(fast.sizes[f] == direct.sizes[d]);
            CHECK(ren[fast.square_class[f]] == direct.square_class[d]);
            CHECK(ren[fast.cube_class[f]] == direct.cube_class[d]);
            CHECK(ren[fast.inverse_class[f]] == direct.inverse_class[d]);
        }
    }
}

TEST_CASE("self-inverse classes") {
    // every class of Ostar and Istar is closed under inversion
    for (const auto& f : {FamilyParams::ostar(), FamilyParams::istar()}) {
        const ClassData cd = compute_classes(construct_family(f));
        CHECK(z2_orbit_count(cd) == static_cast<long>(cd.num_classes()));
    }
    CHECK(z2_orbit_count(compute_classes(construct_family(FamilyParams::tstar()))) == 5);
    for (long n = 1; n <= 30; ++n) CHECK(z2_orbit_count(compute_classes(construct_family(FamilyParams::cyclic(n)))) == 1 + n / 2);
}

TEST_CASE("delta3 weighted sums") {
    for (long n = 1; n <= 30; ++n) {
        const ClassData cd = compute_classes(construct_family(FamilyParams::cyclic(n)));
        CHECK(delta3_weighted_sum(cd) == Rational(n % 3 == 0 ? 3 * n : n));
    }
    for (long p = 1; p <= 9; ++p) {
        const ClassData cd = compute_classes(construct_family(FamilyParams::binary_dihedral(p)));
        CHECK(delta3_weighted_sum(cd) == Rational(p % 3 == 0 ? 8 * p : 4 * p));
    }
    // brute force over element pairs: sum over (g,h) with g^3 ~ h^3 of 1/|C(g^3)|
    const FiniteGroup g = construct_family(FamilyParams::tprime(2));
    const ClassData cd = compute_classes(g);
    Rational brute = 0;
    for (Elem x = 0; x < g.order(); ++x) {
        for (Elem y = 0; y < g.order(); ++y) {
            const auto cx = cd.cube_class[cd.class_of[x]], cy = cd.cube_class[cd.class_of[y]];
            if (cx == cy) brute += Rational(1, static_cast<unsigned long>(cd.sizes[cx]));
        }
    }
    CHECK(delta3_weighted_sum(cd) == brute);
    CHECK(brute == Rational(8 * 81));
}
