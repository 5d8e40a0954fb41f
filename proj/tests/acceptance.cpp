// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "theta/burnside.hpp"
#include "theta/characters.hpp"
#include "theta/cli.hpp"
#include "theta/closed_forms.hpp"
#include "theta/conjugacy.hpp"
#include "theta/coset_enum.hpp"
#include "theta/diagrams.hpp"
#include "theta/group.hpp"
#include "theta/group_expr.hpp"
#include "theta/routes.hpp"

using namespace theta;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
    std::size_t checks = 0;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

// limit_s <= 0 means no time limit.
void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (o.ok && limit_s > 0 && secs > limit_s) {
        o.ok = false;
        o.detail = "time limit " + std::to_string(limit_s) + " s exceeded";
    }
    if (!o.ok) ++failures;
    std::printf("%s  %d  %-44s %8.2f s  %zu checks%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), secs, o.checks,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
}

long brute_p3(long n) {
    if (n < 0) return 0;
    long count = 0;
    for (long x = 0; 3 * x <= n; ++x)
        for (long y = x; x + 2 * y <= n; ++y) ++count;  // z = n - x - y >= y
    return count;
}

GroupExpr one(FamilyParams f) { return GroupExpr{{f}}; }

GroupExpr with_cyclic(long m, FamilyParams f) {
    if (m == 1) return one(f);
    return GroupExpr{{FamilyParams::cyclic(m), f}};
}

FamilyParams spec_family(const SphericalSpec& s) {
    switch (s.kase) {
        case SpecCase::A: return FamilyParams::cyclic(s.n);
        case SpecCase::B1:
        case SpecCase::B2: return FamilyParams::binary_dihedral(s.p);
        case SpecCase::C: return FamilyParams::dprime(s.k, s.p);
        case SpecCase::D: return FamilyParams::tstar();
        case SpecCase::E: return FamilyParams::tprime(s.k);
        case SpecCase::F: return FamilyParams::ostar();
        case SpecCase::G: return FamilyParams::istar();
    }
    return FamilyParams::tstar();
}

GroupExpr spec_expr(const SphericalSpec& s) {
    if (s.kase == SpecCase::A) return one(FamilyParams::cyclic(s.n));
    return with_cyclic(s.m, spec_family(s));
}

// Every family member of order <= max_order, then Z(m) x X with (m, |X|) = 1 and X non-cyclic.
std::vector<GroupExpr> supported_groups(long max_order) {
    std::vector<FamilyParams> noncyclic;
    for (long p = 1; 4 * p <= max_order; ++p) noncyclic.push_back(FamilyParams::binary_dihedral(p));
    for (long k = 0; k <= 10; ++k)
        for (long p = 3; (4L << k) * p <= max_order; p += 2) noncyclic.push_back(FamilyParams::dprime(k, p));
    noncyclic.push_back(FamilyParams::tstar());
    for (long k = 2, o = 72; o <= max_order; ++k, o *= 3) noncyclic.push_back(FamilyParams::tprime(k));
    noncyclic.push_back(FamilyParams::ostar());
    noncyclic.push_back(FamilyParams::istar());

    std::vector<GroupExpr> out;
    for (long n = 1; n <= max_order; ++n) out.push_back(one(FamilyParams::cyclic(n)));
    for (const auto& f : noncyclic) {
        const long order = family_order(f).get_si();
        for (long m = 1; m * order <= max_order; ++m) {
            if (std::gcd(m, order) == 1) out.push_back(with_cyclic(m, f));
        }
    }
    return out;
}

std::string show(const std::optional<Integer>& v) { return v ? v->get_str() : "none"; }

std::string name(const GroupExpr& e) { return to_string(e); }

std::vector<std::string> cli_lines(std::vector<std::string> args) {
    std::vector<const char*> argv{"theta_dim"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    if (rc != 0) throw std::runtime_error("theta_dim exited with " + std::to_string(rc) + ": " + err.str());
    std::vector<std::string> lines;
    std::istringstream in(out.str());
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

const Method kAllRoutes[] = {Method::Closed, Method::Chars, Method::Burnside, Method::Orbits, Method::Diagrams};

}  // namespace

int main() {
    const RouteOptions routes;

    criterion(1, "T*, O*, I* constants, all routes", 0, [&](Outcome& o) {
        const std::pair<FamilyParams, std::pair<long, long>> cases[] = {
            {FamilyParams::tstar(), {15, 10}}, {FamilyParams::ostar(), {35, 27}}, {FamilyParams::istar(), {65, 56}}};
        for (const auto& [f, want] : cases) {
            const auto t0 = Clock::now();
            for (Method m : kAllRoutes) {
                const auto r = run_method(one(f), m, routes);
                o.expect(r.dim_cpi == want.first && r.dim_ker == want.second,
                         family_name(f) + " via " + method_name(m) + " gave (" + show(r.dim_cpi) + ", " +
                             show(r.dim_ker) + ")");
            }
            const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
            o.expect(secs < 5.0, family_name(f) + " took " + std::to_string(secs) + " s");
        }
    });

    criterion(2, "table d4p --max-p 15", 10, [&](Outcome& o) {
        const std::vector<std::string> want = {"4,1",   "9,4",   "11,6",  "18,11", "20,13",
                                               "30,21", "32,23", "44,33", "47,36", "61,48",
                                               "64,51", "81,66", "84,69", "103,86", "107,90"};
        const auto lines = cli_lines({"table", "d4p", "--max-p", "15"});
        o.expect(lines.size() == want.size() + 1, "expected 16 lines, got " + std::to_string(lines.size()));
        for (std::size_t i = 0; i < want.size() && i + 1 < lines.size(); ++i) {
            const std::string row = std::to_string(i + 1) + "," + want[i] + ",closed+burnside";
            o.expect(lines[i + 1] == row, "row " + std::to_string(i + 1) + ": " + lines[i + 1]);
        }
    });

    criterion(3, "table t8_3k --max-k 9", 60, [&](Outcome& o) {
        const std::vector<std::string> want = {"15,10",         "78,66",           "570,537",
                                               "4782,4686",     "42042,41757",     "375438,374586",
                                               "3370170,3367617", "30305262,30297606", "272668602,272645637"};
        const auto lines = cli_lines({"table", "t8_3k", "--max-k", "9"});
        o.expect(lines.size() == want.size() + 1, "expected 10 lines, got " + std::to_string(lines.size()));
        for (std::size_t i = 0; i < want.size() && i + 1 < lines.size(); ++i) {
            const std::string tag = i < 3 ? ",closed+burnside" : ",closed";
            const std::string row = std::to_string(i + 1) + "," + want[i] + tag;
            o.expect(lines[i + 1] == row, "row " + std::to_string(i + 1) + ": " + lines[i + 1]);
        }
    });

    criterion(4, "cyclic sweep n = 1..60, all routes", 30, [&](Outcome& o) {
        for (long n = 1; n <= 60; ++n) {
            const long dim = brute_p3(n), ker = brute_p3(n - 3);
            for (Method m : kAllRoutes) {
                const auto r = run_method(one(FamilyParams::cyclic(n)), m, routes);
                o.expect(r.dim_cpi == dim && r.dim_ker == ker,
                         "Z(" + std::to_string(n) + ") via " + method_name(m));
            }
        }
    });

    criterion(5, "delta3 lemma suite", 0, [&](Outcome& o) {
        auto sum = [](const FamilyParams& f) { return delta3_weighted_sum(compute_classes(construct_family(f))); };
        for (long n = 1; n <= 60; ++n)
            o.expect(sum(FamilyParams::cyclic(n)) == Rational(n % 3 == 0 ? 3 * n : n), "Z(" + std::to_string(n) + ")");
        for (long p = 1; p <= 15; ++p)
            o.expect(sum(FamilyParams::binary_dihedral(p)) == Rational(p % 3 == 0 ? 8 * p : 4 * p),
                     "Dstar(" + std::to_string(p) + ")");
        for (long k = 0; k <= 3; ++k)
            for (long p = 3; p <= 15; p += 2) {
                const long base = (1L << (k + 2)) * p;
                o.expect(sum(FamilyParams::dprime(k, p)) == Rational(p % 3 == 0 ? 2 * base : base),
                         "Dprime(" + std::to_string(k) + "," + std::to_string(p) + ")");
            }
        for (long k = 2; k <= 3; ++k) {
            long pow3 = 1;
            for (long i = 0; i < k + 2; ++i) pow3 *= 3;
            o.expect(sum(FamilyParams::tprime(k)) == Rational(8 * pow3), "Tprime(" + std::to_string(k) + ")");
        }
    });

    const auto groups500 = supported_groups(500);

    criterion(6, "orthogonality, all tables of order <= 500", 0, [&](Outcome& o) {
        for (const auto& e : groups500) {
            const auto ct = build_table(e);
            const auto rep = check_orthogonality(ct.table, expr_order(e).get_ui());
            o.expect(rep.rows, name(e) + ": row orthogonality");
            o.expect(rep.columns, name(e) + ": column orthogonality");
            o.expect(rep.degrees, name(e) + ": sum of squared degrees");
        }
    });

    std::vector<std::pair<GroupExpr, BurnsideResult>> burnside_results;
    criterion(7, "oracle equivalence, order <= 500 / 120", 0, [&](Outcome& o) {
        for (const auto& e : groups500) {
            const FiniteGroup g = build_group(e, 1000000);
            const auto b = burnside_dims(g, BurnsideOptions{BurnsideMode::Naive, 1, 500});
            const auto ct = build_table(e);
            o.expect(d1_class_formula(ct.classes, g.order()) == b.d1, name(e) + ": d1");
            o.expect(d2_char_formula(ct.table, ct.classes) == b.d2, name(e) + ": d2");
            if (g.order() <= 120) {
                o.expect(orbit_count_dims(g, 120) == b.dim_cpi, name(e) + ": orbit count");
                o.expect(dim_A2(g, 120) == b.dim_cpi, name(e) + ": diagram count");
            }
            burnside_results.emplace_back(e, b);
        }
    });

    criterion(8, "dim - ker = z2 orbits; z2 closed forms m <= 20", 0, [&](Outcome& o) {
        for (const auto& [e, b] : burnside_results)
            o.expect(b.dim_cpi - b.dim_ker == z2_orbit_count(build_classes(e)), name(e) + ": dim - ker");

        std::vector<SphericalSpec> specs;
        for (long n = 1; n <= 20; ++n) specs.push_back(SphericalSpec::cyclic(n));
        for (long m = 1; m <= 20; ++m) {
            for (long p = 1; p <= 15; ++p)
                if (std::gcd(m, 2 * p) == 1) specs.push_back(SphericalSpec::binary_dihedral(m, p));
            for (long k = 0; k <= 3; ++k)
                for (long p = 3; p <= 15; p += 2)
                    if (std::gcd(m, 2 * p) == 1) specs.push_back(SphericalSpec::dprime(m, k, p));
            if (std::gcd(m, 6L) == 1) {
                specs.push_back(SphericalSpec::tstar(m));
                specs.push_back(SphericalSpec::tprime(m, 2));
                specs.push_back(SphericalSpec::tprime(m, 3));
                specs.push_back(SphericalSpec::ostar(m));
            }
            if (std::gcd(m, 30L) == 1) specs.push_back(SphericalSpec::istar(m));
        }
        for (const auto& s : specs) {
            const GroupExpr e = spec_expr(s);
            o.expect(z2_orbit_count(build_classes(e)) == closed_z2_orbit(s), name(e) + ": z2 closed form");
            const auto c = closed_dims(s);
            o.expect(c.dim_cpi - c.dim_ker == closed_z2_orbit(s), name(e) + ": closed dim - ker");
        }
    });

    criterion(9, "Todd-Coxeter orders", 30, [&](Outcome& o) {
        std::vector<FamilyParams> fams;
        for (long p = 1; p <= 15; ++p) fams.push_back(FamilyParams::binary_dihedral(p));
        for (long k = 0; k <= 3; ++k)
            for (long p = 3; p <= 15; p += 2) fams.push_back(FamilyParams::dprime(k, p));
        for (long k = 1; k <= 3; ++k) fams.push_back(FamilyParams::tprime(k));
        fams.push_back(FamilyParams::tstar());
        fams.push_back(FamilyParams::ostar());
        fams.push_back(FamilyParams::istar());
        for (const auto& f : fams) {
            const FiniteGroup g = enumerate(family_presentation(f));
            o.expect(family_order(f) == g.order(), family_name(f));
        }
        for (long p = 1; p <= 15; ++p) {
            const FiniteGroup g = enumerate(binary_dihedral_xy_presentation(p));
            o.expect(g.order() == static_cast<std::size_t>(4 * p), "Dstar(" + std::to_string(p) + ") x,y presentation");
        }
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
