#include "theta/routes.hpp"

#include <algorithm>
#include <chrono>

#include "theta/characters.hpp"
#include "theta/closed_forms.hpp"
#include "theta/conjugacy.hpp"
#include "theta/errors.hpp"

namespace theta {

namespace {

void check_order(const GroupExpr& e, std::size_t max_order, const char* route, const char* hint) {
    const Integer n = expr_order(e);
    if (n > Integer(static_cast<unsigned long>(max_order))) {
        throw ResourceError(std::string(route) + ": order " + n.get_str() + " exceeds the budget " +
                            std::to_string(max_order) + "; " + hint);
    }
}

std::size_t table_cap_for(std::size_t max_order) {
    return std::max(kProductTableCap, max_order * max_order);
}

void fill_closed(const GroupExpr& e, DimensionReport& r) {
    const SpecMatch sm = match_spherical(e);
    if (!sm.spec) throw UnsupportedGroup("no closed form: " + sm.reason);
    const ClosedDims c = closed_dims(*sm.spec);
    r.dim_cpi = c.dim_cpi;
    r.dim_ker = c.dim_ker;
    r.dim_classhat_z2 = closed_z2_orbit(*sm.spec);
}

void fill_chars(const GroupExpr& e, DimensionReport& r) {
    const ClassesAndTable ct = build_table(e);
    const std::size_t n = ct.classes.group_order;
    const Rational d1 = d1_class_formula(ct.classes, n);
    const Rational d2 = d2_char_formula(ct.table, ct.classes);
    const Integer dim = to_integer((d1 + d2) / 2, "dim A(C pi) from characters");
    const Integer z2 = z2_orbit_count(ct.classes);
    r.num_classes = ct.classes.num_classes();
    r.d1 = d1;
    r.d2 = d2;
    r.dim_cpi = dim;
    r.dim_ker = dim - z2;
    r.dim_classhat_z2 = z2;
}

void fill_burnside(const GroupExpr& e, const RouteOptions& opts, DimensionReport& r) {
    check_order(e, opts.burnside_max_order, "burnside", "use the character or closed-form route");
    const FiniteGroup g = build_group(e, table_cap_for(opts.burnside_max_order));
    BurnsideOptions bo;
    bo.mode = opts.burnside_mode;
    bo.threads = opts.threads;
    bo.max_order = opts.burnside_max_order;
    const BurnsideResult b = burnside_dims(g, bo);
    const ClassData cd = compute_classes(g);
    r.num_classes = cd.num_classes();
    r.d1 = b.d1;
    r.d2 = b.d2;
    r.dim_cpi = b.dim_cpi;
    r.dim_ker = b.dim_ker;
    r.dim_classhat_z2 = z2_orbit_count(cd);
}

// The orbit and diagram routes give dim A(C pi) only; Ker eps is derived from the class count.
void fill_counting(const GroupExpr& e, Method m, const RouteOptions& opts, DimensionReport& r) {
    const std::size_t budget = m == Method::Orbits ? opts.orbit_max_order : opts.diagram_max_order;
    check_order(e, budget, m == Method::Orbits ? "orbit enumeration" : "diagram count", "use the burnside route");
    const FiniteGroup g = build_group(e, table_cap_for(budget));
    const Integer dim = m == Method::Orbits ? orbit_count_dims(g, budget) : dim_A2(g, budget);
    const ClassData cd = compute_classes(g);
    const Integer z2 = z2_orbit_count(cd);
    r.num_classes = cd.num_classes();
    r.dim_cpi = dim;
    r.dim_ker = dim - z2;
    r.dim_classhat_z2 = z2;
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::Auto: return "auto";
        case Method::Closed: return "closed";
        case Method::Chars: return "chars";
        case Method::Burnside: return "burnside";
        case Method::Orbits: return "orbits";
        case Method::Diagrams: return "diagrams";
    }
    return "?";
}

std::optional<Method> parse_method(const std::string& s) {
    for (Method m : {Method::Auto, Method::Closed, Method::Chars, Method::Burnside, Method::Orbits, Method::Diagrams}) {
        if (method_name(m) == s) return m;
    }
    return std::nullopt;
}

RouteOptions RouteOptions::with_max_order(std::size_t max_order, unsigned threads) {
    RouteOptions o;
    o.threads = threads;
    o.burnside_max_order = o.orbit_max_order = o.diagram_max_order = max_order;
    return o;
}

DimensionReport run_method(const GroupExpr& e, Method m, const RouteOptions& opts) {
    validate(e);
    const auto start = std::chrono::steady_clock::now();
    DimensionReport r;
    r.group = to_string(e);
    r.order = expr_order(e);
    if (m == Method::Auto) m = match_spherical(e).spec ? Method::Closed : Method::Burnside;
    r.method = method_name(m);
    switch (m) {
        case Method::Closed: fill_closed(e, r); break;
        case Method::Chars: fill_chars(e, r); break;
        case Method::Burnside: fill_burnside(e, opts, r); break;
        case Method::Orbits:
        case Method::Diagrams: fill_counting(e, m, opts, r); break;
        case Method::Auto: break;
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace theta
