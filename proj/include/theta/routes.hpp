#ifndef THETA_ROUTES_HPP
#define THETA_ROUTES_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "theta/burnside.hpp"
#include "theta/diagrams.hpp"
#include "theta/group_expr.hpp"
#include "theta/report.hpp"

namespace theta {

enum class Method { Auto, Closed, Chars, Burnside, Orbits, Diagrams };

std::string method_name(Method m);
std::optional<Method> parse_method(const std::string& s);

struct RouteOptions {
    unsigned threads = 1;
    BurnsideMode burnside_mode = BurnsideMode::Naive;
    std::size_t burnside_max_order = kBurnsideMaxOrder;
    std::size_t orbit_max_order = kOrbitMaxOrder;
    std::size_t diagram_max_order = kDiagramMaxOrder;

    /// Every brute-force budget set to `max_order`.
    static RouteOptions with_max_order(std::size_t max_order, unsigned threads);
};

/// Throws UnsupportedGroup when the closed route does not apply, ResourceError
/// when a budget is exceeded.
DimensionReport run_method(const GroupExpr& e, Method m, const RouteOptions& opts);

}  // namespace theta

#endif
