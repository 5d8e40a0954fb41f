#ifndef THETA_DIAGRAMS_HPP
#define THETA_DIAGRAMS_HPP

#include <compare>
#include <cstddef>

#include "theta/group.hpp"
#include "theta/rational.hpp"

namespace theta {

/// Edge decorations of the theta graph, all edges oriented from vertex 1 to vertex 2.
struct ThetaDecoration {
    Elem a = 0;
    Elem b = 0;
    Elem c = 0;

    friend auto operator<=>(const ThetaDecoration&, const ThetaDecoration&) = default;
};

inline constexpr std::size_t kDiagramMaxOrder = 120;

/// Lexicographically minimal element of the orbit of d under edge permutations,
/// left and right holonomy (ga, gb, gc), (ag, bg, cg), and simultaneous inversion.
ThetaDecoration normalize(const ThetaDecoration& d, const FiniteGroup& g);

/// Number of distinct normal forms.
Integer dim_A2(const FiniteGroup& g, std::size_t max_order = kDiagramMaxOrder);

}  // namespace theta

#endif
