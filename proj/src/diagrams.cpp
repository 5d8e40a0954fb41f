#include "theta/diagrams.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "theta/errors.hpp"

namespace theta {

namespace {

constexpr std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace

// Element 0 can always be moved to the first slot; with t0 first, the left factor
// is forced to 0 * h^-1 * t0^-1, leaving h free.
ThetaDecoration normalize(const ThetaDecoration& d, const FiniteGroup& g) {
    const Elem z = 0;
    ThetaDecoration best{static_cast<Elem>(g.order()), 0, 0};
    for (int inverted = 0; inverted < 2; ++inverted) {
        std::array<Elem, 3> t{d.a, d.b, d.c};
        if (inverted) {
            for (auto& x : t) x = g.inv(x);
        }
        for (const auto& s : kPerms) {
            const Elem t0i = g.inv(t[s[0]]);
            const Elem u1 = g.mul(t0i, t[s[1]]), u2 = g.mul(t0i, t[s[2]]);
            for (Elem h = 0; h < g.order(); ++h) {
                const Elem left = g.mul(z, g.inv(h));
                ThetaDecoration cand{z, g.mul(g.mul(left, u1), h), g.mul(g.mul(left, u2), h)};
                if (cand < best) best = cand;
            }
        }
    }
    return best;
}

Integer dim_A2(const FiniteGroup& g, std::size_t max_order) {
    if (g.order() > max_order) {
        throw ResourceError("diagram count: order " + std::to_string(g.order()) + " exceeds the budget " +
                            std::to_string(max_order) + "; use the burnside route");
    }
    const std::size_t n = g.order();
    const Elem z = 0;
    // every orbit meets {(0, b, c) : b <= c}
    std::vector<char> seen(n * n, 0);
    long count = 0;
    for (Elem b = 0; b < n; ++b) {
        for (Elem c = b; c < n; ++c) {
            if (seen[b * n + c]) continue;
            const ThetaDecoration canon = normalize({z, b, c}, g);
            if (seen[canon.b * n + canon.c]) {
                seen[b * n + c] = 1;
                continue;
            }
            ++count;
            seen[canon.b * n + canon.c] = 1;
            seen[b * n + c] = 1;
        }
    }
    return Integer(count);
}

}  // namespace theta
