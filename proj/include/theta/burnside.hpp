#ifndef THETA_BURNSIDE_HPP
#define THETA_BURNSIDE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "theta/group.hpp"
#include "theta/rational.hpp"

namespace theta {

/// plain(g,h): x -> g x h^-1.  twisted(g,h): x -> h x^-1 g^-1.
struct ActionElement {
    enum class Kind { Plain, Twisted };

    Kind kind = Kind::Plain;
    Elem g = 0;
    Elem h = 0;

    static ActionElement plain(Elem g, Elem h) { return {Kind::Plain, g, h}; }
    static ActionElement twisted(Elem g, Elem h) { return {Kind::Twisted, g, h}; }

    Elem apply(const FiniteGroup& G, Elem x) const;
};

std::vector<Elem> permutation(const FiniteGroup& G, const ActionElement& a);

/// t_k = number of fixed points of the k-th power, k = 1, 2, 3.
std::array<long, 3> fixed_point_counts(const FiniteGroup& G, const ActionElement& a);

/// (t1^3 + 3 t1 t2 + 2 t3) / 6.
Rational sym3_trace_from_counts(long t1, long t2, long t3);
Rational sym3_trace(const FiniteGroup& G, const ActionElement& a);
/// Trace on Sym^3 Ker(eps): every t_k shifted by -1.
Rational sym3_trace_ker(const FiniteGroup& G, const ActionElement& a);

enum class BurnsideMode { Naive, ClassReduced };

inline constexpr std::size_t kBurnsideMaxOrder = 2000;
inline constexpr std::size_t kOrbitMaxOrder = 150;

struct BurnsideOptions {
    BurnsideMode mode = BurnsideMode::Naive;
    unsigned threads = 1;
    std::size_t max_order = kBurnsideMaxOrder;
};

struct BurnsideResult {
    Rational d1, d2;          // C pi
    Rational d1_ker, d2_ker;  // Ker eps
    Integer dim_cpi;
    Integer dim_ker;
};

BurnsideResult burnside_dims(const FiniteGroup& G, const BurnsideOptions& opts = {});

/// Orbits of <plain(s,e), plain(e,s), twisted(e,e)> on sorted triples.
Integer orbit_count_dims(const FiniteGroup& G, std::size_t max_order = kOrbitMaxOrder);

/// Perfect rank of a sorted triple a <= b <= c.
std::uint64_t monomial_rank(Elem a, Elem b, Elem c);

}  // namespace theta

#endif
