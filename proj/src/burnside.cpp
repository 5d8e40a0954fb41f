#include "theta/burnside.hpp"

#include <algorithm>
#include <thread>

#include "theta/conjugacy.hpp"
#include "theta/errors.hpp"

namespace theta {

namespace {

using i128 = __int128;

Integer from_i128(i128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Integer hi(static_cast<unsigned long>(u >> 64));
    Integer lo(static_cast<unsigned long>(u & ~0UL));
    Integer r = (hi << 64) + lo;
    return neg ? Integer(-r) : r;
}

i128 cube_term(long t1, long t2, long t3) {
    const i128 a = t1;
    return a * a * a + 3 * a * t2 + 2 * static_cast<i128>(t3);
}

struct Sums {
    i128 plain = 0, twisted = 0, plain_ker = 0, twisted_ker = 0;

    void add(const Sums& o) {
        plain += o.plain;
        twisted += o.twisted;
        plain_ker += o.plain_ker;
        twisted_ker += o.twisted_ker;
    }
};

void check_budget(const FiniteGroup& G, std::size_t max_order, const char* what, const char* hint) {
    if (G.order() > max_order) {
        throw ResourceError(std::string(what) + ": order " + std::to_string(G.order()) + " exceeds the budget " +
                            std::to_string(max_order) + "; " + hint);
    }
}

template <typename F>
void parallel_rows(std::size_t n, unsigned threads, F&& body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (threads == 1) {
        body(0, n, 0u);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi, t] { body(lo, hi, t); });
    }
    for (auto& th : pool) th.join();
}

// Every (g, h) pair; fixed points counted by incidence: g x h^-1 = x iff h = x^-1 g x,
// and h x^-1 g^-1 = x iff h = x g x.
Sums naive_sums(const FiniteGroup& G, unsigned threads) {
    const std::size_t n = G.order();
    std::vector<std::uint32_t> fix_plain(n * n, 0), fix_twisted(n * n, 0);
    parallel_rows(n, threads, [&](std::size_t lo, std::size_t hi, unsigned) {
        for (std::size_t g = lo; g < hi; ++g) {
            for (Elem x = 0; x < n; ++x) {
                const Elem xi = G.inv(x);
                ++fix_plain[g * n + G.mul(G.mul(xi, static_cast<Elem>(g)), x)];
                ++fix_twisted[g * n + G.mul(G.mul(x, static_cast<Elem>(g)), x)];
            }
        }
    });
    auto P = [&](Elem g, Elem h) { return static_cast<long>(fix_plain[static_cast<std::size_t>(g) * n + h]); };
    auto T = [&](Elem g, Elem h) { return static_cast<long>(fix_twisted[static_cast<std::size_t>(g) * n + h]); };

    std::vector<Sums> partial(std::max(1u, threads));
    parallel_rows(n, threads, [&](std::size_t lo, std::size_t hi, unsigned t) {
        Sums s;
        for (std::size_t gi = lo; gi < hi; ++gi) {
            const Elem g = static_cast<Elem>(gi);
            const Elem g2 = G.mul(g, g), g3 = G.mul(g2, g);
            for (Elem h = 0; h < n; ++h) {
                const Elem h2 = G.mul(h, h), h3 = G.mul(h2, h);
                // plain(g,h)^k = plain(g^k, h^k)
                long t1 = P(g, h), t2 = P(g2, h2), t3 = P(g3, h3);
                s.plain += cube_term(t1, t2, t3);
                s.plain_ker += cube_term(t1 - 1, t2 - 1, t3 - 1);
                // twisted(g,h)^2 = plain(hg, gh); twisted(g,h)^3 = twisted(ghg, hgh)
                const Elem hg = G.mul(h, g), gh = G.mul(g, h);
                t1 = T(g, h);
                t2 = P(hg, gh);
                t3 = T(G.mul(g, hg), G.mul(h, gh));
                s.twisted += cube_term(t1, t2, t3);
                s.twisted_ker += cube_term(t1 - 1, t2 - 1, t3 - 1);
            }
        }
        partial[t] = s;
    });
    Sums total;
    for (const auto& s : partial) total.add(s);
    return total;
}

// plain: independent conjugation of g and h; twisted(g,h) is conjugate to twisted(e, hg).
Sums class_reduced_sums(const FiniteGroup& G) {
    const ClassData cd = compute_classes(G);
    const std::size_t r = cd.num_classes();
    const Elem e = G.identity();
    Sums s;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            auto t = fixed_point_counts(G, ActionElement::plain(cd.representatives[i], cd.representatives[j]));
            const i128 w = static_cast<i128>(cd.sizes[i]) * static_cast<i128>(cd.sizes[j]);
            s.plain += w * cube_term(t[0], t[1], t[2]);
            s.plain_ker += w * cube_term(t[0] - 1, t[1] - 1, t[2] - 1);
        }
        auto t = fixed_point_counts(G, ActionElement::twisted(e, cd.representatives[i]));
        const i128 w = static_cast<i128>(cd.sizes[i]) * static_cast<i128>(G.order());
        s.twisted += w * cube_term(t[0], t[1], t[2]);
        s.twisted_ker += w * cube_term(t[0] - 1, t[1] - 1, t[2] - 1);
    }
    return s;
}

Rational checked_integer(const Rational& q, const std::string& what) {
    if (!is_integer(q) || q < 0) throw InternalError(what + " is not a nonnegative integer: " + to_string(q));
    return q;
}

}  // namespace

Elem ActionElement::apply(const FiniteGroup& G, Elem x) const {
    if (kind == Kind::Plain) return G.mul(G.mul(g, x), G.inv(h));
    return G.mul(G.mul(h, G.inv(x)), G.inv(g));
}

std::vector<Elem> permutation(const FiniteGroup& G, const ActionElement& a) {
    std::vector<Elem> p(G.order());
    for (Elem x = 0; x < G.order(); ++x) p[x] = a.apply(G, x);
    return p;
}

std::array<long, 3> fixed_point_counts(const FiniteGroup& G, const ActionElement& a) {
    std::array<long, 3> t{0, 0, 0};
    for (Elem x = 0; x < G.order(); ++x) {
        Elem y = a.apply(G, x);
        if (y == x) ++t[0];
        y = a.apply(G, y);
        if (y == x) ++t[1];
        y = a.apply(G, y);
        if (y == x) ++t[2];
    }
    return t;
}

Rational sym3_trace_from_counts(long t1, long t2, long t3) {
    Rational q(from_i128(cube_term(t1, t2, t3)), 6);
    q.canonicalize();
    return q;
}

Rational sym3_trace(const FiniteGroup& G, const ActionElement& a) {
    auto t = fixed_point_counts(G, a);
    return sym3_trace_from_counts(t[0], t[1], t[2]);
}

Rational sym3_trace_ker(const FiniteGroup& G, const ActionElement& a) {
    auto t = fixed_point_counts(G, a);
    return sym3_trace_from_counts(t[0] - 1, t[1] - 1, t[2] - 1);
}

BurnsideResult burnside_dims(const FiniteGroup& G, const BurnsideOptions& opts) {
    check_budget(G, opts.max_order, "burnside", "use the character or closed-form route");
    const Sums s = opts.mode == BurnsideMode::Naive ? naive_sums(G, opts.threads) : class_reduced_sums(G);
    const Integer n(static_cast<unsigned long>(G.order()));
    const Integer denom = 6 * n * n;
    auto avg = [&](i128 v, const char* what) {
        Rational q(from_i128(v), denom);
        q.canonicalize();
        return checked_integer(q, what);
    };
    BurnsideResult r;
    r.d1 = avg(s.plain, "d1");
    r.d2 = avg(s.twisted, "d2");
    r.d1_ker = avg(s.plain_ker, "d1(Ker)");
    r.d2_ker = avg(s.twisted_ker, "d2(Ker)");
    r.dim_cpi = theta::to_integer((r.d1 + r.d2) / 2, "dim A(C pi)");
    r.dim_ker = theta::to_integer((r.d1_ker + r.d2_ker) / 2, "dim A(Ker eps)");
    return r;
}

std::uint64_t monomial_rank(Elem a, Elem b, Elem c) {
    const std::uint64_t B = b + 1, C = c + 2;
    return a + B * (B - 1) / 2 + C * (C - 1) * (C - 2) / 6;
}

Integer orbit_count_dims(const FiniteGroup& G, std::size_t max_order) {
    check_budget(G, max_order, "orbit enumeration", "use the burnside route");
    const std::size_t n = G.order();
    const std::uint64_t total = monomial_rank(0, 0, static_cast<Elem>(n));
    std::vector<char> visited(total, 0);

    // generator maps on elements
    std::vector<std::vector<Elem>> maps;
    for (Elem s : G.generators()) {
        std::vector<Elem> left(n), right(n);
        for (Elem x = 0; x < n; ++x) {
            left[x] = G.mul(s, x);
            right[x] = G.mul(x, G.inv(s));
        }
        maps.push_back(std::move(left));
        maps.push_back(std::move(right));
    }
    {
        std::vector<Elem> inv(n);
        for (Elem x = 0; x < n; ++x) inv[x] = G.inv(x);
        maps.push_back(std::move(inv));
    }

    struct Tri {
        Elem a, b, c;
    };
    auto sorted = [](Elem a, Elem b, Elem c) {
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        return Tri{a, b, c};
    };
    long orbits = 0;
    std::vector<Tri> queue;
    std::uint64_t rank = 0;
    for (Elem c = 0; c < n; ++c) {
        for (Elem b = 0; b <= c; ++b) {
            for (Elem a = 0; a <= b; ++a, ++rank) {
                if (visited[rank]) continue;
                ++orbits;
                visited[rank] = 1;
                queue.assign(1, Tri{a, b, c});
                for (std::size_t head = 0; head < queue.size(); ++head) {
                    const Tri t = queue[head];
                    for (const auto& m : maps) {
                        const Tri u = sorted(m[t.a], m[t.b], m[t.c]);
                        const std::uint64_t ru = monomial_rank(u.a, u.b, u.c);
                        if (!visited[ru]) {
                            visited[ru] = 1;
                            queue.push_back(u);
                        }
                    }
                }
            }
        }
    }
    return Integer(orbits);
}

}  // namespace theta
