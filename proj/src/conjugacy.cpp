#include "theta/conjugacy.hpp"

#include <limits>

#include "theta/errors.hpp"

namespace theta {

ClassData compute_classes(const FiniteGroup& g) {
    const std::size_t n = g.order();
    constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
    ClassData cd;
    cd.group_order = n;
    cd.class_of.assign(n, kNone);

    std::vector<Elem> conj;
    std::vector<Elem> ginv;
    for (Elem s : g.generators()) {
        conj.push_back(s);
        ginv.push_back(g.inv(s));
    }
    std::vector<Elem> stack;
    for (Elem x = 0; x < n; ++x) {
        if (cd.class_of[x] != kNone) continue;
        const auto c = static_cast<std::uint32_t>(cd.sizes.size());
        cd.representatives.push_back(x);
        cd.class_of[x] = c;
        std::uint64_t size = 1;
        stack.assign(1, x);
        while (!stack.empty()) {
            Elem y = stack.back();
            stack.pop_back();
            for (std::size_t i = 0; i < conj.size(); ++i) {
                Elem z = g.mul(g.mul(conj[i], y), ginv[i]);
                if (cd.class_of[z] == kNone) {
                    cd.class_of[z] = c;
                    ++size;
                    stack.push_back(z);
                }
            }
        }
        cd.sizes.push_back(size);
    }

    const std::size_t r = cd.sizes.size();
    cd.square_class.assign(r, kNone);
    cd.cube_class.assign(r, kNone);
    cd.inverse_class.assign(r, kNone);
    for (Elem x = 0; x < n; ++x) {
        const auto c = cd.class_of[x];
        Elem x2 = g.mul(x, x);
        const std::uint32_t sq = cd.class_of[x2];
        const std::uint32_t cu = cd.class_of[g.mul(x2, x)];
        const std::uint32_t iv = cd.class_of[g.inv(x)];
        if (cd.square_class[c] == kNone) {
            cd.square_class[c] = sq;
            cd.cube_class[c] = cu;
            cd.inverse_class[c] = iv;
        } else if (cd.square_class[c] != sq || cd.cube_class[c] != cu || cd.inverse_class[c] != iv) {
            throw InternalError("power maps are not class functions; generators do not generate the group");
        }
    }
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < r; ++c) {
        total += cd.sizes[c];
        if (cd.inverse_class[cd.inverse_class[c]] != c) throw InternalError("inverse_class is not an involution");
    }
    if (total != n) throw InternalError("class sizes do not sum to the group order");
    return cd;
}

ClassData product_classes(const ClassData& a, const ClassData& b) {
    const std::size_t ra = a.num_classes(), rb = b.num_classes();
    const std::size_t nb = b.group_order;
    ClassData cd;
    cd.group_order = a.group_order * nb;
    auto pair = [&](std::uint32_t i, std::uint32_t j) { return static_cast<std::uint32_t>(i * rb + j); };
    cd.class_of.resize(cd.group_order);
    for (std::size_t x = 0; x < a.group_order; ++x) {
        for (std::size_t y = 0; y < nb; ++y) cd.class_of[x * nb + y] = pair(a.class_of[x], b.class_of[y]);
    }
    for (std::uint32_t i = 0; i < ra; ++i) {
        for (std::uint32_t j = 0; j < rb; ++j) {
            cd.representatives.push_back(static_cast<Elem>(a.representatives[i] * nb + b.representatives[j]));
            cd.sizes.push_back(a.sizes[i] * b.sizes[j]);
            cd.square_class.push_back(pair(a.square_class[i], b.square_class[j]));
            cd.cube_class.push_back(pair(a.cube_class[i], b.cube_class[j]));
            cd.inverse_class.push_back(pair(a.inverse_class[i], b.inverse_class[j]));
        }
    }
    return cd;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> delta3(const ClassData& cd) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    const auto r = static_cast<std::uint32_t>(cd.num_classes());
    for (std::uint32_t i = 0; i < r; ++i) {
        for (std::uint32_t j = 0; j < r; ++j) {
            if (cd.cube_class[i] == cd.cube_class[j]) out.emplace_back(i, j);
        }
    }
    return out;
}

Integer z2_orbit_count(const ClassData& cd) {
    long fixed = 0, moved = 0;
    for (std::size_t c = 0; c < cd.num_classes(); ++c) {
        if (cd.inverse_class[c] == c) ++fixed;
        else ++moved;
    }
    return Integer(fixed + moved / 2);
}

Rational delta3_weighted_sum(const ClassData& cd) {
    // pair products are integral; divide once per cube class
    std::vector<Integer> mass(cd.num_classes());
    for (const auto& [i, j] : delta3(cd)) {
        mass[cd.cube_class[i]] += Integer(static_cast<unsigned long>(cd.sizes[i])) *
                                  static_cast<unsigned long>(cd.sizes[j]);
    }
    Rational s = 0;
    for (std::size_t t = 0; t < cd.num_classes(); ++t) {
        if (mass[t] == 0) continue;
        Rational term(mass[t], Integer(static_cast<unsigned long>(cd.sizes[t])));
        term.canonicalize();
        s += term;
    }
    return s;
}

Rational d1_class_formula(const ClassData& cd, std::size_t order) {
    const Integer n(static_cast<unsigned long>(order));
    Rational s = 0;
    for (std::size_t c = 0; c < cd.num_classes(); ++c) {
        const Integer size(static_cast<unsigned long>(cd.sizes[c]));
        const Integer sq(static_cast<unsigned long>(cd.sizes[cd.square_class[c]]));
        Rational term1(n * n, size);
        term1.canonicalize();
        Rational term2(3 * size * n, sq);
        term2.canonicalize();
        s += term1 + term2;
    }
    s += 2 * delta3_weighted_sum(cd);
    Rational d1 = s / (6 * n);
    return d1;
}

}  // namespace theta
