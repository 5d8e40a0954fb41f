#include "theta/group.hpp"

#include <numeric>
#include <random>
#include <unordered_set>

#include "theta/coset_enum.hpp"
#include "theta/errors.hpp"

namespace theta {

FamilyParams FamilyParams::cyclic(long n) { return {Family::Cyclic, n, 0, 0}; }
FamilyParams FamilyParams::binary_dihedral(long p) { return {Family::BinaryDihedral, 0, p, 0}; }
FamilyParams FamilyParams::dprime(long k, long p) { return {Family::DPrime, 0, p, k}; }
FamilyParams FamilyParams::tstar() { return {Family::TStar, 0, 0, 0}; }
FamilyParams FamilyParams::tprime(long k) { return {Family::TPrime, 0, 0, k}; }
FamilyParams FamilyParams::ostar() { return {Family::OStar, 0, 0, 0}; }
FamilyParams FamilyParams::istar() { return {Family::IStar, 0, 0, 0}; }

void validate(const FamilyParams& params) {
    switch (params.family) {
        case Family::Cyclic:
            if (params.n < 1) throw InvalidParameter("Z(n) requires n >= 1, got n = " + std::to_string(params.n));
            return;
        case Family::BinaryDihedral:
            if (params.p < 1) throw InvalidParameter("Dstar(p) requires p >= 1, got p = " + std::to_string(params.p));
            return;
        case Family::DPrime:
            if (params.k < 0) throw InvalidParameter("Dprime(k,p) requires k >= 0, got k = " + std::to_string(params.k));
            if (params.k > 1000) throw InvalidParameter("Dprime(k,p) requires k <= 1000");
            if (params.p < 3 || params.p % 2 == 0)
                throw InvalidParameter("Dprime(k,p) requires p >= 3 odd, got p = " + std::to_string(params.p));
            return;
        case Family::TPrime:
            if (params.k < 1) throw InvalidParameter("Tprime(k) requires k >= 1, got k = " + std::to_string(params.k));
            if (params.k > 1000) throw InvalidParameter("Tprime(k) requires k <= 1000");
            return;
        case Family::TStar:
        case Family::OStar:
        case Family::IStar:
            return;
    }
}

Integer family_order(const FamilyParams& params) {
    validate(params);
    switch (params.family) {
        case Family::Cyclic: return Integer(params.n);
        case Family::BinaryDihedral: return Integer(4) * params.p;
        case Family::DPrime: return pow_int(2, params.k + 2) * params.p;
        case Family::TStar: return 24;
        case Family::TPrime: return 8 * pow_int(3, params.k);
        case Family::OStar: return 48;
        case Family::IStar: return 120;
    }
    return 0;
}

std::string family_name(const FamilyParams& params) {
    switch (params.family) {
        case Family::Cyclic: return "Z(" + std::to_string(params.n) + ")";
        case Family::BinaryDihedral: return "Dstar(" + std::to_string(params.p) + ")";
        case Family::DPrime: return "Dprime(" + std::to_string(params.k) + "," + std::to_string(params.p) + ")";
        case Family::TStar: return "Tstar";
        case Family::TPrime: return "Tprime(" + std::to_string(params.k) + ")";
        case Family::OStar: return "Ostar";
        case Family::IStar: return "Istar";
    }
    return "?";
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Elem> table, std::vector<Elem> generators,
                         std::vector<std::string> labels, std::string family_tag)
    : n_(order), table_(std::move(table)), generators_(std::move(generators)),
      labels_(std::move(labels)), tag_(std::move(family_tag)) {
    if (n_ == 0) throw InvalidParameter("group order must be positive");
    if (table_.size() != n_ * n_) throw InvalidParameter("multiplication table has wrong size");
    for (Elem e : table_) {
        if (e >= n_) throw InvalidParameter("multiplication table entry out of range");
    }
    std::vector<char> seen(n_);
    for (std::size_t a = 0; a < n_; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t b = 0; b < n_; ++b) {
            Elem e = table_[a * n_ + b];
            if (seen[e]) throw InvalidParameter("multiplication table row is not a permutation");
            seen[e] = 1;
        }
    }
    for (std::size_t b = 0; b < n_; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t a = 0; a < n_; ++a) {
            Elem e = table_[a * n_ + b];
            if (seen[e]) throw InvalidParameter("multiplication table column is not a permutation");
            seen[e] = 1;
        }
    }
    bool found = false;
    for (std::size_t e = 0; e < n_ && !found; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n_ && ok; ++x) {
            ok = table_[e * n_ + x] == x && table_[x * n_ + e] == x;
        }
        if (ok) {
            identity_ = static_cast<Elem>(e);
            found = true;
        }
    }
    if (!found) throw InvalidParameter("multiplication table has no two-sided identity");
    inv_.assign(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) {
            if (table_[a * n_ + b] == identity_) {
                inv_[a] = static_cast<Elem>(b);
                break;
            }
        }
        if (table_[inv_[a] * n_ + a] != identity_) throw InvalidParameter("left and right inverses differ");
    }
    for (Elem g : generators_) {
        if (g >= n_) throw InvalidParameter("generator out of range");
    }
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) labels_.push_back("g" + std::to_string(i));
    }
    if (labels_.size() != n_) throw InvalidParameter("label count differs from group order");
    std::unordered_set<std::string> distinct(labels_.begin(), labels_.end());
    if (distinct.size() != n_) throw InvalidParameter("element labels are not distinct");
}

Elem FiniteGroup::pow(Elem a, long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Elem r = identity_;
    Elem b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

void FiniteGroup::set_named(char name, Elem e) {
    if (e >= n_) throw InvalidParameter("named element out of range");
    named_[name] = e;
}

std::optional<Elem> FiniteGroup::named(char name) const {
    auto it = named_.find(name);
    if (it == named_.end()) return std::nullopt;
    return it->second;
}

Elem FiniteGroup::evaluate(std::string_view word) const {
    std::vector<char> letters;
    std::vector<Elem> values;
    for (const auto& [c, e] : named_) {
        letters.push_back(c);
        values.push_back(e);
    }
    Word w = parse_word(word, letters);
    Elem r = identity_;
    for (int l : w) {
        Elem g = values[std::abs(l) - 1];
        r = mul(r, l > 0 ? g : inv(g));
    }
    return r;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = a + 1; b < n_; ++b) {
            if (table_[a * n_ + b] != table_[b * n_ + a]) return false;
        }
    }
    return true;
}

namespace {

void check_cap(std::size_t order, std::size_t cap, const std::string& what) {
    if (order != 0 && order > cap / order) {
        throw ResourceError(what + ": order " + std::to_string(order) + " needs " + "a table with more than " +
                            std::to_string(cap) + " entries");
    }
}

FiniteGroup cyclic_group(long n) {
    const std::size_t N = n;
    std::vector<Elem> t(N * N);
    std::vector<std::string> labels(N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) t[i * N + j] = static_cast<Elem>((i + j) % N);
        labels[i] = i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i));
    }
    std::vector<Elem> gens;
    if (N > 1) gens.push_back(1);
    FiniteGroup g(N, std::move(t), gens, std::move(labels), family_name(FamilyParams::cyclic(n)));
    g.set_named('a', static_cast<Elem>(1 % N));
    return g;
}

// a^k x^l  <->  k + 2p*l
FiniteGroup binary_dihedral_group(long p) {
    const long N = 2 * p;
    const std::size_t n = 4 * p;
    auto idx = [&](long k, long l) { return static_cast<Elem>(((k % N) + N) % N + N * l); };
    std::vector<Elem> t(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        long k1 = i % N, l1 = i / N;
        for (std::size_t j = 0; j < n; ++j) {
            long k2 = j % N, l2 = j / N;
            long k, l;
            if (l1 == 0) {
                k = k1 + k2;
                l = l2;
            } else {
                k = k1 - k2;
                l = 1 + l2;
                if (l == 2) {
                    l = 0;
                    k += p;
                }
            }
            t[i * n + j] = idx(k, l);
        }
        std::string s = k1 == 0 ? "" : (k1 == 1 ? "a" : "a^" + std::to_string(k1));
        if (l1 == 1) s += "x";
        labels[i] = s.empty() ? "e" : s;
    }
    FiniteGroup g(n, std::move(t), {idx(1, 0), idx(0, 1)}, std::move(labels),
                  family_name(FamilyParams::binary_dihedral(p)));
    g.set_named('a', idx(1, 0));
    g.set_named('x', idx(0, 1));
    return g;
}

// x^n y^l  <->  n*p + l
FiniteGroup dprime_group(long k, long p) {
    const long M = 1L << (k + 2);
    const std::size_t n = M * p;
    std::vector<Elem> t(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        long n1 = i / p, l1 = i % p;
        for (std::size_t j = 0; j < n; ++j) {
            long n2 = j / p, l2 = j % p;
            long nn = (n1 + n2) % M;
            long l = ((n2 % 2 == 1 ? p - l1 : l1) + l2) % p;
            t[i * n + j] = static_cast<Elem>(nn * p + l);
        }
        std::string s = n1 == 0 ? "" : (n1 == 1 ? "x" : "x^" + std::to_string(n1));
        if (l1 > 0) s += l1 == 1 ? "y" : "y^" + std::to_string(l1);
        labels[i] = s.empty() ? "e" : s;
    }
    const Elem x = static_cast<Elem>(p), y = 1;
    FiniteGroup g(n, std::move(t), {x, y}, std::move(labels), family_name(FamilyParams::dprime(k, p)));
    g.set_named('x', x);
    g.set_named('y', y);
    return g;
}

// Q8 as signed quaternion units, in the order e, x=i, y=j, x^2=-1, xy=k, yx=-k, x^3=-i, y^3=-j.
struct Q8 {
    int mul[8][8];
    int phi[8];  // conjugation by z: i -> j -> k -> i
    const char* name[8] = {"e", "x", "y", "x^2", "xy", "yx", "x^3", "y^3"};

    Q8() {
        const int sign[8] = {1, 1, 1, -1, 1, -1, -1, -1};
        const int unit[8] = {0, 1, 2, 0, 3, 3, 1, 2};
        // unit products: [u][v] -> sign * unit
        const int us[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        const int uu[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        auto code = [&](int s, int u) {
            for (int c = 0; c < 8; ++c) {
                if (sign[c] == s && unit[c] == u) return c;
            }
            return -1;
        };
        const int rot[4] = {0, 2, 3, 1};
        for (int a = 0; a < 8; ++a) {
            for (int b = 0; b < 8; ++b) {
                mul[a][b] = code(sign[a] * sign[b] * us[unit[a]][unit[b]], uu[unit[a]][unit[b]]);
            }
            phi[a] = code(sign[a], rot[unit[a]]);
        }
    }
};

// w z^l  <->  w*3^k + l
FiniteGroup tprime_group(long k) {
    static const Q8 q;
    const long K = pow_int(3, k).get_si();
    const std::size_t n = 8 * K;
    std::vector<Elem> t(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        long w1 = i / K, l1 = i % K;
        for (std::size_t j = 0; j < n; ++j) {
            long w2 = j / K, l2 = j % K;
            int v = static_cast<int>(w2);
            for (long r = 0; r < l1 % 3; ++r) v = q.phi[v];
            t[i * n + j] = static_cast<Elem>(q.mul[w1][v] * K + (l1 + l2) % K);
        }
        std::string s = w1 == 0 ? "" : q.name[w1];
        if (l1 > 0) s += l1 == 1 ? "z" : "z^" + std::to_string(l1);
        labels[i] = s.empty() ? "e" : s;
    }
    const Elem x = static_cast<Elem>(K), y = static_cast<Elem>(2 * K), z = 1;
    FiniteGroup g(n, std::move(t), {x, y, z}, std::move(labels), family_name(FamilyParams::tprime(k)));
    g.set_named('x', x);
    g.set_named('y', y);
    g.set_named('z', z);
    return g;
}

std::size_t generated_size(const FiniteGroup& g, std::initializer_list<Elem> gens) {
    std::vector<char> seen(g.order(), 0);
    std::vector<Elem> stack{g.identity()};
    seen[g.identity()] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        Elem a = stack.back();
        stack.pop_back();
        for (Elem s : gens) {
            Elem b = g.mul(a, s);
            if (!seen[b]) {
                seen[b] = 1;
                ++count;
                stack.push_back(b);
            }
        }
    }
    return count;
}

// Images of x, y, z satisfying x^2=(xy)^2=y^2, zxz^-1=y, zyz^-1=xy, z^3=1 and generating.
void name_tstar_xyz(FiniteGroup& g) {
    const Elem e = g.identity();
    const std::size_t n = g.order();
    for (Elem x = 0; x < n; ++x) {
        Elem x2 = g.mul(x, x);
        if (x2 == e) continue;
        for (Elem y = 0; y < n; ++y) {
            Elem xy = g.mul(x, y);
            if (g.mul(y, y) != x2 || g.mul(xy, xy) != x2) continue;
            for (Elem z = 0; z < n; ++z) {
                if (z == e || g.pow(z, 3) != e) continue;
                Elem zi = g.inv(z);
                if (g.mul(g.mul(z, x), zi) != y || g.mul(g.mul(z, y), zi) != xy) continue;
                if (generated_size(g, {x, y, z}) != n) continue;
                g.set_named('x', x);
                g.set_named('y', y);
                g.set_named('z', z);
                return;
            }
        }
    }
    throw InternalError("no x, y, z satisfying the second Tstar presentation");
}

}  // namespace

FiniteGroup construct_family(const FamilyParams& params, std::size_t table_cap) {
    validate(params);
    Integer order = family_order(params);
    if (!order.fits_ulong_p()) throw ResourceError(family_name(params) + ": order too large to tabulate");
    const std::size_t n = order.get_ui();
    check_cap(n, table_cap, family_name(params));
    switch (params.family) {
        case Family::Cyclic: return cyclic_group(params.n);
        case Family::BinaryDihedral: return binary_dihedral_group(params.p);
        case Family::DPrime: return dprime_group(params.k, params.p);
        case Family::TPrime: return tprime_group(params.k);
        case Family::TStar:
        case Family::OStar:
        case Family::IStar: {
            FiniteGroup g = enumerate(family_presentation(params), 20 * n);
            if (g.order() != n) {
                throw InternalError(family_name(params) + ": coset enumeration gave order " +
                                    std::to_string(g.order()));
            }
            if (params.family == Family::TStar) name_tstar_xyz(g);
            return g;
        }
    }
    throw InvalidParameter("unknown family");
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2, std::size_t table_cap) {
    const std::size_t n1 = g1.order(), n2 = g2.order();
    if (n1 > table_cap / n2) throw ResourceError("direct product order exceeds the table cap");
    const std::size_t n = n1 * n2;
    check_cap(n, table_cap, "direct product " + g1.family_tag() + " x " + g2.family_tag());
    std::vector<Elem> t(n * n);
    for (std::size_t a1 = 0; a1 < n1; ++a1) {
        for (std::size_t a2 = 0; a2 < n2; ++a2) {
            Elem* row = t.data() + (a1 * n2 + a2) * n;
            const Elem* r1 = g1.row(static_cast<Elem>(a1));
            const Elem* r2 = g2.row(static_cast<Elem>(a2));
            for (std::size_t b1 = 0; b1 < n1; ++b1) {
                const std::size_t base = static_cast<std::size_t>(r1[b1]) * n2;
                for (std::size_t b2 = 0; b2 < n2; ++b2) row[b1 * n2 + b2] = static_cast<Elem>(base + r2[b2]);
            }
        }
    }
    std::vector<Elem> gens;
    for (Elem s : g1.generators()) gens.push_back(static_cast<Elem>(s * n2 + g2.identity()));
    for (Elem s : g2.generators()) gens.push_back(static_cast<Elem>(g1.identity() * n2 + s));
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t a1 = 0; a1 < n1; ++a1) {
        for (std::size_t a2 = 0; a2 < n2; ++a2) labels.push_back("(" + g1.label(a1) + "|" + g2.label(a2) + ")");
    }
    return FiniteGroup(n, std::move(t), std::move(gens), std::move(labels),
                       g1.family_tag() + " x " + g2.family_tag());
}

std::vector<std::uint32_t> element_orders(const FiniteGroup& g) {
    std::vector<std::uint32_t> out(g.order());
    for (Elem a = 0; a < g.order(); ++a) {
        Elem x = a;
        std::uint32_t k = 1;
        while (x != g.identity()) {
            x = g.mul(x, a);
            ++k;
        }
        out[a] = k;
    }
    return out;
}

bool check_group_axioms(const FiniteGroup& g, std::size_t exhaustive_limit, std::size_t samples,
                        std::uint64_t seed) {
    const std::size_t n = g.order();
    const Elem e = g.identity();
    for (Elem a = 0; a < n; ++a) {
        if (g.mul(a, e) != a || g.mul(e, a) != a) return false;
        if (g.mul(a, g.inv(a)) != e || g.mul(g.inv(a), a) != e) return false;
    }
    if (n <= exhaustive_limit) {
        for (Elem a = 0; a < n; ++a) {
            for (Elem b = 0; b < n; ++b) {
                Elem ab = g.mul(a, b);
                for (Elem c = 0; c < n; ++c) {
                    if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) return false;
                }
            }
        }
        return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::size_t s = 0; s < samples; ++s) {
        Elem a = pick(rng), b = pick(rng), c = pick(rng);
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
    }
    return true;
}

}  // namespace theta
