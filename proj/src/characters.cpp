#include "theta/characters.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>

#include "theta/errors.hpp"

namespace theta {

namespace {

struct Column {
    std::string word;
    std::uint64_t size;
    std::vector<CycloNumber> values;  // per row
    std::vector<PackedCyclo> packed;  // optional sparse form of values
};

struct RawTable {
    int conductor = 1;
    std::vector<std::string> rows;
    std::vector<Column> columns;
};

CycloNumber z(int n, long k) { return CycloNumber::root(n, k); }

std::string power(const std::string& g, long e) {
    if (e == 0) return "";
    if (e == 1) return g;
    return g + "^" + std::to_string(e);
}

std::string word_or_one(const std::string& w) { return w.empty() ? "1" : w; }

RawTable cyclic_raw(long n) {
    RawTable t;
    t.conductor = static_cast<int>(n);
    for (long lam = 0; lam < n; ++lam) t.rows.push_back("V" + std::to_string(lam));
    for (long m = 0; m < n; ++m) {
        Column c{word_or_one(power("a", m)), 1, {}, {}};
        for (long lam = 0; lam < n; ++lam) {
            c.values.push_back(z(static_cast<int>(n), lam * m));
            c.packed.push_back(PackedCyclo{{{static_cast<int>(lam * m % n), 1}}});
        }
        t.columns.push_back(std::move(c));
    }
    return t;
}

RawTable binary_dihedral_raw(long p) {
    RawTable t;
    const int N = static_cast<int>(2 * p);
    t.conductor = std::lcm(N, 4);
    for (int i = 1; i <= 4; ++i) t.rows.push_back("V1_" + std::to_string(i));
    for (long lam = 1; lam < p; ++lam) t.rows.push_back("V2_" + std::to_string(lam));
    const CycloNumber v3x = p % 2 == 0 ? CycloNumber(1L) : z(4, 1);

    auto one_dim = [&](long k, int l) {
        // V1..V4 at a^k x^l
        const long sk = k % 2 == 0 ? 1 : -1;
        std::vector<CycloNumber> v;
        v.emplace_back(1L);
        v.emplace_back(l == 0 ? 1L : -1L);
        CycloNumber a3 = l == 0 ? CycloNumber(sk) : v3x.scaled(sk);
        CycloNumber a4 = l == 0 ? CycloNumber(sk) : v3x.scaled(-sk);
        v.push_back(a3);
        v.push_back(a4);
        return v;
    };
    auto add = [&](const std::string& word, std::uint64_t size, long k, int l) {
        Column c{word_or_one(word), size, one_dim(k, l), {}};
        for (long lam = 1; lam < p; ++lam) {
            if (l == 1) c.values.emplace_back(0L);
            else c.values.push_back(z(N, k * lam) + z(N, -k * lam));
        }
        t.columns.push_back(std::move(c));
    };
    add("", 1, 0, 0);
    for (long k = 1; k < p; ++k) add(power("a", k), 2, k, 0);
    add(power("a", p), 1, p, 0);
    add("x", p, 0, 1);
    add("ax", p, 1, 1);
    return t;
}

RawTable dprime_raw(long k, long p) {
    RawTable t;
    const int M = 1 << (k + 2);
    const int P = static_cast<int>(p);
    t.conductor = M * P;
    for (int j = 0; j < M; ++j) t.rows.push_back("V1_" + std::to_string(j));
    for (long s = 1; s <= (p - 1) / 2; ++s) {
        for (int tt = 0; tt < M / 2; ++tt) t.rows.push_back("V2_" + std::to_string(s) + "_" + std::to_string(tt));
    }
    auto add = [&](long n, long l, std::uint64_t size) {
        Column c{word_or_one(power("x", n) + power("y", l)), size, {}, {}};
        for (int j = 0; j < M; ++j) c.values.push_back(z(M, n * j));
        for (long s = 1; s <= (p - 1) / 2; ++s) {
            for (int tt = 0; tt < M / 2; ++tt) {
                if (n % 2 == 1) c.values.emplace_back(0L);
                else if (l == 0) c.values.push_back(z(M, n * tt).scaled(2));
                else c.values.push_back(z(M, n * tt) * (z(P, s * l) + z(P, -s * l)));
            }
        }
        t.columns.push_back(std::move(c));
    };
    for (long m = 0; m < M / 2; ++m) {
        add(2 * m, 0, 1);
        for (long l = 1; l <= (p - 1) / 2; ++l) add(2 * m, l, 2);
        add(2 * m + 1, 0, static_cast<std::uint64_t>(p));
    }
    return t;
}

RawTable tprime_raw(long k) {
    RawTable t;
    const int K = static_cast<int>(pow_int(3, k).get_si());
    t.conductor = K;
    for (int lam = 0; lam < K; ++lam) t.rows.push_back("V1_" + std::to_string(lam));
    for (int lam = 0; lam < K; ++lam) t.rows.push_back("V2_" + std::to_string(lam));
    for (int lam = 0; lam < K / 3; ++lam) t.rows.push_back("V3_" + std::to_string(lam));
    const long c2[7] = {2, -2, 0, -1, 1, -1, 1};
    const long c3[7] = {3, 3, -1, 0, 0, 0, 0};
    const char* w[7] = {"", "x^2", "x^2y", "", "x", "", "x^3"};
    const std::uint64_t size[7] = {1, 1, 6, 4, 4, 4, 4};
    const long shift[7] = {0, 0, 0, 1, 1, 2, 2};
    for (long m = 0; m < K / 3; ++m) {
        for (int type = 0; type < 7; ++type) {
            const long l = 3 * m + shift[type];
            Column c{word_or_one(std::string(w[type]) + power("z", l)), size[type], {}, {}};
            for (int lam = 0; lam < K; ++lam) c.values.push_back(z(K, l * lam));
            for (int lam = 0; lam < K; ++lam) c.values.push_back(z(K, l * lam).scaled(c2[type]));
            for (int lam = 0; lam < K / 3; ++lam) c.values.push_back(z(K, l * lam).scaled(c3[type]));
            t.columns.push_back(std::move(c));
        }
    }
    return t;
}

RawTable from_rows(int conductor, std::vector<std::string> words, std::vector<std::uint64_t> sizes,
                   const std::vector<std::vector<CycloNumber>>& rows, const std::string& prefix) {
    RawTable t;
    t.conductor = conductor;
    for (std::size_t i = 0; i < rows.size(); ++i) t.rows.push_back(prefix + std::to_string(i + 1));
    for (std::size_t c = 0; c < words.size(); ++c) {
        Column col{words[c], sizes[c], {}, {}};
        for (const auto& r : rows) col.values.push_back(r[c]);
        t.columns.push_back(std::move(col));
    }
    return t;
}

RawTable tstar_raw() {
    const CycloNumber w = z(3, 1), w2 = z(3, 2);
    using C = CycloNumber;
    std::vector<std::vector<C>> rows = {
        {1L, 1L, 1L, 1L, 1L, 1L, 1L},
        {1L, w2, 1L, 1L, w, w2, w},
        {1L, w, 1L, 1L, w2, w, w2},
        {2L, -1L, 0L, -2L, -1L, 1L, 1L},
        {2L, -w, 0L, -2L, -w2, w, w2},
        {2L, -w2, 0L, -2L, -w, w2, w},
        {3L, 0L, -1L, 3L, 0L, 0L, 0L},
    };
    return from_rows(3, {"1", "z", "x^2y", "x^2", "z^2", "x^2z", "x^3z^2"}, {1, 4, 6, 1, 4, 4, 4}, rows, "V");
}

RawTable ostar_raw() {
    const CycloNumber r2 = z(8, 1) + z(8, -1);
    using C = CycloNumber;
    std::vector<std::vector<C>> rows = {
        {1L, 1L, 1L, 1L, 1L, 1L, 1L, 1L},
        {1L, -1L, 1L, 1L, 1L, -1L, 1L, -1L},
        {2L, 0L, -1L, 2L, 2L, 0L, -1L, 0L},
        {2L, 0L, -1L, 0L, -2L, -r2, 1L, r2},
        {2L, 0L, -1L, 0L, -2L, r2, 1L, -r2},
        {3L, 1L, 0L, -1L, 3L, -1L, 0L, -1L},
        {3L, -1L, 0L, -1L, 3L, 1L, 0L, 1L},
        {4L, 0L, 1L, 0L, -4L, 0L, -1L, 0L},
    };
    return from_rows(8, {"1", "ab", "a^2", "b^2", "a^3", "b", "a", "a^2b"}, {1, 12, 8, 6, 1, 6, 8, 6}, rows, "A");
}

RawTable istar_raw() {
    const CycloNumber phi = -(z(5, 2) + z(5, 3));
    const CycloNumber phis = -(z(5, 1) + z(5, 4));
    using C = CycloNumber;
    std::vector<std::vector<C>> rows = {
        {1L, 1L, 1L, 1L, 1L, 1L, 1L, 1L, 1L},
        {2L, -2L, 0L, -1L, 1L, -phis, -phi, phis, phi},
        {2L, -2L, 0L, -1L, 1L, -phi, -phis, phi, phis},
        {3L, 3L, -1L, 0L, 0L, phi, phis, phi, phis},
        {3L, 3L, -1L, 0L, 0L, phis, phi, phis, phi},
        {4L, 4L, 0L, 1L, 1L, -1L, -1L, -1L, -1L},
        {4L, -4L, 0L, 1L, -1L, -1L, -1L, 1L, 1L},
        {5L, 5L, 1L, -1L, -1L, 0L, 0L, 0L, 0L},
        {6L, -6L, 0L, 0L, 0L, 1L, 1L, -1L, -1L},
    };
    return from_rows(5, {"1", "a^3", "(a^2b^2)^2a", "aba^2b", "a", "(a^2b^2)^2", "a^2b^2", "a^2b^2a", "b"},
                     {1, 1, 30, 20, 20, 12, 12, 12, 12}, rows, "A");
}

void finish_flags(CharacterTable& t) {
    t.degrees.clear();
    t.real_flags.clear();
    for (const auto& row : t.values) {
        auto d = row[0].as_rational();
        if (!d || !is_integer(*d) || *d <= 0) throw InternalError("character degree is not a positive integer");
        t.degrees.push_back(d->get_num().get_si());
        bool real = true;
        for (const auto& v : row) {
            if (!v.is_real()) {
                real = false;
                break;
            }
        }
        t.real_flags.push_back(real);
    }
}

CharacterTable align(const RawTable& raw, const FiniteGroup& g, const ClassData& cd) {
    const std::size_t r = cd.num_classes();
    if (raw.columns.size() != r || raw.rows.size() != r) {
        throw InternalError("parametric table has " + std::to_string(raw.rows.size()) + " rows and " +
                            std::to_string(raw.columns.size()) + " columns, group has " + std::to_string(r) +
                            " classes");
    }
    CharacterTable t;
    t.conductor = raw.conductor;
    t.row_names = raw.rows;
    t.column_labels.assign(r, "");
    t.class_sizes = cd.sizes;
    t.values.assign(r, std::vector<CycloNumber>(r));
    const bool sparse = std::all_of(raw.columns.begin(), raw.columns.end(),
                                    [&](const Column& col) { return col.packed.size() == r; });
    if (sparse) t.packed.assign(r, std::vector<PackedCyclo>(r));
    std::vector<char> used(r, 0);
    for (const auto& col : raw.columns) {
        const Elem e = g.evaluate(col.word);
        const auto c = cd.class_of[e];
        if (used[c]) {
            throw InternalError("table column " + col.word + " lands in an already used class");
        }
        if (cd.sizes[c] != col.size) {
            throw InternalError("table column " + col.word + " has size " + std::to_string(col.size) +
                                " but its class has size " + std::to_string(cd.sizes[c]));
        }
        used[c] = 1;
        t.column_labels[c] = col.word;
        for (std::size_t i = 0; i < r; ++i) {
            t.values[i][c] = col.values[i];
            if (sparse) t.packed[i][c] = col.packed[i];
        }
    }
    if (t.values[0] != std::vector<CycloNumber>(r, CycloNumber(1L))) {
        throw InternalError("first row is not the trivial character");
    }
    finish_flags(t);
    return t;
}

}  // namespace

CharacterTable family_table(const FamilyParams& params, const FiniteGroup& g, const ClassData& cd) {
    validate(params);
    switch (params.family) {
        case Family::Cyclic: return align(cyclic_raw(params.n), g, cd);
        case Family::BinaryDihedral: return align(binary_dihedral_raw(params.p), g, cd);
        case Family::DPrime: return align(dprime_raw(params.k, params.p), g, cd);
        case Family::TPrime: return align(tprime_raw(params.k), g, cd);
        case Family::TStar: return align(tstar_raw(), g, cd);
        case Family::OStar: return align(ostar_raw(), g, cd);
        case Family::IStar: return align(istar_raw(), g, cd);
    }
    throw UnsupportedGroup("no parametric table for this family");
}

namespace {

std::vector<std::vector<PackedCyclo>> sparse_values(const CharacterTable& t, int n) {
    std::vector<std::vector<PackedCyclo>> out(t.num_rows());
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        for (std::size_t c = 0; c < t.num_classes(); ++c) {
            out[i].push_back(t.packed.empty() ? pack(t.values[i][c], n) : rescale(t.packed[i][c], t.conductor, n));
        }
    }
    return out;
}

}  // namespace

CharacterTable product_table(const CharacterTable& a, const CharacterTable& b) {
    CharacterTable t;
    t.conductor = std::lcm(a.conductor, b.conductor);
    const std::size_t ra = a.num_classes(), rb = b.num_classes();
    for (std::size_t i = 0; i < ra; ++i) {
        for (std::size_t j = 0; j < rb; ++j) {
            t.column_labels.push_back("(" + a.column_labels[i] + "|" + b.column_labels[j] + ")");
            t.class_sizes.push_back(a.class_sizes[i] * b.class_sizes[j]);
        }
    }
    const auto sparse_a = sparse_values(a, t.conductor), sparse_b = sparse_values(b, t.conductor);
    for (std::size_t x = 0; x < a.num_rows(); ++x) {
        for (std::size_t y = 0; y < b.num_rows(); ++y) {
            t.row_names.push_back(a.row_names[x] + "*" + b.row_names[y]);
            std::vector<CycloNumber> row;
            std::vector<PackedCyclo> packed_row;
            row.reserve(ra * rb);
            packed_row.reserve(ra * rb);
            for (std::size_t i = 0; i < ra; ++i) {
                for (std::size_t j = 0; j < rb; ++j) {
                    row.push_back(a.values[x][i] * b.values[y][j]);
                    packed_row.push_back(multiply(sparse_a[x][i], sparse_b[y][j], t.conductor));
                }
            }
            t.values.push_back(std::move(row));
            t.packed.push_back(std::move(packed_row));
        }
    }
    finish_flags(t);
    return t;
}

Integer real_char_sum(const CharacterTable& t, std::size_t cls) {
    CycloNumber s;
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        if (t.real_flags[i]) s += t.values[i][cls];
    }
    auto q = s.as_rational();
    if (!q || !is_integer(*q)) {
        throw InternalError("sum of real characters at class " + std::to_string(cls) +
                            " is not a rational integer: " + s.to_string());
    }
    return q->get_num();
}

Rational d2_char_formula(const CharacterTable& t, const ClassData& cd) {
    const std::size_t r = cd.num_classes();
    if (t.num_classes() != r) throw InvalidParameter("table and class data disagree on class count");
    const Integer n(static_cast<unsigned long>(cd.group_order));
    std::vector<Integer> S(r);
    for (std::size_t c = 0; c < r; ++c) S[c] = real_char_sum(t, c);
    Rational sum = 0;
    for (std::size_t c = 0; c < r; ++c) {
        const Integer size(static_cast<unsigned long>(cd.sizes[c]));
        Integer term = size * S[c] * S[c] * S[c] + 3 * n * S[c] + 2 * size * S[cd.cube_class[c]];
        sum += Rational(term);
    }
    return sum / (6 * n);
}

OrthogonalityReport check_orthogonality(const CharacterTable& t, std::size_t order) {
    OrthogonalityReport rep;
    const std::size_t r = t.num_rows();
    const int N = t.conductor;
    std::ostringstream detail;

    std::uint64_t deg2 = 0;
    for (long d : t.degrees) deg2 += static_cast<std::uint64_t>(d) * d;
    rep.degrees = deg2 == order && t.num_classes() == r;
    if (!rep.degrees) detail << "sum of squared degrees " << deg2 << " != " << order << "; ";

    // packed values as flat arrays: entry (i, c) occupies [off[i*cols+c], off[i*cols+c+1])
    struct Flat {
        std::vector<std::size_t> off{0};
        std::vector<int> exps;
        std::vector<std::int64_t> coefs;

        void push(const PackedCyclo& p) {
            for (const auto& [e, c] : p.terms) {
                exps.push_back(e);
                coefs.push_back(c);
            }
            off.push_back(exps.size());
        }
    };
    const std::size_t cols = t.num_classes();
    Flat v, vc;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = 0; c < cols; ++c) {
            const PackedCyclo p = t.packed.empty() ? pack(t.values[i][c], N) : t.packed[i][c];
            v.push(p);
            vc.push(conj(p, N));
        }
    }
    CycloAccumulator acc(N);
    auto add = [&](std::size_t a, std::size_t b, std::int64_t w) {
        if (v.off[a + 1] - v.off[a] == 1 && vc.off[b + 1] - vc.off[b] == 1) {
            int k = v.exps[v.off[a]] + vc.exps[vc.off[b]];
            if (k >= N) k -= N;
            std::int64_t t;
            if (__builtin_mul_overflow(v.coefs[v.off[a]] * vc.coefs[vc.off[b]], w, &t) || !acc.add_term(k, t))
                throw ResourceError("cyclotomic accumulator overflow");
            return;
        }
        acc.add_product(v.exps.data() + v.off[a], v.coefs.data() + v.off[a], v.off[a + 1] - v.off[a],
                        vc.exps.data() + vc.off[b], vc.coefs.data() + vc.off[b], vc.off[b + 1] - vc.off[b], w);
    };
    auto equals = [&](std::int64_t expected) {
        auto red = acc.reduced();
        if (red[0] != expected) return false;
        for (std::size_t e = 1; e < red.size(); ++e) {
            if (red[e] != 0) return false;
        }
        return true;
    };

    rep.rows = true;
    for (std::size_t i = 0; i < r && rep.rows; ++i) {
        for (std::size_t j = i; j < r; ++j) {
            acc.clear();
            for (std::size_t c = 0; c < cols; ++c) {
                add(i * cols + c, j * cols + c, static_cast<std::int64_t>(t.class_sizes[c]));
            }
            if (!equals(i == j ? static_cast<std::int64_t>(order) : 0)) {
                rep.rows = false;
                detail << "rows " << t.row_names[i] << ", " << t.row_names[j] << " not orthogonal; ";
                break;
            }
        }
    }
    rep.columns = true;
    for (std::size_t c = 0; c < cols && rep.columns; ++c) {
        for (std::size_t d = c; d < cols; ++d) {
            acc.clear();
            for (std::size_t i = 0; i < r; ++i) add(i * cols + c, i * cols + d, 1);
            std::int64_t expected = 0;
            if (c == d) {
                if (order % t.class_sizes[c] != 0) {
                    rep.columns = false;
                    break;
                }
                expected = static_cast<std::int64_t>(order / t.class_sizes[c]);
            }
            if (!equals(expected)) {
                rep.columns = false;
                detail << "columns " << t.column_labels[c] << ", " << t.column_labels[d] << " not orthogonal; ";
                break;
            }
        }
    }
    rep.detail = detail.str();
    return rep;
}

std::string pretty(const CycloNumber& v) {
    if (auto q = v.as_rational()) return to_string(*q);
    const int N = v.conductor();
    const CycloNumber sqrt2 = CycloNumber::root(8, 1) + CycloNumber::root(8, -1);
    const CycloNumber phi = -(CycloNumber::root(5, 2) + CycloNumber::root(5, 3));
    const CycloNumber phis = -(CycloNumber::root(5, 1) + CycloNumber::root(5, 4));
    const std::pair<const CycloNumber*, const char*> named[] = {{&sqrt2, "sqrt2"}, {&phi, "phi"}, {&phis, "phi*"}};
    for (const auto& [c, name] : named) {
        if (N % c->conductor() != 0) continue;
        if (v == *c) return name;
        if (v == -*c) return std::string("-") + name;
    }
    for (int d = 1; d <= N; ++d) {
        if (N % d != 0) continue;
        for (int k = 1; k < d; ++k) {
            if (std::gcd(k, d) != 1) continue;
            const CycloNumber r = CycloNumber::root(d, k);
            const std::string base = d == 4 ? (k == 1 ? "i" : "-i") : "z" + std::to_string(d) + "^" + std::to_string(k);
            if (v == r) return base;
            if (v == -r) return base[0] == '-' ? base.substr(1) : "-" + base;
            if (2 * k < d) {
                const CycloNumber c = r + CycloNumber::root(d, -k);
                const std::string cs = "2cos(2pi*" + std::to_string(k) + "/" + std::to_string(d) + ")";
                if (v == c) return cs;
                if (v == -c) return "-" + cs;
            }
        }
    }
    return v.to_string();
}

std::string format_table_text(const CharacterTable& t) {
    const std::size_t r = t.num_classes();
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"class"}, sizes{"size"};
    for (std::size_t c = 0; c < r; ++c) {
        head.push_back(t.column_labels[c]);
        sizes.push_back(std::to_string(t.class_sizes[c]));
    }
    cells.push_back(head);
    cells.push_back(sizes);
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        std::vector<std::string> row{t.row_names[i] + (t.real_flags[i] ? "" : " (c)")};
        for (std::size_t c = 0; c < r; ++c) row.push_back(pretty(t.values[i][c]));
        cells.push_back(std::move(row));
    }
    std::vector<std::size_t> width(r + 1, 0);
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << "  ";
            if (c == 0) os << std::left;
            else os << std::right;
            os << std::setw(static_cast<int>(width[c])) << row[c];
        }
        os << '\n';
    }
    return os.str();
}

std::string format_table_csv(const CharacterTable& t) {
    std::ostringstream os;
    os << "irreducible";
    for (const auto& l : t.column_labels) os << ',' << l;
    os << "\nsize";
    for (auto s : t.class_sizes) os << ',' << s;
    os << '\n';
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        os << t.row_names[i];
        for (const auto& v : t.values[i]) os << ',' << pretty(v);
        os << '\n';
    }
    return os.str();
}

}  // namespace theta
