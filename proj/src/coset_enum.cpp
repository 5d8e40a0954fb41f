#include "theta/coset_enum.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "theta/errors.hpp"

namespace theta {

namespace {

constexpr long kMaxPower = 1000000;

class WordParser {
public:
    WordParser(std::string_view text, const std::vector<char>& gens) : s_(text), gens_(gens) {}

    std::size_t pos() const { return pos_; }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    // expr := term ('*'? term)*
    Word expr() {
        Word w = term();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                append(w, term());
            } else if (starts_atom(c)) {
                append(w, term());
            } else {
                return w;
            }
        }
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool starts_atom(char c) const { return c == '(' || c == '1' || generator_index(c) >= 0; }
    int generator_index(char c) const {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i] == c) return static_cast<int>(i);
        }
        return -1;
    }
    static void append(Word& w, const Word& v) { w.insert(w.end(), v.begin(), v.end()); }

    // term := atom ('^' int)?
    Word term() {
        Word base = atom();
        if (peek() != '^') return base;
        ++pos_;
        long e = integer();
        Word unit = e < 0 ? invert(base) : base;
        Word out;
        for (long i = 0; i < std::labs(e); ++i) append(out, unit);
        return out;
    }

    Word atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Word w = expr();
            expect(')');
            return w;
        }
        if (c == '1') {
            ++pos_;
            return {};
        }
        int g = generator_index(c);
        if (g < 0) {
            if (c == '\0') fail("unexpected end of input");
            fail(std::string("unknown generator '") + c + "'");
        }
        ++pos_;
        return {g + 1};
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        skip_ws();
        long v = 0;
        std::size_t digits = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > kMaxPower) throw ParseError("exponent too large", start);
            ++pos_;
            ++digits;
        }
        if (digits == 0) fail("expected integer exponent");
        return neg ? -v : v;
    }

    std::string_view s_;
    const std::vector<char>& gens_;
    std::size_t pos_ = 0;
};

int letter_col(int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); }

class Enumerator {
public:
    Enumerator(const Presentation& p, std::size_t max_cosets)
        : cols_(static_cast<int>(2 * p.generator_count())), max_(max_cosets) {
        for (const auto& r : p.relators) {
            std::vector<int> cr;
            for (int l : r) cr.push_back(letter_col(l));
            rels_.push_back(std::move(cr));
        }
        hard_cap_ = max_ * 16 + 1024;
    }

    CosetTable run() {
        alloc();
        for (std::size_t c = 0; c < parent_.size(); ++c) {
            if (!alive(c)) continue;
            for (const auto& r : rels_) {
                scan_and_fill(static_cast<int>(c), r);
                if (!alive(c)) break;
            }
            if (!alive(c)) continue;
            for (int x = 0; x < cols_; ++x) {
                if (at(c, x) == -1) define(static_cast<int>(c), x);
            }
        }
        return finish();
    }

private:
    int& at(std::size_t c, int x) { return table_[c * cols_ + x]; }
    bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

    int alloc() {
        if (active_ >= max_) {
            throw ResourceError("coset enumeration exceeded max_cosets = " + std::to_string(max_));
        }
        if (parent_.size() >= hard_cap_) {
            throw ResourceError("coset enumeration exceeded its allocation cap (max_cosets = " +
                                std::to_string(max_) + ")");
        }
        int d = static_cast<int>(parent_.size());
        parent_.push_back(d);
        table_.resize(table_.size() + cols_, -1);
        ++active_;
        return d;
    }

    void define(int c, int x) {
        int d = alloc();
        at(c, x) = d;
        at(d, x ^ 1) = c;
    }

    int rep(int c) {
        int r = c;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[c] != r) {
            int next = parent_[c];
            parent_[c] = r;
            c = next;
        }
        return r;
    }

    void merge(int k, int l, std::vector<int>& q) {
        int a = rep(k), b = rep(l);
        if (a == b) return;
        int lo = std::min(a, b), hi = std::max(a, b);
        parent_[hi] = lo;
        q.push_back(hi);
        --active_;
    }

    void coincidence(int a, int b) {
        std::vector<int> q;
        merge(a, b, q);
        for (std::size_t i = 0; i < q.size(); ++i) {
            int g = q[i];
            for (int x = 0; x < cols_; ++x) {
                int d = at(g, x);
                if (d == -1) continue;
                at(d, x ^ 1) = -1;
                int m = rep(g), n = rep(d);
                if (at(m, x) != -1) {
                    merge(n, at(m, x), q);
                } else if (at(n, x ^ 1) != -1) {
                    merge(m, at(n, x ^ 1), q);
                } else {
                    at(m, x) = n;
                    at(n, x ^ 1) = m;
                }
            }
        }
    }

    void scan_and_fill(int c, const std::vector<int>& w) {
        int f = c, b = c;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        for (;;) {
            while (i <= j && at(f, w[i]) != -1) f = at(f, w[i++]);
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && at(b, w[j] ^ 1) != -1) b = at(b, w[j--] ^ 1);
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                at(f, w[i]) = b;
                at(b, w[i] ^ 1) = f;
                return;
            }
            define(f, w[i]);
        }
    }

    CosetTable finish() {
        std::vector<int> idx(parent_.size(), -1);
        int n = 0;
        for (std::size_t c = 0; c < parent_.size(); ++c) {
            if (alive(c)) idx[c] = n++;
        }
        CosetTable t;
        t.action.assign(n, std::vector<int>(cols_, -1));
        for (std::size_t c = 0; c < parent_.size(); ++c) {
            if (!alive(c)) continue;
            for (int x = 0; x < cols_; ++x) {
                int d = at(c, x);
                if (d == -1) throw InternalError("coset table incomplete after enumeration");
                t.action[idx[c]][x] = idx[rep(d)];
            }
        }
        for (int x = 0; x < cols_; x += 2) {
            std::vector<char> seen(n, 0);
            for (int c = 0; c < n; ++c) {
                int d = t.action[c][x];
                if (seen[d] || t.action[d][x + 1] != c) {
                    throw InternalError("generator does not act as a permutation of cosets");
                }
                seen[d] = 1;
            }
        }
        t.complete = true;
        return t;
    }

    int cols_;
    std::size_t max_;
    std::size_t hard_cap_;
    std::size_t active_ = 0;
    std::vector<std::vector<int>> rels_;
    std::vector<int> table_;
    std::vector<int> parent_;
};

Presentation make(std::vector<char> gens, std::initializer_list<std::string> relations) {
    std::string text = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) text += ",";
        text += gens[i];
    }
    text += " | ";
    bool first = true;
    for (const auto& r : relations) {
        if (!first) text += ", ";
        first = false;
        text += r;
    }
    text += ">";
    return parse_presentation(text);
}

}  // namespace

Word invert(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (int& l : r) l = -l;
    return r;
}

Word free_reduce(const Word& w) {
    Word out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

Word parse_word(std::string_view text, const std::vector<char>& generators) {
    WordParser p(text, generators);
    Word w = p.expr();
    if (!p.at_end()) p.fail("unexpected character");
    return free_reduce(w);
}

Presentation parse_presentation(std::string_view text) {
    Presentation pres;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (pos >= text.size() || text[pos] != '<') throw ParseError("expected '<'", pos);
    ++pos;
    for (;;) {
        skip();
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected generator letter", pos);
        char g = text[pos];
        if (std::find(pres.generators.begin(), pres.generators.end(), g) != pres.generators.end())
            throw ParseError(std::string("duplicate generator '") + g + "'", pos);
        pres.generators.push_back(g);
        ++pos;
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    if (pos >= text.size() || text[pos] != '|') throw ParseError("expected '|'", pos);
    ++pos;
    std::size_t close = text.rfind('>');
    if (close == std::string_view::npos || close < pos) throw ParseError("expected '>'", text.size());
    for (std::size_t k = close + 1; k < text.size(); ++k) {
        if (!std::isspace(static_cast<unsigned char>(text[k]))) throw ParseError("trailing input", k);
    }
    const std::size_t body_start = pos;
    std::string_view body = text.substr(body_start, close - body_start);

    // split on top-level commas, then on '='
    std::size_t start = 0;
    int depth = 0;
    auto handle = [&](std::size_t a, std::size_t b) {
        std::string_view rel = body.substr(a, b - a);
        if (rel.find_first_not_of(" \t\r\n") == std::string_view::npos) {
            if (b < body.size() || a > 0) throw ParseError("empty relation", body_start + a);
            return;
        }
        std::vector<Word> sides;
        std::size_t s = 0;
        for (std::size_t i = 0; i <= rel.size(); ++i) {
            if (i == rel.size() || rel[i] == '=') {
                try {
                    sides.push_back(parse_word(rel.substr(s, i - s), pres.generators));
                } catch (const ParseError& e) {
                    throw ParseError(e.what() + std::string(" (in relation)"), body_start + a + s + e.offset());
                }
                s = i + 1;
            }
        }
        if (sides.size() == 1) {
            if (!sides[0].empty()) pres.relators.push_back(sides[0]);
            return;
        }
        for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
            Word w = sides[i];
            Word v = invert(sides[i + 1]);
            w.insert(w.end(), v.begin(), v.end());
            w = free_reduce(w);
            if (!w.empty()) pres.relators.push_back(w);
        }
    };
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '(') ++depth;
        else if (body[i] == ')') --depth;
        else if (body[i] == ',' && depth == 0) {
            handle(start, i);
            start = i + 1;
        }
    }
    handle(start, body.size());
    return pres;
}

std::string word_to_string(const Word& w, const std::vector<char>& generators) {
    if (w.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        long run = static_cast<long>(j - i) * (w[i] < 0 ? -1 : 1);
        os << generators[std::abs(w[i]) - 1];
        if (run != 1) os << '^' << run;
        i = j;
    }
    return os.str();
}

std::string to_string(const Presentation& p) {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < p.generators.size(); ++i) os << (i ? "," : "") << p.generators[i];
    os << " | ";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        os << (i ? ", " : "") << word_to_string(p.relators[i], p.generators);
    }
    os << '>';
    return os.str();
}

Presentation family_presentation(const FamilyParams& params) {
    validate(params);
    switch (params.family) {
        case Family::Cyclic:
            return make({'a'}, {"a^" + std::to_string(params.n)});
        case Family::BinaryDihedral:
            return make({'a', 'x'}, {"a^" + std::to_string(2 * params.p),
                                     "x^2=a^" + std::to_string(params.p), "x^-1*a*x=a^-1"});
        case Family::DPrime:
            return make({'x', 'y'}, {"x^" + std::to_string(1L << (params.k + 2)),
                                     "y^" + std::to_string(params.p), "x*y^-1=y*x"});
        case Family::TStar:
            return make({'a', 'b'}, {"(a*b)^2=a^3=b^3"});
        case Family::TPrime:
            return make({'x', 'y', 'z'},
                        {"x^2=(x*y)^2=y^2", "z*x*z^-1=y", "z*y*z^-1=x*y",
                         "z^" + pow_int(3, params.k).get_str()});
        case Family::OStar:
            return make({'a', 'b'}, {"(a*b)^2=a^3=b^4"});
        case Family::IStar:
            return make({'a', 'b'}, {"(a*b)^2=a^3=b^5"});
    }
    throw InvalidParameter("unknown family");
}

Presentation binary_dihedral_xy_presentation(long p) {
    validate(FamilyParams::binary_dihedral(p));
    return make({'x', 'y'}, {"x^2=(x*y)^2=y^" + std::to_string(p)});
}

CosetTable enumerate_cosets(const Presentation& p, std::size_t max_cosets) {
    if (p.generators.empty()) throw InvalidParameter("presentation has no generators");
    if (p.relators.empty()) throw InvalidParameter("presentation has an empty relator set");
    for (const auto& r : p.relators) {
        if (r.empty()) throw InvalidParameter("empty relator");
        for (int l : r) {
            if (l == 0 || std::abs(l) > static_cast<int>(p.generator_count()))
                throw InvalidParameter("relator letter out of range");
        }
    }
    if (max_cosets == 0) throw InvalidParameter("max_cosets must be positive");
    return Enumerator(p, max_cosets).run();
}

FiniteGroup enumerate(const Presentation& p, std::size_t max_cosets) {
    CosetTable t = enumerate_cosets(p, max_cosets);
    const std::size_t n = t.action.size();
    const int cols = static_cast<int>(2 * p.generator_count());

    // shortlex renumbering by breadth-first search from the identity coset
    std::vector<int> order{0}, newidx(n, -1), par(n, -1), via(n, -1);
    newidx[0] = 0;
    for (std::size_t h = 0; h < order.size(); ++h) {
        int c = order[h];
        for (int x = 0; x < cols; ++x) {
            int d = t.action[c][x];
            if (newidx[d] != -1) continue;
            newidx[d] = static_cast<int>(order.size());
            par[newidx[d]] = static_cast<int>(h);
            via[newidx[d]] = x;
            order.push_back(d);
        }
    }
    if (order.size() != n) throw InternalError("coset graph is not connected");

    std::vector<std::vector<int>> act(n, std::vector<int>(cols));
    for (std::size_t i = 0; i < n; ++i) {
        for (int x = 0; x < cols; ++x) act[i][x] = newidx[t.action[order[i]][x]];
    }

    std::vector<Elem> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        Elem* row = table.data() + i * n;
        row[0] = static_cast<Elem>(i);
        for (std::size_t j = 1; j < n; ++j) row[j] = static_cast<Elem>(act[row[par[j]]][via[j]]);
    }

    std::vector<std::string> labels(n);
    std::vector<Word> words(n);
    for (std::size_t j = 1; j < n; ++j) {
        words[j] = words[par[j]];
        int x = via[j];
        words[j].push_back(x % 2 == 0 ? x / 2 + 1 : -(x / 2 + 1));
    }
    for (std::size_t j = 0; j < n; ++j) labels[j] = word_to_string(words[j], p.generators);

    std::vector<Elem> gens;
    for (std::size_t g = 0; g < p.generator_count(); ++g) gens.push_back(static_cast<Elem>(act[0][2 * g]));
    FiniteGroup G(n, std::move(table), gens, std::move(labels), to_string(p));
    for (std::size_t g = 0; g < p.generator_count(); ++g) G.set_named(p.generators[g], gens[g]);
    return G;
}

}  // namespace theta
