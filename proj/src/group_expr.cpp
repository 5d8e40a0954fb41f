#include "theta/group_expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "theta/errors.hpp"

namespace theta {

namespace {

struct AtomName {
    const char* name;
    Family family;
    int arity;
};

constexpr AtomName kAtoms[] = {
    {"Dprime", Family::DPrime, 2},   {"Dstar", Family::BinaryDihedral, 1}, {"Tprime", Family::TPrime, 1},
    {"Tstar", Family::TStar, 0},     {"Ostar", Family::OStar, 0},          {"Istar", Family::IStar, 0},
    {"Z", Family::Cyclic, 1},
};

class ExprParser {
public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    GroupExpr parse() {
        GroupExpr e;
        e.factors.push_back(atom());
        skip();
        while (pos_ < s_.size()) {
            if (s_[pos_] != 'x' && s_[pos_] != 'X') fail("expected 'x' or end of input");
            ++pos_;
            e.factors.push_back(atom());
            skip();
        }
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool matches(const char* name) const {
        std::size_t i = 0;
        for (; name[i]; ++i) {
            if (pos_ + i >= s_.size()) return false;
            if (std::tolower(static_cast<unsigned char>(s_[pos_ + i])) != std::tolower(static_cast<unsigned char>(name[i])))
                return false;
        }
        return true;
    }

    long integer() {
        skip();
        const std::size_t start = pos_;
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const int d = s_[pos_] - '0';
            if (v > (std::numeric_limits<long>::max() - d) / 10) throw ParseError("integer too large", start);
            v = v * 10 + d;
            ++pos_;
        }
        return neg ? -v : v;
    }

    FamilyParams atom() {
        skip();
        for (const auto& a : kAtoms) {
            if (!matches(a.name)) continue;
            pos_ += std::char_traits<char>::length(a.name);
            FamilyParams fp;
            fp.family = a.family;
            if (a.arity == 0) return fp;
            expect('(');
            const long first = integer();
            long second = 0;
            if (a.arity == 2) {
                expect(',');
                second = integer();
            }
            skip();
            if (pos_ < s_.size() && s_[pos_] == ',') fail("too many parameters");
            expect(')');
            switch (a.family) {
                case Family::Cyclic: fp.n = first; break;
                case Family::BinaryDihedral: fp.p = first; break;
                case Family::DPrime:
                    fp.k = first;
                    fp.p = second;
                    break;
                case Family::TPrime: fp.k = first; break;
                default: break;
            }
            return fp;
        }
        fail(pos_ >= s_.size() ? "expected group atom, got end of input" : "unknown group atom");
    }
};

std::string slug_atom(const FamilyParams& f) {
    switch (f.family) {
        case Family::Cyclic: return "Z" + std::to_string(f.n);
        case Family::BinaryDihedral: return "Dstar" + std::to_string(f.p);
        case Family::DPrime: return "Dprime" + std::to_string(f.k) + "-" + std::to_string(f.p);
        case Family::TPrime: return "Tprime" + std::to_string(f.k);
        default: return family_name(f);
    }
}

}  // namespace

GroupExpr parse_group_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string to_string(const GroupExpr& e) {
    std::string out;
    for (std::size_t i = 0; i < e.factors.size(); ++i) {
        if (i) out += " x ";
        out += family_name(e.factors[i]);
    }
    return out;
}

std::string slug(const GroupExpr& e) {
    std::string out;
    for (std::size_t i = 0; i < e.factors.size(); ++i) {
        if (i) out += "_x_";
        out += slug_atom(e.factors[i]);
    }
    return out;
}

void validate(const GroupExpr& e) {
    if (e.factors.empty()) throw InvalidParameter("empty group expression");
    for (const auto& f : e.factors) validate(f);
}

Integer expr_order(const GroupExpr& e) {
    Integer n = 1;
    for (const auto& f : e.factors) n *= family_order(f);
    return n;
}

SpecMatch match_spherical(const GroupExpr& e) {
    validate(e);
    long m = 1;
    std::optional<FamilyParams> other;
    for (const auto& f : e.factors) {
        if (f.family == Family::Cyclic) {
            if (std::gcd(m, f.n) != 1) {
                return {std::nullopt, "cyclic factors of orders " + std::to_string(m) + " and " + std::to_string(f.n) +
                                          " are not coprime"};
            }
            m *= f.n;
        } else if (other) {
            return {std::nullopt, "more than one non-cyclic factor"};
        } else {
            other = f;
        }
    }
    SphericalSpec s;
    if (!other) {
        s = SphericalSpec::cyclic(m);
    } else {
        switch (other->family) {
            case Family::BinaryDihedral: s = SphericalSpec::binary_dihedral(m, other->p); break;
            case Family::DPrime: s = SphericalSpec::dprime(m, other->k, other->p); break;
            case Family::TStar: s = SphericalSpec::tstar(m); break;
            case Family::TPrime: s = SphericalSpec::tprime(m, other->k); break;
            case Family::OStar: s = SphericalSpec::ostar(m); break;
            case Family::IStar: s = SphericalSpec::istar(m); break;
            case Family::Cyclic: break;
        }
    }
    try {
        validate(s);
    } catch (const InvalidParameter& ex) {
        return {std::nullopt, ex.what()};
    }
    return {s, ""};
}

FiniteGroup build_group(const GroupExpr& e, std::size_t table_cap) {
    validate(e);
    FiniteGroup g = construct_family(e.factors[0], std::max(table_cap, kFamilyTableCap));
    for (std::size_t i = 1; i < e.factors.size(); ++i) {
        g = direct_product(g, construct_family(e.factors[i]), table_cap);
    }
    return g;
}

ClassData build_classes(const GroupExpr& e) {
    validate(e);
    ClassData cd = compute_classes(construct_family(e.factors[0]));
    for (std::size_t i = 1; i < e.factors.size(); ++i) {
        cd = product_classes(cd, compute_classes(construct_family(e.factors[i])));
    }
    return cd;
}

ClassesAndTable build_table(const GroupExpr& e) {
    validate(e);
    ClassesAndTable out;
    for (std::size_t i = 0; i < e.factors.size(); ++i) {
        const FiniteGroup g = construct_family(e.factors[i]);
        ClassData cd = compute_classes(g);
        CharacterTable t = family_table(e.factors[i], g, cd);
        if (i == 0) {
            out.classes = std::move(cd);
            out.table = std::move(t);
        } else {
            out.classes = product_classes(out.classes, cd);
            out.table = product_table(out.table, t);
        }
    }
    return out;
}

}  // namespace theta
