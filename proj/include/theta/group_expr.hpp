#ifndef THETA_GROUP_EXPR_HPP
#define THETA_GROUP_EXPR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "theta/characters.hpp"
#include "theta/closed_forms.hpp"
#include "theta/conjugacy.hpp"
#include "theta/group.hpp"

namespace theta {

/// Product of atoms, left to right.
struct GroupExpr {
    std::vector<FamilyParams> factors;

    friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

/// Expr := Atom ('x' Atom)*
/// Atom := Z(n) | Dstar(p) | Dprime(k,p) | Tstar | Tprime(k) | Ostar | Istar
/// Whitespace-insensitive, atom names case-insensitive. Parameter ranges are
/// checked later by validate().
GroupExpr parse_group_expr(std::string_view text);

/// "Z(5) x Dstar(4)"
std::string to_string(const GroupExpr& e);
/// "Z5_x_Dstar4", safe for CSV.
std::string slug(const GroupExpr& e);

void validate(const GroupExpr& e);
Integer expr_order(const GroupExpr& e);

struct SpecMatch {
    std::optional<SphericalSpec> spec;
    std::string reason;  // why spec is empty
};

/// Matches the expression against the classification. Cyclic factors of
/// pairwise coprime orders are merged into one Z(m).
SpecMatch match_spherical(const GroupExpr& e);

FiniteGroup build_group(const GroupExpr& e, std::size_t table_cap = kProductTableCap);

/// Class data without building the full product table.
ClassData build_classes(const GroupExpr& e);

struct ClassesAndTable {
    ClassData classes;
    CharacterTable table;
};

ClassesAndTable build_table(const GroupExpr& e);

}  // namespace theta

#endif
