#ifndef THETA_CHARACTERS_HPP
#define THETA_CHARACTERS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "theta/conjugacy.hpp"
#include "theta/cyclo.hpp"
#include "theta/group.hpp"

namespace theta {

/// Columns follow the class numbering of the ClassData the table was built for.
struct CharacterTable {
    int conductor = 1;
    std::vector<std::string> row_names;
    std::vector<std::string> column_labels;
    std::vector<std::uint64_t> class_sizes;
    std::vector<std::vector<CycloNumber>> values;  // [irreducible][class]
    std::vector<long> degrees;
    std::vector<bool> real_flags;
    /// Sparse forms of values over zeta_conductor, kept by product_table;
    /// empty means pack(values) on demand.
    std::vector<std::vector<PackedCyclo>> packed;

    std::size_t num_rows() const { return values.size(); }
    std::size_t num_classes() const { return class_sizes.size(); }
};

/// Parametric table of a family, aligned with cd = compute_classes(g) where
/// g = construct_family(params). Every column is placed by evaluating its
/// representative word in g; a collision or size mismatch throws InternalError.
CharacterTable family_table(const FamilyParams& params, const FiniteGroup& g, const ClassData& cd);

/// Tensor-product table of A x B, aligned with product_classes(cd_a, cd_b).
CharacterTable product_table(const CharacterTable& a, const CharacterTable& b);

/// Sum of the real-valued irreducible characters at a class.
Integer real_char_sum(const CharacterTable& t, std::size_t cls);

Rational d2_char_formula(const CharacterTable& t, const ClassData& cd);

struct OrthogonalityReport {
    bool rows = false;
    bool columns = false;
    bool degrees = false;
    std::string detail;

    bool ok() const { return rows && columns && degrees; }
};

OrthogonalityReport check_orthogonality(const CharacterTable& t, std::size_t order);

/// Short display form: integers, i, sqrt2, phi, phi*, z8^3, 2cos(2pi*1/7), ...
std::string pretty(const CycloNumber& v);

std::string format_table_text(const CharacterTable& t);
std::string format_table_csv(const CharacterTable& t);

}  // namespace theta

#endif
