#ifndef THETA_CONJUGACY_HPP
#define THETA_CONJUGACY_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "theta/group.hpp"
#include "theta/rational.hpp"

namespace theta {

/// Conjugacy classes numbered by smallest contained element index.
struct ClassData {
    std::size_t group_order = 0;
    std::vector<std::uint32_t> class_of;
    std::vector<Elem> representatives;  // smallest element of each class
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint32_t> square_class;
    std::vector<std::uint32_t> cube_class;
    std::vector<std::uint32_t> inverse_class;

    std::size_t num_classes() const { return sizes.size(); }
};

ClassData compute_classes(const FiniteGroup& g);

/// Class data of A x B from the factors' class data, with elements indexed
/// i * |B| + j. Equal to compute_classes(direct_product(A, B)).
ClassData product_classes(const ClassData& a, const ClassData& b);

/// Class pairs (i, j) with equal cube classes.
std::vector<std::pair<std::uint32_t, std::uint32_t>> delta3(const ClassData& cd);

/// (#self-inverse classes) + (#other classes)/2.
Integer z2_orbit_count(const ClassData& cd);

/// Sum over delta3 of |C(g)||C(h)| / |C(g^3)|.
Rational delta3_weighted_sum(const ClassData& cd);

/// d1 from class sizes and power maps alone.
Rational d1_class_formula(const ClassData& cd, std::size_t order);

}  // namespace theta

#endif
