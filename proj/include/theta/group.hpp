#ifndef THETA_GROUP_HPP
#define THETA_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "theta/rational.hpp"

namespace theta {

using Elem = std::uint32_t;

enum class Family { Cyclic, BinaryDihedral, DPrime, TStar, TPrime, OStar, IStar };

struct FamilyParams {
    Family family = Family::Cyclic;
    long n = 0;  // Cyclic
    long p = 0;  // BinaryDihedral, DPrime
    long k = 0;  // DPrime, TPrime

    static FamilyParams cyclic(long n);
    static FamilyParams binary_dihedral(long p);
    static FamilyParams dprime(long k, long p);
    static FamilyParams tstar();
    static FamilyParams tprime(long k);
    static FamilyParams ostar();
    static FamilyParams istar();

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Throws InvalidParameter naming the violated constraint.
void validate(const FamilyParams& params);

/// n, 4p, 2^(k+2)p, 24, 8*3^k, 48, 120.
Integer family_order(const FamilyParams& params);

/// Surface syntax: Z(5), Dstar(4), Dprime(1,3), Tstar, Tprime(2), Ostar, Istar.
std::string family_name(const FamilyParams& params);

class FiniteGroup {
public:
    /// `table` is row-major: table[a * order + b] = a*b. Throws InvalidParameter
    /// unless the table is a Latin square with a two-sided identity.
    FiniteGroup(std::size_t order, std::vector<Elem> table, std::vector<Elem> generators,
                std::vector<std::string> labels, std::string family_tag);

    std::size_t order() const { return n_; }
    Elem identity() const { return identity_; }
    Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    Elem inv(Elem a) const { return inv_[a]; }
    Elem pow(Elem a, long e) const;
    const Elem* row(Elem a) const { return table_.data() + static_cast<std::size_t>(a) * n_; }

    const std::vector<Elem>& generators() const { return generators_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Elem a) const { return labels_[a]; }
    const std::string& family_tag() const { return tag_; }

    /// Single-letter names ('a', 'x', ...) used to evaluate words.
    void set_named(char name, Elem e);
    std::optional<Elem> named(char name) const;
    const std::map<char, Elem>& named_elements() const { return named_; }

    /// Evaluates a word such as "x^2y" or "(a^2b^2)^2a" over the named elements.
    Elem evaluate(std::string_view word) const;

    bool is_abelian() const;

private:
    std::size_t n_;
    Elem identity_ = 0;
    std::vector<Elem> table_;
    std::vector<Elem> inv_;
    std::vector<Elem> generators_;
    std::vector<std::string> labels_;
    std::string tag_;
    std::map<char, Elem> named_;
};

/// Default cap on order^2 for construct_family.
inline constexpr std::size_t kFamilyTableCap = 25'000'000;
/// Default cap on order^2 for direct_product.
inline constexpr std::size_t kProductTableCap = 1'000'000;

FiniteGroup construct_family(const FamilyParams& params, std::size_t table_cap = kFamilyTableCap);

/// Elements are index pairs (i, j) stored as i * |g2| + j.
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                           std::size_t table_cap = kProductTableCap);

std::vector<std::uint32_t> element_orders(const FiniteGroup& g);

/// Exhaustive for order <= exhaustive_limit, otherwise `samples` random triples.
bool check_group_axioms(const FiniteGroup& g, std::size_t exhaustive_limit = 200,
                        std::size_t samples = 100000, std::uint64_t seed = 1);

}  // namespace theta

#endif
