#ifndef THETA_COSET_ENUM_HPP
#define THETA_COSET_ENUM_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "theta/group.hpp"

namespace theta {

/// Letters are signed generator indices: g+1 for generator g, -(g+1) for its inverse.
using Word = std::vector<int>;

struct Presentation {
    std::vector<char> generators;
    std::vector<Word> relators;

    std::size_t generator_count() const { return generators.size(); }
};

/// Parses "<a,b | (a*b)^2=a^3=b^3>". Relations u=v=w become relators uv^-1, vw^-1.
Presentation parse_presentation(std::string_view text);

/// Parses a word over the given single-letter generators; "1" is the empty word.
Word parse_word(std::string_view text, const std::vector<char>& generators);

Word free_reduce(const Word& w);
Word invert(const Word& w);
std::string word_to_string(const Word& w, const std::vector<char>& generators);
std::string to_string(const Presentation& p);

/// The presentations quoted for each family of the classification.
Presentation family_presentation(const FamilyParams& params);
/// The alternative <x,y | x^2=(xy)^2=y^p> presentation of Dstar(p).
Presentation binary_dihedral_xy_presentation(long p);

struct CosetTable {
    /// action[c][2*g] = c.g, action[c][2*g+1] = c.g^-1
    std::vector<std::vector<int>> action;
    bool complete = false;
};

inline constexpr std::size_t kDefaultMaxCosets = 100000;

/// HLT enumeration over the trivial subgroup. Cosets are numbered in discovery
/// order after compaction; coset 0 is the identity.
CosetTable enumerate_cosets(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets);

/// Regular permutation realization as a FiniteGroup. Elements are renumbered in
/// shortlex order of their words and labelled by those words.
FiniteGroup enumerate(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace theta

#endif
