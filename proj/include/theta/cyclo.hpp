#ifndef THETA_CYCLO_HPP
#define THETA_CYCLO_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "theta/rational.hpp"

namespace theta {

/// Arithmetic data for Q(zeta_N). Each zeta_N^k (0 <= k < N) is stored in the
/// power basis 1, zeta, ..., zeta^(phi-1), i.e. reduced modulo Phi_N.
struct CycloField {
    int conductor = 1;
    int phi = 1;
    std::vector<std::int64_t> cyclotomic_poly;  // low degree first, monic
    std::vector<std::vector<std::pair<int, std::int64_t>>> power_basis;
};

/// Cached per conductor; safe for concurrent callers.
const CycloField& cyclo_field(int n);

std::vector<std::int64_t> cyclotomic_polynomial(int n);

class CycloNumber {
public:
    struct Term {
        int exponent;
        Rational coef;
    };

    CycloNumber() = default;
    CycloNumber(long v);  // NOLINT(google-explicit-constructor)
    CycloNumber(const Rational& q);  // NOLINT(google-explicit-constructor)

    /// zeta_n^k.
    static CycloNumber root(int n, long k);
    /// Builds from power-basis coefficients (exponents below phi(n)).
    static CycloNumber from_basis(int n, std::vector<std::pair<int, Rational>> terms);

    int conductor() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    Rational coefficient(int i) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;
    std::optional<Rational> as_rational() const;

    CycloNumber conj() const;
    /// Same value written over conductor m (a multiple of conductor()).
    CycloNumber lift(int m) const;
    std::complex<double> to_complex() const;

    /// "q0 + q1*z(N)^1 + ..."
    std::string to_string() const;

    CycloNumber operator-() const;
    CycloNumber& operator+=(const CycloNumber& b);
    CycloNumber& operator-=(const CycloNumber& b);
    CycloNumber& operator*=(const CycloNumber& b);

    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
    friend bool operator==(const CycloNumber& a, const CycloNumber& b);
    friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

    CycloNumber scaled(const Rational& q) const;

private:
    /// Canonicalizes a list of (exponent mod n, coefficient) pairs.
    static CycloNumber from_powers(int n, std::vector<std::pair<int, Rational>> powers);

    int n_ = 1;
    std::vector<Term> terms_;
};

/// Integer-coefficient polynomial in zeta_N for a fixed N, exponents taken
/// modulo N and not reduced modulo Phi_N.
struct PackedCyclo {
    std::vector<std::pair<int, std::int64_t>> terms;
};

/// a written over zeta_n (conductor of a must divide n). Throws InvalidParameter
/// if a coefficient is not a 64-bit integer.
PackedCyclo pack(const CycloNumber& a, int n);
/// Complex conjugate: zeta_n^e -> zeta_n^(n-e).
PackedCyclo conj(const PackedCyclo& a, int n);
/// a over zeta_from rewritten over zeta_to; from must divide to.
PackedCyclo rescale(const PackedCyclo& a, int from, int to);
/// Product modulo x^n - 1, equal exponents merged and zero terms dropped.
PackedCyclo multiply(const PackedCyclo& a, const PackedCyclo& b, int n);

/// Dense bulk summation over Q(zeta_N) with integer coefficients; reduction
/// modulo Phi_N happens once, in value().
class CycloAccumulator {
public:
    explicit CycloAccumulator(int conductor);

    void add(const PackedCyclo& a, std::int64_t weight);
    void add_product(const PackedCyclo& a, const PackedCyclo& b, std::int64_t weight);
    /// Same as add_product on terms stored as parallel arrays.
    void add_product(const int* ea, const std::int64_t* ca, std::size_t na, const int* eb, const std::int64_t* cb,
                     std::size_t nb, std::int64_t weight);
    /// buf[e] += c, e in [0, N).
    bool add_term(int e, std::int64_t c) { return !__builtin_add_overflow(buf_[e], c, &buf_[e]); }
    int conductor() const { return n_; }
    void clear();
    CycloNumber value() const;
    /// Power-basis coefficients of the current sum, length phi(N).
    std::vector<std::int64_t> reduced() const;

private:
    int n_;
    int phi_;
    std::vector<std::int64_t> buf_;
    std::vector<std::pair<int, std::int64_t>> lower_;  // nonzero coefficients of Phi_N below x^phi
};

/// Sum over lambda = 1..n-1 of 2cos(2 pi k lambda / 2n), computed exactly.
Integer dirichlet_sum(long n, long k);

}  // namespace theta

#endif
