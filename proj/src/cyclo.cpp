#include "theta/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "theta/errors.hpp"

namespace theta {

namespace {

std::shared_mutex field_mutex;
std::map<int, std::unique_ptr<const CycloField>> field_cache;

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

std::unique_ptr<const CycloField> build_field(int n) {
    auto f = std::make_unique<CycloField>();
    f->conductor = n;
    f->cyclotomic_poly = cyclotomic_polynomial(n);
    const auto& poly = f->cyclotomic_poly;
    const int phi = static_cast<int>(poly.size()) - 1;
    f->phi = phi;

    std::vector<std::int64_t> cur(phi, 0);
    cur[0] = 1;
    f->power_basis.resize(n);
    for (int k = 0; k < n; ++k) {
        auto& out = f->power_basis[k];
        for (int i = 0; i < phi; ++i) {
            if (cur[i] != 0) out.emplace_back(i, cur[i]);
        }
        // multiply by x and reduce the degree-phi coefficient
        std::int64_t top = cur[phi - 1];
        for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0) {
            for (int i = 0; i < phi; ++i) {
                std::int64_t t;
                if (__builtin_mul_overflow(top, poly[i], &t) ||
                    __builtin_sub_overflow(cur[i], t, &cur[i])) {
                    throw ResourceError("cyclotomic reduction overflow for conductor " +
                                        std::to_string(n));
                }
            }
        }
    }
    return f;
}

void sort_merge(std::vector<std::pair<int, Rational>>& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < v.size();) {
        int e = v[r].first;
        Rational c = v[r].second;
        for (++r; r < v.size() && v[r].first == e; ++r) c += v[r].second;
        if (c != 0) {
            v[w].first = e;
            v[w].second = std::move(c);
            ++w;
        }
    }
    v.resize(w);
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
    if (n < 1) throw InvalidParameter("conductor must be >= 1, got " + std::to_string(n));
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<std::int64_t> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& den = cyclo_field(d).cyclotomic_poly;
        int dn = static_cast<int>(num.size()) - 1;
        int dd = static_cast<int>(den.size()) - 1;
        std::vector<std::int64_t> q(dn - dd + 1, 0);
        for (int i = dn; i >= dd; --i) {
            std::int64_t c = num[i];
            q[i - dd] = c;
            if (c == 0) continue;
            for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        }
        num = std::move(q);
    }
    return num;
}

const CycloField& cyclo_field(int n) {
    if (n < 1) throw InvalidParameter("conductor must be >= 1, got " + std::to_string(n));
    {
        std::shared_lock lock(field_mutex);
        auto it = field_cache.find(n);
        if (it != field_cache.end()) return *it->second;
    }
    auto built = build_field(n);
    std::unique_lock lock(field_mutex);
    auto [it, inserted] = field_cache.try_emplace(n, std::move(built));
    return *it->second;
}

CycloNumber::CycloNumber(long v) : CycloNumber(Rational(v)) {}

CycloNumber::CycloNumber(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c != 0) terms_.push_back({0, std::move(c)});
}

CycloNumber CycloNumber::root(int n, long k) {
    const auto& f = cyclo_field(n);
    CycloNumber r;
    r.n_ = n;
    for (const auto& [e, c] : f.power_basis[mod(k, n)]) r.terms_.push_back({e, Rational(c)});
    return r;
}

CycloNumber CycloNumber::from_powers(int n, std::vector<std::pair<int, Rational>> powers) {
    const auto& f = cyclo_field(n);
    std::vector<std::pair<int, Rational>> out;
    out.reserve(powers.size());
    for (auto& [k, c] : powers) {
        c.canonicalize();
        if (c == 0) continue;
        const auto& basis = f.power_basis[mod(k, n)];
        if (basis.size() == 1 && basis[0].second == 1) {
            out.emplace_back(basis[0].first, std::move(c));
            continue;
        }
        for (const auto& [e, b] : basis) out.emplace_back(e, c * b);
    }
    sort_merge(out);
    CycloNumber r;
    r.n_ = n;
    r.terms_.reserve(out.size());
    for (auto& [e, c] : out) r.terms_.push_back({e, std::move(c)});
    return r;
}

CycloNumber CycloNumber::from_basis(int n, std::vector<std::pair<int, Rational>> terms) {
    const auto& f = cyclo_field(n);
    for (const auto& t : terms) {
        if (t.first < 0 || t.first >= f.phi) throw InvalidParameter("from_basis: exponent out of range");
    }
    for (auto& t : terms) t.second.canonicalize();
    sort_merge(terms);
    CycloNumber r;
    r.n_ = n;
    for (auto& [e, c] : terms) r.terms_.push_back({e, std::move(c)});
    return r;
}

Rational CycloNumber::coefficient(int i) const {
    for (const auto& t : terms_) {
        if (t.exponent == i) return t.coef;
    }
    return 0;
}

bool CycloNumber::is_real() const { return conj() == *this; }

std::optional<Rational> CycloNumber::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].exponent == 0) return terms_[0].coef;
    return std::nullopt;
}

CycloNumber CycloNumber::conj() const {
    std::vector<std::pair<int, Rational>> p;
    p.reserve(terms_.size());
    for (const auto& t : terms_) p.emplace_back(static_cast<int>(mod(-t.exponent, n_)), t.coef);
    return from_powers(n_, std::move(p));
}

CycloNumber CycloNumber::lift(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) {
        throw InvalidParameter("cannot lift conductor " + std::to_string(n_) + " to " +
                               std::to_string(m));
    }
    const int s = m / n_;
    std::vector<std::pair<int, Rational>> p;
    p.reserve(terms_.size());
    for (const auto& t : terms_) p.emplace_back(t.exponent * s, t.coef);
    return from_powers(m, std::move(p));
}

std::complex<double> CycloNumber::to_complex() const {
    std::complex<double> z = 0;
    for (const auto& t : terms_) {
        double ang = 2.0 * M_PI * t.exponent / n_;
        z += t.coef.get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
}

std::string CycloNumber::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << theta::to_string(t.coef);
        if (t.exponent != 0) os << "*z(" << n_ << ")^" << t.exponent;
    }
    return os.str();
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

CycloNumber CycloNumber::scaled(const Rational& qin) const {
    Rational q = qin;
    q.canonicalize();
    if (q == 0) {
        CycloNumber z;
        z.n_ = n_;
        return z;
    }
    CycloNumber r = *this;
    for (auto& t : r.terms_) t.coef *= q;
    return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& b) {
    const int m = std::lcm(n_, b.n_);
    CycloNumber a = lift(m);
    CycloNumber bb = b.lift(m);
    std::vector<std::pair<int, Rational>> v;
    v.reserve(a.terms_.size() + bb.terms_.size());
    for (auto& t : a.terms_) v.emplace_back(t.exponent, std::move(t.coef));
    for (auto& t : bb.terms_) v.emplace_back(t.exponent, std::move(t.coef));
    sort_merge(v);
    n_ = m;
    terms_.clear();
    for (auto& [e, c] : v) terms_.push_back({e, std::move(c)});
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& b) { return *this += -b; }

CycloNumber& CycloNumber::operator*=(const CycloNumber& b) {
    *this = *this * b;
    return *this;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    const int m = std::lcm(a.n_, b.n_);
    if (auto q = a.as_rational(); q && a.n_ == m) return b.lift(m).scaled(*q);
    if (auto q = b.as_rational(); q && b.n_ == m) return a.lift(m).scaled(*q);
    CycloNumber x = a.lift(m);
    CycloNumber y = b.lift(m);
    std::vector<std::pair<int, Rational>> p;
    p.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& s : x.terms_) {
        for (const auto& t : y.terms_) p.emplace_back(s.exponent + t.exponent, s.coef * t.coef);
    }
    return CycloNumber::from_powers(m, std::move(p));
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
    if (a.n_ != b.n_) {
        const int m = std::lcm(a.n_, b.n_);
        return a.lift(m) == b.lift(m);
    }
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].exponent != b.terms_[i].exponent || a.terms_[i].coef != b.terms_[i].coef)
            return false;
    }
    return true;
}

PackedCyclo pack(const CycloNumber& a, int n) {
    if (n < 1 || n % a.conductor() != 0) {
        throw InvalidParameter("pack: conductor " + std::to_string(a.conductor()) + " does not divide " +
                               std::to_string(n));
    }
    const int scale = n / a.conductor();
    PackedCyclo out;
    out.terms.reserve(a.terms().size());
    for (const auto& t : a.terms()) {
        if (!is_integer(t.coef) || !fits_int64(t.coef.get_num())) {
            throw InvalidParameter("pack: coefficient is not a 64-bit integer: " + to_string(t.coef));
        }
        out.terms.emplace_back(t.exponent * scale, t.coef.get_num().get_si());
    }
    return out;
}

PackedCyclo conj(const PackedCyclo& a, int n) {
    PackedCyclo out = a;
    for (auto& t : out.terms) t.first = t.first == 0 ? 0 : n - t.first;
    return out;
}

PackedCyclo rescale(const PackedCyclo& a, int from, int to) {
    if (from < 1 || to % from != 0) {
        throw InvalidParameter("rescale: " + std::to_string(from) + " does not divide " + std::to_string(to));
    }
    PackedCyclo out = a;
    for (auto& t : out.terms) t.first *= to / from;
    return out;
}

PackedCyclo multiply(const PackedCyclo& a, const PackedCyclo& b, int n) {
    std::map<int, std::int64_t> acc;
    for (const auto& [e, c] : a.terms) {
        for (const auto& [f, d] : b.terms) {
            std::int64_t t;
            auto& slot = acc[(e + f) % n];
            if (__builtin_mul_overflow(c, d, &t) || __builtin_add_overflow(slot, t, &slot))
                throw ResourceError("packed product overflow");
        }
    }
    PackedCyclo out;
    for (const auto& [e, c] : acc) {
        if (c != 0) out.terms.emplace_back(e, c);
    }
    return out;
}

CycloAccumulator::CycloAccumulator(int conductor) : n_(conductor), buf_(conductor, 0) {
    const auto& f = cyclo_field(conductor);
    phi_ = f.phi;
    for (int j = 0; j < f.phi; ++j) {
        if (f.cyclotomic_poly[j] != 0) lower_.emplace_back(j, f.cyclotomic_poly[j]);
    }
}

void CycloAccumulator::add(const PackedCyclo& a, std::int64_t weight) {
    for (const auto& [e, c] : a.terms) {
        std::int64_t t;
        if (__builtin_mul_overflow(c, weight, &t) || __builtin_add_overflow(buf_[e], t, &buf_[e]))
            throw ResourceError("cyclotomic accumulator overflow");
    }
}

void CycloAccumulator::add_product(const PackedCyclo& a, const PackedCyclo& b, std::int64_t weight) {
    for (const auto& [e, c] : a.terms) {
        std::int64_t cw;
        if (__builtin_mul_overflow(c, weight, &cw)) throw ResourceError("cyclotomic accumulator overflow");
        for (const auto& [f, d] : b.terms) {
            int k = e + f;
            if (k >= n_) k -= n_;
            std::int64_t t;
            if (__builtin_mul_overflow(cw, d, &t) || __builtin_add_overflow(buf_[k], t, &buf_[k]))
                throw ResourceError("cyclotomic accumulator overflow");
        }
    }
}

void CycloAccumulator::add_product(const int* ea, const std::int64_t* ca, std::size_t na, const int* eb,
                                   const std::int64_t* cb, std::size_t nb, std::int64_t weight) {
    std::int64_t* buf = buf_.data();
    bool overflow = false;
    for (std::size_t i = 0; i < na; ++i) {
        std::int64_t cw;
        overflow |= __builtin_mul_overflow(ca[i], weight, &cw);
        for (std::size_t j = 0; j < nb; ++j) {
            int k = ea[i] + eb[j];
            if (k >= n_) k -= n_;
            std::int64_t t;
            overflow |= __builtin_mul_overflow(cw, cb[j], &t);
            overflow |= __builtin_add_overflow(buf[k], t, &buf[k]);
        }
    }
    if (overflow) throw ResourceError("cyclotomic accumulator overflow");
}

void CycloAccumulator::clear() { std::fill(buf_.begin(), buf_.end(), 0); }

CycloNumber CycloAccumulator::value() const {
    const auto& f = cyclo_field(n_);
    std::vector<Integer> dense(f.phi);
    for (int k = 0; k < n_; ++k) {
        if (buf_[k] == 0) continue;
        for (const auto& [e, c] : f.power_basis[k]) dense[e] += Integer(static_cast<long>(buf_[k])) * c;
    }
    std::vector<std::pair<int, Rational>> terms;
    for (int e = 0; e < f.phi; ++e) {
        if (dense[e] != 0) terms.emplace_back(e, Rational(dense[e]));
    }
    return CycloNumber::from_basis(n_, std::move(terms));
}

// Long division by the monic Phi_N, which is sparse for most N.
std::vector<std::int64_t> CycloAccumulator::reduced() const {
    std::vector<std::int64_t> work = buf_;
    for (int k = n_ - 1; k >= phi_; --k) {
        const std::int64_t c = work[k];
        if (c == 0) continue;
        work[k] = 0;
        const int shift = k - phi_;
        bool overflow = false;
        for (const auto& [j, a] : lower_) {
            std::int64_t t;
            overflow |= __builtin_mul_overflow(c, a, &t);
            overflow |= __builtin_sub_overflow(work[shift + j], t, &work[shift + j]);
        }
        if (overflow) throw ResourceError("cyclotomic accumulator overflow");
    }
    work.resize(phi_);
    return work;
}

Integer dirichlet_sum(long n, long k) {
    if (n < 1) throw InvalidParameter("dirichlet_sum: n must be >= 1");
    const int two_n = static_cast<int>(2 * n);
    CycloNumber s = CycloNumber(0L);
    for (long lam = 1; lam < n; ++lam) {
        s += CycloNumber::root(two_n, k * lam) + CycloNumber::root(two_n, -k * lam);
    }
    auto q = s.as_rational();
    if (!q || !is_integer(*q)) throw InternalError("dirichlet_sum is not an integer");
    Integer expected;
    if (mod(k, two_n) == 0) expected = 2 * n - 2;
    else if (k % 2 == 0) expected = -2;
    else expected = 0;
    if (q->get_num() != expected) {
        throw InternalError("dirichlet_sum(" + std::to_string(n) + "," + std::to_string(k) +
                            ") disagrees with its closed form");
    }
    return expected;
}

}  // namespace theta
