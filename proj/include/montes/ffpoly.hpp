#pragma once

#include "montes/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace montes {

/// The prime field F_p, p a small prime (residues as int64).
class Zp {
public:
    using Elem = std::int64_t;

    explicit Zp(std::int64_t p) : p_(p) {
        if (p < 2) throw std::domain_error("Zp: p must be >= 2");
    }

    std::int64_t p() const { return p_; }
    std::int64_t characteristic() const { return p_; }
    long extension_degree() const { return 1; }
    Int order() const { return Int(p_); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }

    Elem from_long(std::int64_t n) const {
        Elem r = n % p_;
        return r < 0 ? r + p_ : r;
    }
    Elem from_int(const Int& n) const {
        return static_cast<Elem>(mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(p_)));
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const {
        Elem s = a - b;
        return s < 0 ? s + p_ : s;
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("Zp: inverse of zero");
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1, r = p_, newr = a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::swap(t -= q * newt, newt);
            std::swap(r -= q * newr, newr);
        }
        return from_long(t);
    }

    Elem pth_root(Elem a) const { return a; }  // Frobenius is the identity on F_p
    Elem canon(Elem a) const { return from_long(a); }

    int cmp(Elem a, Elem b) const { return a < b ? -1 : a > b ? 1 : 0; }
    Elem sample(std::mt19937_64& rng) const {
        return static_cast<Elem>(rng() % static_cast<std::uint64_t>(p_));
    }

    std::string to_string(Elem a) const { return std::to_string(a); }
    // F_p constants never need parentheses when used as coefficients
    std::string format_coeff(Elem a) const { return std::to_string(a); }

    bool operator==(const Zp& o) const { return p_ == o.p_; }
    bool operator!=(const Zp& o) const { return !(*this == o); }

private:
    std::int64_t p_;
};

/// Dense univariate polynomial over a field K.  Coefficients are stored
/// ascending by exponent; the leading coefficient is nonzero (zero
/// polynomial = empty sequence, degree -1).
template <class K>
class Poly {
public:
    using Field = K;
    using Coeff = typename K::Elem;

    explicit Poly(K field) : k_(std::move(field)) {}
    Poly(K field, std::vector<Coeff> coeffs) : k_(std::move(field)), c_(std::move(coeffs)) {
        for (auto& c : c_) c = k_.canon(c);
        trim();
    }

    static Poly zero(K field) { return Poly(std::move(field)); }
    static Poly constant(K field, Coeff c) { return Poly(std::move(field), {std::move(c)}); }
    static Poly variable(K field) {
        std::vector<Coeff> c{field.zero(), field.one()};
        return Poly(std::move(field), std::move(c));
    }
    static Poly monomial(K field, Coeff c, long k) {
        std::vector<Coeff> v(static_cast<std::size_t>(k) + 1, field.zero());
        v.back() = std::move(c);
        return Poly(std::move(field), std::move(v));
    }

    const K& field() const { return k_; }
    const std::vector<Coeff>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && k_.is_one(c_[0]); }

    Coeff coeff(long i) const {
        if (i < 0 || i > degree()) return k_.zero();
        return c_[static_cast<std::size_t>(i)];
    }
    const Coeff& leading() const {
        if (is_zero()) throw std::domain_error("Poly: leading() of zero");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && k_.is_one(c_.back()); }

    Poly monic() const {
        if (is_zero()) throw std::domain_error("Poly: monic() of zero");
        if (is_monic()) return *this;
        return scaled(k_.inv(leading()));
    }

    Poly scaled(const Coeff& s) const {
        std::vector<Coeff> r(c_.size(), k_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = k_.mul(c_[i], s);
        return Poly(k_, std::move(r));
    }

    Poly shifted(long k) const {  // multiply by x^k
        if (is_zero()) return *this;
        std::vector<Coeff> r(static_cast<std::size_t>(k), k_.zero());
        r.insert(r.end(), c_.begin(), c_.end());
        return Poly(k_, std::move(r));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_same_field(b);
        std::vector<Coeff> r(std::max(a.c_.size(), b.c_.size()), a.k_.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.k_.add(a.coeff(i), b.coeff(i));
        return Poly(a.k_, std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_same_field(b);
        std::vector<Coeff> r(std::max(a.c_.size(), b.c_.size()), a.k_.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.k_.sub(a.coeff(i), b.coeff(i));
        return Poly(a.k_, std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same_field(b);
        if (a.is_zero() || b.is_zero()) return zero(a.k_);
        std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, a.k_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = a.k_.add(r[i + j], a.k_.mul(a.c_[i], b.c_[j]));
        return Poly(a.k_, std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.k_ != b.k_ || a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (a.k_.cmp(a.c_[i], b.c_[i]) != 0) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const {
        if (degree() < 1) return zero(k_);
        std::vector<Coeff> r(c_.size() - 1, k_.zero());
        for (std::size_t i = 1; i < c_.size(); ++i) {
            Coeff m = k_.zero();
            // i * c_i computed by repeated addition mod char (i is small)
            std::int64_t imod = static_cast<std::int64_t>(i) % k_.characteristic();
            for (std::int64_t t = 0; t < imod; ++t) m = k_.add(m, c_[i]);
            r[i - 1] = m;
        }
        return Poly(k_, std::move(r));
    }

    Coeff eval(const Coeff& x) const {
        Coeff acc = k_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = k_.add(k_.mul(acc, x), c_[i]);
        return acc;
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long i = degree(); i >= 0; --i) {
            const Coeff& c = c_[static_cast<std::size_t>(i)];
            if (k_.is_zero(c)) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0) {
                os << k_.format_coeff(c);
            } else {
                if (!k_.is_one(c)) os << k_.format_coeff(c) << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

    void check_same_field(const Poly& o) const {
        if (k_ != o.k_) throw std::domain_error("Poly: field mismatch");
    }

private:
    void trim() {
        while (!c_.empty() && k_.is_zero(c_.back())) c_.pop_back();
    }

    K k_;
    std::vector<Coeff> c_;
};

using FpPoly = Poly<Zp>;

/// Canonical order: ascending degree, then lexicographic on the dense
/// coefficient sequence (constant term first).
template <class K>
int poly_cmp(const Poly<K>& a, const Poly<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (long i = 0; i <= a.degree(); ++i) {
        int c = a.field().cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

template <class K>
bool poly_less(const Poly<K>& a, const Poly<K>& b) {
    return poly_cmp(a, b) < 0;
}

template <class K>
std::pair<Poly<K>, Poly<K>> divrem(const Poly<K>& a, const Poly<K>& b) {
    a.check_same_field(b);
    if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    const K& k = a.field();
    if (a.degree() < b.degree()) return {Poly<K>::zero(k), a};
    auto lcinv = k.inv(b.leading());
    std::vector<typename K::Elem> rem(a.coeffs());
    std::vector<typename K::Elem> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                                       k.zero());
    for (long i = a.degree(); i >= b.degree(); --i) {
        auto& top = rem[static_cast<std::size_t>(i)];
        if (k.is_zero(top)) continue;
        auto q = k.mul(top, lcinv);
        quot[static_cast<std::size_t>(i - b.degree())] = q;
        for (long j = 0; j <= b.degree(); ++j) {
            auto& r = rem[static_cast<std::size_t>(i - b.degree() + j)];
            r = k.sub(r, k.mul(q, b.coeff(j)));
        }
    }
    return {Poly<K>(k, std::move(quot)), Poly<K>(k, std::move(rem))};
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
    return divrem(a, b).first;
}

template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
    return divrem(a, b).second;
}

/// Monic greatest common divisor; both arguments zero is an error.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd: gcd(0, 0)");
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class K>
Poly<K> pow_mod(const Poly<K>& base, const Int& e, const Poly<K>& mod) {
    if (e < 0) throw std::domain_error("pow_mod: negative exponent");
    Poly<K> result = Poly<K>::constant(base.field(), base.field().one()) % mod;
    Poly<K> acc = base % mod;
    mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (mp_bitcnt_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * acc) % mod;
        if (i + 1 < bits) acc = (acc * acc) % mod;
    }
    return result;
}

/// The extension field F_q = F_p[x]/(phi), phi monic of degree >= 1 whose
/// reduction is irreducible (irreducibility is the caller's contract and
/// is validated where the polygon machinery requires it).  Elements are
/// the reduced representatives of degree < deg phi.
class Fq {
public:
    using Elem = FpPoly;

    explicit Fq(FpPoly modulus) : mod_(std::move(modulus)) {
        if (mod_.degree() < 1) throw std::domain_error("Fq: modulus must be nonconstant");
        if (!mod_.is_monic()) throw std::domain_error("Fq: modulus must be monic");
    }

    const FpPoly& modulus() const { return mod_; }
    std::int64_t p() const { return mod_.field().p(); }
    std::int64_t characteristic() const { return p(); }
    long extension_degree() const { return mod_.degree(); }
    Int order() const { return int_pow(p(), static_cast<unsigned long>(mod_.degree())); }

    Elem zero() const { return FpPoly::zero(mod_.field()); }
    Elem one() const { return FpPoly::constant(mod_.field(), 1); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_one(const Elem& a) const { return a.is_one(); }

    Elem reduce(const FpPoly& a) const { return a % mod_; }
    Elem from_long(std::int64_t n) const {
        return FpPoly::constant(mod_.field(), mod_.field().from_long(n));
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return zero() - a; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % mod_; }
    Elem inv(const Elem& a) const {
        if (a.is_zero()) throw std::domain_error("Fq: inverse of zero");
        // extended Euclid in F_p[x]
        FpPoly r0 = mod_, r1 = a;
        FpPoly t0 = zero(), t1 = one();
        while (!r1.is_zero()) {
            auto [q, r] = divrem(r0, r1);
            r0 = r1;
            r1 = r;
            FpPoly t = t0 - q * t1;
            t0 = t1;
            t1 = t;
        }
        // r0 = gcd = unit constant since modulus is irreducible
        if (r0.degree() != 0)
            throw std::domain_error("Fq: modulus not irreducible (zero divisor hit)");
        return (t0 % mod_).scaled(mod_.field().inv(r0.coeff(0)));
    }

    Elem canon(const Elem& a) const {
        return a.degree() < mod_.degree() ? a : a % mod_;
    }

    Elem pow(const Elem& a, const Int& e) const {
        FpPoly b = a % mod_;
        return pow_mod(b, e, mod_);
    }
    Elem pth_root(const Elem& a) const {
        // Frobenius inverse: a^(p^(k-1)) in a field of order p^k
        if (extension_degree() == 1) return a;
        Int e = int_pow(p(), static_cast<unsigned long>(extension_degree() - 1));
        return pow(a, e);
    }

    int cmp(const Elem& a, const Elem& b) const { return poly_cmp(a, b); }
    Elem sample(std::mt19937_64& rng) const {
        std::vector<Zp::Elem> c(static_cast<std::size_t>(mod_.degree()));
        for (auto& x : c) x = mod_.field().sample(rng);
        return FpPoly(mod_.field(), std::move(c));
    }

    std::string to_string(const Elem& a) const { return a.to_string("x"); }
    std::string format_coeff(const Elem& a) const {
        // parenthesise anything that is not a plain constant
        if (a.degree() <= 0) return a.to_string("x");
        return "(" + a.to_string("x") + ")";
    }

    bool operator==(const Fq& o) const { return mod_ == o.mod_; }
    bool operator!=(const Fq& o) const { return !(*this == o); }

private:
    FpPoly mod_;
};

using FqPoly = Poly<Fq>;

/// Seed for the deterministic random source used by equal-degree
/// splitting.  Fixed constant, overridable via MONTES_LITE_SEED.
std::uint64_t default_factor_seed();

namespace detail {

// f with f' = 0 is a p-th power: pull out the p-th root.
template <class K>
Poly<K> pth_root_poly(const Poly<K>& f) {
    const K& k = f.field();
    long p = k.characteristic();
    std::vector<typename K::Elem> c;
    for (long i = 0; i <= f.degree(); i += p) c.push_back(k.pth_root(f.coeff(i)));
    return Poly<K>(k, std::move(c));
}

template <class K>
void squarefree_rec(const Poly<K>& f, long mult,
                    std::vector<std::pair<Poly<K>, long>>& out) {
    if (f.degree() < 1) return;
    auto df = f.derivative();
    if (df.is_zero()) {
        squarefree_rec(pth_root_poly(f), mult * f.field().characteristic(), out);
        return;
    }
    auto a = gcd(f, df);
    auto w = f / a;
    long i = 1;
    while (w.degree() > 0) {
        auto y = gcd(w, a);
        auto z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i * mult);
        w = y;
        a = a / y;
        ++i;
    }
    if (a.degree() > 0)
        squarefree_rec(pth_root_poly(a), mult * f.field().characteristic(), out);
}

}  // namespace detail

/// Squarefree decomposition of a monic f: pairwise-coprime monic
/// squarefree parts with their multiplicities (product reconstructs f).
template <class K>
std::vector<std::pair<Poly<K>, long>> squarefree_decomposition(const Poly<K>& f) {
    if (f.degree() < 1) throw std::domain_error("squarefree_decomposition: constant input");
    std::vector<std::pair<Poly<K>, long>> out;
    detail::squarefree_rec(f.monic(), 1, out);
    return out;
}

/// Iterated-Frobenius irreducibility test.
template <class K>
bool is_irreducible(const Poly<K>& f) {
    if (f.is_zero()) throw std::domain_error("is_irreducible: zero polynomial");
    long n = f.degree();
    if (n == 0) return false;
    if (n == 1) return true;
    auto g = f.monic();
    const K& k = f.field();
    Int q = k.order();
    auto x = Poly<K>::variable(k);
    auto h = x;
    for (long j = 1; j <= n; ++j) {
        h = pow_mod(h, q, g);  // h = x^(q^j) mod g
        if (j < n && n % j == 0) {
            long r = n / j;
            bool r_prime = r >= 2;
            for (long d = 2; d * d <= r; ++d)
                if (r % d == 0) r_prime = false;
            if (r_prime && gcd(h - x, g).degree() != 0) return false;
        }
    }
    return h == x;
}

namespace detail {

template <class K>
Poly<K> gcd_or_zero(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero()) return b.is_zero() ? a : b.monic();
    return gcd(a, b);
}

inline Int pow_int(const Int& q, long d) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
    return r;
}

// Cantor-Zassenhaus equal-degree splitting: f is monic squarefree, a
// product of irreducibles all of degree d.
template <class K>
void equal_degree_rec(const Poly<K>& f, long d, std::mt19937_64& rng,
                      std::vector<Poly<K>>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const K& k = f.field();
    Int q = k.order();
    auto one = Poly<K>::constant(k, k.one());
    for (;;) {
        // random nonconstant element of the quotient algebra
        std::vector<typename K::Elem> c(static_cast<std::size_t>(f.degree()), k.zero());
        for (auto& e : c) e = k.sample(rng);
        Poly<K> a(k, std::move(c));
        if (a.degree() < 1) continue;
        Poly<K> split = Poly<K>::zero(k);
        if (k.characteristic() == 2) {
            // trace map over F_2: a + a^2 + ... + a^(2^(kd-1))
            long bits = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2)) - 1;  // q = 2^bits
            Poly<K> t = a % f, acc = t;
            for (long i = 1; i < bits * d; ++i) {
                t = (t * t) % f;
                acc = acc + t;
            }
            split = gcd_or_zero(acc, f);
        } else {
            Poly<K> g0 = gcd_or_zero(a, f);
            if (g0.degree() > 0 && g0.degree() < f.degree()) {
                equal_degree_rec(g0, d, rng, out);
                equal_degree_rec(f / g0, d, rng, out);
                return;
            }
            Int e = (pow_int(q, d) - 1) / 2;
            Poly<K> b = pow_mod(a, e, f);
            split = gcd_or_zero(b - one, f);
        }
        if (split.degree() > 0 && split.degree() < f.degree()) {
            equal_degree_rec(split, d, rng, out);
            equal_degree_rec(f / split, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Distinct-degree splitting of monic squarefree f: (product, d) pairs
/// where `product` collects the irreducible factors of degree d.
template <class K>
std::vector<std::pair<Poly<K>, long>> distinct_degree_split(Poly<K> f) {
    std::vector<std::pair<Poly<K>, long>> out;
    const K& k = f.field();
    Int q = k.order();
    auto x = Poly<K>::variable(k);
    auto h = x;
    for (long d = 1; 2 * d <= f.degree(); ++d) {
        h = pow_mod(h, q, f);
        auto g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

/// Complete factorization into monic irreducibles with multiplicities,
/// in canonical order (ascending degree, then coefficient sequence).
/// Deterministic: the equal-degree random source is seeded per call.
template <class K>
std::vector<std::pair<Poly<K>, long>> factor(const Poly<K>& f) {
    if (f.degree() < 1)
        throw std::domain_error("factor: constant polynomial");
    std::mt19937_64 rng(default_factor_seed());
    std::vector<std::pair<Poly<K>, long>> out;
    for (const auto& [part, mult] : squarefree_decomposition(f.monic())) {
        for (const auto& [block, d] : distinct_degree_split(part)) {
            std::vector<Poly<K>> irr;
            detail::equal_degree_rec(block, d, rng, irr);
            for (auto& g : irr) out.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

}  // namespace montes
