#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace montes {

using Int = mpz_class;

/// Raised when integer factorization does not finish within the fixed
/// effort budget (trial division to 1e6, then bounded Pollard-Brent).
/// Callers that hit this must supply the factorization explicitly.
class FactoringBudgetExceeded : public std::runtime_error {
public:
    explicit FactoringBudgetExceeded(const std::string& what)
        : std::runtime_error(what) {}
};

/// A p-adic valuation: a nonnegative integer, or Infinity for v_p(0).
/// Infinity compares greater than every finite value.
class Valuation {
public:
    Valuation() : v_(0) {}

    static Valuation finite(long k);
    static Valuation infinite() {
        Valuation v;
        v.v_ = -1;
        return v;
    }

    bool is_infinite() const { return v_ < 0; }
    bool is_finite() const { return v_ >= 0; }

    long value() const {
        if (is_infinite()) throw std::logic_error("Valuation: value() of Infinity");
        return v_;
    }

    Valuation operator+(Valuation o) const {
        if (is_infinite() || o.is_infinite()) return infinite();
        return finite(v_ + o.v_);
    }

    friend bool operator==(Valuation a, Valuation b) { return a.v_ == b.v_; }
    friend bool operator!=(Valuation a, Valuation b) { return a.v_ != b.v_; }
    friend bool operator<(Valuation a, Valuation b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return a.v_ < b.v_;
    }
    friend bool operator>(Valuation a, Valuation b) { return b < a; }
    friend bool operator<=(Valuation a, Valuation b) { return !(b < a); }
    friend bool operator>=(Valuation a, Valuation b) { return !(a < b); }

    std::string to_string() const {
        return is_infinite() ? "inf" : std::to_string(v_);
    }

private:
    long v_;
};

/// Sign and prime-power decomposition; primes strictly increasing,
/// exponents >= 1.  Product of sign and prime powers equals the integer.
struct FactoredInteger {
    int sign = 1;
    std::vector<std::pair<Int, long>> prime_powers;

    Int value() const;
    bool squarefree() const;
};

/// Largest k with p^k | n; Infinity for n = 0.  p must be prime
/// (caller-asserted; only p >= 2 is checked here).
Valuation vp(const Int& p, const Int& n);

/// v_p(binomial(p^r, j)) = r - v_p(j) for 1 <= j <= p^r - 1.
long vp_binomial(long p, long r, const Int& j);

/// Full factorization: trial division by primes below 1e6, then
/// deterministic-seed Pollard-Brent on what remains.
FactoredInteger factorize(const Int& n);

/// True iff no prime square divides n.  Requires |n| >= 2.
bool is_squarefree(const Int& n);

/// Number of monic irreducible polynomials of degree f over F_p:
/// (1/f) * sum_{d | f} mu(d) p^{f/d}.
Int monic_irreducible_count(long p, long f);

/// Least nonnegative residue of m modulo `modulus` (modulus >= 2).
Int canonical_residue(const Int& m, const Int& modulus);

/// Mobius function of n >= 1 (n small; factored by trial division).
int mobius(long n);

/// p^e as an Int, for e >= 0.
Int int_pow(long p, unsigned long e);

}  // namespace montes
