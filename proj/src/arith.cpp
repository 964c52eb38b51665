#include "montes/arith.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace montes {

namespace {

constexpr unsigned long kTrialLimit = 1000000;
// Total Pollard-Brent iterations allowed per factorize() call.
constexpr std::uint64_t kRhoBudget = 1u << 23;
constexpr std::uint64_t kRhoSeed = 0x9e3779b97f4a7c15ull;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<unsigned long> ps;
        for (unsigned long i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (unsigned long j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of n
// (n odd composite, not a prime power check done by caller) or 0 if the
// iteration budget ran out.  `budget` is decremented in place.
Int pollard_brent(const Int& n, std::uint64_t& budget, std::mt19937_64& rng) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    while (budget > 0) {
        Int c = Int(rng() % 1024 + 1);
        Int y = Int(rng() % 1024 + 2);
        Int g = 1, r = 1, q = 1, x, ys;
        while (g == 1 && budget > 0) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                long steps = std::min<long>(128, mpz_get_ui(Int(r - k).get_mpz_t()));
                for (long i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    Int d = x - y;
                    q = q * abs(d) % n;
                }
                if (budget < static_cast<std::uint64_t>(steps)) budget = 0;
                else budget -= static_cast<std::uint64_t>(steps);
                g = gcd(q, n);
                k += steps;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(Int(x - ys)), n);
            } while (g == 1);
        }
        if (g != n && g > 1) return g;
    }
    return 0;
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

}  // namespace

Valuation Valuation::finite(long k) {
    if (k < 0) throw std::logic_error("Valuation: negative finite value");
    Valuation v;
    v.v_ = k;
    return v;
}

Valuation vp(const Int& p, const Int& n) {
    if (p < 2) throw std::domain_error("vp: p must be a prime >= 2");
    if (n == 0) return Valuation::infinite();
    Int rest;
    mp_bitcnt_t k = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return Valuation::finite(static_cast<long>(k));
}

long vp_binomial(long p, long r, const Int& j) {
    if (p < 2 || r < 1) throw std::domain_error("vp_binomial: need prime p and r >= 1");
    Int bound = int_pow(p, static_cast<unsigned long>(r));
    if (j < 1 || j > bound - 1)
        throw std::out_of_range("vp_binomial: j outside 1..p^r-1");
    return r - vp(Int(p), j).value();
}

Int FactoredInteger::value() const {
    Int v = sign;
    for (const auto& [p, e] : prime_powers) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
        v *= pe;
    }
    return v;
}

bool FactoredInteger::squarefree() const {
    return std::all_of(prime_powers.begin(), prime_powers.end(),
                       [](const auto& pe) { return pe.second == 1; });
}

FactoredInteger factorize(const Int& n) {
    if (n == 0) throw std::domain_error("factorize: zero");
    FactoredInteger out;
    out.sign = n < 0 ? -1 : 1;
    Int rest = abs(n);

    std::map<Int, long> exps;
    for (unsigned long p : small_primes()) {
        if (rest == 1) break;
        if (Int(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            ++exps[Int(p)];
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        }
    }

    // Whatever is left has no prime factor below the trial limit.
    std::uint64_t budget = kRhoBudget;
    std::mt19937_64 rng(kRhoSeed ^ mpz_get_ui(rest.get_mpz_t()));
    std::vector<Int> pending;
    if (rest > 1) pending.push_back(rest);
    while (!pending.empty()) {
        Int c = pending.back();
        pending.pop_back();
        if (c == 1) continue;
        if (is_probable_prime(c)) {
            ++exps[c];
            continue;
        }
        unsigned long k = mpz_perfect_power_p(c.get_mpz_t()) ? 2 : 0;
        if (k) {
            // c = b^e for some e >= 2; find the base by exact roots.
            for (unsigned long e = 2; e <= mpz_sizeinbase(c.get_mpz_t(), 2); ++e) {
                Int root;
                if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), e) != 0) {
                    for (unsigned long i = 0; i < e; ++i) pending.push_back(root);
                    c = 1;
                    break;
                }
            }
            if (c == 1) continue;
        }
        Int d = pollard_brent(c, budget, rng);
        if (d == 0)
            throw FactoringBudgetExceeded("factorize: budget exceeded on " + c.get_str());
        pending.push_back(d);
        pending.push_back(c / d);
    }

    for (auto& [p, e] : exps) out.prime_powers.emplace_back(p, e);
    return out;
}

bool is_squarefree(const Int& n) {
    Int a = abs(n);
    if (a < 2) throw std::domain_error("is_squarefree: |n| must be >= 2");
    return factorize(n).squarefree();
}

int mobius(long n) {
    if (n < 1) throw std::domain_error("mobius: n >= 1 required");
    int m = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

Int monic_irreducible_count(long p, long f) {
    if (p < 2 || f < 1) throw std::domain_error("monic_irreducible_count: p >= 2, f >= 1");
    Int total = 0;
    for (long d = 1; d <= f; ++d) {
        if (f % d) continue;
        total += mobius(d) * int_pow(p, static_cast<unsigned long>(f / d));
    }
    Int count = total / f;
    if (count * f != total) throw std::logic_error("necklace sum not divisible by f");
    return count;
}

Int canonical_residue(const Int& m, const Int& modulus) {
    if (modulus < 2) throw std::domain_error("canonical_residue: modulus >= 2");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), m.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Int int_pow(long p, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), e);
    return r;
}

}  // namespace montes
