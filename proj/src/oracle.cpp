#include "montes/oracle.hpp"

#include <algorithm>

namespace montes::oracle {

namespace {

constexpr long kEnumBudget = 100000;

// Plain coefficient-vector remainder, independent of the engine's
// polynomial arithmetic.  Vectors are dense, ascending, monic divisor.
std::vector<std::int64_t> raw_rem(std::vector<std::int64_t> a,
                                  const std::vector<std::int64_t>& b, std::int64_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::int64_t q = a.back();
        if (q != 0) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::size_t idx = a.size() - 1 - db + j;
                a[idx] = ((a[idx] - q * b[j]) % p + p) % p;
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

bool raw_divides(const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& f,
                 std::int64_t p) {
    return raw_rem(f, d, p).empty();
}

// a / b for monic b with zero remainder (caller-checked)
std::vector<std::int64_t> raw_divexact(std::vector<std::int64_t> a,
                                       const std::vector<std::int64_t>& b, std::int64_t p) {
    const std::size_t db = b.size() - 1;
    std::vector<std::int64_t> quot(a.size() - db, 0);
    for (std::size_t qi = quot.size(); qi-- > 0;) {
        std::int64_t q = a[qi + db];
        quot[qi] = q;
        if (q) {
            for (std::size_t j = 0; j <= db; ++j)
                a[qi + j] = ((a[qi + j] - q * b[j]) % p + p) % p;
        }
    }
    return quot;
}

// monic polynomials of degree d, in counting order (base-p digits are
// the coefficients a_0 .. a_{d-1})
std::vector<std::vector<std::int64_t>> all_monic(std::int64_t p, long d) {
    long long total = 1;
    for (long i = 0; i < d; ++i) total *= p;
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(static_cast<std::size_t>(total));
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
        long long rest = idx;
        for (long i = 0; i < d; ++i) {
            c[static_cast<std::size_t>(i)] = rest % p;
            rest /= p;
        }
        c.back() = 1;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::int64_t> to_raw(const FpPoly& f) {
    return std::vector<std::int64_t>(f.coeffs().begin(), f.coeffs().end());
}

FpPoly from_raw(const Zp& k, const std::vector<std::int64_t>& c) {
    return FpPoly(k, std::vector<std::int64_t>(c));
}

}  // namespace

std::vector<FpPoly> enumerate_monic_irreducibles(std::int64_t p, long f) {
    if (f < 1) throw std::domain_error("enumerate_monic_irreducibles: f >= 1 required");
    double cost = 1;
    for (long i = 0; i < f; ++i) cost *= static_cast<double>(p);
    if (cost > kEnumBudget)
        throw std::out_of_range("enumerate_monic_irreducibles: p^f exceeds the budget");

    Zp k(p);
    std::vector<FpPoly> out;
    // divisors of degree 1 .. f-1 suffice to witness reducibility
    std::vector<std::vector<std::int64_t>> divisors;
    for (long d = 1; d < f; ++d)
        for (auto& cand : all_monic(p, d)) divisors.push_back(std::move(cand));
    for (auto& cand : all_monic(p, f)) {
        bool divisible = false;
        for (const auto& d : divisors) {
            if (raw_divides(d, cand, p)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) out.push_back(from_raw(k, cand));
    }
    std::sort(out.begin(), out.end(), poly_less<Zp>);
    return out;
}

std::vector<std::pair<FpPoly, long>> factor_by_trial(const FpPoly& f) {
    if (f.degree() < 1) throw std::domain_error("factor_by_trial: constant polynomial");
    const std::int64_t p = f.field().p();
    std::vector<std::int64_t> rest = to_raw(f.monic());
    std::vector<std::pair<FpPoly, long>> out;
    for (long d = 1; static_cast<long>(rest.size()) - 1 >= 2 * d; ++d) {
        double cost = 1;
        for (long i = 0; i < d; ++i) cost *= static_cast<double>(p);
        if (cost > kEnumBudget)
            throw std::out_of_range("factor_by_trial: divisor degree exceeds the budget");
        for (const FpPoly& irr : enumerate_monic_irreducibles(p, d)) {
            auto raw = to_raw(irr);
            long mult = 0;
            while (static_cast<long>(rest.size()) - 1 >= d && raw_divides(raw, rest, p)) {
                rest = raw_divexact(std::move(rest), raw, p);
                ++mult;
            }
            if (mult > 0) out.emplace_back(irr, mult);
            if (static_cast<long>(rest.size()) - 1 < 2 * d) break;
        }
    }
    if (static_cast<long>(rest.size()) - 1 >= 1)
        out.emplace_back(from_raw(Zp(p), rest), 1);  // leftover cofactor is irreducible
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

long long lattice_count_naive(const std::vector<std::pair<long, long>>& vertices) {
    if (vertices.size() < 2) return 0;
    long xmax = 0, ymax = 0;
    for (auto& [x, y] : vertices) {
        xmax = std::max(xmax, x);
        ymax = std::max(ymax, y);
    }
    long long count = 0;
    for (long x = 1; x <= xmax; ++x) {
        for (long y = 1; y <= ymax; ++y) {
            // on or below the polyline over its abscissa range
            bool counted = false;
            for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
                auto [x1, y1] = vertices[i];
                auto [x2, y2] = vertices[i + 1];
                if (x < x1 || x > x2) continue;
                // y <= y1 + (y2 - y1) * (x - x1) / (x2 - x1), exactly
                counted = static_cast<long long>(y - y1) * (x2 - x1) <=
                          static_cast<long long>(y2 - y1) * (x - x1);
                break;
            }
            if (counted) ++count;
        }
    }
    return count;
}

}  // namespace montes::oracle
