#include "montes/zxpoly.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace montes {

ZxPoly ZxPoly::monomial(Int c, long k) {
    std::vector<Int> v(static_cast<std::size_t>(k) + 1, 0);
    v.back() = std::move(c);
    return ZxPoly(std::move(v));
}

ZxPoly ZxPoly::power_minus(long n, const Int& m) {
    std::vector<Int> v(static_cast<std::size_t>(n) + 1, 0);
    v[0] = -m;
    v.back() = 1;
    return ZxPoly(std::move(v));
}

Int ZxPoly::coeff(long i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

const Int& ZxPoly::leading() const {
    if (is_zero()) throw std::domain_error("ZxPoly: leading() of zero");
    return c_.back();
}

ZxPoly ZxPoly::derivative() const {
    if (degree() < 1) return zero();
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Int(static_cast<long>(i)) * c_[i];
    return ZxPoly(std::move(r));
}

Int ZxPoly::eval(const Int& x) const {
    Int acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

ZxPoly operator+(const ZxPoly& a, const ZxPoly& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a.coeff(static_cast<long>(i)) + b.coeff(static_cast<long>(i));
    return ZxPoly(std::move(r));
}

ZxPoly operator-(const ZxPoly& a, const ZxPoly& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a.coeff(static_cast<long>(i)) - b.coeff(static_cast<long>(i));
    return ZxPoly(std::move(r));
}

ZxPoly operator*(const ZxPoly& a, const ZxPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZxPoly::zero();
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return ZxPoly(std::move(r));
}

std::string ZxPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Int& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<ZxPoly, ZxPoly> divrem_monic(const ZxPoly& a, const ZxPoly& b) {
    if (!b.is_monic()) throw std::domain_error("divrem_monic: divisor must be monic");
    if (a.degree() < b.degree()) return {ZxPoly::zero(), a};
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    for (long i = a.degree(); i >= b.degree(); --i) {
        Int q = rem[static_cast<std::size_t>(i)];
        if (q == 0) continue;
        quot[static_cast<std::size_t>(i - b.degree())] = q;
        for (long j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(i - b.degree() + j)] -= q * b.coeff(j);
    }
    return {ZxPoly(std::move(quot)), ZxPoly(std::move(rem))};
}

ZxPoly PhiExpansion::reconstruct() const {
    ZxPoly acc = ZxPoly::zero();
    for (std::size_t i = terms.size(); i-- > 0;) acc = acc * phi + terms[i];
    return acc;
}

PhiExpansion phi_expand(const ZxPoly& F, const ZxPoly& phi) {
    if (phi.degree() < 1) throw std::domain_error("phi_expand: deg(phi) must be >= 1");
    if (!phi.is_monic()) throw std::domain_error("phi_expand: phi must be monic");
    PhiExpansion exp;
    exp.phi = phi;
    ZxPoly rest = F;
    if (rest.is_zero()) {
        exp.terms.push_back(ZxPoly::zero());
        return exp;
    }
    while (!rest.is_zero()) {
        auto [q, r] = divrem_monic(rest, phi);
        exp.terms.push_back(r);
        rest = q;
    }
    return exp;
}

FpPoly reduce_mod_p(const ZxPoly& F, std::int64_t p) {
    Zp k(p);
    std::vector<Zp::Elem> c(F.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k.from_int(F.coeffs()[i]);
    return FpPoly(k, std::move(c));
}

ZxPoly lift(const FpPoly& f) {
    std::vector<Int> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Int(f.coeffs()[i]);
    return ZxPoly(std::move(c));
}

Valuation content_vp(const ZxPoly& a, const Int& p) {
    if (a.is_zero()) return Valuation::infinite();
    Valuation best = Valuation::infinite();
    for (const Int& c : a.coeffs()) {
        if (c == 0) continue;
        Valuation v = vp(p, c);
        if (v < best) best = v;
        if (best == Valuation::finite(0)) break;
    }
    return best;
}

namespace {

// Bareiss fraction-free Gaussian elimination; exact integer determinant.
Int bareiss_det(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Int denom = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
            }
            m[i][k] = 0;
        }
        denom = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

Int resultant(const ZxPoly& F, const ZxPoly& G) {
    if (F.is_zero() || G.is_zero()) return 0;
    const long n = F.degree(), m = G.degree();
    if (n == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), F.leading().get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    if (m == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), G.leading().get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    const std::size_t size = static_cast<std::size_t>(n + m);
    std::vector<std::vector<Int>> s(size, std::vector<Int>(size, 0));
    for (long row = 0; row < m; ++row)
        for (long j = 0; j <= n; ++j)
            s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] = F.coeff(n - j);
    for (long row = 0; row < n; ++row)
        for (long j = 0; j <= m; ++j)
            s[static_cast<std::size_t>(m + row)][static_cast<std::size_t>(row + j)] =
                G.coeff(m - j);
    return bareiss_det(std::move(s));
}

Int discriminant(const ZxPoly& F) {
    if (F.degree() < 2) throw std::domain_error("discriminant: deg(F) must be >= 2");
    if (!F.is_monic()) throw std::domain_error("discriminant: F must be monic");
    const long n = F.degree();
    Int res = resultant(F, F.derivative());
    return (n * (n - 1) / 2) % 2 == 0 ? res : -res;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Int parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw PolyParseError("expected an integer", start);
        return Int(s.substr(start, pos - start));
    }

    long parse_exponent() {
        Int e = parse_uint();
        if (e > 1000000) throw PolyParseError("exponent too large", pos);
        return static_cast<long>(e.get_si());
    }

    // term := int | [int ['*']] 'x' ['^' uint]
    void parse_term(int sign, std::map<long, Int>& acc) {
        skip_ws();
        Int coeff = 1;
        bool saw_number = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = parse_uint();
            saw_number = true;
        }
        skip_ws();
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            skip_ws();
            if (pos >= s.size() || s[pos] != 'x')
                throw PolyParseError("expected 'x' after '*'", pos);
        }
        long exp = 0;
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            exp = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                exp = parse_exponent();
            }
        } else if (!saw_number) {
            throw PolyParseError("expected a term", pos);
        }
        acc[exp] += sign * coeff;
    }
};

}  // namespace

ZxPoly parse_poly(const std::string& text) {
    Parser p(text);
    std::map<long, Int> acc;
    if (p.eof()) throw PolyParseError("empty input", 0);
    int sign = 1;
    if (p.peek() == '+' || p.peek() == '-') {
        sign = p.peek() == '-' ? -1 : 1;
        ++p.pos;
    }
    p.parse_term(sign, acc);
    while (!p.eof()) {
        char c = p.peek();
        if (c != '+' && c != '-') throw PolyParseError("expected '+' or '-'", p.pos);
        ++p.pos;
        p.parse_term(c == '-' ? -1 : 1, acc);
    }
    long max_exp = 0;
    for (const auto& [e, c] : acc)
        if (c != 0) max_exp = std::max(max_exp, e);
    std::vector<Int> coeffs(static_cast<std::size_t>(max_exp) + 1, 0);
    for (const auto& [e, c] : acc) coeffs[static_cast<std::size_t>(e)] += c;
    return ZxPoly(std::move(coeffs));
}

}  // namespace montes
