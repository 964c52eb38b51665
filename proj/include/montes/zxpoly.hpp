#pragma once

#include "montes/arith.hpp"
#include "montes/ffpoly.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace montes {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, ascending by exponent, leading coefficient nonzero.
class ZxPoly {
public:
    ZxPoly() = default;
    explicit ZxPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ZxPoly zero() { return ZxPoly(); }
    static ZxPoly constant(Int c) { return ZxPoly({std::move(c)}); }
    static ZxPoly variable() { return ZxPoly({0, 1}); }
    static ZxPoly monomial(Int c, long k);
    /// x^n - m
    static ZxPoly power_minus(long n, const Int& m);

    const std::vector<Int>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Int coeff(long i) const;
    const Int& leading() const;
    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    ZxPoly derivative() const;
    Int eval(const Int& x) const;

    friend ZxPoly operator+(const ZxPoly& a, const ZxPoly& b);
    friend ZxPoly operator-(const ZxPoly& a, const ZxPoly& b);
    friend ZxPoly operator*(const ZxPoly& a, const ZxPoly& b);
    friend bool operator==(const ZxPoly& a, const ZxPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ZxPoly& a, const ZxPoly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

/// Exact quotient and remainder of a by monic b.
std::pair<ZxPoly, ZxPoly> divrem_monic(const ZxPoly& a, const ZxPoly& b);

/// The base-phi expansion F = sum a_i phi^i with deg a_i < deg phi.
struct PhiExpansion {
    ZxPoly phi;
    std::vector<ZxPoly> terms;  // a_0, ..., a_l

    ZxPoly reconstruct() const;
};

/// Expand F in base phi (phi monic, deg >= 1) by repeated Euclidean
/// division.
PhiExpansion phi_expand(const ZxPoly& F, const ZxPoly& phi);

/// Coefficientwise reduction mod p.
FpPoly reduce_mod_p(const ZxPoly& F, std::int64_t p);

/// Gauss valuation: min of v_p over the coefficients (Infinity for 0).
Valuation content_vp(const ZxPoly& a, const Int& p);

/// Canonical 0..p-1 lift of an F_p polynomial.
ZxPoly lift(const FpPoly& f);

/// Resultant of two integer polynomials, by fraction-free (Bareiss)
/// elimination on the Sylvester matrix.
Int resultant(const ZxPoly& F, const ZxPoly& G);

/// Discriminant of monic F, deg F >= 2:
/// (-1)^(n(n-1)/2) * Res(F, F').
Int discriminant(const ZxPoly& F);

/// Syntax error in polynomial text, with the character offset at which
/// parsing failed.
class PolyParseError : public std::runtime_error {
public:
    PolyParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parse `poly := term (('+'|'-') term)*`, `term := int | [int ['*']] 'x' ['^' uint]`.
/// Duplicate exponents are summed.  Whitespace is free.
ZxPoly parse_poly(const std::string& text);

}  // namespace montes
