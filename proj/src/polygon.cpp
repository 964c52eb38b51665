#include "montes/polygon.hpp"

#include <numeric>

namespace montes {

Side Side::from_endpoints(long x1, long y1, long x2, long y2) {
    if (x2 <= x1) throw std::domain_error("Side: endpoints must have x2 > x1");
    if (y2 > y1) throw std::domain_error("Side: positive slope side");
    Side s;
    s.x1 = x1;
    s.y1 = y1;
    s.x2 = x2;
    s.y2 = y2;
    s.length = x2 - x1;
    s.height = y1 - y2;
    s.d = std::gcd(s.length, s.height);  // equals length when height = 0
    s.e = s.length / s.d;
    s.h = s.height / s.d;
    return s;
}

std::vector<std::pair<long, long>> NewtonPolygon::vertices() const {
    std::vector<std::pair<long, long>> v;
    for (const Side& s : sides) {
        if (v.empty()) v.emplace_back(s.x1, s.y1);
        v.emplace_back(s.x2, s.y2);
    }
    return v;
}

bool NewtonPolygon::is_principal() const {
    for (const Side& s : sides)
        if (!s.negative_slope()) return false;
    return true;
}

std::vector<std::pair<long, long>> lower_hull(std::vector<std::pair<long, long>> pts) {
    std::sort(pts.begin(), pts.end());
    // Monotone chain; collinear middle points are dropped, so every
    // resulting segment has its own slope.
    std::vector<std::pair<long, long>> hull;
    for (const auto& q : pts) {
        while (hull.size() >= 2) {
            auto& o = hull[hull.size() - 2];
            auto& a = hull[hull.size() - 1];
            // cross((a - o), (q - o)) <= 0: a is above or on segment o->q
            __int128 cross = static_cast<__int128>(a.first - o.first) * (q.second - o.second) -
                             static_cast<__int128>(a.second - o.second) * (q.first - o.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(q);
    }
    return hull;
}

NewtonPolygon build_polygon(const PhiExpansion& exp, std::int64_t p) {
    FpPoly phibar = reduce_mod_p(exp.phi, p);
    if (phibar.degree() != exp.phi.degree())
        throw std::domain_error("build_polygon: phi not monic mod p");
    if (!is_irreducible(phibar))
        throw std::domain_error("build_polygon: reduction of phi mod p is reducible");

    NewtonPolygon poly;
    poly.p = p;
    poly.phi_degree = exp.phi.degree();
    Int pz(static_cast<long>(p));
    std::vector<std::pair<long, long>> finite;
    for (std::size_t i = 0; i < exp.terms.size(); ++i) {
        if (exp.terms[i].is_zero()) continue;
        Valuation v = content_vp(exp.terms[i], pz);
        poly.points.push_back({static_cast<long>(i), v});
        finite.emplace_back(static_cast<long>(i), v.value());
    }

    auto hull = lower_hull(std::move(finite));
    for (std::size_t i = 0; i + 1 < hull.size(); ++i)
        poly.sides.push_back(Side::from_endpoints(hull[i].first, hull[i].second,
                                                  hull[i + 1].first, hull[i + 1].second));
    return poly;
}

NewtonPolygon principal_part(const NewtonPolygon& poly) {
    NewtonPolygon pp;
    pp.p = poly.p;
    pp.phi_degree = poly.phi_degree;
    pp.points = poly.points;
    for (const Side& s : poly.sides)
        if (s.negative_slope()) pp.sides.push_back(s);
    return pp;
}

ResidualPolynomial residual_polynomial(const Side& side, const PhiExpansion& exp,
                                       std::int64_t p) {
    if (!side.negative_slope())
        throw std::domain_error("residual_polynomial: side not in the principal part");
    if (exp.phi.degree() < 1) throw std::domain_error("residual_polynomial: deg(phi) < 1");

    FpPoly phibar = reduce_mod_p(exp.phi, p);
    Fq field(phibar);
    Int pz(static_cast<long>(p));

    std::vector<Fq::Elem> coeffs;
    coeffs.reserve(static_cast<std::size_t>(side.d) + 1);
    for (long i = 0; i <= side.d; ++i) {
        long idx = side.x1 + i * side.e;
        long expected = side.y1 - i * side.h;
        if (idx >= static_cast<long>(exp.terms.size()))
            throw std::domain_error("residual_polynomial: side exceeds the expansion");
        const ZxPoly& a = exp.terms[static_cast<std::size_t>(idx)];
        Valuation v = content_vp(a, pz);
        if (v.is_infinite() || v.value() > expected) {
            coeffs.push_back(field.zero());
            continue;
        }
        if (v.value() < expected)
            throw std::logic_error("residual_polynomial: point below the side");
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(expected));
        std::vector<Int> scaled(a.coeffs().size());
        for (std::size_t j = 0; j < scaled.size(); ++j)
            mpz_divexact(scaled[j].get_mpz_t(), a.coeffs()[j].get_mpz_t(), pe.get_mpz_t());
        coeffs.push_back(field.reduce(reduce_mod_p(ZxPoly(std::move(scaled)), p)));
    }
    if (coeffs.front().is_zero() || coeffs.back().is_zero())
        throw std::logic_error("residual_polynomial: vertex coefficient vanished");
    return ResidualPolynomial{side, FqPoly(field, std::move(coeffs))};
}

long long phi_index(const NewtonPolygon& principal, long deg_phi) {
    // Each side owns the columns (x1, x2]; the leftmost column x1 of the
    // first side is added separately when it lies right of the axis.
    long long count = 0;
    bool first = true;
    for (const Side& s : principal.sides) {
        if (!s.negative_slope())
            throw std::domain_error("phi_index: input must be a principal part");
        if (first && s.x1 >= 1) count += s.y1;
        first = false;
        for (long i = std::max(1L, s.x1 + 1); i <= s.x2; ++i) {
            // bound = y1 - (i - x1) * h/e, floor via integer division
            long long num = static_cast<long long>(s.y1) * s.e -
                            static_cast<long long>(i - s.x1) * s.h;
            if (num > 0) count += num / s.e;
        }
    }
    return static_cast<long long>(deg_phi) * count;
}

std::vector<std::pair<long, long>> lattice_points_under(const NewtonPolygon& principal) {
    std::vector<std::pair<long, long>> pts;
    bool first_side = true;
    for (const Side& s : principal.sides) {
        if (first_side && s.x1 >= 1)
            for (long y = 1; y <= s.y1; ++y) pts.emplace_back(s.x1, y);
        first_side = false;
        for (long i = s.x1 + 1; i <= s.x2; ++i) {
            if (i < 1) continue;
            long long num = static_cast<long long>(s.y1) * s.e -
                            static_cast<long long>(i - s.x1) * s.h;
            if (num <= 0) continue;
            long bound = static_cast<long>(num / s.e);
            for (long y = 1; y <= bound; ++y) pts.emplace_back(i, y);
        }
    }
    return pts;
}

}  // namespace montes
