#pragma once

#include "montes/arith.hpp"
#include "montes/ffpoly.hpp"
#include "montes/zxpoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace montes {

/// One source point (i, v_p(a_i)) of a phi-Newton polygon.  Points with
/// infinite ordinate (a_i = 0) never enter hull construction.
struct PolygonPoint {
    long x;
    Valuation y;
};

/// One side of the lower convex envelope, endpoints (x1, y1) -> (x2, y2)
/// with x2 > x1.  Slope is -h/e in lowest terms (h = 0 for a flat side);
/// length = e*d, height = h*d, d = gcd(length, height).
struct Side {
    long x1 = 0, y1 = 0;
    long x2 = 0, y2 = 0;
    long length = 0;
    long height = 0;
    long h = 0;  // slope numerator (slope = -h/e)
    long e = 1;  // slope denominator; the ramification index of the side
    long d = 0;  // degree of the side

    static Side from_endpoints(long x1, long y1, long x2, long y2);

    bool negative_slope() const { return h > 0; }
    std::string slope_string() const {
        return h == 0 ? "0" : "-" + std::to_string(h) + "/" + std::to_string(e);
    }
};

/// Lower convex envelope of the finite points of a phi-expansion at p.
/// Sides are ordered by strictly increasing slope (collinear source
/// points are merged into a single side).
struct NewtonPolygon {
    std::int64_t p = 0;
    long phi_degree = 0;
    std::vector<PolygonPoint> points;
    std::vector<Side> sides;

    std::vector<std::pair<long, long>> vertices() const;
    bool is_principal() const;  // all sides of negative slope
};

/// Residual polynomial attached to a side: element of F_phi[y], degree
/// exactly d, nonzero end coefficients.
struct ResidualPolynomial {
    Side side;
    FqPoly poly;
};

/// Lower convex envelope of a set of integer points (collinear middle
/// points dropped).  Input need not be sorted.
std::vector<std::pair<long, long>> lower_hull(std::vector<std::pair<long, long>> pts);

/// Build the phi-Newton polygon of the expansion with respect to p.
/// Requires the reduction of phi mod p to be irreducible.
NewtonPolygon build_polygon(const PhiExpansion& exp, std::int64_t p);

/// The sides of strictly negative slope (may be empty).
NewtonPolygon principal_part(const NewtonPolygon& poly);

/// Residue coefficients c_i and the residual polynomial of a principal
/// side: t_i is the class of a_(s+ie)/p^(u_s - ih) in F_p[x]/(p, phi)
/// when the lattice point lies on the side, 0 when it lies above.
ResidualPolynomial residual_polynomial(const Side& side, const PhiExpansion& exp,
                                       std::int64_t p);

/// deg(phi) times the number of integer points (i, y), i >= 1, y >= 1,
/// on or below the principal polygon over its abscissa range.  Points on
/// the boundary are counted.  (Other Newton-polygon implementations
/// sometimes count strictly-below only; conventions differ exactly by
/// the boundary lattice points.)
long long phi_index(const NewtonPolygon& principal, long deg_phi);

/// The counted lattice points themselves (for rendering and oracles).
std::vector<std::pair<long, long>> lattice_points_under(const NewtonPolygon& principal);

/// Plain-text rendering: vertices '*', counted lattice points 'o'.
std::string render_ascii(const NewtonPolygon& principal);

/// SVG rendering: integer lattice, sides with slope/length/height/degree
/// labels, counted index points filled.
std::string render_svg(const NewtonPolygon& principal);

}  // namespace montes
