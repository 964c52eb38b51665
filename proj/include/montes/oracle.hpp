#pragma once

#include "montes/ffpoly.hpp"

#include <utility>
#include <vector>

namespace montes::oracle {

// Brute-force counterparts of the engine operations, sharing only the
// value types with it.  Agreement between the two routes is what the
// test suite certifies.

/// All monic irreducible polynomials of degree f over F_p, found by
/// trial-dividing every monic candidate by every lower-degree monic
/// polynomial.  Requires p^f <= 100000.
std::vector<FpPoly> enumerate_monic_irreducibles(std::int64_t p, long f);

/// Complete factorization by repeated division against the enumerated
/// irreducibles, degree by degree.  Throws std::out_of_range when the
/// enumeration budget cannot cover the needed divisor degrees.
std::vector<std::pair<FpPoly, long>> factor_by_trial(const FpPoly& f);

/// Lattice count under a principal polygon given by its vertices:
/// double loop over the bounding box with an exact on-or-below test.
long long lattice_count_naive(const std::vector<std::pair<long, long>>& vertices);

}  // namespace montes::oracle
