#pragma once

#include "montes/polygon.hpp"
#include "montes/zxpoly.hpp"

#include <json.hpp>

#include <vector>

namespace montes {

/// One irreducible factor phi_i of F mod p: canonical lift, multiplicity
/// l_i, and the residue field F_phi.
struct FactorSite {
    ZxPoly phi;
    long multiplicity;
    Fq residue_field;
};

/// A principal side together with its residual polynomial and the
/// factorization of the residual over F_phi.
struct SideAnalysis {
    Side side;
    ResidualPolynomial residual;
    std::vector<std::pair<FqPoly, long>> residual_factors;
};

/// Where an ideal came from: indices into sites / sides / residual
/// factors.  side = factor = -1 marks a multiplicity-one (Dedekind) site
/// that needed no polygon.
struct IdealProvenance {
    int site = -1;
    int side = -1;
    int factor = -1;
};

/// Prime-ideal data certified by a residual factor: ramification index e
/// (the side's e), residue degree f = deg(phi) * deg(psi).  `guaranteed`
/// is set when the factor has multiplicity 1, which certifies a genuine
/// prime ideal even when the polynomial is not p-regular overall.
struct IdealDatum {
    long e = 1;
    long f = 1;
    IdealProvenance provenance;
    bool guaranteed = false;
};

struct OreReport {
    std::int64_t p = 0;
    long degree = 0;
    std::vector<FactorSite> sites;
    std::vector<std::vector<SideAnalysis>> analyses;  // parallel to sites
    std::vector<long long> site_indices;              // ind_phi_i(F)
    long long index_lower_bound = 0;                  // sum of site indices
    bool regular = true;                              // all residual factors simple
    std::vector<IdealDatum> ideals;
};

/// Full first-order analysis of monic F at p: factor F mod p, build each
/// phi_i-polygon, factor the residual polynomials, and collect index and
/// ideal data.  F must be monic; irreducibility over Q is the caller's
/// obligation when the report is read as number-field data.
OreReport analyze_prime(const ZxPoly& F, std::int64_t p);

/// True iff v_p of the index is zero, i.e. the index lower bound
/// vanishes.  Skips residual factorization entirely and short-circuits
/// on the first site with a positive phi-index.
bool is_p_maximal(const ZxPoly& F, std::int64_t p);

/// Number of guaranteed ideals with residue degree f: a certified lower
/// bound for the number of primes above p with that residue degree.
long ideal_count_lower_bound(const OreReport& report, long f);

nlohmann::json to_json(const OreReport& report);

}  // namespace montes
