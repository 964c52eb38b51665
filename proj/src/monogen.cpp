#include "montes/monogen.hpp"

#include <cassert>
#include <numeric>
#include <set>

namespace montes {

namespace {

FieldSpec build_spec(int u, int v, int t, const Int& m, const FactoredInteger& fact) {
    if (u < 1 || v < 1 || t < 1 || u > 12 || v > 12 || t > 12)
        throw std::domain_error("FieldSpec: u, v, t must be in 1..12");
    if (m == 0 || m == 1 || m == -1)
        throw std::domain_error("FieldSpec: m must not be 0 or +-1");
    if (fact.value() != m)
        throw std::domain_error("FieldSpec: supplied factorization does not match m");
    if (!fact.squarefree())
        throw std::domain_error("FieldSpec: m is not square-free");
    FieldSpec spec;
    spec.u = u;
    spec.v = v;
    spec.t = t;
    spec.m = m;
    spec.n = 1;
    for (int i = 0; i < u; ++i) spec.n *= 2;
    for (int i = 0; i < v; ++i) spec.n *= 3;
    for (int i = 0; i < t; ++i) spec.n *= 5;
    for (const auto& [p, e] : fact.prime_powers) spec.m_primes.push_back(p);
    return spec;
}

long residue(const Int& m, long modulus) {
    return canonical_residue(m, Int(modulus)).get_si();
}

bool u_is_twice_odd(int u) { return u % 2 == 0 && (u / 2) % 2 == 1; }

struct RuleDef {
    const char* id;
    std::int64_t p;
    long f;
    long pf_bound;
};

RuleHit make_hit(const RuleDef& def, WitnessSource source) {
    return RuleHit{def.id, def.p,      def.f,
                   def.pf_bound, monic_irreducible_count(def.p, def.f), source};
}

}  // namespace

FieldSpec make_field_spec(int u, int v, int t, const Int& m) {
    if (m == 0 || m == 1 || m == -1)
        throw std::domain_error("FieldSpec: m must not be 0 or +-1");
    return build_spec(u, v, t, m, factorize(m));
}

FieldSpec make_field_spec(int u, int v, int t, const Int& m,
                          const FactoredInteger& m_factored) {
    return build_spec(u, v, t, m, m_factored);
}

bool classify_maximality(const FieldSpec& spec) {
    long m4 = residue(spec.m, 4);
    long m9 = residue(spec.m, 9);
    long m25 = residue(spec.m, 25);
    return m4 != 1 && m9 != 1 && m9 != 8 && m25 != 1 && m25 != 24 && m25 != 7 && m25 != 18;
}

std::vector<RuleHit> rule_table(const FieldSpec& spec, Variant variant) {
    // Nominal witness data (p, f, certified lower bound for P_f) comes
    // from the polygon counts behind each rule.
    static constexpr RuleDef kR1{"R1", 2, 2, 2};
    static constexpr RuleDef kR2{"R2", 3, 1, 4};
    static constexpr RuleDef kR3{"R3", 3, 2, 4};
    static constexpr RuleDef kR4{"R4", 3, 2, 4};
    static constexpr RuleDef kR5{"R5", 5, 1, 6};
    static constexpr RuleDef kR6{"R6", 5, 1, 8};
    static constexpr RuleDef kR7{"R7", 5, 2, 12};
    static constexpr RuleDef kR8{"R8", 5, 2, 12};

    const int u = spec.u, v = spec.v, t = spec.t;
    const long m4 = residue(spec.m, 4);
    const long m9 = residue(spec.m, 9);
    const long m25 = residue(spec.m, 25);
    const long m27 = residue(spec.m, 27);
    const long m81 = residue(spec.m, 81);
    const long m125 = residue(spec.m, 125);
    const long m625 = residue(spec.m, 625);

    std::vector<RuleHit> hits;
    if (m4 == 1) hits.push_back(make_hit(kR1, WitnessSource::CongruenceRule));
    if (m9 == 1) hits.push_back(make_hit(kR2, WitnessSource::CongruenceRule));
    if (m9 == 8 && u_is_twice_odd(u)) hits.push_back(make_hit(kR3, WitnessSource::CongruenceRule));
    if (variant == Variant::Proof) {
        if (u == 1 && (m81 == 1 || m81 == 80) && v >= 3)
            hits.push_back(make_hit(kR4, WitnessSource::CongruenceRule));
    } else {
        if (u == 1 && m27 == 26 && v >= 3)
            hits.push_back(make_hit(kR4, WitnessSource::CongruenceRule));
    }
    if (u == 1 && (m125 == 1 || m125 == 124) && t >= 2)
        hits.push_back(make_hit(kR5, WitnessSource::CongruenceRule));
    if (variant == Variant::Proof) {
        if (m25 == 1 && u >= 2) hits.push_back(make_hit(kR6, WitnessSource::CongruenceRule));
    } else {
        if (m25 == 1 && u_is_twice_odd(u))
            hits.push_back(make_hit(kR6, WitnessSource::CongruenceRule));
    }
    if (m25 == 24 && u_is_twice_odd(u)) hits.push_back(make_hit(kR7, WitnessSource::CongruenceRule));
    // R8 needs v_5(m^4 - 1) >= 4 with m = +-2 (mod 5): the solutions of
    // x^4 = 1 (mod 5^4) are +-1 and +-182, so the +-2 branch is exactly
    // m = +-182 (mod 625).
    if (u == 1 && v == 1 && (m625 == 182 || m625 == 443) && t >= 3)
        hits.push_back(make_hit(kR8, WitnessSource::CongruenceRule));
    return hits;
}

Verdict classify(const FieldSpec& spec, Variant variant) {
    Verdict verdict;
    verdict.variant = variant;

#ifndef NDEBUG
    // Primes dividing a square-free m always leave a single side of
    // height one; spot-check one of them through the engine.
    if (!spec.m_primes.empty() && spec.n <= kMaxEngineDegree) {
        std::mt19937_64 rng(mpz_get_ui(spec.m.get_mpz_t()));
        const Int& q = spec.m_primes[rng() % spec.m_primes.size()];
        if (q.fits_slong_p())
            assert(is_p_maximal(spec.polynomial(), q.get_si()));
    }
#endif

    if (classify_maximality(spec)) {
        verdict.kind = VerdictKind::MaximalMonogenic;
        verdict.maximal = true;
        return verdict;
    }
    verdict.kind = VerdictKind::NotMaximalUndecided;
    verdict.maximal = false;
    verdict.witnesses = rule_table(spec, variant);

    if (spec.n <= kMaxEngineDegree) {
        ZxPoly F = spec.polynomial();
        for (std::int64_t p : {2, 3, 5}) {
            OreReport report = analyze_prime(F, p);
            std::set<long> degrees;
            for (const IdealDatum& ideal : report.ideals)
                if (ideal.guaranteed) degrees.insert(ideal.f);
            for (long f : degrees) {
                long pf = ideal_count_lower_bound(report, f);
                Int nf = monic_irreducible_count(p, f);
                if (pf > nf) {
                    // borrow the rule id when exactly one congruence rule
                    // fired at this prime
                    std::string id = "engine";
                    int matches = 0;
                    for (const RuleHit& hit : verdict.witnesses)
                        if (hit.source == WitnessSource::CongruenceRule && hit.p == p) {
                            id = hit.rule_id;
                            ++matches;
                        }
                    if (matches != 1) id = "engine";
                    verdict.witnesses.push_back(
                        RuleHit{id, p, f, pf, nf, WitnessSource::PolygonEngine});
                }
            }
        }
    }

    if (!verdict.witnesses.empty()) verdict.kind = VerdictKind::NonMonogenic;
    return verdict;
}

Lemma34Prediction lemma34_expected_polygon(std::int64_t p, const FieldSpec& spec,
                                           const ZxPoly& phi) {
    if (p != 2 && p != 3 && p != 5)
        throw std::domain_error("lemma34_expected_polygon: p must divide 30");
    Int pz(static_cast<long>(p));
    if (spec.m % pz == 0) throw std::domain_error("lemma34_expected_polygon: p divides m");

    Lemma34Prediction pred;
    pred.r = p == 2 ? spec.u : p == 3 ? spec.v : spec.t;
    long tpart = spec.n;
    for (long i = 0; i < pred.r; ++i) tpart /= p;

    FpPoly phibar = reduce_mod_p(phi, p);
    if (!is_irreducible(phibar))
        throw std::domain_error("lemma34_expected_polygon: phi reducible mod p");
    if (!(reduce_mod_p(ZxPoly::power_minus(tpart, spec.m), p) % phibar).is_zero())
        throw std::domain_error("lemma34_expected_polygon: phi does not divide x^t - m mod p");

    Int mp;
    mpz_pow_ui(mp.get_mpz_t(), spec.m.get_mpz_t(), static_cast<unsigned long>(p));
    pred.v = vp(pz, mp - spec.m).value();

    long abscissa = 1;
    for (long j = 0; j <= pred.r; ++j) {
        pred.fixed_points.emplace_back(abscissa, pred.r - j);
        abscissa *= p;
    }
    if (pred.v <= pred.r) {
        pred.full = true;
        auto pts = pred.fixed_points;
        pts.emplace_back(0, pred.v);
        pred.vertices = lower_hull(std::move(pts));
    } else {
        pred.full = false;
        pred.min_left_ordinate = pred.r + 1;
    }
    return pred;
}

bool lemma34_conforms(const Lemma34Prediction& pred,
                      const std::vector<std::pair<long, long>>& observed) {
    if (pred.full) return observed == pred.vertices;
    if (observed.empty() || observed.front().first != 0) return false;
    long V = observed.front().second;
    if (V < pred.min_left_ordinate) return false;
    auto pts = pred.fixed_points;
    pts.emplace_back(0, V);
    return observed == lower_hull(std::move(pts));
}

ReducedExponent reduce_exponent(const Int& a, long s, int u, int v, int t) {
    if (s < 1 || std::gcd(s, 30L) != 1)
        throw std::domain_error("reduce_exponent: s must be positive and coprime to 30");
    ReducedExponent red;
    red.spec = make_field_spec(u, v, t, a);
    if (s >= red.spec.n) throw std::domain_error("reduce_exponent: s must be < n");
    Int x, g;
    mpz_invert(x.get_mpz_t(), Int(s).get_mpz_t(), Int(red.spec.n).get_mpz_t());
    red.bezout_x = x;                              // s*x = 1 (mod n), 1 <= x < n
    red.bezout_y = (Int(s) * x - 1) / red.spec.n;  // exact
    return red;
}

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::MaximalMonogenic: return "MaximalMonogenic";
        case VerdictKind::NonMonogenic: return "NonMonogenic";
        case VerdictKind::NotMaximalUndecided: return "NotMaximalUndecided";
    }
    return "?";
}

nlohmann::json to_json(const Verdict& verdict) {
    nlohmann::json rules = nlohmann::json::array();
    for (const RuleHit& hit : verdict.witnesses)
        rules.push_back({{"id", hit.rule_id},
                         {"p", hit.p},
                         {"f", hit.f},
                         {"P_f_bound", hit.Pf_bound},
                         {"N_f", hit.Nf.get_str()},
                         {"source", hit.source == WitnessSource::CongruenceRule
                                        ? "congruence-rule"
                                        : "polygon-engine"}});
    return {{"kind", to_string(verdict.kind)},
            {"maximal", verdict.maximal},
            {"variant", verdict.variant == Variant::Proof ? "proof" : "theorem"},
            {"rules", rules}};
}

}  // namespace montes
