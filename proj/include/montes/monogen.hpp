#pragma once

#include "montes/ore.hpp"

#include <string>
#include <vector>

namespace montes {

/// The field parameters: F(x) = x^(2^u 3^v 5^t) - m with m square-free,
/// m not in {0, +-1} and u, v, t >= 1.  Such an F is automatically
/// irreducible over Q (a square-free m is never a proper power, and
/// -4 times a fourth power is never square-free).
struct FieldSpec {
    int u = 1, v = 1, t = 1;
    Int m;
    long n = 30;                  // 2^u 3^v 5^t
    std::vector<Int> m_primes;    // distinct primes of m, ascending

    ZxPoly polynomial() const { return ZxPoly::power_minus(n, m); }
};

/// Validates the parameters and factors m (may throw
/// FactoringBudgetExceeded; use the overload below to supply the
/// factorization).
FieldSpec make_field_spec(int u, int v, int t, const Int& m);
FieldSpec make_field_spec(int u, int v, int t, const Int& m,
                          const FactoredInteger& m_factored);

enum class VerdictKind { MaximalMonogenic, NonMonogenic, NotMaximalUndecided };
enum class WitnessSource { CongruenceRule, PolygonEngine };

/// The congruence table defaults to the conditions the proofs establish
/// (`Proof`); `Theorem` switches the rules whose statement-level and
/// proof-level conditions differ (R4, R6) to the statement-level form.
enum class Variant { Proof, Theorem };

struct RuleHit {
    std::string rule_id;   // R1..R8, or "engine" for a pure engine witness
    std::int64_t p;
    long f;                // residue degree used by the witness
    long Pf_bound;         // certified lower bound for primes above p of degree f
    Int Nf;                // number of monic irreducible degree-f polys over F_p
    WitnessSource source;
};

struct Verdict {
    VerdictKind kind = VerdictKind::NotMaximalUndecided;
    bool maximal = false;
    Variant variant = Variant::Proof;
    std::vector<RuleHit> witnesses;
};

/// The congruence characterization of Z[alpha] being integrally closed:
/// m != 1 (mod 4), m != +-1 (mod 9), m mod 25 not in {1, 24, 7, 18}.
bool classify_maximality(const FieldSpec& spec);

/// All matching congruence rules (with their nominal witness data).
std::vector<RuleHit> rule_table(const FieldSpec& spec, Variant variant = Variant::Proof);

/// Full verdict: maximality, else congruence rules plus an independent
/// polygon-engine search for index-divisor witnesses (P_f > N_f) at
/// p in {2, 3, 5}.  The engine search runs when the degree is at most
/// kMaxEngineDegree; rule hits the engine cannot confirm at this scale
/// keep source = CongruenceRule.
Verdict classify(const FieldSpec& spec, Variant variant = Variant::Proof);

inline constexpr long kMaxEngineDegree = 2000;

/// Predicted principal-polygon shape for F = x^n - m at p | n, p not
/// dividing m, with n = p^r * (prime-to-p part):
///   v_p(m^(p-1) - 1) <= r:  the full vertex set, hull of
///       {(0, v)} u {(p^j, r-j)};
///   otherwise: the fixed points {(p^j, r-j)} plus the constraint that
///       the leftmost ordinate V is >= r+1.
struct Lemma34Prediction {
    bool full = false;
    long r = 0;
    long v = 0;  // v_p(m^p - m)
    std::vector<std::pair<long, long>> fixed_points;
    std::vector<std::pair<long, long>> vertices;  // full branch only
    long min_left_ordinate = 0;                   // partial branch only
};

Lemma34Prediction lemma34_expected_polygon(std::int64_t p, const FieldSpec& spec,
                                           const ZxPoly& phi);

/// Check an observed principal-polygon vertex set against a prediction.
bool lemma34_conforms(const Lemma34Prediction& pred,
                      const std::vector<std::pair<long, long>>& observed);

/// x^n - a^s with gcd(s, 30) = 1 defines the same field as x^n - a; the
/// Bezout pair (x, y) with s*x - n*y = 1 is returned as a certificate.
struct ReducedExponent {
    FieldSpec spec;
    Int bezout_x;
    Int bezout_y;
};

ReducedExponent reduce_exponent(const Int& a, long s, int u, int v, int t);

std::string to_string(VerdictKind kind);
nlohmann::json to_json(const Verdict& verdict);

}  // namespace montes
