#include "montes/ore.hpp"

#include <cassert>

namespace montes {

OreReport analyze_prime(const ZxPoly& F, std::int64_t p) {
    if (F.degree() < 1) throw std::domain_error("analyze_prime: constant polynomial");
    if (!F.is_monic()) throw std::domain_error("analyze_prime: F must be monic");

    OreReport report;
    report.p = p;
    report.degree = F.degree();

    auto factors = factor(reduce_mod_p(F, p));
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& [phibar, li] = factors[i];
        report.sites.push_back(FactorSite{lift(phibar), li, Fq(phibar)});
        report.analyses.emplace_back();

        if (li == 1) {
            // Dedekind site: one prime, unramified over the side picture,
            // residue degree deg(phi), no index contribution.
            report.site_indices.push_back(0);
            report.ideals.push_back(
                IdealDatum{1, phibar.degree(), {static_cast<int>(i), -1, -1}, true});
            continue;
        }

        PhiExpansion exp = phi_expand(F, report.sites.back().phi);
        NewtonPolygon pp = principal_part(build_polygon(exp, p));
        report.site_indices.push_back(phi_index(pp, phibar.degree()));

        for (std::size_t j = 0; j < pp.sides.size(); ++j) {
            SideAnalysis analysis{pp.sides[j], residual_polynomial(pp.sides[j], exp, p), {}};
            analysis.residual_factors = factor(analysis.residual.poly);
            for (std::size_t s = 0; s < analysis.residual_factors.size(); ++s) {
                const auto& [psi, a] = analysis.residual_factors[s];
                if (a != 1) report.regular = false;
                report.ideals.push_back(IdealDatum{
                    pp.sides[j].e, phibar.degree() * psi.degree(),
                    {static_cast<int>(i), static_cast<int>(j), static_cast<int>(s)},
                    a == 1});
            }
            report.analyses.back().push_back(std::move(analysis));
        }
    }

    for (long long ind : report.site_indices) report.index_lower_bound += ind;

#ifndef NDEBUG
    if (report.regular) {
        long long total = 0;
        for (const auto& ideal : report.ideals) total += ideal.e * ideal.f;
        assert(total == report.degree);
    }
#endif
    return report;
}

bool is_p_maximal(const ZxPoly& F, std::int64_t p) {
    if (F.degree() < 1) throw std::domain_error("is_p_maximal: constant polynomial");
    if (!F.is_monic()) throw std::domain_error("is_p_maximal: F must be monic");

    for (const auto& [phibar, li] : factor(reduce_mod_p(F, p))) {
        if (li == 1) continue;
        PhiExpansion exp = phi_expand(F, lift(phibar));
        NewtonPolygon pp = principal_part(build_polygon(exp, p));
        if (phi_index(pp, phibar.degree()) > 0) return false;
    }
    return true;
}

long ideal_count_lower_bound(const OreReport& report, long f) {
    long count = 0;
    for (const auto& ideal : report.ideals)
        if (ideal.guaranteed && ideal.f == f) ++count;
    return count;
}

nlohmann::json to_json(const OreReport& report) {
    nlohmann::json sites = nlohmann::json::array();
    for (std::size_t i = 0; i < report.sites.size(); ++i) {
        nlohmann::json sides = nlohmann::json::array();
        for (const SideAnalysis& a : report.analyses[i]) {
            nlohmann::json factors = nlohmann::json::array();
            for (const auto& [psi, mult] : a.residual_factors)
                factors.push_back({{"psi", psi.to_string("y")}, {"a", mult}});
            sides.push_back({{"slope", a.side.slope_string()},
                             {"length", a.side.length},
                             {"height", a.side.height},
                             {"degree", a.side.d},
                             {"residual", a.residual.poly.to_string("y")},
                             {"factors", factors}});
        }
        sites.push_back({{"phi", report.sites[i].phi.to_string()},
                         {"l", report.sites[i].multiplicity},
                         {"sides", sides},
                         {"ind", report.site_indices[i]}});
    }
    nlohmann::json ideals = nlohmann::json::array();
    for (const IdealDatum& ideal : report.ideals)
        ideals.push_back({{"e", ideal.e}, {"f", ideal.f}, {"guaranteed", ideal.guaranteed}});
    return {{"p", report.p},
            {"sites", sites},
            {"regular", report.regular},
            {"index_lower_bound", report.index_lower_bound},
            {"ideals", ideals}};
}

}  // namespace montes
