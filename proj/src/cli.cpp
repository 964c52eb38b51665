#include "montes/cli.hpp"

#include "montes/oracle.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace montes {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNonMonogenic = 10;
constexpr int kExitUndecided = 20;
constexpr int kExitInputError = 2;

std::optional<ScanRow> scan_one(const Int& m, int u, int v, int t, Variant variant) {
    if (m == 0 || m == 1 || m == -1) return std::nullopt;
    FieldSpec spec;
    try {
        spec = make_field_spec(u, v, t, m);
    } catch (const std::domain_error&) {
        return std::nullopt;
    } catch (const FactoringBudgetExceeded&) {
        return std::nullopt;
    }
    Verdict verdict = classify(spec, variant);
    ScanRow row{u, v, t, m, spec.n, verdict.maximal, verdict.kind, {}, std::nullopt};
    for (const RuleHit& hit : verdict.witnesses) {
        if (hit.source == WitnessSource::CongruenceRule) {
            row.rules.push_back(hit.rule_id);
        } else if (!row.witness) {
            row.witness = hit;
        }
    }
    return row;
}

}  // namespace

ScanResult scan_range(const Int& from, const Int& to, int u, int v, int t,
                      Variant variant, int jobs) {
    std::vector<Int> values;
    for (Int m = from; m <= to; ++m) values.push_back(m);

    std::vector<std::optional<ScanRow>> slots(values.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= values.size()) return;
            try {
                slots[i] = scan_one(values[i], u, v, t, variant);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    jobs = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int i = 1; i < jobs; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    ScanResult result;
    for (auto& slot : slots) {
        if (!slot) {
            ++result.skipped;
            continue;
        }
        switch (slot->kind) {
            case VerdictKind::MaximalMonogenic: ++result.maximal; break;
            case VerdictKind::NonMonogenic: ++result.nonmonogenic; break;
            case VerdictKind::NotMaximalUndecided: ++result.undecided; break;
        }
        result.rows.push_back(std::move(*slot));
    }
    return result;
}

std::string scan_csv(const ScanResult& result) {
    std::ostringstream os;
    os << "u,v,t,m,n,maximal,verdict,rules,witness_p,witness_f,Pf_bound,Nf\n";
    for (const ScanRow& row : result.rows) {
        os << row.u << "," << row.v << "," << row.t << "," << row.m.get_str() << "," << row.n
           << "," << (row.maximal ? "true" : "false") << "," << to_string(row.kind) << ",";
        for (std::size_t i = 0; i < row.rules.size(); ++i)
            os << (i ? ";" : "") << row.rules[i];
        if (row.witness) {
            os << "," << row.witness->p << "," << row.witness->f << ","
               << row.witness->Pf_bound << "," << row.witness->Nf.get_str();
        } else {
            os << ",,,,";
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::json scan_json(const ScanResult& result) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ScanRow& row : result.rows) {
        nlohmann::json jrow = {{"u", row.u},
                               {"v", row.v},
                               {"t", row.t},
                               {"m", row.m.get_str()},
                               {"n", row.n},
                               {"maximal", row.maximal},
                               {"verdict", to_string(row.kind)},
                               {"rules", row.rules}};
        if (row.witness) {
            jrow["witness"] = {{"p", row.witness->p},
                               {"f", row.witness->f},
                               {"Pf_bound", row.witness->Pf_bound},
                               {"Nf", row.witness->Nf.get_str()}};
        } else {
            jrow["witness"] = nullptr;
        }
        rows.push_back(std::move(jrow));
    }
    return {{"rows", rows},
            {"skipped", result.skipped},
            {"tallies",
             {{"maximal", result.maximal},
              {"nonmonogenic", result.nonmonogenic},
              {"undecided", result.undecided}}}};
}

namespace {

Variant parse_variant(const std::string& name) {
    if (name == "proof") return Variant::Proof;
    if (name == "theorem") return Variant::Theorem;
    throw CLI::ValidationError("--variant must be 'proof' or 'theorem'");
}

// "--m-factored 2*3^2*7": prime powers of |m|, sign taken from m itself
FactoredInteger parse_factored(const std::string& text, const Int& m) {
    FactoredInteger fact;
    fact.sign = m < 0 ? -1 : 1;
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, '*')) {
        auto caret = term.find('^');
        Int p(caret == std::string::npos ? term : term.substr(0, caret));
        long e = caret == std::string::npos ? 1 : std::stol(term.substr(caret + 1));
        if (p < 2 || e < 1) throw std::domain_error("--m-factored: bad prime power " + term);
        fact.prime_powers.emplace_back(p, e);
    }
    std::sort(fact.prime_powers.begin(), fact.prime_powers.end());
    return fact;
}

void print_verdict(std::ostream& out, const FieldSpec& spec, const Verdict& verdict) {
    out << "F(x) = " << spec.polynomial().to_string() << "   (u=" << spec.u
        << ", v=" << spec.v << ", t=" << spec.t << ", m=" << spec.m.get_str() << ")\n";
    out << "maximal: " << (verdict.maximal ? "yes" : "no") << "\n";
    out << "verdict: " << to_string(verdict.kind) << "\n";
    switch (verdict.kind) {
        case VerdictKind::MaximalMonogenic:
            out << "Z[alpha] is the ring of integers of K; K is monogenic.\n";
            break;
        case VerdictKind::NonMonogenic:
            out << "witnesses:\n";
            for (const RuleHit& hit : verdict.witnesses)
                out << "  " << hit.rule_id << "  "
                    << (hit.source == WitnessSource::CongruenceRule ? "congruence-rule "
                                                                    : "polygon-engine  ")
                    << "p=" << hit.p << "  f=" << hit.f << "  P_f >= " << hit.Pf_bound
                    << " > N_f = " << hit.Nf.get_str() << "\n";
            out << "A prime divides i(K); K is not monogenic.\n";
            break;
        case VerdictKind::NotMaximalUndecided:
            out << "Z[alpha] is not the ring of integers of K, but no prime common index\n"
                   "divisor was certified; monogenicity of K is undecided here.\n";
            break;
    }
}

int run_classify(const FieldSpec& spec, Variant variant, bool as_json, std::ostream& out) {
    Verdict verdict = classify(spec, variant);
    if (as_json)
        out << to_json(verdict).dump(2) << "\n";
    else
        print_verdict(out, spec, verdict);
    switch (verdict.kind) {
        case VerdictKind::MaximalMonogenic: return kExitOk;
        case VerdictKind::NonMonogenic: return kExitNonMonogenic;
        case VerdictKind::NotMaximalUndecided: return kExitUndecided;
    }
    return kExitInputError;
}

bool probable_prime(const Int& p) {
    return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 32) > 0;
}

void print_side_table(std::ostream& out, const ZxPoly& F, std::int64_t p, const ZxPoly& phi) {
    PhiExpansion exp = phi_expand(F, phi);
    NewtonPolygon full = build_polygon(exp, p);
    NewtonPolygon pp = principal_part(full);

    out << "phi = " << phi.to_string() << "\n";
    out << "principal polygon vertices:";
    for (auto& [x, y] : pp.vertices()) out << " (" << x << "," << y << ")";
    out << "\n";
    for (const Side& side : pp.sides) {
        ResidualPolynomial res = residual_polynomial(side, exp, p);
        out << "  side (" << side.x1 << "," << side.y1 << ")->(" << side.x2 << "," << side.y2
            << ")  slope " << side.slope_string() << "  l=" << side.length
            << " H=" << side.height << " d=" << side.d << " e=" << side.e << "\n";
        out << "    residual: " << res.poly.to_string("y") << "\n";
        out << "    factors:";
        for (const auto& [psi, a] : factor(res.poly)) {
            out << "  (" << psi.to_string("y") << ")";
            if (a > 1) out << "^" << a;
        }
        out << "\n";
    }
    out << "  ind_phi = " << phi_index(pp, phi.degree()) << "\n";
    out << render_ascii(pp);
}

int run_polygon(const std::string& poly_text, const Int& p_in, const std::string& phi_text,
                const std::string& svg_path, std::ostream& out, std::ostream& err) {
    ZxPoly F = parse_poly(poly_text);
    if (!F.is_monic() || F.degree() < 1) {
        err << "error: --poly must be monic of degree >= 1\n";
        return kExitInputError;
    }
    if (!probable_prime(p_in) || p_in > 1000000) {
        err << "error: --p must be a prime <= 1e6\n";
        return kExitInputError;
    }
    std::int64_t p = p_in.get_si();

    std::vector<ZxPoly> phis;
    if (!phi_text.empty()) {
        ZxPoly phi = parse_poly(phi_text);
        if (!phi.is_monic() || phi.degree() < 1) {
            err << "error: --phi must be monic of degree >= 1\n";
            return kExitInputError;
        }
        FpPoly phibar = reduce_mod_p(phi, p);
        if (phibar.degree() != phi.degree()) {
            err << "error: --phi is not monic mod " << p << "\n";
            return kExitInputError;
        }
        if (!is_irreducible(phibar)) {
            auto parts = factor(phibar);
            err << "error: phi is reducible mod " << p << "; for instance "
                << lift(parts.front().first).to_string() << " divides it\n";
            return kExitInputError;
        }
        phis.push_back(phi);
    } else {
        for (const auto& [phibar, l] : factor(reduce_mod_p(F, p))) phis.push_back(lift(phibar));
    }

    out << "F(x) = " << F.to_string() << ", p = " << p << "\n";
    for (const ZxPoly& phi : phis) print_side_table(out, F, p, phi);

    if (!svg_path.empty()) {
        // render the first requested phi
        PhiExpansion exp = phi_expand(F, phis.front());
        NewtonPolygon pp = principal_part(build_polygon(exp, p));
        std::ofstream svg(svg_path);
        if (!svg) {
            err << "error: cannot write " << svg_path << "\n";
            return kExitInputError;
        }
        svg << render_svg(pp);
        out << "svg written to " << svg_path << "\n";
    }
    return kExitOk;
}

int run_factor(const std::string& poly_text, const Int& p_in, std::ostream& out,
               std::ostream& err) {
    ZxPoly F = parse_poly(poly_text);
    if (F.degree() < 1) {
        err << "error: --poly must have degree >= 1\n";
        return kExitInputError;
    }
    if (!probable_prime(p_in) || p_in > 10000) {
        err << "error: --p must be a prime <= 1e4\n";
        return kExitInputError;
    }
    std::int64_t p = p_in.get_si();
    FpPoly fbar = reduce_mod_p(F, p);
    if (fbar.degree() < 1) {
        err << "error: polynomial is constant mod " << p << "\n";
        return kExitInputError;
    }
    out << "F(x) = " << F.to_string() << " mod " << p << " = " << fbar.to_string() << "\n";
    for (const auto& [g, mult] : factor(fbar))
        out << "  " << g.to_string() << "   ^" << mult << "\n";
    return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"first-order Newton polygon analysis and monogenicity "
                 "classification of pure fields x^(2^u 3^v 5^t) - m"};
    app.require_subcommand(1);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify a single field");
    int u = 1, v = 1, t = 1;
    std::string m_text, m_factored, variant_name = "proof";
    bool as_json = false;
    classify_cmd->add_option("--u", u, "exponent of 2")->required()->check(CLI::Range(1, 6));
    classify_cmd->add_option("--v", v, "exponent of 3")->required()->check(CLI::Range(1, 6));
    classify_cmd->add_option("--t", t, "exponent of 5")->required()->check(CLI::Range(1, 6));
    classify_cmd->add_option("--m", m_text, "square-free integer m")->required();
    classify_cmd->add_option("--m-factored", m_factored,
                             "prime powers of |m|, e.g. 2*3*17 (skips factoring)");
    classify_cmd->add_option("--variant", variant_name, "rule-table variant: proof|theorem");
    classify_cmd->add_flag("--json", as_json, "emit the verdict as JSON");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "scan a range of m to CSV or JSON");
    std::string from_text, to_text, out_path, format = "csv";
    int jobs = 1;
    int su = 1, sv = 1, st = 1;
    std::string scan_variant_name = "proof";
    scan_cmd->add_option("--m-from", from_text, "first m")->required();
    scan_cmd->add_option("--m-to", to_text, "last m")->required();
    scan_cmd->add_option("--u", su, "exponent of 2")->check(CLI::Range(1, 6));
    scan_cmd->add_option("--v", sv, "exponent of 3")->check(CLI::Range(1, 6));
    scan_cmd->add_option("--t", st, "exponent of 5")->check(CLI::Range(1, 6));
    scan_cmd->add_option("--out", out_path, "output path (default: stdout)");
    scan_cmd->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    scan_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
    scan_cmd->add_option("--variant", scan_variant_name, "rule-table variant");

    // polygon
    auto* polygon_cmd = app.add_subcommand("polygon", "inspect a phi-Newton polygon");
    std::string poly_text, phi_text, svg_path, p_text;
    polygon_cmd->add_option("--poly", poly_text, "monic integer polynomial")->required();
    polygon_cmd->add_option("--p", p_text, "prime")->required();
    polygon_cmd->add_option("--phi", phi_text, "monic lift with irreducible reduction");
    polygon_cmd->add_option("--svg", svg_path, "write an SVG rendering here");

    // factor
    auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial mod p");
    std::string fpoly_text, fp_text;
    factor_cmd->add_option("--poly", fpoly_text, "integer polynomial")->required();
    factor_cmd->add_option("--p", fp_text, "prime <= 1e4")->required();

    std::vector<const char*> argv;
    argv.push_back("montes-lite");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (classify_cmd->parsed()) {
            Int m(m_text);
            if (abs(m) > (Int(1) << 63)) {
                err << "error: |m| must be <= 2^63\n";
                return kExitInputError;
            }
            FieldSpec spec;
            try {
                spec = m_factored.empty()
                           ? make_field_spec(u, v, t, m)
                           : make_field_spec(u, v, t, m, parse_factored(m_factored, m));
            } catch (const FactoringBudgetExceeded& e) {
                err << "error: " << e.what() << "; pass --m-factored\n";
                return kExitInputError;
            }
            return run_classify(spec, parse_variant(variant_name), as_json, out);
        }
        if (scan_cmd->parsed()) {
            Int from(from_text), to(to_text);
            if (to - from > 1000000) {
                err << "error: scan range larger than 1e6\n";
                return kExitInputError;
            }
            ScanResult result =
                scan_range(from, to, su, sv, st, parse_variant(scan_variant_name), jobs);
            std::string payload =
                format == "csv" ? scan_csv(result) : scan_json(result).dump(2) + "\n";
            if (out_path.empty()) {
                out << payload;
            } else {
                std::ofstream file(out_path, std::ios::binary);
                if (!file) {
                    err << "error: cannot write " << out_path << "\n";
                    return kExitInputError;
                }
                file << payload;
            }
            err << "rows=" << result.rows.size() << " skipped=" << result.skipped
                << " maximal=" << result.maximal << " nonmonogenic=" << result.nonmonogenic
                << " undecided=" << result.undecided << "\n";
            return kExitOk;
        }
        if (polygon_cmd->parsed())
            return run_polygon(poly_text, Int(p_text), phi_text, svg_path, out, err);
        if (factor_cmd->parsed()) return run_factor(fpoly_text, Int(fp_text), out, err);
    } catch (const PolyParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace montes
