#include "montes/cli.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace montes;

namespace {

struct Run {
    int exit;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify exit codes") {
    CHECK(run({"classify", "--u", "1", "--v", "1", "--t", "1", "--m", "2"}).exit == 0);
    CHECK(run({"classify", "--u", "1", "--v", "1", "--t", "1", "--m", "5"}).exit == 10);
    CHECK(run({"classify", "--u", "1", "--v", "2", "--t", "1", "--m", "35"}).exit == 20);

    Run bad = run({"classify", "--u", "1", "--v", "1", "--t", "1", "--m", "12"});
    CHECK(bad.exit == 2);
    CHECK(bad.err.find("square-free") != std::string::npos);

    CHECK(run({"classify", "--u", "1", "--v", "1", "--t", "1"}).exit == 2);  // missing --m
    CHECK(run({"classify", "--u", "9", "--v", "1", "--t", "1", "--m", "2"}).exit == 2);
    CHECK(run({"nonsense"}).exit == 2);
}

TEST_CASE("classify output text and rule ids") {
    Run ok = run({"classify", "--u", "1", "--v", "1", "--t", "1", "--m", "2"});
    CHECK(ok.out.find("ring of integers") != std::string::npos);

    Run r1 = run({"classify", "--u", "1", "--v", "1", "--t", "1", "--m", "5"});
    CHECK(r1.out.find("R1") != std::string::npos);
    CHECK(r1.out.find("not monogenic") != std::string::npos);
}

TEST_CASE("classify --json matches the documented schema") {
    Run j = run({"classify", "--u", "1", "--v", "1", "--t", "1", "--m", "5", "--json"});
    CHECK(j.exit == 10);
    nlohmann::json parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["kind"] == "NonMonogenic");
    CHECK(parsed["maximal"] == false);
    CHECK(parsed["variant"] == "proof");
    CHECK(parsed["rules"].is_array());
}

TEST_CASE("classify accepts --m-factored") {
    Run r = run({"classify", "--u", "1", "--v", "1", "--t", "1", "--m", "-105",
                 "--m-factored", "3*5*7"});
    CHECK(r.exit != 2);
    Run mismatch = run({"classify", "--u", "1", "--v", "1", "--t", "1", "--m", "10",
                        "--m-factored", "3*5"});
    CHECK(mismatch.exit == 2);
}

TEST_CASE("scan produces sorted deterministic CSV") {
    ScanResult a = scan_range(Int(2), Int(50), 1, 1, 1, Variant::Proof, 1);
    ScanResult b = scan_range(Int(2), Int(50), 1, 1, 1, Variant::Proof, 4);
    CHECK(scan_csv(a) == scan_csv(b));

    // 30 square-free m in 2..50
    CHECK(a.rows.size() == 30);
    CHECK(a.skipped == 19);
    for (std::size_t i = 1; i < a.rows.size(); ++i) CHECK(a.rows[i - 1].m < a.rows[i].m);

    // every m = 1 (mod 4) square-free value is NonMonogenic via R1
    for (const ScanRow& row : a.rows) {
        if (canonical_residue(row.m, Int(4)) == 1) {
            CHECK(row.kind == VerdictKind::NonMonogenic);
            CHECK(std::find(row.rules.begin(), row.rules.end(), "R1") != row.rules.end());
        }
    }

    std::string csv = scan_csv(a);
    CHECK(csv.rfind("u,v,t,m,n,maximal,verdict,rules,witness_p,witness_f,Pf_bound,Nf\n", 0) ==
          0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 31);  // header + 30 rows
}

TEST_CASE("scan handles negative ranges and engine witnesses") {
    ScanResult r = scan_range(Int(-10), Int(-2), 1, 1, 1, Variant::Proof, 2);
    bool found = false;
    for (const ScanRow& row : r.rows) {
        if (row.m == -7) {
            found = true;
            CHECK(row.kind == VerdictKind::NonMonogenic);
            REQUIRE(row.witness.has_value());
            CHECK(row.witness->p == 2);
        }
    }
    CHECK(found);
}

TEST_CASE("scan empty effective range still emits the header") {
    ScanResult r = scan_range(Int(0), Int(1), 1, 1, 1, Variant::Proof, 1);
    CHECK(r.rows.empty());
    CHECK(r.skipped == 2);
    CHECK(scan_csv(r) == "u,v,t,m,n,maximal,verdict,rules,witness_p,witness_f,Pf_bound,Nf\n");
}

TEST_CASE("scan command writes files and reports a summary") {
    std::string path = "scan_test_tmp.csv";
    Run r = run({"scan", "--m-from", "2", "--m-to", "20", "--out", path});
    CHECK(r.exit == 0);
    CHECK(r.err.find("rows=") != std::string::npos);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "u,v,t,m,n,maximal,verdict,rules,witness_p,witness_f,Pf_bound,Nf");
    in.close();
    std::remove(path.c_str());

    Run json_run = run({"scan", "--m-from", "2", "--m-to", "10", "--format", "json"});
    CHECK(json_run.exit == 0);
    nlohmann::json parsed = nlohmann::json::parse(json_run.out);
    CHECK(parsed["rows"].is_array());
    CHECK(parsed.contains("skipped"));
}

TEST_CASE("polygon command") {
    Run r = run({"polygon", "--poly", "x^30+7", "--p", "2", "--phi", "x^2+x+1"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("(0,3) (1,1) (2,0)") != std::string::npos);
    CHECK(r.out.find("ind_phi = 2") != std::string::npos);

    // reducible phi: the error names a witness factor
    Run bad = run({"polygon", "--poly", "x^4+1", "--p", "2", "--phi", "x^2+1"});
    CHECK(bad.exit == 2);
    CHECK(bad.err.find("x + 1") != std::string::npos);

    Run noparse = run({"polygon", "--poly", "x^^2", "--p", "2"});
    CHECK(noparse.exit == 2);

    Run notprime = run({"polygon", "--poly", "x^4+1", "--p", "6"});
    CHECK(notprime.exit == 2);

    // all sites when --phi is omitted
    Run all = run({"polygon", "--poly", "x^30-2", "--p", "2"});
    CHECK(all.exit == 0);
    CHECK(all.out.find("phi = x") != std::string::npos);

    std::string svg_path = "polygon_test_tmp.svg";
    Run svg = run({"polygon", "--poly", "x^30+7", "--p", "2", "--phi", "x^2+x+1", "--svg",
                   svg_path});
    CHECK(svg.exit == 0);
    std::ifstream in(svg_path);
    REQUIRE(in.good());
    std::string first;
    std::getline(in, first);
    CHECK(first.find("<svg") != std::string::npos);
    in.close();
    std::remove(svg_path.c_str());
}

TEST_CASE("factor command") {
    Run r = run({"factor", "--poly", "x^12+1", "--p", "5"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("x^2 + 2") != std::string::npos);
    CHECK(r.out.find("x^2 + 3*x + 3") != std::string::npos);

    Run self = run({"factor", "--poly", "x^2+x+1", "--p", "2"});
    CHECK(self.exit == 0);
    CHECK(self.out.find("x^2 + x + 1   ^1") != std::string::npos);

    CHECK(run({"factor", "--poly", "x^2+x+1", "--p", "9973"}).exit == 0);
    CHECK(run({"factor", "--poly", "x^2+x+1", "--p", "10007"}).exit == 2);  // above the bound
    CHECK(run({"factor", "--poly", "5", "--p", "5"}).exit == 2);
}

TEST_CASE("help exits zero") {
    CHECK(run({"--help"}).exit == 0);
}
