// End-to-end checks of the cfwave binary: exit codes, document round trips,
// determinism of the generated artifacts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <algorithm>

#include "cfwave/document.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "cfwave_cli_test";

int run(const std::string& args, const std::string& stdout_to = "") {
    std::string cmd = std::string(CFWAVE_BIN) + " " + args;
    if (!stdout_to.empty()) cmd += " > " + stdout_to;
    cmd += " 2> " + (kWork / "stderr.txt").string();
    const int rc = std::system(cmd.c_str());
    return rc == -1 ? -1 : WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

}  // namespace

TEST_CASE("design then verify round trip") {
    fs::create_directories(kWork);
    const auto doc_path = (kWork / "bank24.json").string();
    REQUIRE(run("design --L 2 --M 4 --out " + doc_path) == 0);

    const auto doc = cfwave::parse_document(slurp(doc_path));
    CHECK(doc.L == 2);
    CHECK(doc.M == 4);
    CHECK(doc.diagnostics.pr_defect <= 1e-8);

    CHECK(run("verify " + doc_path, (kWork / "verify.txt").string()) == 0);
}

TEST_CASE("tampered documents fail verification") {
    fs::create_directories(kWork);
    const auto doc_path = (kWork / "bank22.json").string();
    REQUIRE(run("design --L 2 --M 2 --out " + doc_path) == 0);
    auto doc = cfwave::parse_document(slurp(doc_path));

    SUBCASE("dented h0 breaks perfect reconstruction") {
        doc.h0[0] += 1e-3;
        spit(kWork / "bad_pr.json", cfwave::serialize(doc));
        CHECK(run("verify " + (kWork / "bad_pr.json").string(),
                  (kWork / "v1.txt").string()) != 0);
        CHECK(slurp(kWork / "v1.txt").find("FAIL") != std::string::npos);
    }

    SUBCASE("g0 that is not the reversed-factor mate fails the Hilbert slope") {
        doc.g0[1] += 1e-3;
        spit(kWork / "bad_g0.json", cfwave::serialize(doc));
        CHECK(run("verify " + (kWork / "bad_g0.json").string(),
                  (kWork / "v2.txt").string()) != 0);
    }
}

TEST_CASE("linear method reports the ill-conditioned system at (7,7)") {
    fs::create_directories(kWork);
    CHECK(run("design --L 7 --M 7 --method linear --out " +
              (kWork / "ill.json").string()) == 2);
    CHECK(slurp(kWork / "stderr.txt").find("IllConditioned") != std::string::npos);

    CHECK(run("design --L 7 --M 7 --method recursive --out " +
              (kWork / "ok77.json").string()) == 0);
    const auto doc = cfwave::parse_document(slurp((kWork / "ok77.json").string()));
    CHECK(doc.diagnostics.pr_defect <= 1e-7);
}

TEST_CASE("analyze emits the report fields") {
    fs::create_directories(kWork);
    const auto doc_path = (kWork / "bank22a.json").string();
    REQUIRE(run("design --L 2 --M 2 --out " + doc_path) == 0);
    REQUIRE(run("analyze " + doc_path + " --grid-n 8193", (kWork / "analysis.json").string()) == 0);
    const std::string text = slurp(kWork / "analysis.json");
    for (const char* key : {"E1", "E2", "uL_max", "bound_violations", "sobolev_exponent"})
        CHECK(text.find(key) != std::string::npos);
    // sobolev at (2,2) is published as 1.23
    const auto pos = text.find("sobolev_exponent");
    const double s = std::atof(text.c_str() + pos + 18);
    CHECK(s == doctest::Approx(1.23).epsilon(0.05));
}

TEST_CASE("alternating-pairs phase designs verify cleanly") {
    fs::create_directories(kWork);
    const auto doc_path = (kWork / "bank_min.json").string();
    REQUIRE(run("design --L 3 --M 2 --phase min --out " + doc_path) == 0);
    const auto doc = cfwave::parse_document(slurp(doc_path));
    CHECK(doc.phase == "min");
    CHECK(run("verify " + doc_path, (kWork / "vmin.txt").string()) == 0);
}

TEST_CASE("analyze can dump the sampled spectra") {
    fs::create_directories(kWork);
    const auto doc_path = (kWork / "bank_sp.json").string();
    REQUIRE(run("design --L 2 --M 2 --out " + doc_path) == 0);
    const auto csv_path = (kWork / "spectra.csv").string();
    REQUIRE(run("analyze " + doc_path + " --grid-n 1025 --spectra-csv " + csv_path,
                (kWork / "an.txt").string()) == 0);
    const std::string csv = slurp(csv_path);
    CHECK(csv.find("omega,re_phi_h") != std::string::npos);
    // header comment plus 1025 data rows
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1027);
}

TEST_CASE("reference comparison accepts our own export and rejects others") {
    fs::create_directories(kWork);
    const auto doc_path = (kWork / "ref_self.json").string();
    REQUIRE(run("design --L 3 --M 3 --out " + doc_path) == 0);
    // the document itself is a valid reference (h0/g0 arrays)
    CHECK(run("verify " + doc_path + " --reference " + doc_path,
              (kWork / "v3.txt").string()) == 0);

    auto doc = cfwave::parse_document(slurp(doc_path));
    doc.h0[2] += 1e-4;
    spit(kWork / "ref_other.json", cfwave::serialize(doc));
    CHECK(run("verify " + doc_path + " --reference " + (kWork / "ref_other.json").string(),
              (kWork / "v4.txt").string()) != 0);
    // absent reference file is skipped, not an error
    CHECK(run("verify " + doc_path + " --reference " + (kWork / "nope.json").string(),
              (kWork / "v5.txt").string()) == 0);
}

TEST_CASE("table and figure artifacts are byte-identical across runs") {
    fs::create_directories(kWork);
    REQUIRE(run("table1 --Lmax 3 --Mmax 2 --out " + (kWork / "t_a.csv").string()) == 0);
    REQUIRE(run("table1 --Lmax 3 --Mmax 2 --out " + (kWork / "t_b.csv").string()) == 0);
    CHECK(slurp(kWork / "t_a.csv") == slurp(kWork / "t_b.csv"));

    REQUIRE(run("figures --which 3 --out-dir " + (kWork / "f3").string()) == 0);
    const std::string f3 = slurp(kWork / "f3" / "figure3.csv");
    CHECK(f3.find("L,E1_M2,E2_M2") != std::string::npos);
    CHECK(f3.find("\n8,") != std::string::npos);

    REQUIRE(run("figures --which 1 --out-dir " + (kWork / "f1a").string()) == 0);
    REQUIRE(run("figures --which 1 --out-dir " + (kWork / "f1b").string()) == 0);
    CHECK(slurp(kWork / "f1a" / "figure1.csv") == slurp(kWork / "f1b" / "figure1.csv"));
    CHECK(slurp(kWork / "f1a" / "figure1.svg") == slurp(kWork / "f1b" / "figure1.svg"));
    // figure 1 carries the sqrt(2) value at the omega = 0 row
    const std::string csv = slurp(kWork / "f1a" / "figure1.csv");
    CHECK(csv.find("\n0,1.41421356237") != std::string::npos);

    // at omega = 2pi the L = 16 curve has converged onto the step value 2
    const auto pos = csv.find("\n6.2831853071795862,");
    REQUIRE(pos != std::string::npos);
    const std::string line = csv.substr(pos + 1, csv.find('\n', pos + 1) - pos - 1);
    const auto last_comma = line.rfind(',');
    const double l16 = std::atof(line.c_str() + last_comma + 1);
    CHECK(l16 >= 2.0 - 1e-3);
    CHECK(l16 <= 2.0 + 1e-12);
}
