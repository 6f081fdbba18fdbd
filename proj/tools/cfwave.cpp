// cfwave: design, verify, analyze and export approximate-Hilbert-pair wavelet
// filter banks built from the Thiran common factor.

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfwave/document.hpp"
#include "cfwave/errors.hpp"
#include "cfwave/report.hpp"
#include "cfwave/spectral.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string error_name(const cfwave::Error& e) {
    if (dynamic_cast<const cfwave::IllConditioned*>(&e)) return "IllConditioned";
    if (dynamic_cast<const cfwave::NotNonnegative*>(&e)) return "NotNonnegative";
    if (dynamic_cast<const cfwave::ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const cfwave::InvalidOrder*>(&e)) return "InvalidOrder";
    if (dynamic_cast<const cfwave::CostGuard*>(&e)) return "CostGuard";
    if (dynamic_cast<const cfwave::NonConvergence*>(&e)) return "NonConvergence";
    if (dynamic_cast<const cfwave::RecursionDefect*>(&e)) return "RecursionDefect";
    if (dynamic_cast<const cfwave::TruncationTooShallow*>(&e)) return "TruncationTooShallow";
    if (dynamic_cast<const cfwave::EigenFailure*>(&e)) return "EigenFailure";
    if (dynamic_cast<const cfwave::ConjugatePairingFailure*>(&e)) return "ConjugatePairingFailure";
    return "Error";
}

void emit_error(const cfwave::Error& e) {
    std::cerr << "{\"error\":{\"type\":\"" << error_name(e) << "\",\"message\":"
              << nlohmann::json(std::string(e.what())).dump() << "}}\n";
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cfwave::Error("cannot open '" + path + "' for writing");
    out << text;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cfwave::Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// canonical form for coefficient comparison against external references:
// support starting at index 0, first nonzero coefficient positive
std::vector<double> canonicalize(std::vector<double> c) {
    std::size_t head = 0;
    while (head < c.size() && c[head] == 0.0) ++head;
    c.erase(c.begin(), c.begin() + long(head));
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (!c.empty() && c.front() < 0.0)
        for (double& v : c) v = -v;
    return c;
}

double compare_canonical(const std::vector<double>& a, const std::vector<double>& b) {
    const auto ca = canonicalize(a), cb = canonicalize(b);
    if (ca.size() != cb.size()) return HUGE_VAL;
    double worst = 0.0, scale = 0.0;
    for (double v : ca) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < ca.size(); ++i)
        worst = std::max(worst, std::abs(ca[i] - cb[i]));
    return scale > 0 ? worst / scale : worst;
}

int cmd_design(int L, int M, const std::string& phase, const std::string& method,
               const std::string& out) {
    cfwave::BezoutMethod bm = cfwave::BezoutMethod::RecursiveInterp;
    if (method == "linear") bm = cfwave::BezoutMethod::LinearSystem;
    else if (method == "exact") bm = cfwave::BezoutMethod::ExactRational;
    else if (method != "recursive") throw cfwave::ParseError("unknown method '" + method + "'");
    auto design = cfwave::design_bank(L, M, cfwave::phase_from_label(phase), bm);
    write_text(out, cfwave::serialize(cfwave::make_document(design)));
    return 0;
}

struct VerifyTols {
    double pr = 1e-8;
    double h0 = 1e-10;
    double vm = 0.1;
    double hilbert = 0.2;
    double reference = 1e-6;
};

int cmd_verify(const std::string& path, const std::string& reference, const VerifyTols& tol) {
    const auto doc = cfwave::parse_document(read_text(path));
    const auto bank = cfwave::to_bank(doc);
    const double pr = cfwave::verify_pr(bank);
    double h0_at_1 = 0.0;
    for (double c : bank.h0.coeffs()) h0_at_1 += c;
    const double h0_err = std::abs(h0_at_1 - std::sqrt(2.0));
    const double vm = cfwave::vanishing_moment_slope(bank);
    const double hs = cfwave::hilbert_order_check(bank);

    const bool pr_ok = pr <= tol.pr;
    const bool h0_ok = h0_err <= tol.h0;
    const bool vm_ok = std::isinf(vm) || std::abs(vm - bank.M) <= tol.vm;
    const bool hs_ok = std::isinf(hs) || hs >= 2 * bank.L + 1 - tol.hilbert;
    bool ref_ok = true;

    std::cout << "pr_defect            " << cfwave::format_double(pr) << (pr_ok ? "  ok" : "  FAIL")
              << "\n";
    std::cout << "h0_at_1_minus_sqrt2  " << cfwave::format_double(h0_at_1 - std::sqrt(2.0))
              << (h0_ok ? "  ok" : "  FAIL") << "\n";
    std::cout << "vm_slope             " << cfwave::format_double(vm) << (vm_ok ? "  ok" : "  FAIL")
              << "\n";
    std::cout << "hilbert_slope        " << cfwave::format_double(hs) << (hs_ok ? "  ok" : "  FAIL")
              << "\n";

    if (!reference.empty() && std::filesystem::exists(reference)) {
        nlohmann::json ref = nlohmann::json::parse(read_text(reference), nullptr, false);
        if (ref.is_discarded()) throw cfwave::ParseError("reference file is not valid JSON");
        for (const char* key : {"h0", "g0", "h1", "g1"}) {
            if (!ref.contains(key)) continue;
            std::vector<double> want;
            for (const auto& x : ref[key]) want.push_back(x.get<double>());
            const std::vector<double>& have = key == std::string("h0")   ? doc.h0
                                              : key == std::string("g0") ? doc.g0
                                              : key == std::string("h1") ? doc.h1
                                                                         : doc.g1;
            const double dev = compare_canonical(have, want);
            const bool ok = dev <= tol.reference;
            ref_ok = ref_ok && ok;
            std::cout << "reference_" << key << "       " << cfwave::format_double(dev)
                      << (ok ? "  ok" : "  FAIL") << "\n";
        }
    }
    return (pr_ok && h0_ok && vm_ok && hs_ok && ref_ok) ? 0 : 1;
}

int cmd_analyze(const std::string& path, double omega_max, int grid_n, int depth, int terms,
                const std::string& spectra_csv) {
    const auto doc = cfwave::parse_document(read_text(path));
    const auto bank = cfwave::to_bank(doc);
    const auto rep = cfwave::spectral::analyze(bank, omega_max, grid_n, depth, terms);
    std::cout << "{\"E1\":" << cfwave::format_double(rep.e1)
              << ",\"E2\":" << cfwave::format_double(rep.e2)
              << ",\"uL_max\":" << cfwave::format_double(rep.ul_max_on_grid)
              << ",\"bound_violations\":" << rep.bound_violations
              << ",\"hilbert_slope\":" << cfwave::format_double(rep.hilbert_slope)
              << ",\"sobolev_exponent\":" << cfwave::format_double(rep.sobolev_exponent) << "}\n";
    if (!spectra_csv.empty()) {
        const auto grid = cfwave::spectral::cascade_spectra(bank, omega_max, grid_n, depth);
        std::ostringstream os;
        os << "# spectra for L=" << bank.L << " M=" << bank.M << " phase=" << doc.phase
           << "; Omega=" << cfwave::format_double(omega_max) << " N=" << grid_n << " J=" << depth
           << "\n";
        os << "omega,re_phi_h,im_phi_h,re_psi_h,im_psi_h,re_phi_g,im_phi_g,re_psi_g,im_psi_g\n";
        for (std::size_t i = 0; i < grid.omega.size(); ++i) {
            os << cfwave::format_double(grid.omega[i]);
            for (const auto* v : {&grid.phi_h, &grid.psi_h, &grid.phi_g, &grid.psi_g})
                os << ',' << cfwave::format_double((*v)[i].real()) << ','
                   << cfwave::format_double((*v)[i].imag());
            os << "\n";
        }
        write_text(spectra_csv, os.str());
    }
    return rep.bound_violations == 0 ? 0 : 1;
}

int cmd_figures(int which, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    auto emit = [&](const std::string& stem, const std::string& csv, const std::string& svg) {
        write_text((fs::path(out_dir) / (stem + ".csv")).string(), csv);
        write_text((fs::path(out_dir) / (stem + ".svg")).string(), svg);
    };
    switch (which) {
        case 1: emit("figure1", cfwave::report::figure1_csv(), cfwave::report::figure1_svg()); break;
        case 2: emit("figure2", cfwave::report::figure2_csv(), cfwave::report::figure2_svg()); break;
        case 3: emit("figure3", cfwave::report::figure3_csv(), cfwave::report::figure3_svg()); break;
        default: throw cfwave::Error("figure must be 1, 2 or 3");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"common-factor Hilbert-pair wavelet filter design"};
    app.require_subcommand(1);

    int L = 2, M = 2, grid_n = (1 << 15) + 1, depth = 25, terms = 40, which = 1;
    double omega_max = 16.0 * kPi;
    VerifyTols tol;
    std::string phase = "mid", method = "recursive", out = "-", path, reference, spectra_csv,
                out_dir = ".";
    int Lmax = 8, Mmax = 8;

    auto* design = app.add_subcommand("design", "design a filter bank and write its JSON document");
    design->add_option("--L", L, "analytic approximation order (>= 1)")->required();
    design->add_option("--M", M, "vanishing moments (>= 1)")->required();
    design->add_option("--phase", phase, "root selection: mid (all inside) or min (alternating)");
    design->add_option("--method", method, "bezout solver: recursive, linear or exact");
    design->add_option("--out", out, "output path, '-' for stdout");

    auto* verify = app.add_subcommand("verify", "check a document against its design contracts");
    verify->add_option("path", path, "filter bank JSON document")->required();
    verify->add_option("--reference", reference,
                       "external coefficient file to compare against (skipped when absent)");
    verify->add_option("--tol-pr", tol.pr, "perfect-reconstruction tolerance");
    verify->add_option("--tol-h0", tol.h0, "tolerance on H0(1) - sqrt(2)");
    verify->add_option("--tol-vm", tol.vm, "vanishing-moment slope tolerance around M");
    verify->add_option("--tol-hilbert", tol.hilbert, "allowed slope shortfall below 2L+1");
    verify->add_option("--tol-reference", tol.reference,
                       "relative coefficient tolerance for --reference");

    auto* analyze = app.add_subcommand("analyze", "quasi-analyticity report for a document");
    analyze->add_option("path", path, "filter bank JSON document")->required();
    analyze->add_option("--omega-max", omega_max, "grid half-width in radians");
    analyze->add_option("--grid-n", grid_n, "grid point count (odd)");
    analyze->add_option("--cascade-depth", depth, "truncation depth of the infinite products");
    analyze->add_option("--beta-terms", terms, "terms of the dyadic phase series");
    analyze->add_option("--spectra-csv", spectra_csv, "also dump the sampled spectra as CSV");

    auto* table1 = app.add_subcommand("table1", "Sobolev exponent table as CSV");
    table1->add_option("--Lmax", Lmax, "largest L column");
    table1->add_option("--Mmax", Mmax, "largest M row");
    table1->add_option("--out", out, "output path, '-' for stdout");

    auto* figures = app.add_subcommand("figures", "reproduction CSV + SVG for the survey plots");
    figures->add_option("--which", which, "figure number: 1, 2 or 3")->required();
    figures->add_option("--out-dir", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (design->parsed()) return cmd_design(L, M, phase, method, out);
        if (verify->parsed()) return cmd_verify(path, reference, tol);
        if (analyze->parsed()) return cmd_analyze(path, omega_max, grid_n, depth, terms, spectra_csv);
        if (table1->parsed()) {
            write_text(out, cfwave::report::table1_csv(Lmax, Mmax));
            return 0;
        }
        if (figures->parsed()) return cmd_figures(which, out_dir);
    } catch (const cfwave::Error& e) {
        emit_error(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":{\"type\":\"Unexpected\",\"message\":"
                  << nlohmann::json(std::string(e.what())).dump() << "}}\n";
        return 2;
    }
    return 0;
}
