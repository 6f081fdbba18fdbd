#include "cfwave/report.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "cfwave/document.hpp"
#include "cfwave/errors.hpp"
#include "cfwave/spectral.hpp"

namespace cfwave::report {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Series {
    std::string label;
    std::vector<double> x, y;
};

// minimal deterministic polyline plot; log_y switches to log10 vertical scale
std::string polyline_svg(const std::vector<Series>& series, const std::string& title, bool log_y) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                   "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
                                   "#aec7e8", "#ffbb78", "#98df8a", "#ff9896", "#c5b0d5",
                                   "#c49c94", "#f7b6d2", "#c7c7c7"};
    const double W = 840, H = 520, mL = 60, mR = 170, mT = 40, mB = 40;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            double y = s.y[i];
            if (log_y) {
                if (y <= 0) continue;
                y = std::log10(y);
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax <= ymin) ymax = ymin + 1;
    auto fx = [&](double x) { return mL + (x - xmin) / (xmax - xmin) * (W - mL - mR); };
    auto fy = [&](double y) { return H - mB - (y - ymin) / (ymax - ymin) * (H - mT - mB); };
    char buf[160];
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 840 520\">\n";
    os << "<rect width=\"840\" height=\"520\" fill=\"white\"/>\n";
    os << "<text x=\"20\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\">" << title
       << (log_y ? " (log10 vertical scale)" : "") << "</text>\n";
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                  mL, H - mB, W - mR, H - mB);
    os << buf;
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                  mL, mT, mL, H - mB);
    os << buf;
    for (std::size_t si = 0; si < series.size(); ++si) {
        os << "<polyline fill=\"none\" stroke=\"" << colors[si % 18] << "\" stroke-width=\"1.2\" points=\"";
        for (std::size_t i = 0; i < series[si].x.size(); ++i) {
            double y = series[si].y[i];
            if (log_y) {
                if (y <= 0) continue;
                y = std::log10(y);
            }
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", fx(series[si].x[i]), fy(y));
            os << buf;
        }
        os << "\"/>\n";
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"12\" "
                      "fill=\"%s\">%s</text>\n",
                      W - mR + 8, mT + 16.0 * double(si + 1), colors[si % 18],
                      series[si].label.c_str());
        os << buf;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string table1_csv(int Lmax, int Mmax) {
    std::ostringstream os;
    os << "# Sobolev exponents of psi_h, rows M = 1.." << Mmax << ", columns L = 1.." << Lmax
       << "\n";
    os << "# method = recursive, phase = mid; '.' marks cells the solver could not produce\n";
    os << "M";
    for (int L = 1; L <= Lmax; ++L) os << ",L" << L;
    os << ",notes\n";
    for (int M = 1; M <= Mmax; ++M) {
        os << M;
        std::string notes;
        for (int L = 1; L <= Lmax; ++L) {
            try {
                auto design = design_bank(L, M, PhaseChoice::AllInsideUnitCircle,
                                          BezoutMethod::RecursiveInterp);
                const double s = spectral::sobolev_exponent(design.bank);
                char buf[16];
                std::snprintf(buf, sizeof buf, "%.4f", s);
                os << ',' << buf;
            } catch (const Error& e) {
                os << ",.";
                if (!notes.empty()) notes += "; ";
                notes += "L" + std::to_string(L) + ": " + e.what();
            }
        }
        os << ',' << notes << "\n";
    }
    return os.str();
}

std::string figure1_csv() {
    const int N = 1025;
    const int terms = 60;
    const int Ls[] = {2, 4, 8, 16};
    std::ostringstream os;
    os << "# |1 - exp(i eta_L(omega))| on [-4pi, 4pi], N = " << N << ", beta terms = " << terms
       << "\n";
    os << "omega,L2,L4,L8,L16\n";
    for (int i = 0; i < N; ++i) {
        const double w = -4.0 * kPi + 8.0 * kPi * i / (N - 1);
        os << format_double(w);
        for (int L : Ls) {
            const double v = std::abs(1.0 - std::polar(1.0, spectral::eta(L, w, terms)));
            os << ',' << format_double(v);
        }
        os << "\n";
    }
    return os.str();
}

std::string figure1_svg() {
    const int N = 1025;
    const int terms = 60;
    std::vector<Series> series;
    for (int L : {2, 4, 8, 16}) {
        Series s;
        s.label = "L = " + std::to_string(L);
        for (int i = 0; i < N; ++i) {
            const double w = -4.0 * kPi + 8.0 * kPi * i / (N - 1);
            s.x.push_back(w / kPi);
            s.y.push_back(std::abs(1.0 - std::polar(1.0, spectral::eta(L, w, terms))));
        }
        series.push_back(std::move(s));
    }
    return polyline_svg(series, "|1 - exp(i eta_L)| against omega/pi", false);
}

namespace {

struct Fig2Data {
    std::vector<double> omega;
    std::vector<Series> psi, cpx;  // |psi_h| and |psi_h + i psi_g| per (M,L)
};

Fig2Data figure2_data() {
    Fig2Data d;
    const int N = 4097, J = 28;
    const double Omega = 16.0 * kPi;
    for (int M : {2, 3, 4})
        for (int L : {2, 4, 8}) {
            auto design =
                design_bank(L, M, PhaseChoice::AllInsideUnitCircle, BezoutMethod::RecursiveInterp);
            const SpectrumGrid g = spectral::cascade_spectra(design.bank, Omega, N, J);
            if (d.omega.empty()) d.omega = g.omega;
            Series sp, sc;
            sp.label = "M" + std::to_string(M) + "_L" + std::to_string(L);
            sc.label = sp.label;
            for (std::size_t i = 0; i < g.omega.size(); ++i) {
                sp.x.push_back(g.omega[i] / kPi);
                sc.x.push_back(g.omega[i] / kPi);
                sp.y.push_back(std::abs(g.psi_h[i]));
                sc.y.push_back(
                    std::abs(g.psi_h[i] + std::complex<double>(0.0, 1.0) * g.psi_g[i]));
            }
            d.psi.push_back(std::move(sp));
            d.cpx.push_back(std::move(sc));
        }
    return d;
}

}  // namespace

std::string figure2_csv() {
    const Fig2Data d = figure2_data();
    std::ostringstream os;
    os << "# |psi_h| and |psi_h + i psi_g| on [-16pi, 16pi], N = 4097, J = 28, method = "
          "recursive, phase = mid\n";
    os << "omega";
    for (const auto& s : d.psi) os << ",abs_psi_" << s.label;
    for (const auto& s : d.cpx) os << ",abs_cpx_" << s.label;
    os << "\n";
    for (std::size_t i = 0; i < d.omega.size(); ++i) {
        os << format_double(d.omega[i]);
        for (const auto& s : d.psi) os << ',' << format_double(s.y[i]);
        for (const auto& s : d.cpx) os << ',' << format_double(s.y[i]);
        os << "\n";
    }
    return os.str();
}

std::string figure2_svg() {
    const Fig2Data d = figure2_data();
    // thin to every 4th sample; the CSV keeps the full resolution
    std::vector<Series> all;
    for (const auto& s : d.cpx) {
        Series t;
        t.label = s.label;
        for (std::size_t i = 0; i < s.x.size(); i += 4) {
            t.x.push_back(s.x[i]);
            t.y.push_back(s.y[i]);
        }
        all.push_back(std::move(t));
    }
    return polyline_svg(all, "|psi_h + i psi_g| against omega/pi", false);
}

std::string figure3_csv() {
    const int N = 8193, J = 28;
    const double Omega = 16.0 * kPi;
    std::ostringstream os;
    os << "# E1 (peak ratio) and E2 (energy ratio) against L, per M; N = " << N << ", J = " << J
       << ", Omega = 16pi, method = recursive, phase = mid\n";
    os << "L,E1_M2,E2_M2,E1_M3,E2_M3,E1_M4,E2_M4\n";
    for (int L = 1; L <= 8; ++L) {
        os << L;
        for (int M : {2, 3, 4}) {
            auto design =
                design_bank(L, M, PhaseChoice::AllInsideUnitCircle, BezoutMethod::RecursiveInterp);
            const SpectrumGrid g = spectral::cascade_spectra(design.bank, Omega, N, J);
            auto [e1, e2] = spectral::leakage_measures(g);
            os << ',' << format_double(e1) << ',' << format_double(e2);
        }
        os << "\n";
    }
    return os.str();
}

std::string figure3_svg() {
    const int N = 8193, J = 28;
    const double Omega = 16.0 * kPi;
    std::vector<Series> series;
    for (int M : {2, 3, 4}) {
        Series s1, s2;
        s1.label = "E1 M" + std::to_string(M);
        s2.label = "E2 M" + std::to_string(M);
        for (int L = 1; L <= 8; ++L) {
            auto design =
                design_bank(L, M, PhaseChoice::AllInsideUnitCircle, BezoutMethod::RecursiveInterp);
            const SpectrumGrid g = spectral::cascade_spectra(design.bank, Omega, N, J);
            auto [e1, e2] = spectral::leakage_measures(g);
            s1.x.push_back(L);
            s1.y.push_back(e1);
            s2.x.push_back(L);
            s2.y.push_back(e2);
        }
        series.push_back(std::move(s1));
        series.push_back(std::move(s2));
    }
    return polyline_svg(series, "E1 and E2 against L", true);
}

}  // namespace cfwave::report
