#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "cfwave/errors.hpp"
#include "cfwave/spectral.hpp"
#include "cfwave/thiran.hpp"

using namespace cfwave;
using namespace cfwave::spectral;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("alpha basics") {
    CHECK(alpha(3, 0.0) == 0.0);
    CHECK(alpha(1, kPi) == doctest::Approx(-kPi / 2).epsilon(1e-14));
    for (int L : {1, 2, 5}) CHECK(std::abs(std::abs(alpha(L, 2.0 * kPi)) - kPi) < 1e-9);
    // odd, bounded by pi
    for (int L : {1, 4})
        for (double w : {0.3, 1.7, 5.0, 11.0}) {
            CHECK(alpha(L, -w) == doctest::Approx(-alpha(L, w)).epsilon(1e-15));
            CHECK(std::abs(alpha(L, w)) <= kPi);
        }
}

TEST_CASE("exp(i alpha) is 4pi periodic and continuous across the jumps") {
    for (int L : {1, 2, 4})
        for (int k = 0; k < 257; ++k) {
            const double w = -6.0 * kPi + 12.0 * kPi * k / 256.0;
            const std::complex<double> a = std::polar(1.0, alpha(L, w));
            const std::complex<double> b = std::polar(1.0, alpha(L, w + 4.0 * kPi));
            CHECK(std::abs(a - b) <= 2e-12);
        }
    // jump height 2pi at 2pi + 4piZ
    for (int L : {1, 3}) {
        const double eps = 1e-8;
        const double jump = std::abs(alpha(L, 2.0 * kPi - eps) - alpha(L, 2.0 * kPi + eps));
        CHECK(jump == doctest::Approx(2.0 * kPi).epsilon(1e-9));
    }
}

TEST_CASE("beta partial sums and tail control") {
    CHECK(beta(2, 0.0, 10).value == 0.0);
    for (double w : {0.7, 3.1, 20.0})
        CHECK(beta(1, -w, 30).value == doctest::Approx(-beta(1, w, 30).value).epsilon(1e-15));

    const auto b40 = beta(1, kPi, 40);
    const auto b60 = beta(1, kPi, 60);
    CHECK(b40.tail_bound < 1e-12);
    CHECK(std::abs(b40.value - b60.value) <= 1e-12);
}

TEST_CASE("eta at the origin") {
    // eta(0) = -alpha(pi), so |1 - e^{i eta}| = sqrt(2) for every L
    for (int L : {1, 2, 8, 16}) {
        const double v = std::abs(1.0 - std::polar(1.0, eta(L, 0.0, 40)));
        CHECK(v == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    }
}

TEST_CASE("u_L and its bound") {
    for (int L : {1, 2, 16})
        for (double w : {-15.0, -4.0 * kPi, -0.9, 0.0, 0.4, 2.0 * kPi, 40.0})
            CHECK(u_L(L, w, 40) <= 2.0 + 1e-12);

    CHECK(u_L(16, -kPi, 60) <= 1e-3);

    // frozen spot value of the bound
    CHECK(u_L_bound(4, 2.0 * kPi) == doctest::Approx(0.011049).epsilon(1e-4));
    CHECK(std::abs(u_L_bound(4, 2.0 * kPi) - 4.0 * std::sqrt(2.0) / 512.0) < 1e-15);
    CHECK(u_L_bound(3, 0.0) == doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-12));
    // strictly decreasing in L away from 4piZ
    for (int L = 1; L < 12; ++L)
        CHECK(u_L_bound(L + 1, 5.0) < u_L_bound(L, 5.0));

    // domination on a subsampled grid (the acceptance suite runs the full one)
    for (int L : {1, 4, 16})
        for (int i = 0; i <= 2000; ++i) {
            const double w = -16.0 * kPi + 32.0 * kPi * i / 2000.0;
            const double k = std::round(w / (4.0 * kPi));
            if (std::abs(w - 4.0 * kPi * k) <= 0.1) continue;
            CHECK(u_L(L, w, 40) <= u_L_bound(L, w) + 1e-9);
        }
}

TEST_CASE("ratio identity ties the all-pass factor to alpha") {
    for (int L : {1, 2, 5})
        for (int k = 0; k < 4096; ++k) {
            const double w = -2.0 * kPi + 4.0 * kPi * k / 4096.0;
            const std::complex<double> lhs = thiran_ratio_phase(L, w);
            const std::complex<double> rhs = std::polar(1.0, -w / 2.0 + alpha(L, w));
            CHECK(std::abs(lhs - rhs) <= 1e-11);
        }
}

TEST_CASE("cascade fixed points and truncation guard") {
    const auto d = design_bank(2, 2, PhaseChoice::AllInsideUnitCircle);
    const SpectrumGrid g = cascade_spectra(d.bank, 4.0 * kPi, 257, 20);
    const std::size_t mid = 128;
    CHECK(g.omega[mid] == 0.0);
    CHECK(std::abs(g.phi_h[mid] - 1.0) <= 1e-8);
    CHECK(std::abs(g.psi_h[mid]) <= 1e-12);
    CHECK(std::abs(g.phi_g[mid] - 1.0) <= 1e-8);

    CHECK_THROWS_AS(cascade_spectra(d.bank, 40.0 * kPi, 257, 5), TruncationTooShallow);
    CHECK_THROWS_AS(cascade_spectra(d.bank, kPi, 256, 20), Error);
}

TEST_CASE("cascade self-convergence in modulus") {
    const auto d = design_bank(2, 2, PhaseChoice::AllInsideUnitCircle);
    const SpectrumGrid a = cascade_spectra(d.bank, 16.0 * kPi, 2049, 25);
    const SpectrumGrid b = cascade_spectra(d.bank, 16.0 * kPi, 2049, 30);
    double worst = 0;
    for (std::size_t i = 0; i < a.omega.size(); ++i) {
        worst = std::max(worst, std::abs(std::abs(a.phi_h[i]) - std::abs(b.phi_h[i])));
        worst = std::max(worst, std::abs(std::abs(a.psi_h[i]) - std::abs(b.psi_h[i])));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("branch phase relations on the grid") {
    const auto d = design_bank(2, 2, PhaseChoice::AllInsideUnitCircle);
    const SpectrumGrid g = cascade_spectra(d.bank, 16.0 * kPi, 4097, 31);
    const auto [dphi, dpsi] = verify_phase_relations(g, 2, 60);
    CHECK(dphi <= 1e-7);
    CHECK(dpsi <= 1e-7);

    double worst_mag = 0, worst_uid = 0;
    for (std::size_t i = 0; i < g.omega.size(); ++i) {
        worst_mag = std::max(worst_mag, std::abs(std::abs(g.psi_g[i]) - std::abs(g.psi_h[i])));
        // |psi_h + i psi_g| = |1 - e^{i eta}| |psi_h|
        const double lhs = std::abs(g.psi_h[i] + std::complex<double>(0, 1) * g.psi_g[i]);
        const double rhs =
            std::abs(1.0 - std::polar(1.0, eta(2, g.omega[i], 60))) * std::abs(g.psi_h[i]);
        worst_uid = std::max(worst_uid, std::abs(lhs - rhs));
    }
    CHECK(worst_mag <= 1e-8);
    CHECK(worst_uid <= 1e-8);
}

TEST_CASE("leakage measures") {
    // hand-built perfectly analytic grid
    SpectrumGrid g;
    const int N = 101;
    for (int i = 0; i < N; ++i) {
        const double w = -10.0 + 20.0 * i / (N - 1);
        g.omega.push_back(w);
        const std::complex<double> v = w > 0 ? std::complex<double>(0.4, 0.1) : 0.0;
        g.psi_h.push_back(v);
        g.psi_g.push_back(std::complex<double>(0, -1) * v);  // psi_h + i psi_g = 2 psi_h on w>0
        g.phi_h.push_back(0.0);
        g.phi_g.push_back(0.0);
    }
    // zero the negative side completely: psi_h = psi_g = 0 there already
    const auto [e1, e2] = leakage_measures(g);
    CHECK(e1 == 0.0);
    CHECK(e2 == 0.0);

    // designed banks leak a little, within (0,1), decreasing with L
    double prev_e1 = 1.0, prev_e2 = 1.0;
    for (int L : {1, 2, 3}) {
        const auto d = design_bank(L, 3, PhaseChoice::AllInsideUnitCircle);
        const SpectrumGrid gg = cascade_spectra(d.bank, 16.0 * kPi, 4097, 28);
        const auto [a, b] = leakage_measures(gg);
        CHECK(a > 0.0);
        CHECK(a < 1.0);
        CHECK(b > 0.0);
        CHECK(b < 1.0);
        CHECK(a < prev_e1);
        CHECK(b < prev_e2);
        prev_e1 = a;
        prev_e2 = b;
    }
}

TEST_CASE("parseval normalization of the cascade") {
    for (int LM : {2, 3, 4}) {
        const auto d = design_bank(LM, LM, PhaseChoice::AllInsideUnitCircle);
        const SpectrumGrid g = cascade_spectra(d.bank, 16.0 * kPi, 8193, 28);
        std::vector<double> sq(g.omega.size());
        for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = std::norm(g.psi_h[i]);
        const double step = g.omega[1] - g.omega[0];
        const double mass = pairwise_sum(sq) * step / (2.0 * kPi);
        CHECK(mass == doctest::Approx(1.0).epsilon(0.02));
    }
}

TEST_CASE("pairwise sum is deterministic and accurate") {
    std::vector<double> v(1000);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1.0 / double(i + 1);
    const double a = pairwise_sum(v);
    const double b = pairwise_sum(v);
    CHECK(a == b);
    long double ref = 0;
    for (double x : v) ref += (long double)(x);
    CHECK(std::abs(a - double(ref)) < 1e-12);
}

TEST_CASE("spectral radius of small references") {
    using cfwave::spectral::detail::spectral_radius_qr;
    CHECK(spectral_radius_qr({{2, 1}, {0, -3}}) == doctest::Approx(3.0).epsilon(1e-12));
    // rotation by 90 degrees: eigenvalues +-i
    CHECK(spectral_radius_qr({{0, -1}, {1, 0}}) == doctest::Approx(1.0).epsilon(1e-12));
    // companion of (x-1)(x-2)(x-3)
    CHECK(spectral_radius_qr({{6, -11, 6}, {1, 0, 0}, {0, 1, 0}}) ==
          doctest::Approx(3.0).epsilon(1e-10));
    // defective block
    CHECK(spectral_radius_qr({{1, 1}, {0, 1}}) == doctest::Approx(1.0).epsilon(1e-7));
    // 4x4 with complex pair of modulus sqrt(5) plus reals
    CHECK(spectral_radius_qr({{1, -2, 0, 0}, {2, 1, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, 0.5}}) ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-10));
    // companion of (x^2+1)(x^2+4)(x-3): two interior complex pairs
    CHECK(spectral_radius_qr({{3, -5, 15, -4, 12},
                              {1, 0, 0, 0, 0},
                              {0, 1, 0, 0, 0},
                              {0, 0, 1, 0, 0},
                              {0, 0, 0, 1, 0}}) == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("sobolev exponents against the published table") {
    struct Cell {
        int M, L;
        double want;
    };
    for (const Cell c : {Cell{1, 1, 0.60}, Cell{2, 2, 1.23}, Cell{4, 4, 2.16}}) {
        const auto d = design_bank(c.L, c.M, PhaseChoice::AllInsideUnitCircle);
        CHECK(sobolev_exponent(d.bank) == doctest::Approx(c.want).epsilon(0.05 / c.want));
    }
    // phase choice does not move the exponent
    const auto mid = design_bank(2, 3, PhaseChoice::AllInsideUnitCircle);
    const auto mn = design_bank(2, 3, PhaseChoice::AlternatingPairs);
    CHECK(sobolev_exponent(mid.bank) == doctest::Approx(sobolev_exponent(mn.bank)).epsilon(1e-9));
}

TEST_CASE("slope fitting") {
    std::vector<double> x, y;
    for (int i = 1; i <= 20; ++i) {
        x.push_back(0.001 * i);
        y.push_back(3.7 * std::pow(0.001 * i, 2.5));
    }
    CHECK(fit_loglog_slope(x, y) == doctest::Approx(2.5).epsilon(1e-12));
}
