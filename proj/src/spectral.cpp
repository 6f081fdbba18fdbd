#include "cfwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cfwave/errors.hpp"
#include "cfwave/thiran.hpp"

namespace cfwave {
namespace spectral {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoSqrt2 = 2.8284271247461903;
}  // namespace

double alpha(int L, double omega) {
    const double t = std::tan(omega / 4.0);
    const double mag = std::pow(std::abs(t), double(2 * L + 1));  // inf is fine
    double v = 2.0 * std::atan(mag);
    if (t < 0.0) v = -v;
    return (L & 1) ? -v : v;
}

BetaResult beta(int L, double omega, int terms) {
    if (terms < 1) throw Error("beta needs terms >= 1");
    double sum = 0.0;
    double w = omega;
    for (int j = 1; j <= terms; ++j) {
        w *= 0.5;
        sum += alpha(L, w);
    }
    double tail = std::numeric_limits<double>::infinity();
    if (std::abs(omega) * std::ldexp(1.0, -terms) < kPi) {
        const double t = std::tan(std::ldexp(omega, -terms - 1) / 4.0);
        tail = 4.0 * std::pow(std::abs(t), double(2 * L + 1));
    }
    return {sum, tail};
}

double eta(int L, double omega, int terms) {
    return -alpha(L, omega / 2.0 + kPi) + beta(L, omega / 2.0, terms).value;
}

double u_L(int L, double omega, int terms) {
    const double e = eta(L, omega, terms);
    const std::complex<double> v = 1.0 - std::polar(1.0, e) - (omega > 0.0 ? 2.0 : 0.0);
    return std::abs(v);
}

double u_L_bound(int L, double omega) {
    const double mx = std::max(4.0 * kPi, std::abs(omega));
    const double k = std::round(omega / (4.0 * kPi));
    const double delta = std::abs(omega - 4.0 * kPi * k);
    const double base = 1.0 - delta / mx;
    return kTwoSqrt2 * (std::log2(mx / (4.0 * kPi)) + 2.0) * std::pow(base, double(2 * L + 1));
}

SpectrumGrid cascade_spectra(const FilterBank& bank, double Omega, int N, int J) {
    if (N < 3 || N % 2 == 0) throw Error("cascade grid size must be odd and >= 3");
    if (J < 1) throw Error("cascade depth must be >= 1");
    if (Omega > std::ldexp(1.0, J) * kPi)
        throw TruncationTooShallow("Omega exceeds 2^J pi; deepen the cascade");
    SpectrumGrid g;
    g.cascade_depth = J;
    g.omega.resize(std::size_t(N));
    g.phi_h.resize(std::size_t(N));
    g.psi_h.resize(std::size_t(N));
    g.phi_g.resize(std::size_t(N));
    g.psi_g.resize(std::size_t(N));
    const double step = 2.0 * Omega / double(N - 1);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < N; ++i) {
        const double w = -Omega + step * i;
        g.omega[std::size_t(i)] = w;
        for (int branch = 0; branch < 2; ++branch) {
            const LaurentFilter& lo = branch == 0 ? bank.h0 : bank.g0;
            const LaurentFilter& hi = branch == 0 ? bank.h1 : bank.g1;
            std::complex<double> half = 1.0;
            for (int j = 2; j <= J; ++j)
                half *= inv_sqrt2 * laurent_eval(lo, std::polar(1.0, std::ldexp(w, -j)));
            const std::complex<double> zh = std::polar(1.0, w / 2.0);
            const std::complex<double> psi = inv_sqrt2 * laurent_eval(hi, zh) * half;
            const std::complex<double> phi = inv_sqrt2 * laurent_eval(lo, zh) * half;
            if (branch == 0) {
                g.phi_h[std::size_t(i)] = phi;
                g.psi_h[std::size_t(i)] = psi;
            } else {
                g.phi_g[std::size_t(i)] = phi;
                g.psi_g[std::size_t(i)] = psi;
            }
        }
    }
    return g;
}

std::pair<double, double> verify_phase_relations(const SpectrumGrid& grid, int L, int terms) {
    double worst_phi = 0.0, worst_psi = 0.0;
    for (std::size_t i = 0; i < grid.omega.size(); ++i) {
        const double w = grid.omega[i];
        const std::complex<double> phi_ref =
            std::polar(1.0, beta(L, w, terms).value - w / 2.0) * grid.phi_h[i];
        worst_phi = std::max(worst_phi, std::abs(grid.phi_g[i] - phi_ref));
        const std::complex<double> psi_ref =
            std::complex<double>(0.0, 1.0) * std::polar(1.0, eta(L, w, terms)) * grid.psi_h[i];
        worst_psi = std::max(worst_psi, std::abs(grid.psi_g[i] - psi_ref));
    }
    return {worst_phi, worst_psi};
}

double pairwise_sum(const std::vector<double>& v) {
    // fixed association: recursive halving, left block first
    struct Rec {
        static double go(const double* p, std::size_t n) {
            if (n <= 8) {
                double s = 0.0;
                for (std::size_t i = 0; i < n; ++i) s += p[i];
                return s;
            }
            const std::size_t h = n / 2;
            return go(p, h) + go(p + h, n - h);
        }
    };
    return v.empty() ? 0.0 : Rec::go(v.data(), v.size());
}

std::pair<double, double> leakage_measures(const SpectrumGrid& grid) {
    double peak_neg = 0.0, peak_pos = 0.0;
    std::vector<double> e_neg, e_pos;
    e_neg.reserve(grid.omega.size());
    e_pos.reserve(grid.omega.size());
    for (std::size_t i = 0; i < grid.omega.size(); ++i) {
        const double w = grid.omega[i];
        if (w == 0.0) continue;
        const std::complex<double> c =
            grid.psi_h[i] + std::complex<double>(0.0, 1.0) * grid.psi_g[i];
        const double m = std::abs(c);
        if (w < 0.0) {
            peak_neg = std::max(peak_neg, m);
            e_neg.push_back(m * m);
        } else {
            peak_pos = std::max(peak_pos, m);
            e_pos.push_back(m * m);
        }
    }
    if (peak_pos == 0.0) throw Error("leakage_measures: empty positive-frequency spectrum");
    return {peak_neg / peak_pos, pairwise_sum(e_neg) / pairwise_sum(e_pos)};
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw Error("fit_loglog_slope needs >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace detail {

// Spectral radius via Hessenberg reduction + shifted QR with 2x2 deflation.
double spectral_radius_qr(std::vector<std::vector<double>> a) {
    const int n = int(a.size());
    if (n == 0) throw EigenFailure("empty matrix");
    if (n == 1) return std::abs(a[0][0]);

    // Householder reduction to upper Hessenberg
    for (int col = 0; col < n - 2; ++col) {
        double norm = 0.0;
        for (int i = col + 1; i < n; ++i) norm = std::hypot(norm, a[i][col]);
        if (norm == 0.0) continue;
        if (a[col + 1][col] > 0) norm = -norm;
        std::vector<double> v(std::size_t(n), 0.0);
        v[std::size_t(col + 1)] = a[col + 1][col] - norm;
        for (int i = col + 2; i < n; ++i) v[std::size_t(i)] = a[i][col];
        double vtv = 0.0;
        for (int i = col + 1; i < n; ++i) vtv += v[std::size_t(i)] * v[std::size_t(i)];
        if (vtv == 0.0) continue;
        // A <- (I - 2vv^T/v^Tv) A (I - 2vv^T/v^Tv)
        for (int j = 0; j < n; ++j) {
            double dot = 0.0;
            for (int i = col + 1; i < n; ++i) dot += v[std::size_t(i)] * a[i][j];
            dot = 2.0 * dot / vtv;
            for (int i = col + 1; i < n; ++i) a[i][j] -= dot * v[std::size_t(i)];
        }
        for (int i = 0; i < n; ++i) {
            double dot = 0.0;
            for (int j = col + 1; j < n; ++j) dot += a[i][j] * v[std::size_t(j)];
            dot = 2.0 * dot / vtv;
            for (int j = col + 1; j < n; ++j) a[i][j] -= dot * v[std::size_t(j)];
        }
    }

    double radius = 0.0;
    int hi = n - 1;
    int its = 0;
    auto two_by_two_radius = [](double p, double q, double r, double s) {
        const double tr = p + s, det = p * s - q * r;
        const double disc = tr * tr / 4.0 - det;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            return std::max(std::abs(tr / 2.0 + sq), std::abs(tr / 2.0 - sq));
        }
        return std::sqrt(std::max(det, 0.0));  // complex pair, modulus sqrt(det)
    };
    while (hi >= 0) {
        if (hi == 0) {
            radius = std::max(radius, std::abs(a[0][0]));
            break;
        }
        // deflate at the first negligible subdiagonal above hi
        int lo = hi;
        while (lo > 0 && std::abs(a[lo][lo - 1]) >
                             1e-15 * (std::abs(a[lo][lo]) + std::abs(a[lo - 1][lo - 1]) + 1e-300))
            --lo;
        if (lo == hi) {
            radius = std::max(radius, std::abs(a[hi][hi]));
            --hi;
            its = 0;
            continue;
        }
        if (lo == hi - 1) {
            radius = std::max(radius,
                              two_by_two_radius(a[hi - 1][hi - 1], a[hi - 1][hi], a[hi][hi - 1],
                                                a[hi][hi]));
            hi -= 2;
            its = 0;
            continue;
        }
        if (++its > 60) throw EigenFailure("QR iteration stalled");

        // Francis double-shift bulge chase on the active block [lo..hi]
        double s = a[hi - 1][hi - 1] + a[hi][hi];
        double t = a[hi - 1][hi - 1] * a[hi][hi] - a[hi - 1][hi] * a[hi][hi - 1];
        if (its % 10 == 0) {
            // exceptional shifts after stalling
            const double w = std::abs(a[hi][hi - 1]) + std::abs(a[hi - 1][hi - 2]);
            s = 1.5 * w;
            t = w * w;
        }
        double x = a[lo][lo] * a[lo][lo] + a[lo][lo + 1] * a[lo + 1][lo] - s * a[lo][lo] + t;
        double y = a[lo + 1][lo] * (a[lo][lo] + a[lo + 1][lo + 1] - s);
        double z = a[lo + 1][lo] * a[lo + 2][lo + 1];
        for (int k = lo; k <= hi - 1; ++k) {
            // Householder annihilating (y, z) into x; 2-vector on the last step
            const bool three = k <= hi - 2;
            double vx = x, vy = y, vz = three ? z : 0.0;
            const double alpha = std::hypot(vx, std::hypot(vy, vz));
            if (alpha != 0.0) {
                const double sign = vx >= 0.0 ? 1.0 : -1.0;
                vx += sign * alpha;
                const double vn2 = vx * vx + vy * vy + vz * vz;
                if (vn2 > 0.0) {
                    // rows k..k+2, columns from k-1 (bulge) to hi
                    const int c0 = std::max(lo, k - 1);
                    for (int j = c0; j <= hi; ++j) {
                        double dot = vx * a[k][j] + vy * a[k + 1][j];
                        if (three) dot += vz * a[k + 2][j];
                        dot *= 2.0 / vn2;
                        a[k][j] -= dot * vx;
                        a[k + 1][j] -= dot * vy;
                        if (three) a[k + 2][j] -= dot * vz;
                    }
                    // columns k..k+2, rows lo..min(hi, k+3)
                    const int r1 = std::min(hi, k + 3);
                    for (int i = lo; i <= r1; ++i) {
                        double dot = vx * a[i][k] + vy * a[i][k + 1];
                        if (three) dot += vz * a[i][k + 2];
                        dot *= 2.0 / vn2;
                        a[i][k] -= dot * vx;
                        a[i][k + 1] -= dot * vy;
                        if (three) a[i][k + 2] -= dot * vz;
                    }
                }
            }
            if (k < hi - 1) {
                x = a[k + 1][k];
                y = a[k + 2][k];
                z = k + 3 <= hi ? a[k + 3][k] : 0.0;
            }
        }
        // restore exact Hessenberg zeros below the bulge path
        for (int i = lo + 2; i <= hi; ++i)
            for (int j = lo; j <= i - 2; ++j) a[i][j] = 0.0;
    }
    return radius;
}

}  // namespace detail

double sobolev_exponent(const FilterBank& bank) {
    if (bank.M < 1) throw Error("sobolev_exponent needs M >= 1 vanishing moments");
    // H0 = sqrt2 ((1+z^-1)/2)^M B  =>  B = Q D 2^M / sqrt2
    const LaurentFilter d = thiran_coeffs(bank.L).filter;
    const LaurentFilter q(0, bank.q_poly.coeffs());
    const LaurentFilter bf = laurent_scale(laurent_mul(q, d), std::ldexp(1.0, bank.M) / std::sqrt(2.0));
    const std::vector<double>& b = bf.coeffs();
    const int K = int(b.size()) - 1;

    // Fourier coefficients of |B|^2: autocorrelation of b
    std::vector<double> p(std::size_t(2 * K + 1), 0.0);
    for (int k = -K; k <= K; ++k) {
        double s = 0.0;
        for (int i = std::max(0, -k); i <= std::min(K, K - k); ++i) s += b[std::size_t(i)] * b[std::size_t(i + k)];
        p[std::size_t(k + K)] = s;
    }
    auto pc = [&](int lag) { return std::abs(lag) <= K ? p[std::size_t(lag + K)] : 0.0; };

    // transition matrix on coefficients of trig polys of degree <= K
    const int n = 2 * K + 1;
    std::vector<std::vector<double>> t(std::size_t(n), std::vector<double>(std::size_t(n), 0.0));
    for (int j = -K; j <= K; ++j)
        for (int k = -K; k <= K; ++k) t[std::size_t(j + K)][std::size_t(k + K)] = 2.0 * pc(2 * j - k);

    // power iteration on the even-symmetric invariant subspace (p symmetric);
    // vectors v_0..v_K stand for V_j = v_|j|
    const int ne = K + 1;
    std::vector<std::vector<double>> ae(std::size_t(ne), std::vector<double>(std::size_t(ne), 0.0));
    for (int j = 0; j < ne; ++j) {
        ae[std::size_t(j)][0] = 2.0 * pc(2 * j);
        for (int k = 1; k < ne; ++k)
            ae[std::size_t(j)][std::size_t(k)] = 2.0 * (pc(2 * j - k) + pc(2 * j + k));
    }
    std::vector<double> v(static_cast<std::size_t>(ne));
    for (int i = 0; i < ne; ++i) v[std::size_t(i)] = 1.0 / double(i + 1);
    double lambda = 0.0;
    bool converged = false;
    for (int it = 0; it < 1000 && !converged; ++it) {
        std::vector<double> w(std::size_t(ne), 0.0);
        for (int i = 0; i < ne; ++i)
            for (int j = 0; j < ne; ++j) w[std::size_t(i)] += ae[std::size_t(i)][std::size_t(j)] * v[std::size_t(j)];
        double num = 0.0, den = 0.0, norm = 0.0;
        for (int i = 0; i < ne; ++i) {
            num += w[std::size_t(i)] * v[std::size_t(i)];
            den += v[std::size_t(i)] * v[std::size_t(i)];
            norm = std::max(norm, std::abs(w[std::size_t(i)]));
        }
        if (norm == 0.0) break;
        const double rayleigh = num / den;
        if (it > 2 && std::abs(rayleigh - lambda) <= 1e-10 * (1.0 + std::abs(rayleigh))) converged = true;
        lambda = rayleigh;
        for (int i = 0; i < ne; ++i) v[std::size_t(i)] = w[std::size_t(i)] / norm;
    }

    // dense cross-check; authoritative when the subspace iteration missed
    const double rho_qr = detail::spectral_radius_qr(t);
    double rho = std::abs(lambda);
    if (!converged || std::abs(rho - rho_qr) > 1e-6 * (1.0 + rho_qr)) rho = rho_qr;
    if (!(rho > 0.0)) throw EigenFailure("transition matrix spectral radius not positive");
    return bank.M - std::log2(rho) / 2.0;
}

AnalyticityReport analyze(const FilterBank& bank, double Omega, int N, int J, int terms) {
    AnalyticityReport rep;
    const SpectrumGrid grid = cascade_spectra(bank, Omega, N, J);
    auto [e1, e2] = leakage_measures(grid);
    rep.e1 = e1;
    rep.e2 = e2;
    rep.ul_max_on_grid = 0.0;
    rep.bound_violations = 0;
    for (double w : grid.omega) {
        const double u = u_L(bank.L, w, terms);
        rep.ul_max_on_grid = std::max(rep.ul_max_on_grid, u);
        const double k = std::round(w / (4.0 * kPi));
        if (std::abs(w - 4.0 * kPi * k) <= 0.1) continue;  // bound vacuous near 4piZ
        if (u > u_L_bound(bank.L, w) + 1e-9) ++rep.bound_violations;
    }
    rep.hilbert_slope = hilbert_order_check(bank);
    rep.sobolev_exponent = sobolev_exponent(bank);
    return rep;
}

}  // namespace spectral
}  // namespace cfwave
