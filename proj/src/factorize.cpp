#include "cfwave/factorize.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "cfwave/errors.hpp"
#include "cfwave/roots.hpp"
#include "cfwave/spectral.hpp"
#include "cfwave/thiran.hpp"

namespace cfwave {

namespace {

using CLD = std::complex<long double>;

constexpr long double kPi = 3.14159265358979323846264338327950288L;

// the exact binomial ratio recomputed in long double rather than promoting
// the double coefficients
detail::ExtPoly ext_thiran(int L) {
    detail::ExtPoly d(std::size_t(L) + 1);
    for (int ell = 0; ell <= L; ++ell)
        d[std::size_t(ell)] =
            detail::binomial_ld(2 * L + 1, 2 * (L - ell)) / (long double)(2 * L + 1);
    return d;
}

// nonnegativity of r on [0,1]: 4097-point grid plus the real critical points;
// touching zero (endpoint factorizations like r = y) is admissible, a genuine
// sign change is reported, never repaired
void check_nonnegative(const detail::ExtPoly& r) {
    long double min_v = 0.0L, min_y = 0.0L, scale = 0.0L;
    bool have = false;
    for (long double c : r) scale = std::max(scale, std::abs(c));
    auto consider = [&](long double y) {
        long double v = detail::ext_eval(r, y);
        if (!have || v < min_v) {
            min_v = v;
            min_y = y;
            have = true;
        }
    };
    for (int i = 0; i <= 4096; ++i) consider((long double)(i) / 4096.0L);
    if (r.size() > 2) {
        detail::ExtPoly dr(r.size() - 1);
        for (std::size_t i = 1; i < r.size(); ++i) dr[i - 1] = (long double)(i)*r[i];
        detail::ext_trim(dr);
        if (dr.size() >= 2) {
            try {
                for (const auto& z : detail::aberth_roots(dr, 1e-9L)) {
                    if (std::abs(z.imag()) < 1e-9L && z.real() > 0.0L && z.real() < 1.0L)
                        consider(z.real());
                }
            } catch (const NonConvergence&) {
                // critical points are only a refinement of the dense grid probe
            }
        }
    }
    if (min_v < -1e-12L * scale)
        throw NotNonnegative("r dips to " + std::to_string(double(min_v)) + " at y = " +
                                 std::to_string(double(min_y)) + "; no minimal-degree factorization",
                             double(min_y), double(min_v));
}

struct RootGroup {
    std::vector<CLD> inside;   // |z| < 1 members
    std::vector<CLD> outside;  // reciprocal mates
    long double arg_key = 0.0L;
};

}  // namespace

const char* phase_label(PhaseChoice p) {
    return p == PhaseChoice::AllInsideUnitCircle ? "mid" : "min";
}

PhaseChoice phase_from_label(const std::string& s) {
    if (s == "mid") return PhaseChoice::AllInsideUnitCircle;
    if (s == "min") return PhaseChoice::AlternatingPairs;
    throw ParseError("unknown phase label '" + s + "' (expected mid or min)");
}

LaurentFilter lift_to_circle(const RealPoly& r) {
    // Horner in the symmetric kernel (2+z+1/z)/4
    const LaurentFilter kernel(-1, {0.25, 0.5, 0.25});
    LaurentFilter acc;
    for (auto it = r.coeffs().rbegin(); it != r.coeffs().rend(); ++it)
        acc = laurent_add(laurent_mul(acc, kernel), LaurentFilter(0, {*it}));
    return acc;
}

namespace detail {

ExtPoly riesz_factor_ext(const ExtPoly& r_in, PhaseChoice phase) {
    ExtPoly r = r_in;
    ext_trim(r);
    if (r.empty()) throw Error("riesz_factor on the zero polynomial");
    check_nonnegative(r);
    const std::size_t n = r.size() - 1;

    if (n == 0) return ExtPoly{std::sqrt(r[0])};

    // y-roots, then one reciprocal z-pair per root
    auto yroots = aberth_roots(r, 1e-15L);
    struct Pair {
        CLD in, out;
        CLD y;
    };
    std::vector<Pair> pairs;
    for (const CLD& y : yroots) {
        CLD b = 4.0L * y - 2.0L;
        CLD disc = std::sqrt(b * b - 4.0L);
        CLD z1 = (b + disc) / 2.0L, z2 = (b - disc) / 2.0L;
        if (std::abs(z1 * z2 - CLD(1.0L)) > 1e-6L)
            throw ConjugatePairingFailure("reciprocal z-pair product off unity");
        if (std::abs(z1) > std::abs(z2)) std::swap(z1, z2);
        if (std::abs(std::abs(z1) - 1.0L) < 1e-9L && std::abs(z1 - z2) < 1e-6L) {
            // boundary zero of r (y = 0 or 1): double z-root on the circle,
            // one copy goes into Q
            CLD w = (z1 + z2) / 2.0L;
            w /= std::abs(w);
            pairs.push_back({w, w, y});
            continue;
        }
        if (std::abs(z1) >= 1.0L)
            throw ConjugatePairingFailure("z-root pair pinned to the unit circle");
        pairs.push_back({z1, z2, y});
    }

    // conjugate groups: real y alone, complex y with its mate
    std::vector<RootGroup> groups;
    std::vector<bool> used(pairs.size(), false);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (used[i]) continue;
        RootGroup g;
        g.inside.push_back(pairs[i].in);
        g.outside.push_back(pairs[i].out);
        g.arg_key = std::abs(std::arg(pairs[i].in));
        used[i] = true;
        if (std::abs(pairs[i].y.imag()) > 1e-12L * (1.0L + std::abs(pairs[i].y))) {
            std::size_t best = pairs.size();
            long double best_d = 0.0L;
            for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                if (used[j]) continue;
                long double d = std::abs(pairs[j].y - std::conj(pairs[i].y));
                if (best == pairs.size() || d < best_d) {
                    best = j;
                    best_d = d;
                }
            }
            if (best == pairs.size())
                throw ConjugatePairingFailure("complex y-root without a conjugate mate");
            g.inside.push_back(pairs[best].in);
            g.outside.push_back(pairs[best].out);
            used[best] = true;
        }
        groups.push_back(std::move(g));
    }
    std::sort(groups.begin(), groups.end(), [](const RootGroup& a, const RootGroup& b) {
        return a.arg_key != b.arg_key ? a.arg_key < b.arg_key
                                      : std::abs(a.inside[0]) < std::abs(b.inside[0]);
    });

    std::vector<CLD> chosen;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const bool take_inside =
            phase == PhaseChoice::AllInsideUnitCircle ? true : (gi % 2 == 0);
        const auto& sel = take_inside ? groups[gi].inside : groups[gi].outside;
        chosen.insert(chosen.end(), sel.begin(), sel.end());
    }

    // conjugate closure of the selected multiset
    for (auto& z : chosen)
        if (std::abs(z.imag()) <= 1e-12L * (1.0L + std::abs(z))) z = {z.real(), 0.0L};
    std::vector<bool> paired(chosen.size(), false);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (paired[i] || chosen[i].imag() == 0.0L) continue;
        std::size_t best = chosen.size();
        long double best_d = 0.0L;
        for (std::size_t j = 0; j < chosen.size(); ++j) {
            if (j == i || paired[j] || chosen[j].imag() == 0.0L) continue;
            if ((chosen[j].imag() > 0) == (chosen[i].imag() > 0)) continue;
            long double d = std::abs(chosen[j] - std::conj(chosen[i]));
            if (best == chosen.size() || d < best_d) {
                best = j;
                best_d = d;
            }
        }
        if (best == chosen.size())
            throw ConjugatePairingFailure("selected roots are not conjugate-closed");
        CLD avg = (chosen[i] + std::conj(chosen[best])) / 2.0L;
        chosen[i] = avg;
        chosen[best] = std::conj(avg);
        paired[i] = paired[best] = true;
    }

    // gamma^2 = lead * 4^{-n} / prod(-w); real and positive for admissible r
    CLD prod = 1.0L;
    for (const CLD& w : chosen) prod *= -w;
    CLD g2 = std::ldexp(r[n], -2 * int(n)) / prod;
    if (std::abs(g2.imag()) > 1e-9L * std::abs(g2) || g2.real() <= 0.0L)
        throw ConjugatePairingFailure("factorization scale is not a positive real");
    const long double gamma = std::sqrt(g2.real());

    std::vector<CLD> qc{CLD(gamma)};
    for (const CLD& w : chosen) {
        std::vector<CLD> next(qc.size() + 1, CLD(0.0L));
        for (std::size_t i = 0; i < qc.size(); ++i) {
            next[i] += qc[i];
            next[i + 1] -= qc[i] * w;
        }
        qc = std::move(next);
    }
    ExtPoly q(qc.size());
    long double worst_imag = 0.0L, scale = 0.0L;
    for (std::size_t i = 0; i < qc.size(); ++i) {
        q[i] = qc[i].real();
        worst_imag = std::max(worst_imag, std::abs(qc[i].imag()));
        scale = std::max(scale, std::abs(qc[i].real()));
    }
    if (worst_imag > 1e-9L * scale)
        throw ConjugatePairingFailure("expanded Q has a non-real coefficient");
    return q;
}

FilterBank assemble_bank_ext(int L, int M, const ExtPoly& q_in, PhaseChoice phase) {
    if (L < 1 || M < 0) throw InvalidOrder("assemble_bank needs L >= 1, M >= 0");
    ExtPoly q = q_in;
    // F = Q (1+1/z)^M, then fold the normalization F(1) = sqrt2 (2L+1) 2^{-2L}
    ExtPoly f = q;
    for (int i = 0; i < M; ++i) f = ext_mul(f, {1.0L, 1.0L});
    long double f1 = 0.0L;
    for (long double c : f) f1 += c;
    const long double target = std::sqrt(2.0L) * (long double)(2 * L + 1) * std::ldexp(1.0L, -2 * L);
    if (f1 == 0.0L) throw Error("assemble_bank: F(1) = 0");
    const long double scale = target / f1;
    for (auto& c : q) c *= scale;
    for (auto& c : f) c *= scale;

    const ExtPoly d = ext_thiran(L);
    const ExtPoly drev(d.rbegin(), d.rend());  // z^{-L} D_L(1/z), causal
    const ExtPoly h0e = ext_mul(f, d);
    const ExtPoly g0e = ext_mul(f, drev);

    auto to_filter = [](const ExtPoly& p) {
        std::vector<double> c(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) c[i] = double(p[i]);
        return LaurentFilter(0, std::move(c));
    };
    FilterBank bank;
    bank.L = L;
    bank.M = M;
    bank.phase = phase;
    bank.h0 = to_filter(h0e);
    bank.g0 = to_filter(g0e);
    bank.h1 = highpass_mate(bank.h0);
    bank.g1 = highpass_mate(bank.g0);
    bank.q_poly = ext_to_poly(q);
    return bank;
}

}  // namespace detail

LaurentFilter riesz_factor(const RealPoly& r, PhaseChoice phase) {
    auto q = detail::riesz_factor_ext(detail::ext_from_poly(r), phase);
    std::vector<double> c(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) c[i] = double(q[i]);
    return LaurentFilter(0, std::move(c));
}

FilterBank assemble_bank(int L, int M, const LaurentFilter& q, PhaseChoice phase) {
    if (q.lo() != 0) throw Error("assemble_bank expects a causal Q (lo = 0)");
    detail::ExtPoly qe(q.coeffs().begin(), q.coeffs().end());
    return detail::assemble_bank_ext(L, M, qe, phase);
}

DesignResult design_bank(int L, int M, PhaseChoice phase, BezoutMethod method) {
    if (L < 1 || M < 1) throw InvalidOrder("design_bank needs L >= 1, M >= 1");
    BezoutSolution sol = solve(L, M, method);
    auto q = detail::riesz_factor_ext(sol.r_ext, phase);
    FilterBank bank = detail::assemble_bank_ext(L, M, q, phase);
    return DesignResult{std::move(bank), std::move(sol)};
}

double verify_pr(const FilterBank& bank) {
    double worst = 0.0;
    for (const LaurentFilter* f : {&bank.h0, &bank.g0}) {
        for (int i = 0; i < 4096; ++i) {
            const double th = 2.0 * double(kPi) * i / 4096.0;
            const std::complex<double> z = std::polar(1.0, th);
            const std::complex<double> a = laurent_eval(*f, z);
            const std::complex<double> b = laurent_eval(*f, -z);
            worst = std::max(worst, std::abs(std::norm(a) + std::norm(b) - 2.0));
        }
        // coefficient-domain half-band: A(z) + A(-z) = 2 means the doubled
        // even autocorrelation lags vanish except lag 0
        const LaurentFilter acf = laurent_mul(*f, laurent_reverse(*f));
        for (int lag = 0; lag <= acf.hi(); lag += 2) {
            const double want = lag == 0 ? 2.0 : 0.0;
            worst = std::max(worst, std::abs(2.0 * acf.at(lag) - want));
            worst = std::max(worst, std::abs(2.0 * acf.at(-lag) - want));
        }
    }
    return worst;
}

double hilbert_order_check(const FilterBank& bank) {
    const int L = bank.L;
    auto stable_defect = [&](double w) {
        const double h0m = std::abs(laurent_eval(bank.h0, std::polar(1.0, w)));
        return h0m * 2.0 * std::abs(std::sin(spectral::alpha(L, w) / 2.0));
    };
    auto direct_defect = [&](double w) {
        const std::complex<double> z = std::polar(1.0, w);
        return std::abs(laurent_eval(bank.g0, z) -
                        laurent_eval(bank.h0, z) * std::polar(1.0, -w / 2.0));
    };

    // the factored form is valid iff G0 = H0 e^{-iw/2 + i alpha_L}; check the
    // complex identity itself at a few frequencies
    bool conforming = true;
    for (double w : {0.5, 1.0, 2.0}) {
        const std::complex<double> z = std::polar(1.0, w);
        const std::complex<double> g0 = laurent_eval(bank.g0, z);
        const std::complex<double> rec =
            laurent_eval(bank.h0, z) * std::polar(1.0, -w / 2.0 + spectral::alpha(L, w));
        if (std::abs(g0 - rec) > 1e-8 * (std::abs(rec) + 1.0)) conforming = false;
    }

    std::vector<double> xs, ys;
    const int npts = 33;
    for (int i = 0; i < npts; ++i) {
        const double w = std::pow(10.0, -3.0 + 2.0 * i / (npts - 1));
        const double d = conforming ? stable_defect(w) : direct_defect(w);
        if (conforming && d <= 0.0) continue;  // underflow
        if (!conforming && d <= 1e-13) continue;
        xs.push_back(w);
        ys.push_back(d);
    }
    if (xs.size() < 4)
        return conforming ? std::numeric_limits<double>::infinity() : 0.0;
    return spectral::fit_loglog_slope(xs, ys);
}

double vanishing_moment_slope(const FilterBank& bank) {
    double norm1 = 0.0;
    for (double c : bank.h0.coeffs()) norm1 += std::abs(c);
    std::vector<double> xs, ys;
    const int npts = 33;
    for (int i = 0; i < npts; ++i) {
        const double eps = std::pow(10.0, -3.0 + 2.0 * i / (npts - 1));
        const double v = std::abs(laurent_eval(bank.h0, -std::polar(1.0, eps)));
        if (v <= 1e-13 * norm1) continue;
        xs.push_back(eps);
        ys.push_back(v);
    }
    if (xs.size() < 4) return std::numeric_limits<double>::infinity();
    return spectral::fit_loglog_slope(xs, ys);
}

}  // namespace cfwave
