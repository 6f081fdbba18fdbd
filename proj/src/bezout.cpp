#include "cfwave/bezout.hpp"

#include <algorithm>
#include <cmath>

#include "cfwave/errors.hpp"
#include "cfwave/thiran.hpp"

namespace cfwave {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

long double ext_rhs(int L, int M) {
    return std::ldexp((long double)((2 * L + 1) * (2 * L + 1)), 1 - 2 * L - 2 * M);
}

using detail::binomial_ld;

std::vector<long double> ext_s_roots(int L) {
    std::vector<long double> y(static_cast<std::size_t>(L));
    for (int k = 0; k < L; ++k) {
        long double t = std::tan(kPi * (2 * k + 1) / (2.0L * (2 * L + 1)));
        y[std::size_t(k)] = -t * t;
    }
    return y;
}

// Lagrange interpolation in coefficient form: master polynomial and one
// synthetic division per node. Stable enough in long double for L <= 16.
detail::ExtPoly lagrange_interpolate(const std::vector<long double>& nodes,
                                     const std::vector<long double>& values) {
    const std::size_t n = nodes.size();
    detail::ExtPoly master{1.0L};
    for (long double x : nodes) master = detail::ext_mul(master, {-x, 1.0L});
    detail::ExtPoly out(n, 0.0L);
    for (std::size_t k = 0; k < n; ++k) {
        // master / (y - x_k), descending synthetic division
        std::vector<long double> q(n);
        long double carry = master[n];  // leading coeff (=1)
        for (std::size_t i = n; i-- > 0;) {
            q[i] = carry;
            carry = master[i] + nodes[k] * carry;
        }
        long double denom = 1.0L;
        for (std::size_t m = 0; m < n; ++m)
            if (m != k) denom *= nodes[k] - nodes[m];
        const long double w = values[k] / denom;
        for (std::size_t i = 0; i < n; ++i) out[i] += q[i] * w;
    }
    return out;
}

}  // namespace

const char* to_string(BezoutMethod m) {
    switch (m) {
        case BezoutMethod::LinearSystem: return "linear";
        case BezoutMethod::RecursiveInterp: return "recursive";
        case BezoutMethod::ExactRational: return "exact";
    }
    return "?";
}

namespace detail {

ExtPoly ext_s_poly(int L, int M) {
    ExtPoly s(std::size_t(M + L + 1), 0.0L);
    for (int n = 0; n <= L; ++n) s[std::size_t(M + n)] = binomial_ld(2 * L + 1, 2 * n);
    return s;
}

long double ext_bezout_residual(const ExtPoly& r, int L, int M) {
    const ExtPoly s = ext_s_poly(L, M);
    const long double rhs = ext_rhs(L, M);
    long double worst = 0.0L;
    for (int i = 0; i <= 1024; ++i) {
        long double y = (1.0L + std::cos(kPi * i / 1024.0L)) / 2.0L;
        long double v = ext_eval(r, y) * ext_eval(s, y) +
                        ext_eval(r, 1.0L - y) * ext_eval(s, 1.0L - y) - rhs;
        worst = std::max(worst, std::abs(v));
    }
    return worst;
}

}  // namespace detail

BezoutProblem make_bezout_problem(int L, int M) {
    if (L < 1 || M < 0) throw InvalidOrder("bezout problem needs L >= 1, M >= 0");
    return BezoutProblem{L, M, s_poly(L, M), double(ext_rhs(L, M))};
}

RealPoly s_poly(int L, int M) {
    if (L < 1 || M < 0) throw InvalidOrder("s_poly needs L >= 1, M >= 0");
    return detail::ext_to_poly(detail::ext_s_poly(L, M));
}

std::vector<double> s_roots(int L) {
    if (L < 1) throw InvalidOrder("s_roots needs L >= 1");
    auto y = ext_s_roots(L);
    return std::vector<double>(y.begin(), y.end());
}

BezoutSolution solve_recursive(int L, int M) {
    if (L < 1 || M < 0) throw InvalidOrder("solve_recursive needs L >= 1, M >= 0");
    const auto yk = ext_s_roots(L);
    const detail::ExtPoly s0 = detail::ext_s_poly(L, 0);
    std::vector<long double> nodes(yk.size()), values(yk.size());
    const long double rhs0 = ext_rhs(L, 0);
    for (std::size_t k = 0; k < yk.size(); ++k) {
        nodes[k] = 1.0L - yk[k];
        values[k] = rhs0 / detail::ext_eval(s0, nodes[k]);
    }
    detail::ExtPoly r = lagrange_interpolate(nodes, values);

    for (int m = 1; m <= M; ++m) {
        // 4y r_{L,m}(y) = r_{L,m-1}(y) - 2^{-2L} r_{L,m-1}(0) (1-2y) s_{L,m-1}(1-y)
        const detail::ExtPoly srefl = detail::ext_reflect(detail::ext_s_poly(L, m - 1));
        const detail::ExtPoly term = detail::ext_mul({1.0L, -2.0L}, srefl);
        const long double c = std::ldexp(r[0], -2 * L);
        detail::ExtPoly rhs(std::max(r.size(), term.size()), 0.0L);
        long double norm = 0.0L;
        for (std::size_t i = 0; i < r.size(); ++i) rhs[i] += r[i];
        for (std::size_t i = 0; i < term.size(); ++i) rhs[i] -= c * term[i];
        for (long double v : rhs) norm = std::max(norm, std::abs(v));
        if (std::abs(rhs[0]) > 1e-9L * norm)
            throw RecursionDefect("constant term does not vanish in the 4y division step");
        r.assign(rhs.begin() + 1, rhs.end());
        for (auto& v : r) v /= 4.0L;
    }
    detail::ext_trim(r);

    BezoutSolution out;
    out.method = BezoutMethod::RecursiveInterp;
    out.r_ext = r;
    out.r = detail::ext_to_poly(r);
    out.residual = double(detail::ext_bezout_residual(r, L, M));
    return out;
}

BezoutSolution solve_linear_system(int L, int M) {
    if (L < 1 || M < 1) throw InvalidOrder("solve_linear_system needs L >= 1, M >= 1");
    // s = s1 * s2: binomial row of (1+z)^{2M} convolved with the Thiran
    // autocorrelation; length 2(M+L)+1, supported on z^{-(M+L)}..z^{M+L}.
    std::vector<double> s1(std::size_t(2 * M + 1));
    for (int k = 0; k <= 2 * M; ++k) s1[std::size_t(k)] = double(binomial_ld(2 * M, k));
    const auto d = thiran_coeffs(L).filter.coeffs();
    std::vector<double> s2(2 * d.size() - 1, 0.0);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j) s2[i + j] += d[i] * d[d.size() - 1 - j];
    std::vector<double> s(s1.size() + s2.size() - 1, 0.0);
    for (std::size_t i = 0; i < s1.size(); ++i)
        for (std::size_t j = 0; j < s2.size(); ++j) s[i + j] += s1[i] * s2[j];

    // even rows of the Toeplitz operator for "s * r is half-band"
    const int n = 2 * (M + L) - 1;
    std::vector<std::vector<double>> C(std::size_t(n), std::vector<double>(std::size_t(n), 0.0));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            int idx = 2 * k - j + 1;
            if (idx >= 0 && idx < int(s.size())) C[std::size_t(k)][std::size_t(j)] = s[std::size_t(idx)];
        }

    // LU with partial pivoting
    std::vector<std::vector<double>> lu = C;
    std::vector<int> piv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) piv[std::size_t(i)] = i;
    for (int col = 0; col < n; ++col) {
        int best = col;
        for (int row = col + 1; row < n; ++row)
            if (std::abs(lu[std::size_t(row)][std::size_t(col)]) >
                std::abs(lu[std::size_t(best)][std::size_t(col)]))
                best = row;
        std::swap(lu[std::size_t(col)], lu[std::size_t(best)]);
        std::swap(piv[std::size_t(col)], piv[std::size_t(best)]);
        const double pivot = lu[std::size_t(col)][std::size_t(col)];
        if (pivot == 0.0) throw IllConditioned("singular half-band system", HUGE_VAL);
        for (int row = col + 1; row < n; ++row) {
            double f = lu[std::size_t(row)][std::size_t(col)] / pivot;
            lu[std::size_t(row)][std::size_t(col)] = f;
            for (int j = col + 1; j < n; ++j)
                lu[std::size_t(row)][std::size_t(j)] -= f * lu[std::size_t(col)][std::size_t(j)];
        }
    }
    auto lu_solve = [&](std::vector<double> b) {
        std::vector<double> x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) x[std::size_t(i)] = b[std::size_t(piv[std::size_t(i)])];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j)
                x[std::size_t(i)] -= lu[std::size_t(i)][std::size_t(j)] * x[std::size_t(j)];
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j)
                x[std::size_t(i)] -= lu[std::size_t(i)][std::size_t(j)] * x[std::size_t(j)];
            x[std::size_t(i)] /= lu[std::size_t(i)][std::size_t(i)];
        }
        return x;
    };

    // condition estimate: ||C||_1 * ||C^{-1}||_1, inverse column by column
    double norm1 = 0.0;
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < n; ++i) col += std::abs(C[std::size_t(i)][std::size_t(j)]);
        norm1 = std::max(norm1, col);
    }
    double inv_norm1 = 0.0;
    for (int j = 0; j < n; ++j) {
        std::vector<double> e(std::size_t(n), 0.0);
        e[std::size_t(j)] = 1.0;
        auto x = lu_solve(std::move(e));
        double col = 0.0;
        for (double v : x) col += std::abs(v);
        inv_norm1 = std::max(inv_norm1, col);
    }
    const double cond = norm1 * inv_norm1;
    if (!(cond < 1e12))
        throw IllConditioned("half-band system condition estimate " + std::to_string(cond), cond);

    std::vector<double> b(std::size_t(n), 0.0);
    b[std::size_t(M + L - 1)] = 1.0;
    const std::vector<double> rho = lu_solve(std::move(b));

    // back to the y variable: R(z) = rho_0 + sum 2 rho_k T_k(u), u = 2y-1
    const int deg = M + L - 1;
    const int mid = M + L - 1;
    RealPoly r = RealPoly::constant(rho[std::size_t(mid)]);
    RealPoly tkm1 = RealPoly::constant(1.0);
    RealPoly tk({-1.0, 2.0});  // T_1(2y-1)
    const RealPoly two_u({-2.0, 4.0});
    for (int k = 1; k <= deg; ++k) {
        r = poly_add(r, poly_scale(tk, 2.0 * rho[std::size_t(mid + k)]));
        RealPoly tkp1 = poly_sub(poly_mul(two_u, tk), tkm1);
        tkm1 = tk;
        tk = tkp1;
    }

    BezoutSolution out;
    out.method = BezoutMethod::LinearSystem;
    out.r = r;
    out.r_ext = detail::ext_from_poly(r);
    out.residual = bezout_residual(r, L, M);
    return out;
}

BezoutSolution solve_exact(int L, int M) {
    if (L < 1 || M < 0) throw InvalidOrder("solve_exact needs L >= 1, M >= 0");
    if (L + M > 12) throw CostGuard("solve_exact guarded to L+M <= 12");
    std::vector<Rational> sc(std::size_t(M + L + 1), Rational(0));
    for (int n = 0; n <= L; ++n) {
        // exact integer binomial via BigInt products
        BigInt num(1);
        for (int i = 1; i <= 2 * n; ++i) num = num * BigInt(2 * L + 2 - i);
        BigInt den(1);
        for (int i = 1; i <= 2 * n; ++i) den = den * BigInt(i);
        sc[std::size_t(M + n)] = Rational(num / den, BigInt(1));
    }
    const RatPoly b(std::move(sc));        // s(y)
    const RatPoly a = rat_reflect(b);      // s(1-y)
    const Rational c(BigInt((2 * L + 1) * (2 * L + 1)), BigInt::from_pow2(unsigned(2 * L + 2 * M - 1)));

    auto eu = rat_poly_ext_euclid(a, b);
    if (eu.g.degree() != 0) throw Error("s(y) and s(1-y) are not coprime");
    // u a + v b = 1 (monic g); minimal-degree coefficient of b is (c v) mod a
    RatPoly q, r;
    rat_divmod(rat_scale(eu.v, c), a, q, r);
    // partner V = (c - r b)/a must equal r(1-y); exact self-check
    RatPoly v_num = rat_sub(RatPoly::constant(c), rat_mul(r, b));
    RatPoly V, rem;
    rat_divmod(v_num, a, V, rem);
    if (!rem.is_zero()) throw Error("exact bezout: division self-check failed");
    if (!rat_sub(V, rat_reflect(r)).is_zero())
        throw Error("exact bezout: symmetry self-check failed");

    std::vector<double> img(r.coeffs().size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = r.coeffs()[i].to_double();

    BezoutSolution out;
    out.method = BezoutMethod::ExactRational;
    out.r = RealPoly(std::move(img));
    out.r_ext = detail::ext_from_poly(out.r);
    out.r_exact = r;
    out.residual = bezout_residual(out.r, L, M);
    return out;
}

BezoutSolution solve(int L, int M, BezoutMethod method) {
    switch (method) {
        case BezoutMethod::LinearSystem: return solve_linear_system(L, M);
        case BezoutMethod::ExactRational: return solve_exact(L, M);
        case BezoutMethod::RecursiveInterp: break;
    }
    return solve_recursive(L, M);
}

double bezout_residual(const RealPoly& r, int L, int M) {
    return double(detail::ext_bezout_residual(detail::ext_from_poly(r), L, M));
}

bool antisymmetry_check(const RealPoly& q) {
    const RealPoly refl = poly_shift_reflect(q);
    double norm = 1.0;
    for (double c : q.coeffs()) norm = std::max(norm, std::abs(c));
    const RealPoly sum = poly_add(refl, q);
    for (double c : sum.coeffs())
        if (std::abs(c) > 1e-12 * norm) return false;
    return true;
}

}  // namespace cfwave
