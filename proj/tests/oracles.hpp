// Independent test oracles: dense (unbanded) matrix routes for the tensor
// engine and adaptive quadrature for the special functions. These must stay
// free of the implementation paths they check.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "knotvol/tensorq.hpp"

namespace oracles {

using complex = std::complex<double>;

// Dense row-major complex matrix just big enough for the oracle work.
struct Mat {
    std::size_t n = 0;
    std::vector<complex> a;

    Mat() = default;
    explicit Mat(std::size_t n_) : n(n_), a(n_ * n_, complex(0.0)) {}
    complex& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
    const complex& operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }

    static Mat identity(std::size_t n_) {
        Mat m(n_);
        for (std::size_t d = 0; d < n_; ++d) m(d, d) = 1.0;
        return m;
    }
};

inline Mat mul(const Mat& x, const Mat& y) {
    Mat z(x.n);
    for (std::size_t r = 0; r < x.n; ++r)
        for (std::size_t k = 0; k < x.n; ++k) {
            complex v = x(r, k);
            if (v == complex(0.0)) continue;
            for (std::size_t c = 0; c < x.n; ++c) z(r, c) += v * y(k, c);
        }
    return z;
}

inline Mat kron(const Mat& x, const Mat& y) {
    Mat z(x.n * y.n);
    for (std::size_t r1 = 0; r1 < x.n; ++r1)
        for (std::size_t c1 = 0; c1 < x.n; ++c1)
            for (std::size_t r2 = 0; r2 < y.n; ++r2)
                for (std::size_t c2 = 0; c2 < y.n; ++c2)
                    z(r1 * y.n + r2, c1 * y.n + c2) = x(r1, c1) * y(r2, c2);
    return z;
}

inline double max_abs_diff(const Mat& x, const Mat& y) {
    double m = 0.0;
    for (std::size_t s = 0; s < x.a.size(); ++s) m = std::max(m, std::abs(x.a[s] - y.a[s]));
    return m;
}

// Dense R matrix on V (x) V from the entry functions, row (i,j), col (k,l).
inline Mat dense_r(int N, const knotvol::tensorq::QExponent& q, int sign) {
    Mat m(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k)
                for (int l = 0; l < N; ++l)
                    m(static_cast<std::size_t>(i) * N + j, static_cast<std::size_t>(k) * N + l) =
                        sign > 0 ? knotvol::tensorq::r_entry(N, q, i, j, k, l)
                                 : knotvol::tensorq::r_inverse_entry(N, q, i, j, k, l);
    return m;
}

// Gauss-Jordan inverse (partial pivoting); oracle-only use on small matrices.
inline Mat dense_inverse(Mat m) {
    const std::size_t n = m.n;
    Mat inv = Mat::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
        for (std::size_t c = 0; c < n; ++c) {
            std::swap(m(col, c), m(piv, c));
            std::swap(inv(col, c), inv(piv, c));
        }
        complex d = m(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            m(col, c) /= d;
            inv(col, c) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            complex f = m(r, col);
            if (f == complex(0.0)) continue;
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) -= f * m(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

// Adaptive Simpson on a smooth integrand.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-13, int depth = 48) {
    std::function<double(double, double, double, double, double, double, double, int)> go =
        [&](double lo, double hi, double flo, double fmid, double fhi, double whole, double eps,
            int d) -> double {
        double mid = 0.5 * (lo + hi);
        double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
        double flmid = f(lmid), frmid = f(rmid);
        double left = (mid - lo) / 6.0 * (flo + 4.0 * flmid + fmid);
        double right = (hi - mid) / 6.0 * (fmid + 4.0 * frmid + fhi);
        if (d <= 0 || std::abs(left + right - whole) < 15.0 * eps)
            return left + right + (left + right - whole) / 15.0;
        return go(lo, mid, flo, flmid, fmid, left, eps / 2.0, d - 1) +
               go(mid, hi, fmid, frmid, fhi, right, eps / 2.0, d - 1);
    };
    double mid = 0.5 * (a + b);
    double fa = f(a), fm = f(mid), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return go(a, b, fa, fm, fb, whole, tol, depth);
}

// Quadrature oracle for the Lobachevsky function on 0 <= theta < pi:
// -int_0^theta log(2 sin x) dx with the log singularity at 0 split off:
// = theta - theta log(2 theta) - int_0^theta log(sin x / x) dx.
inline double lobachevsky_quadrature(double theta) {
    if (theta == 0.0) return 0.0;
    double smooth = adaptive_simpson(
        [](double x) { return x == 0.0 ? 0.0 : std::log(std::sin(x) / x); }, 0.0, theta);
    return theta - theta * std::log(2.0 * theta) - smooth;
}

// Truncated Taylor oracle for Li2 on |z| <= 1/2.
inline complex dilog_taylor(complex z, int terms = 200) {
    complex s = 0.0, p = 1.0;
    for (int n = 1; n <= terms; ++n) {
        p *= z;
        s += p / static_cast<double>(n * n);
    }
    return s;
}

inline complex random_unit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    double a = ang(rng);
    return {std::cos(a), std::sin(a)};
}

} // namespace oracles
