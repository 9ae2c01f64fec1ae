#include "knotvol/hypgeom.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace knotvol::hypgeom {

namespace {

constexpr double kPi = std::numbers::pi;

// zeta(2k) for k = 1..40; closed forms for the first few, direct sums
// (fast for large exponents) for the rest.
const std::array<double, 41>& zeta_even() {
    static const std::array<double, 41> table = [] {
        std::array<double, 41> z{};
        z[1] = kPi * kPi / 6.0;
        z[2] = std::pow(kPi, 4) / 90.0;
        z[3] = std::pow(kPi, 6) / 945.0;
        for (int k = 4; k <= 40; ++k) {
            double s = 1.0;
            for (int n = 2;; ++n) {
                double term = std::pow(static_cast<double>(n), -2.0 * k);
                s += term;
                if (term < 1e-20 * s) break;
            }
            z[k] = s;
        }
        return z;
    }();
    return table;
}

// Clausen function Cl2 on [-pi, pi] via the log-extracted power series
// Cl2(x) = x - x log|x| + sum_{k>=1} zeta(2k)/(k(2k+1)) (x/2pi)^{2k} x.
double clausen2_reduced(double x) {
    if (x == 0.0) return 0.0;
    const auto& z = zeta_even();
    const double ratio = (x / (2.0 * kPi)) * (x / (2.0 * kPi));
    double term = x;
    double s = x - x * std::log(std::abs(x));
    for (int k = 1; k <= 40; ++k) {
        term *= ratio;
        double add = z[k] / (k * (2.0 * k + 1.0)) * term;
        s += add;
        if (std::abs(add) < 1e-17 * std::abs(s)) break;
    }
    return s;
}

} // namespace

double lobachevsky(double theta) {
    if (!std::isfinite(theta))
        throw std::invalid_argument("lobachevsky: theta must be finite");
    // Lambda has period pi; reduce to [-pi/2, pi/2] so 2t lands in [-pi, pi].
    double t = theta - kPi * std::floor(theta / kPi + 0.5);
    return 0.5 * clausen2_reduced(2.0 * t);
}

namespace {

// Even Bernoulli numbers B_2..B_34 as exact quotients; odd ones vanish
// beyond B_1, which the series handles explicitly.
constexpr std::array<double, 18> kBernoulliEvenNum = {
    1.0, 1.0, -1.0, 1.0, -1.0, 5.0, -691.0, 7.0, -3617.0, 43867.0,
    -174611.0, 854513.0, -236364091.0, 8553103.0, -23749461029.0,
    8615841276005.0, -7709321041217.0, 2577687858367.0};
constexpr std::array<double, 18> kBernoulliEvenDen = {
    1.0, 6.0, 30.0, 42.0, 30.0, 66.0, 2730.0, 6.0, 510.0, 798.0,
    330.0, 138.0, 2730.0, 6.0, 870.0, 14322.0, 510.0, 6.0};

// sum_{n>=1} z^n / n^2 for |z| <= 1/2
complex dilog_series(complex z) {
    complex term = 1.0, s = 0.0;
    for (int n = 1; n <= 60; ++n) {
        term *= z;
        complex add = term / static_cast<double>(n * n);
        s += add;
        if (std::abs(add) < 1e-18 * std::max(1.0, std::abs(s))) break;
    }
    return s;
}

// Bernoulli series in u = -log(1-z); converges for |u| < 2pi, used on the
// lens 1/2 < |z| <= 1, Re z <= 1/2 where |u| stays below ~1.1.
complex dilog_log_series(complex z) {
    const complex u = -std::log(1.0 - z);
    const complex u2 = u * u;
    // B_0 u + B_1 u^2/2
    complex s = u - 0.25 * u2;
    complex upow = u;         // u^{2k-1}
    double fact = 1.0;        // (2k)!
    for (std::size_t k = 1; k < kBernoulliEvenNum.size(); ++k) {
        upow *= u2;
        fact *= (2.0 * k) * (2.0 * k + 1.0);
        complex add = (kBernoulliEvenNum[k] / kBernoulliEvenDen[k]) * upow / fact;
        s += add;
        if (std::abs(add) < 1e-18 * std::max(1.0, std::abs(s))) break;
    }
    return s;
}

constexpr double kZeta2 = kPi * kPi / 6.0;

complex dilog_impl(complex z) {
    if (z == complex(0.0)) return 0.0;
    if (z == complex(1.0)) return kZeta2;
    const double az = std::abs(z);
    if (az > 1.0) {
        // Li2(z) + Li2(1/z) = -pi^2/6 - log^2(-z)/2
        complex lz = std::log(-z);
        return -kZeta2 - 0.5 * lz * lz - dilog_impl(1.0 / z);
    }
    if (z.real() > 0.5) {
        // Li2(z) + Li2(1-z) = pi^2/6 - log(z) log(1-z)
        return kZeta2 - std::log(z) * std::log(1.0 - z) - dilog_impl(1.0 - z);
    }
    if (az <= 0.5) return dilog_series(z);
    return dilog_log_series(z);
}

} // namespace

complex dilog(complex z) {
    if (z.imag() == 0.0 && z.real() > 1.0)
        throw MathError("dilog: argument on the branch cut (1, inf)");
    return dilog_impl(z);
}

double tetra_volume_angles(const DihedralAngles& a) {
    if (std::abs(a.alpha + a.beta + a.gamma - kPi) > 1e-12)
        throw std::invalid_argument("tetra_volume_angles: angle sum must be pi");
    return lobachevsky(a.alpha) + lobachevsky(a.beta) + lobachevsky(a.gamma);
}

double tetra_volume_shape(complex z) {
    if (z == complex(0.0) || z == complex(1.0))
        throw MathError("tetra_volume_shape: degenerate shape z in {0, 1}");
    // Flat tetrahedra: the Bloch-Wigner value vanishes on the whole real
    // line, including across the Li2 cut.
    if (z.imag() == 0.0) return 0.0;
    return dilog_impl(z).imag() + std::log(std::abs(z)) * std::arg(1.0 - z);
}

complex fig8_gluing_residual(complex z, complex w) {
    return z * w * (z - 1.0) * (w - 1.0) - 1.0;
}

double fig8_complete_volume() {
    return 6.0 * lobachevsky(kPi / 3.0);
}

} // namespace knotvol::hypgeom
