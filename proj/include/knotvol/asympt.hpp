#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "knotvol/braid.hpp"
#include "knotvol/errors.hpp"

namespace knotvol::asympt {

using complex = std::complex<double>;

// f(N;k) = 4 sin^2(k pi / N); exact at the rational points where f is
// exactly 1 or 4 so running products do not drift across ties.
double growth_factor(int N, int k);

// g(N;j) = prod_{k<=j} f(N;k), g(N;0) = 1.
double growth_partial(int N, int j);

// argmax_j g(N;j) over 0 <= j <= N-1, ties resolved toward larger j.
int growth_argmax(int N);

// One row of the Kashaev limit sequence: value = 2 pi log|J_N| / N.
struct LimitSeries {
    struct Entry {
        int color;
        double value;
    };
    std::vector<Entry> entries;
    std::vector<int> skipped; // colors where J_N = 0
};

// Evaluator contract: log|J_N(K; exp(2 pi i / N))| for a given color;
// -inf marks J_N = 0 and the color is recorded as skipped.
using LogJonesEvaluator = std::function<double(int)>;

// log|J_N(E; xi_N)| for the figure-eight via the O(N) product formula,
// accumulated in log space (J_N itself overflows doubles past N ~ 2200).
double fig8_log_kashaev(int N);

// Evaluator for an arbitrary braid closure through the state sum; applies the
// N^strands <= guard_cells resource guard.
LogJonesEvaluator braid_log_evaluator(const braid::BraidWord& b,
                                      std::uint64_t guard_cells = 10'000'000);

// Evaluate the series over `colors`; rows computed independently across
// `threads` workers, assembled in input order.
LimitSeries volume_limit_series(const LogJonesEvaluator& evaluator,
                                const std::vector<int>& colors, unsigned threads = 1);

// Least-squares fit of the model a + b log(N)/N + c/N over a color window.
struct FitWindow {
    int n_min;
    int n_max;
};

struct FitResult {
    double a;
    double b;
    double c;
    double rms;
    FitWindow window;
};

FitResult fit_limit(const LimitSeries& series, FitWindow window);

// The figure-eight deformation bundle at parameter u, with the branch
// carriers (log y and log z(z-1)) tracked continuously from u = 0.
struct DeformationState {
    complex u;
    complex theta;   // u + 2 pi i, kept as a logarithm
    complex y;       // saddle, y(0) = exp(-i pi/3)
    complex log_y;   // continuous, log_y(0) = -i pi/3
    complex z, w;    // tetrahedron shapes, z(0) = w(0) = (1+i sqrt 3)/2
    complex x;       // e^u
    complex log_zz1; // log(z(z-1)), continuous from +i pi
    complex v;       // 2 dH/du - 2 pi i
    complex h;       // potential H(u)
};

// Path-tracks from 0 to u along a straight segment (step <= 0.01).
// Throws BranchError outside the supported box |u| <= 0.5 and MathError
// on a degenerate saddle.
DeformationState deformation_state(complex u);

// Individual views of the bundle (each re-tracks from 0).
complex saddle_solve(complex u);
std::pair<complex, complex> shapes_from_u(complex u);
complex potential_H(complex u);
complex v_of_u(complex u);

// Im H(u) - pi Re u - (1/2) Re u Im v, the volume of the filled manifold.
double filled_volume(complex u);

// Generalized Dehn surgery data for pu + qv = 2 pi i.
struct DehnFilling {
    double p;
    double q;
    complex kappa;      // core_length + i torsion
    double core_length;
};

// Throws MathError when u and v are linearly dependent over R (the cusp).
DehnFilling dehn_coefficients(complex u, complex v);

// length(gamma_u) = -(1/2pi) Im(u conj(v)); throws MathError if the value
// is negative beyond tolerance (an upstream branch error).
double core_length(complex u, complex v);

// -i H(u) - pi u + u v i / 4 - pi kappa(gamma_u) / 2 with
// kappa = core_length + i torsion, torsion = (1/2pi) Re(u conj(v)).
// The real part equals filled_volume(u).
complex vol_cs_combination(complex u);

// J_N(E; exp(theta/N)) against the Alexander polynomial limit
// 1/(3 - e^theta - e^{-theta}); throws MathError at the Delta pole.
struct AlexanderCheck {
    complex value;
    complex target;
};
AlexanderCheck alexander_limit_check(complex theta, int N);

} // namespace knotvol::asympt
