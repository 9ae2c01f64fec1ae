#include "knotvol/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

#include "knotvol/hypgeom.hpp"
#include "knotvol/invariants.hpp"

namespace knotvol::asympt {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double growth_factor(int N, int k) {
    if (N < 1 || k < 0 || k > N)
        throw std::invalid_argument("growth_factor: need 0 <= k <= N");
    if (k == 0 || k == N) return 0.0;
    if (6 * k == N || 6 * k == 5 * N) return 1.0;
    if (2 * k == N) return 4.0;
    double s = std::sin(k * kPi / N);
    return 4.0 * s * s;
}

double growth_partial(int N, int j) {
    if (N < 1 || j < 0 || j > N - 1)
        throw std::invalid_argument("growth_partial: need 0 <= j <= N-1");
    double g = 1.0;
    for (int k = 1; k <= j; ++k) g *= growth_factor(N, k);
    return g;
}

int growth_argmax(int N) {
    if (N < 1) throw std::invalid_argument("growth_argmax: N must be >= 1");
    double acc = 0.0, best = 0.0;
    int best_j = 0;
    for (int j = 1; j <= N - 1; ++j) {
        acc += std::log(growth_factor(N, j));
        if (acc >= best) {
            best = acc;
            best_j = j;
        }
    }
    return best_j;
}

double fig8_log_kashaev(int N) {
    if (N < 1) throw std::invalid_argument("fig8_log_kashaev: N must be >= 1");
    // J_N(E; xi_N) = sum_j g(N;j) with g >= 0; log-sum-exp over the running
    // log-products, long-double accumulation.
    std::vector<long double> logs;
    logs.reserve(N);
    long double acc = 0.0L;
    logs.push_back(0.0L);
    for (int k = 1; k <= N - 1; ++k) {
        acc += std::log(static_cast<long double>(growth_factor(N, k)));
        logs.push_back(acc);
    }
    long double m = *std::max_element(logs.begin(), logs.end());
    long double s = 0.0L;
    for (long double lg : logs) s += std::exp(lg - m);
    return static_cast<double>(m + std::log(s));
}

LogJonesEvaluator braid_log_evaluator(const braid::BraidWord& b, std::uint64_t guard_cells) {
    return [b, guard_cells](int N) {
        invariants::check_state_sum_guard(b, N, guard_cells);
        complex j = invariants::tangle_scalar(b, N, tensorq::QExponent::root_of_unity(N)).value;
        return std::log(std::abs(j));
    };
}

LimitSeries volume_limit_series(const LogJonesEvaluator& evaluator,
                                const std::vector<int>& colors, unsigned threads) {
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (colors[i] < 1 || (i > 0 && colors[i] <= colors[i - 1]))
            throw std::invalid_argument("volume_limit_series: colors must be strictly increasing");
    }
    std::vector<double> logs(colors.size());
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto run_range = [&](std::size_t lo, std::size_t hi) {
        try {
            for (std::size_t i = lo; i < hi; ++i) logs[i] = evaluator(colors[i]);
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (threads <= 1 || colors.size() < 2) {
        run_range(0, colors.size());
    } else {
        unsigned nt = std::min<unsigned>(threads, static_cast<unsigned>(colors.size()));
        std::vector<std::thread> pool;
        std::size_t chunk = (colors.size() + nt - 1) / nt;
        for (unsigned t = 0; t < nt; ++t) {
            std::size_t lo = t * chunk;
            std::size_t hi = std::min(colors.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    LimitSeries series;
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (!std::isfinite(logs[i])) {
            series.skipped.push_back(colors[i]);
            continue;
        }
        series.entries.push_back({colors[i], kTwoPi * logs[i] / colors[i]});
    }
    return series;
}

FitResult fit_limit(const LimitSeries& series, FitWindow window) {
    std::vector<LimitSeries::Entry> pts;
    for (const auto& e : series.entries)
        if (e.color >= window.n_min && e.color <= window.n_max) pts.push_back(e);
    if (pts.size() < 3)
        throw MathError("fit_limit: window holds fewer than 3 points");

    // Normal equations in long double on unit-normalized columns.
    auto basis = [](int N, int c) -> long double {
        switch (c) {
        case 0: return 1.0L;
        case 1: return std::log(static_cast<long double>(N)) / N;
        default: return 1.0L / N;
        }
    };
    long double scale[3] = {0.0L, 0.0L, 0.0L};
    for (const auto& p : pts)
        for (int c = 0; c < 3; ++c) {
            long double v = basis(p.color, c);
            scale[c] += v * v;
        }
    for (auto& s : scale) s = std::sqrt(s);

    long double ata[3][3] = {};
    long double atb[3] = {};
    for (const auto& p : pts) {
        long double row[3];
        for (int c = 0; c < 3; ++c) row[c] = basis(p.color, c) / scale[c];
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) ata[r][c] += row[r] * row[c];
            atb[r] += row[r] * p.value;
        }
    }
    // 3x3 Gaussian elimination with partial pivoting
    int perm[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(ata[perm[r]][col]) > std::abs(ata[perm[piv]][col])) piv = r;
        std::swap(perm[col], perm[piv]);
        long double d = ata[perm[col]][col];
        if (std::abs(static_cast<double>(d)) < 1e-200)
            throw MathError("fit_limit: rank-deficient window");
        for (int r = col + 1; r < 3; ++r) {
            long double f = ata[perm[r]][col] / d;
            for (int c = col; c < 3; ++c) ata[perm[r]][c] -= f * ata[perm[col]][c];
            atb[perm[r]] -= f * atb[perm[col]];
        }
    }
    long double coef[3];
    for (int col = 2; col >= 0; --col) {
        long double s = atb[perm[col]];
        for (int c = col + 1; c < 3; ++c) s -= ata[perm[col]][c] * coef[c];
        coef[col] = s / ata[perm[col]][col];
    }
    for (int c = 0; c < 3; ++c) coef[c] /= scale[c];

    long double ss = 0.0L;
    for (const auto& p : pts) {
        long double fitv = coef[0] + coef[1] * basis(p.color, 1) + coef[2] * basis(p.color, 2);
        long double r = p.value - fitv;
        ss += r * r;
    }
    FitResult out;
    out.a = static_cast<double>(coef[0]);
    out.b = static_cast<double>(coef[1]);
    out.c = static_cast<double>(coef[2]);
    out.rms = static_cast<double>(std::sqrt(ss / pts.size()));
    out.window = window;
    return out;
}

namespace {

constexpr double kSupportedRadius = 0.5;
constexpr double kTrackStep = 0.01;
const complex kI(0.0, 1.0);

// One tracking node: given the previous (y, log y, log zz1), compute the
// branch-continuous values at parameter u.
struct TrackState {
    complex y, log_y, log_zz1;
};

complex unwrap(complex principal_log, complex previous) {
    double k = std::round((previous.imag() - principal_log.imag()) / kTwoPi);
    return principal_log + complex(0.0, kTwoPi * k);
}

TrackState step_track(const TrackState& prev, complex u) {
    complex theta = u + complex(0.0, kTwoPi);
    complex xi = std::exp(theta) + std::exp(-theta) - 1.0;
    complex disc = xi * xi - 4.0;
    if (std::abs(disc) < 1e-14)
        throw MathError("saddle_solve: degenerate saddle (discriminant ~ 0)");
    complex root = std::sqrt(disc);
    complex y1 = (xi + root) / 2.0;
    complex y2 = (xi - root) / 2.0;
    TrackState next;
    next.y = (std::abs(y1 - prev.y) <= std::abs(y2 - prev.y)) ? y1 : y2;
    next.log_y = unwrap(std::log(next.y), prev.log_y);
    complex x = std::exp(u);
    if (std::abs(next.y - x) < 1e-14)
        throw MathError("shapes_from_u: degenerate shapes (y = x)");
    complex z = next.y / (next.y - x);
    next.log_zz1 = unwrap(std::log(z * (z - 1.0)), prev.log_zz1);
    return next;
}

TrackState track_to(complex u) {
    if (std::abs(u) > kSupportedRadius)
        throw BranchError("deformation: |u| outside the supported box (0.5)");
    TrackState state;
    state.y = std::exp(complex(0.0, -kPi / 3.0));
    state.log_y = complex(0.0, -kPi / 3.0);
    state.log_zz1 = complex(0.0, kPi);
    int steps = std::max(1, static_cast<int>(std::ceil(std::abs(u) / kTrackStep)));
    for (int s = 1; s <= steps; ++s)
        state = step_track(state, u * (static_cast<double>(s) / steps));
    return state;
}

} // namespace

DeformationState deformation_state(complex u) {
    TrackState t = track_to(u);
    DeformationState d;
    d.u = u;
    d.theta = u + complex(0.0, kTwoPi);
    d.y = t.y;
    d.log_y = t.log_y;
    d.x = std::exp(u);
    d.z = t.y / (t.y - d.x);
    d.w = d.x - t.y;
    d.log_zz1 = t.log_zz1;
    d.v = 2.0 * t.log_zz1 - complex(0.0, kTwoPi);
    // Branch-corrected potential: the raw combination
    // Li2(1/(y e^theta)) - Li2(y/e^theta) + log y . theta picks up the
    // dilogarithm monodromy term 2 pi i (u - log y) on the theta = 2 pi i
    // sheet (plus the constant making H(0) = 2 pi^2/3 + i Vol); without it
    // dH/du lands on the wrong branch of log(z(z-1)) and the filled-volume
    // identity fails off the real and imaginary axes.
    complex a1 = std::exp(-(t.log_y + d.theta));
    complex a2 = std::exp(t.log_y - d.theta);
    d.h = hypgeom::dilog(a1) - hypgeom::dilog(a2) + t.log_y * d.theta +
          complex(0.0, kTwoPi) * (u - t.log_y) + 2.0 * kPi * kPi / 3.0;
    return d;
}

complex saddle_solve(complex u) { return track_to(u).y; }

std::pair<complex, complex> shapes_from_u(complex u) {
    DeformationState d = deformation_state(u);
    return {d.z, d.w};
}

complex potential_H(complex u) { return deformation_state(u).h; }

complex v_of_u(complex u) { return deformation_state(u).v; }

double filled_volume(complex u) {
    DeformationState d = deformation_state(u);
    return d.h.imag() - kPi * u.real() - 0.5 * u.real() * d.v.imag();
}

DehnFilling dehn_coefficients(complex u, complex v) {
    // [[Re u, Re v], [Im u, Im v]] (p,q)^T = (0, 2pi)^T
    double det = u.real() * v.imag() - v.real() * u.imag();
    if (std::abs(det) < 1e-14)
        throw MathError("dehn_coefficients: u and v linearly dependent (cusp)");
    DehnFilling f;
    f.p = -v.real() * kTwoPi / det;
    f.q = u.real() * kTwoPi / det;
    // raw pairing; the standalone core_length() enforces positivity for
    // geometric (u, v(u)) pairs
    f.core_length = -(u * std::conj(v)).imag() / kTwoPi;
    f.kappa = complex(f.core_length, (u * std::conj(v)).real() / kTwoPi);
    return f;
}

double core_length(complex u, complex v) {
    double len = -(u * std::conj(v)).imag() / kTwoPi;
    if (len < -1e-9)
        throw MathError("core_length: negative length, branch error upstream");
    return len;
}

complex vol_cs_combination(complex u) {
    DeformationState d = deformation_state(u);
    double len = core_length(u, d.v);
    double torsion = (u * std::conj(d.v)).real() / kTwoPi;
    complex kappa(len, torsion);
    return -kI * d.h - kPi * u + u * d.v * kI / 4.0 - kPi * kappa / 2.0;
}

AlexanderCheck alexander_limit_check(complex theta, int N) {
    if (N < 1) throw std::invalid_argument("alexander_limit_check: N must be >= 1");
    complex denom = 3.0 - std::exp(theta) - std::exp(-theta);
    if (std::abs(denom) < 1e-12)
        throw MathError("alexander_limit_check: Alexander polynomial pole");
    AlexanderCheck out;
    out.value = invariants::fig8_product(N, tensorq::QExponent::from_theta(theta, N)).value;
    out.target = 1.0 / denom;
    return out;
}

} // namespace knotvol::asympt
