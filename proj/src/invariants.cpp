#include "knotvol/invariants.hpp"

#include <cmath>

namespace knotvol::invariants {

using tensorq::RMatrixTable;
using tensorq::StateTensor;
using tensorq::mu_entry;
using tensorq::qfact;
using tensorq::qnum;

std::string method_name(Method m) {
    switch (m) {
    case Method::state_sum: return "state_sum";
    case Method::tangle_scalar: return "tangle_scalar";
    case Method::fig8_double_sum: return "fig8_double_sum";
    case Method::fig8_product: return "fig8_product";
    case Method::fig8_single_sum: return "fig8_single_sum";
    }
    return "unknown";
}

namespace {

constexpr double kVanishTol = 1e-12;

// Carrier cells above this switch the closure contraction to the
// memory-frugal column sweep.
constexpr std::uint64_t kCarrierCellCap = std::uint64_t(1) << 26;

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int t = 0; t < exp; ++t) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

} // namespace

namespace detail {

StateTensor reduced_operator(const braid::BraidWord& b, const RMatrixTable& table,
                             std::uint64_t carrier_cell_cap) {
    const int n = b.strands();
    const int N = table.dim();
    const auto& letters = b.letters();
    const std::uint64_t carrier_cells = checked_pow(N, 2 * n, carrier_cell_cap);

    if (carrier_cells <= carrier_cell_cap) {
        StateTensor op = StateTensor::identity_operator(n, N);
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            op = apply_crossing(op, it->index, it->sign, table);
        for (int k = n; k >= 2; --k)
            op = partial_trace_last(op, &table.mu());
        return op;
    }

    // Column sweep: evolve each basis column |k, J> separately and
    // accumulate M[i][k] += Phi[(i,J),(k,J)] prod_t mu[j_t].
    std::uint64_t colspace = 1;
    for (int t = 0; t < n - 1; ++t) colspace *= static_cast<std::uint64_t>(N);
    StateTensor m(2, N);
    StateTensor col(n, N);
    for (int k = 0; k < N; ++k) {
        for (std::uint64_t J = 0; J < colspace; ++J) {
            complex wgt = 1.0;
            std::uint64_t rem = J;
            for (int t = 0; t < n - 1; ++t) {
                wgt *= table.mu()[rem % N];
                rem /= N;
            }
            std::fill(col.data().begin(), col.data().end(), complex(0.0));
            col.at(static_cast<std::size_t>(k) * colspace + J) = 1.0;
            StateTensor cur = col;
            for (auto it = letters.rbegin(); it != letters.rend(); ++it)
                cur = apply_crossing(cur, it->index, it->sign, table);
            for (int i = 0; i < N; ++i)
                m.at(static_cast<std::size_t>(i) * N + k) +=
                    cur.at(static_cast<std::size_t>(i) * colspace + J) * wgt;
        }
    }
    return m;
}

} // namespace detail

namespace {

StateTensor reduced_operator(const braid::BraidWord& b, const RMatrixTable& table) {
    return detail::reduced_operator(b, table, kCarrierCellCap);
}

complex writhe_prefactor(const braid::BraidWord& b, int N, const QExponent& q) {
    return q.pow(-b.writhe() * (static_cast<double>(N) * N - 1) / 4.0);
}

} // namespace

complex trace_invariant(const braid::BraidWord& b, int N, const QExponent& q) {
    RMatrixTable table(N, q);
    StateTensor m = reduced_operator(b, table);
    complex tr = 0.0;
    for (int i = 0; i < N; ++i)
        tr += m.at(static_cast<std::size_t>(i) * N + i) * table.mu()[i];
    return writhe_prefactor(b, N, q) * tr;
}

InvariantValue colored_jones(const braid::BraidWord& b, int N, const QExponent& q) {
    const complex qn = qnum(N, q);
    if (std::abs(qn) < kVanishTol)
        throw MathError("colored_jones: {N} vanishes at this q; use tangle_scalar");
    complex value = trace_invariant(b, N, q) * qnum(1, q) / qn;
    return {value, N, q, Method::state_sum};
}

InvariantValue tangle_scalar(const braid::BraidWord& b, int N, const QExponent& q) {
    if (braid::closure_components(b) != 1)
        throw MathError("tangle_scalar: closure is not a knot");
    RMatrixTable table(N, q);
    StateTensor m = reduced_operator(b, table);
    complex s = m.at(static_cast<std::size_t>(N - 1) * N + (N - 1));
    return {writhe_prefactor(b, N, q) * s, N, q, Method::tangle_scalar};
}

complex kashaev(const braid::BraidWord& b, int N) {
    if (N < 2) throw std::invalid_argument("kashaev: N must be >= 2");
    return tangle_scalar(b, N, QExponent::root_of_unity(N)).value;
}

InvariantValue fig8_double_sum(int N, const QExponent& q) {
    if (N < 1) throw std::invalid_argument("fig8_double_sum: N must be >= 1");
    std::vector<complex> fact(N);
    fact[0] = 1.0;
    for (int t = 1; t < N; ++t) fact[t] = fact[t - 1] * qnum(t, q);
    complex total = 0.0;
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j <= i; ++j) {
            complex num = fact[N - 1] * fact[i] * fact[N - 1 - j];
            complex den = fact[j] * fact[j] * fact[i - j] * fact[N - 1 - i];
            double expo = (-i - static_cast<double>(i) * i - 2.0 * i * j -
                           2.0 * static_cast<double>(j) * j + 3.0 * N + 6.0 * N * i +
                           2.0 * N * j - 3.0 * static_cast<double>(N) * N) /
                          4.0;
            double sign = ((N - 1 + i) % 2 == 0) ? 1.0 : -1.0;
            total += sign * num / den * q.pow(expo);
        }
    }
    return {total, N, q, Method::fig8_double_sum};
}

InvariantValue fig8_product(int N, const QExponent& q) {
    if (N < 1) throw std::invalid_argument("fig8_product: N must be >= 1");
    complex sum = 0.0, prod = 1.0;
    for (int j = 0; j < N; ++j) {
        if (j > 0) prod *= qnum(N - j, q) * qnum(N + j, q);
        sum += prod;
    }
    return {sum, N, q, Method::fig8_product};
}

InvariantValue fig8_single_sum(int N, const QExponent& q) {
    if (N < 1) throw std::invalid_argument("fig8_single_sum: N must be >= 1");
    const complex qn = qnum(N, q);
    if (std::abs(qn) < kVanishTol)
        throw MathError("fig8_single_sum: {N} vanishes at this q; use fig8_product");
    std::vector<complex> fact(2 * N);
    fact[0] = 1.0;
    for (int t = 1; t < 2 * N; ++t) fact[t] = fact[t - 1] * qnum(t, q);
    complex sum = 0.0;
    for (int k = 0; k < N; ++k) sum += fact[N + k] / fact[N - 1 - k];
    return {sum / qn, N, q, Method::fig8_single_sum};
}

double skein_residual_n2(const braid::BraidWord& l_plus, const braid::BraidWord& l_minus,
                         const braid::BraidWord& l_zero, const QExponent& q) {
    complex jp = colored_jones(l_plus, 2, q).value;
    complex jm = colored_jones(l_minus, 2, q).value;
    complex j0 = colored_jones(l_zero, 2, q).value;
    complex lhs = q.pow(1.0) * jp - q.pow(-1.0) * jm;
    complex rhs = (q.pow(0.5) - q.pow(-0.5)) * j0;
    return std::abs(lhs - rhs);
}

void check_state_sum_guard(const braid::BraidWord& b, int N, std::uint64_t max_cells) {
    if (checked_pow(static_cast<std::uint64_t>(N), b.strands(), max_cells) > max_cells)
        throw GuardError("state-sum guard: N^strands exceeds " + std::to_string(max_cells));
}

} // namespace knotvol::invariants
