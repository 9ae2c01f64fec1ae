#include "knotvol/tensorq.hpp"

#include <cmath>
#include <numbers>

namespace knotvol::tensorq {

namespace {
constexpr double kPi = std::numbers::pi;
}

QExponent QExponent::root_of_unity(int M) {
    if (M < 1) throw std::invalid_argument("QExponent: root order must be >= 1");
    return QExponent{complex(0.0, 2.0 * kPi / M)};
}

QExponent QExponent::from_theta(complex theta, int N) {
    if (N < 1) throw std::invalid_argument("QExponent: color must be >= 1");
    return QExponent{theta / static_cast<double>(N)};
}

complex qnum(int m, const QExponent& q) {
    return q.pow(m / 2.0) - q.pow(-m / 2.0);
}

complex qfact(int m, const QExponent& q) {
    if (m < 0) throw std::invalid_argument("qfact: m must be >= 0");
    complex p = 1.0;
    for (int t = 1; t <= m; ++t) p *= qnum(t, q);
    return p;
}

namespace {

void check_indices(int N, int i, int j, int k, int l) {
    if (i < 0 || i >= N || j < 0 || j >= N || k < 0 || k >= N || l < 0 || l >= N)
        throw std::invalid_argument("r_entry: index out of range [0, N-1]");
}

// The bracket-factorial ratios in the R and R^{-1} entries reduce to m-term
// products; evaluated term by term in index order, with log-magnitude
// accumulation once N is large enough for over/underflow to matter.
complex bracket_product(int m, int base1, int base2, const QExponent& q, int N) {
    if (N <= 64) {
        complex p = 1.0;
        for (int t = 1; t <= m; ++t)
            p *= qnum(base1 + t, q) * qnum(base2 + t, q) / qnum(t, q);
        return p;
    }
    double logmag = 0.0;
    double phase = 0.0;
    for (int t = 1; t <= m; ++t) {
        complex f = qnum(base1 + t, q) * qnum(base2 + t, q) / qnum(t, q);
        logmag += std::log(std::abs(f));
        phase += std::arg(f);
    }
    return std::exp(logmag) * complex(std::cos(phase), std::sin(phase));
}

} // namespace

complex r_entry(int N, const QExponent& q, int i, int j, int k, int l) {
    check_indices(N, i, j, k, l);
    if (i + j != k + l) return 0.0;
    const int m = l - i;
    if (m < 0 || m != j - k) return 0.0;
    const double c = (N - 1) / 2.0;
    // {l}!{N-1-k}! / ({i}!{m}!{N-1-j}!) = prod_{t=1..m} {i+t}{N-1-j+t}/{t}
    complex ratio = bracket_product(m, i, N - 1 - j, q, N);
    double expo = (i - c) * (j - c) - m * (i - j) / 2.0 - m * (m + 1) / 4.0;
    return ratio * q.pow(expo);
}

complex r_inverse_entry(int N, const QExponent& q, int i, int j, int k, int l) {
    check_indices(N, i, j, k, l);
    if (i + j != k + l) return 0.0;
    const int m = i - l;
    if (m < 0 || m != k - j) return 0.0;
    const double c = (N - 1) / 2.0;
    // {k}!{N-1-l}! / ({j}!{m}!{N-1-i}!) = prod_{t=1..m} {j+t}{N-1-i+t}/{t}
    complex ratio = bracket_product(m, j, N - 1 - i, q, N);
    double expo = -(i - c) * (j - c) - m * (i - j) / 2.0 + m * (m + 1) / 4.0;
    double s = (m % 2 == 0) ? 1.0 : -1.0;
    return s * ratio * q.pow(expo);
}

complex mu_entry(int N, const QExponent& q, int i) {
    if (i < 0 || i >= N) throw std::invalid_argument("mu_entry: index out of range");
    return q.pow((2.0 * i - N + 1) / 2.0);
}

RMatrixTable::RMatrixTable(int N, const QExponent& q) : N_(N), q_(q) {
    if (N < 1) throw std::invalid_argument("RMatrixTable: N must be >= 1");
    table_.assign(static_cast<std::size_t>(N) * N * N, complex(0.0));
    table_inv_.assign(table_.size(), complex(0.0));
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            for (int m = 0; m <= std::min(N - 1 - i, j); ++m)
                table_[idx(i, j, m)] = r_entry(N, q, i, j, j - m, i + m);
            for (int m = 0; m <= std::min(i, N - 1 - j); ++m)
                table_inv_[idx(i, j, m)] = r_inverse_entry(N, q, i, j, j + m, i - m);
        }
    }
    mu_.resize(N);
    for (int i = 0; i < N; ++i) mu_[i] = mu_entry(N, q, i);
}

complex RMatrixTable::r(int i, int j, int k, int l) const {
    check_indices(N_, i, j, k, l);
    if (i + j != k + l) return 0.0;
    const int m = l - i;
    if (m < 0 || m > std::min(N_ - 1 - i, j)) return 0.0;
    return table_[idx(i, j, m)];
}

complex RMatrixTable::rinv(int i, int j, int k, int l) const {
    check_indices(N_, i, j, k, l);
    if (i + j != k + l) return 0.0;
    const int m = i - l;
    if (m < 0 || m > std::min(i, N_ - 1 - j)) return 0.0;
    return table_inv_[idx(i, j, m)];
}

StateTensor::StateTensor(int rank, int dim) : rank_(rank), dim_(dim) {
    if (rank < 0 || dim < 1)
        throw std::invalid_argument("StateTensor: rank must be >= 0 and dim >= 1");
    std::size_t size = 1;
    for (int t = 0; t < rank; ++t) size *= static_cast<std::size_t>(dim);
    data_.assign(size, complex(0.0));
}

StateTensor StateTensor::identity_operator(int factors, int dim) {
    StateTensor t(2 * factors, dim);
    std::size_t half = 1;
    for (int k = 0; k < factors; ++k) half *= static_cast<std::size_t>(dim);
    for (std::size_t d = 0; d < half; ++d) t.data_[d * half + d] = 1.0;
    return t;
}

StateTensor apply_crossing(const StateTensor& t, int pos, int sign,
                           const RMatrixTable& table) {
    const int r = t.rank();
    const int N = t.dim();
    if (pos < 1 || pos > r - 1)
        throw std::invalid_argument("apply_crossing: pos out of range [1, rank-1]");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("apply_crossing: sign must be +1 or -1");
    if (N != table.dim())
        throw std::invalid_argument("apply_crossing: tensor/table dimension mismatch");

    // legs pos, pos+1 (1-based, leg 1 most significant):
    // flat = ((outer*N + i)*N + j)*inner_size + inner
    std::size_t inner_size = 1;
    for (int te = pos + 2; te <= r; ++te) inner_size *= static_cast<std::size_t>(N);
    std::size_t outer_size = t.data().size() / (inner_size * N * N);

    StateTensor out(r, N);
    const complex* src = t.data().data();
    complex* dst = out.data().data();
    const std::size_t jstride = inner_size;
    const std::size_t istride = inner_size * N;

    for (std::size_t o = 0; o < outer_size; ++o) {
        const std::size_t obase = o * istride * N;
        for (int i = 0; i < N; ++i) {
            for (int j = 0; j < N; ++j) {
                // new[i,j] = sum_m R^{ij}_{kl} old[k,l]
                // R: (k,l) = (j-m, i+m);  R^{-1}: (k,l) = (j+m, i-m)
                const int mmax = (sign > 0) ? std::min(N - 1 - i, j) : std::min(i, N - 1 - j);
                complex* row = dst + obase + i * istride + j * jstride;
                for (int m = 0; m <= mmax; ++m) {
                    const complex coef =
                        (sign > 0) ? table.r_band(i, j, m) : table.rinv_band(i, j, m);
                    if (coef == complex(0.0)) continue;
                    const int k = (sign > 0) ? j - m : j + m;
                    const int l = (sign > 0) ? i + m : i - m;
                    const complex* col = src + obase + k * istride + l * jstride;
                    for (std::size_t in = 0; in < inner_size; ++in)
                        row[in] += coef * col[in];
                }
            }
        }
    }
    return out;
}

StateTensor partial_trace_last(const StateTensor& t, const std::vector<complex>* weight) {
    const int r = t.rank();
    const int N = t.dim();
    if (r < 2 || r % 2 != 0)
        throw std::invalid_argument("partial_trace_last: needs an operator carrier of raw rank 2k >= 2");
    if (weight && static_cast<int>(weight->size()) != N)
        throw std::invalid_argument("partial_trace_last: weight size mismatch");
    const int k = r / 2;
    // legs: (out_1..out_k, in_1..in_k); trace pairs out_k with in_k.
    // flat = ((O*N + jo)*half + I)*N + ji  with O over out_1..out_{k-1},
    // I over in_1..in_{k-1}, half = N^{k-1}.
    std::size_t half = 1;
    for (int te = 0; te < k - 1; ++te) half *= static_cast<std::size_t>(N);

    StateTensor out(2 * (k - 1), N);
    complex* dst = out.data().data();
    const complex* src = t.data().data();
    for (std::size_t O = 0; O < half; ++O) {
        for (std::size_t I = 0; I < half; ++I) {
            complex acc = 0.0;
            for (int j = 0; j < N; ++j) {
                complex v = src[((O * N + j) * half + I) * N + j];
                acc += weight ? v * (*weight)[j] : v;
            }
            dst[O * half + I] = acc;
        }
    }
    return out;
}

namespace {

double max_abs_diff(const StateTensor& a, const StateTensor& b) {
    double m = 0.0;
    for (std::size_t s = 0; s < a.data().size(); ++s)
        m = std::max(m, std::abs(a.data()[s] - b.data()[s]));
    return m;
}

} // namespace

double verify_yang_baxter(int N, const QExponent& q) {
    RMatrixTable table(N, q);
    StateTensor id = StateTensor::identity_operator(3, N);
    StateTensor lhs = apply_crossing(apply_crossing(apply_crossing(id, 1, 1, table), 2, 1, table), 1, 1, table);
    StateTensor rhs = apply_crossing(apply_crossing(apply_crossing(id, 2, 1, table), 1, 1, table), 2, 1, table);
    return max_abs_diff(lhs, rhs);
}

double verify_mu_commutation(int N, const QExponent& q) {
    RMatrixTable table(N, q);
    const auto& mu = table.mu();
    double worst = 0.0;
    // R (mu (x) mu) and (mu (x) mu) R as banded entry scans
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int m = 0; m <= std::min(N - 1 - i, j); ++m) {
                const int k = j - m, l = i + m;
                complex lhs = table.r(i, j, k, l) * mu[k] * mu[l];
                complex rhs = mu[i] * mu[j] * table.r(i, j, k, l);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
    return worst;
}

double verify_trace_axiom(int N, const QExponent& q) {
    EnhancedYB yb(N, q);
    const auto& mu = yb.table.mu();
    double worst = 0.0;
    for (int sign : {1, -1}) {
        StateTensor op = apply_crossing(StateTensor::identity_operator(2, N), 1, sign, yb.table);
        // fold Id (x) mu into the in_2 leg: entry (i,j; k,l) *= mu[l]
        auto& d = op.data();
        for (std::size_t s = 0; s < d.size(); ++s) {
            int l = static_cast<int>(s % N);
            d[s] *= mu[l];
        }
        StateTensor tr = partial_trace_last(op);
        complex target = (sign > 0) ? yb.a * yb.b : yb.b / yb.a;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                complex want = (i == k) ? target : complex(0.0);
                worst = std::max(worst, std::abs(tr.at(static_cast<std::size_t>(i) * N + k) - want));
            }
    }
    return worst;
}

} // namespace knotvol::tensorq
