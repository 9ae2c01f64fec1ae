#pragma once

#include <complex>
#include <vector>

#include "knotvol/errors.hpp"

namespace knotvol::tensorq {

using complex = std::complex<double>;

// The parameter q carried as a logarithm h (q = e^h), so every fractional
// power q^r := exp(r h) is single-valued.
struct QExponent {
    complex h{0.0, 0.0};

    complex q() const { return std::exp(h); }
    complex pow(double r) const { return std::exp(r * h); }

    // q = exp(2 pi i / M)
    static QExponent root_of_unity(int M);
    // q = exp(theta / N), the deformed evaluation point
    static QExponent from_theta(complex theta, int N);
};

// {m} = q^{m/2} - q^{-m/2}
complex qnum(int m, const QExponent& q);

// {m}! = {1}{2}...{m}, {0}! = 1; throws on m < 0
complex qfact(int m, const QExponent& q);

// Entries of the sl2 R-matrix and its inverse in the basis e_0..e_{N-1};
// (i,j) are output indices, (k,l) input indices: R(e_k (x) e_l) =
// sum R^{ij}_{kl} e_i (x) e_j. Nonzero only on the band i+j = k+l with
// l >= i, k <= j for R and l <= i, k >= j for R^{-1}.
complex r_entry(int N, const QExponent& q, int i, int j, int k, int l);
complex r_inverse_entry(int N, const QExponent& q, int i, int j, int k, int l);

// mu^i_i = q^{(2i - N + 1)/2}
complex mu_entry(int N, const QExponent& q, int i);

// Memoized banded table of R and R^{-1} entries, O(N^3) storage.
// Immutable after construction.
class RMatrixTable {
public:
    RMatrixTable(int N, const QExponent& q);

    int dim() const { return N_; }
    const QExponent& q() const { return q_; }

    // Band entry by offset m: for R, (k,l) = (j-m, i+m); for R^{-1},
    // (k,l) = (j+m, i-m). Returns 0 outside the band.
    complex r_band(int i, int j, int m) const { return table_[idx(i, j, m)]; }
    complex rinv_band(int i, int j, int m) const { return table_inv_[idx(i, j, m)]; }

    complex r(int i, int j, int k, int l) const;
    complex rinv(int i, int j, int k, int l) const;

    const std::vector<complex>& mu() const { return mu_; }

private:
    std::size_t idx(int i, int j, int m) const {
        return (static_cast<std::size_t>(i) * N_ + j) * N_ + m;
    }
    int N_;
    QExponent q_;
    std::vector<complex> table_, table_inv_;
    std::vector<complex> mu_;
};

// The enhanced operator quadruple (R, mu, a, b) with a = q^{(N^2-1)/4}, b = 1.
struct EnhancedYB {
    RMatrixTable table;
    complex a;
    complex b;

    EnhancedYB(int N, const QExponent& q)
        : table(N, q), a(q.pow((static_cast<double>(N) * N - 1) / 4.0)), b(1.0) {}
};

// Dense rank-r tensor over (C^N)^{(x) r}, index (i_1,...,i_r) mixed-radix
// with i_1 most significant. Operator carriers on V^{(x) k} are stored as
// rank-2k tensors with legs (out_1..out_k, in_1..in_k). All operations are
// pure: inputs unchanged, fresh outputs.
class StateTensor {
public:
    StateTensor(int rank, int dim);

    static StateTensor identity_operator(int factors, int dim);

    int rank() const { return rank_; }
    int dim() const { return dim_; }
    const std::vector<complex>& data() const { return data_; }
    std::vector<complex>& data() { return data_; }

    complex& at(std::size_t flat) { return data_[flat]; }
    const complex& at(std::size_t flat) const { return data_[flat]; }

private:
    int rank_;
    int dim_;
    std::vector<complex> data_;
};

// Contract R^{sign} into legs (pos, pos+1), 1-based; cost O(N^{rank+1})
// thanks to the band. sign is +1 or -1.
StateTensor apply_crossing(const StateTensor& t, int pos, int sign,
                           const RMatrixTable& table);

// Partial trace over the last tensor factor of an operator carrier: the
// input is interpreted as an operator on V^{(x) k} (raw rank 2k) and the
// traced leg pairs out_k with in_k, optionally weighted by a diagonal.
// The factor count drops by one; k = 1 yields a rank-0 scalar.
StateTensor partial_trace_last(const StateTensor& t,
                               const std::vector<complex>* weight = nullptr);

// Residual of the Yang-Baxter equation (R(x)Id)(Id(x)R)(R(x)Id) =
// (Id(x)R)(R(x)Id)(Id(x)R) on V^{(x) 3}, max-abs over entries.
double verify_yang_baxter(int N, const QExponent& q);

// Residual of R(mu (x) mu) = (mu (x) mu)R.
double verify_mu_commutation(int N, const QExponent& q);

// Residual of Tr_2(R^{+-1}(Id (x) mu)) = a^{+-1} b Id_V (worse of the two signs).
double verify_trace_axiom(int N, const QExponent& q);

} // namespace knotvol::tensorq
