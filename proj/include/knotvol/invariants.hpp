#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "knotvol/braid.hpp"
#include "knotvol/tensorq.hpp"

namespace knotvol::invariants {

using tensorq::QExponent;
using tensorq::complex;

enum class Method {
    state_sum,
    tangle_scalar,
    fig8_double_sum,
    fig8_product,
    fig8_single_sum,
};

std::string method_name(Method m);

// A computed invariant value tagged with the evaluation route, so callers
// can diff independent routes against each other.
struct InvariantValue {
    complex value;
    int color;
    QExponent q;
    Method method;
};

// T_{(R,mu,a,1)}(beta) = a^{-w(beta)} Tr_1(...Tr_n(Phi(beta) mu^{(x) n})...)
// with a = q^{(N^2-1)/4}. Invariant of the closure of beta.
complex trace_invariant(const braid::BraidWord& b, int N, const QExponent& q);

// J_N(closure of b; q) = trace_invariant x {1}/{N}. Throws MathError when
// {N} vanishes at q (e.g. q = xi_N) -- use tangle_scalar there.
InvariantValue colored_jones(const braid::BraidWord& b, int N, const QExponent& q);

// The (1,1)-tangle scalar: close every strand but the first, weight closed
// strands with mu; Schur's lemma makes the remaining endomorphism S.Id_V and
// a^{-w} S equals the normalized J_N. Well-defined at q = xi_N.
// Requires the closure of b to be a knot.
InvariantValue tangle_scalar(const braid::BraidWord& b, int N, const QExponent& q);

// <L>_N = J_N(L; exp(2 pi i / N)), evaluated through the tangle scalar.
complex kashaev(const braid::BraidWord& b, int N);

// Figure-eight closed forms (three independent routes).
InvariantValue fig8_double_sum(int N, const QExponent& q);
InvariantValue fig8_product(int N, const QExponent& q);
InvariantValue fig8_single_sum(int N, const QExponent& q);

// |q J_2(L+) - q^{-1} J_2(L-) - (q^{1/2}-q^{-1/2}) J_2(L0)| for a skein
// triple of braids (caller guarantees they differ at one crossing site).
double skein_residual_n2(const braid::BraidWord& l_plus, const braid::BraidWord& l_minus,
                         const braid::BraidWord& l_zero, const QExponent& q);

// State-sum size guard used by callers that accept arbitrary braids.
void check_state_sum_guard(const braid::BraidWord& b, int N, std::uint64_t max_cells = 10'000'000);

namespace detail {
// The mu-closed braid homomorphism Tr_2^mu(...Tr_n^mu(Phi(beta))...) as an
// endomorphism of V. Carriers above carrier_cell_cap cells fall back to the
// memory-frugal column sweep. Exposed so tests can drive both paths.
tensorq::StateTensor reduced_operator(const braid::BraidWord& b,
                                      const tensorq::RMatrixTable& table,
                                      std::uint64_t carrier_cell_cap);
} // namespace detail

} // namespace knotvol::invariants
