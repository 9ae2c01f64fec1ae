#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotvol/invariants.hpp"
#include "oracles.hpp"

using namespace knotvol;
using namespace knotvol::invariants;
using braid::BraidWord;
using braid::parse_braid;

namespace {

const BraidWord kFig8 = parse_braid("1 -2 1 -2");

QExponent generic_q(int salt) {
    std::mt19937_64 rng(900 + salt);
    std::uniform_real_distribution<double> re(-0.3, 0.3);
    std::uniform_real_distribution<double> im(0.05, 1.2);
    return {complex(re(rng), im(rng))};
}

double rel_err(complex a, complex b) {
    double scale = std::max({std::abs(a), std::abs(b), 1e-30});
    return std::abs(a - b) / scale;
}

} // namespace

TEST_CASE("trace invariant of the trivial braid is Tr(mu)") {
    for (int N : {1, 2, 3, 7}) {
        QExponent q = generic_q(N);
        complex t = trace_invariant(parse_braid("", 1), N, q);
        CHECK(std::abs(t - tensorq::qnum(N, q) / tensorq::qnum(1, q)) < 1e-12);
    }
}

TEST_CASE("trace invariant is Markov invariant") {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> nd(2, 3), len(1, 6), sgn(0, 1);
    for (int t = 0; t < 10; ++t) {
        int n = nd(rng);
        std::uniform_int_distribution<int> idx(1, n - 1);
        std::vector<braid::BraidLetter> ls;
        for (int k = len(rng); k > 0; --k) ls.push_back({idx(rng), sgn(rng) ? 1 : -1});
        BraidWord b(n, ls);
        std::vector<braid::BraidLetter> cl = {{idx(rng), sgn(rng) ? 1 : -1}};
        BraidWord a(n, cl);
        QExponent q = generic_q(200 + t);
        for (int N : {2, 3}) {
            complex base = trace_invariant(b, N, q);
            CHECK(rel_err(base, trace_invariant(braid::conjugate(b, a), N, q)) < 1e-9);
            CHECK(rel_err(base, trace_invariant(braid::stabilize(b, 1), N, q)) < 1e-9);
            CHECK(rel_err(base, trace_invariant(braid::stabilize(b, -1), N, q)) < 1e-9);
        }
    }
}

TEST_CASE("unknot normalization across presentations") {
    const std::vector<BraidWord> unknots = {
        parse_braid("", 1), parse_braid("1", 2), parse_braid("1 2", 3)};
    for (int N = 1; N <= 10; ++N) {
        QExponent q = generic_q(3 * N);
        for (const auto& b : unknots) {
            complex j = colored_jones(b, N, q).value;
            CHECK(std::abs(j - complex(1.0)) < 1e-11);
        }
    }
}

TEST_CASE("N=1 colored Jones is 1 for every braid") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> nd(2, 4), len(1, 8), sgn(0, 1);
    for (int t = 0; t < 20; ++t) {
        int n = nd(rng);
        std::uniform_int_distribution<int> idx(1, n - 1);
        std::vector<braid::BraidLetter> ls;
        for (int k = len(rng); k > 0; --k) ls.push_back({idx(rng), sgn(rng) ? 1 : -1});
        BraidWord b(n, ls);
        CHECK(std::abs(colored_jones(b, 1, generic_q(t)).value - complex(1.0)) < 1e-13);
    }
}

TEST_CASE("colored_jones refuses vanishing {N}") {
    CHECK_THROWS_AS(colored_jones(kFig8, 3, QExponent::root_of_unity(3)), MathError);
}

TEST_CASE("tangle scalar matches colored Jones for the figure-eight") {
    for (int N = 2; N <= 8; ++N) {
        QExponent q = generic_q(5 * N);
        complex cj = colored_jones(kFig8, N, q).value;
        complex ts = tangle_scalar(kFig8, N, q).value;
        CHECK(rel_err(cj, ts) < 1e-9);
    }
    // unknot tangle scalar
    CHECK(std::abs(tangle_scalar(parse_braid("1", 2), 5, generic_q(77)).value - complex(1.0)) < 1e-12);
    // closure must be a knot
    CHECK_THROWS_AS(tangle_scalar(parse_braid("1 1", 2), 2, generic_q(1)), MathError);
}

TEST_CASE("Kashaev invariants of the figure-eight") {
    CHECK(std::abs(kashaev(kFig8, 2) - complex(5.0)) < 1e-10);
    CHECK(std::abs(kashaev(kFig8, 3) - complex(13.0)) < 1e-10);
    CHECK(std::abs(kashaev(parse_braid("1", 2), 7) - complex(1.0)) < 1e-10);
    CHECK_THROWS_AS(kashaev(kFig8, 1), std::invalid_argument);
    // tangle scalar at xi_2 equals 5 too (method route)
    auto v = tangle_scalar(kFig8, 2, QExponent::root_of_unity(2));
    CHECK(v.method == Method::tangle_scalar);
    CHECK(std::abs(v.value - complex(5.0)) < 1e-10);
}

TEST_CASE("figure-eight four-way formula agreement") {
    for (int N = 1; N <= 8; ++N) {
        for (int salt = 0; salt < 3; ++salt) {
            QExponent q = generic_q(100 + 7 * N + salt);
            complex state = (N == 1) ? colored_jones(kFig8, 1, q).value
                                     : tangle_scalar(kFig8, N, q).value;
            complex dbl = fig8_double_sum(N, q).value;
            complex prod = fig8_product(N, q).value;
            complex sgl = fig8_single_sum(N, q).value;
            CHECK(rel_err(state, dbl) < 1e-9);
            CHECK(rel_err(state, prod) < 1e-9);
            CHECK(rel_err(state, sgl) < 1e-9);
        }
    }
}

TEST_CASE("figure-eight closed forms at roots of unity") {
    QExponent xi2 = QExponent::root_of_unity(2);
    CHECK(std::abs(fig8_product(2, xi2).value - complex(5.0)) < 1e-12);
    CHECK(std::abs(fig8_double_sum(2, xi2).value - complex(5.0)) < 1e-12);
    QExponent xi3 = QExponent::root_of_unity(3);
    CHECK(std::abs(fig8_product(3, xi3).value - complex(13.0)) < 1e-12);
    // single sum not defined at xi_N
    CHECK_THROWS_AS(fig8_single_sum(3, xi3), MathError);
    // N=1 trivial cases
    QExponent q = generic_q(9);
    CHECK(std::abs(fig8_product(1, q).value - complex(1.0)) == 0.0);
    CHECK(std::abs(fig8_double_sum(1, q).value - complex(1.0)) < 1e-14);
    CHECK(std::abs(fig8_single_sum(1, q).value - complex(1.0)) < 1e-14);
}

TEST_CASE("J_N at xi_N of the figure-eight is real positive") {
    for (int N = 2; N <= 50; ++N) {
        complex j = fig8_product(N, QExponent::root_of_unity(N)).value;
        CHECK(j.real() > 0.0);
        CHECK(std::abs(j.imag()) < 1e-8 * std::abs(j.real()));
    }
}

TEST_CASE("skein relation residuals") {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> im(0.1, 1.5);
    std::uniform_real_distribution<double> re(-0.3, 0.3);
    auto trefoil = parse_braid("1 1 1");
    auto unknot2 = parse_braid("1", 2);
    auto hopf = parse_braid("1 1");
    for (int t = 0; t < 10; ++t) {
        QExponent q{complex(re(rng), im(rng))};
        CHECK(skein_residual_n2(trefoil, unknot2, hopf, q) < 1e-10);
    }
}

TEST_CASE("skein relation on the sigma_1 / sigma_1^{-1} / identity triple") {
    auto s1 = parse_braid("1", 2);
    auto s1inv = parse_braid("-1", 2);
    auto id2 = parse_braid("", 2);
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> im(0.1, 1.5);
    for (int t = 0; t < 10; ++t) {
        QExponent q{complex(0.0, im(rng))};
        CHECK(skein_residual_n2(s1, s1inv, id2, q) < 1e-12);
    }
}

TEST_CASE("Markov invariance under conjugation and stabilization") {
    QExponent q = generic_q(73);
    for (int N : {2, 3}) {
        complex base = colored_jones(kFig8, N, q).value;
        auto conj = braid::conjugate(kFig8, parse_braid("2 -1", 3));
        CHECK(rel_err(base, colored_jones(conj, N, q).value) < 1e-9);
        for (int sign : {1, -1}) {
            auto stab = braid::stabilize(kFig8, sign);
            CHECK(rel_err(base, colored_jones(stab, N, q).value) < 1e-9);
        }
    }
}

TEST_CASE("Markov invariance fuzz (reduced)") {
    std::mt19937_64 rng(79);
    std::uniform_int_distribution<int> nd(2, 4), len(1, 8), sgn(0, 1);
    QExponent q = generic_q(83);
    for (int t = 0; t < 15; ++t) {
        int n = nd(rng);
        std::uniform_int_distribution<int> idx(1, n - 1);
        std::vector<braid::BraidLetter> ls;
        for (int k = len(rng); k > 0; --k) ls.push_back({idx(rng), sgn(rng) ? 1 : -1});
        BraidWord b(n, ls);
        BraidWord walked = braid::random_markov_walk(b, 10, 5000 + t);
        for (int N : {2, 3}) {
            complex a = colored_jones(b, N, q).value;
            complex c = colored_jones(walked, N, q).value;
            CHECK(rel_err(a, c) < 1e-8);
        }
    }
}

TEST_CASE("carrier and column contraction modes agree") {
    QExponent q = generic_q(89);
    for (int N : {2, 3}) {
        tensorq::RMatrixTable table(N, q);
        auto carrier = detail::reduced_operator(kFig8, table, std::uint64_t(1) << 26);
        auto column = detail::reduced_operator(kFig8, table, 1); // forces the sweep
        REQUIRE(carrier.data().size() == column.data().size());
        for (std::size_t s = 0; s < carrier.data().size(); ++s)
            CHECK(std::abs(carrier.data()[s] - column.data()[s]) < 1e-12);
    }
}

TEST_CASE("state sum guard") {
    CHECK_THROWS_AS(check_state_sum_guard(parse_braid("1 2 3 4 5 6 7"), 20), GuardError);
    CHECK_NOTHROW(check_state_sum_guard(kFig8, 10));
}

TEST_CASE("method tags are recorded") {
    QExponent q = generic_q(97);
    CHECK(colored_jones(kFig8, 2, q).method == Method::state_sum);
    CHECK(fig8_product(2, q).method == Method::fig8_product);
    CHECK(fig8_double_sum(2, q).method == Method::fig8_double_sum);
    CHECK(fig8_single_sum(2, q).method == Method::fig8_single_sum);
    CHECK(method_name(Method::tangle_scalar) == "tangle_scalar");
}
