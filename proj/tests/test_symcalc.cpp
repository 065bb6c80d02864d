#include <doctest.h>

#include <random>

#include <cyp/symcalc.hpp>

#include "oracles.hpp"

using namespace cyp;
using namespace cyp::sym;

namespace
{

ChernSeries c(int m, int trunc, int k) { return chern_class(m, k, trunc); }

ChernSeries random_chern_series(std::mt19937_64 &rng, int m, int trunc)
{
    ChernSeries s(m, trunc);
    std::uniform_int_distribution<int> count(0, 6);
    std::uniform_int_distribution<int> expo(0, 2);
    const int n = count(rng);
    for (int t = 0; t < n; ++t) {
        Exponents e(static_cast<std::size_t>(m));
        for (auto &x : e) {
            x = expo(rng);
        }
        s.add_term(e, oracle::small_rational(rng));
    }
    return s;
}

} // namespace

TEST_CASE("todd series coefficients")
{
    const UniSeries q = todd_series(6);
    const auto ref = oracle::todd_coeffs(6);
    REQUIRE(q.size() == ref.size());
    for (std::size_t k = 0; k < q.size(); ++k) {
        CHECK(q[k] == ref[k]);
    }
    CHECK(q[1] == Rational(1, 2));
    CHECK(q[2] == Rational(1, 12));
    CHECK(q[3].is_zero());
    CHECK(q[4] == Rational(-1, 720));
}

TEST_CASE("log of the Todd series")
{
    // log(x / (1 - e^{-x})) = x/2 - log(sinh(x/2) / (x/2)) = x/2 - x^2/24 + x^4/2880 - ...
    const UniSeries l = log_series(todd_series(5));
    CHECK(l[0].is_zero());
    CHECK(l[1] == Rational(1, 2));
    CHECK(l[2] == Rational(-1, 24));
    CHECK(l[3].is_zero());
    CHECK(l[4] == Rational(1, 2880));
    CHECK(l[5].is_zero());
    CHECK_THROWS_AS(log_series(UniSeries{Rational(2), Rational(1)}), DomainError);
}

TEST_CASE("low-degree Todd class")
{
    const int N = 2;
    for (int m = 2; m <= 6; ++m) {
        const ChernSeries expected = ChernSeries::constant(m, N, Rational(1)) + Rational(1, 2) * c(m, N, 1) +
                                     Rational(1, 12) * (c(m, N, 1) * c(m, N, 1) + c(m, N, 2));
        CHECK(todd(m, N) == expected);
    }
    CHECK(todd(2, 2).str() == "1 + 1/2*c1 + 1/12*c2 + 1/12*c1^2");
    CHECK(todd(1, 2).str() == "1 + 1/2*c1 + 1/12*c1^2");
    CHECK(todd(2, 2).degree_part(0) == ChernSeries::constant(2, 2, Rational(1)));
}

TEST_CASE("Todd class agrees with the product over roots")
{
    for (int m = 1; m <= 5; ++m) {
        const int N = m + 2;
        CAPTURE(m);
        CHECK(expand_to_roots(todd(m, N)) == oracle::todd_roots(m, N));
    }
}

TEST_CASE("derived Todd class agrees with the root-wise derivative")
{
    for (int m = 1; m <= 4; ++m) {
        const int N = m + 1;
        CAPTURE(m);
        CHECK(expand_to_roots(todd_prime(m, N)) == oracle::todd_prime_roots(m, N));
    }
}

TEST_CASE("log derivative of Todd in low degree")
{
    for (int m = 1; m <= 6; ++m) {
        CAPTURE(m);
        const ChernSeries expected =
            ChernSeries::constant(m, 1, Rational(m, 2)) - Rational(1, 12) * chern_class(m, 1, 1);
        CHECK(todd_log_derivative_low(m) == expected);
    }
    CHECK(todd_log_derivative_low(1).str() == "1/2 - 1/12*c1");
    CHECK(todd_log_derivative_low(3).str() == "3/2 - 1/12*c1");
}

TEST_CASE("Chern characters of exterior powers")
{
    for (int m = 1; m <= 4; ++m) {
        for (int r = 0; r <= m; ++r) {
            CAPTURE(m);
            CAPTURE(r);
            CHECK(expand_to_roots(ch_exterior(m, r, 4)) == oracle::ch_exterior_roots(m, r, 4));
        }
    }
    CHECK_THROWS_AS(ch_exterior(2, 3, 2), DomainError);
}

TEST_CASE("generating function of the alternating sum")
{
    for (int m = 1; m <= 4; ++m) {
        CAPTURE(m);
        CHECK(expand_to_roots(alternating_ch_sum(m, 0, m + 2)) == oracle::one_minus_exp_roots(m, m + 2));
    }
}

TEST_CASE("Newton identities")
{
    const auto p = power_sums(2, 3);
    CHECK(p[0] == ChernSeries::constant(2, 3, Rational(2)));
    CHECK(p[1] == c(2, 3, 1));
    CHECK(p[2] == c(2, 3, 1) * c(2, 3, 1) - Rational(2) * c(2, 3, 2));
    CHECK(p[3] == c(2, 3, 1) * c(2, 3, 1) * c(2, 3, 1) - Rational(3) * c(2, 3, 1) * c(2, 3, 2));

    // p_k = sum_i x_i^k for four roots.
    const auto p4 = power_sums(4, 5);
    for (int k = 1; k <= 5; ++k) {
        RootSeries direct(4, 5);
        for (int i = 0; i < 4; ++i) {
            Exponents e(4, 0);
            e[static_cast<std::size_t>(i)] = k;
            direct.add_term(e, Rational(1));
        }
        CHECK(expand_to_roots(p4[static_cast<std::size_t>(k)]) == direct);
    }
}

TEST_CASE("Chern classes beyond the rank vanish")
{
    CHECK(chern_class(2, 3, 4).is_zero());
    CHECK(chern_class(2, 0, 4) == ChernSeries::constant(2, 4, Rational(1)));
    CHECK_THROWS_AS(elementary_symmetric(2, 3, 4), DomainError);
}

TEST_CASE("symmetrization rejects non-symmetric input")
{
    RootSeries x1 = RootSeries::generator(3, 2, 1);
    try {
        symmetrize_to_chern(x1);
        FAIL("expected SymmetryError");
    } catch (const SymmetryError &e) {
        CHECK(e.first == 1);
        CHECK(e.second == 2);
    }
    RootSeries x3 = RootSeries::generator(3, 2, 3);
    try {
        symmetrize_to_chern(RootSeries::generator(3, 2, 1) + RootSeries::generator(3, 2, 2) + x3 * x3);
        FAIL("expected SymmetryError");
    } catch (const SymmetryError &e) {
        CHECK(e.first == 2);
        CHECK(e.second == 3);
    }
}

TEST_CASE("change of basis round trip on random series")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 4);
        const int N = 1 + static_cast<int>(rng() % 6);
        const ChernSeries s = random_chern_series(rng, m, N);
        CHECK(symmetrize_to_chern(expand_to_roots(s)) == s);
    }
}

TEST_CASE("truncation coherence")
{
    for (int m = 1; m <= 4; ++m) {
        for (int lo = 0; lo <= 4; ++lo) {
            CAPTURE(m);
            CAPTURE(lo);
            CHECK(todd(m, 6).truncated(lo) == todd(m, lo));
            CHECK(todd_prime(m, 6).truncated(lo) == todd_prime(m, lo));
            CHECK(ch_exterior(m, m / 2, 6).truncated(lo) == ch_exterior(m, m / 2, lo));
        }
    }
}

TEST_CASE("Todd class is multiplicative under splitting the roots")
{
    const int N = 4;
    for (int m1 = 1; m1 <= 3; ++m1) {
        for (int m2 = 1; m2 <= 3; ++m2) {
            const int m = m1 + m2;
            const RootSeries lhs = expand_to_roots(todd(m, N));
            const RootSeries rhs = oracle::embed(expand_to_roots(todd(m1, N)), m, 0) *
                                   oracle::embed(expand_to_roots(todd(m2, N)), m, m1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("shift derivative of c_1 and c_2")
{
    // c_1 -> c_1 + m t, c_2 -> c_2 + (m-1) t c_1
    const int m = 3;
    CHECK(shift_derivative(chern_class(m, 1, 3)) == ChernSeries::constant(m, 2, Rational(3)));
    CHECK(shift_derivative(chern_class(m, 2, 3)) == Rational(2) * chern_class(m, 1, 2));
}

TEST_CASE("rank-one identity by hand")
{
    // Td(x) (1 - e^{-x}) = x
    const ChernSeries prod = todd(1, 5) * alternating_ch_sum(1, 0, 5);
    CHECK(prod == chern_class(1, 1, 5));
}

TEST_CASE("all identity residuals vanish")
{
    for (int m = 1; m <= default_max_roots; ++m) {
        CAPTURE(m);
        for (const auto &r : verify_todd_identities(m)) {
            CHECK(r.is_zero());
        }
        for (const auto &r : verify_todd_prime_identities(m)) {
            CHECK(r.is_zero());
        }
    }
    CHECK_THROWS_AS(verify_todd_identities(0), DomainError);
    CHECK_THROWS_AS(verify_todd_prime_identities(default_max_roots + 1), DomainError);
}

TEST_CASE("evaluation at concrete classes")
{
    // A number stands in for the class; Td(x) to order 2 is 1 + x/2 + x^2/12.
    const ChernSeries t = todd(1, 2);
    Rational x(3);
    const std::vector<Rational> classes = {x};
    const Rational value = evaluate<Rational>(t, classes, Rational(1));
    CHECK(value == Rational(1) + Rational(3, 2) + Rational(9, 12));
}
