#ifndef CYPAIRS_TESTS_ORACLES_HPP
#define CYPAIRS_TESTS_ORACLES_HPP

// Reference computations that take a different route from the library:
// everything here works directly in the root variables, with Bernoulli
// numbers from their recursion instead of series division.

#include <cstdint>
#include <random>
#include <vector>

#include <cyp/rational.hpp>
#include <cyp/symcalc.hpp>

namespace oracle
{

using cyp::Rational;
using cyp::sym::Exponents;
using cyp::sym::RootSeries;

// B_0..B_n with B_1 = -1/2.
inline std::vector<Rational> bernoulli(int n)
{
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    b[0] = Rational(1);
    for (int k = 1; k <= n; ++k) {
        Rational s;
        for (int j = 0; j < k; ++j) {
            s += cyp::binomial(k + 1, j) * b[static_cast<std::size_t>(j)];
        }
        b[static_cast<std::size_t>(k)] = -s / Rational(k + 1);
    }
    return b;
}

// Coefficients of x / (1 - e^{-x}) = sum_n (-1)^n B_n x^n / n!.
inline std::vector<Rational> todd_coeffs(int n)
{
    const auto b = bernoulli(n);
    std::vector<Rational> out;
    Rational fact(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            fact *= Rational(k);
        }
        out.push_back((k % 2 == 0 ? b[static_cast<std::size_t>(k)] : -b[static_cast<std::size_t>(k)]) / fact);
    }
    return out;
}

// e^{-x} coefficients.
inline std::vector<Rational> exp_neg_coeffs(int n)
{
    std::vector<Rational> out;
    Rational fact(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            fact *= Rational(k);
        }
        out.push_back((k % 2 == 0 ? Rational(1) : Rational(-1)) / fact);
    }
    return out;
}

inline std::vector<Rational> derivative(const std::vector<Rational> &a)
{
    std::vector<Rational> out;
    for (std::size_t k = 1; k < a.size(); ++k) {
        out.push_back(a[k] * Rational(static_cast<long>(k)));
    }
    out.push_back(Rational(0));
    return out;
}

// sum_k a_k x_i^k as a root series in m variables.
inline RootSeries in_root(int m, int trunc, int i, const std::vector<Rational> &a)
{
    RootSeries s(m, trunc);
    for (std::size_t k = 0; k < a.size() && static_cast<int>(k) <= trunc; ++k) {
        Exponents e(static_cast<std::size_t>(m), 0);
        e[static_cast<std::size_t>(i)] = static_cast<int>(k);
        s.add_term(e, a[k]);
    }
    return s;
}

inline RootSeries todd_roots(int m, int trunc)
{
    const auto q = todd_coeffs(trunc);
    RootSeries out = RootSeries::constant(m, trunc, Rational(1));
    for (int i = 0; i < m; ++i) {
        out = out * in_root(m, trunc, i, q);
    }
    return out;
}

// sum_j Q'(x_j) prod_{i != j} Q(x_i)
inline RootSeries todd_prime_roots(int m, int trunc)
{
    const auto q = todd_coeffs(trunc + 1);
    const auto dq = derivative(q);
    RootSeries out(m, trunc);
    for (int j = 0; j < m; ++j) {
        RootSeries term = RootSeries::constant(m, trunc, Rational(1));
        for (int i = 0; i < m; ++i) {
            term = term * in_root(m, trunc, i, i == j ? dq : q);
        }
        out += term;
    }
    return out;
}

// e_r(e^{-x_1}, ..., e^{-x_m}) by summing over r-subsets.
inline RootSeries ch_exterior_roots(int m, int r, int trunc)
{
    const auto e = exp_neg_coeffs(trunc);
    RootSeries out(m, trunc);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != r) {
            continue;
        }
        RootSeries term = RootSeries::constant(m, trunc, Rational(1));
        for (int i = 0; i < m; ++i) {
            if (mask & (1u << i)) {
                term = term * in_root(m, trunc, i, e);
            }
        }
        out += term;
    }
    return out;
}

// prod_j (1 - e^{-x_j})
inline RootSeries one_minus_exp_roots(int m, int trunc)
{
    auto a = exp_neg_coeffs(trunc);
    for (auto &c : a) {
        c = -c;
    }
    a[0] += Rational(1);
    RootSeries out = RootSeries::constant(m, trunc, Rational(1));
    for (int i = 0; i < m; ++i) {
        out = out * in_root(m, trunc, i, a);
    }
    return out;
}

// Re-embeds a series in m variables into m + extra variables, shifting the
// variable indices by offset.
inline RootSeries embed(const RootSeries &s, int total, int offset)
{
    RootSeries out(total, s.trunc());
    for (const auto &[e, c] : s.terms()) {
        Exponents big(static_cast<std::size_t>(total), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            big[i + static_cast<std::size_t>(offset)] = e[i];
        }
        out.add_term(big, c);
    }
    return out;
}

inline Rational small_rational(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    return Rational(num(rng), den(rng));
}

} // namespace oracle

#endif
