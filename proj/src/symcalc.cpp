#include <cyp/symcalc.hpp>

#include <string>

namespace cyp::sym
{

UniSeries exp_series(const Rational &k, int trunc)
{
    UniSeries out(static_cast<std::size_t>(trunc) + 1);
    out[0] = Rational(1);
    for (int i = 1; i <= trunc; ++i) {
        out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i - 1)] * k / Rational(i);
    }
    return out;
}

UniSeries todd_series(int trunc)
{
    // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
    const UniSeries e = exp_series(Rational(-1), trunc + 1);
    UniSeries denom(static_cast<std::size_t>(trunc) + 1);
    for (int k = 0; k <= trunc; ++k) {
        denom[static_cast<std::size_t>(k)] = -e[static_cast<std::size_t>(k + 1)];
    }
    // q * denom = 1, solved term by term.
    UniSeries q(static_cast<std::size_t>(trunc) + 1);
    q[0] = Rational(1);
    for (int n = 1; n <= trunc; ++n) {
        Rational acc;
        for (int k = 1; k <= n; ++k) {
            acc += denom[static_cast<std::size_t>(k)] * q[static_cast<std::size_t>(n - k)];
        }
        q[static_cast<std::size_t>(n)] = -acc;
    }
    return q;
}

UniSeries log_series(const UniSeries &a)
{
    if (a.empty() || a[0] != Rational(1)) {
        throw DomainError("log_series needs constant term 1");
    }
    // n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}
    UniSeries b(a.size());
    for (std::size_t n = 1; n < a.size(); ++n) {
        Rational acc = Rational(static_cast<long>(n)) * a[n];
        for (std::size_t k = 1; k < n; ++k) {
            acc -= Rational(static_cast<long>(k)) * b[k] * a[n - k];
        }
        b[n] = acc / Rational(static_cast<long>(n));
    }
    return b;
}

RootSeries elementary_symmetric(int m, int k, int trunc)
{
    if (k < 0 || k > m) {
        throw DomainError("elementary_symmetric: k=" + std::to_string(k) + " outside [0, " +
                          std::to_string(m) + "]");
    }
    RootSeries out(m, trunc);
    // Enumerate k-subsets of {0..m-1} as bitmasks of popcount k.
    Exponents e(static_cast<std::size_t>(m), 0);
    const auto total = 1ull << static_cast<unsigned>(m);
    for (unsigned long long mask = 0; mask < total; ++mask) {
        if (__builtin_popcountll(mask) != k) {
            continue;
        }
        for (int i = 0; i < m; ++i) {
            e[static_cast<std::size_t>(i)] = static_cast<int>((mask >> static_cast<unsigned>(i)) & 1u);
        }
        out.add_term(e, Rational(1));
    }
    return out;
}

ChernSeries chern_class(int m, int k, int trunc)
{
    if (k == 0) {
        return ChernSeries::constant(m, trunc, Rational(1));
    }
    if (k < 0 || k > m) {
        return ChernSeries(m, trunc);
    }
    return ChernSeries::generator(m, trunc, k);
}

std::vector<ChernSeries> power_sums(int m, int trunc)
{
    std::vector<ChernSeries> p;
    p.reserve(static_cast<std::size_t>(trunc) + 1);
    p.push_back(ChernSeries::constant(m, trunc, Rational(m)));
    for (int k = 1; k <= trunc; ++k) {
        // p_k = sum_{i=1}^{k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k
        ChernSeries pk = chern_class(m, k, trunc) * Rational(k % 2 == 1 ? k : -k);
        for (int i = 1; i < k && i <= m; ++i) {
            ChernSeries t = chern_class(m, i, trunc) * p[static_cast<std::size_t>(k - i)];
            pk += i % 2 == 1 ? t : -t;
        }
        p.push_back(std::move(pk));
    }
    return p;
}

RootSeries expand_to_roots(const ChernSeries &s)
{
    const int m = s.num_vars();
    const int n = s.trunc();
    std::vector<RootSeries> e;
    for (int k = 1; k <= m; ++k) {
        e.push_back(elementary_symmetric(m, k, n));
    }
    std::vector<std::vector<RootSeries>> powers(static_cast<std::size_t>(m));
    auto power = [&](int k, int p) -> const RootSeries & {
        auto &pw = powers[static_cast<std::size_t>(k)];
        if (pw.empty()) {
            pw.push_back(RootSeries::constant(m, n, Rational(1)));
        }
        while (static_cast<int>(pw.size()) <= p) {
            pw.push_back(pw.back() * e[static_cast<std::size_t>(k)]);
        }
        return pw[static_cast<std::size_t>(p)];
    };
    RootSeries out(m, n);
    for (const auto &[ex, c] : s.terms()) {
        RootSeries term = RootSeries::constant(m, n, c);
        for (int k = 0; k < m; ++k) {
            if (ex[static_cast<std::size_t>(k)] != 0) {
                term *= power(k, ex[static_cast<std::size_t>(k)]);
            }
        }
        out += term;
    }
    return out;
}

namespace
{

void check_symmetric(const RootSeries &s)
{
    const int m = s.num_vars();
    for (int i = 0; i + 1 < m; ++i) {
        for (const auto &[e, c] : s.terms()) {
            Exponents swapped = e;
            std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i + 1)]);
            if (s.coeff(swapped) != c) {
                throw SymmetryError(i + 1, i + 2,
                                    "series is not symmetric under the transposition (x" +
                                        std::to_string(i + 1) + " x" + std::to_string(i + 2) + ")");
            }
        }
    }
}

} // namespace

ChernSeries symmetrize_to_chern(const RootSeries &s)
{
    check_symmetric(s);
    const int m = s.num_vars();
    const int n = s.trunc();
    ChernSeries out(m, n);
    RootSeries rest = s;
    // Peel off the lex-leading monomial x^a (a_1 >= ... >= a_m for a symmetric
    // series) as e_1^{a_1-a_2} ... e_m^{a_m}.
    while (!rest.is_zero()) {
        const auto &[lead, c] = *rest.terms().rbegin();
        Exponents cexp(static_cast<std::size_t>(m), 0);
        for (int k = 0; k < m; ++k) {
            const int next = k + 1 < m ? lead[static_cast<std::size_t>(k + 1)] : 0;
            cexp[static_cast<std::size_t>(k)] = lead[static_cast<std::size_t>(k)] - next;
        }
        const Rational coeff = c;
        ChernSeries mono(m, n);
        mono.add_term(cexp, coeff);
        rest -= expand_to_roots(mono);
        out += mono;
    }
    return out;
}

ChernSeries exp_nilpotent(const ChernSeries &f)
{
    if (!f.constant_term().is_zero()) {
        throw DomainError("exp_nilpotent needs a series without constant term");
    }
    const int m = f.num_vars();
    const int n = f.trunc();
    // Horner: 1 + F(1 + F/2(1 + F/3(...)))
    ChernSeries acc = ChernSeries::constant(m, n, Rational(1));
    for (int k = n; k >= 1; --k) {
        acc = ChernSeries::constant(m, n, Rational(1)) + (f * acc) * Rational(1, k);
    }
    return acc;
}

ChernSeries inverse(const ChernSeries &s)
{
    const Rational c0 = s.constant_term();
    if (c0.is_zero()) {
        throw DomainError("series with zero constant term is not invertible");
    }
    const int m = s.num_vars();
    const int n = s.trunc();
    // 1/s = (1/c0) * sum_k (-u)^k with u = s/c0 - 1
    const Rational inv0 = Rational(1) / c0;
    const ChernSeries u = s * inv0 - ChernSeries::constant(m, n, Rational(1));
    ChernSeries acc = ChernSeries::constant(m, n, Rational(1));
    for (int k = 0; k < n; ++k) {
        acc = ChernSeries::constant(m, n, Rational(1)) - u * acc;
    }
    return acc * inv0;
}

ChernSeries multiplicative_class(int m, int trunc, const UniSeries &q)
{
    if (static_cast<int>(q.size()) <= trunc) {
        throw DomainError("characteristic series shorter than truncation order");
    }
    UniSeries head(q.begin(), q.begin() + trunc + 1);
    const UniSeries logq = log_series(head);
    const auto p = power_sums(m, trunc);
    ChernSeries lg(m, trunc);
    for (int k = 1; k <= trunc; ++k) {
        lg += p[static_cast<std::size_t>(k)] * logq[static_cast<std::size_t>(k)];
    }
    return exp_nilpotent(lg);
}

ChernSeries todd(int m, int trunc)
{
    if (m < 1) {
        throw DomainError("todd needs at least one root");
    }
    return multiplicative_class(m, trunc, todd_series(trunc));
}

namespace
{

// Element of ChernSeries[t]/(t^2).
struct Dual {
    ChernSeries value;
    ChernSeries tangent;

    friend Dual operator*(const Dual &a, const Dual &b)
    {
        return {a.value * b.value, a.value * b.tangent + a.tangent * b.value};
    }
};

} // namespace

ChernSeries shift_derivative(const ChernSeries &s)
{
    const int m = s.num_vars();
    const int n = s.trunc();
    // c_k(x + t) = c_k + t (m - k + 1) c_{k-1} mod t^2
    std::vector<Dual> shifted;
    for (int k = 1; k <= m; ++k) {
        shifted.push_back({chern_class(m, k, n), chern_class(m, k - 1, n) * Rational(m - k + 1)});
    }
    const Dual one{ChernSeries::constant(m, n, Rational(1)), ChernSeries(m, n)};
    ChernSeries out(m, n);
    for (const auto &[e, c] : s.terms()) {
        Dual term = one;
        for (int k = 0; k < m; ++k) {
            for (int p = 0; p < e[static_cast<std::size_t>(k)]; ++p) {
                term = term * shifted[static_cast<std::size_t>(k)];
            }
        }
        out += term.tangent * c;
    }
    return out.truncated(n > 0 ? n - 1 : 0);
}

ChernSeries todd_prime(int m, int trunc)
{
    if (m < 1) {
        throw DomainError("todd_prime needs at least one root");
    }
    return shift_derivative(todd(m, trunc + 1)).truncated(trunc);
}

ChernSeries ch_exterior(int m, int r, int trunc)
{
    if (r < 0 || r > m) {
        throw DomainError("ch_exterior: r=" + std::to_string(r) + " outside [0, " + std::to_string(m) +
                          "]");
    }
    if (r == 0) {
        return ChernSeries::constant(m, trunc, Rational(1));
    }
    // Newton's identities for the variables y_j = e^{-x_j}, whose power sums are
    // P_k = sum_j e^{-k x_j} = sum_i (-k)^i p_i / i!.
    const auto p = power_sums(m, trunc);
    std::vector<ChernSeries> big_p(static_cast<std::size_t>(r) + 1, ChernSeries(m, trunc));
    for (int k = 1; k <= r; ++k) {
        const UniSeries w = exp_series(Rational(-k), trunc);
        for (int i = 0; i <= trunc; ++i) {
            big_p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
        }
    }
    std::vector<ChernSeries> e_y;
    e_y.push_back(ChernSeries::constant(m, trunc, Rational(1)));
    for (int k = 1; k <= r; ++k) {
        ChernSeries acc(m, trunc);
        for (int i = 1; i <= k; ++i) {
            ChernSeries t = e_y[static_cast<std::size_t>(k - i)] * big_p[static_cast<std::size_t>(i)];
            acc += i % 2 == 1 ? t : -t;
        }
        e_y.push_back(acc * Rational(1, k));
    }
    return e_y.back();
}

ChernSeries alternating_ch_sum(int m, int falling_power, int trunc)
{
    ChernSeries out(m, trunc);
    for (int r = 0; r <= m; ++r) {
        Rational w(1);
        for (int i = 0; i < falling_power; ++i) {
            w *= Rational(r - i);
        }
        if (w.is_zero()) {
            continue;
        }
        if (r % 2 == 1) {
            w = -w;
        }
        out += ch_exterior(m, r, trunc) * w;
    }
    return out;
}

namespace
{

void check_roots(int m)
{
    if (m < 1 || m > default_max_roots) {
        throw DomainError("identity check supports 1 <= m <= " + std::to_string(default_max_roots) +
                          ", got " + std::to_string(m));
    }
}

} // namespace

std::array<ChernSeries, 3> verify_todd_identities(int m)
{
    check_roots(m);
    const int n = m + 2;
    const ChernSeries td = todd(m, n);
    const auto c = [&](int k) { return chern_class(m, k, n); };

    const ChernSeries r0 = td * alternating_ch_sum(m, 0, n) - c(m);
    const ChernSeries r1 = (td * alternating_ch_sum(m, 1, n)).degree_upto(m) -
                           (c(m) * Rational(m, 2) - c(m - 1));
    const ChernSeries r2 = (td * alternating_ch_sum(m, 2, n)).degree_part(m) -
                           (c(1) * c(m - 1) * Rational(1, 6) + c(m) * Rational(m * (3 * m - 5), 12));
    return {r0, r1, r2};
}

std::array<ChernSeries, 2> verify_todd_prime_identities(int m)
{
    check_roots(m);
    const int n = m + 2;
    const ChernSeries tdp = todd_prime(m, n);
    const auto c = [&](int k) { return chern_class(m, k, n); };

    const ChernSeries r0 = (tdp * alternating_ch_sum(m, 0, n)).degree_part(m) - c(m) * Rational(m, 2);
    const ChernSeries r1 = (tdp * alternating_ch_sum(m, 1, n)).degree_part(m) -
                           (c(1) * c(m - 1) * Rational(1, 12) + c(m) * Rational(m * m, 4));
    return {r0, r1};
}

ChernSeries todd_log_derivative_low(int m)
{
    return (todd_prime(m, 1) * inverse(todd(m, 1))).degree_upto(1);
}

} // namespace cyp::sym
