#ifndef CYP_SYMCALC_HPP
#define CYP_SYMCALC_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <iterator>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <cyp/errors.hpp>
#include <cyp/rational.hpp>

// Truncated symmetric-function calculus in Chern roots.
//
// Two graded series types share one implementation: RootSeries lives in
// Q[x_1..x_m] with every root of degree 1, ChernSeries lives in
// Q[c_1..c_m] with c_k of degree k. Both are stored sparsely with sorted
// exponent keys, never hold a zero coefficient and never hold a term above
// their truncation order.
namespace cyp::sym
{

using Exponents = std::vector<int>;

struct RootGrading {
    static int weight(std::size_t /*index*/) { return 1; }
    static constexpr const char *symbol = "x";
};

struct ChernGrading {
    static int weight(std::size_t index) { return static_cast<int>(index) + 1; }
    static constexpr const char *symbol = "c";
};

template <class Grading>
class GradedSeries
{
public:
    using Terms = std::map<Exponents, Rational>;

    GradedSeries(int num_vars, int trunc) : m_(num_vars), n_(trunc)
    {
        if (num_vars < 0 || trunc < 0) {
            throw DomainError("series needs non-negative variable count and truncation order");
        }
    }

    static GradedSeries constant(int num_vars, int trunc, const Rational &c)
    {
        GradedSeries s(num_vars, trunc);
        s.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), c);
        return s;
    }

    // Single generator (x_i or c_i, 1-based) with coefficient 1.
    static GradedSeries generator(int num_vars, int trunc, int index)
    {
        if (index < 1 || index > num_vars) {
            throw DomainError("generator index out of range");
        }
        GradedSeries s(num_vars, trunc);
        Exponents e(static_cast<std::size_t>(num_vars), 0);
        e[static_cast<std::size_t>(index - 1)] = 1;
        s.add_term(e, Rational(1));
        return s;
    }

    int num_vars() const { return m_; }
    int trunc() const { return n_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    static int degree(const Exponents &e)
    {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            d += Grading::weight(i) * e[i];
        }
        return d;
    }

    // Adds c * monomial(e); drops it silently when above the truncation order.
    void add_term(const Exponents &e, const Rational &c)
    {
        if (static_cast<int>(e.size()) != m_) {
            throw DomainError("exponent vector has wrong length");
        }
        if (c.is_zero() || degree(e) > n_) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    Rational coeff(const Exponents &e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coeff(Exponents(static_cast<std::size_t>(m_), 0)); }

    GradedSeries truncated(int trunc) const
    {
        GradedSeries out(m_, std::min(trunc, n_));
        for (const auto &[e, c] : terms_) {
            out.add_term(e, c);
        }
        return out;
    }

    // Homogeneous component of weighted degree p.
    GradedSeries degree_part(int p) const { return degree_window(p, p); }

    // Components of weighted degree <= p.
    GradedSeries degree_upto(int p) const { return degree_window(0, p); }

    GradedSeries degree_window(int lo, int hi) const
    {
        GradedSeries out(m_, n_);
        for (const auto &[e, c] : terms_) {
            const int d = degree(e);
            if (d >= lo && d <= hi) {
                out.terms_.emplace(e, c);
            }
        }
        return out;
    }

    GradedSeries &operator+=(const GradedSeries &o)
    {
        check_compatible(o);
        n_ = std::min(n_, o.n_);
        prune_above_trunc();
        for (const auto &[e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    GradedSeries &operator-=(const GradedSeries &o) { return *this += (-o); }

    GradedSeries &operator*=(const Rational &c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto &kv : terms_) {
            kv.second *= c;
        }
        return *this;
    }

    GradedSeries operator-() const
    {
        GradedSeries out = *this;
        for (auto &kv : out.terms_) {
            kv.second = -kv.second;
        }
        return out;
    }

    friend GradedSeries operator+(GradedSeries a, const GradedSeries &b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries &b) { return a -= b; }
    friend GradedSeries operator*(GradedSeries a, const Rational &c) { return a *= c; }
    friend GradedSeries operator*(const Rational &c, GradedSeries a) { return a *= c; }

    // Truncated product; the result carries the smaller truncation order.
    friend GradedSeries operator*(const GradedSeries &a, const GradedSeries &b)
    {
        a.check_compatible(b);
        GradedSeries out(a.m_, std::min(a.n_, b.n_));
        Exponents e(static_cast<std::size_t>(a.m_));
        for (const auto &[ea, ca] : a.terms_) {
            const int da = degree(ea);
            if (da > out.n_) {
                continue;
            }
            for (const auto &[eb, cb] : b.terms_) {
                if (da + degree(eb) > out.n_) {
                    continue;
                }
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    GradedSeries &operator*=(const GradedSeries &o) { return *this = *this * o; }

    // Equality of coefficients; truncation orders are not compared.
    friend bool operator==(const GradedSeries &a, const GradedSeries &b)
    {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    // Human-readable rendering, ordered by degree then exponent key.
    std::string str() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::vector<std::pair<int, const typename Terms::value_type *>> order;
        for (const auto &kv : terms_) {
            order.emplace_back(degree(kv.first), &kv);
        }
        std::stable_sort(order.begin(), order.end(),
                         [](const auto &x, const auto &y) { return x.first < y.first; });
        std::string out;
        bool first = true;
        for (const auto &[d, kv] : order) {
            Rational c = kv->second;
            if (!first) {
                out += c.sign() < 0 ? " - " : " + ";
                if (c.sign() < 0) {
                    c = -c;
                }
            }
            std::string mono;
            for (std::size_t i = 0; i < kv->first.size(); ++i) {
                const int p = kv->first[i];
                if (p == 0) {
                    continue;
                }
                if (!mono.empty()) {
                    mono += "*";
                }
                mono += Grading::symbol + std::to_string(i + 1);
                if (p > 1) {
                    mono += "^" + std::to_string(p);
                }
            }
            if (mono.empty()) {
                out += c.str();
            } else if (c == Rational(1)) {
                out += mono;
            } else if (c == Rational(-1)) {
                out += "-" + mono;
            } else {
                out += c.str() + "*" + mono;
            }
            first = false;
        }
        return out;
    }

private:
    void check_compatible(const GradedSeries &o) const
    {
        if (m_ != o.m_) {
            throw DomainError("series over different numbers of roots");
        }
    }

    void prune_above_trunc()
    {
        for (auto it = terms_.begin(); it != terms_.end();) {
            it = degree(it->first) > n_ ? terms_.erase(it) : std::next(it);
        }
    }

    int m_;
    int n_;
    Terms terms_;
};

using RootSeries = GradedSeries<RootGrading>;
using ChernSeries = GradedSeries<ChernGrading>;

// Dense univariate power series coefficients a_0, a_1, ..., a_N.
using UniSeries = std::vector<Rational>;

// e^{k x} to order N.
UniSeries exp_series(const Rational &k, int trunc);
// x / (1 - e^{-x}) by exact division of (1 - e^{-x}) / x.
UniSeries todd_series(int trunc);
// log(a) for a series with a_0 = 1.
UniSeries log_series(const UniSeries &a);

// e_k(x_1..x_m) as a root series; k outside [0, m] is a DomainError.
RootSeries elementary_symmetric(int m, int k, int trunc);

// c_k as a Chern series, with c_0 = 1 and c_k = 0 for k > m.
ChernSeries chern_class(int m, int k, int trunc);

// Power sums p_0..p_N in the Chern basis via Newton's identities (p_0 = m).
std::vector<ChernSeries> power_sums(int m, int trunc);

// Writes every c-monomial as a product of elementary symmetric polynomials
// in the roots.
RootSeries expand_to_roots(const ChernSeries &s);

// Inverse change of basis. Throws SymmetryError naming the first adjacent
// transposition (x_i x_{i+1}) that changes s.
ChernSeries symmetrize_to_chern(const RootSeries &s);

// prod_j Q(x_j) for a characteristic series Q with Q(0) = 1, computed as
// exp(sum_k [log Q]_k p_k).
ChernSeries multiplicative_class(int m, int trunc, const UniSeries &q);

// exp(F) for F without constant term.
ChernSeries exp_nilpotent(const ChernSeries &f);

// 1 / s for s with non-zero constant term.
ChernSeries inverse(const ChernSeries &s);

// Todd class prod_j x_j / (1 - e^{-x_j}).
ChernSeries todd(int m, int trunc);

// Derivative at t = 0 of s evaluated at the shifted roots x_j + t, computed
// over Q[t]/(t^2). In the Chern basis the shift sends c_k to
// c_k + t (m - k + 1) c_{k-1}. The result is exact to order trunc - 1.
ChernSeries shift_derivative(const ChernSeries &s);

// d/dt Td(A + t Id) at t = 0.
ChernSeries todd_prime(int m, int trunc);

// ch(Lambda^r V^*) = e_r(e^{-x_1}, ..., e^{-x_m}).
ChernSeries ch_exterior(int m, int r, int trunc);

// sum_r (-1)^r weight(r) ch(R_r) with weight(r) = 1, r or r(r-1) for
// falling_power = 0, 1, 2.
ChernSeries alternating_ch_sum(int m, int falling_power, int trunc);

// Residuals LHS - RHS of the three Td identities:
//  [0] Td * sum (-1)^r ch(R_r) - c_m                                    (order m+2)
//  [1] {Td * sum (-1)^r r ch(R_r)}^{<=m} - (-c_{m-1} + m/2 c_m)
//  [2] {Td * sum (-1)^r r(r-1) ch(R_r)}^{m} - (c_1 c_{m-1}/6 + m(3m-5)/12 c_m)
std::array<ChernSeries, 3> verify_todd_identities(int m);

// Residuals of the two Td' identities:
//  [0] {Td' * sum (-1)^r ch(R_r)}^{m} - m/2 c_m
//  [1] {Td' * sum (-1)^r r ch(R_r)}^{m} - (c_1 c_{m-1}/12 + m^2/4 c_m)
std::array<ChernSeries, 2> verify_todd_prime_identities(int m);

// {Td'/Td}^{<=1}
ChernSeries todd_log_derivative_low(int m);

inline constexpr int default_max_roots = 8;

// Evaluates s at concrete Chern classes chern[k-1] = c_k in any commutative
// ring with a unit; used to push universal classes into cohomology models.
template <class Ring>
Ring evaluate(const ChernSeries &s, std::span<const Ring> chern, const Ring &one)
{
    if (static_cast<int>(chern.size()) < s.num_vars()) {
        throw DomainError("not enough Chern classes to evaluate series");
    }
    Ring out = one * Rational(0);
    // Cache powers per generator.
    std::vector<std::vector<Ring>> powers(static_cast<std::size_t>(s.num_vars()));
    for (const auto &[e, c] : s.terms()) {
        Ring term = one * c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            auto &pw = powers[i];
            if (pw.empty()) {
                pw.push_back(one);
            }
            while (static_cast<int>(pw.size()) <= e[i]) {
                pw.push_back(pw.back() * chern[i]);
            }
            term = term * pw[static_cast<std::size_t>(e[i])];
        }
        out = out + term;
    }
    return out;
}

} // namespace cyp::sym

#endif
