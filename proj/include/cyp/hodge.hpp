#ifndef CYP_HODGE_HPP
#define CYP_HODGE_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <cyp/errors.hpp>
#include <cyp/rational.hpp>

namespace cyp::hodge
{

// h^{p,q} for 0 <= p, q <= n, stored row-major in p.
class HodgeDiamond
{
public:
    // Throws ValidationError unless the table is square of size n+1, has
    // non-negative entries and satisfies both conjugation and Serre symmetry.
    // An all-zero table stands for the empty variety.
    HodgeDiamond(int n, std::vector<std::vector<std::int64_t>> h);

    static HodgeDiamond point();
    static HodgeDiamond projective_space(int n);
    static HodgeDiamond empty(int n);

    int dim() const { return n_; }
    std::int64_t operator()(int p, int q) const;
    const std::vector<std::vector<std::int64_t>> &table() const { return h_; }
    bool is_empty_variety() const;

    friend bool operator==(const HodgeDiamond &, const HodgeDiamond &) = default;

private:
    int n_;
    std::vector<std::vector<std::int64_t>> h_;
};

// sum_{p+q=k} h^{p,q}; 0 outside [0, 2n].
std::int64_t betti(const HodgeDiamond &d, int k);
std::vector<std::int64_t> betti_vector(const HodgeDiamond &d);

// Alternating Betti sum.
std::int64_t euler_characteristic(const HodgeDiamond &d);

// h^{p,q}(X) = sum_{j=0}^{n} h^{p-j,q-j}(base) for a CP^n-bundle.
HodgeDiamond projective_bundle_diamond(const HodgeDiamond &base, int fiber_dim);

// Blow-up of x along y of codimension r:
// h^{p,q}(X') = h^{p,q}(X) + sum_{k=1}^{r-1} h^{p-k,q-k}(Y).
HodgeDiamond blowup_diamond(const HodgeDiamond &x, const HodgeDiamond &y, int r);

// Product (Kuenneth).
HodgeDiamond product_diamond(const HodgeDiamond &a, const HodgeDiamond &b);

// sum_k (-1)^k k (n - k) b_k; the caller carries the (log 2pi)/2 factor.
Rational correction_term(const HodgeDiamond &d);

// Formal tensor product of determinant lines det H^{p,q} raised to integer
// powers. Zero exponents are never stored.
class ExponentLedger
{
public:
    using Key = std::pair<int, int>;

    void add(int p, int q, std::int64_t exponent);
    std::int64_t at(int p, int q) const;
    const std::map<Key, std::int64_t> &entries() const { return e_; }

    ExponentLedger &operator+=(const ExponentLedger &o);
    ExponentLedger operator-() const;
    ExponentLedger scaled(std::int64_t k) const;
    friend ExponentLedger operator+(ExponentLedger a, const ExponentLedger &b) { return a += b; }
    friend bool operator==(const ExponentLedger &, const ExponentLedger &) = default;

private:
    std::map<Key, std::int64_t> e_;
};

// Lines with h^{p,q} = 0 are trivial and are left out of every ledger.

// lambda_p(X) = (x)_q (det H^{p,q})^{(-1)^q}
ExponentLedger lambda_p_ledger(const HodgeDiamond &d, int p);
// eta(X) = (x)_k (det H^k_dR)^{(-1)^k}
ExponentLedger eta_ledger(const HodgeDiamond &d);
// lambda(X) = (x)_{p,q} (det H^{p,q})^{(-1)^{p+q} p}
ExponentLedger lambda_ledger(const HodgeDiamond &d);
// lambda_dR(X) = (x)_k (det H^k_dR)^{(-1)^k k}
ExponentLedger lambda_dr_ledger(const HodgeDiamond &d);
// Complex conjugation: (p,q) -> (q,p).
ExponentLedger conjugate(const ExponentLedger &l);
// Serre duality det H^{p,q} = (det H^{n-p,n-q})^{-1}.
ExponentLedger serre_transport(const ExponentLedger &l, int n);

struct LedgerCheck {
    bool lambda_dr_splits = false;     // lambda_dR = lambda (x) conj(lambda)
    bool lambda_from_lambda_p = false; // lambda = (x)_p lambda_p^{(-1)^p p}
    bool eta_from_lambda_p = false;    // eta = (x)_p lambda_p^{(-1)^p}
    bool all() const { return lambda_dr_splits && lambda_from_lambda_p && eta_from_lambda_p; }
};

LedgerCheck lambda_exponent_check(const HodgeDiamond &d);

} // namespace cyp::hodge

#endif
