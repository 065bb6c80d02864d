#include <cyp/hodge.hpp>

#include <string>

namespace cyp::hodge
{

namespace
{

constexpr int max_dim = 64;
constexpr std::int64_t max_entry = 1'000'000'000'000;

std::int64_t sign(int k) { return k % 2 == 0 ? 1 : -1; }

} // namespace

HodgeDiamond::HodgeDiamond(int n, std::vector<std::vector<std::int64_t>> h) : n_(n), h_(std::move(h))
{
    if (n < 0 || n > max_dim) {
        throw ValidationError("diamond dimension must lie in [0, " + std::to_string(max_dim) + "], got " +
                              std::to_string(n));
    }
    const auto size = static_cast<std::size_t>(n) + 1;
    if (h_.size() != size) {
        throw ValidationError("diamond of dimension " + std::to_string(n) + " needs " + std::to_string(size) +
                              " rows, got " + std::to_string(h_.size()));
    }
    for (std::size_t p = 0; p < size; ++p) {
        if (h_[p].size() != size) {
            throw ValidationError("diamond row " + std::to_string(p) + " has " + std::to_string(h_[p].size()) +
                                  " entries, expected " + std::to_string(size));
        }
        for (std::size_t q = 0; q < size; ++q) {
            if (h_[p][q] < 0 || h_[p][q] > max_entry) {
                throw ValidationError("h^{" + std::to_string(p) + "," + std::to_string(q) +
                                      "} must be a non-negative integer below 10^12");
            }
        }
    }
    for (std::size_t p = 0; p < size; ++p) {
        for (std::size_t q = 0; q < size; ++q) {
            if (h_[p][q] != h_[q][p]) {
                throw ValidationError("conjugation symmetry fails: h^{" + std::to_string(p) + "," +
                                      std::to_string(q) + "} != h^{" + std::to_string(q) + "," +
                                      std::to_string(p) + "}");
            }
            if (h_[p][q] != h_[size - 1 - p][size - 1 - q]) {
                throw ValidationError("Serre symmetry fails: h^{" + std::to_string(p) + "," + std::to_string(q) +
                                      "} != h^{" + std::to_string(size - 1 - p) + "," +
                                      std::to_string(size - 1 - q) + "}");
            }
        }
    }
    if (h_[0][0] == 0 && !is_empty_variety()) {
        throw ValidationError("h^{0,0} must be at least 1 for a nonempty variety");
    }
}

HodgeDiamond HodgeDiamond::point() { return HodgeDiamond(0, {{1}}); }

HodgeDiamond HodgeDiamond::projective_space(int n)
{
    std::vector<std::vector<std::int64_t>> h(static_cast<std::size_t>(n) + 1,
                                             std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
    for (std::size_t p = 0; p < h.size(); ++p) {
        h[p][p] = 1;
    }
    return HodgeDiamond(n, std::move(h));
}

HodgeDiamond HodgeDiamond::empty(int n)
{
    return HodgeDiamond(n, std::vector<std::vector<std::int64_t>>(
                               static_cast<std::size_t>(n) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0)));
}

std::int64_t HodgeDiamond::operator()(int p, int q) const
{
    if (p < 0 || q < 0 || p > n_ || q > n_) {
        return 0;
    }
    return h_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

bool HodgeDiamond::is_empty_variety() const
{
    for (const auto &row : h_) {
        for (auto v : row) {
            if (v != 0) {
                return false;
            }
        }
    }
    return true;
}

std::int64_t betti(const HodgeDiamond &d, int k)
{
    if (k < 0 || k > 2 * d.dim()) {
        return 0;
    }
    std::int64_t b = 0;
    for (int p = 0; p <= k; ++p) {
        b += d(p, k - p);
    }
    return b;
}

std::vector<std::int64_t> betti_vector(const HodgeDiamond &d)
{
    std::vector<std::int64_t> out;
    for (int k = 0; k <= 2 * d.dim(); ++k) {
        out.push_back(betti(d, k));
    }
    return out;
}

std::int64_t euler_characteristic(const HodgeDiamond &d)
{
    std::int64_t chi = 0;
    for (int k = 0; k <= 2 * d.dim(); ++k) {
        chi += sign(k) * betti(d, k);
    }
    return chi;
}

HodgeDiamond projective_bundle_diamond(const HodgeDiamond &base, int fiber_dim)
{
    if (fiber_dim < 0) {
        throw DomainError("fiber dimension must be non-negative");
    }
    const int n = base.dim() + fiber_dim;
    std::vector<std::vector<std::int64_t>> h(static_cast<std::size_t>(n) + 1,
                                             std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            for (int j = 0; j <= fiber_dim; ++j) {
                h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] += base(p - j, q - j);
            }
        }
    }
    return HodgeDiamond(n, std::move(h));
}

HodgeDiamond blowup_diamond(const HodgeDiamond &x, const HodgeDiamond &y, int r)
{
    if (r < 2) {
        throw DomainError("blow-up center must have codimension >= 2, got " + std::to_string(r));
    }
    if (y.dim() + r != x.dim()) {
        throw DomainError("dimension mismatch: dim Y + r = " + std::to_string(y.dim() + r) + " but dim X = " +
                          std::to_string(x.dim()));
    }
    auto h = x.table();
    for (int p = 0; p <= x.dim(); ++p) {
        for (int q = 0; q <= x.dim(); ++q) {
            for (int k = 1; k < r; ++k) {
                h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] += y(p - k, q - k);
            }
        }
    }
    return HodgeDiamond(x.dim(), std::move(h));
}

HodgeDiamond product_diamond(const HodgeDiamond &a, const HodgeDiamond &b)
{
    const int n = a.dim() + b.dim();
    std::vector<std::vector<std::int64_t>> h(static_cast<std::size_t>(n) + 1,
                                             std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
    for (int p = 0; p <= a.dim(); ++p) {
        for (int q = 0; q <= a.dim(); ++q) {
            for (int s = 0; s <= b.dim(); ++s) {
                for (int t = 0; t <= b.dim(); ++t) {
                    h[static_cast<std::size_t>(p + s)][static_cast<std::size_t>(q + t)] += a(p, q) * b(s, t);
                }
            }
        }
    }
    return HodgeDiamond(n, std::move(h));
}

Rational correction_term(const HodgeDiamond &d)
{
    const int n = d.dim();
    Rational out;
    for (int k = 0; k <= 2 * n; ++k) {
        out += Rational(sign(k) * k * (n - k)) * Rational(betti(d, k));
    }
    return out;
}

// ---------------------------------------------------------------------------

void ExponentLedger::add(int p, int q, std::int64_t exponent)
{
    if (exponent == 0) {
        return;
    }
    auto [it, inserted] = e_.try_emplace({p, q}, exponent);
    if (!inserted) {
        it->second += exponent;
        if (it->second == 0) {
            e_.erase(it);
        }
    }
}

std::int64_t ExponentLedger::at(int p, int q) const
{
    auto it = e_.find({p, q});
    return it == e_.end() ? 0 : it->second;
}

ExponentLedger &ExponentLedger::operator+=(const ExponentLedger &o)
{
    for (const auto &[k, v] : o.e_) {
        add(k.first, k.second, v);
    }
    return *this;
}

ExponentLedger ExponentLedger::operator-() const { return scaled(-1); }

ExponentLedger ExponentLedger::scaled(std::int64_t k) const
{
    ExponentLedger out;
    for (const auto &[key, v] : e_) {
        out.add(key.first, key.second, v * k);
    }
    return out;
}

ExponentLedger lambda_p_ledger(const HodgeDiamond &d, int p)
{
    ExponentLedger out;
    for (int q = 0; q <= d.dim(); ++q) {
        if (d(p, q) != 0) {
            out.add(p, q, sign(q));
        }
    }
    return out;
}

namespace
{

// det H^k_dR = (x)_{p+q=k} det H^{p,q}, raised to `exponent`.
void add_de_rham_degree(ExponentLedger &l, const HodgeDiamond &d, int k, std::int64_t exponent)
{
    for (int p = 0; p <= k; ++p) {
        if (d(p, k - p) != 0) {
            l.add(p, k - p, exponent);
        }
    }
}

} // namespace

ExponentLedger eta_ledger(const HodgeDiamond &d)
{
    ExponentLedger out;
    for (int k = 0; k <= 2 * d.dim(); ++k) {
        add_de_rham_degree(out, d, k, sign(k));
    }
    return out;
}

ExponentLedger lambda_ledger(const HodgeDiamond &d)
{
    ExponentLedger out;
    for (int p = 0; p <= d.dim(); ++p) {
        for (int q = 0; q <= d.dim(); ++q) {
            if (d(p, q) != 0) {
                out.add(p, q, sign(p + q) * p);
            }
        }
    }
    return out;
}

ExponentLedger lambda_dr_ledger(const HodgeDiamond &d)
{
    ExponentLedger out;
    for (int k = 1; k <= 2 * d.dim(); ++k) {
        add_de_rham_degree(out, d, k, sign(k) * k);
    }
    return out;
}

ExponentLedger conjugate(const ExponentLedger &l)
{
    ExponentLedger out;
    for (const auto &[key, v] : l.entries()) {
        out.add(key.second, key.first, v);
    }
    return out;
}

ExponentLedger serre_transport(const ExponentLedger &l, int n)
{
    ExponentLedger out;
    for (const auto &[key, v] : l.entries()) {
        out.add(n - key.first, n - key.second, -v);
    }
    return out;
}

LedgerCheck lambda_exponent_check(const HodgeDiamond &d)
{
    LedgerCheck out;
    const ExponentLedger lam = lambda_ledger(d);
    out.lambda_dr_splits = lambda_dr_ledger(d) == lam + conjugate(lam);

    ExponentLedger from_p;
    ExponentLedger eta_from_p;
    for (int p = 0; p <= d.dim(); ++p) {
        const ExponentLedger lp = lambda_p_ledger(d, p);
        from_p += lp.scaled(sign(p) * p);
        eta_from_p += lp.scaled(sign(p));
    }
    out.lambda_from_lambda_p = from_p == lam;
    out.eta_from_lambda_p = eta_from_p == eta_ledger(d);
    return out;
}

} // namespace cyp::hodge
