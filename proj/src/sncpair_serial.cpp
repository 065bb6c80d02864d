#include <cyp/sncpair.hpp>

namespace cyp::snc::serial
{

Rational chi_d(const SncPair &pair)
{
    const int l = pair.num_components();
    if (l > 24) {
        throw DomainError("dense serial reference supports at most 24 components");
    }
    std::vector<Rational> w;
    for (auto m : pair.mults) {
        const Rational denom = Rational(m) + Rational(pair.d);
        if (denom.is_zero()) {
            throw DomainError("forbidden multiplicity m_j = -d");
        }
        w.push_back(Rational(-m) / denom);
    }
    const Subset count = Subset{1} << static_cast<unsigned>(l);
    std::vector<Rational> dense(count);
    dense[0] = Rational(1);
    Rational total;
    for (Subset j = 0; j < count; ++j) {
        if (j != 0) {
            dense[j] = dense[j & (j - 1)] * w[static_cast<std::size_t>(__builtin_ctz(j))];
        }
        if (const StratumEntry *e = pair.strata.find(j)) {
            total += dense[j] * Rational(e->chi);
        }
    }
    return total;
}

Rational chi_d_cp(int r, std::int64_t d, const std::vector<std::int64_t> &all_mults)
{
    const int l = static_cast<int>(all_mults.size());
    if (l > 24) {
        throw DomainError("dense serial reference supports at most 24 components");
    }
    Rational total;
    for (Subset j = 0; j < (Subset{1} << static_cast<unsigned>(l)); ++j) {
        Rational w(1);
        for (int i = 0; i < l; ++i) {
            if (j & (Subset{1} << static_cast<unsigned>(i))) {
                const auto m = all_mults[static_cast<std::size_t>(i)];
                w *= Rational(-m) / (Rational(m) + Rational(d));
            }
        }
        total += w * Rational(r + 1 - popcount(j));
    }
    return total;
}

} // namespace cyp::snc::serial
