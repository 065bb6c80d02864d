#ifndef CYP_SNCPAIR_HPP
#define CYP_SNCPAIR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <cyp/errors.hpp>
#include <cyp/polynomial.hpp>
#include <cyp/rational.hpp>

// Combinatorial skeleton of a d-Calabi-Yau pair (X, D = sum m_j D_j) with
// simple normal crossing support: multiplicities, the Euler characteristics of
// all intersection strata D_J, and optionally a blow-up center Y.
namespace cyp::snc
{

// Subsets of components as bitmasks; bit j is component j (0-based).
using Subset = std::uint32_t;

inline constexpr int max_components = 30;

// Magnitude bounds that keep every intermediate integer inside int64.
inline constexpr std::int64_t max_abs_mult = 1'000'000'000;
inline constexpr std::int64_t max_abs_chi = 1'000'000'000'000'000;
inline constexpr int max_codim = 1000;

inline int popcount(Subset s) { return __builtin_popcount(s); }

struct StratumEntry {
    std::int64_t chi = 0;
    // chi(Y cap D_J) when a center is present; nullopt means Y cap D_J is empty.
    std::optional<std::int64_t> chi_meet_center;
};

struct CenterData {
    int codim = 0;
    // Components containing Y.
    Subset contains = 0;
};

// Present entries are the nonempty strata; absent subsets are empty.
struct StratumTable {
    int num_components = 0;
    std::map<Subset, StratumEntry> entries;
    std::optional<CenterData> center;

    const StratumEntry *find(Subset j) const
    {
        auto it = entries.find(j);
        return it == entries.end() ? nullptr : &it->second;
    }
};

struct SncPair {
    std::int64_t d = 1;
    std::vector<std::string> ids;
    std::vector<std::int64_t> mults;
    StratumTable strata;

    int num_components() const { return static_cast<int>(mults.size()); }
};

// Throws ValidationError with a message naming the offending data. Checks
// multiplicities, stratum monotonicity and all center consistency rules.
void validate(const SncPair &pair);

// Renders a subset as "{a,b}" using component ids.
std::string subset_name(const SncPair &pair, Subset j);

// w_d^J = prod_{j in J} (-m_j)/(m_j + d); 1 on the empty set. Throws
// DomainError when some m_j = -d.
Rational weight(std::int64_t d, Subset j, const std::vector<std::int64_t> &mults);

// sum_J w_d^J chi(D_J), parallel over table entries.
Rational chi_d(const SncPair &pair);

// Serial reference kernels kept for testing and benchmarking.
namespace serial
{
// Dense enumeration of all 2^l subsets with weights built incrementally from
// the lowest set bit.
Rational chi_d(const SncPair &pair);
// Direct sum over all subsets of {1..s, inf} of w^J (r + 1 - |J|).
Rational chi_d_cp(int r, std::int64_t d, const std::vector<std::int64_t> &all_mults);
} // namespace serial

// Induced SNC pair on a nonempty stratum D_J: components D_{J+j} for j not in
// J that are nonempty, same multiplicities, restricted table, no center.
SncPair divisor_on_stratum(const SncPair &pair, Subset j);

struct CpPairModel {
    int r = 0;
    int s = 0;
    std::int64_t d = 1;
    std::vector<std::int64_t> mults; // m_1..m_s
    std::int64_t m_infinity = 0;
    // t^{r-s} prod_{j in {1..s, inf}} (t - m_j/(m_j + d))
    Polynomial f;
};

struct CpPair {
    CpPairModel model;
    SncPair pair;
};

// CP^r with s coordinate hyperplanes of multiplicities m_1..m_s and the
// hyperplane at infinity with m_inf = -m_1 - ... - m_s - rd - d.
CpPair cp_pair(int r, int s, std::int64_t d, const std::vector<std::int64_t> &mults);

// f'(1)
Rational chi_d_via_fprime(const CpPairModel &model);

// Multiplicity of the exceptional divisor: sum_{j contains Y} m_j + rd - d.
std::int64_t exceptional_multiplicity(const SncPair &pair);

// Blow-up along the center. The result has the old components (strict
// transforms) followed by E, unless m_0 = 0 in which case E carries no
// multiplicity and is omitted.
SncPair blowup_transform(const SncPair &pair);

struct InducedPairs {
    SncPair on_center;      // (Y, D_Y)
    SncPair on_exceptional; // (E, D_E)
    Rational chi_d_center;
    Rational chi_d_exceptional;
};

InducedPairs induced_center_pairs(const SncPair &pair);

struct BlowupReport {
    std::int64_t m0 = 0;
    Rational before;
    Rational after;
    bool equal = false;
};

BlowupReport check_blowup_invariance(const SncPair &pair);

// chi_d with (d, mults) equals chi_d with (k d, k mults).
bool scale_check(const SncPair &pair, std::int64_t k);

SncPair scaled(const SncPair &pair, std::int64_t k);

} // namespace cyp::snc

#endif
