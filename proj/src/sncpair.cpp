#include <cyp/sncpair.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include <omp.h>

namespace cyp::snc
{

namespace
{

Subset full_mask(int l) { return l >= 32 ? ~Subset{0} : (Subset{1} << static_cast<unsigned>(l)) - 1; }

std::vector<Rational> component_weights(std::int64_t d, const std::vector<std::int64_t> &mults)
{
    std::vector<Rational> w;
    w.reserve(mults.size());
    for (std::size_t j = 0; j < mults.size(); ++j) {
        const Rational denom = Rational(mults[j]) + Rational(d);
        if (denom.is_zero()) {
            throw DomainError("forbidden multiplicity: component " + std::to_string(j + 1) + " has m_j = -d = " +
                              std::to_string(mults[j]));
        }
        w.push_back(Rational(-mults[j]) / denom);
    }
    return w;
}

Rational subset_weight(const std::vector<Rational> &w, Subset j)
{
    Rational out(1);
    while (j != 0) {
        out *= w[static_cast<std::size_t>(__builtin_ctz(j))];
        j &= j - 1;
    }
    return out;
}

std::string fmt_opt(const std::optional<std::int64_t> &v) { return v ? std::to_string(*v) : "null"; }

} // namespace

std::string subset_name(const SncPair &pair, Subset j)
{
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < pair.num_components(); ++i) {
        if (j & (Subset{1} << static_cast<unsigned>(i))) {
            if (!first) {
                out += ",";
            }
            out += i < static_cast<int>(pair.ids.size()) ? pair.ids[static_cast<std::size_t>(i)]
                                                         : std::to_string(i + 1);
            first = false;
        }
    }
    return out + "}";
}

void validate(const SncPair &pair)
{
    const int l = pair.num_components();
    if (pair.d == 0) {
        throw ValidationError("d must be nonzero");
    }
    if (pair.d > max_abs_mult || pair.d < -max_abs_mult) {
        throw ValidationError("|d| exceeds " + std::to_string(max_abs_mult));
    }
    if (l > max_components) {
        throw ValidationError("at most " + std::to_string(max_components) + " components are supported, got " +
                              std::to_string(l));
    }
    if (!pair.ids.empty() && static_cast<int>(pair.ids.size()) != l) {
        throw ValidationError("component id list and multiplicity list differ in length");
    }
    std::set<std::string> seen;
    for (const auto &id : pair.ids) {
        if (id.empty()) {
            throw ValidationError("component id must be a nonempty string");
        }
        if (!seen.insert(id).second) {
            throw ValidationError("duplicate component id '" + id + "'");
        }
    }
    for (int j = 0; j < l; ++j) {
        const auto m = pair.mults[static_cast<std::size_t>(j)];
        const std::string who = "component " + subset_name(pair, Subset{1} << static_cast<unsigned>(j));
        if (m == 0) {
            throw ValidationError(who + " has multiplicity 0");
        }
        if (m > max_abs_mult || m < -max_abs_mult) {
            throw ValidationError(who + " multiplicity exceeds " + std::to_string(max_abs_mult));
        }
        if (m == -pair.d) {
            throw ValidationError(who + " has multiplicity " + std::to_string(m) +
                                  " = -d, which a d-Calabi-Yau pair forbids");
        }
    }

    const StratumTable &t = pair.strata;
    if (t.num_components != l) {
        throw ValidationError("stratum table covers " + std::to_string(t.num_components) +
                              " components but the divisor has " + std::to_string(l));
    }
    if (!t.find(0)) {
        throw ValidationError("stratum table has no entry for the empty subset (D_empty = X)");
    }
    const Subset all = full_mask(l);
    for (const auto &[j, e] : t.entries) {
        if ((j & ~all) != 0) {
            throw ValidationError("stratum subset mask refers to unknown components");
        }
        if (e.chi > max_abs_chi || e.chi < -max_abs_chi) {
            throw ValidationError("chi of stratum " + subset_name(pair, j) + " is out of range");
        }
        for (Subset rest = j; rest != 0; rest &= rest - 1) {
            const Subset sub = j & ~(rest & (~rest + 1));
            if (!t.find(sub)) {
                throw ValidationError("stratum " + subset_name(pair, j) + " is marked nonempty but its subset " +
                                      subset_name(pair, sub) + " is empty; supersets of empty strata must be empty");
            }
        }
    }

    if (!t.center) {
        for (const auto &[j, e] : t.entries) {
            if (e.chi_meet_center) {
                throw ValidationError("stratum " + subset_name(pair, j) +
                                      " has chi_meet_center but the table has no center");
            }
        }
        return;
    }

    const CenterData &c = *t.center;
    if (c.codim < 1 || c.codim > max_codim) {
        throw ValidationError("center codimension must lie in [1, " + std::to_string(max_codim) + "], got " +
                              std::to_string(c.codim));
    }
    if ((c.contains & ~all) != 0) {
        throw ValidationError("center contains-set refers to unknown components");
    }
    if (popcount(c.contains) > c.codim) {
        throw ValidationError("center lies in " + std::to_string(popcount(c.contains)) +
                              " components but has codimension " + std::to_string(c.codim) +
                              "; transversality needs s <= r");
    }
    for (int j = 0; j < l; ++j) {
        const Subset bit = Subset{1} << static_cast<unsigned>(j);
        if ((c.contains & bit) && pair.mults[static_cast<std::size_t>(j)] <= 0) {
            throw ValidationError("center is contained in component " + subset_name(pair, bit) +
                                  " of multiplicity " + std::to_string(pair.mults[static_cast<std::size_t>(j)]) +
                                  "; blow-up centers may only lie in components with m_j > 0");
        }
    }
    if (!t.find(0)->chi_meet_center) {
        throw ValidationError("chi_meet_center of the empty subset (chi of the center itself) is missing");
    }
    for (Subset a = c.contains;; a = (a - 1) & c.contains) {
        if (!t.find(a)) {
            throw ValidationError("stratum " + subset_name(pair, a) +
                                  " contains the center but is marked empty");
        }
        if (a == 0) {
            break;
        }
    }
    for (const auto &[j, e] : t.entries) {
        const Subset outside = j & ~c.contains;
        const StratumEntry *base = t.find(outside);
        if (base->chi_meet_center != e.chi_meet_center) {
            throw ValidationError("chi_meet_center of " + subset_name(pair, j) + " is " +
                                  fmt_opt(e.chi_meet_center) + " but must equal that of " +
                                  subset_name(pair, outside) + " (" + fmt_opt(base->chi_meet_center) +
                                  ") because the remaining components contain the center");
        }
        if (!e.chi_meet_center) {
            continue;
        }
        if (*e.chi_meet_center > max_abs_chi || *e.chi_meet_center < -max_abs_chi) {
            throw ValidationError("chi_meet_center of " + subset_name(pair, j) + " is out of range");
        }
        for (Subset rest = j; rest != 0; rest &= rest - 1) {
            const Subset sub = j & ~(rest & (~rest + 1));
            if (!t.find(sub)->chi_meet_center) {
                throw ValidationError("center meets " + subset_name(pair, j) + " but not its subset " +
                                      subset_name(pair, sub));
            }
        }
        if (!t.find(j | c.contains)) {
            throw ValidationError("center meets " + subset_name(pair, j) + " so stratum " +
                                  subset_name(pair, j | c.contains) + " must be nonempty");
        }
    }
}

Rational weight(std::int64_t d, Subset j, const std::vector<std::int64_t> &mults)
{
    std::vector<std::int64_t> picked;
    for (Subset rest = j; rest != 0; rest &= rest - 1) {
        const auto idx = static_cast<std::size_t>(__builtin_ctz(rest));
        if (idx >= mults.size()) {
            throw DomainError("subset refers to a component outside the multiplicity list");
        }
        picked.push_back(mults[idx]);
    }
    const auto w = component_weights(d, picked);
    Rational out(1);
    for (const auto &x : w) {
        out *= x;
    }
    return out;
}

Rational chi_d(const SncPair &pair)
{
    const auto w = component_weights(pair.d, pair.mults);
    std::vector<std::pair<Subset, std::int64_t>> items;
    items.reserve(pair.strata.entries.size());
    for (const auto &[j, e] : pair.strata.entries) {
        items.emplace_back(j, e.chi);
    }
    const auto n = static_cast<std::int64_t>(items.size());
    std::vector<Rational> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        Rational local;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            const auto &[j, chi] = items[static_cast<std::size_t>(i)];
            if (chi != 0) {
                local += subset_weight(w, j) * Rational(chi);
            }
        }
        partial[static_cast<std::size_t>(omp_get_thread_num())] = local;
    }
    Rational total;
    for (const auto &p : partial) {
        total += p;
    }
    return total;
}

SncPair divisor_on_stratum(const SncPair &pair, Subset j)
{
    const StratumTable &t = pair.strata;
    if (!t.find(j)) {
        throw DomainError("stratum " + subset_name(pair, j) + " is empty");
    }
    std::vector<int> keep;
    for (int i = 0; i < pair.num_components(); ++i) {
        const Subset bit = Subset{1} << static_cast<unsigned>(i);
        if (!(j & bit) && t.find(j | bit)) {
            keep.push_back(i);
        }
    }
    SncPair out;
    out.d = pair.d;
    for (int i : keep) {
        out.ids.push_back(pair.ids.empty() ? std::to_string(i + 1) : pair.ids[static_cast<std::size_t>(i)]);
        out.mults.push_back(pair.mults[static_cast<std::size_t>(i)]);
    }
    out.strata.num_components = static_cast<int>(keep.size());
    const Subset count = Subset{1} << static_cast<unsigned>(keep.size());
    for (Subset k = 0; k < count; ++k) {
        Subset old = j;
        for (std::size_t b = 0; b < keep.size(); ++b) {
            if (k & (Subset{1} << b)) {
                old |= Subset{1} << static_cast<unsigned>(keep[b]);
            }
        }
        if (const StratumEntry *e = t.find(old)) {
            out.strata.entries[k] = StratumEntry{e->chi, std::nullopt};
        }
    }
    return out;
}

CpPair cp_pair(int r, int s, std::int64_t d, const std::vector<std::int64_t> &mults)
{
    if (r < 1 || r > max_codim) {
        throw ValidationError("cp model needs 1 <= r <= " + std::to_string(max_codim));
    }
    if (s < 0 || s > r) {
        throw ValidationError("cp model needs 0 <= s <= r, got s=" + std::to_string(s) + ", r=" + std::to_string(r));
    }
    if (s + 1 > max_components) {
        throw ValidationError("cp model supports at most " + std::to_string(max_components - 1) + " hyperplanes");
    }
    if (static_cast<int>(mults.size()) != s) {
        throw ValidationError("cp model needs exactly s=" + std::to_string(s) + " multiplicities, got " +
                              std::to_string(mults.size()));
    }
    if (d < 1 || d > max_abs_mult) {
        throw ValidationError("cp model needs 1 <= d <= " + std::to_string(max_abs_mult));
    }
    for (auto m : mults) {
        if (m < 1 || m > max_abs_mult) {
            throw ValidationError("cp model multiplicities must be positive (and at most " +
                                  std::to_string(max_abs_mult) + "), got " + std::to_string(m));
        }
    }

    CpPair out;
    CpPairModel &model = out.model;
    model.r = r;
    model.s = s;
    model.d = d;
    model.mults = mults;
    model.m_infinity = -static_cast<std::int64_t>(r) * d - d;
    for (auto m : mults) {
        model.m_infinity -= m;
    }

    std::vector<std::int64_t> all = mults;
    all.push_back(model.m_infinity);
    Polynomial f = Polynomial::monomial(Rational(1), r - s);
    for (auto m : all) {
        f = f * Polynomial::linear_factor(Rational(m) / (Rational(m) + Rational(d)));
    }
    model.f = f;

    SncPair &pair = out.pair;
    pair.d = d;
    pair.mults = all;
    for (int j = 1; j <= s; ++j) {
        pair.ids.push_back(std::to_string(j));
    }
    pair.ids.push_back("inf");
    pair.strata.num_components = s + 1;
    // Any k of the s+1 coordinate hyperplanes meet in a CP^{r-k}.
    const Subset count = Subset{1} << static_cast<unsigned>(s + 1);
    for (Subset j = 0; j < count; ++j) {
        const int k = popcount(j);
        if (k <= r) {
            pair.strata.entries[j] = StratumEntry{r + 1 - k, std::nullopt};
        }
    }
    return out;
}

Rational chi_d_via_fprime(const CpPairModel &model) { return model.f.derivative()(Rational(1)); }

std::int64_t exceptional_multiplicity(const SncPair &pair)
{
    if (!pair.strata.center) {
        throw ValidationError("stratum table has no center metadata");
    }
    const CenterData &c = *pair.strata.center;
    std::int64_t m0 = static_cast<std::int64_t>(c.codim) * pair.d - pair.d;
    for (int j = 0; j < pair.num_components(); ++j) {
        if (c.contains & (Subset{1} << static_cast<unsigned>(j))) {
            m0 += pair.mults[static_cast<std::size_t>(j)];
        }
    }
    return m0;
}

namespace
{

void check_blowup_input(const SncPair &pair)
{
    if (!pair.strata.center) {
        throw ValidationError("blow-up needs center metadata in the stratum table");
    }
    if (pair.d <= 0) {
        throw ValidationError("blow-up formulas need d > 0, got d=" + std::to_string(pair.d));
    }
    validate(pair);
}

std::string fresh_id(const std::vector<std::string> &ids, std::string name)
{
    while (std::find(ids.begin(), ids.end(), name) != ids.end()) {
        name += "'";
    }
    return name;
}

} // namespace

SncPair blowup_transform(const SncPair &pair)
{
    check_blowup_input(pair);
    const int l = pair.num_components();
    const CenterData c = *pair.strata.center;
    const std::int64_t m0 = exceptional_multiplicity(pair);
    const bool with_e = m0 != 0;
    if (with_e && l + 1 > max_components) {
        throw ValidationError("blow-up would exceed " + std::to_string(max_components) + " components");
    }

    SncPair out;
    out.d = pair.d;
    out.ids = pair.ids;
    if (out.ids.empty()) {
        for (int j = 1; j <= l; ++j) {
            out.ids.push_back(std::to_string(j));
        }
    }
    out.mults = pair.mults;
    if (with_e) {
        out.ids.push_back(fresh_id(out.ids, "E"));
        out.mults.push_back(m0);
    }
    out.strata.num_components = out.num_components();

    // Strict transforms: D'_J is the blow-up of D_J along Y cap D_J, which has
    // codimension r - |J cap contains| in D_J.
    for (const auto &[j, e] : pair.strata.entries) {
        const int codim_in_stratum = c.codim - popcount(j & c.contains);
        const std::int64_t y = e.chi_meet_center.value_or(0);
        const std::int64_t chi = e.chi + y * (codim_in_stratum - 1);
        if (codim_in_stratum >= 1 || chi != 0) {
            out.strata.entries[j] = StratumEntry{chi, std::nullopt};
        }
    }
    // chi' = 0 with c_J = 0 does not prove D'_J empty; keep it when a superset
    // survives.
    auto close_under_subsets = [&]() {
        std::vector<Subset> present;
        for (const auto &kv : out.strata.entries) {
            present.push_back(kv.first);
        }
        for (Subset k : present) {
            for (Subset sub = (k - 1) & k;; sub = (sub - 1) & k) {
                if ((sub >> l) == 0 && !out.strata.find(sub)) {
                    const StratumEntry *e = pair.strata.find(sub);
                    const std::int64_t y = e->chi_meet_center.value_or(0);
                    out.strata.entries[sub] = StratumEntry{e->chi + y * (c.codim - popcount(sub & c.contains) - 1),
                                                           std::nullopt};
                }
                if (sub == 0) {
                    break;
                }
            }
        }
    };
    if (!with_e) {
        close_under_subsets();
        return out;
    }
    // E cap D'_K is a CP^{r-1-|K cap contains|}-bundle over Y cap D_{K \ contains}.
    const Subset e_bit = Subset{1} << static_cast<unsigned>(l);
    for (const auto &[b, e] : pair.strata.entries) {
        if ((b & c.contains) != 0 || !e.chi_meet_center) {
            continue;
        }
        for (Subset a = c.contains;; a = (a - 1) & c.contains) {
            const int fiber_chi = c.codim - popcount(a);
            if (fiber_chi > 0) {
                out.strata.entries[e_bit | a | b] = StratumEntry{*e.chi_meet_center * fiber_chi, std::nullopt};
            }
            if (a == 0) {
                break;
            }
        }
    }
    close_under_subsets();
    return out;
}

InducedPairs induced_center_pairs(const SncPair &pair)
{
    check_blowup_input(pair);
    const int l = pair.num_components();
    const CenterData c = *pair.strata.center;
    const StratumTable &t = pair.strata;
    auto id_of = [&](int j) {
        return pair.ids.empty() ? std::to_string(j + 1) : pair.ids[static_cast<std::size_t>(j)];
    };
    auto meets_center = [&](Subset j) {
        const StratumEntry *e = t.find(j);
        return e && e->chi_meet_center;
    };

    InducedPairs out;

    // D_Y = sum_{j not containing Y} m_j (D_j cap Y)
    std::vector<int> y_comps;
    for (int j = 0; j < l; ++j) {
        const Subset bit = Subset{1} << static_cast<unsigned>(j);
        if (!(c.contains & bit) && meets_center(bit)) {
            y_comps.push_back(j);
        }
    }
    SncPair &py = out.on_center;
    py.d = pair.d;
    for (int j : y_comps) {
        py.ids.push_back(id_of(j));
        py.mults.push_back(pair.mults[static_cast<std::size_t>(j)]);
    }
    py.strata.num_components = static_cast<int>(y_comps.size());
    for (Subset k = 0; k < (Subset{1} << static_cast<unsigned>(y_comps.size())); ++k) {
        Subset old = 0;
        for (std::size_t b = 0; b < y_comps.size(); ++b) {
            if (k & (Subset{1} << b)) {
                old |= Subset{1} << static_cast<unsigned>(y_comps[b]);
            }
        }
        if (meets_center(old)) {
            py.strata.entries[k] = StratumEntry{*t.find(old)->chi_meet_center, std::nullopt};
        }
    }

    // D_E = sum_j m_j (D'_j cap E); components containing Y cut E in a
    // sub-bundle of one lower fiber dimension.
    std::vector<int> e_comps;
    for (int j = 0; j < l; ++j) {
        const Subset bit = Subset{1} << static_cast<unsigned>(j);
        if (c.contains & bit) {
            if (c.codim >= 2) {
                e_comps.push_back(j);
            }
        } else if (meets_center(bit)) {
            e_comps.push_back(j);
        }
    }
    SncPair &pe = out.on_exceptional;
    pe.d = pair.d;
    for (int j : e_comps) {
        pe.ids.push_back(id_of(j));
        pe.mults.push_back(pair.mults[static_cast<std::size_t>(j)]);
    }
    pe.strata.num_components = static_cast<int>(e_comps.size());
    for (Subset k = 0; k < (Subset{1} << static_cast<unsigned>(e_comps.size())); ++k) {
        Subset old = 0;
        for (std::size_t b = 0; b < e_comps.size(); ++b) {
            if (k & (Subset{1} << b)) {
                old |= Subset{1} << static_cast<unsigned>(e_comps[b]);
            }
        }
        const int fiber_chi = c.codim - popcount(old & c.contains);
        const Subset outside = old & ~c.contains;
        if (fiber_chi > 0 && meets_center(outside)) {
            pe.strata.entries[k] = StratumEntry{*t.find(outside)->chi_meet_center * fiber_chi, std::nullopt};
        }
    }

    out.chi_d_center = chi_d(py);
    out.chi_d_exceptional = chi_d(pe);
    return out;
}

BlowupReport check_blowup_invariance(const SncPair &pair)
{
    BlowupReport out;
    out.m0 = exceptional_multiplicity(pair);
    const SncPair blown = blowup_transform(pair);
    out.before = chi_d(pair);
    out.after = chi_d(blown);
    out.equal = out.before == out.after;
    return out;
}

SncPair scaled(const SncPair &pair, std::int64_t k)
{
    if (k < 1) {
        throw DomainError("scale factor must be positive");
    }
    SncPair out = pair;
    out.d *= k;
    for (auto &m : out.mults) {
        m *= k;
    }
    return out;
}

bool scale_check(const SncPair &pair, std::int64_t k)
{
    validate(pair);
    if (k > max_abs_mult) {
        throw DomainError("scale factor too large");
    }
    return chi_d(pair) == chi_d(scaled(pair, k));
}

} // namespace cyp::snc
