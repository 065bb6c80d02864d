#include <cyp/sncpair_gen.hpp>

#include <algorithm>
#include <set>

namespace cyp::snc
{

namespace
{

int uniform(std::mt19937_64 &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::int64_t random_mult(std::mt19937_64 &rng, std::int64_t d, bool positive)
{
    for (;;) {
        const std::int64_t m = positive ? uniform(rng, 1, 9) : uniform(rng, -12, 12);
        if (m != 0 && m != -d) {
            return m;
        }
    }
}

// Down-closure of a family of subsets.
std::set<Subset> down_closure(const std::vector<Subset> &tops)
{
    std::set<Subset> out;
    for (Subset t : tops) {
        for (Subset a = t;; a = (a - 1) & t) {
            out.insert(a);
            if (a == 0) {
                break;
            }
        }
    }
    return out;
}

std::vector<Subset> random_tops(std::mt19937_64 &rng, int l, int count)
{
    std::vector<Subset> tops{0};
    for (int i = 0; i < count; ++i) {
        Subset t = 0;
        for (int j = 0; j < l; ++j) {
            if (uniform(rng, 0, 2) == 0) {
                t |= Subset{1} << static_cast<unsigned>(j);
            }
        }
        tops.push_back(t);
    }
    return tops;
}

} // namespace

SncPair random_pair(std::mt19937_64 &rng, int max_components)
{
    SncPair pair;
    do {
        pair.d = uniform(rng, -5, 5);
    } while (pair.d == 0);
    const int l = uniform(rng, 0, max_components);
    for (int j = 0; j < l; ++j) {
        pair.ids.push_back("D" + std::to_string(j + 1));
        pair.mults.push_back(random_mult(rng, pair.d, false));
    }
    pair.strata.num_components = l;
    for (Subset j : down_closure(random_tops(rng, l, uniform(rng, 0, 2 * l)))) {
        pair.strata.entries[j] = StratumEntry{uniform(rng, -9, 9), std::nullopt};
    }
    return pair;
}

SncPair random_blowup_pair(std::mt19937_64 &rng, int max_components)
{
    SncPair pair;
    pair.d = uniform(rng, 1, 5);
    const int l = uniform(rng, 1, max_components);
    const int r = uniform(rng, 1, 5);
    const int s = uniform(rng, 0, std::min(r, l));

    // The first s components (after a shuffle of ids) contain the center.
    std::vector<int> order(static_cast<std::size_t>(l));
    for (int j = 0; j < l; ++j) {
        order[static_cast<std::size_t>(j)] = j;
    }
    std::shuffle(order.begin(), order.end(), rng);
    Subset contains = 0;
    for (int i = 0; i < s; ++i) {
        contains |= Subset{1} << static_cast<unsigned>(order[static_cast<std::size_t>(i)]);
    }
    for (int j = 0; j < l; ++j) {
        const bool in_center = contains & (Subset{1} << static_cast<unsigned>(j));
        pair.ids.push_back("D" + std::to_string(j + 1));
        pair.mults.push_back(random_mult(rng, pair.d, in_center));
    }
    pair.strata.num_components = l;
    pair.strata.center = CenterData{r, contains};

    // Strata of the complement met by the center, then every stratum that
    // must exist because of them.
    const Subset outside_all = ((Subset{1} << static_cast<unsigned>(l)) - 1) & ~contains;
    std::vector<Subset> meet_tops = random_tops(rng, l, uniform(rng, 0, l));
    for (auto &t : meet_tops) {
        t &= outside_all;
    }
    const std::set<Subset> meets = down_closure(meet_tops);
    std::vector<Subset> tops = random_tops(rng, l, uniform(rng, 0, 2 * l));
    for (Subset b : meets) {
        tops.push_back(b | contains);
    }
    std::vector<std::int64_t> meet_chi(std::size_t{1} << static_cast<unsigned>(l), 0);
    for (Subset b : meets) {
        meet_chi[b] = uniform(rng, -9, 9);
    }
    for (Subset j : down_closure(tops)) {
        StratumEntry e{uniform(rng, -9, 9), std::nullopt};
        const Subset outside = j & ~contains;
        if (meets.count(outside)) {
            e.chi_meet_center = meet_chi[outside];
        }
        pair.strata.entries[j] = e;
    }
    return pair;
}

} // namespace cyp::snc
