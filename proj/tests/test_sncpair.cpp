#include <doctest.h>

#include <random>

#include <cyp/sncpair.hpp>
#include <cyp/sncpair_gen.hpp>
#include <cyp/table_io.hpp>

#include "oracles.hpp"

using namespace cyp;
using namespace cyp::snc;

namespace
{

SncPair load(const std::string &name) { return io::parse_pair(io::read_file(std::string(CYPAIRS_TEST_DATA) + "/" + name)); }

// sum over all subsets J of {1..s, inf} of prod_{j in J} (-m_j)/(m_j + d) (r + 1 - |J|),
// restricted to |J| <= r.
Rational cp_oracle(int r, std::int64_t d, const std::vector<std::int64_t> &all)
{
    const int l = static_cast<int>(all.size());
    Rational total;
    for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size > r) {
            continue;
        }
        Rational w(1);
        for (int j = 0; j < l; ++j) {
            if (mask & (1u << j)) {
                const std::int64_t m = all[static_cast<std::size_t>(j)];
                w *= Rational(static_cast<long>(-m), static_cast<long>(m + d));
            }
        }
        total += w * Rational(r + 1 - size);
    }
    return total;
}

SncPair two_points_on_line()
{
    // CP^1 with two points of multiplicities a and b
    SncPair p;
    p.d = 1;
    p.ids = {"p", "q"};
    p.mults = {1, -3};
    p.strata.num_components = 2;
    p.strata.entries[0] = {2, std::nullopt};
    p.strata.entries[1] = {1, std::nullopt};
    p.strata.entries[2] = {1, std::nullopt};
    return p;
}

} // namespace

TEST_CASE("weights")
{
    CHECK(weight(1, 0, {}) == Rational(1));
    CHECK(weight(1, 0b1, {1}) == Rational(-1, 2));
    CHECK(weight(1, 0b1, {-5}) == Rational(-5, 4));
    CHECK(weight(2, 0b11, {1, -3}) == Rational(-1, 3) * Rational(3, -1));
    CHECK(weight(2, 0b10, {1, -3}) == Rational(-3));
    CHECK_THROWS_AS(weight(2, 0b1, {-2}), DomainError);
}

TEST_CASE("chi_d of small pairs")
{
    const SncPair empty = load("empty_divisor.json");
    CHECK(chi_d(empty) == Rational(7));
    CHECK(serial::chi_d(empty) == Rational(7));

    // 2 + w_p + w_q = 2 - 1/2 - 3/2
    CHECK(chi_d(two_points_on_line()) == Rational(0));
    SncPair p = two_points_on_line();
    p.d = 2;
    CHECK(chi_d(p) == Rational(2) + Rational(-1, 3) + Rational(-3));
}

TEST_CASE("CP^r models vanish")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 8);
        const int s = 1 + static_cast<int>(rng() % static_cast<unsigned>(r));
        const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 5);
        std::vector<std::int64_t> mults;
        for (int j = 0; j < s; ++j) {
            mults.push_back(1 + static_cast<std::int64_t>(rng() % 9));
        }
        const CpPair cp = cp_pair(r, s, d, mults);
        std::vector<std::int64_t> all = mults;
        all.push_back(cp.model.m_infinity);
        CAPTURE(r);
        CAPTURE(s);
        CAPTURE(d);
        const Rational by_sum = chi_d(cp.pair);
        CHECK(by_sum == chi_d_via_fprime(cp.model));
        CHECK(by_sum == cp_oracle(r, d, all));
        CHECK(by_sum == serial::chi_d_cp(r, d, all));
        CHECK(by_sum.is_zero());
    }
}

TEST_CASE("CP^r model details")
{
    const CpPair cp = cp_pair(2, 2, 1, {1, 1});
    CHECK(cp.model.m_infinity == -5);
    CHECK(cp.model.f.str() == "t^3 - 9/4*t^2 + 3/2*t - 5/16");
    CHECK(cp.pair.ids == std::vector<std::string>{"1", "2", "inf"});
    CHECK(cp.pair.strata.entries.size() == 7);
    CHECK_THROWS_AS(cp_pair(2, 3, 1, {1, 1, 1}), ValidationError);
    CHECK_THROWS_AS(cp_pair(2, 2, 1, {1}), ValidationError);
    CHECK_THROWS_AS(cp_pair(2, 2, 0, {1, 1}), ValidationError);
    CHECK_THROWS_AS(cp_pair(2, 1, 1, {-1}), ValidationError);
}

TEST_CASE("worked blow-up of a triangle in CP^2")
{
    const SncPair pair = load("cp2_triangle_blowup.json");
    CHECK(exceptional_multiplicity(pair) == 3);
    const BlowupReport rep = check_blowup_invariance(pair);
    CHECK(rep.m0 == 3);
    CHECK(rep.before == Rational(0));
    CHECK(rep.after == Rational(0));
    CHECK(rep.equal);

    const InducedPairs ind = induced_center_pairs(pair);
    CHECK(ind.chi_d_center == Rational(1));
    CHECK(ind.chi_d_exceptional == Rational(1));
    CHECK(ind.on_exceptional.num_components() == 2);

    const SncPair up = blowup_transform(pair);
    REQUIRE(up.num_components() == 4);
    CHECK(up.ids.back() == "E");
    CHECK(up.mults.back() == 3);
    CHECK(up.strata.find(0)->chi == 4);
    CHECK(up.strata.find(0b0011) == nullptr); // strict transforms of lines 1, 2 separate
    CHECK(up.strata.find(0b1000)->chi == 2);
    CHECK(up.strata.find(0b1001)->chi == 1);
    CHECK(up.strata.find(0b1100) == nullptr);
    CHECK_NOTHROW(validate(up));
}

TEST_CASE("exceptional divisor with zero multiplicity is dropped")
{
    // Codimension-one center not contained in any component: m_0 = 0.
    SncPair p = two_points_on_line();
    p.strata.center = CenterData{1, 0};
    p.strata.entries[0].chi_meet_center = 1;
    const SncPair up = blowup_transform(p);
    CHECK(up.num_components() == 2);
    CHECK(chi_d(up) == chi_d(p));
}

TEST_CASE("blow-up invariance on random tables")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const SncPair pair = random_blowup_pair(rng);
        CAPTURE(io::pair_to_json(pair).dump());
        REQUIRE_NOTHROW(validate(pair));
        const BlowupReport rep = check_blowup_invariance(pair);
        CHECK(rep.before == rep.after);
        const SncPair up = blowup_transform(pair);
        CHECK_NOTHROW(validate(up));
    }
}

TEST_CASE("parallel and serial kernels agree")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const SncPair pair = random_pair(rng, 12);
        CHECK(chi_d(pair) == serial::chi_d(pair));
    }
}

TEST_CASE("chi_d is invariant under scaling d and the multiplicities")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const SncPair pair = random_pair(rng);
        const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 7);
        CHECK(scale_check(pair, k));
        CHECK(chi_d(scaled(pair, k)) == chi_d(pair));
    }
    CHECK_THROWS_AS(scaled(two_points_on_line(), 0), DomainError);
}

TEST_CASE("induced pair on a stratum")
{
    const SncPair pair = load("cp2_triangle_blowup.json");
    const SncPair line = divisor_on_stratum(pair, 0b001);
    CHECK(line.num_components() == 2);
    CHECK(line.strata.find(0)->chi == 2);
    // 2 + w_2 + w_3
    CHECK(chi_d(line) == Rational(2) + Rational(-1, 2) + Rational(-5, 4));
    CHECK_THROWS_AS(divisor_on_stratum(cp_pair(1, 1, 1, {1}).pair, 0b11), DomainError);
}

TEST_CASE("validation errors name the problem")
{
    auto message_of = [](const std::string &file) {
        try {
            io::parse_pair(io::read_file(std::string(CYPAIRS_TEST_DATA) + "/" + file));
        } catch (const ValidationError &e) {
            return std::string(e.what());
        }
        return std::string("accepted");
    };
    CHECK(message_of("bad_superset.json").find("supersets of empty strata must be empty") != std::string::npos);
    CHECK(message_of("bad_minus_d.json").find("= -d") != std::string::npos);
    CHECK(message_of("bad_negative_center.json").find("m_j > 0") != std::string::npos);

    SncPair p = two_points_on_line();
    p.d = 0;
    CHECK_THROWS_AS(validate(p), ValidationError);
    p = two_points_on_line();
    p.ids = {"p", "p"};
    CHECK_THROWS_AS(validate(p), ValidationError);
    p = two_points_on_line();
    p.mults[0] = 0;
    CHECK_THROWS_AS(validate(p), ValidationError);
    p = two_points_on_line();
    p.strata.entries.erase(0);
    CHECK_THROWS_AS(validate(p), ValidationError);
    p = two_points_on_line();
    p.strata.center = CenterData{2, 0b01};
    p.strata.entries[0].chi_meet_center = 1;
    p.strata.entries[1].chi_meet_center = 2;
    CHECK_THROWS_AS(validate(p), ValidationError); // Y cap D_p = Y must repeat chi(Y)
    p = two_points_on_line();
    p.d = -1;
    p.mults = {2, 3};
    p.strata.center = CenterData{1, 0};
    p.strata.entries[0].chi_meet_center = 1;
    CHECK_NOTHROW(chi_d(p));
    CHECK_THROWS_AS(blowup_transform(p), ValidationError);
}
