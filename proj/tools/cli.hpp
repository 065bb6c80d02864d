#ifndef CYPAIRS_CLI_HPP
#define CYPAIRS_CLI_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <cyp/errors.hpp>
#include <cyp/hodge.hpp>
#include <cyp/sncpair.hpp>

#include "report.hpp"

namespace cyp::cli
{

// Invalid flag values; mapped to exit code 2 like every input error.
struct UsageError : ValidationError {
    using ValidationError::ValidationError;
};

inline constexpr std::uint64_t default_seed = 7;

Report cmd_identities(int max_m);
Report cmd_chi_d_cp(int r, int s, std::int64_t d, const std::vector<std::int64_t> &mults);
Report cmd_chi_d_table(const snc::SncPair &pair);
Report cmd_blowup_check(const snc::SncPair &pair);
Report cmd_blowup_random(int count, std::uint64_t seed, int max_components = 8);
Report cmd_hrr_cp(int n, int p, int twist);
Report cmd_hodge_bundle(const hodge::HodgeDiamond &base, int fiber_dim);
Report cmd_hodge_blowup(const hodge::HodgeDiamond &x, const hodge::HodgeDiamond &y, int codim);
Report cmd_hodge_correction(const hodge::HodgeDiamond &d);
Report cmd_hodge_ledger(const hodge::HodgeDiamond &d);

// "point", "cp<N>", "empty<N>" or a path to a diamond JSON file.
hodge::HodgeDiamond resolve_diamond(const std::string &spec);

// Comma-separated integers; empty string gives an empty list.
std::vector<std::int64_t> parse_int_list(const std::string &text);

// Full command line (without the program name). Exit codes: 0 every check
// passed, 1 a check failed, 2 invalid input.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cyp::cli

#endif
