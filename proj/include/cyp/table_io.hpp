#ifndef CYP_TABLE_IO_HPP
#define CYP_TABLE_IO_HPP

#include <string>

#include <json.hpp>

#include <cyp/errors.hpp>
#include <cyp/hodge.hpp>
#include <cyp/sncpair.hpp>

// JSON formats for stratum tables and Hodge diamonds.
//
// Stratum table:
//   { "d": int,
//     "components": [ { "id": string, "mult": int, "contains_center": bool } ],
//     "center": { "codim": int } | null,
//     "strata": [ { "subset": [ids], "chi": int, "nonempty": bool,
//                   "chi_meet_center": int | null } ] }
// Omitted subsets are empty strata; entries with "nonempty": false are
// explicit empty strata and must carry chi 0. With a center present every
// nonempty stratum must state chi_meet_center, null meaning Y cap D_J = {}.
//
// Diamond: { "n": int, "h": [[int, ...], ...] } row-major in p.
namespace cyp::io
{

// Syntax error or schema violation, message anchored at line/column or a
// JSON path.
struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};

snc::SncPair parse_pair(const std::string &text);
nlohmann::ordered_json pair_to_json(const snc::SncPair &pair);

hodge::HodgeDiamond parse_diamond(const std::string &text);
nlohmann::ordered_json diamond_to_json(const hodge::HodgeDiamond &d);

// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string &path);

} // namespace cyp::io

#endif
