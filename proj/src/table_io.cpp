#include <cyp/table_io.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace cyp::io
{

using nlohmann::json;

namespace
{

json parse_json(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    } catch (const json::exception &e) {
        // e.g. number literals beyond double range
        throw ParseError(std::string("unreadable JSON: ") + e.what());
    }
}

void only_keys(const json &obj, const std::string &where, std::initializer_list<const char *> allowed)
{
    if (!obj.is_object()) {
        throw ParseError(where + ": expected an object");
    }
    for (const auto &item : obj.items()) {
        bool ok = false;
        for (const char *a : allowed) {
            ok = ok || item.key() == a;
        }
        if (!ok) {
            throw ParseError(where + ": unknown field \"" + item.key() + "\"");
        }
    }
}

const json &require(const json &obj, const std::string &where, const char *key)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(where + ": missing required field \"" + key + "\"");
    }
    return *it;
}

std::int64_t as_int(const json &v, const std::string &where)
{
    if (v.is_number_integer()) {
        if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
            throw ParseError(where + ": integer out of range");
        }
        return v.get<std::int64_t>();
    }
    throw ParseError(where + ": expected an integer");
}

bool as_bool(const json &v, const std::string &where)
{
    if (!v.is_boolean()) {
        throw ParseError(where + ": expected true or false");
    }
    return v.get<bool>();
}

} // namespace

snc::SncPair parse_pair(const std::string &text)
{
    const json doc = parse_json(text);
    only_keys(doc, "$", {"d", "components", "center", "strata"});

    snc::SncPair pair;
    pair.d = as_int(require(doc, "$", "d"), "$.d");

    const json &comps = require(doc, "$", "components");
    if (!comps.is_array()) {
        throw ParseError("$.components: expected an array");
    }
    if (comps.size() > static_cast<std::size_t>(snc::max_components)) {
        throw ParseError("$.components: at most " + std::to_string(snc::max_components) + " components supported");
    }
    std::map<std::string, int> index;
    snc::Subset contains = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string where = "$.components[" + std::to_string(i) + "]";
        const json &c = comps[i];
        only_keys(c, where, {"id", "mult", "contains_center"});
        const json &id = require(c, where, "id");
        if (!id.is_string()) {
            throw ParseError(where + ".id: expected a string");
        }
        const auto name = id.get<std::string>();
        if (name.empty()) {
            throw ParseError(where + ".id: must be nonempty");
        }
        if (!index.emplace(name, static_cast<int>(i)).second) {
            throw ParseError(where + ".id: duplicate component id \"" + name + "\"");
        }
        pair.ids.push_back(name);
        pair.mults.push_back(as_int(require(c, where, "mult"), where + ".mult"));
        if (c.contains("contains_center") && as_bool(c["contains_center"], where + ".contains_center")) {
            contains |= snc::Subset{1} << static_cast<unsigned>(i);
        }
    }
    pair.strata.num_components = static_cast<int>(comps.size());

    if (doc.contains("center") && !doc["center"].is_null()) {
        const json &c = doc["center"];
        only_keys(c, "$.center", {"codim"});
        const auto codim = as_int(require(c, "$.center", "codim"), "$.center.codim");
        if (codim < 1 || codim > snc::max_codim) {
            throw ParseError("$.center.codim: must lie in [1, " + std::to_string(snc::max_codim) + "]");
        }
        pair.strata.center = snc::CenterData{static_cast<int>(codim), contains};
    } else if (contains != 0) {
        throw ParseError("$.components: contains_center is set but \"center\" is null or missing");
    }
    const bool with_center = pair.strata.center.has_value();

    const json &strata = require(doc, "$", "strata");
    if (!strata.is_array()) {
        throw ParseError("$.strata: expected an array");
    }
    std::set<snc::Subset> seen;
    for (std::size_t i = 0; i < strata.size(); ++i) {
        const std::string where = "$.strata[" + std::to_string(i) + "]";
        const json &s = strata[i];
        only_keys(s, where, {"subset", "chi", "nonempty", "chi_meet_center"});
        const json &subset = require(s, where, "subset");
        if (!subset.is_array()) {
            throw ParseError(where + ".subset: expected an array of component ids");
        }
        snc::Subset mask = 0;
        for (std::size_t k = 0; k < subset.size(); ++k) {
            if (!subset[k].is_string()) {
                throw ParseError(where + ".subset[" + std::to_string(k) + "]: expected a component id string");
            }
            auto it = index.find(subset[k].get<std::string>());
            if (it == index.end()) {
                throw ParseError(where + ".subset: unknown component id \"" + subset[k].get<std::string>() + "\"");
            }
            const snc::Subset bit = snc::Subset{1} << static_cast<unsigned>(it->second);
            if (mask & bit) {
                throw ParseError(where + ".subset: component \"" + it->first + "\" listed twice");
            }
            mask |= bit;
        }
        if (!seen.insert(mask).second) {
            throw ParseError(where + ": duplicate entry for this subset");
        }
        const auto chi = as_int(require(s, where, "chi"), where + ".chi");
        const bool nonempty = s.contains("nonempty") ? as_bool(s["nonempty"], where + ".nonempty") : true;
        std::optional<std::int64_t> meet;
        const bool has_meet_key = s.contains("chi_meet_center");
        if (has_meet_key && !s["chi_meet_center"].is_null()) {
            meet = as_int(s["chi_meet_center"], where + ".chi_meet_center");
        }
        if (!nonempty) {
            if (chi != 0 || meet) {
                throw ParseError(where + ": an empty stratum must have chi 0 and no chi_meet_center");
            }
            continue;
        }
        if (with_center && !has_meet_key) {
            throw ParseError(where + ": chi_meet_center is required when a center is given (use null if the "
                                     "center misses this stratum)");
        }
        if (!with_center && meet) {
            throw ParseError(where + ".chi_meet_center: given but the table has no center");
        }
        pair.strata.entries[mask] = snc::StratumEntry{chi, meet};
    }

    snc::validate(pair);
    return pair;
}

nlohmann::ordered_json pair_to_json(const snc::SncPair &pair)
{
    nlohmann::ordered_json out;
    out["d"] = pair.d;
    auto id_of = [&](int j) {
        return pair.ids.empty() ? std::to_string(j + 1) : pair.ids[static_cast<std::size_t>(j)];
    };
    const snc::Subset contains = pair.strata.center ? pair.strata.center->contains : 0;
    out["components"] = nlohmann::ordered_json::array();
    for (int j = 0; j < pair.num_components(); ++j) {
        nlohmann::ordered_json c;
        c["id"] = id_of(j);
        c["mult"] = pair.mults[static_cast<std::size_t>(j)];
        c["contains_center"] = (contains & (snc::Subset{1} << static_cast<unsigned>(j))) != 0;
        out["components"].push_back(std::move(c));
    }
    if (pair.strata.center) {
        out["center"] = {{"codim", pair.strata.center->codim}};
    } else {
        out["center"] = nullptr;
    }
    out["strata"] = nlohmann::ordered_json::array();
    for (const auto &[mask, e] : pair.strata.entries) {
        nlohmann::ordered_json s;
        s["subset"] = nlohmann::ordered_json::array();
        for (int j = 0; j < pair.num_components(); ++j) {
            if (mask & (snc::Subset{1} << static_cast<unsigned>(j))) {
                s["subset"].push_back(id_of(j));
            }
        }
        s["chi"] = e.chi;
        s["nonempty"] = true;
        if (e.chi_meet_center) {
            s["chi_meet_center"] = *e.chi_meet_center;
        } else {
            s["chi_meet_center"] = nullptr;
        }
        out["strata"].push_back(std::move(s));
    }
    return out;
}

hodge::HodgeDiamond parse_diamond(const std::string &text)
{
    const json doc = parse_json(text);
    only_keys(doc, "$", {"n", "h"});
    const auto n = as_int(require(doc, "$", "n"), "$.n");
    if (n < 0 || n > 64) {
        throw ParseError("$.n: dimension must lie in [0, 64]");
    }
    const json &h = require(doc, "$", "h");
    if (!h.is_array()) {
        throw ParseError("$.h: expected an array of rows");
    }
    std::vector<std::vector<std::int64_t>> table;
    for (std::size_t p = 0; p < h.size(); ++p) {
        const std::string where = "$.h[" + std::to_string(p) + "]";
        if (!h[p].is_array()) {
            throw ParseError(where + ": expected an array");
        }
        std::vector<std::int64_t> row;
        for (std::size_t q = 0; q < h[p].size(); ++q) {
            row.push_back(as_int(h[p][q], where + "[" + std::to_string(q) + "]"));
        }
        table.push_back(std::move(row));
    }
    return hodge::HodgeDiamond(static_cast<int>(n), std::move(table));
}

nlohmann::ordered_json diamond_to_json(const hodge::HodgeDiamond &d)
{
    nlohmann::ordered_json out;
    out["n"] = d.dim();
    out["h"] = d.table();
    return out;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace cyp::io
