#ifndef CYPAIRS_TESTS_FUZZ_HPP
#define CYPAIRS_TESTS_FUZZ_HPP

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include <cyp/errors.hpp>
#include <cyp/sncpair.hpp>
#include <cyp/table_io.hpp>

namespace fuzz
{

using namespace cyp;

// Byte-level and token-level damage to a valid document.
inline std::string mutate(std::mt19937_64 &rng, std::string s)
{
    static const std::vector<std::string> tokens = {
        "null", "true", "-1", "0", "1e400", "99999999999999999999", "\"\"", "[]", "{}", "\"E\"", ",", ":", "\"x\"",
        "-2", "1.5", "\"1\"", "[\"1\",\"1\"]"};
    const int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits && !s.empty(); ++e) {
        const std::size_t pos = rng() % s.size();
        switch (rng() % 5) {
        case 0:
            s.erase(pos, 1 + rng() % 6);
            break;
        case 1:
            s.insert(pos, 1, static_cast<char>(rng() % 128));
            break;
        case 2:
            s.insert(pos, tokens[rng() % tokens.size()]);
            break;
        case 3: {
            // replace the next number with a token
            const std::size_t d = s.find_first_of("0123456789", pos);
            if (d != std::string::npos) {
                s.replace(d, 1, tokens[rng() % tokens.size()]);
            }
            break;
        }
        default:
            s = s.substr(0, pos);
            break;
        }
    }
    return s;
}

inline nlohmann::json random_tree(std::mt19937_64 &rng, int depth)
{
    static const std::vector<std::string> keys = {"d", "components", "center", "strata", "id", "mult",
                                                  "contains_center", "codim", "subset", "chi", "nonempty",
                                                  "chi_meet_center", "n", "h"};
    switch (depth > 3 ? rng() % 4 : rng() % 6) {
    case 0:
        return nullptr;
    case 1:
        return static_cast<std::int64_t>(rng() % 11) - 5;
    case 2:
        return rng() % 2 == 0;
    case 3:
        return std::to_string(rng() % 4);
    case 4: {
        nlohmann::json a = nlohmann::json::array();
        const int k = static_cast<int>(rng() % 4);
        for (int i = 0; i < k; ++i) {
            a.push_back(random_tree(rng, depth + 1));
        }
        return a;
    }
    default: {
        nlohmann::json o = nlohmann::json::object();
        const int k = static_cast<int>(rng() % 5);
        for (int i = 0; i < k; ++i) {
            o[keys[rng() % keys.size()]] = random_tree(rng, depth + 1);
        }
        return o;
    }
    }
}

// Any outcome but a crash or an unexpected exception type.
inline bool handled(const std::string &text)
{
    try {
        const auto pair = io::parse_pair(text);
        (void)snc::chi_d(pair);
        if (pair.strata.center && pair.d > 0) {
            (void)snc::check_blowup_invariance(pair);
        }
        return true;
    } catch (const ValidationError &) {
        return true;
    } catch (const DomainError &) {
        return true;
    }
}

} // namespace fuzz

#endif
