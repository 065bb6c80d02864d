#include "report.hpp"

#include <algorithm>

namespace cyp::cli
{

void Report::check(std::string name, bool pass, std::string expected, std::string actual)
{
    Check c{std::move(name), pass, std::move(expected), std::move(actual)};
    auto pos = std::upper_bound(checks_.begin(), checks_.end(), c,
                                [](const Check &a, const Check &b) { return a.name < b.name; });
    checks_.insert(pos, std::move(c));
}

void Report::check_equal(std::string name, const std::string &expected, const std::string &actual)
{
    check(std::move(name), expected == actual, expected, actual);
}

void Report::value(std::string key, std::string v) { values_.emplace_back(std::move(key), std::move(v)); }

void Report::note(std::string text) { notes_.push_back(std::move(text)); }

bool Report::overall() const
{
    return std::all_of(checks_.begin(), checks_.end(), [](const Check &c) { return c.pass; });
}

nlohmann::ordered_json Report::to_json() const
{
    nlohmann::ordered_json out;
    out["command"] = command_;
    out["values"] = nlohmann::ordered_json::object();
    for (const auto &[k, v] : values_) {
        out["values"][k] = v;
    }
    out["checks"] = nlohmann::ordered_json::array();
    for (const auto &c : checks_) {
        out["checks"].push_back({{"name", c.name},
                                 {"status", c.pass ? "pass" : "fail"},
                                 {"expected", c.expected},
                                 {"actual", c.actual}});
    }
    if (!notes_.empty()) {
        out["notes"] = notes_;
    }
    out["overall"] = overall() ? "pass" : "fail";
    return out;
}

void Report::print_text(std::ostream &os) const
{
    os << command_ << "\n";
    std::size_t width = 0;
    for (const auto &[k, v] : values_) {
        width = std::max(width, k.size());
    }
    for (const auto &[k, v] : values_) {
        os << "  " << k << std::string(width - k.size(), ' ') << " = " << v << "\n";
    }
    for (const auto &n : notes_) {
        os << "  note: " << n << "\n";
    }
    for (const auto &c : checks_) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": expected " << c.expected << ", got "
           << c.actual << "\n";
    }
    os << "overall: " << (overall() ? "pass" : "fail") << "\n";
}

} // namespace cyp::cli
