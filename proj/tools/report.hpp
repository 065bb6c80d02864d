#ifndef CYPAIRS_REPORT_HPP
#define CYPAIRS_REPORT_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cyp::cli
{

struct Check {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

// Outcome of one command. Checks are kept sorted by name so that text and
// JSON output are deterministic; values keep insertion order.
class Report
{
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    void check(std::string name, bool pass, std::string expected, std::string actual);
    // Pass iff expected == actual.
    void check_equal(std::string name, const std::string &expected, const std::string &actual);
    void value(std::string key, std::string v);
    void note(std::string text);

    const std::string &command() const { return command_; }
    const std::vector<Check> &checks() const { return checks_; }
    const std::vector<std::pair<std::string, std::string>> &values() const { return values_; }
    bool overall() const;

    nlohmann::ordered_json to_json() const;
    void print_text(std::ostream &os) const;

private:
    std::string command_;
    std::vector<Check> checks_;
    std::vector<std::pair<std::string, std::string>> values_;
    std::vector<std::string> notes_;
};

} // namespace cyp::cli

#endif
