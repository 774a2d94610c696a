#ifndef SKEWLAB_VERIFY_HPP
#define SKEWLAB_VERIFY_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace skewlab::verify {

using json = nlohmann::ordered_json;

// Outcome of one registered check. status is "pass", "fail", or "skip";
// reason is empty exactly when the check passed.
struct CheckResult {
    std::string id;
    std::string status;
    std::string reason;
    std::map<std::string, int64_t> counters;
};

// A campaign names a target construction, the checks to run against it, and
// where the report goes. All randomness inside a run derives from seed, so a
// fixed campaign reproduces its report byte for byte outside the timing block.
struct Campaign {
    std::string name;
    std::vector<std::string> checks;
    int64_t p = 3;
    int64_t prec = 8;
    int64_t samples = 200;
    uint64_t seed = 1729;
    std::vector<std::string> b;  // gbar coefficient literals
    int64_t field_p = 3;
    int64_t field_n = 2;
    std::string out;             // empty writes to stdout
    std::string format = "json";
    int64_t enum_bound = 0;      // 0 keeps the process default
};

// Rejected command lines and malformed campaigns. Maps to exit code 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown by parse_cli for --help; the caller prints text and exits 0.
struct HelpRequested {
    std::string text;
};

const std::vector<std::string>& registered_checks();
bool is_registered_check(const std::string& id);

Campaign ex1_campaign(int64_t p, int64_t prec, int64_t samples, uint64_t seed);
Campaign ore_campaign(int64_t samples, uint64_t seed);
Campaign gbar_campaign(std::vector<std::string> b, int64_t field_p, int64_t field_n,
                       uint64_t seed);
Campaign cross_module_campaign(int64_t samples, uint64_t seed);

// Runs every check in the campaign, catching per-check failures so the run
// always produces a complete report. Throws ConfigError only for campaigns
// that name unregistered checks or a nonprime p.
json run_campaign(const Campaign& c);

// The full default battery: ex1 for p in {2, 3, 5}, the ore selftest, a
// default gbar instance, and the cross-module checks, as one aggregate report.
json run_battery(int64_t prec, int64_t samples, uint64_t seed);

// Removes every "timing" member, recursively. Reports from identical
// campaigns compare equal after stripping.
json strip_timing(json j);

std::string render_markdown(const json& report);

// 0 when no check failed, 1 otherwise.
int exit_code(const json& report);

// argv without the program name. Throws ConfigError or HelpRequested.
Campaign parse_cli(const std::vector<std::string>& args);

// Writes the report to c.out (stdout when empty) in c.format.
// Throws ConfigError when the path cannot be written.
void write_report(const json& report, const Campaign& c);

}  // namespace skewlab::verify

#endif
