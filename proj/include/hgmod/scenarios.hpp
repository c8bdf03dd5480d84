#pragma once

#include "hgmod/errors.hpp"
#include "hgmod/fixtures.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hgmod {

inline constexpr const char* tool_name = "hgmod";
inline constexpr const char* tool_version = "0.1.0";

struct Scenario {
    std::string name;
    std::string fixture;    // builtin name or JSON path
    std::vector<long> primes;
    std::vector<int> ideal_powers{-2, -1, 0, 1, 2};
    std::string format = "json";    // json | markdown

    bool enumerate = false;
    bool commutative_only = false;
    bool theorem = false;
    bool counterexample = false;
    bool descent = false;
    bool global = false;

    std::vector<std::string> descent_subfield;    // names of elements generating G_L
    std::vector<int> descent_powers{0};
    long global_prime = 0;    // prime whose uniformizer builds the global ideals
    std::vector<int> global_powers{0};

    int enumeration_bound = 8;
    std::uint64_t search_bound = 1'000'000;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/* Throws ParseError on bad TOML and SchemaError naming the offending field. */
Scenario parse_scenario(std::string_view toml_text);
/* A builtin scenario name or a path to a TOML file. */
Scenario load_scenario(const std::string& reference);
std::vector<std::string> builtin_scenario_names();
std::string builtin_scenario_text(const std::string& name);    // throws UnknownFixture

/* HGMOD_ENUM_BOUND and HGMOD_SEARCH_BOUND; throws SchemaError on bad values. */
void apply_environment_overrides(Scenario& scenario);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string error;    // "Kind: message" when the check threw
    std::string details_json;    // serialized object
    double seconds = 0;    // wall time, kept out of the JSON report
};

struct Report {
    Scenario scenario;
    std::vector<CheckResult> checks;
    bool passed() const;
    int exit_code() const { return passed() ? 0 : 1; }
};

/* Runs the flagged checks in a fixed order. Input errors (fixture, schema)
 * propagate as exceptions; failures inside a check are recorded in the report. */
Report run_scenario(const Scenario& scenario);

/* Deterministic: identical scenarios give byte-identical output. */
std::string report_to_json(const Report& report);
std::string report_to_markdown(const Report& report);

/* Text for the describe / enumerate / list-fixtures commands. */
std::string list_fixtures_text();
std::string describe_structure(const std::string& fixture, int index, int enumeration_bound = 8);
std::string enumerate_text(const std::string& fixture, bool commutative_only, int enumeration_bound = 8);

/* Errors caused by the input rather than by a check; the CLI exits with 2. */
bool is_input_error(ErrorKind kind);

} // namespace hgmod
