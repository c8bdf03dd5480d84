#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hgmod/scenarios.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace hgmod;
namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an hgmod::Error");
    return ErrorKind::ParseError;
}

std::string error_text(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

std::string read_file(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cli(const std::string& args)
{
    std::string cmd = "cd " HGMOD_SOURCE_DIR " && " HGMOD_CLI " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* minimal = "fixture = \"cyclotomic-5\"\nprimes = [5]\n[checks]\ntheorem = true\n";

} // namespace

TEST_CASE("scenario parsing and defaults")
{
    Scenario s = parse_scenario(minimal);
    CHECK(s.name == "cyclotomic-5");
    CHECK(s.primes == std::vector<long>{5});
    CHECK(s.ideal_powers == std::vector<int>{-2, -1, 0, 1, 2});
    CHECK(s.theorem);
    CHECK_FALSE(s.enumerate);
    CHECK(s.search_bound == 1'000'000);
    CHECK(s.format == "json");
}

TEST_CASE("schema errors name the field")
{
    struct Bad {
        const char* text;
        const char* field;
    };
    for (Bad b : {Bad{"primes = [5]\n", "fixture"}, Bad{"fixture = 3\n", "fixture"},
                  Bad{"fixture = \"cyclotomic-5\"\nprimes = [4]\n", "primes[0]"},
                  Bad{"fixture = \"cyclotomic-5\"\nprimes = [5]\n[checks]\ntheorem = \"yes\"\n", "checks.theorem"},
                  Bad{"fixture = \"cyclotomic-5\"\nformat = \"yaml\"\n", "format"},
                  Bad{"fixture = \"cyclotomic-5\"\nextra = 1\n", "extra"},
                  Bad{"fixture = \"cyclotomic-5\"\n[bounds]\nsearch = 0\n", "bounds.search"},
                  Bad{"fixture = \"cyclotomic-5\"\n[checks]\ntheorem = true\n", "primes"},
                  Bad{"fixture = \"kummer-cubic-5\"\nprimes = [5]\n[checks]\ndescent = true\n", "descent.subfield"}}) {
        CAPTURE(b.text);
        std::string msg = error_text([&] { parse_scenario(b.text); });
        CHECK(msg.find("SchemaError") == 0);
        CHECK(msg.find(std::string("'") + b.field + "'") != std::string::npos);
    }
    CHECK(kind_of([] { parse_scenario("fixture = [\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { load_scenario("/nonexistent/scenario.toml"); }) == ErrorKind::UnknownFixture);
    Scenario unknown = parse_scenario("fixture = \"nope\"\n[checks]\nenumerate = true\n");
    CHECK(kind_of([&] { run_scenario(unknown); }) == ErrorKind::UnknownFixture);
    Scenario bad_name = parse_scenario("fixture = \"kummer-cubic-5\"\nprimes = [5]\n[checks]\ndescent = true\n[descent]\nsubfield = [\"rho\"]\n");
    CHECK(error_text([&] { run_scenario(bad_name); }).find("descent.subfield[0]") != std::string::npos);
}

TEST_CASE("environment overrides")
{
    Scenario s = parse_scenario(minimal);
    ::setenv("HGMOD_SEARCH_BOUND", "77", 1);
    ::setenv("HGMOD_ENUM_BOUND", "6", 1);
    apply_environment_overrides(s);
    CHECK(s.search_bound == 77);
    CHECK(s.enumeration_bound == 6);
    ::setenv("HGMOD_SEARCH_BOUND", "-1", 1);
    CHECK(kind_of([&] { apply_environment_overrides(s); }) == ErrorKind::SchemaError);
    ::unsetenv("HGMOD_SEARCH_BOUND");
    ::unsetenv("HGMOD_ENUM_BOUND");
}

TEST_CASE("builtin scenarios: verdicts and determinism")
{
    for (const auto& name : builtin_scenario_names()) {
        CAPTURE(name);
        Scenario s = load_scenario(name);
        Report r = run_scenario(s);
        CHECK(r.exit_code() == (name == "cyclotomic9-wild" ? 1 : 0));
        CHECK(report_to_json(r) == report_to_json(run_scenario(s)));
        auto j = nlohmann::json::parse(report_to_json(r));
        CHECK(j["verdict"] == (r.passed() ? "pass" : "fail"));
        bool all = true;
        for (const auto& c : j["checks"]) all = all && c["passed"].get<bool>();
        CHECK(all == r.passed());
    }
}

TEST_CASE("counterexample report carries the witness")
{
    Report r = run_scenario(load_scenario("kummer-counterexample"));
    auto j = nlohmann::json::parse(report_to_json(r));
    const auto& ce = j["checks"][1];
    REQUIRE(ce["name"] == "counterexample");
    CHECK(ce["details"]["witness"]["tau"] == "1/5*a^2");
    CHECK(ce["details"]["witnessInLambdaG"] == false);
    CHECK(ce["details"]["witnessInAssociatedOrder"] == true);
    CHECK(ce["details"]["overLambdaG"]["status"] == "NotFree");
    CHECK(ce["details"]["overAssociatedOrder"]["status"] == "Free");
}

TEST_CASE("wild prime is reported on the check")
{
    Report r = run_scenario(load_scenario("cyclotomic9-wild"));
    REQUIRE(r.checks.size() == 1);
    CHECK_FALSE(r.checks[0].passed);
    CHECK(r.checks[0].error.find("WildRamification") == 0);
}

TEST_CASE("shipped scenario and fixture files match the builtins")
{
    fs::path root(HGMOD_SOURCE_DIR);
    for (const auto& name : builtin_scenario_names()) {
        CAPTURE(name);
        CHECK(parse_scenario(read_file(root / "scenarios" / (name + ".toml"))) == load_scenario(name));
    }
    for (const auto& name : {"kummer-cubic-5", "cyclotomic-7", "d3-abstract"}) {
        CAPTURE(name);
        Fixture from_file = fixture_from_json(read_file(root / "fixtures" / (std::string(name) + ".json")));
        CHECK(fixture_to_json(from_file) == fixture_to_json(builtin_fixture(name)));
    }
}

TEST_CASE("describe and enumerate text")
{
    CHECK(list_fixtures_text().find("kummer-cubic-5") != std::string::npos);
    std::string c7 = describe_structure("cyclotomic-7", 0);
    CHECK(c7.find("classical structure") != std::string::npos);
    CHECK(c7.find("G0 acts trivially") != std::string::npos);
    std::string listing = enumerate_text("kummer-cubic-5", false);
    std::istringstream lines(listing);
    std::string line;
    int lambda_index = -1, count = 0;
    while (std::getline(lines, line)) {
        if (line.find("canonical") != std::string::npos) lambda_index = count;
        ++count;
    }
    REQUIRE(lambda_index >= 0);
    CHECK(describe_structure("kummer-cubic-5", lambda_index).find("nonabelian, type D3") != std::string::npos);
    CHECK(enumerate_text("kummer-cubic-5", true).find("nonabelian") == std::string::npos);
    CHECK(kind_of([] { describe_structure("nope", 0); }) == ErrorKind::UnknownFixture);
    CHECK(kind_of([] { describe_structure("cyclotomic-3", 5); }) == ErrorKind::SchemaError);
}

TEST_CASE("CLI exit codes")
{
    CHECK(cli("run kummer-counterexample") == 0);
    CHECK(cli("run scenarios/kummer-from-file.toml") == 0);
    CHECK(cli("run cyclotomic9-wild") == 1);
    CHECK(cli("run /nonexistent.toml") == 2);
    CHECK(cli("describe nope 0") == 2);
    CHECK(cli("list-fixtures") == 0);
    CHECK(cli("enumerate d3-abstract --commutative-only") == 0);
    CHECK(cli("frobnicate") == 2);
    // search bound too small: the theorem check fails with SearchTooLarge
    int status = std::system("cd " HGMOD_SOURCE_DIR " && HGMOD_SEARCH_BOUND=10 " HGMOD_CLI " run cyclotomic7-tame >/dev/null 2>&1");
    CHECK((WIFEXITED(status) && WEXITSTATUS(status) == 1));

    fs::path dir = fs::temp_directory_path() / "hgmod-cli-test";
    fs::create_directories(dir);
    std::string a = (dir / "a.json").string(), b = (dir / "b.json").string(), md = (dir / "r.md").string();
    REQUIRE(cli("run kummer-descent --report " + a + " --markdown " + md) == 0);
    REQUIRE(cli("run kummer-descent --report " + b) == 0);
    CHECK(read_file(a) == read_file(b));
    CHECK(read_file(md).find("Verdict: pass") != std::string::npos);
    fs::remove_all(dir);
}
