#include "hgmod/scenarios.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace hgmod;

namespace {

bool write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    out << text;
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

int env_enum_bound()
{
    Scenario probe;
    apply_environment_overrides(probe);
    return probe.enumeration_bound;
}

int run_command(const std::string& reference, const std::string& report_path, const std::string& markdown_path)
{
    Scenario scenario = load_scenario(reference);
    apply_environment_overrides(scenario);
    Report report = run_scenario(scenario);

    std::string json = report_to_json(report);
    std::string markdown = report_to_markdown(report);
    if (!report_path.empty() && !write_file(report_path, json)) return 2;
    if (!markdown_path.empty() && !write_file(markdown_path, markdown)) return 2;
    if (report_path.empty() && markdown_path.empty()) std::cout << (scenario.format == "markdown" ? markdown : json);

    for (const auto& c : report.checks)
        std::cerr << (c.passed ? "pass  " : "FAIL  ") << c.name << "  (" << c.seconds << " s)"
                  << (c.error.empty() ? "" : "  " + c.error) << "\n";
    std::cerr << "verdict: " << (report.passed() ? "pass" : "fail") << "\n";
    return report.exit_code();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hopf-Galois module structure checks"};
    app.require_subcommand(1);

    std::string reference, report_path, markdown_path;
    auto* run = app.add_subcommand("run", "Run a scenario (TOML file or builtin name)");
    run->add_option("scenario", reference, "scenario file or builtin name")->required();
    run->add_option("--report", report_path, "write the JSON report here");
    run->add_option("--markdown", markdown_path, "write a markdown summary here");

    app.add_subcommand("list-fixtures", "List builtin fixtures");
    app.add_subcommand("list-scenarios", "List builtin scenarios");

    std::string fixture;
    int index = 0;
    auto* describe = app.add_subcommand("describe", "Describe one normalized regular subgroup");
    describe->add_option("fixture", fixture)->required();
    describe->add_option("index", index)->required();

    auto* export_fixture = app.add_subcommand("export-fixture", "Print a builtin fixture as JSON");
    export_fixture->add_option("fixture", fixture)->required();

    bool commutative_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "List the regular subgroups normalized by lambda(G)");
    enumerate->add_option("fixture", fixture)->required();
    enumerate->add_flag("--commutative-only", commutative_only);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return run_command(reference, report_path, markdown_path);
        if (app.got_subcommand("list-fixtures")) std::cout << list_fixtures_text();
        if (app.got_subcommand("list-scenarios"))
            for (const auto& name : builtin_scenario_names()) std::cout << name << "\n";
        if (describe->parsed()) std::cout << describe_structure(fixture, index, env_enum_bound());
        if (export_fixture->parsed()) std::cout << fixture_to_json(load_fixture(fixture)) << "\n";
        if (enumerate->parsed()) std::cout << enumerate_text(fixture, commutative_only, env_enum_bound());
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_error(e.kind()) ? 2 : 1;
    }
}
