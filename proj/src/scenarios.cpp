#include "hgmod/scenarios.hpp"

#include "hgmod/errors.hpp"
#include "hgmod/orders.hpp"

#include "json.hpp"
#include "toml.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace hgmod {

using ordered_json = nlohmann::ordered_json;

namespace {

// ---- builtin scenarios ----

const std::map<std::string, std::string>& builtin_scenarios()
{
    static const std::map<std::string, std::string> table{
        {"kummer-counterexample", R"(name = "kummer-counterexample"
fixture = "kummer-cubic-5"
primes = [5]

[checks]
enumerate = true
counterexample = true
)"},
        {"cyclotomic7-tame", R"(name = "cyclotomic7-tame"
fixture = "cyclotomic-7"
primes = [7]
idealPowers = [-2, -1, 0, 1, 2]

[checks]
enumerate = true
commutativeOnly = true
theorem = true
)"},
        {"cyclotomic5-tame", R"(name = "cyclotomic5-tame"
fixture = "cyclotomic-5"
primes = [5]
idealPowers = [-2, -1, 0, 1, 2]

[checks]
enumerate = true
commutativeOnly = true
theorem = true
)"},
        {"kummer-descent", R"(name = "kummer-descent"
fixture = "kummer-cubic-5"
primes = [5]

[checks]
descent = true

[descent]
subfield = ["tau"]
idealPowers = [0, 1, 3]
)"},
        {"cyclotomic7-global", R"(name = "cyclotomic7-global"
fixture = "cyclotomic-7"
primes = [2, 7]

[checks]
global = true

[global]
prime = 7
idealPowers = [0, 2]
)"},
        {"cyclotomic9-wild", R"(name = "cyclotomic9-wild"
fixture = "cyclotomic-9"
primes = [3]
idealPowers = [0]

[checks]
theorem = true
)"},
    };
    return table;
}

// ---- TOML reading ----

[[noreturn]] void schema_error(const std::string& field, const std::string& what)
{
    throw Error(ErrorKind::SchemaError, "field '" + field + "': " + what);
}

template <class T>
T integer_field(const toml::node& node, const std::string& field)
{
    auto v = node.value<std::int64_t>();
    if (!node.is_integer() || !v) schema_error(field, "expected an integer");
    return static_cast<T>(*v);
}

template <class T>
std::vector<T> integer_list(const toml::node* node, const std::string& field)
{
    const toml::array* arr = node->as_array();
    if (!arr) schema_error(field, "expected an array of integers");
    std::vector<T> out;
    for (std::size_t i = 0; i < arr->size(); ++i) out.push_back(integer_field<T>(*arr->get(i), field + "[" + std::to_string(i) + "]"));
    return out;
}

std::string string_field(const toml::node* node, const std::string& field)
{
    auto v = node->value<std::string>();
    if (!node->is_string() || !v) schema_error(field, "expected a string");
    return *v;
}

bool bool_field(const toml::node* node, const std::string& field)
{
    auto v = node->value<bool>();
    if (!node->is_boolean() || !v) schema_error(field, "expected a boolean");
    return *v;
}

void reject_unknown(const toml::table& table, const std::string& prefix, std::initializer_list<std::string_view> known)
{
    for (const auto& [key, value] : table) {
        (void)value;
        bool ok = false;
        for (auto k : known) ok = ok || key.str() == k;
        if (!ok) schema_error(prefix + std::string(key.str()), "unknown key");
    }
}

const toml::table* subtable(const toml::table& root, const std::string& name)
{
    const toml::node* node = root.get(name);
    if (!node) return nullptr;
    if (!node->is_table()) schema_error(name, "expected a table");
    return node->as_table();
}

// ---- JSON helpers ----

ordered_json strings(const Vector& v)
{
    ordered_json out = ordered_json::array();
    for (const auto& s : to_strings(v)) out.push_back(s);
    return out;
}

ordered_json freeness_json(const FreenessResult& r)
{
    ordered_json j;
    j["status"] = to_string(r.status);
    j["generatorCoords"] = r.generator ? strings(*r.generator) : ordered_json(nullptr);
    j["searchSize"] = r.search_size;
    return j;
}

std::string error_text(const Error& e)
{
    return e.what();
}

// ---- checks ----

struct CheckOutcome {
    bool passed = false;
    ordered_json details = ordered_json::object();
};

std::vector<RegularSubgroup> structures_of(const FiniteGroup& g, bool commutative_only, int bound)
{
    return enumerate_regular_subgroups(g, {.normalized_by_lambda = true, .abelian_only = commutative_only, .bound = bound});
}

CheckOutcome check_enumerate(const Fixture& fx, const Scenario& sc)
{
    CheckOutcome out;
    auto structures = structures_of(fx.group, sc.commutative_only, sc.enumeration_bound);
    RegularSubgroup classical = right_regular(fx.group);
    ordered_json list = ordered_json::array();
    bool has_classical = false;
    for (std::size_t i = 0; i < structures.size(); ++i) {
        bool is_classical = structures[i] == classical;
        has_classical = has_classical || is_classical;
        list.push_back({{"index", i}, {"type", structures[i].type_name()}, {"abelian", structures[i].is_abelian()},
                        {"classical", is_classical}});
    }
    out.details["count"] = structures.size();
    out.details["structures"] = list;
    // rho(G) is always normalized; it is commutative exactly when G is
    out.passed = has_classical || (sc.commutative_only && !fx.group.is_abelian());
    return out;
}

CheckOutcome check_theorem(const GaloisExtension& ext, long p, const Scenario& sc)
{
    CheckOutcome out;
    auto entries = verify_theorem_commutative_tame(ext, p, sc.ideal_powers, {.bound = sc.search_bound});
    ordered_json list = ordered_json::array();
    out.passed = !entries.empty();
    for (const auto& e : entries) {
        ordered_json j;
        j["structureIndex"] = e.structure_index;
        j["structureType"] = e.structure_type;
        j["idealPower"] = e.ideal_power;
        j["g0TrivialOnPPart"] = e.g0_trivial_on_p_part;
        j["orderEqualsLambdaG"] = e.order_equals_lambda;
        j.update(freeness_json(e.result));
        list.push_back(j);
        out.passed = out.passed && e.passed();
    }
    out.details["prime"] = p;
    out.details["entries"] = list;
    return out;
}

void require_kummer_layout(const GaloisExtension& ext)
{
    const std::vector<std::string> names{"1", "a", "a^2", "z", "z*a", "z*a^2"};
    if (ext.algebra().names() != names || ext.group().order() != 6)
        throw Error(ErrorKind::SchemaError, "field 'checks.counterexample': fixture " + ext.name() + " is not a Kummer cubic");
}

CheckOutcome check_counterexample(const GaloisExtension& ext, const Scenario& sc)
{
    using kummer::basis_index;
    require_kummer_layout(ext);
    CheckOutcome out;
    const EtaleAlgebra& alg = ext.algebra();
    const long p = ext.primes().front().p;
    HopfAlgebra h(GroupAlgebra::galois(ext, left_regular(ext.group())));
    const GroupAlgebra& ea = h.group_algebra();

    AlgebraElement a = alg.basis(basis_index(0, 1));
    AlgebraElement a2 = alg.basis(basis_index(0, 2));
    AlgebraElement zeta = alg.basis(basis_index(1, 0));
    GroupAlgebraElement z = ea.monomial(kummer::tau, a2) + ea.monomial(kummer::sigma2_tau, alg.mul(alg.pow(zeta, 2), a2)) +
                            ea.monomial(kummer::sigma_tau, alg.mul(zeta, a2));

    bool fixed = true;
    for (int g = 0; g < ext.group().order(); ++g) fixed = fixed && ea.act_g(g, z) == z;

    bool action_ok = true;
    ordered_json table = ordered_json::array();
    for (int i = 1; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            AlgebraElement x = alg.mul(alg.pow(zeta, i), alg.pow(a, j));
            AlgebraElement image = ea.act(z, x);
            AlgebraElement expected = j == 2 ? Rational(3 * p) * alg.mul(alg.pow(zeta, 3 - i), a) : alg.zero();
            action_ok = action_ok && image == expected;
            table.push_back({{"zetaPower", i}, {"aPower", j}, {"image", alg.format(image)}});
        }

    Lattice ol = ext.integers(p);
    Order lambda = lambda_fixed_order(h, p);
    Order a_lambda = associated_order(h, ol);
    Vector z_coords = *h.coordinates(z);
    Vector witness = Rational(1, p) * z_coords;
    bool in_lambda = lambda.contains(witness);
    bool in_a = a_lambda.contains(witness);
    bool adjoin_equal = adjoin(h, lambda, witness) == a_lambda;
    Lattice p_ol = ol.scaled(Rational(p));
    bool kills = true;
    for (std::size_t j = 0; j < ext.degree(); ++j) kills = kills && p_ol.contains(ea.act(z, AlgebraElement(ext.integral_basis().row(j))).coords());
    SearchOptions opts{.bound = sc.search_bound};
    FreenessResult over_lambda = generator_search(h, lambda, ol, opts);
    FreenessResult over_a = generator_search(h, a_lambda, ol, opts);

    ordered_json w = ordered_json::object();
    for (int k = 0; k < ext.group().order(); ++k) {
        AlgebraElement c = Rational(1, p) * ea.coefficient(z, k);
        if (!c.is_zero()) w[ext.group().name(k)] = alg.format(c);
    }
    out.details["prime"] = p;
    out.details["zGaloisFixed"] = fixed;
    out.details["actionTable"] = table;
    out.details["actionMatches"] = action_ok;
    out.details["zMapsOLIntoPOL"] = kills;
    out.details["witness"] = w;
    out.details["witnessHCoords"] = strings(witness);
    out.details["witnessInLambdaG"] = in_lambda;
    out.details["witnessInAssociatedOrder"] = in_a;
    out.details["associatedOrderIsLambdaGAdjoinWitness"] = adjoin_equal;
    out.details["overLambdaG"] = freeness_json(over_lambda);
    out.details["overAssociatedOrder"] = freeness_json(over_a);
    out.passed = fixed && action_ok && kills && !in_lambda && in_a && adjoin_equal && over_lambda.status == Freeness::NotFree &&
                 over_a.status == Freeness::Free;
    return out;
}

ElementSet subgroup_from_names(const FiniteGroup& g, const std::vector<std::string>& names)
{
    ElementSet gens;
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto idx = g.find(names[i]);
        if (!idx) schema_error("descent.subfield[" + std::to_string(i) + "]", "no group element named '" + names[i] + "'");
        gens.push_back(*idx);
    }
    return subgroup_closure(g, gens);
}

CheckOutcome check_descent(const GaloisExtension& ext, long p, const Scenario& sc)
{
    CheckOutcome out;
    ElementSet gl = subgroup_from_names(ext.group(), sc.descent_subfield);
    CosetSpace x = left_cosets(ext.group(), gl);
    auto structures = enumerate_regular_subgroups_on_cosets(ext.group(), x,
                                                            {.normalized_by_lambda = true, .abelian_only = sc.commutative_only,
                                                             .bound = sc.enumeration_bound});
    ordered_json sub = ordered_json::array();
    for (int g : gl) sub.push_back(ext.group().name(g));
    out.details["prime"] = p;
    out.details["subfieldGroup"] = sub;
    out.details["subfieldDegree"] = x.size();
    ordered_json list = ordered_json::array();
    out.passed = !structures.empty();
    for (std::size_t s = 0; s < structures.size(); ++s)
        for (int k : sc.descent_powers) {
            DescentReport rep = non_normal_descent(ext, gl, structures[s], ideal_power(ext, p, k), {.bound = sc.search_bound});
            ordered_json j;
            j["structureIndex"] = s;
            j["structureType"] = structures[s].type_name();
            j["idealPower"] = k;
            ordered_json comp = ordered_json::array();
            for (int c : rep.complement) comp.push_back(ext.group().name(c));
            j["complement"] = comp;
            j["inducedType"] = rep.induced_type;
            j["unramified"] = rep.unramified;
            j["baseField"] = rep.base_field;
            j["identityHolds"] = rep.identity_holds;
            j["projectionFixed"] = rep.projection_fixed;
            j["upstairs"] = freeness_json(rep.upstairs);
            j["descendedEqualsIntersection"] = rep.descended_equals_intersection;
            j["projectedOrderIsAssociated"] = rep.projected_order_is_associated;
            j["generatorCoords"] = rep.generator ? strings(*rep.generator) : ordered_json(nullptr);
            list.push_back(j);
            out.passed = out.passed && rep.passed();
        }
    out.details["entries"] = list;
    return out;
}

Matrix global_ideal_basis(const GaloisExtension& ext, long prime, int k)
{
    if (k < 0) schema_error("global.idealPowers", "powers must be nonnegative");
    const PrimeData* pd = ext.prime_data(prime);
    if (!pd) schema_error("global.prime", ext.name() + " has no prime data at " + std::to_string(prime));
    const EtaleAlgebra& alg = ext.algebra();
    AlgebraElement pi_k = alg.pow(pd->uniformizer, k);
    Matrix out = ext.integral_basis();
    for (std::size_t i = 0; i < out.rows(); ++i) out.set_row(i, alg.mul(pi_k, AlgebraElement(out.row(i))).coords());
    return out;
}

CheckOutcome check_global(const GaloisExtension& ext, const Scenario& sc)
{
    CheckOutcome out;
    out.passed = true;
    ordered_json list = ordered_json::array();
    for (int k : sc.global_powers) {
        auto entries = local_check_global(ext, global_ideal_basis(ext, sc.global_prime, k), sc.primes, {.bound = sc.search_bound});
        for (const auto& e : entries) {
            ordered_json j;
            j["idealPrime"] = sc.global_prime;
            j["idealPower"] = k;
            j["prime"] = e.p;
            j["structureIndex"] = e.structure_index;
            j["structureType"] = e.structure_type;
            j["unramified"] = e.unramified;
            j.update(freeness_json(e.result));
            list.push_back(j);
            out.passed = out.passed && e.passed();
        }
        out.passed = out.passed && !entries.empty();
    }
    out.details["entries"] = list;
    return out;
}

const GaloisExtension& require_extension(const Fixture& fx, const std::string& flag)
{
    if (!fx.extension) schema_error("checks." + flag, "fixture " + fx.name + " has no field data");
    return *fx.extension;
}

template <class Fn>
CheckResult run_check(const std::string& name, Fn&& fn)
{
    CheckResult r;
    r.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
        CheckOutcome o = fn();
        r.passed = o.passed;
        r.details_json = o.details.dump();
    } catch (const Error& e) {
        if (is_input_error(e.kind())) throw;
        r.passed = false;
        r.error = error_text(e);
        r.details_json = "{}";
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

ordered_json scenario_json(const Scenario& s)
{
    ordered_json j;
    j["name"] = s.name;
    j["fixture"] = s.fixture;
    j["primes"] = s.primes;
    j["idealPowers"] = s.ideal_powers;
    j["format"] = s.format;
    j["checks"] = {{"enumerate", s.enumerate}, {"commutativeOnly", s.commutative_only}, {"theorem", s.theorem},
                   {"counterexample", s.counterexample}, {"descent", s.descent}, {"global", s.global}};
    if (s.descent) j["descent"] = {{"subfield", s.descent_subfield}, {"idealPowers", s.descent_powers}};
    if (s.global) j["global"] = {{"prime", s.global_prime}, {"idealPowers", s.global_powers}};
    j["bounds"] = {{"enumeration", s.enumeration_bound}, {"search", s.search_bound}};
    return j;
}

std::string cycles(const Permutation& perm, const FiniteGroup& g)
{
    std::string out;
    std::vector<bool> seen(static_cast<std::size_t>(perm.degree()), false);
    for (int start = 0; start < perm.degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)] || perm(start) == start) continue;
        out += "(";
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = perm(x)) {
            seen[static_cast<std::size_t>(x)] = true;
            if (x != start) out += " ";
            out += g.name(x);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

} // namespace

bool is_input_error(ErrorKind kind)
{
    return kind == ErrorKind::ParseError || kind == ErrorKind::SchemaError || kind == ErrorKind::UnknownFixture ||
           kind == ErrorKind::BoundExceeded;
}

std::vector<std::string> builtin_scenario_names()
{
    std::vector<std::string> out;
    for (const auto& [name, text] : builtin_scenarios()) out.push_back(name);
    return out;
}

std::string builtin_scenario_text(const std::string& name)
{
    auto it = builtin_scenarios().find(name);
    if (it == builtin_scenarios().end()) throw Error(ErrorKind::UnknownFixture, "no builtin scenario named '" + name + "'");
    return it->second;
}

Scenario parse_scenario(std::string_view toml_text)
{
    toml::table root;
    try {
        root = toml::parse(toml_text);
    } catch (const toml::parse_error& e) {
        std::ostringstream msg;
        msg << e.description() << " at line " << e.source().begin.line;
        throw Error(ErrorKind::ParseError, msg.str());
    }
    reject_unknown(root, "", {"name", "fixture", "primes", "idealPowers", "format", "checks", "descent", "global", "bounds"});

    Scenario s;
    if (!root.get("fixture")) schema_error("fixture", "missing");
    s.fixture = string_field(root.get("fixture"), "fixture");
    s.name = root.get("name") ? string_field(root.get("name"), "name") : s.fixture;
    if (root.get("primes")) s.primes = integer_list<long>(root.get("primes"), "primes");
    for (std::size_t i = 0; i < s.primes.size(); ++i)
        if (s.primes[i] <= 0 || !is_prime(s.primes[i])) schema_error("primes[" + std::to_string(i) + "]", "expected a positive prime");
    if (root.get("idealPowers")) s.ideal_powers = integer_list<int>(root.get("idealPowers"), "idealPowers");
    if (root.get("format")) s.format = string_field(root.get("format"), "format");
    if (s.format != "json" && s.format != "markdown") schema_error("format", "expected \"json\" or \"markdown\"");

    if (const toml::table* checks = subtable(root, "checks")) {
        reject_unknown(*checks, "checks.", {"enumerate", "commutativeOnly", "theorem", "counterexample", "descent", "global"});
        auto flag = [&](const char* key, bool& target) {
            if (const toml::node* n = checks->get(key)) target = bool_field(n, std::string("checks.") + key);
        };
        flag("enumerate", s.enumerate);
        flag("commutativeOnly", s.commutative_only);
        flag("theorem", s.theorem);
        flag("counterexample", s.counterexample);
        flag("descent", s.descent);
        flag("global", s.global);
    }
    if (const toml::table* d = subtable(root, "descent")) {
        reject_unknown(*d, "descent.", {"subfield", "idealPowers"});
        if (const toml::node* n = d->get("subfield")) {
            const toml::array* arr = n->as_array();
            if (!arr) schema_error("descent.subfield", "expected an array of element names");
            for (std::size_t i = 0; i < arr->size(); ++i)
                s.descent_subfield.push_back(string_field(arr->get(i), "descent.subfield[" + std::to_string(i) + "]"));
        }
        if (const toml::node* n = d->get("idealPowers")) s.descent_powers = integer_list<int>(n, "descent.idealPowers");
    }
    if (const toml::table* g = subtable(root, "global")) {
        reject_unknown(*g, "global.", {"prime", "idealPowers"});
        if (const toml::node* n = g->get("prime")) s.global_prime = integer_field<long>(*n, "global.prime");
        if (const toml::node* n = g->get("idealPowers")) s.global_powers = integer_list<int>(n, "global.idealPowers");
    }
    if (const toml::table* b = subtable(root, "bounds")) {
        reject_unknown(*b, "bounds.", {"enumeration", "search"});
        if (const toml::node* n = b->get("enumeration")) {
            s.enumeration_bound = integer_field<int>(*n, "bounds.enumeration");
            if (s.enumeration_bound <= 0) schema_error("bounds.enumeration", "must be positive");
        }
        if (const toml::node* n = b->get("search")) {
            auto v = integer_field<std::int64_t>(*n, "bounds.search");
            if (v <= 0) schema_error("bounds.search", "must be positive");
            s.search_bound = static_cast<std::uint64_t>(v);
        }
    }

    if ((s.theorem || s.descent || s.global) && s.primes.empty()) schema_error("primes", "required by the selected checks");
    if (s.descent && s.descent_subfield.empty()) schema_error("descent.subfield", "required when checks.descent is set");
    if (s.global && s.global_prime <= 0) schema_error("global.prime", "required when checks.global is set");
    return s;
}

Scenario load_scenario(const std::string& reference)
{
    if (builtin_scenarios().count(reference)) return parse_scenario(builtin_scenario_text(reference));
    std::ifstream in(reference);
    if (!in) throw Error(ErrorKind::UnknownFixture, "no builtin scenario or readable file '" + reference + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

void apply_environment_overrides(Scenario& scenario)
{
    auto read = [](const char* var) -> std::optional<long long> {
        const char* v = std::getenv(var);
        if (!v || !*v) return std::nullopt;
        char* end = nullptr;
        long long n = std::strtoll(v, &end, 10);
        if (*end != '\0' || n <= 0) throw Error(ErrorKind::SchemaError, std::string("environment ") + var + ": expected a positive integer");
        return n;
    };
    if (auto n = read("HGMOD_ENUM_BOUND")) scenario.enumeration_bound = static_cast<int>(*n);
    if (auto n = read("HGMOD_SEARCH_BOUND")) scenario.search_bound = static_cast<std::uint64_t>(*n);
}

bool Report::passed() const
{
    if (checks.empty()) return false;
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

Report run_scenario(const Scenario& sc)
{
    Fixture fx = load_fixture(sc.fixture);
    Report report;
    report.scenario = sc;
    if (sc.enumerate) report.checks.push_back(run_check("enumerate", [&] { return check_enumerate(fx, sc); }));
    if (sc.theorem) {
        const GaloisExtension& ext = require_extension(fx, "theorem");
        for (long p : sc.primes)
            report.checks.push_back(run_check("theorem p=" + std::to_string(p), [&] { return check_theorem(ext, p, sc); }));
    }
    if (sc.counterexample) {
        const GaloisExtension& ext = require_extension(fx, "counterexample");
        report.checks.push_back(run_check("counterexample", [&] { return check_counterexample(ext, sc); }));
    }
    if (sc.descent) {
        const GaloisExtension& ext = require_extension(fx, "descent");
        for (long p : sc.primes)
            report.checks.push_back(run_check("descent p=" + std::to_string(p), [&] { return check_descent(ext, p, sc); }));
    }
    if (sc.global) {
        const GaloisExtension& ext = require_extension(fx, "global");
        report.checks.push_back(run_check("global", [&] { return check_global(ext, sc); }));
    }
    return report;
}

std::string report_to_json(const Report& report)
{
    ordered_json j;
    j["tool"] = {{"name", tool_name}, {"version", tool_version}};
    j["scenario"] = scenario_json(report.scenario);
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        if (!c.error.empty()) cj["error"] = c.error;
        cj["details"] = ordered_json::parse(c.details_json);
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["verdict"] = report.passed() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

std::string report_to_markdown(const Report& report)
{
    std::ostringstream out;
    out << "# Scenario " << report.scenario.name << "\n\n";
    out << "Fixture `" << report.scenario.fixture << "`, " << tool_name << " " << tool_version << "\n\n";
    out << "| check | result | time (s) |\n|---|---|---|\n";
    for (const auto& c : report.checks) {
        out << "| " << c.name << " | " << (c.passed ? "pass" : "FAIL");
        if (!c.error.empty()) out << " (" << c.error << ")";
        out << " | " << std::fixed << std::setprecision(3) << c.seconds << " |\n";
    }
    out << "\n**Verdict: " << (report.passed() ? "pass" : "fail") << "**\n";
    for (const auto& c : report.checks) {
        out << "\n## " << c.name << "\n\n```json\n" << ordered_json::parse(c.details_json).dump(2) << "\n```\n";
    }
    return out.str();
}

std::string list_fixtures_text()
{
    std::ostringstream out;
    for (const auto& name : builtin_fixture_names()) {
        Fixture fx = builtin_fixture(name);
        out << name << "  (order " << fx.group.order() << (fx.extension ? "" : ", group only") << ")  " << fx.description << "\n";
    }
    return out.str();
}

std::string enumerate_text(const std::string& fixture, bool commutative_only, int enumeration_bound)
{
    Fixture fx = load_fixture(fixture);
    auto structures = structures_of(fx.group, commutative_only, enumeration_bound);
    RegularSubgroup classical = right_regular(fx.group), canonical = left_regular(fx.group);
    std::ostringstream out;
    for (std::size_t i = 0; i < structures.size(); ++i) {
        const auto& n = structures[i];
        out << i << "  " << n.type_name() << "  " << (n.is_abelian() ? "abelian" : "nonabelian");
        if (n == classical) out << "  classical";
        else if (n == canonical) out << "  canonical";
        out << "\n";
    }
    return out.str();
}

std::string describe_structure(const std::string& fixture, int index, int enumeration_bound)
{
    Fixture fx = load_fixture(fixture);
    auto structures = structures_of(fx.group, false, enumeration_bound);
    if (index < 0 || static_cast<std::size_t>(index) >= structures.size())
        throw Error(ErrorKind::SchemaError, "index: " + std::to_string(index) + " is out of range (0.." +
                                                std::to_string(static_cast<long>(structures.size()) - 1) + ")");
    const RegularSubgroup& n = structures[static_cast<std::size_t>(index)];
    std::ostringstream out;
    out << "structure " << index << " on " << fx.name << ": " << (n.is_abelian() ? "abelian" : "nonabelian") << ", type "
        << n.type_name() << "\n";
    if (n == right_regular(fx.group)) out << "classical structure rho(G)\n";
    if (n == left_regular(fx.group) && !n.is_abelian()) out << "canonical nonclassical structure lambda(G)\n";
    out << "elements (by image of the identity):\n";
    for (int k = 0; k < n.size(); ++k) out << "  " << fx.group.name(k) << ": " << cycles(n.element(k), fx.group) << "\n";
    if (fx.extension) {
        for (const auto& pd : fx.extension->primes()) {
            out << "p = " << pd.p << ": ";
            if (!is_tame(*fx.extension, pd.p)) out << "wild\n";
            else if (!n.is_abelian()) out << "G0 action on the p-part not defined (nonabelian)\n";
            else {
                ElementSet g0 = inertia_subgroup(*fx.extension, pd.p);
                bool trivial = acts_trivially(fx.group, g0, n, sylow_split(n, pd.p).p_part);
                out << "G0 acts " << (trivial ? "trivially" : "nontrivially") << " on the p-part\n";
            }
        }
    }
    return out.str();
}

} // namespace hgmod
