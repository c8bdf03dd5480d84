#include "hgmod/fixtures.hpp"

#include "hgmod/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace hgmod {

namespace {

using Poly = std::vector<long>;    // coefficients, lowest degree first

Poly cyclotomic_polynomial(int n)
{
    switch (n) {
    case 3: return {1, 1, 1};
    case 4: return {1, 0, 1};
    case 5: return {1, 1, 1, 1, 1};
    case 7: return {1, 1, 1, 1, 1, 1, 1};
    case 9: return {1, 0, 0, 1, 0, 0, 1};
    default: throw Error(ErrorKind::UnsupportedN, "cyclotomic fixture for n=" + std::to_string(n));
    }
}

/* x^k mod the monic polynomial phi, as a coefficient vector of length deg. */
Vector power_mod(const Poly& phi, long k)
{
    const std::size_t d = phi.size() - 1;
    Vector r(d + 1, Rational(0));
    std::vector<Rational> cur(d, Rational(0));
    cur[0] = 1;
    for (long step = 0; step < k; ++step) {
        // multiply by x, reduce the x^d term
        Rational top = cur[d - 1];
        for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (std::size_t i = 0; i < d; ++i) cur[i] -= top * phi[i];
    }
    return Vector(cur.begin(), cur.end());
}

std::vector<Rational> power_basis_constants(const Poly& phi)
{
    const std::size_t d = phi.size() - 1;
    std::vector<Rational> c;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector v = power_mod(phi, static_cast<long>(i + j));
            c.insert(c.end(), v.begin(), v.end());
        }
    return c;
}

std::string power_name(const std::string& var, int k)
{
    if (k == 0) return "1";
    return k == 1 ? var : var + "^" + std::to_string(k);
}

} // namespace

GaloisExtension build_cyclotomic(int n)
{
    Poly phi = cyclotomic_polynomial(n);
    const int d = static_cast<int>(phi.size()) - 1;
    std::vector<std::string> names;
    for (int i = 0; i < d; ++i) names.push_back(power_name("z", i));
    EtaleAlgebra alg(names, power_basis_constants(phi), unit_vector(d, 0));

    std::vector<int> units;
    for (int k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1) units.push_back(k);
    std::vector<int> table;
    std::vector<std::string> group_names;
    for (int a : units) {
        group_names.push_back(a == 1 ? "id" : "z->z^" + std::to_string(a));
        for (int b : units) {
            int c = a * b % n;
            table.push_back(static_cast<int>(std::find(units.begin(), units.end(), c) - units.begin()));
        }
    }
    FiniteGroup group(d, table, group_names);

    std::vector<Matrix> autos;
    for (int k : units) {
        Matrix m(d, d);
        for (int j = 0; j < d; ++j) m.set_col(j, power_mod(phi, static_cast<long>(j) * k));
        autos.push_back(m);
    }

    long q = (n == 4) ? 2 : (n == 9 ? 3 : n);
    AlgebraElement pi = alg.one() - alg.basis(1);
    Matrix ideal(0, d);
    for (int i = 0; i < d; ++i) ideal.append_row(alg.mul(pi, alg.basis(i)).coords());
    PrimeData pd{q, ideal, pi, d, 1};
    return GaloisExtension("cyclotomic-" + std::to_string(n), std::move(alg), std::move(group), std::move(autos),
                           Matrix::identity(d), {pd});
}

GaloisExtension build_kummer_cubic(long m)
{
    if (!is_prime(m) || m % 3 != 2) throw Error(ErrorKind::BadM, "need a prime m = 2 mod 3, got " + std::to_string(m));
    using kummer::basis_index;
    // coefficient vector of z^I a^J for I < 3, J < 5
    auto monomial = [m](int zi, int aj) {
        Vector v(6, Rational(0));
        Rational c = 1;
        if (aj >= 3) {
            c = m;
            aj -= 3;
        }
        zi %= 3;
        if (zi == 2) {
            v[basis_index(0, aj)] -= c;
            v[basis_index(1, aj)] -= c;
        } else {
            v[basis_index(zi, aj)] += c;
        }
        return v;
    };
    std::vector<Rational> constants;
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            Vector v = monomial(x / 3 + y / 3, x % 3 + y % 3);
            constants.insert(constants.end(), v.begin(), v.end());
        }
    std::vector<std::string> names = {"1", "a", "a^2", "z", "z*a", "z*a^2"};
    EtaleAlgebra alg(names, constants, unit_vector(6, 0));

    Matrix sigma(6, 6), tau(6, 6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            sigma.set_col(basis_index(i, j), monomial(i + j, j));
            tau.set_col(basis_index(i, j), monomial(2 * i, j));
        }
    FiniteGroup base = dihedral_group(3);
    FiniteGroup group(6, base.table(), {"id", "sigma", "sigma^2", "tau", "sigma*tau", "sigma^2*tau"});
    std::vector<Matrix> autos;
    for (int g = 0; g < 6; ++g) {
        Matrix mat = Matrix::identity(6);
        for (int k = 0; k < g % 3; ++k) mat = sigma * mat;
        if (g >= 3) mat = mat * tau;
        autos.push_back(mat);
    }

    // z^i a^j for i = 1, 2
    Matrix integral(0, 6);
    for (int i = 1; i <= 2; ++i)
        for (int j = 0; j < 3; ++j) integral.append_row(monomial(i, j));

    AlgebraElement a = alg.basis(basis_index(0, 1));
    Matrix gens(0, 6);
    for (std::size_t i = 0; i < 6; ++i) gens.append_row(alg.mul(a, AlgebraElement(integral.row(i))).coords());
    for (std::size_t i = 0; i < 6; ++i) gens.append_row(Rational(m) * integral.row(i));
    PrimeData pd{m, Lattice(gens, m).hnf(), a, 3, 2};
    return GaloisExtension("kummer-cubic-" + std::to_string(m), std::move(alg), std::move(group), std::move(autos),
                           std::move(integral), {pd});
}

std::vector<std::string> builtin_fixture_names()
{
    return {"cyclotomic-3", "cyclotomic-4", "cyclotomic-5", "cyclotomic-7", "cyclotomic-9", "kummer-cubic-5", "d3-abstract"};
}

Fixture builtin_fixture(const std::string& name)
{
    auto with_extension = [&](GaloisExtension ext, std::string description) {
        FiniteGroup g = ext.group();
        return Fixture{name, std::move(description), std::move(g), std::move(ext)};
    };
    if (name.rfind("cyclotomic-", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(name.substr(11));
        } catch (const std::exception&) {
            throw Error(ErrorKind::UnknownFixture, name);
        }
        if (n != 3 && n != 4 && n != 5 && n != 7 && n != 9) throw Error(ErrorKind::UnknownFixture, name);
        return with_extension(build_cyclotomic(n), "Q(zeta_" + std::to_string(n) + ") on the power basis");
    }
    if (name == "kummer-cubic-5")
        return with_extension(build_kummer_cubic(5), "Q(zeta_3, cbrt 5), Galois group D3, unique prime above 5");
    if (name == "d3-abstract") {
        FiniteGroup base = dihedral_group(3);
        return Fixture{name, "dihedral group of order 6 without a field",
                       FiniteGroup(6, base.table(), {"e", "a", "a^2", "b", "ab", "a^2b"}), std::nullopt};
    }
    throw Error(ErrorKind::UnknownFixture, name);
}

// ---- JSON ----

using nlohmann::json;

namespace {

json matrix_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_strings(m.row(i)));
    return rows;
}

const json& field(const json& j, const std::string& key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::SchemaError, "missing field " + where + key);
    return j.at(key);
}

Rational rational_field(const json& j, const std::string& where)
{
    if (!j.is_string()) throw Error(ErrorKind::SchemaError, where + " must be an exact rational string");
    return parse_rational(j.get<std::string>());
}

Vector vector_field(const json& j, std::size_t n, const std::string& where)
{
    if (!j.is_array() || j.size() != n) throw Error(ErrorKind::SchemaError, where + " must have length " + std::to_string(n));
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational_field(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

Matrix matrix_field(const json& j, std::size_t rows, std::size_t cols, const std::string& where)
{
    if (!j.is_array() || j.size() != rows) throw Error(ErrorKind::SchemaError, where + " must have " + std::to_string(rows) + " rows");
    Matrix m(0, cols);
    for (std::size_t i = 0; i < rows; ++i) m.append_row(vector_field(j[i], cols, where + "[" + std::to_string(i) + "]"));
    return m;
}

template <typename T>
T get_as(const json& j, const std::string& where)
{
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw Error(ErrorKind::SchemaError, where + " has the wrong type");
    }
}

} // namespace

std::string fixture_to_json(const Fixture& fixture)
{
    json j;
    j["name"] = fixture.name;
    j["description"] = fixture.description;
    j["group"] = {{"order", fixture.group.order()}, {"mul", fixture.group.table()}, {"names", fixture.group.names()}};
    if (fixture.extension) {
        const GaloisExtension& ext = *fixture.extension;
        const EtaleAlgebra& alg = ext.algebra();
        const std::size_t n = alg.dim();
        json constants = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < n; ++k) {
                Vector v;
                for (std::size_t l = 0; l < n; ++l) v.push_back(alg.constant(i, k, l));
                row.push_back(to_strings(v));
            }
            constants.push_back(row);
        }
        j["algebra"] = {{"dim", n}, {"basisNames", alg.names()}, {"structureConstants", constants},
                        {"one", to_strings(alg.one().coords())}};
        json autos = json::object();
        for (int g = 0; g < ext.group().order(); ++g) autos[ext.group().name(g)] = matrix_json(ext.automorphism_matrix(g));
        j["automorphisms"] = autos;
        j["integralBasis"] = matrix_json(ext.integral_basis());
        json primes = json::array();
        for (const auto& pd : ext.primes())
            primes.push_back({{"p", pd.p}, {"e", pd.e}, {"f", pd.f}, {"uniformizer", to_strings(pd.uniformizer.coords())},
                              {"idealBasis", matrix_json(pd.ideal_basis)}});
        j["primes"] = primes;
    }
    return j.dump(2);
}

Fixture fixture_from_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    std::string name = get_as<std::string>(field(j, "name", ""), "name");
    std::string description = j.contains("description") ? get_as<std::string>(j["description"], "description") : "";
    const json& jg = field(j, "group", "");
    int order = get_as<int>(field(jg, "order", "group."), "group.order");
    if (order <= 0) throw Error(ErrorKind::SchemaError, "group.order must be positive");
    auto table = get_as<std::vector<int>>(field(jg, "mul", "group."), "group.mul");
    std::vector<std::string> group_names;
    if (jg.contains("names")) group_names = get_as<std::vector<std::string>>(jg["names"], "group.names");
    FiniteGroup group(order, table, group_names);
    if (!j.contains("algebra")) return Fixture{name, description, group, std::nullopt};

    const json& ja = j["algebra"];
    std::size_t n = get_as<std::size_t>(field(ja, "dim", "algebra."), "algebra.dim");
    auto basis_names = get_as<std::vector<std::string>>(field(ja, "basisNames", "algebra."), "algebra.basisNames");
    if (basis_names.size() != n) throw Error(ErrorKind::SchemaError, "algebra.basisNames must have dim entries");
    const json& jc = field(ja, "structureConstants", "algebra.");
    if (!jc.is_array() || jc.size() != n) throw Error(ErrorKind::SchemaError, "algebra.structureConstants must be dim x dim x dim");
    std::vector<Rational> constants;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix slab = matrix_field(jc[i], n, n, "algebra.structureConstants[" + std::to_string(i) + "]");
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) constants.push_back(slab(k, l));
    }
    Vector one = vector_field(field(ja, "one", "algebra."), n, "algebra.one");
    EtaleAlgebra alg(basis_names, constants, one);

    const json& jauto = field(j, "automorphisms", "");
    std::vector<Matrix> autos;
    for (int g = 0; g < order; ++g) {
        const std::string& gname = group.name(g);
        autos.push_back(matrix_field(field(jauto, gname, "automorphisms."), n, n, "automorphisms." + gname));
    }
    Matrix integral = matrix_field(field(j, "integralBasis", ""), n, n, "integralBasis");
    std::vector<PrimeData> primes;
    if (j.contains("primes")) {
        const json& jp = j["primes"];
        if (!jp.is_array()) throw Error(ErrorKind::SchemaError, "primes must be an array");
        for (std::size_t i = 0; i < jp.size(); ++i) {
            std::string where = "primes[" + std::to_string(i) + "].";
            PrimeData pd;
            pd.p = get_as<long>(field(jp[i], "p", where), where + "p");
            pd.e = get_as<int>(field(jp[i], "e", where), where + "e");
            pd.f = get_as<int>(field(jp[i], "f", where), where + "f");
            pd.uniformizer = AlgebraElement(vector_field(field(jp[i], "uniformizer", where), n, where + "uniformizer"));
            const json& jb = field(jp[i], "idealBasis", where);
            if (!jb.is_array()) throw Error(ErrorKind::SchemaError, where + "idealBasis must be a matrix");
            pd.ideal_basis = matrix_field(jb, jb.size(), n, where + "idealBasis");
            primes.push_back(std::move(pd));
        }
    }
    GaloisExtension ext(name, std::move(alg), group, std::move(autos), std::move(integral), std::move(primes));
    return Fixture{name, description, std::move(group), std::move(ext)};
}

Fixture load_fixture(const std::string& reference)
{
    for (const auto& builtin : builtin_fixture_names())
        if (builtin == reference) return builtin_fixture(reference);
    std::ifstream in(reference);
    if (!in) throw Error(ErrorKind::UnknownFixture, reference);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return fixture_from_json(buffer.str());
}

} // namespace hgmod
