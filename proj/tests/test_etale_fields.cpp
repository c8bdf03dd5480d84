#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hgmod/errors.hpp"
#include "hgmod/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace hgmod;
using kummer::basis_index;

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

AlgebraElement random_element(const EtaleAlgebra& alg, std::mt19937& rng, int range = 4)
{
    std::uniform_int_distribution<int> d(-range, range);
    Vector v;
    for (std::size_t i = 0; i < alg.dim(); ++i) v.push_back(d(rng));
    return AlgebraElement(v);
}

// Ramanujan sum c_n(k) = sum over units u of cos(2 pi k u / n), by floating point
long ramanujan_sum(int n, int k)
{
    double s = 0;
    for (int u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) s += std::cos(2 * std::numbers::pi * k * u / n);
    return std::lround(s);
}

int multiplicative_order(int a, int n)
{
    int x = a % n, k = 1;
    while (x != 1) {
        x = x * a % n;
        ++k;
    }
    return k;
}

} // namespace

TEST_CASE("algebra arithmetic")
{
    GaloisExtension c3 = build_cyclotomic(3);
    const EtaleAlgebra& alg = c3.algebra();
    AlgebraElement z = alg.basis(1);
    CHECK(alg.mul(z, z) == AlgebraElement({-1, -1}));
    CHECK(alg.mul(alg.one(), z) == z);
    CHECK(alg.invert(z) == alg.mul(z, z));
    CHECK(kind_of([&] { alg.invert(alg.zero()); }) == ErrorKind::NotInvertible);
    CHECK(alg.format(alg.mul(z, z)) == "-1 - z");

    GaloisExtension k = build_kummer_cubic(5);
    const EtaleAlgebra& ka = k.algebra();
    AlgebraElement a = ka.basis(basis_index(0, 1));
    CHECK(ka.mul(a, ka.mul(a, a)) == ka.scalar(5));
    CHECK(ka.pow(a, -3) == ka.scalar(Rational(1, 5)));
}

TEST_CASE("algebra rejects broken structure constants")
{
    // b1*b1 = b0 but b0 is not a unit
    std::vector<Rational> c(8, Rational(0));
    c[0 * 4 + 0 * 2 + 0] = 1;
    c[1 * 4 + 1 * 2 + 0] = 1;
    c[0 * 4 + 1 * 2 + 1] = 1;
    c[1 * 4 + 0 * 2 + 1] = 2;
    CHECK(kind_of([&] { EtaleAlgebra({"1", "x"}, c, {1, 0}); }) == ErrorKind::InvalidAlgebra);
}

TEST_CASE("builders validate their inputs")
{
    CHECK(kind_of([] { build_cyclotomic(6); }) == ErrorKind::UnsupportedN);
    CHECK(kind_of([] { build_kummer_cubic(7); }) == ErrorKind::BadM);
    CHECK(kind_of([] { build_kummer_cubic(8); }) == ErrorKind::BadM);
    CHECK(build_kummer_cubic(11).degree() == 6);
    CHECK(build_cyclotomic(3).degree() == 2);
    CHECK(build_cyclotomic(5).degree() == 4);
    CHECK(build_cyclotomic(7).degree() == 6);
    CHECK(build_cyclotomic(7).group().element_order(2) == 6);    // z -> z^3 generates
}

TEST_CASE("traces")
{
    GaloisExtension c3 = build_cyclotomic(3);
    CHECK(c3.trace_scalar(c3.algebra().one()) == 2);
    CHECK(c3.trace_scalar(c3.algebra().basis(1)) == -1);

    // Ramanujan sums give Tr(z^k) in Q(zeta_9); all are divisible by 3
    GaloisExtension c9 = build_cyclotomic(9);
    for (int k = 0; k < 6; ++k) {
        Rational t = c9.trace_scalar(c9.algebra().basis(k));
        CHECK(t == ramanujan_sum(9, k));
        CHECK(t.get_num() % 3 == 0);
    }
    GaloisExtension c7 = build_cyclotomic(7);
    for (int k = 0; k < 6; ++k) CHECK(c7.trace_scalar(c7.algebra().basis(k)) == ramanujan_sum(7, k));

    GaloisExtension km = build_kummer_cubic(5);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            AlgebraElement x = km.algebra().basis(basis_index(i, j));
            // z^-1 = z^2 = -1 - z
            AlgebraElement aj = km.algebra().basis(basis_index(0, j));
            AlgebraElement expected = i == 0 ? aj : -(aj + km.algebra().basis(basis_index(1, j)));
            CHECK(km.apply(kummer::tau, x) == expected);
        }
}

TEST_CASE("trace-one elements")
{
    GaloisExtension c3 = build_cyclotomic(3);
    ElementSet all = {0, 1};
    AlgebraElement x = trace_one_element(c3, all, 3);
    CHECK(c3.trace(x, all) == c3.algebra().one());
    CHECK(x == -c3.algebra().basis(1));
    AlgebraElement y = trace_one_element(c3, all, 2);
    CHECK(c3.trace(y, all) == c3.algebra().one());
    CHECK(c3.integers(2).contains(y.coords()));

    GaloisExtension c9 = build_cyclotomic(9);
    ElementSet g9 = {0, 1, 2, 3, 4, 5};
    CHECK(kind_of([&] { trace_one_element(c9, g9, 3); }) == ErrorKind::WildRamification);
    CHECK(c9.trace(trace_one_element(c9, g9, 2), g9) == c9.algebra().one());

    // relative trace to the real cubic subfield of the Kummer field
    GaloisExtension km = build_kummer_cubic(5);
    ElementSet gl = {0, kummer::tau};
    AlgebraElement t = trace_one_element(km, gl, 5);
    CHECK(km.trace(t, gl) == km.algebra().one());
    CHECK(km.integers(5).contains(t.coords()));
    AlgebraElement full = trace_one_element(km, {0, 1, 2, 3, 4, 5}, 5);
    CHECK(km.trace(full) == km.algebra().one());
}

TEST_CASE("valuations")
{
    GaloisExtension km = build_kummer_cubic(5);
    const EtaleAlgebra& alg = km.algebra();
    AlgebraElement a = alg.basis(basis_index(0, 1));
    CHECK(valuation(km, a, 5) == 1);
    CHECK(valuation(km, alg.scalar(5), 5) == 3);
    CHECK(valuation(km, alg.scalar(Rational(1, 25)), 5) == -6);
    CHECK(kind_of([&] { valuation(km, alg.zero(), 5); }) == ErrorKind::ZeroElement);

    // (1 - z)^6 / 7 is a unit at 7: it and its inverse are 7-integral
    GaloisExtension c7 = build_cyclotomic(7);
    const EtaleAlgebra& a7 = c7.algebra();
    AlgebraElement u = Rational(1, 7) * a7.pow(a7.one() - a7.basis(1), 6);
    CHECK(c7.integers(7).contains(u.coords()));
    CHECK(c7.integers(7).contains(a7.invert(u).coords()));
    CHECK(valuation(c7, a7.scalar(7), 7) == 6);
    CHECK(valuation(c7, a7.one() - a7.basis(1), 7) == 1);
    CHECK(kind_of([&] { valuation(c7, a7.scalar(2), 2); }) == ErrorKind::MultiplePrimes);
}

TEST_CASE("valuation is additive and matches ideal membership")
{
    std::mt19937 rng(1234);
    for (auto ext : {build_kummer_cubic(5), build_cyclotomic(7), build_cyclotomic(5)}) {
        long p = ext.primes().front().p;
        const EtaleAlgebra& alg = ext.algebra();
        for (int trial = 0; trial < 10; ++trial) {
            AlgebraElement x = random_element(alg, rng), y = random_element(alg, rng);
            if (x.is_zero() || y.is_zero()) continue;
            int vx = valuation(ext, x, p), vy = valuation(ext, y, p);
            CHECK(valuation(ext, alg.mul(x, y), p) == vx + vy);
            for (int k = vx - 1; k <= vx + 1; ++k) CHECK(ideal_power(ext, p, k).contains(x.coords()) == (vx >= k));
        }
    }
}

TEST_CASE("ramification data")
{
    GaloisExtension km = build_kummer_cubic(5);
    CHECK(inertia_subgroup(km, 5) == ElementSet{0, 1, 2});
    RamificationData r = ramification_data(km, 5);
    CHECK(r.e == 3);
    CHECK(r.residue_degree == 2);
    CHECK(r.prime_count == 1);
    CHECK(is_tame(km, 5));
    CHECK(ramification_data(km, 2).unramified);

    GaloisExtension c7 = build_cyclotomic(7);
    RamificationData r7 = ramification_data(c7, 7);
    CHECK(r7.inertia == ElementSet{0, 1, 2, 3, 4, 5});
    CHECK(r7.e == 6);
    CHECK(r7.residue_degree == 1);
    CHECK(is_tame(c7, 7));
    for (int q : {2, 3, 5, 11, 13}) {
        RamificationData u = ramification_data(c7, q);
        CHECK(u.unramified);
        CHECK(u.inertia == ElementSet{0});
        CHECK(u.residue_degree == multiplicative_order(q, 7));
        CHECK(u.e * u.residue_degree * u.prime_count == 6);
    }
    CHECK(ramification_data(build_cyclotomic(5), 5).e == 4);
    CHECK_FALSE(is_tame(build_cyclotomic(9), 3));
    CHECK(ramification_data(build_cyclotomic(9), 3).e == 6);
    CHECK_FALSE(is_tame(build_cyclotomic(4), 2));
}

TEST_CASE("e f g = n and tameness agrees with |G0| on every fixture")
{
    for (const auto& name : builtin_fixture_names()) {
        Fixture fx = builtin_fixture(name);
        if (!fx.extension) continue;
        const GaloisExtension& ext = *fx.extension;
        for (long p : {2L, 3L, 5L, 7L}) {
            if (!ext.prime_data(p) && ext.discriminant() % p == 0) {
                CHECK(kind_of([&] { ramification_data(ext, p); }) == ErrorKind::MissingPrimeData);
                continue;
            }
            RamificationData r = ramification_data(ext, p);
            CHECK(r.e * r.residue_degree * r.prime_count == static_cast<int>(ext.degree()));
            CHECK(is_tame(ext, p) == (r.inertia.size() % p != 0));
        }
    }
}

TEST_CASE("missing prime data is reported")
{
    Fixture fx = builtin_fixture("cyclotomic-7");
    std::vector<Matrix> autos;
    for (int g = 0; g < 6; ++g) autos.push_back(fx.extension->automorphism_matrix(g));
    GaloisExtension bare(fx.name, fx.extension->algebra(), fx.group, autos, Matrix::identity(6), {});
    CHECK(kind_of([&] { ramification_data(bare, 7); }) == ErrorKind::MissingPrimeData);
    CHECK(kind_of([&] { inertia_subgroup(bare, 7); }) == ErrorKind::MissingPrimeData);
    CHECK(ramification_data(bare, 2).unramified);
}

TEST_CASE("Kummer field structure")
{
    GaloisExtension km = build_kummer_cubic(5);
    const Matrix& s = km.automorphism_matrix(kummer::sigma);
    const Matrix& t = km.automorphism_matrix(kummer::tau);
    Matrix id = Matrix::identity(6);
    CHECK(s * s * s == id);
    CHECK(t * t == id);
    CHECK(t * s * t == inverse(s));

    Matrix fixed = fixed_subspace(km, {0, kummer::tau});
    CHECK(fixed.rows() == 3);
    Matrix expected = Matrix::from_rows({unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 2)});
    CHECK(rank(vstack(fixed, expected)) == 3);

    Lattice o = km.integers(5);
    CHECK(o == Lattice::standard(6, 5));
    CHECK(is_ambiguous(km, o));
    for (int k = -2; k <= 3; ++k) CHECK(is_ambiguous(km, ideal_power(km, 5, k)));
    // span{1, 5z, a, za, a^2, za^2} is Z[5z]-like and stable: tau(5z) = -5 - 5z
    Matrix stable = Matrix::from_rows({unit_vector(6, 0), Rational(5) * unit_vector(6, 3), unit_vector(6, 1),
                                       unit_vector(6, 4), unit_vector(6, 2), unit_vector(6, 5)});
    CHECK(is_ambiguous(km, Lattice(stable, 5)));
    CHECK(is_ambiguous_global(km, stable));
    // span{1, z, 5a, za, a^2, za^2}: sigma(za) = -a - za leaves it
    Matrix skew = Matrix::from_rows({unit_vector(6, 0), unit_vector(6, 3), Rational(5) * unit_vector(6, 1),
                                     unit_vector(6, 4), unit_vector(6, 2), unit_vector(6, 5)});
    CHECK_FALSE(is_ambiguous(km, Lattice(skew, 5)));
    CHECK_FALSE(is_ambiguous_global(km, skew));
    CHECK(km.image(kummer::sigma, Lattice(skew, 5)) != Lattice(skew, 5));
    CHECK(is_ambiguous_global(km, km.integral_basis()));
}

TEST_CASE("lattice products and indices")
{
    GaloisExtension km = build_kummer_cubic(5);
    const EtaleAlgebra& alg = km.algebra();
    Lattice o = km.integers(5);
    Lattice p1 = prime_ideal(km, km.primes().front());
    CHECK(lattice_product(alg, o, o) == o);
    CHECK(lattice_index_exponent(o, o.scaled(5)) == 6);
    CHECK(lattice_index_exponent(o, p1) == 2);
    Lattice p2 = lattice_product(alg, p1, p1);
    CHECK(p2 == ideal_power(km, 5, 2));
    CHECK(lattice_product(alg, p1, p2) == o.scaled(5));
    CHECK(ideal_power(km, 5, 3) == o.scaled(5));

    GaloisExtension c5 = build_cyclotomic(5);
    CHECK(ideal_power(c5, 2, 1) == c5.integers(2).scaled(2));    // 2 is inert in Q(zeta_5)
    CHECK(ideal_power(c5, 2, -2) == c5.integers(2).scaled(Rational(1, 4)));
    CHECK(kind_of([&] { ideal_power(build_cyclotomic(7), 2, 1); }) == ErrorKind::MultiplePrimes);
}

TEST_CASE("membership agrees with L + span(x) == L")
{
    std::mt19937 rng(99);
    GaloisExtension km = build_kummer_cubic(5);
    Lattice p1 = prime_ideal(km, km.primes().front());
    for (int trial = 0; trial < 30; ++trial) {
        AlgebraElement x = random_element(km.algebra(), rng, 7);
        Matrix gens = p1.hnf();
        gens.append_row(x.coords());
        CHECK(p1.contains(x.coords()) == (Lattice(gens, 5) == p1));
    }
}

TEST_CASE("fixtures round-trip through JSON")
{
    for (const auto& name : builtin_fixture_names()) {
        Fixture fx = builtin_fixture(name);
        std::string text = fixture_to_json(fx);
        Fixture back = fixture_from_json(text);
        CHECK(fixture_to_json(back) == text);
        CHECK(back.group.table() == fx.group.table());
    }
    CHECK(kind_of([] { builtin_fixture("cyclotomic-11"); }) == ErrorKind::UnknownFixture);
    CHECK(kind_of([] { load_fixture("/nonexistent/fixture.json"); }) == ErrorKind::UnknownFixture);
    CHECK(kind_of([] { fixture_from_json("{"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { fixture_from_json(R"({"name":"x"})"); }) == ErrorKind::SchemaError);
}

TEST_CASE("schema errors name the offending field")
{
    std::string text = fixture_to_json(builtin_fixture("cyclotomic-3"));
    auto pos = text.find("\"integralBasis\"");
    REQUIRE(pos != std::string::npos);
    std::string broken = text;
    broken.replace(pos, 15, "\"integralBasiz\"");
    try {
        fixture_from_json(broken);
        FAIL("expected SchemaError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SchemaError);
        CHECK(std::string(e.what()).find("integralBasis") != std::string::npos);
    }
    std::string floaty = text;
    floaty.replace(floaty.find("\"-1\""), 4, "-1.0");
    CHECK(kind_of([&] { fixture_from_json(floaty); }) == ErrorKind::SchemaError);
}
