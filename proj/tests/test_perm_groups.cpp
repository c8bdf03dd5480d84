#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hgmod/errors.hpp"
#include "hgmod/perm_groups.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace hgmod;
using namespace hgmod::oracles;

TEST_CASE("group construction validates the table")
{
    CHECK_NOTHROW(dihedral_group(3));
    CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), Error);
    CHECK_THROWS_AS(FiniteGroup(2, {1, 0, 0, 1}), Error);
    // a Latin square with identity that is not associative (order 5 loop)
    std::vector<int> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    CHECK_THROWS_AS(FiniteGroup(5, loop), Error);
    auto g = direct_product(cyclic_group(2), cyclic_group(3));
    CHECK(g.order() == 6);
    CHECK(g.is_abelian());
}

TEST_CASE("left and right regular representations")
{
    auto c2 = cyclic_group(2);
    auto l = left_regular(c2);
    CHECK(l.element(0) == Permutation::identity(2));
    CHECK(l.element(1) == Permutation({1, 0}));

    auto c4 = cyclic_group(4);
    CHECK(left_regular(c4) == right_regular(c4));

    auto d3 = dihedral_group(3);
    CHECK_FALSE(left_regular(d3) == right_regular(d3));
    // r = 1, s = 3; s r = r^-1 s = r^2 s = index 5
    CHECK(lambda(d3, 3)(1) == 5);
    CHECK(d3.name(5) == "r^2s");
}

TEST_CASE("conjugation by lambda")
{
    auto d3 = dihedral_group(3);
    auto eta = rho(d3, 4);
    CHECK(conjugate_by_lambda(d3, 0, lambda(d3, 2)) == lambda(d3, 2));
    for (int g = 0; g < 6; ++g) CHECK(conjugate_by_lambda(d3, g, eta) == eta);
}

TEST_CASE("regular subgroup invariants for every group")
{
    for (const auto& g : {cyclic_group(4), dihedral_group(3), direct_product(cyclic_group(2), cyclic_group(2)),
                          cyclic_group(6)}) {
        auto l = left_regular(g), r = right_regular(g);
        CHECK(r.normalized_by(lambda_images(g)));
        CHECK((l == r) == g.is_abelian());
    }
}

TEST_CASE("enumeration: counts and membership")
{
    auto c3 = cyclic_group(3);
    auto subs = enumerate_regular_subgroups(c3);
    REQUIRE(subs.size() == 1);
    CHECK(subs[0] == left_regular(c3));

    auto c2c2 = direct_product(cyclic_group(2), cyclic_group(2));
    auto ab = enumerate_regular_subgroups(c2c2, {.normalized_by_lambda = true, .abelian_only = true});
    CHECK(std::count(ab.begin(), ab.end(), left_regular(c2c2)) == 1);

    auto d3 = dihedral_group(3);
    auto normal = enumerate_regular_subgroups(d3, {.normalized_by_lambda = true});
    CHECK(std::count(normal.begin(), normal.end(), left_regular(d3)) == 1);
    CHECK(std::count(normal.begin(), normal.end(), right_regular(d3)) == 1);
    // frozen from the brute-force filter below: lambda(G), rho(G) and three cyclic structures
    CHECK(normal.size() == 5);
    std::multiset<std::string> types;
    for (const auto& n : normal) types.insert(n.type_name());
    CHECK(types == std::multiset<std::string>{"C6", "C6", "C6", "D3", "D3"});

    CHECK_THROWS_AS(regular_subgroups_of_degree(9), Error);
}

TEST_CASE("enumeration agrees with the brute-force oracle for n <= 6")
{
    for (int n = 1; n <= 6; ++n) {
        auto oracle = brute_force_regular(n);
        std::set<std::vector<std::vector<int>>> dfs;
        for (const auto& s : regular_subgroups_of_degree(n)) dfs.insert(key_of(s));
        CHECK_MESSAGE(dfs == oracle, "degree ", n);
    }
    // normalized filter for D3 against the oracle list
    auto d3 = dihedral_group(3);
    auto lam = lambda_images(d3);
    std::size_t expected = 0;
    for (const auto& key : brute_force_regular(6)) {
        std::vector<Permutation> elems;
        for (const auto& im : key) elems.emplace_back(im);
        if (RegularSubgroup(elems).normalized_by(lam)) ++expected;
    }
    CHECK(enumerate_regular_subgroups(d3, {.normalized_by_lambda = true}).size() == expected);
}

TEST_CASE("enumeration output is sorted and deterministic")
{
    auto a = regular_subgroups_of_degree(4);
    auto b = regular_subgroups_of_degree(4);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(a.size() == 4); // three cyclic, one Klein four-group
}

TEST_CASE("sylow_split")
{
    auto c6 = left_regular(cyclic_group(6));
    auto sp = sylow_split(c6, 3);
    CHECK(sp.prime_to_p.size() == 2);
    CHECK(sp.p_part.size() == 3);

    auto c4 = left_regular(cyclic_group(4));
    auto sp2 = sylow_split(c4, 3);
    CHECK(sp2.p_part == ElementSet{0});

    auto v4g = direct_product(cyclic_group(2), cyclic_group(2));
    auto sp3 = sylow_split(left_regular(v4g), 2);
    CHECK(sp3.prime_to_p == ElementSet{0});
    CHECK(sp3.p_part.size() == 4);

    CHECK_THROWS_AS(sylow_split(left_regular(dihedral_group(3)), 2), Error);
}

TEST_CASE("sylow_split factors uniquely and is lambda-stable for normalized N")
{
    for (const auto& g : {cyclic_group(6), cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2)),
                          dihedral_group(3)}) {
        for (const auto& n : enumerate_regular_subgroups(g, {.normalized_by_lambda = true, .abelian_only = true}))
            for (long p : {2L, 3L, 5L}) {
                auto sp = sylow_split(n, p);
                std::set<int> prods;
                for (int s : sp.prime_to_p)
                    for (int t : sp.p_part) prods.insert(n.compose(s, t));
                CHECK(static_cast<int>(prods.size()) == n.size());
                CHECK(is_lambda_stable(g, n, sp.prime_to_p));
                CHECK(is_lambda_stable(g, n, sp.p_part));
            }
    }
}

TEST_CASE("normal_complement")
{
    auto d3 = dihedral_group(3);
    auto nc = normal_complement(d3, {0, 3});
    REQUIRE(nc);
    CHECK(*nc == ElementSet{0, 1, 2});

    auto c6 = cyclic_group(6);
    auto nc2 = normal_complement(c6, {0, 2, 4});
    REQUIRE(nc2);
    CHECK(*nc2 == ElementSet{0, 3});

    auto c4 = cyclic_group(4);
    CHECK_FALSE(normal_complement(c4, {0, 2}));
}

TEST_CASE("inertia_complement")
{
    auto c6 = cyclic_group(6);
    CHECK(inertia_complement(c6, {0}, 3) == ElementSet{0, 3});
    CHECK(inertia_complement(c6, {0}, 7) == ElementSet{0, 1, 2, 3, 4, 5});

    auto d3 = dihedral_group(3);
    auto c = inertia_complement(d3, {0, 1, 2}, 2);
    CHECK(c.size() == 3); // e * f0 = 3 * 1
    CHECK_THROWS_AS(inertia_complement(d3, {0, 1, 2}, 3), Error);

    auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
    try {
        inertia_complement(v4, {0}, 3);
        FAIL("expected QuotientNotCyclic");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::QuotientNotCyclic);
    }
}

TEST_CASE("inertia_complement properties")
{
    struct Case { FiniteGroup g; ElementSet g0; long p; };
    std::vector<Case> cases{{cyclic_group(6), {0, 2, 4}, 2}, {cyclic_group(6), {0, 3}, 3},
                            {cyclic_group(4), {0}, 2},       {dihedral_group(3), {0, 1, 2}, 2},
                            {cyclic_group(6), {0}, 2}};
    for (const auto& c : cases) {
        auto comp = inertia_complement(c.g, c.g0, c.p);
        CHECK(is_normal(c.g, comp));
        CHECK(std::includes(comp.begin(), comp.end(), c.g0.begin(), c.g0.end()));
        auto sp = sylow_subgroup(c.g, c.p);
        ElementSet meet;
        std::set_intersection(comp.begin(), comp.end(), sp.begin(), sp.end(), std::back_inserter(meet));
        CHECK(meet == ElementSet{0});
        CHECK(comp.size() * sp.size() == static_cast<std::size_t>(c.g.order()));
    }
}

TEST_CASE("induced regular subgroup: D3 coset product")
{
    auto d3 = dihedral_group(3);
    auto lab = make_labeling(d3, {0, 1, 2}, {0, 3});
    auto s = left_regular(cyclic_group(3));
    auto t = left_regular(cyclic_group(2));
    auto ind = induce_regular_subgroup(d3, s, t, lab);
    // (sigma^u, tau^v)[a^i b^j] = a^{i+u} b^{j+v}
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 2; ++v) {
            auto eta = ind.group.element(u + 3 * v);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 2; ++j) CHECK(eta(i + 3 * j) == (i + u) % 3 + 3 * ((j + v) % 2));
        }
    CHECK(ind.group.is_abelian());
    CHECK(ind.group.type_name() == "C6");

    // lambda(b) sigma lambda(b)^-1 = sigma^-1
    const auto& sigma = ind.group.element(1);
    CHECK(conjugate_by_lambda(d3, 3, sigma) == sigma.inverse());
    // C acts trivially on iota(1 x T)
    CHECK(acts_trivially(d3, {0, 1, 2}, ind.group, ind.second_factor));
    CHECK_FALSE(acts_trivially(d3, {0, 3}, ind.group, ind.first_factor));
}

TEST_CASE("induced regular subgroup: C6 as C3 x C2 recovers lambda")
{
    auto c6 = cyclic_group(6);
    auto lab = make_labeling(c6, {0, 2, 4}, {0, 3});
    auto ind = induce_regular_subgroup(c6, left_regular(cyclic_group(3)), left_regular(cyclic_group(2)), lab);
    CHECK(ind.group == left_regular(c6));
    CHECK(acts_trivially(c6, {0, 2, 4}, ind.group, ind.second_factor));

    auto c1 = cyclic_group(1);
    auto triv = induce_regular_subgroup(c1, left_regular(c1), left_regular(c1), make_labeling(c1, {0}, {0}));
    CHECK(triv.group.size() == 1);
}

TEST_CASE("induced regular subgroup surfaces failures to normalize")
{
    // D3 with the roles swapped: <b> is not normal, so the coset product is not lambda-stable
    auto d3 = dihedral_group(3);
    CosetLabeling lab{{0, 3}, {0, 1, 2}};
    try {
        induce_regular_subgroup(d3, left_regular(cyclic_group(2)), left_regular(cyclic_group(3)), lab);
        FAIL("expected NotNormalized");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotNormalized);
    }
}

TEST_CASE("regular subgroups on cosets")
{
    auto d3 = dihedral_group(3);
    auto x = left_cosets(d3, {0, 3});
    CHECK(x.size() == 3);
    auto subs = enumerate_regular_subgroups_on_cosets(d3, x, {.normalized_by_lambda = true});
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].type_name() == "C3");
}

TEST_CASE("classical structure is listed first")
{
    for (const auto& g : {cyclic_group(6), dihedral_group(3), direct_product(cyclic_group(2), cyclic_group(2))}) {
        auto all = enumerate_regular_subgroups(g, {.normalized_by_lambda = true});
        REQUIRE_FALSE(all.empty());
        CHECK(all.front() == right_regular(g));
        CHECK(std::is_sorted(all.begin() + 1, all.end()));
    }
}
