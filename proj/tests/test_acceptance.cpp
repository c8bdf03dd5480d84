// Acceptance run: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include "hgmod/errors.hpp"
#include "hgmod/fixtures.hpp"
#include "hgmod/orders.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

using namespace hgmod;
using namespace hgmod::oracles;

namespace {

// All comparisons are exact (GMP rationals, HNF equality); only runtimes carry limits.
constexpr double counterexample_seconds = 10.0;
constexpr double theorem_seconds = 60.0;

struct Outcome {
    bool passed = true;
    std::string note;
    void require(bool ok, const std::string& what)
    {
        if (!ok && passed) note = what;
        passed = passed && ok;
    }
};

std::vector<RegularSubgroup> normalized(const FiniteGroup& g, bool abelian_only = false)
{
    return enumerate_regular_subgroups(g, {.normalized_by_lambda = true, .abelian_only = abelian_only});
}

ElementSet whole(int n)
{
    ElementSet all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return all;
}

FiniteGroup as_group(const RegularSubgroup& n)
{
    std::vector<int> table;
    for (int a = 0; a < n.size(); ++a)
        for (int b = 0; b < n.size(); ++b) table.push_back(n.compose(a, b));
    return FiniteGroup(n.size(), table);
}

Outcome counterexample()
{
    using kummer::basis_index;
    Outcome out;
    GaloisExtension ext = build_kummer_cubic(5);
    const EtaleAlgebra& alg = ext.algebra();
    HopfAlgebra h(GroupAlgebra::galois(ext, left_regular(ext.group())));
    const GroupAlgebra& ea = h.group_algebra();
    AlgebraElement a = alg.basis(basis_index(0, 1)), a2 = alg.basis(basis_index(0, 2)), zeta = alg.basis(basis_index(1, 0));
    GroupAlgebraElement z = ea.monomial(kummer::tau, a2) + ea.monomial(kummer::sigma2_tau, alg.mul(alg.pow(zeta, 2), a2)) +
                            ea.monomial(kummer::sigma_tau, alg.mul(zeta, a2));

    for (int g = 0; g < 6; ++g) out.require(ea.act_g(g, z) == z, "z is not G-fixed");
    for (int i = 1; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            AlgebraElement expected = j == 2 ? Rational(15) * alg.mul(alg.pow(zeta, -i), a) : alg.zero();
            out.require(ea.act(z, alg.mul(alg.pow(zeta, i), alg.pow(a, j))) == expected, "action table of z");
        }

    Lattice ol = ext.integers(5);
    Order lambda = lambda_fixed_order(h, 5);
    Order a_lambda = associated_order(h, ol);
    Vector z5 = Rational(1, 5) * *h.coordinates(z);
    out.require(a_lambda.contains(z5), "z/5 not in A_lambda");
    out.require(!lambda.contains(z5), "z/5 in Lambda^G");
    out.require(adjoin(h, lambda, z5) == a_lambda, "A_lambda != Lambda^G[z/5]");
    out.require(generator_search(h, lambda, ol).status == Freeness::NotFree, "O_L free over Lambda^G");
    FreenessResult over_a = generator_search(h, a_lambda, ol);
    out.require(over_a.status == Freeness::Free && *orbit_lattice(h, a_lambda, *over_a.generator) == ol, "O_L not free over A_lambda");
    return out;
}

Outcome theorem_suite()
{
    Outcome out;
    std::size_t checked = 0;
    for (int n : {5, 7}) {
        GaloisExtension ext = build_cyclotomic(n);
        auto structures = normalized(ext.group());
        for (const auto& e : verify_theorem_commutative_tame(ext, n, {-2, -1, 0, 1, 2})) {
            std::string where = ext.name() + " N#" + std::to_string(e.structure_index) + " k=" + std::to_string(e.ideal_power);
            out.require(e.g0_trivial_on_p_part, where + ": G0 moves T");
            out.require(e.order_equals_lambda, where + ": A_H(P^k) != Lambda^G");
            out.require(e.result.status == Freeness::Free, where + ": not free");
            if (e.result.generator) {
                HopfAlgebra h(GroupAlgebra::galois(ext, structures[static_cast<std::size_t>(e.structure_index)]));
                auto span = orbit_lattice(h, lambda_fixed_order(h, n), *e.result.generator);
                out.require(span && *span == ideal_power(ext, n, e.ideal_power), where + ": generator does not span");
            }
            ++checked;
        }
    }
    out.require(checked > 0, "no structures checked");
    if (out.passed) out.note = std::to_string(checked) + " (structure, k) pairs";
    return out;
}

Outcome theta_identities()
{
    Outcome out;
    struct Pair {
        GaloisExtension ext;
        long p;
    };
    std::vector<Pair> tame{{build_cyclotomic(3), 3}, {build_cyclotomic(4), 3}, {build_cyclotomic(5), 5},
                           {build_cyclotomic(7), 7}, {build_cyclotomic(9), 2}, {build_kummer_cubic(5), 5}};
    int pairs = 0;
    for (const auto& [ext, p] : tame) {
        if (!is_tame(ext, p)) {
            out.require(false, ext.name() + " not tame at " + std::to_string(p));
            continue;
        }
        ElementSet all = whole(static_cast<int>(ext.degree()));
        AlgebraElement x = trace_one_element(ext, all, p);
        for (const auto& n : normalized(ext.group(), true)) {
            GroupAlgebra ea = GroupAlgebra::galois(ext, n);
            SylowSplit split = sylow_split(n, p);
            std::string where = ext.name() + " " + n.type_name();
            out.require(ea.theta(all) == ea.mul(ea.theta(split.prime_to_p), ea.theta(split.p_part)), where + ": theta_N");
            MapModelElement f = f_element(ea, x, split.prime_to_p);
            out.require(map_act(ea, ea.theta(split.p_part), f) == map_one(ext), where + ": theta_T f != 1");
            for (int s : split.prime_to_p) out.require(map_act(ea, ea.basis_element(s), f) == f, where + ": S moves f");
            ++pairs;
        }
    }
    if (out.passed) out.note = std::to_string(pairs) + " fixture/structure pairs";
    return out;
}

Outcome descent()
{
    Outcome out;
    GaloisExtension ext = build_kummer_cubic(5);
    ElementSet gl{0, kummer::tau};
    auto structures = enumerate_regular_subgroups_on_cosets(ext.group(), left_cosets(ext.group(), gl), {.normalized_by_lambda = true});
    out.require(structures.size() == 1, "expected one structure on L/K");
    for (int k : {0, 1, 3}) {
        DescentReport rep = non_normal_descent(ext, gl, structures.front(), ideal_power(ext, 5, k));
        std::string where = "B' = P^" + std::to_string(k);
        out.require(rep.unramified, where + ": E/L ramified");
        out.require(rep.identity_holds, where + ": descent identity");
        out.require(rep.projection_fixed, where + ": pi(H) not in H_S");
        out.require(rep.upstairs.status == Freeness::Free, where + ": B' not free");
        out.require(rep.descended_equals_intersection, where + ": pi(A).Tr(x) != B' cap L");
        out.require(rep.projected_order_is_associated, where + ": pi(A) != A_{H_S}(B)");
    }
    return out;
}

Outcome global_local()
{
    Outcome out;
    GaloisExtension ext = build_cyclotomic(7);
    const EtaleAlgebra& alg = ext.algebra();
    AlgebraElement pi2 = alg.pow(alg.one() - alg.basis(1), 2);
    Matrix o = ext.integral_basis(), p2 = o;
    for (std::size_t i = 0; i < o.rows(); ++i) p2.set_row(i, alg.mul(pi2, AlgebraElement(o.row(i))).coords());
    for (const auto& [label, b] : {std::pair{"O_L", o}, std::pair{"P_7^2", p2}})
        for (const auto& e : local_check_global(ext, b, {2, 7})) {
            std::string where = std::string(label) + " at " + std::to_string(e.p);
            out.require(e.unramified == (e.p == 2), where + ": wrong branch");
            out.require(e.passed(), where + ": not free");
        }
    return out;
}

Outcome oracles_agree()
{
    Outcome out;
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<std::vector<int>>> listed;
        for (const auto& s : regular_subgroups_of_degree(n)) listed.insert(key_of(s));
        out.require(listed == brute_force_regular(n), "regular subgroups of degree " + std::to_string(n));
    }
    std::vector<FiniteGroup> groups{cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                    direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(5), cyclic_group(6),
                                    dihedral_group(3)};
    for (const auto& g : groups) {
        auto lam = lambda_images(g);
        std::set<std::vector<std::vector<int>>> expected, listed;
        for (const auto& key : brute_force_regular(g.order())) {
            std::vector<Permutation> elems;
            for (const auto& im : key) elems.emplace_back(im);
            if (RegularSubgroup(elems).normalized_by(lam)) expected.insert(key);
        }
        for (const auto& s : normalized(g)) listed.insert(key_of(s));
        out.require(listed == expected, "normalized structures of a group of order " + std::to_string(g.order()));
    }

    int cases = 0;
    for (auto [n, p] : {std::pair{3, 3L}, {3, 2L}, {4, 2L}, {4, 3L}, {5, 5L}, {5, 2L}}) {
        GaloisExtension ext = build_cyclotomic(n);
        bool has_prime = ext.prime_data(p) != nullptr;
        for (const auto& s : normalized(ext.group())) {
            HopfAlgebra h(GroupAlgebra::galois(ext, s));
            std::vector<Lattice> bs{ext.integers(p)};
            if (has_prime) {
                bs.push_back(ideal_power(ext, p, 1));
                bs.push_back(ideal_power(ext, p, -1));
            }
            for (const auto& b : bs)
                for (const Order& a : {lambda_fixed_order(h, p), associated_order(h, b)}) {
                    bool searched = generator_search(h, a, b).status == Freeness::Free;
                    out.require(searched == box_oracle_free(h, a, b),
                                "generator search vs box oracle on " + ext.name() + " at " + std::to_string(p));
                    ++cases;
                }
        }
    }
    if (out.passed) out.note = std::to_string(cases) + " freeness cases";
    return out;
}

Outcome structural()
{
    Outcome out;
    std::vector<GaloisExtension> exts{build_cyclotomic(3), build_cyclotomic(4), build_cyclotomic(5),
                                      build_cyclotomic(7), build_cyclotomic(9), build_kummer_cubic(5)};
    int structures = 0;
    for (const auto& ext : exts) {
        for (const auto& n : normalized(ext.group())) {
            std::string where = ext.name() + " " + n.type_name();
            HopfAlgebra h(GroupAlgebra::galois(ext, n));
            const GroupAlgebra& ea = h.group_algebra();
            out.require(h.dim() == ext.degree(), where + ": dim H");
            out.require(is_hopf_galois(h), where + ": j not invertible");
            out.require(module_algebra_check(h), where + ": module algebra");
            for (const auto& pd : ext.primes()) {
                Order lambda = lambda_fixed_order(h, pd.p);
                for (int k : {-1, 0, 1, 2})
                    out.require(associated_order(h, ideal_power(ext, pd.p, k)).lattice().contains(lambda.lattice()),
                                where + ": Lambda^G not in A_H(P^" + std::to_string(k) + ")");
            }
            for (const auto& t : all_subgroups(as_group(n))) {
                if (!is_lambda_stable(ext.group(), n, t)) continue;
                out.require(fixed_field(ea, t).rows() * t.size() == ext.degree(), where + ": [L:L^T] != |T|");
            }
            ++structures;
        }
    }
    if (out.passed) out.note = std::to_string(structures) + " fixture/structure pairs";
    return out;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
        double limit_seconds;    // 0: no runtime limit
    };
    const std::vector<Criterion> criteria{
        {1, "counterexample reproduction", counterexample, counterexample_seconds},
        {2, "main theorem suite", theorem_suite, theorem_seconds},
        {3, "theta identities", theta_identities, 0},
        {4, "descent to the cubic subfield", descent, 0},
        {5, "global lattice, local freeness", global_local, 0},
        {6, "oracle equivalence", oracles_agree, 0},
        {7, "structural invariants", structural, 0},
    };
    bool all = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.note = std::string("threw ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            o.passed = false;
            o.note = "exceeded " + std::to_string(c.limit_seconds) + " s";
        }
        all = all && o.passed;
        std::printf("criterion %d: %s  %s  (%.2f s)%s%s\n", c.id, o.passed ? "PASS" : "FAIL", c.title, secs,
                    o.note.empty() ? "" : "  ", o.note.c_str());
    }
    return all ? 0 : 1;
}
