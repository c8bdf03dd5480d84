#include "hgmod/orders.hpp"

#include "hgmod/errors.hpp"

#include <numeric>

namespace hgmod {

bool is_order(const HopfAlgebra& h, const Lattice& carrier)
{
    if (!carrier.contains(h.one_coordinates())) return false;
    const Matrix& rows = carrier.hnf();
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = 0; j < rows.rows(); ++j)
            if (!carrier.contains(h.mul(rows.row(i), rows.row(j)))) return false;
    return true;
}

Order::Order(const HopfAlgebra& h, Lattice carrier) : carrier_(std::move(carrier))
{
    if (carrier_.rank() != h.dim()) throw Error(ErrorKind::DimensionMismatch, "order lattice rank");
    if (!is_order(h, carrier_)) throw Error(ErrorKind::NotAnOrder, "lattice is not a ring containing 1");
}

Order lambda_fixed_order(const HopfAlgebra& h, long p)
{
    const GroupAlgebra& ea = h.group_algebra();
    const std::size_t d = ea.field_dim();
    Matrix to_integral = inverse(ea.extension().integral_basis());
    Matrix w = h.basis_matrix();
    Matrix local(w.rows(), w.cols());
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (int k = 0; k < ea.subgroup().size(); ++k) {
            std::size_t off = static_cast<std::size_t>(k) * d;
            Vector block(d);
            for (std::size_t r = 0; r < d; ++r) block[r] = w(i, off + r);
            Vector c = to_integral.apply_left(block);
            for (std::size_t r = 0; r < d; ++r) local(i, off + r) = c[r];
        }
    return Order(h, integral_preimage(local, p));
}

Order associated_order(const HopfAlgebra& h, const Lattice& b)
{
    const std::size_t m = b.rank(), n = h.dim();
    if (m != h.group_algebra().subfield_dim()) throw Error(ErrorKind::DimensionMismatch, "B must live in L");
    Matrix to_b = inverse(b.hnf());
    Matrix wide(n, m * m);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix act = h.action_matrix(unit_vector(n, i));
        for (std::size_t j = 0; j < m; ++j) {
            Vector c = to_b.apply_left(act.apply(b.hnf().row(j)));
            for (std::size_t k = 0; k < m; ++k) wide(i, j * m + k) = c[k];
        }
    }
    return Order(h, integral_preimage(wide, b.prime()));
}

Order adjoin(const HopfAlgebra& h, const Order& order, const Vector& w)
{
    long p = order.prime();
    Matrix gens = order.lattice().hnf();
    gens.append_row(w);
    Lattice current(gens, p);
    for (;;) {
        Matrix next = current.hnf();
        const Matrix& rows = current.hnf();
        for (std::size_t i = 0; i < rows.rows(); ++i)
            for (std::size_t j = i; j < rows.rows(); ++j) next.append_row(h.mul(rows.row(i), rows.row(j)));
        Lattice grown(next, p);
        if (grown == current) break;
        current = grown;
    }
    return Order(h, current);
}

std::optional<Lattice> orbit_lattice(const HopfAlgebra& h, const Order& a, const Vector& x)
{
    Matrix rows(0, x.size());
    for (std::size_t i = 0; i < a.lattice().rank(); ++i) rows.append_row(h.action_matrix(a.lattice().hnf().row(i)).apply(x));
    if (rank(rows) != x.size()) return std::nullopt;
    return Lattice(rows, a.prime());
}

std::string to_string(Freeness f)
{
    return f == Freeness::Free ? "Free" : "NotFree";
}

namespace {

using ResidueMatrix = std::vector<std::vector<long>>;

long inverse_mod(long a, long p)
{
    long r = 1, e = p - 2;
    a %= p;
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

std::size_t rank_mod_p(ResidueMatrix m, long p)
{
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        long inv = inverse_mod(m[rank][c], p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            long f = m[r][c] * inv % p;
            for (std::size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace

FreenessResult generator_search(const HopfAlgebra& h, const Order& a, const Lattice& b, const SearchOptions& opts)
{
    const long p = b.prime();
    const std::size_t m = b.rank();
    if (a.prime() != p) throw Error(ErrorKind::DimensionMismatch, "order and lattice at different primes");
    std::uint64_t classes = 1;
    for (std::size_t i = 0; i < m; ++i) {
        classes *= static_cast<std::uint64_t>(p);
        if (classes > opts.bound)
            throw Error(ErrorKind::SearchTooLarge, std::to_string(p) + "^" + std::to_string(m) + " exceeds the search bound " + std::to_string(opts.bound));
    }

    // row vector r (B-coordinates of x) maps to r * R_i, the B-coordinates of a_i . x
    const Matrix& bh = b.hnf();
    Matrix to_b = inverse(bh);
    std::vector<ResidueMatrix> reduced;
    for (std::size_t i = 0; i < a.lattice().rank(); ++i) {
        Matrix r = bh * h.action_matrix(a.lattice().hnf().row(i)).transpose() * to_b;
        ResidueMatrix res(m, std::vector<long>(m));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                if (!is_p_integral(r(j, k), p)) throw Error(ErrorKind::NotAnOrder, "A.B is not contained in B");
                res[j][k] = residue_mod_p(r(j, k), p);
            }
        reduced.push_back(std::move(res));
    }

    FreenessResult out;
    std::vector<long> digits(m, 0);
    for (std::uint64_t count = 1; count <= classes; ++count) {
        ResidueMatrix images;
        for (const auto& r : reduced) {
            std::vector<long> v(m, 0);
            for (std::size_t j = 0; j < m; ++j) {
                if (digits[j] == 0) continue;
                for (std::size_t k = 0; k < m; ++k) v[k] = (v[k] + digits[j] * r[j][k]) % p;
            }
            images.push_back(std::move(v));
        }
        if (rank_mod_p(images, p) == m) {
            Vector r;
            for (long dgt : digits) r.push_back(Rational(dgt));
            Vector x = bh.apply_left(r);
            auto span = orbit_lattice(h, a, x);
            if (!span || *span != b) throw Error(ErrorKind::InvalidAlgebra, "residue test passed but A.x != B");
            out.status = Freeness::Free;
            out.generator = x;
            out.search_size = count;
            return out;
        }
        // next residue vector, last digit fastest
        for (std::size_t j = m; j-- > 0;) {
            if (++digits[j] < p) break;
            digits[j] = 0;
        }
    }
    out.search_size = classes;
    return out;
}

// ---- pipelines ----

namespace {

std::vector<RegularSubgroup> normalized_structures(const FiniteGroup& g)
{
    return enumerate_regular_subgroups(g, {.normalized_by_lambda = true});
}

} // namespace

std::vector<TheoremEntry> verify_theorem_commutative_tame(const GaloisExtension& ext, long p, const std::vector<int>& ks,
                                                          const SearchOptions& opts)
{
    RamificationData ram = ramification_data(ext, p);
    if (ram.e % p == 0) throw Error(ErrorKind::WildRamification, ext.name() + " is wildly ramified at " + std::to_string(p));
    std::vector<TheoremEntry> out;
    auto structures = normalized_structures(ext.group());
    for (std::size_t idx = 0; idx < structures.size(); ++idx) {
        const RegularSubgroup& n = structures[idx];
        if (!n.is_abelian()) continue;
        SylowSplit split = sylow_split(n, p);
        bool trivial = acts_trivially(ext.group(), ram.inertia, n, split.p_part);
        HopfAlgebra h(GroupAlgebra::galois(ext, n));
        Order lambda = lambda_fixed_order(h, p);
        for (int k : ks) {
            Lattice b = ideal_power(ext, p, k);
            TheoremEntry e;
            e.structure_index = static_cast<int>(idx);
            e.structure_type = n.type_name();
            e.ideal_power = k;
            e.g0_trivial_on_p_part = trivial;
            e.order_equals_lambda = associated_order(h, b) == lambda;
            e.result = generator_search(h, lambda, b, opts);
            out.push_back(std::move(e));
        }
    }
    return out;
}

DescentReport non_normal_descent(const GaloisExtension& ext, const ElementSet& gl, const RegularSubgroup& structure,
                                 const Lattice& b_prime, const SearchOptions& opts)
{
    const FiniteGroup& g = ext.group();
    const long p = b_prime.prime();
    DescentReport rep;
    rep.subfield_group = gl;
    auto complement = normal_complement(g, gl);
    if (!complement) throw Error(ErrorKind::NotAlmostClassical, "Gal(E/L) has no normal complement");
    rep.complement = *complement;
    if (!is_tame(ext, p)) throw Error(ErrorKind::WildRamification, "E/K is wild at " + std::to_string(p));
    ElementSet g0 = inertia_subgroup(ext, p);
    ElementSet meet;
    std::set_intersection(g0.begin(), g0.end(), gl.begin(), gl.end(), std::back_inserter(meet));
    rep.unramified = meet.size() == 1;
    rep.base_field = static_cast<int>(gl.size()) == g.order();

    CosetSpace x = left_cosets(g, gl);
    GroupAlgebra ea_s(ext, x, structure);
    HopfAlgebra hs(ea_s);

    // S on complement indices, T = rho(G_L) on G_L indices
    CosetLabeling lab = make_labeling(g, rep.complement, gl);
    std::vector<int> index_of_coset(static_cast<std::size_t>(x.size()));
    for (std::size_t i = 0; i < lab.transversal.size(); ++i)
        index_of_coset[static_cast<std::size_t>(x.coset_of[static_cast<std::size_t>(lab.transversal[i])])] = static_cast<int>(i);
    std::vector<Permutation> s_perms;
    for (const auto& sigma : structure.elements()) {
        std::vector<int> images;
        for (int xi : lab.transversal) images.push_back(index_of_coset[static_cast<std::size_t>(sigma(x.coset_of[static_cast<std::size_t>(xi)]))]);
        s_perms.emplace_back(images);
    }
    std::vector<Permutation> t_perms;
    for (int y : lab.factor) {
        std::vector<int> images;
        for (int yj : lab.factor) {
            int target = g.mul(yj, g.inv(y));
            images.push_back(static_cast<int>(std::find(lab.factor.begin(), lab.factor.end(), target) - lab.factor.begin()));
        }
        t_perms.emplace_back(images);
    }
    InducedSubgroup induced = induce_regular_subgroup(g, RegularSubgroup(s_perms), RegularSubgroup(t_perms), lab);
    rep.induced_type = induced.group.type_name();

    HopfAlgebra h(GroupAlgebra::galois(ext, induced.group));
    const GroupAlgebra& ea = h.group_algebra();
    const ElementSet& s_set = induced.first_factor;
    const ElementSet& t_set = induced.second_factor;
    GroupAlgebraElement theta_t = ea.theta(t_set);

    auto project = [&](const GroupAlgebraElement& z) {
        GroupAlgebraElement pz = projection_pi(ea, z, s_set, t_set);
        GroupAlgebraElement out = ea_s.zero();
        for (int s : s_set) {
            AlgebraElement c = ea.coefficient(pz, s);
            if (!c.is_zero()) out = out + ea_s.monomial(x.coset_of[static_cast<std::size_t>(s)], c);
        }
        return out;
    };

    rep.identity_holds = true;
    rep.projection_fixed = true;
    for (const auto& z : h.basis()) {
        GroupAlgebraElement pz = project(z);
        if (!hs.contains(pz)) rep.projection_fixed = false;
        GroupAlgebraElement zt = ea.mul(z, theta_t);
        for (std::size_t b = 0; b < ext.degree(); ++b) {
            AlgebraElement e = ext.algebra().basis(b);
            if (ea.act(zt, e) != ea_s.act(pz, ext.trace(e, gl))) rep.identity_holds = false;
        }
    }
    if (!rep.identity_holds || !rep.projection_fixed) return rep;

    Order a = associated_order(h, b_prime);
    rep.upstairs = generator_search(h, a, b_prime, opts);

    Matrix l_in_b = ea_s.subfield_basis() * inverse(b_prime.hnf());
    Lattice intersection = integral_preimage(l_in_b, p);
    rep.intersection = intersection;
    if (rep.upstairs.status != Freeness::Free) return rep;

    Vector y = ea_s.subfield_coordinates(ext.trace(AlgebraElement(*rep.upstairs.generator), gl));
    rep.generator = y;
    Matrix projected(0, hs.dim());
    for (std::size_t i = 0; i < a.lattice().rank(); ++i) {
        auto c = hs.coordinates(project(h.element(a.lattice().hnf().row(i))));
        if (!c) throw Error(ErrorKind::NotFixed, "pi(A) left H_S");
        projected.append_row(*c);
    }
    Lattice pa(projected, p);
    Matrix images(0, y.size());
    for (std::size_t i = 0; i < pa.rank(); ++i) images.append_row(hs.action_matrix(pa.hnf().row(i)).apply(y));
    rep.descended_equals_intersection = rank(images) == y.size() && Lattice(images, p) == intersection;
    rep.projected_order_is_associated = associated_order(hs, intersection).lattice() == pa;
    return rep;
}

std::vector<LocalCheckEntry> local_check_global(const GaloisExtension& ext, const Matrix& b_basis, const std::vector<long>& primes,
                                                const SearchOptions& opts)
{
    if (!ext.group().is_abelian()) throw Error(ErrorKind::NotAbelian, ext.name() + " has a nonabelian group");
    if (!is_ambiguous_global(ext, b_basis)) throw Error(ErrorKind::NotAmbiguous, "B is not Galois-stable");
    for (long p : primes)
        if (!is_tame(ext, p)) throw Error(ErrorKind::WildPrime, std::to_string(p) + " is wildly ramified");
    std::vector<LocalCheckEntry> out;
    auto structures = normalized_structures(ext.group());
    for (long p : primes) {
        bool unramified = ramification_data(ext, p).unramified;
        Lattice b(b_basis, p);
        for (std::size_t idx = 0; idx < structures.size(); ++idx) {
            if (!structures[idx].is_abelian()) continue;
            HopfAlgebra h(GroupAlgebra::galois(ext, structures[idx]));
            LocalCheckEntry e;
            e.p = p;
            e.structure_index = static_cast<int>(idx);
            e.structure_type = structures[idx].type_name();
            e.unramified = unramified;
            e.result = generator_search(h, lambda_fixed_order(h, p), b, opts);
            out.push_back(std::move(e));
        }
    }
    return out;
}

} // namespace hgmod
