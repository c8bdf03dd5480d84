#include "hgmod/extension.hpp"

#include "hgmod/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hgmod {

GaloisExtension::GaloisExtension(std::string name, EtaleAlgebra algebra, FiniteGroup group,
                                 std::vector<Matrix> automorphisms, Matrix integral_basis,
                                 std::vector<PrimeData> primes)
    : name_(std::move(name)), algebra_(std::move(algebra)), group_(std::move(group)),
      automorphisms_(std::move(automorphisms)), integral_basis_(std::move(integral_basis)), primes_(std::move(primes))
{
    const std::size_t n = algebra_.dim();
    if (static_cast<std::size_t>(group_.order()) != n)
        throw Error(ErrorKind::InvalidAlgebra, name_ + ": group order differs from degree");
    if (automorphisms_.size() != n) throw Error(ErrorKind::InvalidAlgebra, name_ + ": one automorphism per group element");
    for (const auto& m : automorphisms_)
        if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::DimensionMismatch, name_ + ": automorphism shape");
    if (automorphisms_[0] != Matrix::identity(n)) throw Error(ErrorKind::InvalidAlgebra, name_ + ": identity acts nontrivially");

    for (int g = 0; g < group_.order(); ++g) {
        if (determinant(automorphisms_[g]) == 0) throw Error(ErrorKind::InvalidAlgebra, name_ + ": singular automorphism");
        for (int h = 0; h < group_.order(); ++h)
            if (automorphisms_[g] * automorphisms_[h] != automorphisms_[group_.mul(g, h)])
                throw Error(ErrorKind::InvalidAlgebra, name_ + ": action is not a homomorphism");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                AlgebraElement lhs = apply(g, algebra_.mul(algebra_.basis(i), algebra_.basis(j)));
                AlgebraElement rhs = algebra_.mul(apply(g, algebra_.basis(i)), apply(g, algebra_.basis(j)));
                if (lhs != rhs) throw Error(ErrorKind::InvalidAlgebra, name_ + ": automorphism not multiplicative");
            }
    }
    for (int g = 0; g < group_.order(); ++g)
        if (apply(g, algebra_.one()) != algebra_.one()) throw Error(ErrorKind::InvalidAlgebra, name_ + ": automorphism moves 1");

    if (integral_basis_.rows() != n || integral_basis_.cols() != n || determinant(integral_basis_) == 0)
        throw Error(ErrorKind::RankDeficient, name_ + ": integral basis");
    Matrix to_basis = inverse(integral_basis_);
    auto integral_coords = [&](const Vector& v) {
        for (const auto& c : to_basis.apply_left(v))
            if (c.get_den() != 1) return false;
        return true;
    };
    if (!integral_coords(algebra_.one().coords())) throw Error(ErrorKind::InvalidAlgebra, name_ + ": 1 is not integral");
    for (std::size_t i = 0; i < n; ++i) {
        AlgebraElement bi(integral_basis_.row(i));
        for (std::size_t j = 0; j < n; ++j)
            if (!integral_coords(algebra_.mul(bi, AlgebraElement(integral_basis_.row(j))).coords()))
                throw Error(ErrorKind::InvalidAlgebra, name_ + ": integral basis not closed under products");
        for (int g = 0; g < group_.order(); ++g)
            if (!integral_coords(apply(g, bi).coords()))
                throw Error(ErrorKind::InvalidAlgebra, name_ + ": automorphism does not preserve the integers");
    }
    if (rank(fixed_subspace(*this, subgroup_closure(group_, generating_set(group_)))) != 1)
        throw Error(ErrorKind::InvalidAlgebra, name_ + ": fixed algebra is not Q");

    Integer disc = discriminant();
    for (const auto& pd : primes_) {
        if (!is_prime(pd.p)) throw Error(ErrorKind::InvalidAlgebra, name_ + ": prime data for a non-prime");
        if (pd.e <= 0 || pd.f <= 0 || n % static_cast<std::size_t>(pd.e * pd.f) != 0)
            throw Error(ErrorKind::InvalidAlgebra, name_ + ": e f must divide the degree");
        Lattice o = integers(pd.p);
        Lattice ideal = prime_ideal(*this, pd);
        if (!o.contains(ideal) || !ideal.contains(o.scaled(Rational(pd.p))))
            throw Error(ErrorKind::InvalidAlgebra, name_ + ": need pO in P in O");
        if (lattice_index_exponent(o, ideal) != pd.f)
            throw Error(ErrorKind::InvalidAlgebra, name_ + ": residue degree does not match [O:P]");
        if (!ideal.contains(pd.uniformizer.coords()))
            throw Error(ErrorKind::InvalidAlgebra, name_ + ": uniformizer not in P");
        if (prime_count(*this, pd) == 1) {
            Matrix gens(0, n);
            for (std::size_t i = 0; i < n; ++i)
                gens.append_row(algebra_.mul(pd.uniformizer, AlgebraElement(o.hnf().row(i))).coords());
            Lattice generated = Lattice(gens, pd.p) + o.scaled(Rational(pd.p));
            if (generated != ideal) throw Error(ErrorKind::InvalidAlgebra, name_ + ": P differs from uniformizer O + pO");
        }
        if (disc % pd.p != 0 && pd.e != 1)
            throw Error(ErrorKind::InvalidAlgebra, name_ + ": ramified prime data at a prime not dividing disc");
    }
}

const PrimeData* GaloisExtension::prime_data(long p) const
{
    for (const auto& pd : primes_)
        if (pd.p == p) return &pd;
    return nullptr;
}

AlgebraElement GaloisExtension::apply(int g, const AlgebraElement& x) const
{
    return AlgebraElement(automorphisms_.at(g).apply(x.coords()));
}

AlgebraElement GaloisExtension::trace(const AlgebraElement& x, const ElementSet& subgroup) const
{
    AlgebraElement sum = algebra_.zero();
    for (int g : subgroup) sum += apply(g, x);
    return sum;
}

AlgebraElement GaloisExtension::trace(const AlgebraElement& x) const
{
    ElementSet all(group_.order());
    std::iota(all.begin(), all.end(), 0);
    return trace(x, all);
}

Rational GaloisExtension::trace_scalar(const AlgebraElement& x) const
{
    auto q = algebra_.as_scalar(trace(x));
    if (!q) throw Error(ErrorKind::InvalidAlgebra, name_ + ": trace is not rational");
    return *q;
}

Integer GaloisExtension::discriminant() const
{
    const std::size_t n = degree();
    Matrix form(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            form(i, j) = trace_scalar(algebra_.mul(AlgebraElement(integral_basis_.row(i)), AlgebraElement(integral_basis_.row(j))));
    Rational d = determinant(form);
    if (d.get_den() != 1) throw Error(ErrorKind::InvalidAlgebra, name_ + ": non-integral discriminant");
    return d.get_num();
}

Lattice GaloisExtension::image(int g, const Lattice& b) const
{
    Matrix rows(0, degree());
    for (std::size_t i = 0; i < b.rank(); ++i) rows.append_row(automorphisms_.at(g).apply(b.hnf().row(i)));
    return Lattice(rows, b.prime());
}

Lattice prime_ideal(const GaloisExtension& ext, const PrimeData& pd)
{
    if (pd.ideal_basis.cols() != ext.degree()) throw Error(ErrorKind::DimensionMismatch, "prime ideal basis width");
    return Lattice(pd.ideal_basis, pd.p);
}

int prime_count(const GaloisExtension& ext, const PrimeData& pd)
{
    return static_cast<int>(ext.degree()) / (pd.e * pd.f);
}

namespace {

const PrimeData& unique_prime(const GaloisExtension& ext, long p)
{
    const PrimeData* pd = ext.prime_data(p);
    if (!pd) {
        if (ext.discriminant() % p == 0) throw Error(ErrorKind::MissingPrimeData, "no prime data at " + std::to_string(p));
        throw Error(ErrorKind::MultiplePrimes, "valuations need supplied data for a unique prime above " + std::to_string(p));
    }
    if (prime_count(ext, *pd) != 1) throw Error(ErrorKind::MultiplePrimes, std::to_string(p) + " splits");
    return *pd;
}

Lattice multiply_lattice(const EtaleAlgebra& alg, const AlgebraElement& x, const Lattice& l)
{
    Matrix rows(0, alg.dim());
    for (std::size_t i = 0; i < l.rank(); ++i) rows.append_row(alg.mul(x, AlgebraElement(l.hnf().row(i))).coords());
    return Lattice(rows, l.prime());
}

/* Order of x -> x^p on O/pO, the residue degree at an unramified p. */
int frobenius_order(const GaloisExtension& ext, long p)
{
    const EtaleAlgebra& alg = ext.algebra();
    const std::size_t n = ext.degree();
    const Matrix& basis = ext.integral_basis();
    Matrix to_basis = inverse(basis);
    // table[i][j] = coordinates of b_i b_j mod p
    std::vector<std::vector<std::vector<long>>> table(n, std::vector<std::vector<long>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector prod = alg.mul(AlgebraElement(basis.row(i)), AlgebraElement(basis.row(j))).coords();
            Vector c = to_basis.apply_left(prod);
            for (const auto& q : c) table[i][j].push_back(residue_mod_p(q, p));
        }
    using Residue = std::vector<long>;
    auto mul = [&](const Residue& x, const Residue& y) {
        Residue r(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                long xy = x[i] * y[j] % p;
                if (xy == 0) continue;
                for (std::size_t k = 0; k < n; ++k) r[k] = (r[k] + xy * table[i][j][k]) % p;
            }
        return r;
    };
    auto frob = [&](const Residue& x) {
        Residue result(n, 0), base = x;
        Vector one = to_basis.apply_left(alg.one().coords());
        for (std::size_t k = 0; k < n; ++k) result[k] = residue_mod_p(one[k], p);
        for (long e = p; e > 0; e >>= 1) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
        }
        return result;
    };
    for (int f = 1; f <= static_cast<int>(n); ++f) {
        bool identity = true;
        for (std::size_t i = 0; i < n && identity; ++i) {
            Residue x(n, 0);
            x[i] = 1;
            Residue y = x;
            for (int k = 0; k < f; ++k) y = frob(y);
            identity = (y == x);
        }
        if (identity) return f;
    }
    throw Error(ErrorKind::InvalidAlgebra, "Frobenius order exceeds the degree; p is not unramified");
}

} // namespace

int valuation(const GaloisExtension& ext, const AlgebraElement& x, long p)
{
    if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "valuation of 0");
    const PrimeData& pd = unique_prime(ext, p);
    const EtaleAlgebra& alg = ext.algebra();
    Lattice o = ext.integers(p);
    AlgebraElement pi_inv = alg.invert(pd.uniformizer);
    const int cap = 64 * static_cast<int>(ext.degree());
    AlgebraElement y = x;
    int v = 0;
    if (o.contains(y.coords())) {
        for (;;) {
            AlgebraElement next = alg.mul(y, pi_inv);
            if (!o.contains(next.coords())) return v;
            y = next;
            if (++v > cap) throw Error(ErrorKind::ZeroElement, "element has infinite valuation");
        }
    }
    while (!o.contains(y.coords())) {
        y = alg.mul(y, pd.uniformizer);
        if (--v < -cap) throw Error(ErrorKind::ZeroElement, "valuation diverges");
    }
    return v;
}

Lattice ideal_power(const GaloisExtension& ext, long p, int k)
{
    Lattice o = ext.integers(p);
    if (const PrimeData* pd = ext.prime_data(p)) {
        if (prime_count(ext, *pd) != 1) throw Error(ErrorKind::MultiplePrimes, "P^k needs a unique prime");
        return multiply_lattice(ext.algebra(), ext.algebra().pow(pd->uniformizer, k), o);
    }
    if (ext.discriminant() % p == 0) throw Error(ErrorKind::MissingPrimeData, "no prime data at " + std::to_string(p));
    if (frobenius_order(ext, p) != static_cast<int>(ext.degree()))
        throw Error(ErrorKind::MultiplePrimes, std::to_string(p) + " is not inert");
    Rational scale(pow_int(p, static_cast<unsigned>(std::abs(k))));
    return o.scaled(k >= 0 ? scale : 1 / scale);
}

ElementSet inertia_subgroup(const GaloisExtension& ext, long p)
{
    const PrimeData* pd = ext.prime_data(p);
    if (!pd) {
        if (ext.discriminant() % p == 0) throw Error(ErrorKind::MissingPrimeData, "no prime data at " + std::to_string(p));
        return {0};
    }
    Lattice ideal = prime_ideal(ext, *pd);
    const Matrix& basis = ext.integral_basis();
    ElementSet g0;
    for (int g = 0; g < ext.group().order(); ++g) {
        bool inert = ext.image(g, ideal) == ideal;
        for (std::size_t i = 0; i < basis.rows() && inert; ++i) {
            AlgebraElement b(basis.row(i));
            inert = ideal.contains((ext.apply(g, b) - b).coords());
        }
        if (inert) g0.push_back(g);
    }
    return g0;
}

RamificationData ramification_data(const GaloisExtension& ext, long p)
{
    RamificationData r;
    r.p = p;
    const int n = static_cast<int>(ext.degree());
    const PrimeData* pd = ext.prime_data(p);
    if (!pd) {
        if (ext.discriminant() % p == 0) throw Error(ErrorKind::MissingPrimeData, "no prime data at " + std::to_string(p));
        r.residue_degree = frobenius_order(ext, p);
        r.prime_count = n / r.residue_degree;
        r.inertia = {0};
        return r;
    }
    r.inertia = inertia_subgroup(ext, p);
    r.prime_count = prime_count(ext, *pd);
    if (r.prime_count == 1) {
        r.e = valuation(ext, ext.algebra().scalar(Rational(p)), p);
        r.residue_degree = n / r.e;
    } else {
        r.e = static_cast<int>(r.inertia.size());
        r.residue_degree = pd->f;
    }
    if (r.e != pd->e || r.residue_degree != pd->f || r.e != static_cast<int>(r.inertia.size()))
        throw Error(ErrorKind::InvalidAlgebra, "prime data at " + std::to_string(p) + " disagrees with computed e, f");
    r.unramified = (r.e == 1);
    return r;
}

bool is_tame(const GaloisExtension& ext, long p)
{
    return ramification_data(ext, p).e % p != 0;
}

AlgebraElement trace_one_element(const GaloisExtension& ext, const ElementSet& subgroup, long p)
{
    if (!is_subgroup(ext.group(), subgroup)) throw Error(ErrorKind::InvalidSubgroup, "trace over a non-subgroup");
    const EtaleAlgebra& alg = ext.algebra();
    const Matrix& basis = ext.integral_basis();
    const std::size_t n = basis.rows();
    std::vector<AlgebraElement> traces;
    for (std::size_t i = 0; i < n; ++i) traces.push_back(ext.trace(AlgebraElement(basis.row(i)), subgroup));

    std::optional<Vector> coeffs;
    std::vector<Integer> scalars;
    for (const auto& t : traces) {
        auto q = alg.as_scalar(t);
        if (!q || q->get_den() != 1) break;
        scalars.push_back(q->get_num());
    }
    if (scalars.size() == n) {
        // extended gcd, accumulated left to right
        Integer g = 0;
        std::vector<Integer> c(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            Integer g2, s, t;
            mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), scalars[i].get_mpz_t());
            for (auto& ck : c) ck *= s;
            c[i] += t;
            g = g2;
        }
        if (g == 0 || g % p == 0) throw Error(ErrorKind::WildRamification, "every trace is divisible by " + std::to_string(p));
        coeffs = Vector(n);
        for (std::size_t i = 0; i < n; ++i) (*coeffs)[i] = Rational(c[i]) / Rational(g);
    } else {
        Matrix gens(0, alg.dim());
        for (const auto& t : traces) gens.append_row(t.coords());
        coeffs = local_solve(gens, alg.one().coords(), p);
        if (!coeffs) throw Error(ErrorKind::WildRamification, "no p-integral element of trace 1");
    }

    AlgebraElement x = alg.zero();
    for (std::size_t i = 0; i < n; ++i) x += (*coeffs)[i] * AlgebraElement(basis.row(i));
    if (ext.trace(x, subgroup) != alg.one() || !ext.integers(p).contains(x.coords()))
        throw Error(ErrorKind::WildRamification, "trace-one verification failed");
    return x;
}

Matrix fixed_subspace(const GaloisExtension& ext, const ElementSet& subgroup)
{
    const std::size_t n = ext.degree();
    Matrix stacked(0, n);
    Matrix id = Matrix::identity(n);
    for (int g : subgroup) {
        Matrix d = ext.automorphism_matrix(g) - id;
        for (std::size_t i = 0; i < n; ++i) stacked.append_row(d.row(i));
    }
    if (stacked.rows() == 0) return id;
    return nullspace(stacked);
}

bool is_ambiguous(const GaloisExtension& ext, const Lattice& b)
{
    for (int g : generating_set(ext.group()))
        if (ext.image(g, b) != b) return false;
    return true;
}

bool is_ambiguous_global(const GaloisExtension& ext, const Matrix& basis)
{
    if (basis.rows() != ext.degree() || determinant(basis) == 0) throw Error(ErrorKind::RankDeficient, "lattice basis");
    Matrix to_basis = inverse(basis);
    for (int g : generating_set(ext.group()))
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            Vector image = ext.automorphism_matrix(g).apply(basis.row(i));
            for (const auto& c : to_basis.apply_left(image))
                if (c.get_den() != 1) return false;
        }
    return true;
}

} // namespace hgmod
