#include "hgmod/etale_algebra.hpp"

#include "hgmod/errors.hpp"

namespace hgmod {

EtaleAlgebra::EtaleAlgebra(std::vector<std::string> names, std::vector<Rational> structure_constants, Vector one)
    : names_(std::move(names)), constants_(std::move(structure_constants)), one_(std::move(one))
{
    const std::size_t n = dim();
    if (n == 0) throw Error(ErrorKind::InvalidAlgebra, "empty basis");
    if (constants_.size() != n * n * n) throw Error(ErrorKind::InvalidAlgebra, "structure constants must be n^3");
    if (one_.dim() != n) throw Error(ErrorKind::InvalidAlgebra, "unit has wrong dimension");

    for (std::size_t i = 0; i < n; ++i) {
        if (mul(one_, basis(i)) != basis(i)) throw Error(ErrorKind::InvalidAlgebra, "unit law fails on " + names_[i]);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                if (constant(i, j, k) != constant(j, i, k))
                    throw Error(ErrorKind::InvalidAlgebra, "not commutative on " + names_[i] + "," + names_[j]);
            AlgebraElement ij = mul(basis(i), basis(j));
            for (std::size_t k = 0; k < n; ++k)
                if (mul(ij, basis(k)) != mul(basis(i), mul(basis(j), basis(k))))
                    throw Error(ErrorKind::InvalidAlgebra, "not associative");
        }
    }
}

AlgebraElement EtaleAlgebra::element(const Vector& coords) const
{
    if (coords.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "element dimension");
    return AlgebraElement(coords);
}

AlgebraElement EtaleAlgebra::mul(const AlgebraElement& x, const AlgebraElement& y) const
{
    const std::size_t n = dim();
    Vector r(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            Rational xy = x[i] * y[j];
            const Rational* c = &constants_[(i * n + j) * n];
            for (std::size_t k = 0; k < n; ++k)
                if (c[k] != 0) r[k] += xy * c[k];
        }
    }
    return AlgebraElement(std::move(r));
}

AlgebraElement EtaleAlgebra::pow(const AlgebraElement& x, long k) const
{
    if (k < 0) return pow(invert(x), -k);
    AlgebraElement result = one_, base = x;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

Matrix EtaleAlgebra::multiplication_matrix(const AlgebraElement& x) const
{
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, mul(x, basis(j)).coords());
    return m;
}

AlgebraElement EtaleAlgebra::invert(const AlgebraElement& x) const
{
    auto y = solve(multiplication_matrix(x), one_.coords());
    if (!y || mul(x, AlgebraElement(*y)) != one_) throw Error(ErrorKind::NotInvertible, "element is not a unit");
    return AlgebraElement(*y);
}

std::optional<Rational> EtaleAlgebra::as_scalar(const AlgebraElement& x) const
{
    for (std::size_t i = 0; i < dim(); ++i)
        if (one_[i] != 0) {
            Rational q = x[i] / one_[i];
            if (q * one_ == x) return q;
            return std::nullopt;
        }
    return std::nullopt;
}

std::string EtaleAlgebra::format(const AlgebraElement& x) const
{
    std::string s;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        std::string c = to_string(x[i]);
        if (!s.empty()) s += (c[0] == '-') ? " - " : " + ";
        else if (c[0] == '-') s += "-";
        if (c[0] == '-') c = c.substr(1);
        s += (c == "1" ? "" : c + "*") + names_[i];
    }
    return s.empty() ? "0" : s;
}

Lattice lattice_product(const EtaleAlgebra& alg, const Lattice& a, const Lattice& b)
{
    if (a.prime() != b.prime()) throw Error(ErrorKind::DimensionMismatch, "lattices at different primes");
    Matrix gens(0, alg.dim());
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j)
            gens.append_row(alg.mul(AlgebraElement(a.hnf().row(i)), AlgebraElement(b.hnf().row(j))).coords());
    return Lattice(gens, a.prime());
}

} // namespace hgmod
