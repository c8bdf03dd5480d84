#include "hgmod/lattice.hpp"

#include "hgmod/errors.hpp"

#include <algorithm>
#include <limits>

namespace hgmod {

namespace {

/* Smallest m >= 0 with p^m * M p-integral. */
int denominator_exponent(const Matrix& m, long p)
{
    int e = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m(i, j);
            if (x != 0 && !is_p_integral(x, p)) e = std::max(e, -p_valuation(x, p));
        }
    return e;
}

void add_multiple(Matrix& m, std::size_t target, std::size_t source, const Rational& f)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(source, j) != 0) m(target, j) -= f * m(source, j);
}

void scale_row(Matrix& m, std::size_t r, const Rational& f)
{
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= f;
}

Rational prime_power(long p, int k)
{
    if (k >= 0) return Rational(pow_int(p, static_cast<unsigned>(k)));
    return Rational(Integer(1), pow_int(p, static_cast<unsigned>(-k)));
}

} // namespace

LocalEchelon local_echelon(const Matrix& generators, long p, bool track_transform)
{
    const int shift = denominator_exponent(generators, p);
    Matrix a = prime_power(p, shift) * generators;
    const std::size_t m = a.rows();
    Matrix u = track_transform ? Matrix::identity(m) : Matrix();

    std::vector<std::size_t> pivots;
    std::vector<int> exps;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < m; ++c) {
        std::size_t best = m;
        int best_v = std::numeric_limits<int>::max();
        for (std::size_t i = r; i < m; ++i) {
            if (a(i, c) == 0) continue;
            int v = p_valuation(a(i, c), p);
            if (v < best_v) {
                best_v = v;
                best = i;
            }
        }
        if (best == m) continue;
        a.swap_rows(r, best);
        if (track_transform) u.swap_rows(r, best);
        Rational pk = prime_power(p, best_v);
        Rational unit_inv = pk / a(r, c);
        scale_row(a, r, unit_inv);
        if (track_transform) scale_row(u, r, unit_inv);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (a(i, c) == 0) continue;
            Rational f = a(i, c) / pk;
            add_multiple(a, i, r, f);
            if (track_transform) add_multiple(u, i, r, f);
        }
        pivots.push_back(c);
        exps.push_back(best_v);
        ++r;
    }

    for (std::size_t t = 0; t < r; ++t) {
        const std::size_t c = pivots[t];
        const unsigned k = static_cast<unsigned>(exps[t]);
        const Rational pk = prime_power(p, exps[t]);
        for (std::size_t i = 0; i < t; ++i) {
            if (a(i, c) == 0) continue;
            Rational rem(residue_mod_prime_power(a(i, c), p, k));
            Rational f = (a(i, c) - rem) / pk;
            if (f == 0) continue;
            add_multiple(a, i, t, f);
            if (track_transform) add_multiple(u, i, t, f);
        }
    }

    LocalEchelon out;
    const Rational unshift = prime_power(p, -shift);
    out.rows = Matrix(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.rows(i, j) = a(i, j) * unshift;
    out.pivots = std::move(pivots);
    for (auto& e : exps) e -= shift;
    out.pivot_exponents = std::move(exps);
    if (track_transform) {
        out.transform = Matrix(r, m);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < m; ++j) out.transform(i, j) = u(i, j);
    }
    return out;
}

std::optional<Vector> local_solve(const Matrix& generators, const Vector& target, long p)
{
    auto e = local_echelon(generators, p, true);
    // target = y * rows with y p-integral, solved column by column along pivots
    Vector rest = target;
    Vector y(e.rows.rows(), Rational(0));
    for (std::size_t t = 0; t < e.rows.rows(); ++t) {
        const std::size_t c = e.pivots[t];
        y[t] = rest[c] / e.rows(t, c);
        if (!is_p_integral(y[t], p)) return std::nullopt;
        for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= y[t] * e.rows(t, j);
    }
    if (!is_zero(rest)) return std::nullopt;
    return e.transform.apply_left(y);
}

Lattice::Lattice(const Matrix& generators, long p) : p_(p)
{
    if (!is_prime(p)) throw Error(ErrorKind::InvalidAlgebra, "lattice prime must be prime");
    auto e = local_echelon(generators, p);
    if (e.rows.rows() != generators.cols())
        throw Error(ErrorKind::RankDeficient, "generators span rank " + std::to_string(e.rows.rows()) + " < " +
                                                  std::to_string(generators.cols()));
    hnf_ = std::move(e.rows);
    exponents_ = std::move(e.pivot_exponents);
}

Lattice Lattice::standard(std::size_t n, long p) { return Lattice(Matrix::identity(n), p); }

Vector Lattice::coordinates(const Vector& x) const
{
    const std::size_t n = rank();
    if (x.size() != n) throw Error(ErrorKind::DimensionMismatch, "lattice coordinates");
    Vector rest = x;
    Vector c(n, Rational(0));
    for (std::size_t t = 0; t < n; ++t) {
        c[t] = rest[t] / hnf_(t, t);
        if (c[t] == 0) continue;
        for (std::size_t j = t; j < n; ++j) rest[j] -= c[t] * hnf_(t, j);
    }
    return c;
}

bool Lattice::contains(const Vector& x) const { return is_p_integral(coordinates(x), p_); }

bool Lattice::contains(const Lattice& other) const
{
    if (other.p_ != p_ || other.rank() != rank()) return false;
    for (std::size_t i = 0; i < other.rank(); ++i)
        if (!contains(other.hnf_.row(i))) return false;
    return true;
}

int Lattice::volume_exponent() const
{
    int s = 0;
    for (int e : exponents_) s += e;
    return s;
}

Lattice Lattice::scaled(const Rational& s) const
{
    if (s == 0) throw Error(ErrorKind::RankDeficient, "scaling a lattice by zero");
    return Lattice(s * hnf_, p_);
}

Lattice operator+(const Lattice& a, const Lattice& b)
{
    if (a.p_ != b.p_) throw Error(ErrorKind::DimensionMismatch, "lattices at different primes");
    return Lattice(vstack(a.hnf_, b.hnf_), a.p_);
}

int lattice_index_exponent(const Lattice& outer, const Lattice& inner)
{
    if (!outer.contains(inner)) throw Error(ErrorKind::DimensionMismatch, "lattice index: not a sublattice");
    return inner.volume_exponent() - outer.volume_exponent();
}

Lattice integral_preimage(const Matrix& w, long p)
{
    const std::size_t m = w.rows();
    auto e = local_echelon(w.transpose(), p);
    if (e.rows.rows() != m) throw Error(ErrorKind::RankDeficient, "integral_preimage needs full row rank");
    Matrix r(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) r(i, j) = e.rows(i, j);
    return Lattice(inverse(r).transpose(), p);
}

} // namespace hgmod
