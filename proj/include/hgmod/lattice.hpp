#pragma once

#include "hgmod/matrix.hpp"

#include <optional>
#include <vector>

namespace hgmod {

/* Echelon form of the Z_(p)-module spanned by the rows of a generator matrix.
 * Pivot entries are p^k (k may be negative), entries above a pivot are
 * reduced to integers/p^m in [0, p^k) so the form is canonical whenever the
 * module has full rank. `transform` satisfies rows == transform * generators. */
struct LocalEchelon {
    Matrix rows;
    std::vector<std::size_t> pivots;
    std::vector<int> pivot_exponents;
    Matrix transform;
};

LocalEchelon local_echelon(const Matrix& generators, long p, bool track_transform = false);

/* Coefficients c in Z_(p)^m with sum c_i * generators[i] == target, if any. */
std::optional<Vector> local_solve(const Matrix& generators, const Vector& target, long p);

/* Full-rank Z_(p)-lattice in Q^n, stored by its Hermite normal form. */
class Lattice {
public:
    Lattice(const Matrix& generators, long p);
    static Lattice standard(std::size_t n, long p);

    long prime() const { return p_; }
    std::size_t rank() const { return hnf_.cols(); }
    const Matrix& hnf() const { return hnf_; }
    const std::vector<int>& pivot_exponents() const { return exponents_; }

    /* Rational coordinates of x against the HNF rows. */
    Vector coordinates(const Vector& x) const;
    bool contains(const Vector& x) const;
    bool contains(const Lattice& other) const;

    /* v_p of the covolume, i.e. sum of pivot exponents. */
    int volume_exponent() const;

    Lattice scaled(const Rational& s) const;
    friend Lattice operator+(const Lattice& a, const Lattice& b);
    friend bool operator==(const Lattice& a, const Lattice& b) { return a.p_ == b.p_ && a.hnf_ == b.hnf_; }

private:
    long p_;
    Matrix hnf_;
    std::vector<int> exponents_;
};

/* log_p [outer : inner]; throws InvalidSubgroup-like DimensionMismatch if inner is not contained. */
int lattice_index_exponent(const Lattice& outer, const Lattice& inner);

/* The lattice { c in Q^m : c * w has p-integral entries } for w of full row rank m. */
Lattice integral_preimage(const Matrix& w, long p);

} // namespace hgmod
