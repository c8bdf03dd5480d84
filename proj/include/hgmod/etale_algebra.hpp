#pragma once

#include "hgmod/lattice.hpp"
#include "hgmod/matrix.hpp"

#include <string>
#include <vector>

namespace hgmod {

class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(Vector coords) : coords_(std::move(coords)) {}

    std::size_t dim() const { return coords_.size(); }
    const Vector& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    bool is_zero() const { return hgmod::is_zero(coords_); }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) { return AlgebraElement(a.coords_ + b.coords_); }
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return AlgebraElement(a.coords_ - b.coords_); }
    friend AlgebraElement operator-(const AlgebraElement& a) { return AlgebraElement(Rational(-1) * a.coords_); }
    friend AlgebraElement operator*(const Rational& s, const AlgebraElement& a) { return AlgebraElement(s * a.coords_); }
    AlgebraElement& operator+=(const AlgebraElement& b)
    {
        coords_ = coords_ + b.coords_;
        return *this;
    }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) = default;

private:
    Vector coords_;
};

/* Commutative Q-algebra on a named basis with structure constants
 * b_i * b_j = sum_k c_ijk b_k. */
class EtaleAlgebra {
public:
    EtaleAlgebra(std::vector<std::string> names, std::vector<Rational> structure_constants, Vector one);

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const
    {
        return constants_[(i * dim() + j) * dim() + k];
    }
    const std::vector<Rational>& structure_constants() const { return constants_; }

    AlgebraElement zero() const { return AlgebraElement(zero_vector(dim())); }
    AlgebraElement one() const { return one_; }
    AlgebraElement basis(std::size_t i) const { return AlgebraElement(unit_vector(dim(), i)); }
    AlgebraElement scalar(const Rational& q) const { return q * one_; }
    AlgebraElement element(const Vector& coords) const;

    AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement pow(const AlgebraElement& x, long k) const;
    AlgebraElement invert(const AlgebraElement& x) const;    // throws NotInvertible
    /* Column j holds x * b_j. */
    Matrix multiplication_matrix(const AlgebraElement& x) const;
    /* The rational q with x == q * 1, if x is a scalar. */
    std::optional<Rational> as_scalar(const AlgebraElement& x) const;

    std::string format(const AlgebraElement& x) const;

private:
    std::vector<std::string> names_;
    std::vector<Rational> constants_;
    AlgebraElement one_;
};

/* The Z_(p)-lattice spanned by all products of basis vectors of a and b. */
Lattice lattice_product(const EtaleAlgebra& alg, const Lattice& a, const Lattice& b);

} // namespace hgmod
