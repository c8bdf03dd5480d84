#pragma once

#include "hgmod/etale_algebra.hpp"
#include "hgmod/perm_groups.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hgmod {

struct Automorphism {
    Matrix matrix;    // column j is the image of basis vector j
    int label = 0;    // group element index
};

struct PrimeData {
    long p = 0;
    Matrix ideal_basis;    // rows, algebra coordinates
    AlgebraElement uniformizer;
    int e = 0;
    int f = 0;
};

/* A Galois extension of Q given by an algebra, a group acting on it and a
 * Z-basis of its maximal order. Primes not listed in `primes` must not divide
 * the discriminant of the integral basis. */
class GaloisExtension {
public:
    GaloisExtension(std::string name, EtaleAlgebra algebra, FiniteGroup group,
                    std::vector<Matrix> automorphisms, Matrix integral_basis,
                    std::vector<PrimeData> primes);

    const std::string& name() const { return name_; }
    const EtaleAlgebra& algebra() const { return algebra_; }
    const FiniteGroup& group() const { return group_; }
    std::size_t degree() const { return algebra_.dim(); }
    Automorphism automorphism(int g) const { return {automorphisms_[g], g}; }
    const Matrix& automorphism_matrix(int g) const { return automorphisms_[g]; }
    const Matrix& integral_basis() const { return integral_basis_; }
    const std::vector<PrimeData>& primes() const { return primes_; }
    const PrimeData* prime_data(long p) const;

    AlgebraElement apply(int g, const AlgebraElement& x) const;
    /* Sum of g(x) over g in the subgroup. */
    AlgebraElement trace(const AlgebraElement& x, const ElementSet& subgroup) const;
    AlgebraElement trace(const AlgebraElement& x) const;
    /* Rational scalar of the full trace. */
    Rational trace_scalar(const AlgebraElement& x) const;
    Integer discriminant() const;

    /* The maximal order localized at p. */
    Lattice integers(long p) const { return Lattice(integral_basis_, p); }
    /* Image lattice g(B). */
    Lattice image(int g, const Lattice& b) const;

private:
    std::string name_;
    EtaleAlgebra algebra_;
    FiniteGroup group_;
    std::vector<Matrix> automorphisms_;
    Matrix integral_basis_;
    std::vector<PrimeData> primes_;
};

Lattice prime_ideal(const GaloisExtension& ext, const PrimeData& pd);
/* Number of primes above p recorded in pd, n / (e f). */
int prime_count(const GaloisExtension& ext, const PrimeData& pd);

/* v_P(x) normalized by v(uniformizer) = 1. Only for a unique prime above p. */
int valuation(const GaloisExtension& ext, const AlgebraElement& x, long p);

/* P^k localized at p. Unique-prime fixtures give uniformizer^k O; primes not
 * dividing the discriminant give p^k O when p is inert. */
Lattice ideal_power(const GaloisExtension& ext, long p, int k);

struct RamificationData {
    long p = 0;
    int e = 1;
    int residue_degree = 1;
    int prime_count = 1;
    bool unramified = true;
    ElementSet inertia;
};

ElementSet inertia_subgroup(const GaloisExtension& ext, long p);
RamificationData ramification_data(const GaloisExtension& ext, long p);
bool is_tame(const GaloisExtension& ext, long p);

/* x with p-integral coordinates and trace 1 over the subgroup. */
AlgebraElement trace_one_element(const GaloisExtension& ext, const ElementSet& subgroup, long p);

/* Rows spanning the elements fixed by every g in the subgroup. */
Matrix fixed_subspace(const GaloisExtension& ext, const ElementSet& subgroup);

bool is_ambiguous(const GaloisExtension& ext, const Lattice& b);
/* Global version: rows of `basis` span a Z-lattice. */
bool is_ambiguous_global(const GaloisExtension& ext, const Matrix& basis);

} // namespace hgmod
