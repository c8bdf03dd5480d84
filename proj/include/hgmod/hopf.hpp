#pragma once

#include "hgmod/extension.hpp"

#include <optional>
#include <vector>

namespace hgmod {

/* Element of E[N], stored as |N| blocks of E-coordinates; block k is the
 * coefficient of the eta with eta(base) == k. */
class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(Vector coords) : coords_(std::move(coords)) {}

    const Vector& coords() const { return coords_; }
    bool is_zero() const { return hgmod::is_zero(coords_); }

    friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return GroupAlgebraElement(a.coords_ + b.coords_); }
    friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return GroupAlgebraElement(a.coords_ - b.coords_); }
    friend GroupAlgebraElement operator*(const Rational& s, const GroupAlgebraElement& a) { return GroupAlgebraElement(s * a.coords_); }
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) = default;

private:
    Vector coords_;
};

/* E[N] for a regular subgroup N of Perm(X), X = G / G_L. G acts on E by
 * Galois automorphisms and on N by conjugation with lambda on X. The Galois
 * case is G_L = {1}, X = G. */
class GroupAlgebra {
public:
    GroupAlgebra(const GaloisExtension& ext, CosetSpace cosets, RegularSubgroup n);
    static GroupAlgebra galois(const GaloisExtension& ext, RegularSubgroup n);

    const GaloisExtension& extension() const { return *ext_; }
    const RegularSubgroup& subgroup() const { return n_; }
    const CosetSpace& cosets() const { return cosets_; }
    bool is_galois() const { return cosets_.subgroup.size() == 1; }
    std::size_t field_dim() const { return ext_->degree(); }
    std::size_t dim() const { return static_cast<std::size_t>(n_.size()) * field_dim(); }

    /* L = E^{G_L} as rows in E-coordinates (reduced echelon). */
    const Matrix& subfield_basis() const { return l_basis_; }
    std::size_t subfield_dim() const { return l_basis_.rows(); }
    /* L-coordinates of an element of E lying in L; throws NotFixed otherwise. */
    Vector subfield_coordinates(const AlgebraElement& x) const;
    AlgebraElement from_subfield(const Vector& coords) const;

    AlgebraElement coefficient(const GroupAlgebraElement& z, int k) const;
    GroupAlgebraElement zero() const { return GroupAlgebraElement(zero_vector(dim())); }
    GroupAlgebraElement one() const { return basis_element(0); }
    /* 1 * eta_k */
    GroupAlgebraElement basis_element(int k) const;
    GroupAlgebraElement monomial(int k, const AlgebraElement& c) const;
    GroupAlgebraElement theta(const ElementSet& subset) const;

    GroupAlgebraElement mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) const;
    GroupAlgebraElement act_g(int g, const GroupAlgebraElement& z) const;
    /* Index of lambda(g) eta_k lambda(g)^-1. */
    int conjugate_index(int g, int k) const { return conj_[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)]; }
    /* A group element representing eta_k^-1(base coset). */
    int galois_representative(int k) const { return rep_[static_cast<std::size_t>(k)]; }
    AlgebraElement counit(const GroupAlgebraElement& z) const;
    Matrix g_action_matrix(int g) const;

    /* Eq. (1): sum_k c_k * rep(eta_k^-1(1))[x] for x in L, E-coordinates in and out. */
    AlgebraElement act(const GroupAlgebraElement& z, const AlgebraElement& x) const;

private:
    const GaloisExtension* ext_;
    CosetSpace cosets_;
    RegularSubgroup n_;
    Matrix l_basis_;
    std::vector<std::size_t> l_pivots_;
    std::vector<std::vector<int>> conj_;
    std::vector<int> rep_;
};

/* H = E[N]^G with a canonical rational basis (reduced echelon in E[N]-coordinates). */
class HopfAlgebra {
public:
    explicit HopfAlgebra(GroupAlgebra algebra);    // throws DimensionMismatch

    const GroupAlgebra& group_algebra() const { return ea_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<GroupAlgebraElement>& basis() const { return basis_; }
    const GroupAlgebraElement& basis(std::size_t i) const { return basis_[i]; }
    Matrix basis_matrix() const;

    GroupAlgebraElement element(const Vector& coords) const;
    /* H-coordinates, or nullopt when z is not in H. */
    std::optional<Vector> coordinates(const GroupAlgebraElement& z) const;
    bool contains(const GroupAlgebraElement& z) const { return coordinates(z).has_value(); }
    Vector mul(const Vector& a, const Vector& b) const;
    const Vector& counits() const { return counits_; }
    Vector one_coordinates() const;

    /* Matrix of x -> h.x on L-coordinates. */
    Matrix action_matrix(const Vector& h) const;
    AlgebraElement act(const Vector& h, const AlgebraElement& x) const;

private:
    GroupAlgebra ea_;
    std::vector<GroupAlgebraElement> basis_;
    std::vector<std::size_t> pivots_;
    Vector counits_;
    std::vector<Rational> constants_;    // h_i h_j = sum_k c_ijk h_k
};

/* Fixed ring of E[subset]^G for a G-stable subgroup of N. */
std::vector<GroupAlgebraElement> fixed_subring_basis(const GroupAlgebra& ea, const ElementSet& subset);

/* Matrix of j : L (x) H -> End_K(L); column (a, i) is y -> l_a (h_i . y) flattened. */
Matrix j_matrix(const HopfAlgebra& h);
bool is_hopf_galois(const HopfAlgebra& h);
/* h.(st) = sum c_eta (eta.s)(eta.t) and h.1 = eps(h) 1 on all basis pairs. */
bool module_algebra_check(const HopfAlgebra& h);

/* L^T as rows in E-coordinates. */
Matrix fixed_field(const GroupAlgebra& ea, const ElementSet& t);

/* pi : E[N] -> E[S] for N = S x T, as an element of E[N] supported on S.
 * Throws NotDirectProduct. */
GroupAlgebraElement projection_pi(const GroupAlgebra& ea, const GroupAlgebraElement& z, const ElementSet& s,
                                  const ElementSet& t);

/* ---- Map(G, E) model, Galois case ---- */

class MapModelElement {
public:
    MapModelElement() = default;
    explicit MapModelElement(std::vector<AlgebraElement> values) : values_(std::move(values)) {}

    const std::vector<AlgebraElement>& values() const { return values_; }
    const AlgebraElement& operator[](int g) const { return values_[static_cast<std::size_t>(g)]; }
    friend bool operator==(const MapModelElement& a, const MapModelElement& b) = default;

private:
    std::vector<AlgebraElement> values_;
};

MapModelElement map_one(const GaloisExtension& ext);
MapModelElement map_idempotent(const GaloisExtension& ext, int g);
MapModelElement map_mul(const GaloisExtension& ext, const MapModelElement& a, const MapModelElement& b);
/* (g . f)(g h) = g(f(h)) */
MapModelElement map_act_g(const GaloisExtension& ext, int g, const MapModelElement& f);
/* (c eta . f)(h) = c f(eta^-1(h)) extended linearly */
MapModelElement map_act(const GroupAlgebra& ea, const GroupAlgebraElement& z, const MapModelElement& f);
bool map_is_fixed(const GaloisExtension& ext, const MapModelElement& f);

/* Eq. (2): f_x = sum g(x) u_g. */
MapModelElement gp_embed(const GaloisExtension& ext, const AlgebraElement& x);
/* Inverse of gp_embed on G-fixed maps; throws NotFixed. */
AlgebraElement gp_project(const GaloisExtension& ext, const MapModelElement& f);
/* f = theta_S . f_x for x of trace 1; throws TraceNotOne. */
MapModelElement f_element(const GroupAlgebra& ea, const AlgebraElement& x, const ElementSet& s);

} // namespace hgmod
