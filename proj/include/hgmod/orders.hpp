#pragma once

#include "hgmod/hopf.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hgmod {

/* A Z_(p)-order in H, carried by a lattice in H-coordinates. */
class Order {
public:
    /* Throws NotAnOrder unless the lattice contains 1 and is closed under products. */
    Order(const HopfAlgebra& h, Lattice carrier);

    const Lattice& lattice() const { return carrier_; }
    long prime() const { return carrier_.prime(); }
    bool contains(const Vector& h_coords) const { return carrier_.contains(h_coords); }
    friend bool operator==(const Order& a, const Order& b) { return a.carrier_ == b.carrier_; }

private:
    Lattice carrier_;
};

bool is_order(const HopfAlgebra& h, const Lattice& carrier);

/* Lambda^G = O_E[N]^G localized at p, in H-coordinates. */
Order lambda_fixed_order(const HopfAlgebra& h, long p);
/* { z in H : z.B in B } for a lattice B in L-coordinates. */
Order associated_order(const HopfAlgebra& h, const Lattice& b);
/* The smallest order containing `order` and the element w (H-coordinates). */
Order adjoin(const HopfAlgebra& h, const Order& order, const Vector& w);
/* Span of a.x over the basis of A, in L-coordinates; nullopt if not of full rank. */
std::optional<Lattice> orbit_lattice(const HopfAlgebra& h, const Order& a, const Vector& x);

enum class Freeness { Free, NotFree };
std::string to_string(Freeness f);

struct FreenessResult {
    Freeness status = Freeness::NotFree;
    std::optional<Vector> generator;    // L-coordinates
    std::uint64_t search_size = 0;
};

struct SearchOptions {
    std::uint64_t bound = 1'000'000;
};

/* Decides whether B = A.x for some x by running over B/pB; x generates iff
 * the residues of a_i.x span B/pB. Throws SearchTooLarge when p^n > bound
 * and NotAnOrder when A.B is not inside B. */
FreenessResult generator_search(const HopfAlgebra& h, const Order& a, const Lattice& b, const SearchOptions& opts = {});

// ---- pipelines ----

struct TheoremEntry {
    int structure_index = 0;    // position in the normalized enumeration
    std::string structure_type;
    int ideal_power = 0;
    bool g0_trivial_on_p_part = false;
    bool order_equals_lambda = false;
    FreenessResult result;
    bool passed() const { return g0_trivial_on_p_part && order_equals_lambda && result.status == Freeness::Free; }
};

/* For every commutative N normalized by lambda(G) and every k: G0 acts trivially
 * on the p-part of N, A_H(P^k) = Lambda^G and P^k is Lambda^G-free. Throws
 * WildRamification at wild p. */
std::vector<TheoremEntry> verify_theorem_commutative_tame(const GaloisExtension& ext, long p, const std::vector<int>& ks,
                                                          const SearchOptions& opts = {});

struct DescentReport {
    ElementSet subfield_group;    // G_L
    ElementSet complement;        // C
    bool unramified = false;      // E/L at p
    bool base_field = false;      // L = K; the unramified hypothesis is then vacuous
    std::string induced_type;
    FreenessResult upstairs;      // B' over A_H(B')
    bool identity_holds = false;  // (z theta_T).x = pi(z).Tr(x)
    bool projection_fixed = false;    // pi(H) in H_S
    bool descended_equals_intersection = false;    // pi(A).Tr(x) = B' cap L
    bool projected_order_is_associated = false;    // pi(A) = A_{H_S}(B)
    std::optional<Vector> generator;    // Tr_{E/L}(x), L-coordinates
    std::optional<Lattice> intersection;    // B' cap L, L-coordinates
    bool passed() const
    {
        return (unramified || base_field) && upstairs.status == Freeness::Free && identity_holds && projection_fixed &&
               descended_equals_intersection && projected_order_is_associated;
    }
};

/* Descent from E to L = E^{G_L} along the structure `structure` on the cosets
 * G/G_L, induced with rho(G_L) on E/L. B' is a lattice in E-coordinates.
 * Throws NotAlmostClassical, WildRamification. */
DescentReport non_normal_descent(const GaloisExtension& ext, const ElementSet& gl, const RegularSubgroup& structure,
                                 const Lattice& b_prime, const SearchOptions& opts = {});

struct LocalCheckEntry {
    long p = 0;
    int structure_index = 0;
    std::string structure_type;
    bool unramified = false;
    FreenessResult result;
    bool passed() const { return result.status == Freeness::Free; }
};

/* B given by a Z-basis (rows, E-coordinates). Checks B_p free over Lambda_p^G for
 * every commutative normalized N and listed p. Throws NotAbelian, NotAmbiguous, WildPrime. */
std::vector<LocalCheckEntry> local_check_global(const GaloisExtension& ext, const Matrix& b_basis, const std::vector<long>& primes,
                                                const SearchOptions& opts = {});

} // namespace hgmod
