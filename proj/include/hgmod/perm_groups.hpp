#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hgmod {

/* Sorted list of element indices of a finite group (or of a RegularSubgroup). */
using ElementSet = std::vector<int>;

/* A finite group given by its multiplication table. Element 0 is the identity. */
class FiniteGroup {
public:
    FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names = {});

    static constexpr int identity = 0;

    int order() const { return order_; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * order_ + b)]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int power(int g, long k) const;
    int element_order(int g) const;
    bool is_abelian() const;

    const std::vector<int>& table() const { return mul_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int g) const { return names_[static_cast<std::size_t>(g)]; }
    std::optional<int> find(const std::string& name) const;

private:
    int order_;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<std::string> names_;
};

FiniteGroup cyclic_group(int n);
/* Dihedral group of order 2m; index i + m*j is r^i s^j, with s r s = r^-1. */
FiniteGroup dihedral_group(int m);
/* Index a + |G| * b is the pair (a, b). */
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& generators);
bool is_subgroup(const FiniteGroup& g, const ElementSet& h);
bool is_normal(const FiniteGroup& g, const ElementSet& h);
/* All subgroups, ordered by size and then lexicographically. */
std::vector<ElementSet> all_subgroups(const FiniteGroup& g);
/* Greedy small generating set: each element is outside the span of the previous ones. */
std::vector<int> generating_set(const FiniteGroup& g);
ElementSet sylow_subgroup(const FiniteGroup& g, long p);

class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }
    Permutation inverse() const;
    bool is_identity() const;
    int order() const;

    /* (a * b)(x) = a(b(x)) */
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

private:
    std::vector<int> images_;
};

Permutation lambda(const FiniteGroup& g, int x);   // h -> x h
Permutation rho(const FiniteGroup& g, int x);      // h -> h x^-1
/* lambda(g) eta lambda(g)^-1 */
Permutation conjugate_by_lambda(const FiniteGroup& group, int g, const Permutation& eta);

/* Regular subgroup N of Perm(n), indexed by image of the base point:
 * element(g) is the unique eta in N with eta(0) == g. */
class RegularSubgroup {
public:
    explicit RegularSubgroup(std::vector<Permutation> elements);

    int degree() const { return static_cast<int>(by_base_.size()); }
    int size() const { return degree(); }
    const Permutation& element(int g) const { return by_base_[static_cast<std::size_t>(g)]; }
    const std::vector<Permutation>& elements() const { return by_base_; }

    int compose(int a, int b) const { return element(a)(b); }
    int inverse(int a) const { return element(a).inverse()(0); }
    int element_order(int a) const { return element(a).order(); }
    std::optional<int> index_of(const Permutation& eta) const;
    bool contains(const Permutation& eta) const { return index_of(eta).has_value(); }
    bool is_abelian() const;
    bool normalized_by(const std::vector<Permutation>& perms) const;
    /* Isomorphism type from order profile and abelianness, e.g. "C6", "C2xC2", "D3". */
    std::string type_name() const;

    friend bool operator==(const RegularSubgroup& a, const RegularSubgroup& b) { return a.by_base_ == b.by_base_; }
    friend auto operator<=>(const RegularSubgroup& a, const RegularSubgroup& b) { return a.by_base_ <=> b.by_base_; }

private:
    std::vector<Permutation> by_base_;
};

RegularSubgroup left_regular(const FiniteGroup& g);
RegularSubgroup right_regular(const FiniteGroup& g);
std::vector<Permutation> lambda_images(const FiniteGroup& g);

struct EnumerationOptions {
    bool normalized_by_lambda = false;
    bool abelian_only = false;
    int bound = 8;
};

/* All regular subgroups of Perm(n) in lexicographic order of their
 * base-image tables. Throws BoundExceeded for n > bound. */
std::vector<RegularSubgroup> regular_subgroups_of_degree(int n, int bound = 8);
/* Regular subgroups of Perm(G) passing the filters: rho(G) first when it
 * passes, the rest in lexicographic order. */
std::vector<RegularSubgroup> enumerate_regular_subgroups(const FiniteGroup& g, const EnumerationOptions& opts = {});

/* Subgroups of an abelian regular N (as index sets into N). */
struct SylowSplit {
    ElementSet prime_to_p;   // S
    ElementSet p_part;       // T
};
SylowSplit sylow_split(const RegularSubgroup& n, long p);
/* Whether a subset of N is stable under conjugation by every lambda(g). */
bool is_lambda_stable(const FiniteGroup& g, const RegularSubgroup& n, const ElementSet& subset);
/* Whether conjugation by lambda(g) fixes every element of the subset, for all g in acting. */
bool acts_trivially(const FiniteGroup& g, const ElementSet& acting, const RegularSubgroup& n, const ElementSet& subset);

std::optional<ElementSet> normal_complement(const FiniteGroup& g, const ElementSet& gf);
/* Kernel of g -> g^{f0} G0 where |G/G0| = p^r f0; cross-checked against the
 * normal complement of a Sylow p-subgroup. */
ElementSet inertia_complement(const FiniteGroup& g, const ElementSet& g0, long p);

/* G enumerated as x_i y_j with x_i in a complement C and y_j in G_F; x_0 = y_0 = identity. */
struct CosetLabeling {
    std::vector<int> transversal;
    std::vector<int> factor;
};
CosetLabeling make_labeling(const FiniteGroup& g, const ElementSet& complement, const ElementSet& gf);

struct InducedSubgroup {
    RegularSubgroup group;
    ElementSet first_factor;    // iota(S x 1)
    ElementSet second_factor;   // iota(1 x T)
};
/* N = iota(S x T) acting by (sigma, tau)[x_i y_j] = x_sigma(i) y_tau(j).
 * Throws NotNormalized if the product is not normalized by lambda(G). */
InducedSubgroup induce_regular_subgroup(const FiniteGroup& g, const RegularSubgroup& s, const RegularSubgroup& t,
                                        const CosetLabeling& labeling);

/* Left cosets x H; coset 0 is H itself, representatives are minimal indices. */
struct CosetSpace {
    ElementSet subgroup;
    std::vector<int> representatives;
    std::vector<int> coset_of;
    int size() const { return static_cast<int>(representatives.size()); }
};
CosetSpace left_cosets(const FiniteGroup& g, const ElementSet& h);
Permutation lambda_on_cosets(const FiniteGroup& g, const CosetSpace& x, int elem);
std::vector<RegularSubgroup> enumerate_regular_subgroups_on_cosets(const FiniteGroup& g, const CosetSpace& x,
                                                                   const EnumerationOptions& opts = {});

} // namespace hgmod
