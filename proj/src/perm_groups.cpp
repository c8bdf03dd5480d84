#include "hgmod/perm_groups.hpp"

#include "hgmod/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hgmod {

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names)
    : order_(order), mul_(std::move(table)), names_(std::move(names))
{
    if (order_ <= 0) throw Error(ErrorKind::InvalidGroup, "order must be positive");
    const auto n = static_cast<std::size_t>(order_);
    if (mul_.size() != n * n) throw Error(ErrorKind::InvalidGroup, "multiplication table must have order^2 entries");
    for (int x : mul_)
        if (x < 0 || x >= order_) throw Error(ErrorKind::InvalidGroup, "table entry out of range");
    if (names_.empty())
        for (int i = 0; i < order_; ++i) names_.push_back("g" + std::to_string(i));
    if (names_.size() != n) throw Error(ErrorKind::InvalidGroup, "names must have one entry per element");

    for (int a = 0; a < order_; ++a)
        if (mul(0, a) != a || mul(a, 0) != a) throw Error(ErrorKind::InvalidGroup, "element 0 is not the identity");
    inv_.assign(n, -1);
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) inv_[static_cast<std::size_t>(a)] = b;
    for (int a = 0; a < order_; ++a) {
        if (inv_[static_cast<std::size_t>(a)] < 0) throw Error(ErrorKind::InvalidGroup, "element without inverse");
        std::vector<bool> seen(n, false);
        for (int b = 0; b < order_; ++b) seen[static_cast<std::size_t>(mul(a, b))] = true;
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw Error(ErrorKind::InvalidGroup, "row is not a permutation");
    }
    if (order_ <= 12) {
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                for (int c = 0; c < order_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw Error(ErrorKind::InvalidGroup, "multiplication is not associative");
    }
}

int FiniteGroup::power(int g, long k) const
{
    if (k < 0) return power(inv(g), -k);
    int r = identity;
    for (long i = 0; i < k; ++i) r = mul(r, g);
    return r;
}

int FiniteGroup::element_order(int g) const
{
    int k = 1;
    for (int x = g; x != identity; x = mul(x, g)) ++k;
    return k;
}

bool FiniteGroup::is_abelian() const
{
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::optional<int> FiniteGroup::find(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<int>(it - names_.begin());
}

FiniteGroup cyclic_group(int n)
{
    std::vector<int> mul(static_cast<std::size_t>(n * n));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back(a == 0 ? "e" : (a == 1 ? "x" : "x^" + std::to_string(a)));
        for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
    }
    return FiniteGroup(n, std::move(mul), std::move(names));
}

FiniteGroup dihedral_group(int m)
{
    const int n = 2 * m;
    std::vector<int> mul(static_cast<std::size_t>(n * n));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        int i = a % m, j = a / m;
        std::string r = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
        std::string s = j == 0 ? "" : "s";
        names.push_back(r.empty() && s.empty() ? "e" : r + s);
        for (int b = 0; b < n; ++b) {
            int k = b % m, l = b / m;
            int ri = ((i + (j == 0 ? k : -k)) % m + m) % m;
            mul[static_cast<std::size_t>(a * n + b)] = ri + m * ((j + l) % 2);
        }
    }
    return FiniteGroup(n, std::move(mul), std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h)
{
    const int ng = g.order(), nh = h.order(), n = ng * nh;
    std::vector<int> mul(static_cast<std::size_t>(n * n));
    std::vector<std::string> names;
    for (int x = 0; x < n; ++x) {
        names.push_back("(" + g.name(x % ng) + "," + h.name(x / ng) + ")");
        for (int y = 0; y < n; ++y)
            mul[static_cast<std::size_t>(x * n + y)] = g.mul(x % ng, y % ng) + ng * h.mul(x / ng, y / ng);
    }
    return FiniteGroup(n, std::move(mul), std::move(names));
}

ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& generators)
{
    std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
    ElementSet elems{FiniteGroup::identity};
    in[0] = true;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (int s : generators) {
            int y = g.mul(elems[i], s);
            if (!in[static_cast<std::size_t>(y)]) {
                in[static_cast<std::size_t>(y)] = true;
                elems.push_back(y);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& h)
{
    if (h.empty() || !std::binary_search(h.begin(), h.end(), FiniteGroup::identity)) return false;
    for (int a : h)
        for (int b : h)
            if (!std::binary_search(h.begin(), h.end(), g.mul(a, g.inv(b)))) return false;
    return true;
}

bool is_normal(const FiniteGroup& g, const ElementSet& h)
{
    if (!is_subgroup(g, h)) return false;
    for (int x = 0; x < g.order(); ++x)
        for (int a : h)
            if (!std::binary_search(h.begin(), h.end(), g.mul(g.mul(x, a), g.inv(x)))) return false;
    return true;
}

std::vector<ElementSet> all_subgroups(const FiniteGroup& g)
{
    std::set<ElementSet> found;
    std::vector<ElementSet> cyclic;
    for (int x = 0; x < g.order(); ++x) cyclic.push_back(subgroup_closure(g, {x}));
    std::vector<ElementSet> frontier;
    for (auto& c : cyclic)
        if (found.insert(c).second) frontier.push_back(c);
    while (!frontier.empty()) {
        std::vector<ElementSet> next;
        for (const auto& h : frontier)
            for (int x = 0; x < g.order(); ++x) {
                if (std::binary_search(h.begin(), h.end(), x)) continue;
                ElementSet gens = h;
                gens.push_back(x);
                auto j = subgroup_closure(g, gens);
                if (found.insert(j).second) next.push_back(std::move(j));
            }
        frontier = std::move(next);
    }
    std::vector<ElementSet> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<int> generating_set(const FiniteGroup& g)
{
    std::vector<int> gens;
    ElementSet span{FiniteGroup::identity};
    for (int x = 0; x < g.order(); ++x) {
        if (std::binary_search(span.begin(), span.end(), x)) continue;
        gens.push_back(x);
        span = subgroup_closure(g, gens);
    }
    return gens;
}

ElementSet sylow_subgroup(const FiniteGroup& g, long p)
{
    int target = 1;
    for (int n = g.order(); n % p == 0; n /= static_cast<int>(p)) target *= static_cast<int>(p);
    for (const auto& h : all_subgroups(g))
        if (static_cast<int>(h.size()) == target) return h;
    throw Error(ErrorKind::InvalidSubgroup, "no Sylow subgroup found");
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
            throw Error(ErrorKind::InvalidPermutation, "images do not form a bijection");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const
{
    std::vector<int> v(images_.size());
    for (int i = 0; i < degree(); ++i) v[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const
{
    for (int i = 0; i < degree(); ++i)
        if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

int Permutation::order() const
{
    int k = 1;
    Permutation p = *this;
    while (!p.is_identity()) {
        p = p * *this;
        ++k;
    }
    return k;
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.degree() != b.degree()) throw Error(ErrorKind::InvalidPermutation, "degree mismatch");
    std::vector<int> v(a.images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a(b(static_cast<int>(i)));
    return Permutation(std::move(v));
}

Permutation lambda(const FiniteGroup& g, int x)
{
    std::vector<int> v(static_cast<std::size_t>(g.order()));
    for (int h = 0; h < g.order(); ++h) v[static_cast<std::size_t>(h)] = g.mul(x, h);
    return Permutation(std::move(v));
}

Permutation rho(const FiniteGroup& g, int x)
{
    std::vector<int> v(static_cast<std::size_t>(g.order()));
    for (int h = 0; h < g.order(); ++h) v[static_cast<std::size_t>(h)] = g.mul(h, g.inv(x));
    return Permutation(std::move(v));
}

Permutation conjugate_by_lambda(const FiniteGroup& group, int g, const Permutation& eta)
{
    return lambda(group, g) * eta * lambda(group, group.inv(g));
}

// ---------------------------------------------------------------- RegularSubgroup

RegularSubgroup::RegularSubgroup(std::vector<Permutation> elements)
{
    if (elements.empty()) throw Error(ErrorKind::InvalidSubgroup, "empty subgroup");
    const int n = elements.front().degree();
    if (static_cast<int>(elements.size()) != n)
        throw Error(ErrorKind::InvalidSubgroup, "regular subgroup must have as many elements as points");
    std::vector<std::optional<Permutation>> slots(static_cast<std::size_t>(n));
    for (auto& e : elements) {
        if (e.degree() != n) throw Error(ErrorKind::InvalidSubgroup, "degree mismatch");
        auto& slot = slots[static_cast<std::size_t>(e(0))];
        if (slot) throw Error(ErrorKind::InvalidSubgroup, "not regular: two elements agree on the base point");
        slot = e;
    }
    for (auto& s : slots) by_base_.push_back(*s);
    if (!by_base_[0].is_identity()) throw Error(ErrorKind::InvalidSubgroup, "missing identity");
    for (const auto& a : by_base_) {
        if (!contains(a.inverse())) throw Error(ErrorKind::InvalidSubgroup, "not closed under inverse");
        for (const auto& b : by_base_)
            if (!contains(a * b)) throw Error(ErrorKind::InvalidSubgroup, "not closed under composition");
    }
}

std::optional<int> RegularSubgroup::index_of(const Permutation& eta) const
{
    if (eta.degree() != degree()) return std::nullopt;
    int g = eta(0);
    if (by_base_[static_cast<std::size_t>(g)] == eta) return g;
    return std::nullopt;
}

bool RegularSubgroup::is_abelian() const
{
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (compose(a, b) != compose(b, a)) return false;
    return true;
}

bool RegularSubgroup::normalized_by(const std::vector<Permutation>& perms) const
{
    for (const auto& l : perms) {
        Permutation linv = l.inverse();
        for (const auto& eta : by_base_)
            if (!contains(l * eta * linv)) return false;
    }
    return true;
}

namespace {

std::vector<long> prime_factors(long n)
{
    std::vector<long> ps;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

std::string abelian_type(const std::vector<int>& orders)
{
    const long n = static_cast<long>(orders.size());
    std::vector<std::vector<long>> parts_by_prime;
    for (long p : prime_factors(n)) {
        // d_k = number of cyclic factors of order >= p^k
        std::vector<long> parts;
        long prev = 0;
        for (int k = 1;; ++k) {
            long pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            long count = std::count_if(orders.begin(), orders.end(), [&](int o) { return pk % o == 0; });
            long s = 0;
            for (long c = count; c > 1; c /= p) ++s;
            long d = s - prev;
            if (d <= 0) break;
            if (static_cast<long>(parts.size()) < d) parts.resize(static_cast<std::size_t>(d), 0);
            for (long i = 0; i < d; ++i) parts[static_cast<std::size_t>(i)] = k;
            prev = s;
        }
        std::vector<long> powers;
        for (long e : parts) {
            long q = 1;
            for (long i = 0; i < e; ++i) q *= p;
            powers.push_back(q);
        }
        parts_by_prime.push_back(powers);
    }
    std::vector<long> factors;
    for (std::size_t j = 0;; ++j) {
        long f = 1;
        bool any = false;
        for (const auto& pw : parts_by_prime)
            if (j < pw.size()) {
                f *= pw[j];
                any = true;
            }
        if (!any) break;
        factors.push_back(f);
    }
    if (factors.empty()) return "C1";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "xC" : "C") + std::to_string(factors[i]);
    return s;
}

} // namespace

std::string RegularSubgroup::type_name() const
{
    std::vector<int> orders;
    for (int a = 0; a < size(); ++a) orders.push_back(element_order(a));
    if (is_abelian()) return abelian_type(orders);
    const long involutions = std::count(orders.begin(), orders.end(), 2);
    const int maxo = *std::max_element(orders.begin(), orders.end());
    switch (size()) {
    case 6: return "D3";
    case 8: return involutions == 1 ? "Q8" : "D4";
    case 10: return "D5";
    case 12:
        if (maxo == 3) return "A4";
        return involutions == 1 ? "Dic3" : "D6";
    default: return "nonabelian of order " + std::to_string(size());
    }
}

std::vector<Permutation> lambda_images(const FiniteGroup& g)
{
    std::vector<Permutation> out;
    for (int x : generating_set(g)) out.push_back(lambda(g, x));
    return out;
}

RegularSubgroup left_regular(const FiniteGroup& g)
{
    std::vector<Permutation> v;
    for (int x = 0; x < g.order(); ++x) v.push_back(lambda(g, x));
    return RegularSubgroup(std::move(v));
}

RegularSubgroup right_regular(const FiniteGroup& g)
{
    std::vector<Permutation> v;
    for (int x = 0; x < g.order(); ++x) v.push_back(rho(g, x));
    return RegularSubgroup(std::move(v));
}

// ---------------------------------------------------------------- enumeration

namespace {

bool all_cycles_equal_nontrivial(const Permutation& p)
{
    const int n = p.degree();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int len = -1;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int l = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
            seen[static_cast<std::size_t>(j)] = true;
            ++l;
        }
        if (l == 1 || (len >= 0 && l != len)) return false;
        len = l;
    }
    return true;
}

/* Semiregular permutations sending 0 to g. */
std::vector<Permutation> base_candidates(int n, int g)
{
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (i != g) rest.push_back(i);
    std::vector<Permutation> out;
    do {
        std::vector<int> images{g};
        images.insert(images.end(), rest.begin(), rest.end());
        Permutation p(std::move(images));
        if (all_cycles_equal_nontrivial(p)) out.push_back(std::move(p));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

using Slots = std::vector<std::optional<Permutation>>;

/* Closure of the generators, placed by base image; false on a clash or overflow. */
bool close_slots(int n, const std::vector<Permutation>& gens, Slots& slots, int& filled)
{
    slots.assign(static_cast<std::size_t>(n), std::nullopt);
    slots[0] = Permutation::identity(n);
    filled = 1;
    std::vector<Permutation> elems{*slots[0]};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& s : gens) {
            Permutation y = elems[i] * s;
            auto& slot = slots[static_cast<std::size_t>(y(0))];
            if (slot) {
                if (!(*slot == y)) return false;
                continue;
            }
            slot = y;
            elems.push_back(y);
            ++filled;
        }
    return true;
}

void regular_dfs(int n, const std::vector<std::vector<Permutation>>& candidates, std::vector<Permutation>& gens,
                 const Slots& slots, std::vector<RegularSubgroup>& out)
{
    int free_slot = -1;
    for (int g = 1; g < n; ++g)
        if (!slots[static_cast<std::size_t>(g)]) {
            free_slot = g;
            break;
        }
    if (free_slot < 0) {
        std::vector<Permutation> elems;
        for (const auto& s : slots) elems.push_back(*s);
        out.emplace_back(std::move(elems));
        return;
    }
    for (const auto& cand : candidates[static_cast<std::size_t>(free_slot)]) {
        gens.push_back(cand);
        Slots next;
        int filled = 0;
        if (close_slots(n, gens, next, filled)) regular_dfs(n, candidates, gens, next, out);
        gens.pop_back();
    }
}

} // namespace

std::vector<RegularSubgroup> regular_subgroups_of_degree(int n, int bound)
{
    if (n > bound)
        throw Error(ErrorKind::BoundExceeded,
                    "degree " + std::to_string(n) + " exceeds enumeration bound " + std::to_string(bound));
    if (n < 1) throw Error(ErrorKind::InvalidGroup, "degree must be positive");
    std::vector<std::vector<Permutation>> candidates(static_cast<std::size_t>(n));
    for (int g = 1; g < n; ++g) candidates[static_cast<std::size_t>(g)] = base_candidates(n, g);
    std::vector<RegularSubgroup> out;
    std::vector<Permutation> gens;
    Slots start;
    int filled = 0;
    close_slots(n, gens, start, filled);
    regular_dfs(n, candidates, gens, start, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<RegularSubgroup> enumerate_regular_subgroups(const FiniteGroup& g, const EnumerationOptions& opts)
{
    auto all = regular_subgroups_of_degree(g.order(), opts.bound);
    auto lam = lambda_images(g);
    std::vector<RegularSubgroup> out;
    for (auto& n : all) {
        if (opts.abelian_only && !n.is_abelian()) continue;
        if (opts.normalized_by_lambda && !n.normalized_by(lam)) continue;
        out.push_back(std::move(n));
    }
    auto classical = std::find(out.begin(), out.end(), right_regular(g));
    if (classical != out.end()) std::rotate(out.begin(), classical, classical + 1);
    return out;
}

// ---------------------------------------------------------------- splits and complements

SylowSplit sylow_split(const RegularSubgroup& n, long p)
{
    if (!n.is_abelian()) throw Error(ErrorKind::NotAbelian, "sylow_split needs an abelian group");
    SylowSplit out;
    for (int a = 0; a < n.size(); ++a) {
        int o = n.element_order(a);
        int q = o;
        while (q % p == 0) q /= static_cast<int>(p);
        if (q == 1) out.p_part.push_back(a);
        if (o % p != 0) out.prime_to_p.push_back(a);
    }
    std::set<int> products;
    for (int s : out.prime_to_p)
        for (int t : out.p_part) products.insert(n.compose(s, t));
    if (static_cast<int>(products.size()) != n.size() ||
        out.prime_to_p.size() * out.p_part.size() != static_cast<std::size_t>(n.size()))
        throw Error(ErrorKind::NotDirectProduct, "S x T does not factor N");
    return out;
}

bool is_lambda_stable(const FiniteGroup& g, const RegularSubgroup& n, const ElementSet& subset)
{
    for (int x : generating_set(g))
        for (int a : subset) {
            auto idx = n.index_of(conjugate_by_lambda(g, x, n.element(a)));
            if (!idx || !std::binary_search(subset.begin(), subset.end(), *idx)) return false;
        }
    return true;
}

bool acts_trivially(const FiniteGroup& g, const ElementSet& acting, const RegularSubgroup& n, const ElementSet& subset)
{
    for (int x : acting)
        for (int a : subset)
            if (!(conjugate_by_lambda(g, x, n.element(a)) == n.element(a))) return false;
    return true;
}

std::optional<ElementSet> normal_complement(const FiniteGroup& g, const ElementSet& gf)
{
    if (!is_subgroup(g, gf)) throw Error(ErrorKind::InvalidSubgroup, "G_F is not a subgroup");
    const std::size_t want = static_cast<std::size_t>(g.order()) / gf.size();
    for (const auto& c : all_subgroups(g)) {
        if (c.size() != want || !is_normal(g, c)) continue;
        ElementSet meet;
        std::set_intersection(c.begin(), c.end(), gf.begin(), gf.end(), std::back_inserter(meet));
        if (meet.size() == 1) return c;
    }
    return std::nullopt;
}

ElementSet inertia_complement(const FiniteGroup& g, const ElementSet& g0, long p)
{
    if (!is_normal(g, g0)) throw Error(ErrorKind::InvalidSubgroup, "G_0 must be a normal subgroup");
    const int e = static_cast<int>(g0.size());
    if (e % p == 0) throw Error(ErrorKind::NotTame, "p divides |G_0|");
    const int f = g.order() / e;
    auto in_g0 = [&](int x) { return std::binary_search(g0.begin(), g0.end(), x); };
    int max_coset_order = 1;
    for (int x = 0; x < g.order(); ++x) {
        int k = 1;
        for (int y = x; !in_g0(y); y = g.mul(y, x)) ++k;
        max_coset_order = std::max(max_coset_order, k);
    }
    if (max_coset_order != f) throw Error(ErrorKind::QuotientNotCyclic, "G/G_0 is not cyclic");
    int f0 = f;
    while (f0 % p == 0) f0 /= static_cast<int>(p);
    ElementSet c;
    for (int x = 0; x < g.order(); ++x)
        if (in_g0(g.power(x, f0))) c.push_back(x);

    auto check = normal_complement(g, sylow_subgroup(g, p));
    if (!check || *check != c)
        throw Error(ErrorKind::InvalidSubgroup, "kernel construction disagrees with the Sylow complement search");
    return c;
}

CosetLabeling make_labeling(const FiniteGroup& g, const ElementSet& complement, const ElementSet& gf)
{
    CosetLabeling lab{complement, gf};
    std::set<int> seen;
    for (int x : complement)
        for (int y : gf) seen.insert(g.mul(x, y));
    if (static_cast<int>(seen.size()) != g.order() || complement.front() != 0 || gf.front() != 0)
        throw Error(ErrorKind::InvalidSubgroup, "complement and factor do not label G");
    return lab;
}

InducedSubgroup induce_regular_subgroup(const FiniteGroup& g, const RegularSubgroup& s, const RegularSubgroup& t,
                                        const CosetLabeling& labeling)
{
    const int ns = s.degree(), nt = t.degree();
    if (static_cast<int>(labeling.transversal.size()) != ns || static_cast<int>(labeling.factor.size()) != nt ||
        ns * nt != g.order())
        throw Error(ErrorKind::DimensionMismatch, "labeling sizes do not match S and T");
    std::vector<int> label(static_cast<std::size_t>(ns * nt));
    std::vector<int> where(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nt; ++j) {
            int x = g.mul(labeling.transversal[static_cast<std::size_t>(i)], labeling.factor[static_cast<std::size_t>(j)]);
            if (where[static_cast<std::size_t>(x)] >= 0) throw Error(ErrorKind::InvalidSubgroup, "labeling not bijective");
            where[static_cast<std::size_t>(x)] = i * nt + j;
            label[static_cast<std::size_t>(i * nt + j)] = x;
        }
    auto iota = [&](const Permutation& sigma, const Permutation& tau) {
        std::vector<int> images(static_cast<std::size_t>(g.order()));
        for (int x = 0; x < g.order(); ++x) {
            int w = where[static_cast<std::size_t>(x)];
            int i = w / nt, j = w % nt;
            images[static_cast<std::size_t>(x)] = label[static_cast<std::size_t>(sigma(i) * nt + tau(j))];
        }
        return Permutation(std::move(images));
    };
    std::vector<Permutation> elems;
    for (const auto& sigma : s.elements())
        for (const auto& tau : t.elements()) elems.push_back(iota(sigma, tau));
    RegularSubgroup n(std::move(elems));
    if (!n.normalized_by(lambda_images(g)))
        throw Error(ErrorKind::NotNormalized, "induced subgroup is not normalized by lambda(G)");
    InducedSubgroup out{n, {}, {}};
    const Permutation id_t = Permutation::identity(nt), id_s = Permutation::identity(ns);
    for (const auto& sigma : s.elements()) out.first_factor.push_back(*n.index_of(iota(sigma, id_t)));
    for (const auto& tau : t.elements()) out.second_factor.push_back(*n.index_of(iota(id_s, tau)));
    std::sort(out.first_factor.begin(), out.first_factor.end());
    std::sort(out.second_factor.begin(), out.second_factor.end());
    return out;
}

CosetSpace left_cosets(const FiniteGroup& g, const ElementSet& h)
{
    if (!is_subgroup(g, h)) throw Error(ErrorKind::InvalidSubgroup, "left_cosets needs a subgroup");
    CosetSpace x{h, {}, std::vector<int>(static_cast<std::size_t>(g.order()), -1)};
    for (int a = 0; a < g.order(); ++a) {
        if (x.coset_of[static_cast<std::size_t>(a)] >= 0) continue;
        int idx = x.size();
        x.representatives.push_back(a);
        for (int b : h) x.coset_of[static_cast<std::size_t>(g.mul(a, b))] = idx;
    }
    return x;
}

Permutation lambda_on_cosets(const FiniteGroup& g, const CosetSpace& x, int elem)
{
    std::vector<int> images;
    for (int rep : x.representatives) images.push_back(x.coset_of[static_cast<std::size_t>(g.mul(elem, rep))]);
    return Permutation(std::move(images));
}

std::vector<RegularSubgroup> enumerate_regular_subgroups_on_cosets(const FiniteGroup& g, const CosetSpace& x,
                                                                   const EnumerationOptions& opts)
{
    auto all = regular_subgroups_of_degree(x.size(), opts.bound);
    std::vector<Permutation> lam;
    for (int s : generating_set(g)) lam.push_back(lambda_on_cosets(g, x, s));
    std::vector<RegularSubgroup> out;
    for (auto& n : all) {
        if (opts.abelian_only && !n.is_abelian()) continue;
        if (opts.normalized_by_lambda && !n.normalized_by(lam)) continue;
        out.push_back(std::move(n));
    }
    return out;
}

} // namespace hgmod
