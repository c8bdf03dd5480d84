#include "hgmod/hopf.hpp"

#include "hgmod/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hgmod {

namespace {

ReducedEchelon row_space(const Matrix& rows)
{
    ReducedEchelon r = rref(rows);
    Matrix trimmed(0, rows.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) trimmed.append_row(r.reduced.row(i));
    r.reduced = trimmed;
    return r;
}

Vector pivot_values(const Vector& v, const std::vector<std::size_t>& pivots)
{
    Vector c;
    for (auto p : pivots) c.push_back(v[p]);
    return c;
}

} // namespace

// ---- GroupAlgebra ----

GroupAlgebra::GroupAlgebra(const GaloisExtension& ext, CosetSpace cosets, RegularSubgroup n)
    : ext_(&ext), cosets_(std::move(cosets)), n_(std::move(n))
{
    const FiniteGroup& g = ext.group();
    if (n_.degree() != cosets_.size()) throw Error(ErrorKind::DimensionMismatch, "N must act on the cosets G/G_L");
    if (static_cast<int>(cosets_.coset_of.size()) != g.order()) throw Error(ErrorKind::DimensionMismatch, "coset space of another group");

    ReducedEchelon l = row_space(fixed_subspace(ext, cosets_.subgroup));
    l_basis_ = l.reduced;
    l_pivots_ = l.pivots;

    for (int x = 0; x < g.order(); ++x) {
        Permutation lx = lambda_on_cosets(g, cosets_, x);
        Permutation lx_inv = lx.inverse();
        std::vector<int> row;
        for (int k = 0; k < n_.size(); ++k) {
            auto idx = n_.index_of(lx * n_.element(k) * lx_inv);
            if (!idx) throw Error(ErrorKind::NotNormalized, "N is not normalized by lambda(G)");
            row.push_back(*idx);
        }
        conj_.push_back(std::move(row));
    }
    for (int k = 0; k < n_.size(); ++k) rep_.push_back(cosets_.representatives[static_cast<std::size_t>(n_.element(k).inverse()(0))]);

    // every representative of a coset must act the same way on L
    for (int x = 0; x < g.order(); ++x) {
        int rep = cosets_.representatives[static_cast<std::size_t>(cosets_.coset_of[static_cast<std::size_t>(x)])];
        for (std::size_t a = 0; a < l_basis_.rows(); ++a) {
            AlgebraElement y(l_basis_.row(a));
            if (ext.apply(x, y) != ext.apply(rep, y))
                throw Error(ErrorKind::InvalidAlgebra, "coset representatives act differently on L");
        }
    }
}

GroupAlgebra GroupAlgebra::galois(const GaloisExtension& ext, RegularSubgroup n)
{
    return GroupAlgebra(ext, left_cosets(ext.group(), {0}), std::move(n));
}

Vector GroupAlgebra::subfield_coordinates(const AlgebraElement& x) const
{
    Vector c = pivot_values(x.coords(), l_pivots_);
    if (from_subfield(c) != x) throw Error(ErrorKind::NotFixed, "element is not in the subfield L");
    return c;
}

AlgebraElement GroupAlgebra::from_subfield(const Vector& coords) const
{
    return AlgebraElement(l_basis_.apply_left(coords));
}

AlgebraElement GroupAlgebra::coefficient(const GroupAlgebraElement& z, int k) const
{
    const std::size_t d = field_dim();
    auto first = z.coords().begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(k) * d);
    return AlgebraElement(Vector(first, first + static_cast<std::ptrdiff_t>(d)));
}

GroupAlgebraElement GroupAlgebra::monomial(int k, const AlgebraElement& c) const
{
    Vector v = zero_vector(dim());
    const std::size_t d = field_dim();
    for (std::size_t i = 0; i < d; ++i) v[static_cast<std::size_t>(k) * d + i] = c[i];
    return GroupAlgebraElement(std::move(v));
}

GroupAlgebraElement GroupAlgebra::basis_element(int k) const
{
    return monomial(k, ext_->algebra().one());
}

GroupAlgebraElement GroupAlgebra::theta(const ElementSet& subset) const
{
    GroupAlgebraElement sum = zero();
    for (int k : subset) sum = sum + basis_element(k);
    return sum;
}

GroupAlgebraElement GroupAlgebra::mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) const
{
    const EtaleAlgebra& alg = ext_->algebra();
    std::vector<AlgebraElement> out(static_cast<std::size_t>(n_.size()), alg.zero());
    for (int k = 0; k < n_.size(); ++k) {
        AlgebraElement ak = coefficient(a, k);
        if (ak.is_zero()) continue;
        for (int l = 0; l < n_.size(); ++l) {
            AlgebraElement bl = coefficient(b, l);
            if (bl.is_zero()) continue;
            out[static_cast<std::size_t>(n_.compose(k, l))] += alg.mul(ak, bl);
        }
    }
    Vector v;
    for (const auto& c : out) v.insert(v.end(), c.coords().begin(), c.coords().end());
    return GroupAlgebraElement(std::move(v));
}

GroupAlgebraElement GroupAlgebra::act_g(int g, const GroupAlgebraElement& z) const
{
    GroupAlgebraElement out = zero();
    for (int k = 0; k < n_.size(); ++k) {
        AlgebraElement c = coefficient(z, k);
        if (!c.is_zero()) out = out + monomial(conjugate_index(g, k), ext_->apply(g, c));
    }
    return out;
}

AlgebraElement GroupAlgebra::counit(const GroupAlgebraElement& z) const
{
    AlgebraElement sum = ext_->algebra().zero();
    for (int k = 0; k < n_.size(); ++k) sum += coefficient(z, k);
    return sum;
}

Matrix GroupAlgebra::g_action_matrix(int g) const
{
    const std::size_t d = field_dim();
    Matrix m(dim(), dim());
    const Matrix& a = ext_->automorphism_matrix(g);
    for (int k = 0; k < n_.size(); ++k) {
        std::size_t target = static_cast<std::size_t>(conjugate_index(g, k)) * d, source = static_cast<std::size_t>(k) * d;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t i = 0; i < d; ++i) m(target + r, source + i) = a(r, i);
    }
    return m;
}

AlgebraElement GroupAlgebra::act(const GroupAlgebraElement& z, const AlgebraElement& x) const
{
    const EtaleAlgebra& alg = ext_->algebra();
    AlgebraElement sum = alg.zero();
    for (int k = 0; k < n_.size(); ++k) {
        AlgebraElement c = coefficient(z, k);
        if (!c.is_zero()) sum += alg.mul(c, ext_->apply(galois_representative(k), x));
    }
    return sum;
}

// ---- HopfAlgebra ----

namespace {

/* Fixed vectors of the G-action restricted to the blocks in `blocks`, embedded in E[N]. */
std::vector<GroupAlgebraElement> fixed_vectors(const GroupAlgebra& ea, const ElementSet& blocks)
{
    const std::size_t d = ea.field_dim();
    std::vector<std::size_t> cols;
    for (int k : blocks)
        for (std::size_t i = 0; i < d; ++i) cols.push_back(static_cast<std::size_t>(k) * d + i);
    Matrix stacked(0, cols.size());
    for (int g : generating_set(ea.extension().group())) {
        Matrix m = ea.g_action_matrix(g);
        for (std::size_t c = 0; c < cols.size(); ++c) m(cols[c], cols[c]) -= 1;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Vector row;
            for (auto c : cols) row.push_back(m(r, c));
            stacked.append_row(row);
        }
    }
    Matrix kernel = stacked.rows() ? nullspace(stacked) : Matrix::identity(cols.size());
    std::vector<GroupAlgebraElement> out;
    if (kernel.rows() == 0) return out;
    Matrix canonical = row_space(kernel).reduced;
    for (std::size_t i = 0; i < canonical.rows(); ++i) {
        Vector v = zero_vector(ea.dim());
        for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j]] = canonical(i, j);
        out.emplace_back(std::move(v));
    }
    return out;
}

} // namespace

HopfAlgebra::HopfAlgebra(GroupAlgebra algebra) : ea_(std::move(algebra))
{
    ElementSet all(static_cast<std::size_t>(ea_.subgroup().size()));
    std::iota(all.begin(), all.end(), 0);
    basis_ = fixed_vectors(ea_, all);
    if (basis_.size() != ea_.subfield_dim())
        throw Error(ErrorKind::DimensionMismatch, "fixed ring has dimension " + std::to_string(basis_.size()) +
                                                      ", expected " + std::to_string(ea_.subfield_dim()));
    // reduced echelon: the leading entry of each basis vector is its pivot
    for (const auto& b : basis_) {
        std::size_t p = 0;
        while (b.coords()[p] == 0) ++p;
        pivots_.push_back(p);
    }
    const EtaleAlgebra& alg = ea_.extension().algebra();
    for (const auto& b : basis_) {
        auto eps = alg.as_scalar(ea_.counit(b));
        if (!eps) throw Error(ErrorKind::InvalidAlgebra, "counit of a fixed element is not rational");
        counits_.push_back(*eps);
    }
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) {
            auto c = coordinates(ea_.mul(basis_[i], basis_[j]));
            if (!c) throw Error(ErrorKind::InvalidAlgebra, "fixed ring is not closed under multiplication");
            constants_.insert(constants_.end(), c->begin(), c->end());
        }
}

Matrix HopfAlgebra::basis_matrix() const
{
    Matrix m(0, ea_.dim());
    for (const auto& b : basis_) m.append_row(b.coords());
    return m;
}

GroupAlgebraElement HopfAlgebra::element(const Vector& coords) const
{
    if (coords.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "H-coordinates");
    GroupAlgebraElement z = ea_.zero();
    for (std::size_t i = 0; i < dim(); ++i)
        if (coords[i] != 0) z = z + coords[i] * basis_[i];
    return z;
}

std::optional<Vector> HopfAlgebra::coordinates(const GroupAlgebraElement& z) const
{
    Vector c = pivot_values(z.coords(), pivots_);
    if (element(c) != z) return std::nullopt;
    return c;
}

Vector HopfAlgebra::mul(const Vector& a, const Vector& b) const
{
    const std::size_t n = dim();
    Vector r = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            Rational ab = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k) r[k] += ab * constants_[(i * n + j) * n + k];
        }
    }
    return r;
}

Vector HopfAlgebra::one_coordinates() const
{
    auto c = coordinates(ea_.one());
    if (!c) throw Error(ErrorKind::InvalidAlgebra, "1 is not in the fixed ring");
    return *c;
}

Matrix HopfAlgebra::action_matrix(const Vector& h) const
{
    const std::size_t m = ea_.subfield_dim();
    GroupAlgebraElement z = element(h);
    Matrix a(m, m);
    for (std::size_t b = 0; b < m; ++b)
        a.set_col(b, ea_.subfield_coordinates(ea_.act(z, AlgebraElement(ea_.subfield_basis().row(b)))));
    return a;
}

AlgebraElement HopfAlgebra::act(const Vector& h, const AlgebraElement& x) const
{
    return ea_.act(element(h), x);
}

std::vector<GroupAlgebraElement> fixed_subring_basis(const GroupAlgebra& ea, const ElementSet& subset)
{
    for (int g = 0; g < ea.extension().group().order(); ++g)
        for (int k : subset)
            if (!std::binary_search(subset.begin(), subset.end(), ea.conjugate_index(g, k)))
                throw Error(ErrorKind::InvalidSubgroup, "subset of N is not G-stable");
    return fixed_vectors(ea, subset);
}

Matrix j_matrix(const HopfAlgebra& h)
{
    const GroupAlgebra& ea = h.group_algebra();
    const EtaleAlgebra& alg = ea.extension().algebra();
    const std::size_t m = ea.subfield_dim();
    Matrix j(m * m, m * h.dim());
    std::vector<Matrix> actions;
    for (std::size_t i = 0; i < h.dim(); ++i) actions.push_back(h.action_matrix(unit_vector(h.dim(), i)));
    for (std::size_t a = 0; a < m; ++a) {
        Matrix mult(m, m);
        AlgebraElement la(ea.subfield_basis().row(a));
        for (std::size_t b = 0; b < m; ++b)
            mult.set_col(b, ea.subfield_coordinates(alg.mul(la, AlgebraElement(ea.subfield_basis().row(b)))));
        for (std::size_t i = 0; i < h.dim(); ++i) {
            Matrix e = mult * actions[i];
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c) j(r * m + c, a * h.dim() + i) = e(r, c);
        }
    }
    return j;
}

bool is_hopf_galois(const HopfAlgebra& h)
{
    Matrix j = j_matrix(h);
    return j.rows() == j.cols() && rank(j) == j.rows();
}

bool module_algebra_check(const HopfAlgebra& h)
{
    const GroupAlgebra& ea = h.group_algebra();
    const GaloisExtension& ext = ea.extension();
    const EtaleAlgebra& alg = ext.algebra();
    const std::size_t m = ea.subfield_dim();
    for (std::size_t i = 0; i < h.dim(); ++i) {
        const GroupAlgebraElement& z = h.basis(i);
        if (ea.act(z, alg.one()) != h.counits()[i] * alg.one()) return false;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a; b < m; ++b) {
                AlgebraElement s(ea.subfield_basis().row(a)), t(ea.subfield_basis().row(b));
                AlgebraElement lhs = ea.act(z, alg.mul(s, t));
                // Delta(c eta) = c eta (x) eta
                AlgebraElement rhs = alg.zero();
                for (int k = 0; k < ea.subgroup().size(); ++k) {
                    AlgebraElement c = ea.coefficient(z, k);
                    if (c.is_zero()) continue;
                    GroupAlgebraElement eta = ea.basis_element(k);
                    rhs += alg.mul(c, alg.mul(ea.act(eta, s), ea.act(eta, t)));
                }
                if (lhs != rhs) return false;
            }
    }
    return true;
}

Matrix fixed_field(const GroupAlgebra& ea, const ElementSet& t)
{
    const EtaleAlgebra& alg = ea.extension().algebra();
    const std::size_t m = ea.subfield_dim();
    Matrix stacked(0, m);
    for (const auto& z : fixed_subring_basis(ea, t)) {
        auto eps = alg.as_scalar(ea.counit(z));
        if (!eps) throw Error(ErrorKind::InvalidAlgebra, "counit of a fixed element is not rational");
        for (std::size_t r = 0; r < m; ++r) {
            Vector row(m, Rational(0));
            for (std::size_t b = 0; b < m; ++b) {
                AlgebraElement y(ea.subfield_basis().row(b));
                row[b] = ea.subfield_coordinates(ea.act(z, y) - (*eps) * y)[r];
            }
            stacked.append_row(row);
        }
    }
    Matrix kernel = nullspace(stacked);
    Matrix out(0, ea.field_dim());
    for (std::size_t i = 0; i < kernel.rows(); ++i) out.append_row(ea.from_subfield(kernel.row(i)).coords());
    return out;
}

GroupAlgebraElement projection_pi(const GroupAlgebra& ea, const GroupAlgebraElement& z, const ElementSet& s,
                                  const ElementSet& t)
{
    const RegularSubgroup& n = ea.subgroup();
    if (s.size() * t.size() != static_cast<std::size_t>(n.size()))
        throw Error(ErrorKind::NotDirectProduct, "|S| |T| != |N|");
    std::vector<int> s_part(static_cast<std::size_t>(n.size()), -1);
    for (int a : s)
        for (int b : t) {
            int k = n.compose(a, b);
            if (s_part[static_cast<std::size_t>(k)] >= 0) throw Error(ErrorKind::NotDirectProduct, "factorization s t is not unique");
            s_part[static_cast<std::size_t>(k)] = a;
        }
    for (int a : s)
        for (int b : t)
            if (n.compose(a, b) != n.compose(b, a)) throw Error(ErrorKind::NotDirectProduct, "S and T do not commute");
    GroupAlgebraElement out = ea.zero();
    for (int k = 0; k < n.size(); ++k) {
        AlgebraElement c = ea.coefficient(z, k);
        if (!c.is_zero()) out = out + ea.monomial(s_part[static_cast<std::size_t>(k)], c);
    }
    return out;
}

// ---- Map(G, E) ----

MapModelElement map_one(const GaloisExtension& ext)
{
    return MapModelElement(std::vector<AlgebraElement>(static_cast<std::size_t>(ext.group().order()), ext.algebra().one()));
}

MapModelElement map_idempotent(const GaloisExtension& ext, int g)
{
    std::vector<AlgebraElement> v(static_cast<std::size_t>(ext.group().order()), ext.algebra().zero());
    v[static_cast<std::size_t>(g)] = ext.algebra().one();
    return MapModelElement(std::move(v));
}

MapModelElement map_mul(const GaloisExtension& ext, const MapModelElement& a, const MapModelElement& b)
{
    std::vector<AlgebraElement> v;
    for (int g = 0; g < ext.group().order(); ++g) v.push_back(ext.algebra().mul(a[g], b[g]));
    return MapModelElement(std::move(v));
}

MapModelElement map_act_g(const GaloisExtension& ext, int g, const MapModelElement& f)
{
    std::vector<AlgebraElement> v(f.values().size());
    for (int h = 0; h < ext.group().order(); ++h) v[static_cast<std::size_t>(ext.group().mul(g, h))] = ext.apply(g, f[h]);
    return MapModelElement(std::move(v));
}

MapModelElement map_act(const GroupAlgebra& ea, const GroupAlgebraElement& z, const MapModelElement& f)
{
    if (!ea.is_galois()) throw Error(ErrorKind::DimensionMismatch, "Map(G, E) model needs X = G");
    const EtaleAlgebra& alg = ea.extension().algebra();
    const RegularSubgroup& n = ea.subgroup();
    std::vector<AlgebraElement> v(f.values().size(), alg.zero());
    for (int k = 0; k < n.size(); ++k) {
        AlgebraElement c = ea.coefficient(z, k);
        if (c.is_zero()) continue;
        Permutation inv = n.element(k).inverse();
        for (int h = 0; h < n.degree(); ++h) v[static_cast<std::size_t>(h)] += alg.mul(c, f[inv(h)]);
    }
    return MapModelElement(std::move(v));
}

bool map_is_fixed(const GaloisExtension& ext, const MapModelElement& f)
{
    for (int g : generating_set(ext.group()))
        if (map_act_g(ext, g, f) != f) return false;
    return true;
}

MapModelElement gp_embed(const GaloisExtension& ext, const AlgebraElement& x)
{
    std::vector<AlgebraElement> v;
    for (int g = 0; g < ext.group().order(); ++g) v.push_back(ext.apply(g, x));
    return MapModelElement(std::move(v));
}

AlgebraElement gp_project(const GaloisExtension& ext, const MapModelElement& f)
{
    if (static_cast<int>(f.values().size()) != ext.group().order() || !map_is_fixed(ext, f))
        throw Error(ErrorKind::NotFixed, "map is not G-fixed");
    return f[0];
}

MapModelElement f_element(const GroupAlgebra& ea, const AlgebraElement& x, const ElementSet& s)
{
    const GaloisExtension& ext = ea.extension();
    if (ext.trace(x) != ext.algebra().one()) throw Error(ErrorKind::TraceNotOne, "Tr(x) != 1");
    return map_act(ea, ea.theta(s), gp_embed(ext, x));
}

} // namespace hgmod
