#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "stresslab/homology.hpp"
#include "stresslab/monomials.hpp"
#include "stresslab/subspace.hpp"

namespace stresslab {

// Quotient of k^ambient by a spanned subspace, with canonical coordinates on
// the non-pivot rows of the reduced echelon form.
class LinearQuotient {
public:
    LinearQuotient(int ambient, const Field& f, const std::vector<SpVec>& killed)
        : ambient_(ambient), ech_(ambient, f) {
        for (const auto& v : killed) ech_.insert(v);
        qbasis_ = ech_.nonpivot_rows();
        qpos_.assign(ambient, -1);
        for (int i = 0; i < static_cast<int>(qbasis_.size()); ++i) qpos_[qbasis_[i]] = i;
    }

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(qbasis_.size()); }
    int rep_row(int i) const { return qbasis_[i]; }
    int coord_of_row(int r) const { return qpos_[r]; }
    const std::vector<int>& rep_rows() const { return qbasis_; }

    // quotient coordinates of a vector given in ambient coordinates
    std::vector<Scalar> reduce(const SpVec& v, const Field& f) const {
        SpVec red = ech_.reduce(v);
        std::vector<Scalar> out(dim(), Scalar::zero(f));
        for (const auto& [r, x] : red) out[qpos_[r]] = x;
        return out;
    }

    SpVec reduce_sparse(const SpVec& v) const {
        SpVec red = ech_.reduce(v);
        SpVec out;
        for (const auto& [r, x] : red) out.emplace_back(qpos_[r], x);
        return out;
    }

private:
    int ambient_;
    Echelon ech_;
    std::vector<int> qbasis_;
    std::vector<int> qpos_;
};

class GradedAlgebra;

// Homogeneous element in the quotient-basis coordinates of its degree.
struct AlgebraElement {
    const GradedAlgebra* owner = nullptr;
    int degree = 0;
    std::vector<Scalar> coords;

    bool is_zero() const {
        for (const auto& x : coords)
            if (!x.is_zero()) return false;
        return true;
    }
};

// Artinian reduction A^*(Δ) = k[Δ]/(I_Δ + Θ) in per-degree monomial
// coordinates. Each degree stores the spanning monomials M_k and the
// canonical reduction modulo Θ·M_{k-1}; the quotient basis is the set of
// non-pivot monomials.
class GradedAlgebra {
public:
    static GradedAlgebra build(const SimplicialComplex& c, const Realization& r,
                               int max_degree = -1) {
        if (r.n() != c.n_vertices())
            throw std::invalid_argument("realization does not match the complex");
        if (!is_proper(c, r))
            throw std::invalid_argument("improper realization: not an l.s.o.p.");
        return GradedAlgebra(c, r, max_degree < 0 ? r.l() : max_degree);
    }

    const SimplicialComplex& complex() const { return c_; }
    const Realization& realization() const { return r_; }
    const Field& field() const { return f_; }
    int d() const { return d_; }
    int max_degree() const { return static_cast<int>(deg_.size()) - 1; }

    int dim(int k) const {
        if (k < 0 || k > max_degree()) return 0;
        return deg_[k].quotient->dim();
    }

    std::vector<int> dims() const {
        std::vector<int> out;
        for (int k = 0; k <= max_degree(); ++k) out.push_back(dim(k));
        return out;
    }

    const MonomialBasis& monomials(int k) const { return deg_.at(k).monomials; }
    const LinearQuotient& quotient(int k) const { return *deg_.at(k).quotient; }

    // the monomial representing quotient coordinate i of degree k
    const Monomial& basis_monomial(int k, int i) const {
        return deg_.at(k).monomials.at(deg_.at(k).quotient->rep_row(i));
    }

    AlgebraElement zero(int k) const {
        return AlgebraElement{this, k, std::vector<Scalar>(dim(k), Scalar::zero(f_))};
    }

    AlgebraElement one() const { return from_monomial_poly(0, {{0, Scalar::one(f_)}}); }

    AlgebraElement x(int v) const {
        Monomial m;
        m.exps.emplace_back(v, 1);
        int idx = deg_.at(1).monomials.index_of(m);
        SpVec poly;
        if (idx >= 0) poly.emplace_back(idx, Scalar::one(f_));
        return from_monomial_poly(1, poly);
    }

    // ℓ = Σ coeffs[v]·x_v
    AlgebraElement linear_form(const std::vector<Scalar>& coeffs) const {
        SpVec poly;
        for (int v = 0; v < c_.n_vertices(); ++v) {
            if (coeffs[v].is_zero()) continue;
            Monomial m;
            m.exps.emplace_back(v, 1);
            int idx = deg_.at(1).monomials.index_of(m);
            if (idx >= 0) poly.emplace_back(idx, coeffs[v]);
        }
        return from_monomial_poly(1, poly);
    }

    AlgebraElement from_monomial_poly(int k, SpVec poly) const {
        spv::normalize(poly);
        return AlgebraElement{this, k, deg_.at(k).quotient->reduce(poly, f_)};
    }

    AlgebraElement from_coords(int k, std::vector<Scalar> coords) const {
        if (static_cast<int>(coords.size()) != dim(k))
            throw std::invalid_argument("coordinate length mismatch");
        return AlgebraElement{this, k, std::move(coords)};
    }

    // monomial-space representative of an element (unit lifts of basis monomials)
    SpVec lift(const AlgebraElement& a) const {
        SpVec poly;
        const auto& dd = deg_.at(a.degree);
        for (int i = 0; i < static_cast<int>(a.coords.size()); ++i)
            if (!a.coords[i].is_zero()) poly.emplace_back(dd.quotient->rep_row(i), a.coords[i]);
        return poly;
    }

    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const {
        if (a.owner != this || b.owner != this)
            throw std::invalid_argument("elements of a different algebra");
        int k = a.degree + b.degree;
        if (k > max_degree()) throw std::invalid_argument("degree overflow in product");
        const auto& ma = deg_.at(a.degree).monomials;
        const auto& mb = deg_.at(b.degree).monomials;
        SpVec poly;
        for (int i = 0; i < static_cast<int>(a.coords.size()); ++i) {
            if (a.coords[i].is_zero()) continue;
            const Monomial& mi = basis_monomial(a.degree, i);
            for (int j = 0; j < static_cast<int>(b.coords.size()); ++j) {
                if (b.coords[j].is_zero()) continue;
                Monomial prod = mi * basis_monomial(b.degree, j);
                int idx = deg_.at(k).monomials.index_of(prod);
                if (idx >= 0) poly.emplace_back(idx, a.coords[i] * b.coords[j]);
            }
        }
        (void)ma;
        (void)mb;
        return from_monomial_poly(k, poly);
    }

    // matrix of multiplication by a degree-j element, A^k -> A^{k+j}
    SparseMatrix multiplication_matrix(const AlgebraElement& by, int k) const {
        int to = k + by.degree;
        if (to > max_degree()) throw std::invalid_argument("degree overflow in product");
        SparseMatrix m(dim(to), dim(k), f_);
        for (int i = 0; i < dim(k); ++i) {
            AlgebraElement basis = zero(k);
            basis.coords[i] = Scalar::one(f_);
            AlgebraElement prod = multiply(by, basis);
            SpVec col = spv::from_dense(prod.coords);
            m.set_column(i, std::move(col));
        }
        return m;
    }

    // multiplication by ℓ^power as a map A^k -> A^{k+power}, composed with
    // intermediate reduction
    SparseMatrix power_multiplication_matrix(const AlgebraElement& ell, int k, int power) const {
        if (ell.degree != 1) throw std::invalid_argument("lefschetz element must have degree 1");
        if (power == 0) return SparseMatrix::identity(dim(k), f_);
        SparseMatrix m = multiplication_matrix(ell, k);
        for (int i = 1; i < power; ++i) m = multiplication_matrix(ell, k + i) * m;
        return m;
    }

    // ---- degree map and pairings ----

    // deg: A^d -> k, normalized on the volume stress so that the squarefree
    // monomial of the reference facet evaluates to 1/|det V_ref| (sign-free
    // absolute value over Q; plain inverse determinant over F_p).
    Scalar degree_map(const AlgebraElement& u) const {
        if (u.degree != d_) throw std::invalid_argument("degree map needs a top-degree element");
        ensure_volume_stress();
        Scalar s = Scalar::zero(f_);
        for (int i = 0; i < static_cast<int>(u.coords.size()); ++i) {
            if (u.coords[i].is_zero()) continue;
            s += u.coords[i] * deg_of_monomial_[deg_.at(d_).quotient->rep_row(i)];
        }
        return s;
    }

    Scalar degree_of_poly(const SpVec& poly) const {
        ensure_volume_stress();
        Scalar s = Scalar::zero(f_);
        for (const auto& [idx, x] : poly) s += x * deg_of_monomial_[idx];
        return s;
    }

    // Pairing matrix P[i][j] = deg(m_i · m_j) over the quotient bases of
    // degrees k and d-k.
    SparseMatrix pairing_matrix(int k) const {
        ensure_volume_stress();
        int kk = d_ - k;
        SparseMatrix p(dim(k), dim(kk), f_);
        const auto& topm = deg_.at(d_).monomials;
        for (int j = 0; j < dim(kk); ++j) {
            const Monomial& mj = basis_monomial(kk, j);
            SpVec col;
            for (int i = 0; i < dim(k); ++i) {
                Monomial prod = basis_monomial(k, i) * mj;
                int idx = topm.index_of(prod);
                if (idx < 0) continue;
                if (deg_of_monomial_[idx].is_zero()) continue;
                col.emplace_back(i, deg_of_monomial_[idx]);
            }
            p.set_column(j, std::move(col));
        }
        return p;
    }

    // full volume stress over the degree-d monomial space (the Weil-dual
    // generator of A_d); kept for normalization cross-checks
    const std::vector<Scalar>& volume_stress() const {
        ensure_volume_stress();
        return volume_stress_;
    }

    // ---- socle ----

    // Soc^k = ∩_v ker(x_v·: A^k -> A^{k+1})
    Subspace socle(int k) const {
        if (k >= max_degree()) return Subspace::full(dim(k), f_);
        SparseMatrix stacked(0, dim(k), f_);
        bool first = true;
        for (int v = 0; v < c_.n_vertices(); ++v) {
            SparseMatrix mv = multiplication_matrix(x(v), k);
            stacked = first ? mv : stacked.vstack(mv);
            first = false;
        }
        return kernel(stacked);
    }

    // interior socle: socle in degrees <= d-1, zero in degree d
    Subspace interior_socle(int k) const {
        if (k >= d_) return Subspace(dim(k), f_);
        return socle(k);
    }

private:
    GradedAlgebra(const SimplicialComplex& c, const Realization& r, int max_degree)
        : c_(c), r_(r), f_(r.field()), d_(r.l()) {
        deg_.reserve(max_degree + 1);
        for (int k = 0; k <= max_degree; ++k) {
            DegreeData dd;
            dd.monomials = MonomialBasis(c_, k);
            std::vector<SpVec> killed;
            if (k > 0)
                killed = theta_multiplication_columns(c_, r_, deg_[k - 1].monomials, dd.monomials);
            dd.quotient = std::make_unique<LinearQuotient>(dd.monomials.size(), f_, killed);
            deg_.push_back(std::move(dd));
        }
    }

    void ensure_volume_stress() const {
        if (!volume_stress_.empty()) return;
        if (d_ > max_degree()) throw std::invalid_argument("algebra truncated below degree d");
        if (!is_closed_pseudomanifold(c_))
            throw std::invalid_argument("degree map needs a closed pseudomanifold");
        const auto& topm = deg_.at(d_).monomials;
        const auto& prevm = deg_.at(d_ - 1).monomials;
        Subspace ker_top = kernel(theta_differential_matrix(c_, r_, topm, prevm));
        if (ker_top.dim() != 1)
            throw std::invalid_argument("volume stress is not unique; non-orientable input?");
        std::vector<Scalar> w = spv::to_dense(ker_top.basis()[0], topm.size(), f_);
        // reference facet: smallest facet mask; normalize its squarefree
        // coordinate to 1/|det|
        Face ref = c_.faces_with_vertices(d_).front();
        Monomial mref;
        for (int v : face_vertices(ref)) mref.exps.emplace_back(v, 1);
        int refidx = topm.index_of(mref);
        const Scalar& wref = w[refidx];
        if (wref.is_zero())
            throw std::invalid_argument("volume stress vanishes on the reference facet");
        Scalar det = determinant_of_face(ref);
        if (f_.is_rational() && det.sign() < 0) det = -det;
        Scalar scale = (Scalar::one(f_) / det) / wref;
        for (auto& x : w) x *= scale;
        volume_stress_ = std::move(w);
        deg_of_monomial_.assign(topm.size(), Scalar::zero(f_));
        for (int i = 0; i < topm.size(); ++i)
            deg_of_monomial_[i] =
                Scalar::integer(f_, topm.at(i).factorial_weight()) * volume_stress_[i];
    }

    Scalar determinant_of_face(Face sigma) const {
        SparseMatrix m = r_.face_matrix(sigma);
        int n = m.cols();
        std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n, Scalar::zero(f_)));
        for (int c = 0; c < n; ++c)
            for (const auto& [row, x] : m.column(c)) a[row][c] = x;
        Scalar det = Scalar::one(f_);
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            for (int row = c; row < n; ++row)
                if (!a[row][c].is_zero()) { piv = row; break; }
            if (piv < 0) return Scalar::zero(f_);
            if (piv != c) {
                std::swap(a[piv], a[c]);
                det = -det;
            }
            det *= a[c][c];
            Scalar inv = a[c][c].inv();
            for (int row = c + 1; row < n; ++row) {
                if (a[row][c].is_zero()) continue;
                Scalar t = a[row][c] * inv;
                for (int j = c; j < n; ++j) a[row][j] -= t * a[c][j];
            }
        }
        return det;
    }

    struct DegreeData {
        MonomialBasis monomials;
        std::unique_ptr<LinearQuotient> quotient;
    };

    SimplicialComplex c_;
    Realization r_;
    Field f_;
    int d_;
    std::vector<DegreeData> deg_;
    mutable std::vector<Scalar> volume_stress_;
    mutable std::vector<Scalar> deg_of_monomial_;
};

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return a.owner->multiply(a, b);
}

inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.owner != b.owner || a.degree != b.degree)
        throw std::invalid_argument("sum of incompatible elements");
    AlgebraElement r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

// ---- restriction to subcomplexes, monomial ideals, kappa ----

// vertex map from sub's indices into amb's indices (by label)
inline std::vector<int> vertex_map(const SimplicialComplex& sub, const SimplicialComplex& amb) {
    std::vector<int> map(sub.n_vertices());
    for (int v = 0; v < sub.n_vertices(); ++v) map[v] = amb.vertex_index(sub.label(v));
    return map;
}

// algebra of a subcomplex with the inherited coordinates
inline GradedAlgebra subcomplex_algebra(const SimplicialComplex& sub, const GradedAlgebra& amb,
                                        int max_degree = -1) {
    auto map = vertex_map(sub, amb.complex());
    std::vector<std::vector<Scalar>> cols;
    for (int v = 0; v < sub.n_vertices(); ++v) cols.push_back(amb.realization().coord(map[v]));
    Realization r(amb.realization().l(), amb.field(), std::move(cols));
    return GradedAlgebra::build(sub, r, max_degree < 0 ? amb.max_degree() : max_degree);
}

// matrix of the restriction map A^k(amb) -> A^k(sub)
inline SparseMatrix restriction_matrix(const GradedAlgebra& amb, const GradedAlgebra& sub, int k) {
    const auto& ambc = amb.complex();
    const auto& subc = sub.complex();
    std::vector<int> to_amb = vertex_map(subc, ambc);
    std::vector<int> to_sub(ambc.n_vertices(), -1);
    for (int v = 0; v < subc.n_vertices(); ++v) to_sub[to_amb[v]] = v;
    SparseMatrix m(sub.dim(k), amb.dim(k), amb.field());
    for (int i = 0; i < amb.dim(k); ++i) {
        const Monomial& mono = amb.basis_monomial(k, i);
        Monomial mapped;
        bool ok = true;
        for (auto& [v, e] : mono.exps) {
            if (to_sub[v] < 0) { ok = false; break; }
            mapped.exps.emplace_back(to_sub[v], e);
        }
        if (!ok) continue;
        std::sort(mapped.exps.begin(), mapped.exps.end());
        int idx = sub.monomials(k).index_of(mapped);
        if (idx < 0) continue;  // support is a nonface of the subcomplex
        AlgebraElement img = sub.from_monomial_poly(k, {{idx, Scalar::one(amb.field())}});
        m.set_column(i, spv::from_dense(img.coords));
    }
    return m;
}

// K^*(Σ, Δ') = ker[A^*(Σ) -> A^*(Δ')], per degree
class MonomialIdeal {
public:
    MonomialIdeal(const GradedAlgebra& amb, const SimplicialComplex& sub)
        : amb_(&amb), sub_(sub) {
        if (!amb.complex().contains_subcomplex(sub))
            throw std::invalid_argument("not a subcomplex");
        GradedAlgebra sa = subcomplex_algebra(sub, amb);
        for (int k = 0; k <= amb.max_degree(); ++k)
            degrees_.push_back(kernel(restriction_matrix(amb, sa, k)));
    }

    const GradedAlgebra& algebra() const { return *amb_; }
    const SimplicialComplex& subcomplex() const { return sub_; }
    const Subspace& degree(int k) const { return degrees_.at(k); }
    int kappa(int k) const {
        return (k >= 0 && k < static_cast<int>(degrees_.size())) ? degrees_[k].dim() : 0;
    }

private:
    const GradedAlgebra* amb_;
    SimplicialComplex sub_;
    std::vector<Subspace> degrees_;
};

inline int kappa(const GradedAlgebra& amb, const SimplicialComplex& sub, int k) {
    return MonomialIdeal(amb, sub).kappa(k);
}

// Ann(K)^k = {a in A^k : a·K^j = 0 for all j}
inline Subspace annihilator_degree(const GradedAlgebra& a, const MonomialIdeal& ideal, int k) {
    const Field& f = a.field();
    std::vector<SpVec> constraint_cols(a.dim(k));
    int rows = 0;
    for (int j = 1; k + j <= a.max_degree(); ++j) {
        const Subspace& kj = ideal.degree(j);
        for (const auto& gen : kj.basis()) {
            AlgebraElement g = a.from_coords(j, spv::to_dense(gen, a.dim(j), f));
            SparseMatrix mult = a.multiplication_matrix(g, k);
            for (int c = 0; c < a.dim(k); ++c)
                for (const auto& [r, x] : mult.column(c))
                    constraint_cols[c].emplace_back(rows + r, x);
            rows += mult.rows();
        }
    }
    SparseMatrix constraints(rows, a.dim(k), f);
    for (int c = 0; c < a.dim(k); ++c) constraints.set_column(c, std::move(constraint_cols[c]));
    return kernel(constraints);
}

// ---- Gorenstein quotient B^* = A^*/Soc° for manifolds ----

class GorensteinQuotient {
public:
    explicit GorensteinQuotient(const GradedAlgebra& a) : a_(&a) {
        for (int k = 0; k <= a.max_degree(); ++k) {
            Subspace soc = a.interior_socle(k);
            socle_.push_back(soc);
            quot_.push_back(std::make_unique<LinearQuotient>(
                a.dim(k), a.field(), soc.basis()));
        }
    }

    const GradedAlgebra& algebra() const { return *a_; }
    int d() const { return a_->d(); }
    const Field& field() const { return a_->field(); }
    int dim(int k) const {
        return (k < 0 || k >= static_cast<int>(quot_.size())) ? 0 : quot_[k]->dim();
    }
    const Subspace& interior_socle(int k) const { return socle_.at(k); }
    const LinearQuotient& quotient(int k) const { return *quot_.at(k); }

    // B-coordinates of an A-element
    std::vector<Scalar> project(const AlgebraElement& u) const {
        return quot_.at(u.degree)->reduce(spv::from_dense(u.coords), a_->field());
    }

    // A-representative of a B-basis vector (unit lift at the representative row)
    AlgebraElement representative(int k, int i) const {
        AlgebraElement e = a_->zero(k);
        e.coords[quot_.at(k)->rep_row(i)] = Scalar::one(a_->field());
        return e;
    }

    // multiplication by a degree-j A-element as a map B^k -> B^{k+j}
    SparseMatrix multiplication_matrix(const AlgebraElement& by, int k) const {
        SparseMatrix m(dim(k + by.degree), dim(k), field());
        for (int i = 0; i < dim(k); ++i) {
            AlgebraElement prod = a_->multiply(by, representative(k, i));
            m.set_column(i, spv::from_dense(project(prod)));
        }
        return m;
    }

    SparseMatrix power_multiplication_matrix(const AlgebraElement& ell, int k, int power) const {
        if (power == 0) return SparseMatrix::identity(dim(k), field());
        SparseMatrix m = multiplication_matrix(ell, k);
        for (int i = 1; i < power; ++i) m = multiplication_matrix(ell, k + i) * m;
        return m;
    }

    // pairing B^k x B^{d-k} -> k; well-defined because the interior socle
    // annihilates positive degrees
    SparseMatrix pairing_matrix(int k) const {
        SparseMatrix full = a_->pairing_matrix(k);
        int kk = d() - k;
        SparseMatrix p(dim(k), dim(kk), field());
        for (int j = 0; j < dim(kk); ++j) {
            SpVec col;
            for (int i = 0; i < dim(k); ++i) {
                Scalar v = full.entry(quot_.at(k)->rep_row(i), quot_.at(kk)->rep_row(j));
                if (!v.is_zero()) col.emplace_back(i, v);
            }
            p.set_column(j, std::move(col));
        }
        return p;
    }

private:
    const GradedAlgebra* a_;
    std::vector<Subspace> socle_;
    std::vector<std::unique_ptr<LinearQuotient>> quot_;
};

// K^*(M, Δ') on the Gorenstein quotient: classes whose restriction to Δ' is a
// restricted interior-socle class.
class GorensteinIdeal {
public:
    GorensteinIdeal(const GorensteinQuotient& b, const SimplicialComplex& sub)
        : b_(&b), sub_(sub) {
        const GradedAlgebra& a = b.algebra();
        if (!a.complex().contains_subcomplex(sub))
            throw std::invalid_argument("not a subcomplex");
        GradedAlgebra sa = subcomplex_algebra(sub, a);
        const Field& f = a.field();
        for (int k = 0; k <= a.max_degree(); ++k) {
            SparseMatrix res = restriction_matrix(a, sa, k);
            // W = res(Soc°^k) inside A^k(Δ')
            std::vector<SpVec> w;
            for (const auto& s : b.interior_socle(k).basis()) w.push_back(res.apply(s));
            LinearQuotient mod_w(sa.dim(k), f, w);
            // T = {a : res(a) ∈ W}
            SparseMatrix comp(mod_w.dim(), a.dim(k), f);
            for (int c = 0; c < a.dim(k); ++c)
                comp.set_column(c, mod_w.reduce_sparse(res.column(c)));
            Subspace t = kernel(comp);
            // push T to B-coordinates
            std::vector<SpVec> gens;
            for (const auto& g : t.basis()) gens.push_back(b.quotient(k).reduce_sparse(g));
            degrees_.push_back(Subspace::span(b.dim(k), f, gens));
        }
    }

    const Subspace& degree(int k) const { return degrees_.at(k); }
    int kappa(int k) const { return degrees_.at(k).dim(); }

private:
    const GorensteinQuotient* b_;
    SimplicialComplex sub_;
    std::vector<Subspace> degrees_;
};

} // namespace stresslab
