#pragma once

#include <optional>
#include <vector>

#include "stresslab/artinian.hpp"

namespace stresslab {

// Stress space A_k(Δ;Θ): coefficient vectors over the degree-k monomials
// supported on Δ, annihilated by every θ_i acting as a differential operator.
struct StressSpace {
    MonomialBasis monomials;
    Subspace basis;  // ambient = monomials.size()

    int dim() const { return basis.dim(); }
};

inline StressSpace stress_space(const SimplicialComplex& c, const Realization& r, int k) {
    if (!is_proper(c, r)) throw std::invalid_argument("improper realization");
    MonomialBasis from(c, k);
    if (k == 0) {
        return StressSpace{std::move(from), Subspace::full(1, r.field())};
    }
    MonomialBasis to(c, k - 1);
    SparseMatrix d = theta_differential_matrix(c, r, from, to);
    Subspace ker = kernel(d);
    return StressSpace{std::move(from), std::move(ker)};
}

// Relative stress space A_k(Δ, Γ): same kernel on the monomials supported on
// Δ but not on Γ, with the differential projected away from Γ's monomials.
inline StressSpace relative_stress_space(const RelativeComplex& pair, const Realization& r,
                                         int k) {
    const SimplicialComplex& c = pair.total;
    MonomialBasis from_all(c, k);
    MonomialBasis to_all(c, k > 0 ? k - 1 : 0);
    // relative coordinates: monomials of Δ not supported on Γ
    std::vector<int> keep_from, keep_to;
    for (int i = 0; i < from_all.size(); ++i)
        if (!pair.in_sub(from_all.at(i).support())) keep_from.push_back(i);
    if (k > 0)
        for (int i = 0; i < to_all.size(); ++i)
            if (!pair.in_sub(to_all.at(i).support())) keep_to.push_back(i);

    MonomialBasis rel;  // rebuilt below as a plain list for reporting
    if (k == 0) {
        // degree 0: the empty monomial survives iff Γ is the void complex
        Subspace basis(static_cast<int>(keep_from.size()), r.field());
        if (!keep_from.empty()) basis = Subspace::full(1, r.field());
        StressSpace out{MonomialBasis(), std::move(basis)};
        return out;
    }
    std::vector<int> to_pos(to_all.size(), -1);
    for (int i = 0; i < static_cast<int>(keep_to.size()); ++i) to_pos[keep_to[i]] = i;
    SparseMatrix full = theta_differential_matrix(c, r, from_all, to_all);
    // rows of `full` are blocks of size to_all; compress to kept monomials
    int l = r.l();
    SparseMatrix m(l * static_cast<int>(keep_to.size()), static_cast<int>(keep_from.size()),
                   r.field());
    for (int j = 0; j < static_cast<int>(keep_from.size()); ++j) {
        SpVec col;
        for (const auto& [row, x] : full.column(keep_from[j])) {
            int block = row / to_all.size();
            int idx = row % to_all.size();
            if (to_pos[idx] >= 0)
                col.emplace_back(block * static_cast<int>(keep_to.size()) + to_pos[idx], x);
        }
        spv::normalize(col);
        m.set_column(j, std::move(col));
    }
    Subspace ker = kernel(m);
    return StressSpace{std::move(rel), std::move(ker)};
}

// Minkowski weights in degree k: weights on the (k-1)-dimensional faces
// balanced at every (k-2)-face τ, the balancing sum taken modulo span(τ).
struct MinkowskiWeights {
    std::vector<Face> faces;  // k-vertex faces carrying the weights
    Subspace basis;

    int dim() const { return basis.dim(); }
};

inline MinkowskiWeights minkowski_weights(const SimplicialComplex& c, const Realization& r,
                                          int k) {
    if (!is_proper(c, r)) throw std::invalid_argument("improper realization");
    if (k < 1) throw std::invalid_argument("minkowski weights need k >= 1");
    const Field& f = r.field();
    std::vector<Face> faces = c.faces_with_vertices(k);
    std::map<Face, int> face_index;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) face_index[faces[i]] = i;

    std::vector<Triplet> trips;
    int rows = 0;
    for (Face tau : c.faces_with_vertices(k - 1)) {
        // complement coordinates: a basis of the annihilator of span(τ)
        Subspace ann = kernel(r.face_matrix(tau).transpose());
        if (ann.dim() == 0) continue;
        for (Face sigma : faces) {
            if ((tau & sigma) != tau) continue;
            int v = std::countr_zero(sigma & ~tau);
            const auto& coords = r.coord(v);
            for (int t = 0; t < ann.dim(); ++t) {
                Scalar val = Scalar::zero(f);
                for (const auto& [i, y] : ann.basis()[t]) val += y * coords[i];
                if (!val.is_zero())
                    trips.push_back({rows + t, face_index.at(sigma), val});
            }
        }
        rows += ann.dim();
    }
    SparseMatrix constraints =
        SparseMatrix::from_triplets(rows, static_cast<int>(faces.size()), f, trips);
    Subspace ker = kernel(constraints);
    return MinkowskiWeights{std::move(faces), std::move(ker)};
}

// residual of the balancing condition of a single weight vector at every
// (k-2)-face; exact zero means balanced
inline bool is_balanced(const SimplicialComplex& c, const Realization& r, int k,
                        const std::vector<Scalar>& weights) {
    MinkowskiWeights mw = minkowski_weights(c, r, k);
    return mw.basis.contains(spv::from_dense(weights));
}

// Prop-style check: restriction of stresses to squarefree coordinates is
// injective onto the weight space, and the dimensions agree.
struct SquarefreeRestrictionReport {
    bool applicable = true;
    int stress_dim = 0;
    int weight_dim = 0;
    bool injective = false;
    bool onto_weights = false;

    bool ok() const { return applicable && injective && onto_weights && stress_dim == weight_dim; }
};

inline SquarefreeRestrictionReport squarefree_restriction_check(const SimplicialComplex& c,
                                                                const Realization& r, int k) {
    SquarefreeRestrictionReport rep;
    if (!is_proper(c, r)) {
        rep.applicable = false;
        return rep;
    }
    StressSpace st = stress_space(c, r, k);
    MinkowskiWeights mw = minkowski_weights(c, r, k);
    rep.stress_dim = st.dim();
    rep.weight_dim = mw.dim();
    std::map<Face, int> face_index;
    for (int i = 0; i < static_cast<int>(mw.faces.size()); ++i) face_index[mw.faces[i]] = i;
    // squarefree coordinate rows inside the degree-k monomial space
    std::vector<int> sf_row(st.monomials.size(), -1);
    for (int i = 0; i < st.monomials.size(); ++i) {
        const Monomial& m = st.monomials.at(i);
        if (m.squarefree() && face_size(m.support()) == k)
            sf_row[i] = face_index.at(m.support());
    }
    SparseMatrix restricted(static_cast<int>(mw.faces.size()), st.dim(), r.field());
    for (int j = 0; j < st.dim(); ++j) {
        SpVec col;
        for (const auto& [i, x] : st.basis.basis()[j])
            if (sf_row[i] >= 0) col.emplace_back(sf_row[i], x);
        spv::normalize(col);
        restricted.set_column(j, std::move(col));
    }
    rep.injective = rank(restricted) == st.dim();
    bool onto = true;
    for (int j = 0; j < st.dim(); ++j)
        if (!mw.basis.contains(restricted.column(j))) onto = false;
    rep.onto_weights = onto && st.dim() == mw.dim();
    return rep;
}

// link of a vertex with coordinates orthogonally projected to span(v)^⊥;
// vertices keep their ambient dimension (the extra dependent form is inert)
inline std::pair<SimplicialComplex, Realization> link_realization(const SimplicialComplex& c,
                                                                  const Realization& r, int v) {
    SimplicialComplex lk = c.link(Face{1} << v);
    const Field& f = r.field();
    const auto& pv = r.coord(v);
    Scalar vv = Scalar::zero(f);
    for (const auto& x : pv) vv += x * x;
    if (vv.is_zero()) throw std::invalid_argument("vertex with isotropic coordinates");
    std::vector<std::vector<Scalar>> cols;
    for (int w = 0; w < lk.n_vertices(); ++w) {
        const auto& pu = r.coord(c.vertex_index(lk.label(w)));
        Scalar uv = Scalar::zero(f);
        for (int i = 0; i < r.l(); ++i) uv += pu[i] * pv[i];
        Scalar t = uv / vv;
        std::vector<Scalar> proj;
        for (int i = 0; i < r.l(); ++i) proj.push_back(pu[i] - t * pv[i]);
        cols.push_back(std::move(proj));
    }
    return {std::move(lk), Realization(r.l(), f, std::move(cols))};
}

// restriction of the ambient realization to a subcomplex (by label)
inline Realization restrict_realization(const SimplicialComplex& sub, const SimplicialComplex& amb,
                                        const Realization& r) {
    std::vector<std::vector<Scalar>> cols;
    for (int v = 0; v < sub.n_vertices(); ++v)
        cols.push_back(r.coord(amb.vertex_index(sub.label(v))));
    return Realization(r.l(), r.field(), std::move(cols));
}

struct ConeLemmaReport {
    int link_dim = 0;      // dim A_k(Lk_v)
    int star_dim = 0;      // dim A_k(St_v)
    int open_star_dim = 0; // dim A_{k+1}(St°_v)
    bool iso = false;      // x_v: A_{k+1}(St°_v) -> A_k(St_v) bijective

    bool ok() const { return link_dim == star_dim && open_star_dim == star_dim && iso; }
};

// Cone lemmas at a vertex: A_k(Lk_v) ≅ A_k(St_v), and multiplication by x_v
// (differentiation ∂_v on the stress side) maps A_{k+1}(St°_v) onto A_k(St_v).
inline ConeLemmaReport cone_lemma_check(const SimplicialComplex& c, const Realization& r, int v,
                                        int k) {
    ConeLemmaReport rep;
    auto [lk, lkr] = link_realization(c, r, v);
    rep.link_dim = stress_space(lk, lkr, k).dim();

    SimplicialComplex st = c.star(Face{1} << v);
    Realization str = restrict_realization(st, c, r);
    StressSpace star = stress_space(st, str, k);
    rep.star_dim = star.dim();

    int vs = st.vertex_index(c.label(v));
    RelativeComplex op = open_star(st, Face{1} << vs);
    StressSpace rel = relative_stress_space(op, str, k + 1);
    rep.open_star_dim = rel.dim();

    // ∂_v on relative stresses, expressed over the degree-k monomials of St_v
    MonomialBasis from_all(st, k + 1);
    std::vector<int> keep;
    for (int i = 0; i < from_all.size(); ++i)
        if (!op.in_sub(from_all.at(i).support())) keep.push_back(i);
    MonomialBasis to(st, k);
    SparseMatrix dv(to.size(), static_cast<int>(keep.size()), r.field());
    for (int j = 0; j < static_cast<int>(keep.size()); ++j) {
        auto [dm, coeff] = from_all.at(keep[j]).d_vertex(vs);
        if (coeff == 0) continue;
        int idx = to.index_of(dm);
        if (idx >= 0)
            dv.set_column(j, {{idx, Scalar::integer(r.field(), coeff)}});
    }
    SparseMatrix image(to.size(), rel.dim(), r.field());
    for (int j = 0; j < rel.dim(); ++j) image.set_column(j, dv.apply(rel.basis.basis()[j]));
    int rk = rank(image);
    rep.iso = (rk == rep.open_star_dim) && (rk == rep.star_dim);
    // image must consist of stresses of the closed star
    for (int j = 0; j < rel.dim(); ++j)
        if (!star.basis.contains(image.column(j))) rep.iso = false;
    return rep;
}

struct PartitionOfUnityReport {
    int domain_dim = 0;
    int kernel_dim = 0;
    bool injective = false;
};

// Injectivity of A^k(Δ) -> ⊕_v A^k(St_v Δ); with a Gorenstein quotient given,
// of B^k(M) -> ⊕_v A^k(St_v M).
inline PartitionOfUnityReport partition_of_unity_check(const GradedAlgebra& a, int k,
                                                       const GorensteinQuotient* b = nullptr) {
    const SimplicialComplex& c = a.complex();
    const Field& f = a.field();
    int dim_dom = b ? b->dim(k) : a.dim(k);
    std::vector<SpVec> cols(dim_dom);
    int rows = 0;
    for (int v = 0; v < c.n_vertices(); ++v) {
        SimplicialComplex st = c.star(Face{1} << v);
        GradedAlgebra sa = subcomplex_algebra(st, a, k);
        SparseMatrix res = restriction_matrix(a, sa, k);
        for (int i = 0; i < dim_dom; ++i) {
            SpVec av;
            if (b) av = spv::from_dense(b->representative(k, i).coords);
            else av.emplace_back(i, Scalar::one(f));
            for (const auto& [row, x] : res.apply(av)) cols[i].emplace_back(rows + row, x);
        }
        rows += res.rows();
    }
    SparseMatrix stacked(rows, dim_dom, f);
    for (int i = 0; i < dim_dom; ++i) {
        spv::normalize(cols[i]);
        stacked.set_column(i, std::move(cols[i]));
    }
    PartitionOfUnityReport rep;
    rep.domain_dim = dim_dom;
    rep.kernel_dim = kernel(stacked).dim();
    rep.injective = rep.kernel_dim == 0;
    return rep;
}

} // namespace stresslab
