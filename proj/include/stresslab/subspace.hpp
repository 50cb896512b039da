#pragma once

#include <vector>

#include "stresslab/sparse.hpp"

namespace stresslab {

// Linear subspace of k^n in canonical form (reduced column echelon with
// normalized pivots), so equal subspaces have equal representations.
class Subspace {
public:
    Subspace(int ambient, Field f) : ambient_(ambient), f_(f) {}

    static Subspace span(int ambient, const Field& f, const std::vector<SpVec>& gens) {
        Echelon e(ambient, f);
        for (const auto& g : gens) e.insert(g);
        return of_echelon(ambient, f, e);
    }

    static Subspace full(int ambient, const Field& f) {
        std::vector<SpVec> gens;
        for (int i = 0; i < ambient; ++i) gens.push_back({{i, Scalar::one(f)}});
        return span(ambient, f, gens);
    }

    static Subspace from_matrix(const SparseMatrix& m) {
        std::vector<SpVec> gens;
        for (int c = 0; c < m.cols(); ++c) gens.push_back(m.column(c));
        return span(m.rows(), m.field(), gens);
    }

    static Subspace of_echelon(int ambient, const Field& f, const Echelon& e) {
        Subspace s(ambient, f);
        s.basis_ = e.basis();
        s.pivots_ = e.pivot_rows();
        return s;
    }

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const Field& field() const { return f_; }
    const std::vector<SpVec>& basis() const { return basis_; }
    const std::vector<int>& pivot_rows() const { return pivots_; }

    SparseMatrix basis_matrix() const {
        SparseMatrix m(ambient_, dim(), f_);
        for (int c = 0; c < dim(); ++c) m.set_column(c, basis_[c]);
        return m;
    }

    bool contains(const SpVec& v) const {
        Echelon e(ambient_, f_);
        for (const auto& b : basis_) e.insert(b);
        return e.contains(v);
    }

    bool contains(const Subspace& o) const {
        if (o.ambient_ != ambient_) return false;
        Echelon e(ambient_, f_);
        for (const auto& b : basis_) e.insert(b);
        for (const auto& b : o.basis_)
            if (!e.contains(b)) return false;
        return true;
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && f_ == o.f_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    int ambient_;
    Field f_;
    std::vector<SpVec> basis_;
    std::vector<int> pivots_;
};

// Basis of the right null space, canonicalized.
inline Subspace kernel(const SparseMatrix& m) {
    detail::SparseElim e(m, true);
    e.eliminate();
    std::vector<SpVec> gens;
    for (const auto& col : e.cols) {
        bool matrix_part = false;
        SpVec tail;
        for (const auto& [r, x] : col) {
            if (r < m.rows()) { matrix_part = true; break; }
            tail.emplace_back(r - m.rows(), x);
        }
        if (!matrix_part && !tail.empty()) gens.push_back(std::move(tail));
    }
    return Subspace::span(m.cols(), m.field(), gens);
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace ambient mismatch");
    require_same_field(a.field(), b.field());
    std::vector<SpVec> gens = a.basis();
    for (const auto& v : b.basis()) gens.push_back(v);
    return Subspace::span(a.ambient(), a.field(), gens);
}

// a ∩ b via the kernel of [A | -B]: each null vector (x; y) gives A x = B y.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace ambient mismatch");
    require_same_field(a.field(), b.field());
    const Field& f = a.field();
    SparseMatrix m(a.ambient(), a.dim() + b.dim(), f);
    for (int c = 0; c < a.dim(); ++c) m.set_column(c, a.basis()[c]);
    for (int c = 0; c < b.dim(); ++c) {
        SpVec v = b.basis()[c];
        spv::scale(v, -Scalar::one(f));
        m.set_column(a.dim() + c, std::move(v));
    }
    Subspace null = kernel(m);
    std::vector<SpVec> gens;
    for (const auto& w : null.basis()) {
        SpVec combo;
        for (const auto& [i, x] : w)
            if (i < a.dim()) spv::axpy(combo, x, a.basis()[i]);
        gens.push_back(std::move(combo));
    }
    return Subspace::span(a.ambient(), f, gens);
}

// Orthogonal complement of a w.r.t. the bilinear form <u,v> = u^T G v:
// vectors v with (basis of a)^T G v = 0.
inline Subspace orthogonal_complement(const Subspace& a, const SparseMatrix& gram) {
    if (gram.rows() != a.ambient() || gram.cols() != a.ambient())
        throw std::invalid_argument("gram shape mismatch");
    if (!gram.is_symmetric()) throw std::invalid_argument("gram must be symmetric");
    require_same_field(a.field(), gram.field());
    SparseMatrix constraints(a.dim(), a.ambient(), a.field());
    for (int c = 0; c < a.ambient(); ++c) {
        // constraint rows are b_i^T G; entry at column c is <b_i, G e_c>
        SpVec col;
        for (int i = 0; i < a.dim(); ++i) {
            Scalar s = spv::dot(a.basis()[i], gram.column(c), a.field());
            if (!s.is_zero()) col.emplace_back(i, s);
        }
        constraints.set_column(c, std::move(col));
    }
    return kernel(constraints);
}

} // namespace stresslab
