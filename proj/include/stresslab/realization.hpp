#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stresslab/complex.hpp"
#include "stresslab/homology.hpp"
#include "stresslab/subspace.hpp"

namespace stresslab {

// Vertex coordinates V (one length-l column per vertex) over an exact field.
// The rows of V are the linear forms Θ = V·x; properness of the realization
// is exactly the l.s.o.p. condition for the induced Artinian reduction.
class Realization {
public:
    Realization(int l, Field f, std::vector<std::vector<Scalar>> coords)
        : l_(l), f_(f), coords_(std::move(coords)) {
        for (const auto& col : coords_) {
            if (static_cast<int>(col.size()) != l_)
                throw std::invalid_argument("coordinate column of wrong length");
            for (const auto& x : col) require_same_field(f_, x.field());
        }
    }

    static Realization from_integers(int l, const Field& f,
                                     const std::vector<std::vector<long long>>& cols) {
        std::vector<std::vector<Scalar>> cs;
        for (const auto& col : cols) {
            std::vector<Scalar> c;
            for (long long v : col) c.push_back(Scalar::integer(f, v));
            cs.push_back(std::move(c));
        }
        return Realization(l, f, std::move(cs));
    }

    int l() const { return l_; }
    int n() const { return static_cast<int>(coords_.size()); }
    const Field& field() const { return f_; }
    const std::vector<Scalar>& coord(int v) const { return coords_.at(v); }

    // l x n coordinate matrix
    SparseMatrix matrix() const {
        SparseMatrix m(l_, n(), f_);
        for (int v = 0; v < n(); ++v)
            for (int i = 0; i < l_; ++i) m.add(i, v, coords_[v][i]);
        return m;
    }

    // columns restricted to a face
    SparseMatrix face_matrix(Face sigma) const {
        auto verts = face_vertices(sigma);
        SparseMatrix m(l_, static_cast<int>(verts.size()), f_);
        for (int j = 0; j < static_cast<int>(verts.size()); ++j)
            for (int i = 0; i < l_; ++i) m.add(i, j, coords_[verts[j]][i]);
        return m;
    }

    Realization to_field(const Field& f) const {
        if (f == f_) return *this;
        std::vector<std::vector<Scalar>> cs;
        for (const auto& col : coords_) {
            std::vector<Scalar> c;
            for (const auto& x : col) {
                if (f_.is_rational() && f.is_prime()) c.push_back(Scalar::reduce_mod(x, f));
                else throw field_error("can only reduce rational coordinates mod p");
            }
            cs.push_back(std::move(c));
        }
        return Realization(l_, f, std::move(cs));
    }

private:
    int l_;
    Field f_;
    std::vector<std::vector<Scalar>> coords_;
};

// Every face σ with |σ| <= l spans with full rank |σ| (the partial-l.s.o.p.
// criterion; with l = dim+1 this is the full properness of the realization).
inline std::optional<Face> properness_violation(const SimplicialComplex& c, const Realization& r) {
    if (r.n() != c.n_vertices()) throw std::invalid_argument("realization size mismatch");
    for (int k = 1; k <= std::min(c.dim() + 1, r.l()); ++k)
        for (Face sigma : c.faces_with_vertices(k))
            if (rank(r.face_matrix(sigma)) != k) return sigma;
    return std::nullopt;
}

inline bool is_proper(const SimplicialComplex& c, const Realization& r) {
    return !properness_violation(c, r).has_value();
}

// Integer coordinates sampled uniformly in [-bound, bound], resampled until
// proper; deterministic per seed.
inline Realization random_realization(const SimplicialComplex& c, int l, std::uint64_t seed,
                                      long long bound = 1000000, Field f = Field::rationals(),
                                      int max_tries = 64, int* tries_used = nullptr) {
    if (l < 1) throw std::invalid_argument("realization needs l >= 1");
    Rng rng = Rng(seed).child("realization");
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<std::vector<long long>> cols(c.n_vertices(), std::vector<long long>(l));
        for (auto& col : cols)
            for (auto& x : col) x = rng.int_in(-bound, bound);
        Realization r = Realization::from_integers(l, f, cols);
        if (is_proper(c, r)) {
            if (tries_used) *tries_used = attempt + 1;
            return r;
        }
    }
    throw std::runtime_error("no proper realization found; widen the bound or change the seed");
}

// Splits coordinates along a direction: a projection π to the hyperplane
// {x_j = 0} (j = first nonzero coordinate of the direction) and the height
// θ(u) = u_j / dir_j, so u = π(u) + θ(u)·dir up to the coordinate split.
struct ProjectionData {
    Realization projected;   // l-1 coordinates (axis j dropped)
    std::vector<Scalar> heights;
    int dropped_axis;
    bool proper;             // properness of the projection on faces of size <= l-1
};

inline ProjectionData project_and_height(const SimplicialComplex& c, const Realization& r,
                                         const std::vector<Scalar>& direction) {
    if (static_cast<int>(direction.size()) != r.l())
        throw std::invalid_argument("direction length mismatch");
    int j = -1;
    for (int i = 0; i < r.l(); ++i)
        if (!direction[i].is_zero()) { j = i; break; }
    if (j < 0) throw std::invalid_argument("direction must be nonzero");
    const Field& f = r.field();
    std::vector<std::vector<Scalar>> cols;
    std::vector<Scalar> heights;
    for (int v = 0; v < r.n(); ++v) {
        const auto& u = r.coord(v);
        Scalar h = u[j] / direction[j];
        std::vector<Scalar> pu;
        for (int i = 0; i < r.l(); ++i) {
            if (i == j) continue;
            pu.push_back(u[i] - h * direction[i]);
        }
        cols.push_back(std::move(pu));
        heights.push_back(std::move(h));
    }
    Realization proj(r.l() - 1, f, std::move(cols));
    bool proper = true;
    for (int k = 1; k <= std::min(c.dim() + 1, r.l() - 1); ++k)
        for (Face sigma : c.faces_with_vertices(k))
            if (rank(proj.face_matrix(sigma)) != k) { proper = false; break; }
    return ProjectionData{std::move(proj), std::move(heights), j, proper};
}

// The bad Artinian reduction fixture: Σ' is the tetrahedron boundary with all
// four triangles stellarly subdivided; vertices 1..4 sit in the plane z = 0
// through the origin, the new vertices 1'..4' sit off that plane. The linear
// system is still an l.s.o.p., but the reduction is deliberately non-generic.
struct BadReductionFixture {
    SimplicialComplex sigma;        // ∂Δ³
    SimplicialComplex sigma_prime;  // the subdivided sphere
    SimplicialComplex delta;        // Σ ∩ Σ' = 1-skeleton of the tetrahedron
    Realization realization;        // fixed integer coordinates for Σ'
};

inline BadReductionFixture special_realization_bad_reduction(Field f = Field::rationals()) {
    SimplicialComplex sigma = boundary_simplex(3);
    SimplicialComplex sp = sigma;
    // subdivide every original triangle; new vertex i' replaces the triangle
    // opposite vertex i
    for (int i = 1; i <= 4; ++i) {
        std::vector<std::string> tri;
        for (int v = 1; v <= 4; ++v)
            if (v != i) tri.push_back(std::to_string(v));
        sp = sp.stellar_subdivide(sp.face_of_labels(tri), std::to_string(i) + "'");
    }
    // Σ ∩ Σ': faces of Σ that survive = the full 1-skeleton of Δ³
    std::vector<std::vector<std::string>> edges;
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            edges.push_back({std::to_string(a), std::to_string(b)});
    SimplicialComplex delta = SimplicialComplex::from_facets(edges);

    std::map<std::string, std::vector<long long>> coords = {
        {"1", {1, 0, 0}},  {"2", {0, 1, 0}},  {"3", {2, 1, 0}},  {"4", {1, 3, 0}},
        {"1'", {1, 2, 1}}, {"2'", {3, 1, -1}}, {"3'", {0, 1, 2}}, {"4'", {2, 0, 3}}};
    std::vector<std::vector<long long>> cols;
    for (int v = 0; v < sp.n_vertices(); ++v) cols.push_back(coords.at(sp.label(v)));
    Realization r = Realization::from_integers(3, f, cols);
    return BadReductionFixture{std::move(sigma), std::move(sp), std::move(delta), std::move(r)};
}

// convenience: a realization from labeled coordinates
inline Realization realization_from_labels(
    const SimplicialComplex& c, int l, const Field& f,
    const std::map<std::string, std::vector<std::string>>& labeled) {
    std::vector<std::vector<Scalar>> cols;
    for (int v = 0; v < c.n_vertices(); ++v) {
        auto it = labeled.find(c.label(v));
        if (it == labeled.end())
            throw std::invalid_argument("no coordinates for vertex " + c.label(v));
        if (static_cast<int>(it->second.size()) != l)
            throw std::invalid_argument("coordinate arity mismatch for vertex " + c.label(v));
        std::vector<Scalar> col;
        for (const auto& s : it->second) col.push_back(Scalar::parse(f, s));
        cols.push_back(std::move(col));
    }
    return Realization(l, f, std::move(cols));
}

} // namespace stresslab
