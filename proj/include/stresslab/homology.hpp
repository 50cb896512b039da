#pragma once

#include <map>
#include <vector>

#include "stresslab/complex.hpp"
#include "stresslab/subspace.hpp"

namespace stresslab {

// Simplicial boundary map ∂: C_k -> C_{k-1} (faces with k+1 resp. k vertices),
// vertices ordered ascending, usual alternating signs. k = 0 is the
// augmentation onto the empty face, so homology comes out reduced.
inline SparseMatrix boundary_matrix(const SimplicialComplex& c, int k, const Field& f) {
    const auto& top = c.faces_with_vertices(k + 1);
    const auto& bot = c.faces_with_vertices(k);
    std::map<Face, int> bot_index;
    for (int i = 0; i < static_cast<int>(bot.size()); ++i) bot_index[bot[i]] = i;
    SparseMatrix m(static_cast<int>(bot.size()), static_cast<int>(top.size()), f);
    for (int j = 0; j < static_cast<int>(top.size()); ++j) {
        auto verts = face_vertices(top[j]);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            Face sub = top[j] & ~(Face{1} << verts[i]);
            Scalar sign = Scalar::integer(f, (i % 2 == 0) ? 1 : -1);
            m.add(bot_index.at(sub), j, sign);
        }
    }
    return m;
}

// Reduced Betti numbers b̃_{-1}, b̃_0, ..., b̃_{dim}.
inline std::vector<long long> betti(const SimplicialComplex& c, const Field& f) {
    int d = c.dim();
    std::vector<long long> b(d + 2, 0);
    std::vector<int> ranks(d + 2, 0);  // ranks[k+1] = rank ∂_k
    for (int k = 0; k <= d; ++k) ranks[k + 1] = rank(boundary_matrix(c, k, f));
    for (int k = -1; k <= d; ++k) {
        long long chains = static_cast<long long>(c.faces_with_vertices(k + 1).size());
        long long rk_out = ranks[k + 1];
        long long rk_in = (k + 2 < static_cast<int>(ranks.size())) ? ranks[k + 2] : 0;
        b[k + 1] = chains - rk_out - rk_in;
    }
    return b;
}

inline long long euler_characteristic(const SimplicialComplex& c) {
    long long chi = 0;
    auto f = c.f_vector();
    for (std::size_t k = 1; k < f.size(); ++k) chi += (k % 2 ? 1 : -1) * f[k];
    return chi;
}

inline bool is_sphere_betti(const std::vector<long long>& b, int dim) {
    for (int k = -1; k <= dim; ++k) {
        long long want = (k == dim) ? 1 : 0;
        if (b[k + 1] != want) return false;
    }
    return true;
}

// closed pseudomanifold: pure, every ridge in exactly two facets,
// facet-ridge graph connected
inline bool is_closed_pseudomanifold(const SimplicialComplex& c) {
    if (c.dim() < 1 || !c.is_pure()) return false;
    std::map<Face, std::vector<int>> ridge_facets;
    const auto& fs = c.facets();
    for (int i = 0; i < static_cast<int>(fs.size()); ++i)
        for (int v : face_vertices(fs[i]))
            ridge_facets[fs[i] & ~(Face{1} << v)].push_back(i);
    for (const auto& [r, owners] : ridge_facets)
        if (owners.size() != 2) return false;
    std::vector<char> seen(fs.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int v : face_vertices(fs[i]))
            for (int j : ridge_facets[fs[i] & ~(Face{1} << v)])
                if (!seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
    }
    for (char s : seen)
        if (!s) return false;
    return true;
}

// homology manifold: the link of every nonempty face has the reduced homology
// of a sphere of complementary dimension
inline bool is_homology_manifold(const SimplicialComplex& c, const Field& f) {
    int d = c.dim();
    if (d < 0) return false;
    for (int k = 1; k <= d + 1; ++k) {
        for (Face sigma : c.faces_with_vertices(k)) {
            SimplicialComplex lk = c.link(sigma);
            int want_dim = d - k;
            if (lk.dim() != want_dim) return false;
            if (!is_sphere_betti(betti(lk, f), want_dim)) return false;
        }
    }
    return true;
}

inline bool is_homology_sphere(const SimplicialComplex& c, const Field& f) {
    if (c.dim() < 0) return false;
    if (!is_homology_manifold(c, f)) return false;
    return is_sphere_betti(betti(c, f), c.dim());
}

// Consistent facet orientation of a closed pseudomanifold: the top homology
// cycle, normalized to +1 on the lexicographically least facet. Empty when
// the complex is not an orientable closed pseudomanifold over f.
inline std::vector<Scalar> orientation_cycle(const SimplicialComplex& c, const Field& f) {
    if (!is_closed_pseudomanifold(c)) return {};
    int d = c.dim();
    Subspace top = kernel(boundary_matrix(c, d, f));
    if (top.dim() != 1) return {};
    const auto& facets = c.faces_with_vertices(d + 1);
    std::vector<Scalar> w = spv::to_dense(top.basis()[0], static_cast<int>(facets.size()), f);
    if (w[0].is_zero()) return {};
    Scalar norm = w[0].inv();
    for (auto& x : w) {
        x *= norm;
        if (!(x.is_one() || (-x).is_one())) return {};
    }
    return w;
}

} // namespace stresslab
