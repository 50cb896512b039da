#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stresslab/rng.hpp"

namespace stresslab {

// Faces are vertex subsets encoded as bitmasks over the dense vertex indices
// of one complex; this caps complexes at 64 vertices, plenty at desk scale.
using Face = std::uint64_t;

inline int face_size(Face f) { return std::popcount(f); }

inline std::vector<int> face_vertices(Face f) {
    std::vector<int> out;
    while (f) {
        out.push_back(std::countr_zero(f));
        f &= f - 1;
    }
    return out;
}

// Abstract simplicial complex given by its facets. The empty set is always a
// face; the void complex (no facets at all) has only the empty face.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets) {
        std::vector<std::string> labels;
        std::map<std::string, int> index;
        std::vector<Face> masks;
        for (const auto& f : facets) {
            Face m = 0;
            for (const auto& v : f) {
                if (v.empty()) throw std::invalid_argument("empty vertex label");
                auto [it, inserted] = index.try_emplace(v, static_cast<int>(labels.size()));
                if (inserted) labels.push_back(v);
                if (labels.size() > 64) throw std::invalid_argument("complexes are capped at 64 vertices");
                m |= Face{1} << it->second;
            }
            masks.push_back(m);
        }
        return SimplicialComplex(std::move(labels), std::move(masks));
    }

    SimplicialComplex(std::vector<std::string> labels, std::vector<Face> facets)
        : labels_(std::move(labels)) {
        if (labels_.size() > 64) throw std::invalid_argument("complexes are capped at 64 vertices");
        // antichain reduction: drop faces contained in others
        std::sort(facets.begin(), facets.end(), [](Face a, Face b) {
            int sa = face_size(a), sb = face_size(b);
            return sa != sb ? sa > sb : a < b;
        });
        for (Face f : facets) {
            bool dominated = false;
            for (Face g : facets_)
                if ((f & g) == f) { dominated = true; break; }
            if (!dominated) facets_.push_back(f);
        }
        std::sort(facets_.begin(), facets_.end());
        facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    }

    int n_vertices() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }

    int vertex_index(const std::string& lbl) const {
        for (int i = 0; i < n_vertices(); ++i)
            if (labels_[i] == lbl) return i;
        throw std::invalid_argument("unknown vertex label: " + lbl);
    }

    const std::vector<Face>& facets() const { return facets_; }

    // dimension; the void complex {∅} has dimension -1
    int dim() const {
        int d = -1;
        for (Face f : facets_) d = std::max(d, face_size(f) - 1);
        return d;
    }

    bool is_pure() const {
        for (Face f : facets_)
            if (face_size(f) - 1 != dim()) return false;
        return true;
    }

    bool is_face(Face f) const {
        for (Face g : facets_)
            if ((f & g) == f) return true;
        return f == 0;
    }

    // all faces with exactly k vertices (dimension k-1); k = 0 gives {∅}
    const std::vector<Face>& faces_with_vertices(int k) const {
        build_faces();
        static const std::vector<Face> none;
        if (k < 0 || k >= static_cast<int>(faces_by_size_.size())) return none;
        return faces_by_size_[k];
    }

    std::vector<Face> all_faces() const {
        build_faces();
        std::vector<Face> out;
        for (const auto& level : faces_by_size_)
            out.insert(out.end(), level.begin(), level.end());
        return out;
    }

    // f_{-1}, f_0, ..., f_{dim}
    std::vector<long long> f_vector() const {
        build_faces();
        std::vector<long long> f;
        for (const auto& level : faces_by_size_) f.push_back(static_cast<long long>(level.size()));
        return f;
    }

    bool contains_subcomplex(const SimplicialComplex& sub) const {
        if (sub.n_vertices() > n_vertices()) return false;
        std::vector<int> map(sub.n_vertices());
        for (int v = 0; v < sub.n_vertices(); ++v) {
            bool found = false;
            for (int w = 0; w < n_vertices(); ++w)
                if (labels_[w] == sub.labels_[v]) { map[v] = w; found = true; break; }
            if (!found) return false;
        }
        for (Face f : sub.facets_) {
            Face g = 0;
            for (int v : face_vertices(f)) g |= Face{1} << map[v];
            if (!is_face(g)) return false;
        }
        return true;
    }

    // star: all faces contained in a facet that also contains sigma
    SimplicialComplex star(Face sigma) const {
        require_face(sigma);
        std::vector<Face> fs;
        for (Face f : facets_)
            if ((sigma & f) == sigma) fs.push_back(f);
        if (fs.empty()) fs.push_back(sigma);  // sigma = ∅ in the void complex
        return SimplicialComplex(labels_, fs);
    }

    // link: {tau \ sigma : sigma ⊆ tau ∈ Δ}, on the same label set
    SimplicialComplex link(Face sigma) const {
        require_face(sigma);
        std::vector<Face> fs;
        for (Face f : facets_)
            if ((sigma & f) == sigma) fs.push_back(f & ~sigma);
        return SimplicialComplex(labels_, fs).drop_unused_vertices();
    }

    // deletion: maximal subcomplex not containing sigma
    SimplicialComplex deletion(Face sigma) const {
        require_face(sigma);
        if (sigma == 0) throw std::invalid_argument("cannot delete the empty face");
        std::vector<Face> fs;
        for (Face f : facets_) {
            if ((sigma & f) != sigma) {
                fs.push_back(f);
                continue;
            }
            // faces of f avoiding at least one vertex of sigma
            for (int v : face_vertices(sigma)) fs.push_back(f & ~(Face{1} << v));
        }
        return SimplicialComplex(labels_, fs);
    }

    // induced subcomplex on a vertex subset
    SimplicialComplex induced(Face vertices) const {
        std::vector<Face> fs;
        for (Face f : facets_) {
            Face g = f & vertices;
            // maximal faces of f inside `vertices` = f ∩ vertices
            fs.push_back(g);
        }
        return SimplicialComplex(labels_, fs);
    }

    // boundary of a pure complex: closure of ridges lying in exactly one facet
    SimplicialComplex boundary() const {
        if (!is_pure()) throw std::invalid_argument("boundary needs a pure complex");
        if (dim() <= 0) return SimplicialComplex(labels_, {});
        std::map<Face, int> ridge_count;
        for (Face f : facets_)
            for (int v : face_vertices(f)) ridge_count[f & ~(Face{1} << v)]++;
        std::vector<Face> fs;
        for (const auto& [ridge, cnt] : ridge_count)
            if (cnt == 1) fs.push_back(ridge);
        return SimplicialComplex(labels_, fs);
    }

    bool has_empty_boundary() const { return boundary().facets().empty(); }

    SimplicialComplex stellar_subdivide(Face sigma, const std::string& new_label = "") const {
        require_face(sigma);
        if (face_size(sigma) < 2)
            throw std::invalid_argument(
                "stellar subdivision at a vertex is the identity; pick a face of positive dimension");
        // (Δ - σ) ∪ ⋃_{τ ∈ ∂ st_σ Δ} v_σ * τ
        std::string lbl = new_label.empty() ? fresh_label(sigma) : new_label;
        std::vector<std::string> labels = labels_;
        labels.push_back(lbl);
        int nv = static_cast<int>(labels.size()) - 1;
        std::vector<Face> fs;
        SimplicialComplex del = deletion(sigma);
        for (Face f : del.facets_) fs.push_back(f);
        SimplicialComplex bd = star(sigma).boundary();
        for (Face t : bd.facets_on_labels(labels_)) fs.push_back(t | (Face{1} << nv));
        return SimplicialComplex(std::move(labels), std::move(fs));
    }

    // free join; overlapping labels on the right are auto-relabeled
    SimplicialComplex join(const SimplicialComplex& other) const {
        std::vector<std::string> labels = labels_;
        std::set<std::string> used(labels_.begin(), labels_.end());
        std::vector<int> remap(other.n_vertices());
        for (int v = 0; v < other.n_vertices(); ++v) {
            std::string lbl = other.labels_[v];
            while (used.count(lbl)) lbl += "'";
            used.insert(lbl);
            remap[v] = static_cast<int>(labels.size());
            labels.push_back(lbl);
        }
        std::vector<Face> fs;
        auto lift = [&](Face f) {
            Face g = 0;
            for (int v : face_vertices(f)) g |= Face{1} << remap[v];
            return g;
        };
        const std::vector<Face> mine = facets_.empty() ? std::vector<Face>{0} : facets_;
        const std::vector<Face> theirs = other.facets_.empty() ? std::vector<Face>{0} : other.facets_;
        for (Face a : mine)
            for (Face b : theirs) fs.push_back(a | lift(b));
        return SimplicialComplex(std::move(labels), std::move(fs));
    }

    SimplicialComplex cone(const std::string& apex) const {
        return join(SimplicialComplex::from_facets({{apex}}));
    }

    SimplicialComplex suspension() const {
        SimplicialComplex s0 = SimplicialComplex::from_facets({{"N"}, {"S"}});
        return join(s0);
    }

    SimplicialComplex iterated_suspension(int i) const {
        SimplicialComplex c = *this;
        for (int j = 0; j < i; ++j) c = c.suspension();
        return c;
    }

    // deterministic text key for memoization
    std::string key() const {
        std::ostringstream os;
        os << n_vertices() << ':';
        for (Face f : facets_) os << f << ',';
        return os.str();
    }

    SimplicialComplex drop_unused_vertices() const {
        Face used = 0;
        for (Face f : facets_) used |= f;
        std::vector<std::string> labels;
        std::vector<int> remap(n_vertices(), -1);
        for (int v = 0; v < n_vertices(); ++v)
            if (used & (Face{1} << v)) {
                remap[v] = static_cast<int>(labels.size());
                labels.push_back(labels_[v]);
            }
        std::vector<Face> fs;
        for (Face f : facets_) {
            Face g = 0;
            for (int v : face_vertices(f)) g |= Face{1} << remap[v];
            fs.push_back(g);
        }
        return SimplicialComplex(std::move(labels), std::move(fs));
    }

    Face face_of_labels(const std::vector<std::string>& verts) const {
        Face f = 0;
        for (const auto& v : verts) f |= Face{1} << vertex_index(v);
        return f;
    }

private:
    void require_face(Face f) const {
        if (!is_face(f)) throw std::invalid_argument("not a face of the complex");
    }

    std::string fresh_label(Face sigma) const {
        std::string lbl = "s";
        for (int v : face_vertices(sigma)) lbl += "_" + labels_[v];
        std::set<std::string> used(labels_.begin(), labels_.end());
        while (used.count(lbl)) lbl += "'";
        return lbl;
    }

    // facets re-expressed as masks over a (prefix) label vector
    std::vector<Face> facets_on_labels(const std::vector<std::string>& target) const {
        std::map<std::string, int> index;
        for (int i = 0; i < static_cast<int>(target.size()); ++i) index[target[i]] = i;
        std::vector<Face> out;
        for (Face f : facets_) {
            Face g = 0;
            for (int v : face_vertices(f)) g |= Face{1} << index.at(labels_[v]);
            out.push_back(g);
        }
        return out;
    }

    void build_faces() const {
        if (!faces_by_size_.empty() || facets_.empty()) {
            if (faces_by_size_.empty()) faces_by_size_ = {{Face{0}}};
            return;
        }
        std::set<Face> seen;
        for (Face f : facets_) {
            // enumerate all subsets of f
            Face sub = f;
            for (;;) {
                seen.insert(sub);
                if (sub == 0) break;
                sub = (sub - 1) & f;
            }
        }
        faces_by_size_.assign(dim() + 2, {});
        for (Face f : seen) faces_by_size_[face_size(f)].push_back(f);
        for (auto& level : faces_by_size_) std::sort(level.begin(), level.end());
    }

    std::vector<std::string> labels_;
    std::vector<Face> facets_;
    mutable std::vector<std::vector<Face>> faces_by_size_;
};

// relative pair (Δ, Γ) with Γ ⊆ Δ, sharing Δ's vertex indexing
struct RelativeComplex {
    SimplicialComplex total;
    std::vector<Face> sub_facets;  // facets of Γ as masks over total's vertices

    RelativeComplex(SimplicialComplex t, std::vector<Face> gamma)
        : total(std::move(t)), sub_facets(std::move(gamma)) {
        for (Face f : sub_facets)
            if (!total.is_face(f))
                throw std::invalid_argument("relative pair: Γ is not a subcomplex of Δ");
    }

    bool in_sub(Face f) const {
        for (Face g : sub_facets)
            if ((f & g) == f) return true;
        return false;
    }
};

// open star St°_σ = (St_σ Δ, St_σ Δ - σ)
inline RelativeComplex open_star(const SimplicialComplex& c, Face sigma) {
    SimplicialComplex st = c.star(sigma);
    if (sigma == 0) throw std::invalid_argument("open star needs a nonempty face");
    SimplicialComplex del = st.deletion(sigma);
    return RelativeComplex(st, del.facets());
}

// ---- generators ----

// boundary of the d-simplex: a (d-1)-sphere on d+1 vertices
inline SimplicialComplex boundary_simplex(int d) {
    if (d < 1) throw std::invalid_argument("boundary_simplex needs d >= 1");
    std::vector<std::vector<std::string>> facets;
    for (int skip = 0; skip < d + 1; ++skip) {
        std::vector<std::string> f;
        for (int v = 0; v < d + 1; ++v)
            if (v != skip) f.push_back(std::to_string(v + 1));
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(facets);
}

// boundary of the d-cross-polytope: vertices i / i' are antipodal pairs
inline SimplicialComplex boundary_crosspolytope(int d) {
    if (d < 1) throw std::invalid_argument("boundary_crosspolytope needs d >= 1");
    std::vector<std::vector<std::string>> facets;
    for (int signs = 0; signs < (1 << d); ++signs) {
        std::vector<std::string> f;
        for (int i = 0; i < d; ++i)
            f.push_back((signs >> i & 1) ? std::to_string(i + 1) + "'" : std::to_string(i + 1));
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(facets);
}

// Gale evenness: S ⊆ [n], |S| = d, is a facet of C(n,d) iff any two elements
// outside S have an even number of elements of S strictly between them.
inline bool gale_even(const std::vector<int>& sel, int n) {
    std::vector<char> in(n + 1, 0);
    for (int s : sel) in[s] = 1;
    std::vector<int> outside;
    for (int i = 1; i <= n; ++i)
        if (!in[i]) outside.push_back(i);
    for (std::size_t a = 0; a < outside.size(); ++a)
        for (std::size_t b = a + 1; b < outside.size(); ++b) {
            int cnt = 0;
            for (int i = outside[a] + 1; i < outside[b]; ++i) cnt += in[i];
            if (cnt % 2) return false;
        }
    return true;
}

inline SimplicialComplex cyclic_polytope_boundary(int n, int d) {
    if (!(n > d && d >= 2)) throw std::invalid_argument("cyclic polytope needs n > d >= 2");
    std::vector<std::vector<std::string>> facets;
    std::vector<int> sel(d);
    // enumerate d-subsets of {1..n}
    for (int i = 0; i < d; ++i) sel[i] = i + 1;
    for (;;) {
        if (gale_even(sel, n)) {
            std::vector<std::string> f;
            for (int s : sel) f.push_back(std::to_string(s));
            facets.push_back(f);
        }
        int i = d - 1;
        while (i >= 0 && sel[i] == n - (d - 1 - i)) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < d; ++j) sel[j] = sel[j - 1] + 1;
    }
    return SimplicialComplex::from_facets(facets);
}

// the 7-vertex Möbius–Kühnel torus: triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7
inline SimplicialComplex moebius_torus_7() {
    std::vector<std::vector<std::string>> facets;
    auto lbl = [](int v) { return std::to_string((v % 7) + 1); };
    for (int i = 0; i < 7; ++i) {
        facets.push_back({lbl(i), lbl(i + 1), lbl(i + 3)});
        facets.push_back({lbl(i), lbl(i + 2), lbl(i + 3)});
    }
    return SimplicialComplex::from_facets(facets);
}

// stacked d-sphere: ∂Δ^{d+1} with `steps` random facet subdivisions
inline SimplicialComplex stacked_sphere(int d, int steps, std::uint64_t seed) {
    SimplicialComplex c = boundary_simplex(d + 1);
    Rng rng(seed);
    for (int i = 0; i < steps; ++i) {
        const auto& fs = c.facets();
        Face pick = fs[rng.uint_below(fs.size())];
        c = c.stellar_subdivide(pick, "n" + std::to_string(i + 1));
    }
    return c;
}

// standard 12-vertex icosahedron boundary
inline SimplicialComplex icosahedron() {
    return SimplicialComplex::from_facets({
        {"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "6", "2"},
        {"2", "3", "7"}, {"3", "4", "8"}, {"4", "5", "9"}, {"5", "6", "10"}, {"6", "2", "11"},
        {"3", "7", "8"}, {"4", "8", "9"}, {"5", "9", "10"}, {"6", "10", "11"}, {"2", "11", "7"},
        {"7", "8", "12"}, {"8", "9", "12"}, {"9", "10", "12"}, {"10", "11", "12"}, {"11", "7", "12"}});
}

inline SimplicialComplex generate(const std::string& kind, const std::vector<std::string>& params,
                                  std::uint64_t seed = 0) {
    auto arg = [&](std::size_t i) {
        if (i >= params.size()) throw std::invalid_argument("missing parameter for " + kind);
        return std::stoi(params[i]);
    };
    if (kind == "boundary_simplex") return boundary_simplex(arg(0));
    if (kind == "boundary_crosspolytope") return boundary_crosspolytope(arg(0));
    if (kind == "cyclic_polytope_boundary" || kind == "cyclic")
        return cyclic_polytope_boundary(arg(0), arg(1));
    if (kind == "moebius_torus_7") return moebius_torus_7();
    if (kind == "icosahedron") return icosahedron();
    if (kind == "stacked_sphere") return stacked_sphere(arg(0), arg(1), seed);
    throw std::invalid_argument("unknown generator kind: " + kind);
}

} // namespace stresslab
