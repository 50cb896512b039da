#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "stresslab/complex.hpp"
#include "stresslab/realization.hpp"

namespace stresslab {

// Monomial in the face-ring variables: sorted (vertex, exponent>0) pairs.
struct Monomial {
    std::vector<std::pair<int, int>> exps;

    int degree() const {
        int d = 0;
        for (auto& [v, e] : exps) d += e;
        return d;
    }

    Face support() const {
        Face f = 0;
        for (auto& [v, e] : exps) f |= Face{1} << v;
        return f;
    }

    bool squarefree() const {
        for (auto& [v, e] : exps)
            if (e > 1) return false;
        return true;
    }

    long long factorial_weight() const {  // ∏ e_v!
        long long w = 1;
        for (auto& [v, e] : exps)
            for (int i = 2; i <= e; ++i) w *= i;
        return w;
    }

    Monomial times_vertex(int v) const {
        Monomial m = *this;
        for (auto& [w, e] : m.exps)
            if (w == v) {
                ++e;
                return m;
            }
        m.exps.emplace_back(v, 1);
        std::sort(m.exps.begin(), m.exps.end());
        return m;
    }

    // partial derivative direction: exponent of v drops by one; second value
    // is the old exponent (the differentiation coefficient)
    std::pair<Monomial, int> d_vertex(int v) const {
        Monomial m;
        int coeff = 0;
        for (auto& [w, e] : exps) {
            if (w == v) {
                coeff = e;
                if (e > 1) m.exps.emplace_back(w, e - 1);
            } else {
                m.exps.emplace_back(w, e);
            }
        }
        return {m, coeff};
    }

    Monomial operator*(const Monomial& o) const {
        Monomial m;
        std::size_t i = 0, j = 0;
        while (i < exps.size() || j < o.exps.size()) {
            if (j == o.exps.size() || (i < exps.size() && exps[i].first < o.exps[j].first))
                m.exps.push_back(exps[i++]);
            else if (i == exps.size() || o.exps[j].first < exps[i].first)
                m.exps.push_back(o.exps[j++]);
            else {
                m.exps.emplace_back(exps[i].first, exps[i].second + o.exps[j].second);
                ++i, ++j;
            }
        }
        return m;
    }

    auto operator<=>(const Monomial&) const = default;

    std::string str(const SimplicialComplex& c) const {
        if (exps.empty()) return "1";
        std::string s;
        for (auto& [v, e] : exps) {
            if (!s.empty()) s += "*";
            s += "x_" + c.label(v);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

// Degree-k monomials whose support is a face, in a fixed deterministic order.
class MonomialBasis {
public:
    MonomialBasis() = default;

    MonomialBasis(const SimplicialComplex& c, int k, long long cap = 500000) {
        if (k == 0) {
            list_.push_back(Monomial{});
        } else {
            for (int s = 1; s <= std::min(k, c.dim() + 1); ++s) {
                // compositions of k into s positive parts = (s-1)-subsets of
                // the k-1 gap positions (stars and bars)
                std::vector<std::vector<int>> comps;
                std::vector<int> bars(s - 1);
                for (int i = 0; i < s - 1; ++i) bars[i] = i + 1;
                for (;;) {
                    std::vector<int> comp;
                    int prev = 0;
                    for (int b : bars) {
                        comp.push_back(b - prev);
                        prev = b;
                    }
                    comp.push_back(k - prev);
                    comps.push_back(std::move(comp));
                    int i = s - 2;
                    while (i >= 0 && bars[i] == k - 1 - (s - 2 - i)) --i;
                    if (i < 0) break;
                    ++bars[i];
                    for (int j = i + 1; j < s - 1; ++j) bars[j] = bars[j - 1] + 1;
                }
                for (Face f : c.faces_with_vertices(s)) {
                    auto verts = face_vertices(f);
                    for (const auto& comp : comps) {
                        Monomial m;
                        for (int i = 0; i < s; ++i) m.exps.emplace_back(verts[i], comp[i]);
                        list_.push_back(std::move(m));
                        if (static_cast<long long>(list_.size()) > cap)
                            throw std::runtime_error(
                                "monomial cap exceeded in degree " + std::to_string(k) +
                                " (limit " + std::to_string(cap) + ")");
                    }
                }
            }
            std::sort(list_.begin(), list_.end());
        }
        for (int i = 0; i < static_cast<int>(list_.size()); ++i) index_[list_[i]] = i;
    }

    int size() const { return static_cast<int>(list_.size()); }
    const Monomial& at(int i) const { return list_.at(i); }
    const std::vector<Monomial>& list() const { return list_; }

    int index_of(const Monomial& m) const {
        auto it = index_.find(m);
        return it == index_.end() ? -1 : it->second;
    }

private:
    std::vector<Monomial> list_;
    std::map<Monomial, int> index_;
};

// Columns of multiplication by θ_i from span(M_{k-1}) to span(M_k): the
// product monomial survives only when its support stays a face.
inline std::vector<SpVec> theta_multiplication_columns(const SimplicialComplex& c,
                                                       const Realization& r,
                                                       const MonomialBasis& from,
                                                       const MonomialBasis& to) {
    std::vector<SpVec> cols;
    const Field& f = r.field();
    for (int i = 0; i < r.l(); ++i) {
        for (int m = 0; m < from.size(); ++m) {
            SpVec col;
            for (int v = 0; v < c.n_vertices(); ++v) {
                const Scalar& coef = r.coord(v)[i];
                if (coef.is_zero()) continue;
                Monomial prod = from.at(m).times_vertex(v);
                int idx = to.index_of(prod);
                if (idx >= 0) col.emplace_back(idx, coef);
            }
            spv::normalize(col);
            cols.push_back(std::move(col));
        }
    }
    return cols;
}

// Stacked differential action of Θ on span(M_k): block i holds θ_i(∂) into
// coordinates over M_{k-1}; stresses in degree k are its kernel.
inline SparseMatrix theta_differential_matrix(const SimplicialComplex& c, const Realization& r,
                                              const MonomialBasis& from,  // degree k
                                              const MonomialBasis& to) {  // degree k-1
    const Field& f = r.field();
    SparseMatrix m(r.l() * to.size(), from.size(), f);
    for (int j = 0; j < from.size(); ++j) {
        SpVec col;
        for (auto& [v, e] : from.at(j).exps) {
            auto [dm, coeff] = from.at(j).d_vertex(v);
            int idx = to.index_of(dm);
            if (idx < 0) continue;
            for (int i = 0; i < r.l(); ++i) {
                const Scalar& coef = r.coord(v)[i];
                if (coef.is_zero()) continue;
                col.emplace_back(i * to.size() + idx, Scalar::integer(f, coeff) * coef);
            }
        }
        spv::normalize(col);
        m.set_column(j, std::move(col));
    }
    return m;
}

} // namespace stresslab
