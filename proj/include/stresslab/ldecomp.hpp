#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stresslab/complex.hpp"

namespace stresslab {

namespace detail {

inline bool is_simplex_complex(const SimplicialComplex& c) {
    return c.facets().size() <= 1;
}

// Backtracking search for an L-decomposition, memoized on the labeled facet
// key. A complex qualifies if it is a simplex, or some vertex v has
//   - deletion of v L-decomposable of the same dimension, and
//   - the boundary of lk(v) empty or L-decomposable of one dimension less.
inline bool l_decomposable(const SimplicialComplex& c, std::map<std::string, bool>& memo,
                           std::vector<std::string>* order) {
    if (is_simplex_complex(c)) return true;
    if (!c.is_pure()) return false;
    std::string key = c.key();
    auto it = memo.find(key);
    if (it != memo.end() && !(it->second && order)) return it->second;
    int d = c.dim();
    for (int v = 0; v < c.n_vertices(); ++v) {
        Face vf = Face{1} << v;
        if (!c.is_face(vf)) continue;
        SimplicialComplex del = c.deletion(vf);
        if (del.dim() != d) continue;
        SimplicialComplex lkb = c.link(vf).boundary();
        bool link_ok = lkb.facets().empty() ||
                       (lkb.dim() == d - 2 && l_decomposable(lkb, memo, nullptr));
        if (!link_ok) continue;
        std::vector<std::string> tail;
        if (l_decomposable(del, memo, order ? &tail : nullptr)) {
            if (order) {
                order->clear();
                order->push_back(c.label(v));
                order->insert(order->end(), tail.begin(), tail.end());
            }
            memo[key] = true;
            return true;
        }
    }
    memo[key] = false;
    return false;
}

} // namespace detail

// Returns the vertex removal order of an L-decomposition, or nullopt.
inline std::optional<std::vector<std::string>> l_decomposition(const SimplicialComplex& c) {
    if (!c.is_pure()) throw std::invalid_argument("l_decomposition needs a pure complex");
    std::map<std::string, bool> memo;
    std::vector<std::string> order;
    if (detail::l_decomposable(c, memo, &order)) return order;
    return std::nullopt;
}

} // namespace stresslab
