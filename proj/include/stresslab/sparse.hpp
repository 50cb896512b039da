#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "stresslab/scalar.hpp"

namespace stresslab {

// Sparse vector: (index, value) pairs, sorted by index, no zeros stored.
using SpVec = std::vector<std::pair<int, Scalar>>;

namespace spv {

inline void normalize(SpVec& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SpVec out;
    out.reserve(v.size());
    for (auto& [i, x] : v) {
        if (!out.empty() && out.back().first == i) out.back().second += x;
        else out.emplace_back(i, x);
    }
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    v = std::move(out);
}

inline std::optional<Scalar> at(const SpVec& v, int idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const auto& e, int i) { return e.first < i; });
    if (it != v.end() && it->first == idx) return it->second;
    return std::nullopt;
}

// v += c*w
inline void axpy(SpVec& v, const Scalar& c, const SpVec& w) {
    if (c.is_zero() || w.empty()) return;
    SpVec out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(v[i++]);
        } else if (i == v.size() || w[j].first < v[i].first) {
            Scalar t = c * w[j].second;
            if (!t.is_zero()) out.emplace_back(w[j].first, std::move(t));
            ++j;
        } else {
            Scalar t = v[i].second + c * w[j].second;
            if (!t.is_zero()) out.emplace_back(v[i].first, std::move(t));
            ++i, ++j;
        }
    }
    v = std::move(out);
}

inline void scale(SpVec& v, const Scalar& c) {
    for (auto& [i, x] : v) x *= c;
}

inline SpVec from_dense(const std::vector<Scalar>& d) {
    SpVec v;
    for (int i = 0; i < static_cast<int>(d.size()); ++i)
        if (!d[i].is_zero()) v.emplace_back(i, d[i]);
    return v;
}

inline std::vector<Scalar> to_dense(const SpVec& v, int n, const Field& f) {
    std::vector<Scalar> d(n, Scalar::zero(f));
    for (auto& [i, x] : v) d[i] = x;
    return d;
}

inline Scalar dot(const SpVec& a, const SpVec& b, const Field& f) {
    Scalar s = Scalar::zero(f);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) ++i;
        else if (b[j].first < a[i].first) ++j;
        else s += a[i++].second * b[j++].second;
    }
    return s;
}

} // namespace spv

struct Triplet {
    int row;
    int col;
    Scalar value;
};

class SparseMatrix {
public:
    SparseMatrix(int rows, int cols, Field f)
        : rows_(rows), cols_(cols), f_(f), data_(cols) {}

    static SparseMatrix identity(int n, const Field& f) {
        SparseMatrix m(n, n, f);
        for (int i = 0; i < n; ++i) m.data_[i] = {{i, Scalar::one(f)}};
        return m;
    }

    static SparseMatrix from_triplets(int rows, int cols, const Field& f,
                                      const std::vector<Triplet>& ts) {
        SparseMatrix m(rows, cols, f);
        for (const auto& t : ts) m.add(t.row, t.col, t.value);
        for (auto& c : m.data_) spv::normalize(c);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return f_; }

    long long nnz() const {
        long long n = 0;
        for (const auto& c : data_) n += static_cast<long long>(c.size());
        return n;
    }

    void add(int r, int c, const Scalar& v) {
        check_pos(r, c);
        require_same_field(f_, v.field());
        if (v.is_zero()) return;
        data_[c].emplace_back(r, v);
        dirty_ = true;
    }

    void set_column(int c, SpVec v) {
        spv::normalize(v);
        for (auto& [r, x] : v) check_pos(r, c);
        data_[c] = std::move(v);
    }

    const SpVec& column(int c) const {
        const_cast<SparseMatrix*>(this)->tidy();
        return data_[c];
    }

    Scalar entry(int r, int c) const {
        auto v = spv::at(column(c), r);
        return v ? *v : Scalar::zero(f_);
    }

    SparseMatrix transpose() const {
        SparseMatrix t(cols_, rows_, f_);
        for (int c = 0; c < cols_; ++c)
            for (const auto& [r, x] : column(c)) t.data_[r].emplace_back(c, x);
        for (auto& col : t.data_) spv::normalize(col);
        return t;
    }

    SparseMatrix operator*(const SparseMatrix& o) const {
        require_same_field(f_, o.f_);
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        SparseMatrix r(rows_, o.cols_, f_);
        for (int c = 0; c < o.cols_; ++c) r.set_column(c, apply(o.column(c)));
        return r;
    }

    SpVec apply(const SpVec& x) const {
        SpVec y;
        for (const auto& [c, v] : x) spv::axpy(y, v, column(c));
        return y;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
        return spv::to_dense(apply(spv::from_dense(x)), rows_, f_);
    }

    // [this | o]
    SparseMatrix hstack(const SparseMatrix& o) const {
        require_same_field(f_, o.f_);
        if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
        SparseMatrix r(rows_, cols_ + o.cols_, f_);
        for (int c = 0; c < cols_; ++c) r.data_[c] = column(c);
        for (int c = 0; c < o.cols_; ++c) r.data_[cols_ + c] = o.column(c);
        return r;
    }

    // [this; o]
    SparseMatrix vstack(const SparseMatrix& o) const {
        require_same_field(f_, o.f_);
        if (cols_ != o.cols_) throw std::invalid_argument("vstack col mismatch");
        SparseMatrix r(rows_ + o.rows_, cols_, f_);
        for (int c = 0; c < cols_; ++c) {
            SpVec v = column(c);
            for (const auto& [i, x] : o.column(c)) v.emplace_back(rows_ + i, x);
            r.data_[c] = std::move(v);
        }
        return r;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int c = 0; c < cols_; ++c)
            for (const auto& [r, x] : column(c))
                if (entry(c, r) != x) return false;
        return true;
    }

    bool operator==(const SparseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || f_ != o.f_) return false;
        for (int c = 0; c < cols_; ++c)
            if (column(c) != o.column(c)) return false;
        return true;
    }

private:
    void check_pos(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix position out of bounds");
    }

    void tidy() {
        if (!dirty_) return;
        for (auto& c : data_) spv::normalize(c);
        dirty_ = false;
    }

    int rows_, cols_;
    Field f_;
    std::vector<SpVec> data_;
    bool dirty_ = false;
};

namespace detail {

// Dense Gaussian elimination; used below the sparsity cutoff.
inline int dense_rank(const SparseMatrix& m) {
    const Field& f = m.field();
    std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols(), Scalar::zero(f)));
    for (int c = 0; c < m.cols(); ++c)
        for (const auto& [r, x] : m.column(c)) a[r][c] = x;
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int piv = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (!a[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        Scalar inv = a[rank][c].inv();
        for (int j = c; j < m.cols(); ++j) a[rank][j] *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            Scalar t = a[r][c];
            for (int j = c; j < m.cols(); ++j) a[r][j] -= t * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Markowitz-pivoted sparse column elimination. Optionally tracks the column
// transformation below `rows` (augmented identity) to recover the kernel.
struct SparseElim {
    int rows;
    Field f;
    std::vector<SpVec> cols;   // augmented columns: indices < rows are matrix rows
    explicit SparseElim(const SparseMatrix& m, bool track)
        : rows(m.rows()), f(m.field()) {
        cols.reserve(m.cols());
        for (int c = 0; c < m.cols(); ++c) {
            SpVec v = m.column(c);
            if (track) v.emplace_back(rows + c, Scalar::one(f));
            cols.push_back(std::move(v));
        }
    }

    // Returns rank; on exit, columns whose matrix part is zero hold kernel
    // combinations in their augmented tail.
    int eliminate() {
        std::vector<char> col_done(cols.size(), 0);
        std::vector<int> row_count(rows, 0), col_count(cols.size(), 0);
        std::vector<char> row_done(rows, 0);
        auto recount = [&] {
            std::fill(row_count.begin(), row_count.end(), 0);
            for (std::size_t c = 0; c < cols.size(); ++c) {
                col_count[c] = 0;
                if (col_done[c]) continue;
                for (const auto& [r, x] : cols[c])
                    if (r < rows && !row_done[r]) {
                        ++row_count[r];
                        ++col_count[c];
                    }
            }
        };
        recount();
        int rank = 0;
        for (;;) {
            // pick pivot minimizing the Markowitz count, ties to smallest (row, col)
            long long best = -1;
            int br = -1, bc = -1;
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (col_done[c] || col_count[c] == 0) continue;
                for (const auto& [r, x] : cols[c]) {
                    if (r >= rows || row_done[r]) continue;
                    long long cost = static_cast<long long>(row_count[r] - 1) * (col_count[c] - 1);
                    if (best < 0 || cost < best ||
                        (cost == best && (r < br || (r == br && static_cast<int>(c) < bc)))) {
                        best = cost;
                        br = r;
                        bc = static_cast<int>(c);
                    }
                }
            }
            if (bc < 0) break;
            Scalar pv = *spv::at(cols[bc], br);
            spv::scale(cols[bc], pv.inv());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (static_cast<int>(c) == bc || col_done[c]) continue;
                auto e = spv::at(cols[c], br);
                if (e) spv::axpy(cols[c], -*e, cols[bc]);
            }
            col_done[bc] = 1;
            row_done[br] = 1;
            ++rank;
            recount();
        }
        return rank;
    }
};

} // namespace detail

// Exact rank over the matrix's field. Dense fallback below 200x200, Markowitz
// pivoting on larger sparse inputs.
inline int rank(const SparseMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.rows() < 200 && m.cols() < 200) return detail::dense_rank(m);
    detail::SparseElim e(m, false);
    return e.eliminate();
}

// Canonical reduced column echelon accumulator. Pivot rows carry unit entries
// and are eliminated from all other columns; the resulting basis of the span
// is unique, so representation equality decides subspace equality.
class Echelon {
public:
    Echelon(int rows, Field f) : rows_(rows), f_(f) {}

    int rows() const { return rows_; }
    const Field& field() const { return f_; }
    int rank() const { return static_cast<int>(cols_.size()); }

    SpVec reduce(SpVec v) const {
        for (;;) {
            bool changed = false;
            SpVec out = v;
            for (const auto& [r, x] : v) {
                auto it = pivot2col_.find(r);
                if (it != pivot2col_.end()) {
                    spv::axpy(out, -x, cols_[it->second]);
                    changed = true;
                }
            }
            v = std::move(out);
            if (!changed) return v;
        }
    }

    // Insert a vector; returns its pivot row, or -1 if it reduces to zero.
    int insert(SpVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return -1;
        int piv = v.front().first;
        spv::scale(v, v.front().second.inv());
        for (auto& col : cols_) {
            auto e = spv::at(col, piv);
            if (e) spv::axpy(col, -*e, v);
        }
        pivot2col_[piv] = static_cast<int>(cols_.size());
        cols_.push_back(std::move(v));
        return piv;
    }

    bool contains(const SpVec& v) const { return reduce(v).empty(); }

    std::vector<int> pivot_rows() const {
        std::vector<int> p;
        p.reserve(pivot2col_.size());
        for (const auto& [r, c] : pivot2col_) p.push_back(r);
        return p;
    }

    std::vector<int> nonpivot_rows() const {
        std::vector<int> out;
        auto piv = pivot_rows();
        std::size_t j = 0;
        for (int r = 0; r < rows_; ++r) {
            if (j < piv.size() && piv[j] == r) ++j;
            else out.push_back(r);
        }
        return out;
    }

    // Columns ordered by pivot row.
    std::vector<SpVec> basis() const {
        std::vector<SpVec> b;
        b.reserve(cols_.size());
        for (const auto& [r, c] : pivot2col_) b.push_back(cols_[c]);
        return b;
    }

private:
    int rows_;
    Field f_;
    std::vector<SpVec> cols_;
    std::map<int, int> pivot2col_;
};

} // namespace stresslab
