#pragma once
#include <algorithm>
#include <vector>

namespace skewcliff {

// Dense matrix over an exact field. F needs is_zero(), +, -, *, unary -, inv().
template <class F>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<F> a;

    Mat() = default;
    Mat(int r, int c, const F& zero) : rows(r), cols(c), a(size_t(r) * c, zero) {}
    F& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    const F& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
};

// In-place reduced row echelon form; returns pivot column indices.
// Pivot choice is the first nonzero entry scanning down, so the result is
// deterministic for a given input.
template <class F>
std::vector<int> rref(Mat<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            std::swap_ranges(m.a.begin() + size_t(r) * m.cols,
                             m.a.begin() + size_t(r + 1) * m.cols,
                             m.a.begin() + size_t(pr) * m.cols);
        F piv_inv = m(r, c).inv();
        for (int j = c; j < m.cols; ++j) m(r, j) = m(r, j) * piv_inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            F f = m(i, c);
            for (int j = c; j < m.cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank(Mat<F> m) {
    return static_cast<int>(rref(m).size());
}

// Basis of the right null space {v : m v = 0}, one vector per free column in
// ascending column order.
template <class F>
std::vector<std::vector<F>> nullspace(Mat<F> m, const F& zero, const F& one) {
    auto pivots = rref(m);
    std::vector<int> pivot_of_col(m.cols, -1);
    for (size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = int(r);
    std::vector<std::vector<F>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<F> v(m.cols, zero);
        v[c] = one;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(int(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Whether v lies in the row space of an already-reduced matrix.
template <class F>
bool in_rowspace(const Mat<F>& reduced, const std::vector<int>& pivots,
                 std::vector<F> v) {
    for (size_t r = 0; r < pivots.size(); ++r) {
        const F& f = v[pivots[r]];
        if (f.is_zero()) continue;
        F c = f;
        for (int j = 0; j < reduced.cols; ++j) v[j] = v[j] - c * reduced(int(r), j);
    }
    for (const F& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace skewcliff
