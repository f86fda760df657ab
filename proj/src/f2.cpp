#include "mp/f2.hpp"

#include <algorithm>
#include <stdexcept>

namespace mp {

F2Matrix::F2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
      bits_(std::size_t(rows) * words_per_row_, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("F2Matrix: negative size");
}

bool F2Matrix::get(int r, int c) const {
    return (bits_[std::size_t(r) * words_per_row_ + c / 64] >> (c % 64)) & 1u;
}

void F2Matrix::set(int r, int c, bool value) {
    auto& w = bits_[std::size_t(r) * words_per_row_ + c / 64];
    std::uint64_t mask = std::uint64_t(1) << (c % 64);
    if (value) w |= mask; else w &= ~mask;
}

void F2Matrix::xor_row(int dst, int src) {
    auto* d = &bits_[std::size_t(dst) * words_per_row_];
    auto* s = &bits_[std::size_t(src) * words_per_row_];
    for (int i = 0; i < words_per_row_; ++i) d[i] ^= s[i];
}

void F2Matrix::swap_rows(int a, int b) {
    auto* pa = &bits_[std::size_t(a) * words_per_row_];
    auto* pb = &bits_[std::size_t(b) * words_per_row_];
    for (int i = 0; i < words_per_row_; ++i) std::swap(pa[i], pb[i]);
}

namespace {

// Row echelon form in place; returns pivot column per eliminated row.
std::vector<int> eliminate(F2Matrix& m) {
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.get(r, col)) { pivot = r; break; }
        if (pivot < 0) continue;
        m.swap_rows(row, pivot);
        for (int r = 0; r < m.rows(); ++r)
            if (r != row && m.get(r, col)) m.xor_row(r, row);
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace

int f2_rank(const F2Matrix& m) {
    F2Matrix tmp = m;
    return int(eliminate(tmp).size());
}

std::optional<std::vector<int>> f2_kernel_vector(const F2Matrix& m) {
    F2Matrix red = m;
    std::vector<int> pivot_cols = eliminate(red);
    if (int(pivot_cols.size()) == m.cols()) return std::nullopt;

    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivot_cols) is_pivot[c] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    // Basis vector: free column set to 1, pivot columns from the reduced rows.
    std::vector<int> x(m.cols(), 0);
    x[free_col] = 1;
    for (int r = 0; r < int(pivot_cols.size()); ++r)
        if (red.get(r, free_col)) x[pivot_cols[r]] = 1;
    return x;
}

F2Matrix incidence_matrix(const BipartiteBase& b) {
    F2Matrix m(b.v_count, b.w_count);
    for (int v = 0; v < b.v_count; ++v)
        for (int w : b.v_neighbors[v]) m.set(v, w, true);
    return m;
}

bool is_odd(const BipartiteBase& b) {
    return f2_rank(incidence_matrix(b)) == b.w_count;
}

std::optional<std::vector<int>> find_even_witness(const BipartiteBase& b) {
    auto x = f2_kernel_vector(incidence_matrix(b));
    if (!x) return std::nullopt;
    std::vector<int> witness;
    for (int w = 0; w < b.w_count; ++w)
        if ((*x)[w]) witness.push_back(w);
    // re-verify: every V-side neighborhood meets the witness evenly
    for (int v = 0; v < b.v_count; ++v) {
        int count = 0;
        for (int w : b.v_neighbors[v])
            if ((*x)[w]) ++count;
        if (count % 2 != 0)
            throw std::logic_error("find_even_witness: verification failed");
    }
    if (witness.empty())
        throw std::logic_error("find_even_witness: empty kernel vector");
    return witness;
}

} // namespace mp
