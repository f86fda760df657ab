#ifndef MP_F2_HPP
#define MP_F2_HPP

#include "mp/base.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mp {

// Dense bit-matrix over GF(2), row-major, 64 entries per word.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool value);
    void xor_row(int dst, int src); // row[dst] ^= row[src]
    void swap_rows(int a, int b);

private:
    int rows_ = 0;
    int cols_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

int f2_rank(const F2Matrix& m);

// Nonzero x with m*x = 0, or absent when the columns are independent.
// Deterministic: built from the lowest-index free column.
std::optional<std::vector<int>> f2_kernel_vector(const F2Matrix& m);

// Rows indexed by V-side in construction order, columns by W-side.
F2Matrix incidence_matrix(const BipartiteBase& b);

// Odd iff the incidence matrix has full column rank over GF(2).
bool is_odd(const BipartiteBase& b);

// If b is even, a nonempty X of W-side vertices meeting every V-side
// neighborhood evenly (verified before returning); absent when odd.
std::optional<std::vector<int>> find_even_witness(const BipartiteBase& b);

} // namespace mp

#endif
