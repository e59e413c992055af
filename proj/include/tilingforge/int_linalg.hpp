#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace tilingforge {

// Dense matrix over Z. Sizes here are a few dozen at most, so plain nested
// storage with GMP integers keeps every intermediate exact.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

// reduced = input * transform, transform unimodular, inverse_transform its
// inverse. The first `rank` columns of `reduced` are nonzero, the rest are
// zero, so the trailing columns of `transform` are a Z-basis of the integer
// kernel.
struct ColumnEchelon {
    IntMatrix reduced;
    IntMatrix transform;
    IntMatrix inverse_transform;
    std::size_t rank = 0;
};

ColumnEchelon column_echelon(const IntMatrix& a);

// Z-basis of {x in Z^cols : a x = 0}, one basis vector per column.
IntMatrix integer_kernel(const IntMatrix& a);

// diagonal = left * input * right, with left/right unimodular and the
// nonzero diagonal entries positive, each dividing the next.
struct SmithForm {
    IntMatrix diagonal;
    IntMatrix left;
    IntMatrix left_inverse;
    IntMatrix right;
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Row-style Hermite normal form (positive pivots, entries above each pivot
// reduced into [0, pivot)), with zero rows dropped. Unique for a given row
// lattice.
IntMatrix hermite_rows(const IntMatrix& a);

}  // namespace tilingforge
