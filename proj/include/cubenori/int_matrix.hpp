#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace cubenori {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/**
 * Dense integer matrix with exact (GMP) entries stored row-major.
 *
 * Sizes may be zero in either direction; a 0x3 matrix is a valid map
 * from Z^3 to the zero group.
 */
class IntMatrix
{
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);
    static IntMatrix diagonal(const IntVector& values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    IntVector row(std::size_t r) const;
    void set_column(std::size_t c, const IntVector& values);

    IntMatrix transpose() const;
    IntMatrix select_rows(std::size_t begin, std::size_t end) const;
    IntMatrix select_columns(std::size_t begin, std::size_t end) const;
    IntMatrix select_rows(const std::vector<std::size_t>& which) const;
    IntMatrix select_columns(const std::vector<std::size_t>& which) const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVector operator*(const IntVector& v) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    IntMatrix scaled(const Integer& k) const;
    bool operator==(const IntMatrix& rhs) const;
    bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

    bool is_zero() const;
    /// Entries reduced into [0, m).
    IntMatrix reduced_mod(const Integer& m) const;
    /// Exact determinant (Bareiss fraction-free elimination). Square only.
    Integer determinant() const;

    // elementary operations used by the reduction routines
    void swap_rows(std::size_t a, std::size_t b);
    void swap_columns(std::size_t a, std::size_t b);
    /// row[target] += k * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& k);
    /// col[target] += k * col[source]
    void add_column_multiple(std::size_t target, std::size_t source, const Integer& k);
    void negate_row(std::size_t r);
    void negate_column(std::size_t c);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
/// Kronecker product; row/column index of the result is i_a * dim_b + i_b.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

bool is_zero(const IntVector& v);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector scaled(const IntVector& v, const Integer& k);
IntVector unit_vector(std::size_t n, std::size_t i);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

} // namespace cubenori
