#include "cubenori/int_matrix.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cubenori {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        throw std::invalid_argument("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (long v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns)
{
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        m.set_column(j, columns[j]);
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& values)
{
    IntMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        m(i, i) = values[i];
    return m;
}

IntVector IntMatrix::column(std::size_t c) const
{
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, c);
    return v;
}

IntVector IntMatrix::row(std::size_t r) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void IntMatrix::set_column(std::size_t c, const IntVector& values)
{
    if (values.size() != rows_)
        throw std::invalid_argument("IntMatrix::set_column: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, c) = values[i];
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::select_rows(std::size_t begin, std::size_t end) const
{
    IntMatrix m(end - begin, cols_);
    for (std::size_t i = begin; i < end; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(i - begin, j) = (*this)(i, j);
    return m;
}

IntMatrix IntMatrix::select_columns(std::size_t begin, std::size_t end) const
{
    IntMatrix m(rows_, end - begin);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = begin; j < end; ++j)
            m(i, j - begin) = (*this)(i, j);
    return m;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& which) const
{
    IntMatrix m(which.size(), cols_);
    for (std::size_t k = 0; k < which.size(); ++k)
        for (std::size_t j = 0; j < cols_; ++j)
            m(k, j) = (*this)(which[k], j);
    return m;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& which) const
{
    IntMatrix m(rows_, which.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < which.size(); ++k)
            m(i, k) = (*this)(i, which[k]);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("IntMatrix::operator*: shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Integer& b = rhs(k, j);
                if (sgn(b) != 0)
                    mpz_addmul(out(i, j).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            }
        }
    return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const
{
    if (cols_ != v.size())
        throw std::invalid_argument("IntMatrix::operator*(vector): shape mismatch");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (sgn(a) != 0 && sgn(v[k]) != 0)
                mpz_addmul(out[i].get_mpz_t(), a.get_mpz_t(), v[k].get_mpz_t());
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix::operator+: shape mismatch");
    IntMatrix out(*this);
    for (std::size_t k = 0; k < data_.size(); ++k)
        out.data_[k] += rhs.data_[k];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix::operator-: shape mismatch");
    IntMatrix out(*this);
    for (std::size_t k = 0; k < data_.size(); ++k)
        out.data_[k] -= rhs.data_[k];
    return out;
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix out(*this);
    for (auto& x : out.data_)
        x = -x;
    return out;
}

IntMatrix IntMatrix::scaled(const Integer& k) const
{
    IntMatrix out(*this);
    for (auto& x : out.data_)
        x *= k;
    return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const
{
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool IntMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

IntMatrix IntMatrix::reduced_mod(const Integer& m) const
{
    IntMatrix out(*this);
    for (auto& x : out.data_) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    }
    return out;
}

Integer IntMatrix::determinant() const
{
    if (rows_ != cols_)
        throw std::invalid_argument("IntMatrix::determinant: matrix not square");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    IntMatrix a(*this);
    Integer sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && sgn(a(swap_with, k)) == 0)
                ++swap_with;
            if (swap_with == n)
                return 0;
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                a(i, j) = v;
            }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& k)
{
    if (sgn(k) == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j) {
        const Integer& s = (*this)(source, j);
        if (sgn(s) != 0)
            mpz_addmul((*this)(target, j).get_mpz_t(), k.get_mpz_t(), s.get_mpz_t());
    }
}

void IntMatrix::add_column_multiple(std::size_t target, std::size_t source, const Integer& k)
{
    if (sgn(k) == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const Integer& s = (*this)(i, source);
        if (sgn(s) != 0)
            mpz_addmul((*this)(i, target).get_mpz_t(), k.get_mpz_t(), s.get_mpz_t());
    }
}

void IntMatrix::negate_row(std::size_t r)
{
    for (std::size_t j = 0; j < cols_; ++j)
        mpz_neg((*this)(r, j).get_mpz_t(), (*this)(r, j).get_mpz_t());
}

void IntMatrix::negate_column(std::size_t c)
{
    for (std::size_t i = 0; i < rows_; ++i)
        mpz_neg((*this)(i, c).get_mpz_t(), (*this)(i, c).get_mpz_t());
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("hstack: row count mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.cols())
        throw std::invalid_argument("vstack: column count mismatch");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
            m(a.rows() + i, j) = b(i, j);
    }
    return m;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return m;
}

bool is_zero(const IntVector& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

IntVector operator+(const IntVector& a, const IntVector& b)
{
    assert(a.size() == b.size());
    IntVector out(a);
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return out;
}

IntVector operator-(const IntVector& a, const IntVector& b)
{
    assert(a.size() == b.size());
    IntVector out(a);
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    return out;
}

IntVector scaled(const IntVector& v, const Integer& k)
{
    IntVector out(v);
    for (auto& x : out)
        x *= k;
    return out;
}

IntVector unit_vector(std::size_t n, std::size_t i)
{
    IntVector v(n);
    v.at(i) = 1;
    return v;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    return os << m.to_string();
}

} // namespace cubenori
