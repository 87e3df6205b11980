#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "herlat/error.hpp"
#include "herlat/rat.hpp"

namespace herlat {

// Dense row-major matrix over Int or Rat.
template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw Error("Matrix: ragged initializer");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o, "+");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o, "-");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw Error("Matrix *: shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Matrix operator*(const T& s) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    std::vector<T> row(std::size_t r) const {
        return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }
    void set_row(std::size_t r, const std::vector<T>& v) {
        if (v.size() != cols_) throw Error("set_row: length mismatch");
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = v[j];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    // row[a] += c * row[b]
    void add_row_multiple(std::size_t a, std::size_t b, const T& c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += c * (*this)(b, j);
    }

    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
    }

    Matrix submatrix_rows(std::size_t from, std::size_t count) const {
        Matrix r(count, cols_);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(from + i, j);
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << "[";
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? " [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
            os << "]";
            if (i + 1 < m.rows_) os << "\n";
        }
        return os << "]";
    }

  private:
    void check_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw Error(std::string("Matrix ") + op + ": shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using MatZ = Matrix<Int>;
using MatQ = Matrix<Rat>;

inline MatQ to_rat(const MatZ& m) {
    MatQ r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

// Splits M as A / den with A integral and den the lcm of all denominators.
inline std::pair<MatZ, Int> clear_denominators(const MatQ& m) {
    Int den = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) den = int_lcm(den, m(i, j).get_den());
    MatZ a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = Int(m(i, j) * den);
    return {a, den};
}

inline bool is_integral(const MatQ& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_integer(m(i, j))) return false;
    return true;
}

inline MatZ to_int_matrix(const MatQ& m) {
    MatZ r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_int(m(i, j));
    return r;
}

// Exact determinant (fraction-free Bareiss).
Int det(const MatZ& m);
Rat det(const MatQ& m);

// Rank over Q.
std::size_t rank(const MatQ& m);
std::size_t rank(const MatZ& m);

// Exact inverse; throws Error if singular.
MatQ inverse(const MatQ& m);

// Solves x * A = b for a single row vector b; empty result if inconsistent.
// A need not be square; if the solution is not unique an arbitrary one is
// returned (callers here always use full-column-rank A).
std::vector<Rat> solve_left(const MatQ& a, const std::vector<Rat>& b);

// Right kernel basis {x : M x = 0}, as columns stacked into a matrix
// (cols = kernel dimension). Exact over Q.
MatQ right_kernel(const MatQ& m);

}  // namespace herlat
