#pragma once

#include "pvgauge/errors.hpp"
#include "pvgauge/ratfn.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace pvg {

/// Dense row-major matrix over a commutative ring T.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw InconsistentRowLength("matrix rows of different length");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }
    static Matrix diagonal(const std::vector<T>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    /// Side length of a square matrix.
    std::size_t n() const noexcept { return rows_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<T>& data() const noexcept { return data_; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == T(0)))
                return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.data_)
            v = -v;
        return r;
    }
    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& v : data_)
            v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product of incompatible shapes");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Apply f entrywise.
    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r(i, j) = f((*this)(i, j));
        return r;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// "[[a, b], [c, d]]" for any entry type with a to_string() member.
template <class T>
std::string format_matrix(const Matrix<T>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                out += ", ";
            out += m(i, j).to_string();
        }
        out += "]";
    }
    return out + "]";
}

/// Cofactor expansion; for rings without division and small n.
template <class T>
T det_expand(const Matrix<T>& m) {
    if (!m.is_square())
        throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.n();
    if (n == 0)
        return T(1);
    if (n == 1)
        return m(0, 0);
    T total(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == T(0))
            continue;
        Matrix<T> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j)
                    minor(i - 1, c++) = m(i, k);
        T term = m(0, j) * det_expand(minor);
        if (j % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

/// n x n matrices over Q(x): system matrices, gauge matrices, intertwiners.
using MatRF = Matrix<RatFn>;
using MatQ = Matrix<Rat>;
using MatPoly = Matrix<Poly>;

struct InverseResult {
    MatRF inverse;
    RatFn det;
};

/// Fraction-free Gauss-Jordan on the cleared-denominator matrix.
/// Throws SingularMatrix when det(u) = 0 in Q(x).
InverseResult mat_inverse(const MatRF& u);
RatFn det(const MatRF& u);
std::size_t rank(const MatRF& m);
MatRF mat_derive(const MatRF& u);
/// Throws PoleAtEvaluationPoint.
MatQ mat_eval(const MatRF& a, const Rat& x0);

MatRF kronecker(const MatRF& a, const MatRF& b);
/// Column-stacked n^2 x 1 vector.
MatRF vec(const MatRF& m);
MatRF unvec(const MatRF& v, std::size_t n);

bool is_diagonal(const MatRF& m);

/// Reduced row echelon form over Q, in place; returns pivot columns.
std::vector<std::size_t> rref(MatQ& m);
std::size_t rank(MatQ m);
/// Basis of {v : m v = 0}, one column vector per element, in free-column order.
std::vector<std::vector<Rat>> nullspace(MatQ m);

std::string to_string(const MatRF& m);

} // namespace pvg
