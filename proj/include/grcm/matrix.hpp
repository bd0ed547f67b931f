#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "grcm/error.hpp"
#include "grcm/series.hpp"

namespace grcm {

/// Small dense matrix with entries in Q[t]/(t^N). Sizes here are 1 or 2.
class Matrix {
public:
    Matrix() = default;

    Matrix(int rows, int cols, int order)
        : rows_(rows), cols_(cols), order_(order),
          e_(static_cast<std::size_t>(rows * cols), Series::zero(order)) {}

    /// 2x2 from entries in row-major order.
    static Matrix of(const Series& a, const Series& b, const Series& c, const Series& d) {
        Matrix m(2, 2, a.order());
        m(0, 0) = a;
        m(0, 1) = b;
        m(1, 0) = c;
        m(1, 1) = d;
        m.check_orders();
        return m;
    }

    static Matrix scalar(int size, const Series& s) {
        Matrix m(size, size, s.order());
        for (int i = 0; i < size; ++i) m(i, i) = s;
        return m;
    }

    static Matrix identity(int size, int order) { return scalar(size, Series::one(order)); }

    static Matrix column(const Series& a, const Series& b) {
        Matrix m(2, 1, a.order());
        m(0, 0) = a;
        m(1, 0) = b;
        m.check_orders();
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int order() const noexcept { return order_; }

    Series& operator()(int i, int j) { return e_[index(i, j)]; }
    const Series& operator()(int i, int j) const { return e_[index(i, j)]; }

    Matrix with_order(int order) const {
        Matrix m(rows_, cols_, order);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k].with_order(order);
        return m;
    }

    bool is_zero() const {
        for (const auto& s : e_)
            if (!s.is_zero()) return false;
        return true;
    }

    /// Determinant of a 1x1 or 2x2 matrix.
    Series det() const {
        if (rows_ != cols_) throw Error(Errc::InvalidInput, "determinant of a non-square matrix");
        if (rows_ == 1) return e_[0];
        if (rows_ == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
        throw Error(Errc::InvalidInput, "determinant only implemented up to size 2");
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(Errc::InvalidInput, "matrix shape mismatch in product");
        if (a.order_ != b.order_) throw Error(Errc::MismatchedOrder, "matrix truncation orders differ");
        Matrix r(a.rows_, b.cols_, a.order_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j)
                for (int k = 0; k < a.cols_; ++k) {
                    if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
                    r(i, j) += a(i, k) * b(k, j);
                }
        return r;
    }

    friend Matrix operator*(const Series& s, Matrix m) {
        for (auto& x : m.e_) x = s * x;
        return m;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        a.same_shape(b);
        for (std::size_t k = 0; k < a.e_.size(); ++k) a.e_[k] += b.e_[k];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        a.same_shape(b);
        for (std::size_t k = 0; k < a.e_.size(); ++k) a.e_[k] -= b.e_[k];
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (int j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
        }
        return s + "]";
    }

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * cols_ + j); }

    void same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(Errc::InvalidInput, "matrix shape mismatch");
        if (order_ != b.order_) throw Error(Errc::MismatchedOrder, "matrix truncation orders differ");
    }

    void check_orders() const {
        for (const auto& s : e_)
            if (s.order() != order_) throw Error(Errc::MismatchedOrder, "matrix entries with different orders");
    }

    int rows_ = 0;
    int cols_ = 0;
    int order_ = 0;
    std::vector<Series> e_;
};

} // namespace grcm
