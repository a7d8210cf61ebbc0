#pragma once

#include "latorb/error.hpp"
#include "latorb/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace latorb {

/// Small dense matrix with value semantics. Row-major.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), d_(rows * cols, fill) {}

    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        d_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(ErrorCode::BadArgument, "ragged matrix literal");
            for (const auto& x : r) d_.push_back(x);
        }
    }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return d_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    // Lexicographic order so matrices can key std::map.
    bool operator<(const Mat& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        return d_ < o.d_;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw Error(ErrorCode::BadArgument, "matrix product shape");
        Mat r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] + o.d_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = d_[i] - o.d_[i];
        return r;
    }

    Mat operator-() const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = -d_[i];
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw Error(ErrorCode::BadArgument, "matrix apply shape");
        std::vector<T> r(rows_, T(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    bool is_square() const { return rows_ == cols_; }

private:
    size_t rows_, cols_;
    std::vector<T> d_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

inline IntMat to_int_checked(const RatMat& m) {
    IntMat r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j)))
                throw Error(ErrorCode::BadArgument, "matrix entry not integral");
            r(i, j) = rat_num(m(i, j));
        }
    return r;
}

inline RatVec mat_apply(const IntMat& m, const RatVec& v) {
    RatVec r(m.rows(), Rat(0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r[i] += Rat(m(i, j)) * v[j];
    return r;
}

/// Exact determinant (Bareiss fraction-free elimination).
Int det(const IntMat& a);
Rat det(const RatMat& a);

/// Exact inverse via Gauss-Jordan. Throws on singular input.
RatMat inverse(const RatMat& a);

/// Solve a x = b exactly. Throws on singular input.
RatVec solve(const RatMat& a, const RatVec& b);

/// Smith normal form: u * a * v = diag, with u, v unimodular.
/// diag entries are nonnegative and each divides the next.
struct SmithForm {
    IntMat u, v, u_inv, v_inv;
    std::vector<Int> diag;
};

SmithForm smith_normal_form(const IntMat& a);

/// Canonical column Hermite form of the column lattice spanned by a.
/// Returns a full-column-rank matrix whose columns form the canonical basis.
IntMat hermite_column_basis(const IntMat& a);

}  // namespace latorb
