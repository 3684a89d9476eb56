#pragma once

// Dense exact-rational matrices and the elimination kernel shared by every
// module: reduced row echelon form with first-nonzero pivoting in the declared
// basis order, rank, kernel bases, linear solving with the minimal-pivot
// particular solution, and inverses. Determinism matters as much as
// correctness here; all downstream representative choices come from this file.

#include "dgla/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace dgla {

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        Mat r(*this);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        Mat r(*this);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }
    Mat operator*(const Mat& o) const {
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    if (o.at(k, j) == 0) continue;
                    r.at(i, j) += a * o.at(k, j);
                }
            }
        return r;
    }

    Mat scaled(const Rat& c) const {
        Mat r(*this);
        for (auto& x : r.data_) x *= c;
        return r;
    }

    Vec apply(const Vec& v) const {
        Vec r(rows_, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Vec row(std::size_t r) const {
        Vec v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
        return v;
    }
    Vec col(std::size_t c) const {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
        return v;
    }

    static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols) {
        Mat m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        return m;
    }
    static Mat from_cols(const std::vector<Vec>& cols, std::size_t rows) {
        Mat m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

/// In-place reduced row echelon form. Pivot selection: scan columns left to
/// right, take the first row (top to bottom) with a nonzero entry. Returns the
/// pivot columns in order.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(const Mat& m);

/// Basis of {v : m v = 0}, one vector per free column, ordered by free column
/// index; the free coordinate is 1 and pivot coordinates are filled in.
std::vector<Vec> kernel_basis(const Mat& m);

/// Particular solution of m x = b with free variables set to 0, or nullopt if
/// the system is inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Inverse of a square matrix; nullopt if singular.
std::optional<Mat> inverse(const Mat& m);

}  // namespace dgla
