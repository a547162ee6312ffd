// Dense exact rational matrices, sized for root-system work (dimensions
// are at most a few dozen).
#pragma once

#include "hsym/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>

namespace hsym {

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rat>> rows);

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Rat> row(std::size_t r) const;
    std::vector<Rat> col(std::size_t c) const;

    Mat transposed() const;
    bool operator==(const Mat&) const = default;

    /// Matrix * column vector. Throws on dimension mismatch.
    std::vector<Rat> apply(const std::vector<Rat>& x) const;

    Mat operator*(const Mat& rhs) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

/// Reduced row echelon form, in place; returns the pivot columns.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);

/// Exact basis of {x : eqs * x = 0}, one basis vector per column.
/// rank + number of returned columns == eqs.cols().
Mat nullspace(const Mat& eqs);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// Unique solution of m * x = b for square nonsingular m.
std::optional<std::vector<Rat>> solve(const Mat& m, const std::vector<Rat>& b);

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

} // namespace hsym
