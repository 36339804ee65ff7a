#pragma once

#include <cstddef>
#include <vector>

#include "nicety/rational.hpp"

namespace nicety {

/// Dense matrix of exact rationals (row-major).
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {
        if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    }

    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_identity() const;
    bool is_zero() const;

    RatMatrix transpose() const;

    /// Exact inverse by Gauss-Jordan elimination; throws SingularMatrixError.
    RatMatrix inverse() const;

    /// Exact determinant (square only).
    Rational determinant() const;

    friend RatMatrix mul(const RatMatrix& a, const RatMatrix& b);

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

RatMatrix mul(const RatMatrix& a, const RatMatrix& b);

} // namespace nicety
