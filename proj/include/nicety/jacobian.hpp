#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nicety/poly_map.hpp"

namespace nicety {

/// Dense matrix of polynomials sharing one ambient variable count.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);
    PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }
    bool is_square() const { return rows_ == cols_; }

    const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Polynomial& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool is_zero() const;

    /// Entry-wise evaluation at an exact point.
    RatMatrix evaluate(std::span<const Rational> point) const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_, nvars_;
    std::vector<Polynomial> entries_;
};

PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b, const Limits& lim = {});

/// Entry-wise composition M(g).
PolyMatrix substitute(const PolyMatrix& m, const PolyMap& g, const Limits& lim = {});

/// Jacobian matrix: entry (i, j) = d F_i / d X_j.
PolyMatrix jacobian(const PolyMap& f);

/// Exact determinant.  Cofactor expansion up to 4x4; Bareiss fraction-free
/// elimination (whose interior divisions are exact over the polynomial ring)
/// above that.
Polynomial det(const PolyMatrix& m, const Limits& lim = {});

struct KellerResult {
    bool is_keller;
    Polynomial det;
};

/// A map is Keller when its Jacobian determinant is a nonzero constant.
KellerResult keller_check(const PolyMap& f, const Limits& lim = {});

struct NilpotenceResult {
    bool nilpotent;            // found k <= k_max with M^k = 0
    int index;                 // smallest such k when nilpotent
    int k_max;
    bool randomized;           // Monte Carlo answer over sample points
    std::uint64_t seed = 0;
    int samples = 0;
};

/// Smallest k <= k_max with M^k = 0, computing powers exactly.
NilpotenceResult nilpotence_index_symbolic(const PolyMatrix& m, int k_max,
                                           const Limits& lim = {});

/// Monte Carlo variant: evaluates M at `samples` points with coordinates
/// drawn uniformly from the integers [-99, 99] and reports the index
/// consistent with every sampled numeric matrix.  Never reports a larger
/// index than the symbolic answer.
NilpotenceResult nilpotence_index_randomized(const PolyMatrix& m, int k_max, int samples,
                                             std::uint64_t seed);

} // namespace nicety
