#include "nicety/jacobian.hpp"

#include <algorithm>
#include <random>

namespace nicety {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    entries_.assign(rows * cols, Polynomial::zero(nvars));
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : rows_(rows), cols_(cols), nvars_(entries.empty() ? 0 : entries.front().nvars()),
      entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    if (entries_.size() != rows * cols)
        throw DimensionError("matrix entry count does not match rows * cols");
    for (const auto& e : entries_)
        if (e.nvars() != nvars_) throw DimensionError("matrix entries must share one arity");
}

bool PolyMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

RatMatrix PolyMatrix::evaluate(std::span<const Rational> point) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = nicety::evaluate(at(i, j), point);
    return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b, const Limits& lim) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    if (a.nvars() != b.nvars()) throw DimensionError("matrix product arity mismatch");
    PolyMatrix r(a.rows(), b.cols(), a.nvars());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Polynomial& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Polynomial& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) = add(r.at(i, j), mul(aik, bkj, lim));
            }
        }
    return r;
}

PolyMatrix substitute(const PolyMatrix& m, const PolyMap& g, const Limits& lim) {
    Substituter s(g, lim);
    std::vector<Polynomial> entries;
    entries.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(s.apply(m.at(i, j)));
    return PolyMatrix(m.rows(), m.cols(), std::move(entries));
}

PolyMatrix jacobian(const PolyMap& f) {
    PolyMatrix j(f.codomain_dim(), f.domain_dim(), f.domain_dim());
    for (std::size_t i = 0; i < f.codomain_dim(); ++i)
        for (std::size_t v = 0; v < f.domain_dim(); ++v) j.at(i, v) = partial(f.component(i), v);
    return j;
}

namespace {

Polynomial det_cofactor(const PolyMatrix& m, std::vector<std::size_t> rows,
                        std::vector<std::size_t> cols, const Limits& lim) {
    const std::size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    Polynomial acc = Polynomial::zero(m.nvars());
    for (std::size_t k = 0; k < n; ++k) {
        const Polynomial& pivot = m.at(rows[0], cols[k]);
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        Polynomial minor = det_cofactor(m, sub_rows, sub_cols, lim);
        Polynomial contrib = mul(pivot, minor, lim);
        acc = (k % 2 == 0) ? add(acc, contrib) : sub(acc, contrib);
    }
    return acc;
}

Polynomial det_bareiss(const PolyMatrix& input, const Limits& lim) {
    const std::size_t n = input.rows();
    PolyMatrix m = input;
    Polynomial prev = Polynomial::one(input.nvars());
    bool negate_sign = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return Polynomial::zero(input.nvars());
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            negate_sign = !negate_sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = sub(mul(m.at(k, k), m.at(i, j), lim),
                                     mul(m.at(i, k), m.at(k, j), lim));
                m.at(i, j) = num.is_zero() ? std::move(num) : exact_divide(num, prev, lim);
            }
        for (std::size_t i = k + 1; i < n; ++i) m.at(i, k) = Polynomial::zero(input.nvars());
        prev = m.at(k, k);
    }
    Polynomial d = m.at(n - 1, n - 1);
    return negate_sign ? negate(d) : d;
}

} // namespace

Polynomial det(const PolyMatrix& m, const Limits& lim) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n <= 4) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        return det_cofactor(m, idx, idx, lim);
    }
    return det_bareiss(m, lim);
}

KellerResult keller_check(const PolyMap& f, const Limits& lim) {
    if (!f.is_square()) throw DimensionError("keller_check requires a square map");
    Polynomial d = det(jacobian(f), lim);
    const bool keller = !d.is_zero() && d.is_constant();
    return {keller, std::move(d)};
}

NilpotenceResult nilpotence_index_symbolic(const PolyMatrix& m, int k_max, const Limits& lim) {
    if (!m.is_square()) throw DimensionError("nilpotence index of a non-square matrix");
    if (k_max < 1) throw DomainError("k_max must be at least 1");
    PolyMatrix power = m;
    for (int k = 1; k <= k_max; ++k) {
        if (power.is_zero()) return {true, k, k_max, false};
        if (k < k_max) power = mul(power, m, lim);
    }
    return {false, 0, k_max, false};
}

NilpotenceResult nilpotence_index_randomized(const PolyMatrix& m, int k_max, int samples,
                                             std::uint64_t seed) {
    if (!m.is_square()) throw DimensionError("nilpotence index of a non-square matrix");
    if (k_max < 1) throw DomainError("k_max must be at least 1");
    if (samples < 1) throw DomainError("samples must be at least 1");
    std::mt19937_64 rng(seed);
    // Coordinates drawn uniformly from the integers in [-99, 99].
    auto draw = [&rng]() -> Rational {
        return Rational(static_cast<long>(rng() % 199) - 99);
    };
    int worst = 1;
    for (int s = 0; s < samples; ++s) {
        std::vector<Rational> point;
        point.reserve(m.nvars());
        for (std::size_t v = 0; v < m.nvars(); ++v) point.push_back(draw());
        RatMatrix num = m.evaluate(point);
        RatMatrix power = num;
        int index = 0;
        for (int k = 1; k <= k_max; ++k) {
            if (power.is_zero()) {
                index = k;
                break;
            }
            if (k < k_max) power = mul(power, num);
        }
        if (index == 0)
            return {false, 0, k_max, true, seed, samples};
        worst = std::max(worst, index);
    }
    return {true, worst, k_max, true, seed, samples};
}

} // namespace nicety
