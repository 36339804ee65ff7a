#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>

#include "nicety/errors.hpp"

namespace nicety {

/// A power product of the ambient variables, stored as a fixed-length
/// exponent vector with its total degree cached.
class Monomial {
public:
    using Exponents = boost::container::small_vector<std::uint32_t, 4>;

    explicit Monomial(std::size_t nvars) : exps_(nvars, 0u) {}

    explicit Monomial(Exponents exps) : exps_(std::move(exps)) {
        for (auto e : exps_) degree_ += e;
    }

    static Monomial unit(std::size_t nvars, std::size_t var, std::uint32_t e = 1) {
        Monomial m(nvars);
        if (var >= nvars) throw DimensionError("variable index out of range");
        m.exps_[var] = e;
        m.degree_ = e;
        return m;
    }

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t exp(std::size_t i) const { return exps_[i]; }
    const Exponents& exps() const { return exps_; }
    bool is_constant() const { return degree_ == 0; }

    Monomial times(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
        r.degree_ += o.degree_;
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    /// Exact quotient o / *this; caller must ensure divisibility.
    Monomial quotient_of(const Monomial& o) const {
        Monomial r(o);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
        r.degree_ = o.degree_ - degree_;
        return r;
    }

    Monomial with_exp(std::size_t var, std::uint32_t e) const {
        Monomial r(*this);
        r.degree_ = r.degree_ - r.exps_[var] + e;
        r.exps_[var] = e;
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    Exponents exps_;
    std::uint32_t degree_ = 0;
};

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable most significant.
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& x = a.exps();
    const auto& y = b.exps();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return x[i] < y[i];
    return false;
}

} // namespace nicety
