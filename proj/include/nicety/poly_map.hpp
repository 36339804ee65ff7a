#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "nicety/polynomial.hpp"
#include "nicety/rat_matrix.hpp"

namespace nicety {

/// Ordered tuple of polynomials: a map from affine n-space to affine
/// m-space.  Rectangular maps are allowed; every component is a polynomial
/// in the domain variables.
class PolyMap {
public:
    PolyMap(std::size_t domain_dim, std::vector<Polynomial> components);

    static PolyMap identity(std::size_t n);

    /// The linear map x -> M x (domain = columns, codomain = rows).
    static PolyMap linear(const RatMatrix& m);

    std::size_t domain_dim() const { return domain_dim_; }
    std::size_t codomain_dim() const { return components_.size(); }
    bool is_square() const { return domain_dim_ == components_.size(); }

    const Polynomial& component(std::size_t i) const { return components_.at(i); }
    std::span<const Polynomial> components() const { return components_; }

    bool is_zero() const;
    bool is_identity() const;

    /// Max component degree; empty for the zero map.
    std::optional<int> degree() const;

    /// True when every component has zero constant term, i.e. F(0) = 0.
    bool fixes_origin() const;

    std::vector<Rational> evaluate(std::span<const Rational> point) const;

    friend bool operator==(const PolyMap& a, const PolyMap& b) {
        return a.domain_dim_ == b.domain_dim_ && a.components_ == b.components_;
    }
    friend bool operator!=(const PolyMap& a, const PolyMap& b) { return !(a == b); }

private:
    std::size_t domain_dim_;
    std::vector<Polynomial> components_;
};

/// Composes polynomials into the components of `g`, memoizing powers of the
/// components so that repeated substitutions into the same map (the dominant
/// cost of the whole library) share work.  The cache is only valid for the
/// term limit and degree cap fixed at construction; the work meter may vary
/// per call.
class Substituter {
public:
    Substituter(const PolyMap& g, Limits base);

    /// p must be a polynomial in codomain_dim(g) variables; the result lives
    /// in the domain variables of g.
    Polynomial apply(const Polynomial& p, WorkMeter* meter = nullptr);

    const PolyMap& target() const { return g_; }

private:
    Polynomial component_power(std::size_t var, std::uint32_t e, const Limits& lim);
    Polynomial recurse(std::span<const Term* const> terms, std::size_t var, const Limits& lim);

    const PolyMap& g_;
    Limits base_;
    std::vector<std::map<std::uint32_t, Polynomial>> powers_;
};

/// Exact composition p(g_1, ..., g_m).
Polynomial substitute(const Polynomial& p, const PolyMap& g, const Limits& lim = {});

/// Componentwise composition (f o g)_i = f_i(g).
PolyMap compose(const PolyMap& f, const PolyMap& g, const Limits& lim = {});

PolyMap map_add(const PolyMap& a, const PolyMap& b);
PolyMap map_sub(const PolyMap& a, const PolyMap& b);
PolyMap map_scale(const PolyMap& a, const Rational& c);

/// Matrix acting on the components: (B . F)_i = sum_j B[i][j] F_j.
PolyMap matrix_apply(const RatMatrix& b, const PolyMap& f);

PolyMap truncate_degree(const PolyMap& f, std::uint32_t cap);

} // namespace nicety
