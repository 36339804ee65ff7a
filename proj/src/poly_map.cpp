#include "nicety/poly_map.hpp"

#include <algorithm>

namespace nicety {

PolyMap::PolyMap(std::size_t domain_dim, std::vector<Polynomial> components)
    : domain_dim_(domain_dim), components_(std::move(components)) {
    if (domain_dim_ == 0) throw DimensionError("map domain dimension must be positive");
    if (components_.empty()) throw DimensionError("map must have at least one component");
    for (const auto& c : components_)
        if (c.nvars() != domain_dim_)
            throw DimensionError("map component arity differs from domain dimension");
}

PolyMap PolyMap::identity(std::size_t n) {
    std::vector<Polynomial> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) comps.push_back(Polynomial::variable(n, i));
    return PolyMap(n, std::move(comps));
}

PolyMap PolyMap::linear(const RatMatrix& m) {
    std::vector<Polynomial> comps;
    comps.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) terms.push_back({Monomial::unit(m.cols(), j), m.at(i, j)});
        comps.push_back(Polynomial::from_terms(m.cols(), std::move(terms)));
    }
    return PolyMap(m.cols(), std::move(comps));
}

bool PolyMap::is_zero() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

bool PolyMap::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (components_[i] != Polynomial::variable(domain_dim_, i)) return false;
    return true;
}

std::optional<int> PolyMap::degree() const {
    std::optional<int> d;
    for (const auto& c : components_) {
        const auto cd = c.degree();
        if (cd && (!d || *cd > *d)) d = cd;
    }
    return d;
}

bool PolyMap::fixes_origin() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const Polynomial& p) { return p.constant_value().is_zero(); });
}

std::vector<Rational> PolyMap::evaluate(std::span<const Rational> point) const {
    std::vector<Rational> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(nicety::evaluate(c, point));
    return out;
}

Substituter::Substituter(const PolyMap& g, Limits base)
    : g_(g), base_(base), powers_(g.codomain_dim()) {}

Polynomial Substituter::component_power(std::size_t var, std::uint32_t e, const Limits& lim) {
    if (e == 0) return Polynomial::one(g_.domain_dim());
    if (e == 1) {
        if (lim.degree_cap) return truncate_degree(g_.component(var), *lim.degree_cap);
        return g_.component(var);
    }
    auto& cache = powers_[var];
    if (auto it = cache.find(e); it != cache.end()) return it->second;
    Polynomial half = component_power(var, e / 2, lim);
    Polynomial r = mul(half, half, lim);
    if (e % 2 == 1) r = mul(r, component_power(var, 1, lim), lim);
    cache.emplace(e, r);
    return r;
}

Polynomial Substituter::recurse(std::span<const Term* const> terms, std::size_t var,
                                const Limits& lim) {
    const std::size_t n = g_.domain_dim();
    if (terms.empty()) return Polynomial::zero(n);
    if (var == g_.codomain_dim()) {
        // Every source variable is consumed; what remains is a single
        // canonical monomial's coefficient.
        Rational c = 0;
        for (const Term* t : terms) c += t->coef;
        return Polynomial::constant(n, std::move(c));
    }

    // Bucket by the exponent of `var`, then combine with a Horner walk over
    // the distinct exponents, multiplying by memoized gap powers.
    std::map<std::uint32_t, std::vector<const Term*>> buckets;
    for (const Term* t : terms) buckets[t->mono.exp(var)].push_back(t);

    if (buckets.size() == 1 && buckets.begin()->first == 0)
        return recurse(terms, var + 1, lim);

    Polynomial acc = Polynomial::zero(n);
    std::uint32_t prev_exp = 0;
    bool first = true;
    for (auto it = buckets.rbegin(); it != buckets.rend(); ++it) {
        Polynomial part = recurse(it->second, var + 1, lim);
        if (first) {
            acc = std::move(part);
            prev_exp = it->first;
            first = false;
            continue;
        }
        acc = mul(acc, component_power(var, prev_exp - it->first, lim), lim);
        acc = add(acc, part);
        prev_exp = it->first;
    }
    if (prev_exp > 0) acc = mul(acc, component_power(var, prev_exp, lim), lim);
    return acc;
}

Polynomial Substituter::apply(const Polynomial& p, WorkMeter* meter) {
    if (p.nvars() != g_.codomain_dim())
        throw DimensionError("substitute: polynomial arity differs from map codomain dimension");
    Limits lim = base_.with_meter(meter ? meter : base_.meter);
    std::vector<const Term*> ptrs;
    ptrs.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        if (!lim.keeps(t.mono.degree())) continue; // sound only when callers gate it
        ptrs.push_back(&t);
    }
    return recurse(ptrs, 0, lim);
}

Polynomial substitute(const Polynomial& p, const PolyMap& g, const Limits& lim) {
    Substituter s(g, lim);
    return s.apply(p);
}

PolyMap compose(const PolyMap& f, const PolyMap& g, const Limits& lim) {
    if (f.domain_dim() != g.codomain_dim())
        throw DimensionError("compose: inner map codomain dimension differs from outer domain");
    Substituter s(g, lim);
    std::vector<Polynomial> comps;
    comps.reserve(f.codomain_dim());
    for (const auto& c : f.components()) comps.push_back(s.apply(c));
    return PolyMap(g.domain_dim(), std::move(comps));
}

PolyMap map_add(const PolyMap& a, const PolyMap& b) {
    if (a.domain_dim() != b.domain_dim() || a.codomain_dim() != b.codomain_dim())
        throw DimensionError("map_add: shape mismatch");
    std::vector<Polynomial> comps;
    comps.reserve(a.codomain_dim());
    for (std::size_t i = 0; i < a.codomain_dim(); ++i)
        comps.push_back(add(a.component(i), b.component(i)));
    return PolyMap(a.domain_dim(), std::move(comps));
}

PolyMap map_sub(const PolyMap& a, const PolyMap& b) {
    if (a.domain_dim() != b.domain_dim() || a.codomain_dim() != b.codomain_dim())
        throw DimensionError("map_sub: shape mismatch");
    std::vector<Polynomial> comps;
    comps.reserve(a.codomain_dim());
    for (std::size_t i = 0; i < a.codomain_dim(); ++i)
        comps.push_back(sub(a.component(i), b.component(i)));
    return PolyMap(a.domain_dim(), std::move(comps));
}

PolyMap map_scale(const PolyMap& a, const Rational& c) {
    std::vector<Polynomial> comps;
    comps.reserve(a.codomain_dim());
    for (const auto& p : a.components()) comps.push_back(scale(p, c));
    return PolyMap(a.domain_dim(), std::move(comps));
}

PolyMap matrix_apply(const RatMatrix& b, const PolyMap& f) {
    if (b.cols() != f.codomain_dim())
        throw DimensionError("matrix_apply: matrix columns differ from component count");
    std::vector<Polynomial> comps;
    comps.reserve(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        Polynomial acc = Polynomial::zero(f.domain_dim());
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!b.at(i, j).is_zero()) acc = add(acc, scale(f.component(j), b.at(i, j)));
        comps.push_back(std::move(acc));
    }
    return PolyMap(f.domain_dim(), std::move(comps));
}

PolyMap truncate_degree(const PolyMap& f, std::uint32_t cap) {
    std::vector<Polynomial> comps;
    comps.reserve(f.codomain_dim());
    for (const auto& c : f.components()) comps.push_back(truncate_degree(c, cap));
    return PolyMap(f.domain_dim(), std::move(comps));
}

} // namespace nicety
