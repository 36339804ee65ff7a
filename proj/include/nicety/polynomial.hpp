#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nicety/limits.hpp"
#include "nicety/monomial.hpp"
#include "nicety/rational.hpp"

namespace nicety {

struct Term {
    Monomial mono;
    Rational coef;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in ascending graded-lexicographic order with no zero
/// coefficients stored; the zero polynomial is the empty term list.  That
/// single canonical form backs exact equality, deterministic printing and
/// cheap ordered merges.  Values are immutable after construction and safe
/// to share across threads.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {
        if (nvars == 0) throw DimensionError("polynomial must have at least one variable");
    }

    static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }

    static Polynomial constant(std::size_t nvars, Rational c) {
        Polynomial p(nvars);
        if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), std::move(c)});
        return p;
    }

    static Polynomial one(std::size_t nvars) { return constant(nvars, 1); }

    static Polynomial variable(std::size_t nvars, std::size_t var) {
        Polynomial p(nvars);
        p.terms_.push_back({Monomial::unit(nvars, var), 1});
        return p;
    }

    static Polynomial monomial(std::size_t nvars, Monomial m, Rational c) {
        if (m.nvars() != nvars) throw DimensionError("monomial arity mismatch");
        Polynomial p(nvars);
        if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    /// Builds from arbitrary terms: sorts, merges like monomials, drops zeros.
    static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    /// Total degree; empty for the zero polynomial, so no integer can be
    /// mistaken for the degree of zero.
    std::optional<int> degree() const {
        if (terms_.empty()) return std::nullopt;
        return static_cast<int>(terms_.back().mono.degree());
    }

    /// Minimal total degree among terms; throws DomainError on zero.
    int order() const {
        if (terms_.empty()) throw DomainError("order of the zero polynomial");
        return static_cast<int>(terms_.front().mono.degree());
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
    }

    /// Constant term (0 if absent).
    Rational constant_value() const {
        if (!terms_.empty() && terms_.front().mono.is_constant()) return terms_.front().coef;
        return 0;
    }

    Rational coefficient(const Monomial& m) const;

    bool involves(std::size_t var) const {
        for (const auto& t : terms_)
            if (t.mono.exp(var) != 0) return true;
        return false;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend Polynomial add(const Polynomial& p, const Polynomial& q);
    friend Polynomial sub(const Polynomial& p, const Polynomial& q);
    friend Polynomial negate(const Polynomial& p);
    friend Polynomial scale(const Polynomial& p, const Rational& c);
    friend Polynomial mul(const Polynomial& p, const Polynomial& q, const Limits& lim);
    friend Polynomial pow(const Polynomial& p, std::uint32_t e, const Limits& lim);
    friend Polynomial partial(const Polynomial& p, std::size_t var);
    friend Polynomial truncate_degree(const Polynomial& p, std::uint32_t cap);
    friend Polynomial lowest_component(const Polynomial& p);
    friend Polynomial homogeneous_component(const Polynomial& p, int d);

private:
    std::size_t nvars_;
    std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial negate(const Polynomial& p);
Polynomial scale(const Polynomial& p, const Rational& c);

/// Exact product.  Work is metered one unit per elementary coefficient merge.
Polynomial mul(const Polynomial& p, const Polynomial& q, const Limits& lim = {});

/// p^e with p^0 = 1, by binary powering.
Polynomial pow(const Polynomial& p, std::uint32_t e, const Limits& lim = {});

/// Formal partial derivative with respect to variable `var` (0-based).
Polynomial partial(const Polynomial& p, std::size_t var);

/// Sum of the terms of total degree <= cap.
Polynomial truncate_degree(const Polynomial& p, std::uint32_t cap);

/// Sum of the terms of minimal total degree; throws DomainError on zero.
Polynomial lowest_component(const Polynomial& p);

/// Sum of the terms of total degree d (zero polynomial if none).
Polynomial homogeneous_component(const Polynomial& p, int d);

/// Exact value at a point; point length must equal nvars.
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Exact quotient p / d when the division is exact; throws DomainError when
/// it is not.  Used by fraction-free elimination, where exactness is a
/// theorem, and exposed for tests.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d, const Limits& lim = {});

} // namespace nicety
