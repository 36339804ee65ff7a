#include "nicety/polynomial.hpp"

#include <algorithm>
#include <queue>

namespace nicety {

namespace {

void require_same_arity(const Polynomial& p, const Polynomial& q, const char* op) {
    if (p.nvars() != q.nvars())
        throw DimensionError(std::string(op) + ": operands have different variable counts");
}

} // namespace

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.mono.nvars() != nvars) throw DimensionError("term arity mismatch");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return graded_lex_less(a.mono, b.mono); });
    Polynomial p(nvars);
    for (auto& t : terms) {
        if (t.coef.is_zero()) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coef += t.coef;
            if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) {
                                   return graded_lex_less(t.mono, k);
                               });
    if (it != terms_.end() && it->mono == m) return it->coef;
    return 0;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef)
            return false;
    return true;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    require_same_arity(p, q, "add");
    Polynomial r(p.nvars_);
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms_.size() && j < q.terms_.size()) {
        const auto& a = p.terms_[i];
        const auto& b = q.terms_[j];
        if (a.mono == b.mono) {
            Rational c = a.coef + b.coef;
            if (!c.is_zero()) r.terms_.push_back({a.mono, std::move(c)});
            ++i;
            ++j;
        } else if (graded_lex_less(a.mono, b.mono)) {
            r.terms_.push_back(a);
            ++i;
        } else {
            r.terms_.push_back(b);
            ++j;
        }
    }
    for (; i < p.terms_.size(); ++i) r.terms_.push_back(p.terms_[i]);
    for (; j < q.terms_.size(); ++j) r.terms_.push_back(q.terms_[j]);
    return r;
}

Polynomial sub(const Polynomial& p, const Polynomial& q) {
    require_same_arity(p, q, "sub");
    Polynomial r(p.nvars_);
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms_.size() && j < q.terms_.size()) {
        const auto& a = p.terms_[i];
        const auto& b = q.terms_[j];
        if (a.mono == b.mono) {
            Rational c = a.coef - b.coef;
            if (!c.is_zero()) r.terms_.push_back({a.mono, std::move(c)});
            ++i;
            ++j;
        } else if (graded_lex_less(a.mono, b.mono)) {
            r.terms_.push_back(a);
            ++i;
        } else {
            r.terms_.push_back({b.mono, -b.coef});
            ++j;
        }
    }
    for (; i < p.terms_.size(); ++i) r.terms_.push_back(p.terms_[i]);
    for (; j < q.terms_.size(); ++j) r.terms_.push_back({q.terms_[j].mono, -q.terms_[j].coef});
    return r;
}

Polynomial negate(const Polynomial& p) {
    Polynomial r(p.nvars_);
    r.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms_) r.terms_.push_back({t.mono, -t.coef});
    return r;
}

Polynomial scale(const Polynomial& p, const Rational& c) {
    if (c.is_zero()) return Polynomial::zero(p.nvars_);
    Polynomial r(p.nvars_);
    r.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms_) r.terms_.push_back({t.mono, t.coef * c});
    return r;
}

// Heap-based sparse product.  One cursor per term of the smaller factor
// walks the larger factor; since appending a fixed exponent vector preserves
// graded-lex order, each cursor emits monomials in increasing order and a
// min-heap merges them into an already-sorted result.  Memory stays
// proportional to the result, never to the |p| * |q| cross product.
Polynomial mul(const Polynomial& p, const Polynomial& q, const Limits& lim) {
    require_same_arity(p, q, "mul");
    Polynomial r(p.nvars_);
    if (p.terms_.empty() || q.terms_.empty()) return r;

    const auto& small = p.terms_.size() <= q.terms_.size() ? p : q;
    const auto& big = p.terms_.size() <= q.terms_.size() ? q : p;

    struct Cursor {
        std::size_t si;
        std::size_t bi;
        Monomial mono;
    };
    struct CursorGreater {
        bool operator()(const Cursor& a, const Cursor& b) const {
            return graded_lex_less(b.mono, a.mono);
        }
    };
    std::priority_queue<Cursor, std::vector<Cursor>, CursorGreater> heap;

    auto first_kept = [&](std::size_t si) -> std::optional<Cursor> {
        // big is ascending in total degree, so once the cap is exceeded the
        // rest of the row is too.
        const std::uint32_t sdeg = small.terms_[si].mono.degree();
        if (!lim.keeps(sdeg + big.terms_.front().mono.degree())) return std::nullopt;
        return Cursor{si, 0, small.terms_[si].mono.times(big.terms_.front().mono)};
    };
    for (std::size_t si = 0; si < small.terms_.size(); ++si)
        if (auto c = first_kept(si)) heap.push(std::move(*c));

    auto& out = r.terms_;
    while (!heap.empty()) {
        Cursor cur = heap.top();
        heap.pop();
        lim.charge(1);
        Rational c = small.terms_[cur.si].coef * big.terms_[cur.bi].coef;
        if (!out.empty() && out.back().mono == cur.mono) {
            out.back().coef += c;
            if (out.back().coef.is_zero()) out.pop_back();
        } else {
            out.push_back({cur.mono, std::move(c)});
            lim.check_terms(out.size());
        }
        const std::size_t nbi = cur.bi + 1;
        if (nbi < big.terms_.size()) {
            const std::uint32_t deg =
                small.terms_[cur.si].mono.degree() + big.terms_[nbi].mono.degree();
            if (lim.keeps(deg)) {
                cur.bi = nbi;
                cur.mono = small.terms_[cur.si].mono.times(big.terms_[nbi].mono);
                heap.push(std::move(cur));
            }
        }
    }
    return r;
}

Polynomial pow(const Polynomial& p, std::uint32_t e, const Limits& lim) {
    if (e == 0) return Polynomial::one(p.nvars_);
    if (e == 1) return p;
    Polynomial half = pow(p, e / 2, lim);
    Polynomial r = mul(half, half, lim);
    if (e % 2 == 1) r = mul(r, p, lim);
    return r;
}

Polynomial partial(const Polynomial& p, std::size_t var) {
    if (var >= p.nvars()) throw DimensionError("partial: variable index out of range");
    Polynomial r(p.nvars_);
    // Lowering the same variable's exponent by one preserves graded-lex order,
    // so the filtered terms stay sorted.
    for (const auto& t : p.terms_) {
        const std::uint32_t e = t.mono.exp(var);
        if (e == 0) continue;
        r.terms_.push_back({t.mono.with_exp(var, e - 1), t.coef * Rational(static_cast<long>(e))});
    }
    return r;
}

Polynomial truncate_degree(const Polynomial& p, std::uint32_t cap) {
    Polynomial r(p.nvars_);
    for (const auto& t : p.terms_) {
        if (t.mono.degree() > cap) break; // ascending degree order
        r.terms_.push_back(t);
    }
    return r;
}

Polynomial lowest_component(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("lowest component of the zero polynomial");
    Polynomial r(p.nvars_);
    const std::uint32_t d = p.terms_.front().mono.degree();
    for (const auto& t : p.terms_) {
        if (t.mono.degree() != d) break;
        r.terms_.push_back(t);
    }
    return r;
}

Polynomial homogeneous_component(const Polynomial& p, int d) {
    Polynomial r(p.nvars_);
    if (d < 0) return r;
    for (const auto& t : p.terms_) {
        if (static_cast<int>(t.mono.degree()) > d) break;
        if (static_cast<int>(t.mono.degree()) == d) r.terms_.push_back(t);
    }
    return r;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
    if (point.size() != p.nvars())
        throw DimensionError("evaluate: point length differs from variable count");
    // Per-variable power tables, grown on demand.
    std::vector<std::vector<Rational>> powers(p.nvars());
    for (std::size_t v = 0; v < p.nvars(); ++v) powers[v].push_back(1);
    auto power = [&](std::size_t v, std::uint32_t e) -> const Rational& {
        auto& tab = powers[v];
        while (tab.size() <= e) tab.push_back(tab.back() * point[v]);
        return tab[e];
    };
    Rational acc = 0;
    for (const auto& t : p.terms()) {
        Rational term = t.coef;
        for (std::size_t v = 0; v < p.nvars(); ++v) {
            const std::uint32_t e = t.mono.exp(v);
            if (e != 0) term *= power(v, e);
        }
        acc += term;
    }
    return acc;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& d, const Limits& lim) {
    require_same_arity(p, d, "exact_divide");
    if (d.is_zero()) throw DomainError("exact_divide: division by the zero polynomial");
    Polynomial rest = p;
    const Term& lead = d.terms().back();
    std::vector<Term> qterms;
    while (!rest.is_zero()) {
        const Term& top = rest.terms().back();
        if (!lead.mono.divides(top.mono))
            throw DomainError("exact_divide: division is not exact");
        Term t{lead.mono.quotient_of(top.mono), top.coef / lead.coef};
        rest = sub(rest, mul(Polynomial::monomial(p.nvars(), t.mono, t.coef), d, lim));
        qterms.push_back(std::move(t));
    }
    return Polynomial::from_terms(p.nvars(), std::move(qterms));
}

} // namespace nicety
