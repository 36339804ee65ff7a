#include "nicety/constructions.hpp"

#include <random>

namespace nicety {

namespace {

long draw_in(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

long draw_nonzero(std::mt19937_64& rng, long bound) {
    long v = 0;
    while (v == 0) v = draw_in(rng, -bound, bound);
    return v;
}

} // namespace

PolyMap make_triangular(std::size_t n, std::uint64_t seed, const TriangularOptions& opt) {
    if (n < 1) throw DimensionError("triangular map needs dimension >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Polynomial> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial fi = Polynomial::variable(n, i);
        if (i + 1 < n) {
            const int nterms = static_cast<int>(rng() % (opt.max_terms_per_component + 1));
            std::vector<Term> terms;
            for (int t = 0; t < nterms; ++t) {
                Monomial::Exponents exps(n, 0u);
                int degree_left = opt.max_degree;
                for (std::size_t v = i + 1; v < n && degree_left > 0; ++v) {
                    const int e = static_cast<int>(rng() % (degree_left + 1));
                    exps[v] = static_cast<std::uint32_t>(e);
                    degree_left -= e;
                }
                terms.push_back({Monomial(std::move(exps)),
                                 Rational(draw_nonzero(rng, opt.coeff_bound))});
            }
            fi = add(fi, Polynomial::from_terms(n, std::move(terms)));
        }
        comps.push_back(std::move(fi));
    }
    return PolyMap(n, std::move(comps));
}

bool is_triangular(const PolyMap& f) {
    if (!f.is_square()) return false;
    const std::size_t n = f.domain_dim();
    if (f.component(n - 1) != Polynomial::variable(n, n - 1)) return false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Polynomial h = sub(f.component(i), Polynomial::variable(n, i));
        for (std::size_t v = 0; v <= i; ++v)
            if (h.involves(v)) return false;
    }
    return true;
}

PolyMap conjugate(const PolyMap& f, const RatMatrix& t, const Limits& lim) {
    if (!f.is_square()) throw DimensionError("conjugate requires a square map");
    if (!t.is_square() || t.rows() != f.domain_dim())
        throw DimensionError("conjugating matrix shape mismatch");
    const RatMatrix tinv = t.inverse();
    return compose(PolyMap::linear(tinv), compose(f, PolyMap::linear(t), lim), lim);
}

DruzkowskiMap druzkowski(const RatMatrix& a) {
    if (!a.is_square()) throw DimensionError("cubic-linear map needs a square matrix");
    const std::size_t n = a.rows();
    std::vector<Polynomial> forms;
    std::vector<Polynomial> cubic;
    std::vector<Polynomial> comps;
    forms.reserve(n);
    cubic.reserve(n);
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < n; ++j)
            if (!a.at(i, j).is_zero()) terms.push_back({Monomial::unit(n, j), a.at(i, j)});
        Polynomial li = Polynomial::from_terms(n, std::move(terms));
        Polynomial hi = pow(li, 3);
        comps.push_back(add(Polynomial::variable(n, i), hi));
        forms.push_back(std::move(li));
        cubic.push_back(std::move(hi));
    }
    return DruzkowskiMap{a, std::move(forms), PolyMap(n, std::move(cubic)),
                         PolyMap(n, std::move(comps))};
}

GZReport gz_check(const GZPair& pair, int t_max, const Budgets& budgets) {
    const PolyMap& f = pair.small_map;
    const PolyMap& big = pair.big_map;
    const std::size_t n = f.domain_dim();
    const std::size_t big_n = big.domain_dim();
    if (!f.is_square() || !big.is_square())
        throw DimensionError("gz_check requires square maps");
    if (pair.b.rows() != n || pair.b.cols() != big_n || pair.c.rows() != big_n ||
        pair.c.cols() != n)
        throw DimensionError("gz_check: B must be n x N and C must be N x n");
    if (t_max < 0) throw DomainError("t_max must be non-negative");

    const Limits lim = budgets.limits();
    GZReport rep;
    rep.bc_identity = mul(pair.b, pair.c).is_identity();

    const PolyMap c_map = PolyMap::linear(pair.c);
    rep.base_pairing = matrix_apply(pair.b, compose(big, c_map, lim)) == f;

    // Small side by the defining recursion.
    NicetySequence small_seq = p_sequence(f, std::max(1, t_max), budgets);
    const PolyMap zero = PolyMap(n, std::vector<Polynomial>(n, Polynomial::zero(n)));
    auto p_small = [&](int t) -> const PolyMap& {
        if (t < static_cast<int>(small_seq.steps.size())) return small_seq.steps[t];
        return zero;
    };

    // Big side: F^(o j) o C for j = 0..t_max, then the binomial combination.
    std::vector<PolyMap> iterates;
    iterates.push_back(c_map);
    for (int j = 1; j <= t_max; ++j)
        iterates.push_back(compose(big, iterates.back(), lim));

    bool all = rep.bc_identity && rep.base_pairing;
    for (int t = 0; t <= t_max; ++t) {
        PolyMap rhs = matrix_apply(pair.b, sequence_pullback(iterates, t));
        const bool ok = p_small(t) == rhs;
        rep.sequence_pairing.emplace_back(t, ok);
        all = all && ok;
    }
    rep.all_ok = all;
    return rep;
}

HubbersMaps hubbers_eighth(const HubbersParams& params) {
    if (params.g4.is_zero())
        throw DomainError("hubbers_eighth requires g4 != 0 (F_4 divides by g4 and g4^2)");
    const std::size_t n = 4;
    auto var = [&](std::size_t i) { return Polynomial::variable(n, i); };
    auto mono = [&](std::uint32_t e1, std::uint32_t e2, std::uint32_t e3e, std::uint32_t e4e,
                    Rational c) {
        Monomial::Exponents exps{e1, e2, e3e, e4e};
        return Polynomial::monomial(n, Monomial(std::move(exps)), std::move(c));
    };

    const Rational& e3 = params.e3;
    const Rational& e4 = params.e4;
    const Rational& g4 = params.g4;
    const Rational& k3 = params.k3;
    const Rational& k4 = params.k4;
    const Rational& m4 = params.m4;

    Polynomial f1 = var(0);
    Polynomial f2 = sub(var(1), mono(3, 0, 0, 0, Rational(1, 3)));
    Polynomial f3 = var(2);
    f3 = sub(f3, mono(2, 1, 0, 0, 1));
    f3 = sub(f3, mono(1, 2, 0, 0, e3));
    f3 = add(f3, mono(1, 1, 1, 0, g4));
    f3 = sub(f3, mono(0, 3, 0, 0, k3));
    f3 = add(f3, mono(0, 2, 1, 0, m4));
    f3 = add(f3, mono(0, 2, 0, 1, g4 * g4));
    Polynomial f4 = var(3);
    f4 = sub(f4, mono(2, 0, 1, 0, 1));
    f4 = sub(f4, mono(1, 2, 0, 0, e4));
    f4 = sub(f4, mono(1, 1, 1, 0, Rational(2) * m4 / g4));
    f4 = sub(f4, mono(1, 1, 0, 1, g4));
    f4 = sub(f4, mono(0, 3, 0, 0, k4));
    f4 = sub(f4, mono(0, 2, 1, 0, m4 * m4 / (g4 * g4)));
    f4 = sub(f4, mono(0, 2, 0, 1, m4));

    PolyMap f(n, {f1, f2, f3, f4});
    PolyMap h(n, {var(0), var(1), f3, f4});
    PolyMap g(n, {var(0), f2, var(2), var(3)});
    return HubbersMaps{std::move(f), std::move(h), std::move(g)};
}

RatMatrix random_linear_invertible(std::size_t n, long lo, long hi, std::uint64_t seed) {
    if (n < 1) throw DimensionError("matrix dimension must be positive");
    if (lo > hi) throw DomainError("empty entry range");
    std::mt19937_64 rng(seed);
    while (true) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rational(draw_in(rng, lo, hi));
        if (!m.determinant().is_zero()) return m;
    }
}

RatMatrix random_unimodular(std::size_t n, long bound, std::uint64_t seed) {
    if (n < 1) throw DimensionError("matrix dimension must be positive");
    if (bound < 1) throw DomainError("entry bound must be at least 1");
    std::mt19937_64 rng(seed);
    RatMatrix m = RatMatrix::identity(n);
    if (n == 1) {
        if (rng() % 2 == 0) m.at(0, 0) = -1;
        return m;
    }
    const Rational limit(bound);
    for (std::size_t op = 0; op < 8 * n; ++op) {
        const std::size_t kind = rng() % 3;
        std::size_t i = rng() % n;
        std::size_t j = rng() % n;
        if (kind == 0) {
            for (std::size_t c = 0; c < n; ++c) m.at(i, c) = -m.at(i, c);
        } else if (kind == 1 && i != j) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(j, c));
        } else if (i != j) {
            const Rational s(rng() % 2 == 0 ? 1 : -1);
            bool fits = true;
            for (std::size_t c = 0; c < n && fits; ++c)
                fits = (m.at(i, c) + s * m.at(j, c)).abs() <= limit;
            if (!fits) continue; // skip shears that would leave the entry range
            for (std::size_t c = 0; c < n; ++c) m.at(i, c) += s * m.at(j, c);
        }
    }
    return m;
}

RatMatrix random_rank_one_nilpotent(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw DimensionError("rank-one nilpotent matrix needs dimension >= 2");
    std::mt19937_64 rng(seed);
    while (true) {
        std::vector<long> u(n), v(n);
        bool u_nonzero = false;
        for (auto& ui : u) {
            ui = draw_in(rng, -1, 1);
            u_nonzero = u_nonzero || ui != 0;
        }
        if (!u_nonzero) continue;
        long dot = 0;
        bool v_nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = draw_in(rng, -3, 3);
            v_nonzero = v_nonzero || v[i] != 0;
            dot += u[i] * v[i];
        }
        if (!v_nonzero || dot != 0) continue;
        RatMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Rational(u[i] * v[j]);
        if (a.is_zero()) continue;
        return a;
    }
}

RatMatrix random_strictly_lower_nilpotent3(std::size_t n, long bound, std::uint64_t seed) {
    if (n < 2 || n > 4)
        throw DimensionError("strictly lower sampler supports dimensions 2..4");
    std::mt19937_64 rng(seed);
    while (true) {
        RatMatrix a(n, n);
        bool nonzero = false;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                const long v = draw_in(rng, -bound, bound);
                a.at(i, j) = Rational(v);
                nonzero = nonzero || v != 0;
            }
        if (!nonzero) continue;
        if (n == 4) {
            // Break the single length-3 path 4 -> 3 -> 2 -> 1.
            const std::size_t which = rng() % 3;
            if (which == 0) a.at(1, 0) = 0;
            else if (which == 1) a.at(2, 1) = 0;
            else a.at(3, 2) = 0;
            if (a.is_zero()) continue;
        }
        return a;
    }
}

} // namespace nicety
