#include "nicety/nicety_engine.hpp"

#include <algorithm>

namespace nicety {

namespace {

StepRecord record_of(int k, const PolyMap& pk, StepMode mode, std::uint32_t cap,
                     std::uint64_t work) {
    StepRecord r;
    r.k = k;
    r.mode = mode;
    r.cap = cap;
    r.work = work;
    for (const auto& c : pk.components()) {
        r.degrees.push_back(c.degree());
        r.orders.push_back(c.is_zero() ? std::nullopt : std::optional<int>(c.order()));
        r.terms.push_back(c.term_count());
    }
    return r;
}

PolyMap zero_map(std::size_t n) {
    return PolyMap(n, std::vector<Polynomial>(n, Polynomial::zero(n)));
}

// One sequence step: P o F - P, with the substitutions sharing `subst`'s
// power cache and the whole step metered as a unit.
PolyMap step(const PolyMap& p, Substituter& subst, WorkMeter& meter,
             std::optional<std::uint32_t> cap) {
    std::vector<Polynomial> comps;
    comps.reserve(p.codomain_dim());
    for (const auto& c : p.components()) comps.push_back(subst.apply(c, &meter));
    PolyMap composed(p.domain_dim(), std::move(comps));
    PolyMap next = map_sub(composed, p);
    if (cap) next = truncate_degree(next, *cap);
    return next;
}

// deg(F)^(n-1) * deg(F): past this no step can still contribute to a valid
// inverse, so runaway growth gets flagged.
std::optional<mpz_class> growth_flag_bound(const PolyMap& f) {
    const auto d = f.degree();
    if (!d || *d <= 0) return std::nullopt;
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(*d),
                  static_cast<unsigned long>(f.domain_dim()));
    return bound;
}

} // namespace

const PolyMap& NicetySequence::full_step(int k) const {
    if (k >= 0 && static_cast<std::size_t>(k) < steps.size()) return steps[k];
    throw DomainError("step " + std::to_string(k) + " was not fully computed");
}

NicetySequence p_sequence(const PolyMap& f, int m_max, const Budgets& budgets) {
    if (!f.is_square()) throw DimensionError("p_sequence requires a square map");
    if (m_max < 1) throw DomainError("m_max must be at least 1");

    NicetySequence seq{.base = f};
    seq.steps.push_back(PolyMap::identity(f.domain_dim()));

    const auto flag_bound = growth_flag_bound(f);
    const Limits base = budgets.limits();
    Substituter full_subst(f, base);

    int k = 1;
    for (; k <= m_max; ++k) {
        WorkMeter meter(budgets.step_work_limit);
        try {
            PolyMap pk = (k == 1)
                             ? map_sub(f, PolyMap::identity(f.domain_dim()))
                             : step(seq.steps.back(), full_subst, meter, std::nullopt);
            seq.records.push_back(record_of(k, pk, StepMode::full, 0, meter.used()));
            if (flag_bound && !seq.degree_flag) {
                const auto d = pk.degree();
                if (d && mpz_class(*d) > *flag_bound) {
                    seq.degree_flag = true;
                    seq.degree_flag_step = k;
                }
            }
            const bool zero = pk.is_zero();
            seq.steps.push_back(std::move(pk));
            if (zero) {
                seq.zero_step = k;
                return seq;
            }
        } catch (const BudgetError& e) {
            if (!f.fixes_origin()) {
                seq.budget_exhausted = true;
                seq.budget_step = k;
                seq.budget_reason = std::string(e.what()) +
                                    "; map does not fix the origin, so the truncated "
                                    "continuation is unavailable";
                return seq;
            }
            seq.truncated_tail = true;
            seq.first_truncated = k;
            break;
        }
    }
    if (k > m_max) return seq; // every step fit in the budgets

    // Truncated continuation.  For an origin-preserving F, composition never
    // lowers the degree of a term, so trunc_D(P o F - P) can be computed from
    // trunc_D(P) alone and a nonzero truncation certifies P_k != 0.  A zero
    // truncation is inconclusive: raise the cap and replay from the last
    // fully computed step.
    std::uint32_t cap = budgets.trunc_start;
    const int last_full = static_cast<int>(seq.steps.size()) - 1;
    while (true) {
        try {
            Substituter subst(f, base.with_cap(cap));
            PolyMap current = truncate_degree(seq.steps[last_full], cap);
            std::vector<StepRecord> tail_records;
            bool inconclusive = false;
            for (int j = last_full + 1; j <= m_max; ++j) {
                WorkMeter meter(budgets.step_work_limit);
                current = step(current, subst, meter, cap);
                if (current.is_zero()) {
                    inconclusive = true;
                    break;
                }
                tail_records.push_back(
                    record_of(j, current, StepMode::truncated, cap, meter.used()));
            }
            if (!inconclusive) {
                for (auto& r : tail_records) seq.records.push_back(std::move(r));
                return seq;
            }
            if (cap >= budgets.trunc_cap) {
                seq.budget_exhausted = true;
                seq.budget_step = seq.first_truncated;
                seq.budget_reason = "truncated sequence vanished up to degree " +
                                    std::to_string(cap) +
                                    "; cannot certify the remaining steps within budget";
                return seq;
            }
            cap = std::min<std::uint32_t>(budgets.trunc_cap, cap * 2);
        } catch (const BudgetError& e) {
            seq.budget_exhausted = true;
            seq.budget_step = seq.first_truncated;
            seq.budget_reason = std::string("truncated continuation: ") + e.what();
            return seq;
        }
    }
}

PolyMap synthesize_inverse(const NicetySequence& seq, int m) {
    if (!seq.zero_step || *seq.zero_step != m)
        throw DomainError("synthesize_inverse: P_m is not the first zero step");
    PolyMap g = seq.steps[0]; // P_0 = identity
    for (int l = 1; l < m; ++l) {
        const PolyMap& pl = seq.steps[static_cast<std::size_t>(l)];
        g = (l % 2 == 1) ? map_sub(g, pl) : map_add(g, pl);
    }
    return g;
}

bool verify_inverse(const PolyMap& f, const PolyMap& g, const Budgets& budgets) {
    if (f.domain_dim() != g.codomain_dim() || g.domain_dim() != f.codomain_dim())
        throw DimensionError("verify_inverse: shape mismatch");
    const Limits lim = budgets.limits();
    const PolyMap id = PolyMap::identity(f.domain_dim());
    return compose(g, f, lim) == id && compose(f, g, lim) == id;
}

NicetyReport check_nice(const PolyMap& f, int m_max, const Budgets& budgets) {
    NicetyReport report{.sequence = p_sequence(f, m_max, budgets)};
    const NicetySequence& seq = report.sequence;
    if (seq.zero_step) {
        report.verdict = Verdict::nice;
        report.m = *seq.zero_step;
        report.inverse = synthesize_inverse(seq, report.m);
        report.inverse_verified = verify_inverse(f, *report.inverse, budgets);
        if (!report.inverse_verified)
            throw InternalError(
                "vanishing step found but the synthesized inverse failed verification");
        const auto dg = report.inverse->degree();
        const auto d = f.degree();
        if (!dg || !d || *d <= 0) {
            report.inverse_degree_ok = true;
        } else {
            mpz_class bound;
            mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(*d),
                          static_cast<unsigned long>(f.domain_dim() - 1));
            report.inverse_degree_ok = mpz_class(*dg) <= bound;
        }
    } else if (seq.budget_exhausted) {
        report.verdict = Verdict::budget_exceeded;
        report.m = seq.budget_step;
    } else {
        report.verdict = Verdict::not_nice_within;
        report.m = m_max;
    }
    return report;
}

InverseNicetyReport verify_inverse_nicety(const PolyMap& f, int m_max, const Budgets& budgets) {
    NicetyReport base = check_nice(f, m_max, budgets);
    if (base.verdict != Verdict::nice)
        throw DomainError("verify_inverse_nicety requires a nice map");
    const int m = base.m;
    const PolyMap& g = *base.inverse;
    const Limits lim = budgets.limits();
    const PolyMap zero = zero_map(g.domain_dim());

    InverseNicetyReport rep;
    rep.m = m;

    NicetySequence qseq = p_sequence(g, m, budgets);
    rep.q_vanishes = qseq.zero_step.has_value() && *qseq.zero_step <= m;
    rep.inverse_zero_step = qseq.zero_step ? *qseq.zero_step : 0;
    if (!rep.q_vanishes) return rep;

    auto q_at = [&](int k) -> const PolyMap& {
        if (k < static_cast<int>(qseq.steps.size())) return qseq.steps[k];
        return zero; // beyond the vanishing step the sequence stays zero
    };

    // Closed form: Q_k = sum_{l=k}^{m-1} (-1)^l P_l o G^(k-1).
    bool all = true;
    PolyMap g_power = PolyMap::identity(g.domain_dim()); // G^0
    for (int k = 1; k < m; ++k) {
        if (k > 1) g_power = compose(g_power, g, lim);
        PolyMap rhs = zero;
        for (int l = k; l < m; ++l) {
            PolyMap term = compose(base.sequence.full_step(l), g_power, lim);
            rhs = (l % 2 == 0) ? map_add(rhs, term) : map_sub(rhs, term);
        }
        const bool ok = q_at(k) == rhs;
        rep.closed_form_ok.emplace_back(k, ok);
        all = all && ok;
    }
    rep.all_ok = all;
    return rep;
}

TransportReport conjugation_transport_report(const PolyMap& f, const RatMatrix& t, int k_max,
                                             const Budgets& budgets) {
    if (!f.is_square()) throw DimensionError("conjugation transport requires a square map");
    if (!t.is_square() || t.rows() != f.domain_dim())
        throw DimensionError("conjugating matrix shape mismatch");
    const Limits lim = budgets.limits();
    const RatMatrix tinv = t.inverse(); // throws SingularMatrixError
    const PolyMap tmap = PolyMap::linear(t);
    const PolyMap tinv_map = PolyMap::linear(tinv);
    const PolyMap conjugated = compose(tinv_map, compose(f, tmap, lim), lim);

    NicetySequence direct = p_sequence(conjugated, k_max, budgets);
    NicetySequence original = p_sequence(f, k_max, budgets);
    if (direct.truncated_tail || direct.budget_exhausted || original.truncated_tail ||
        original.budget_exhausted)
        throw BudgetError(BudgetError::Kind::work,
                          "conjugation transport check exceeded its budgets");

    const PolyMap zero = zero_map(f.domain_dim());
    auto step_or_zero = [&](const NicetySequence& s, int k) -> const PolyMap& {
        if (k < static_cast<int>(s.steps.size())) return s.steps[k];
        return zero;
    };
    TransportReport rep;
    rep.transport_ok = true;
    rep.direct_zero_step = direct.zero_step;
    for (int k = 1; k <= k_max && rep.transport_ok; ++k) {
        PolyMap transported =
            compose(tinv_map, compose(step_or_zero(original, k), tmap, lim), lim);
        if (step_or_zero(direct, k) != transported) rep.transport_ok = false;
    }
    return rep;
}

bool conjugation_transport_check(const PolyMap& f, const RatMatrix& t, int k_max,
                                 const Budgets& budgets) {
    return conjugation_transport_report(f, t, k_max, budgets).transport_ok;
}

TraceResult lowest_term_trace(const PolyMap& f, std::size_t component, int k_max,
                              const Budgets& budgets) {
    if (!f.is_square()) throw DimensionError("lowest_term_trace requires a square map");
    if (component >= f.codomain_dim())
        throw DimensionError("lowest_term_trace: component index out of range");
    if (k_max < 1) throw DomainError("k_max must be at least 1");

    TraceResult out;
    NicetySequence seq = p_sequence(f, k_max, budgets);

    const int last_full = static_cast<int>(seq.steps.size()) - 1;
    for (int k = 1; k <= last_full; ++k) {
        const Polynomial& pk_i = seq.steps[k].component(component);
        if (pk_i.is_zero()) return out; // genuine zero terminates the trace
        out.entries.push_back({k, lowest_component(pk_i)});
    }
    if (last_full >= k_max || seq.zero_step) return out;

    // Continue with truncated arithmetic; a nonzero truncation has exactly
    // the true lowest homogeneous component.
    if (!f.fixes_origin()) {
        out.complete = false;
        out.note = "budgets exceeded and the map does not fix the origin";
        return out;
    }
    const Limits base = budgets.limits();
    std::uint32_t cap = budgets.trunc_start;
    while (true) {
        std::vector<TraceEntry> tail;
        bool vanished_at_cap = false;
        try {
            Substituter subst(f, base.with_cap(cap));
            PolyMap current = truncate_degree(seq.steps[last_full], cap);
            for (int k = last_full + 1; k <= k_max; ++k) {
                WorkMeter meter(budgets.step_work_limit);
                current = step(current, subst, meter, cap);
                const Polynomial& ci = current.component(component);
                if (ci.is_zero()) {
                    vanished_at_cap = true;
                    break;
                }
                tail.push_back({k, lowest_component(ci)});
            }
        } catch (const BudgetError&) {
            for (auto& e : tail) out.entries.push_back(std::move(e));
            out.complete = false;
            out.note = "budgets exceeded during the truncated continuation";
            return out;
        }
        if (!vanished_at_cap) {
            for (auto& e : tail) out.entries.push_back(std::move(e));
            return out;
        }
        if (cap >= budgets.trunc_cap) {
            for (auto& e : tail) out.entries.push_back(std::move(e));
            out.complete = false;
            out.note = "component vanished up to degree " + std::to_string(cap) +
                       "; zero/nonzero beyond this is undecided within budget";
            return out;
        }
        cap = std::min<std::uint32_t>(budgets.trunc_cap, cap * 2);
    }
}

PolyMap sequence_pullback(std::span<const PolyMap> iterates, int k) {
    if (k < 0 || static_cast<std::size_t>(k) >= iterates.size())
        throw DomainError("sequence_pullback: need iterates F^0 o w .. F^k o w");
    Rational c0 = Rational::binomial(static_cast<unsigned long>(k), 0);
    if (k % 2 == 1) c0 = -c0;
    PolyMap acc = map_scale(iterates[0], c0);
    for (int j = 1; j <= k; ++j) {
        Rational c = Rational::binomial(static_cast<unsigned long>(k),
                                        static_cast<unsigned long>(j));
        if ((k - j) % 2 == 1) c = -c;
        acc = map_add(acc, map_scale(iterates[j], c));
    }
    return acc;
}

} // namespace nicety
