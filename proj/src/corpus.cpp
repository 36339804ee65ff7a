#include "nicety/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nicety/jacobian.hpp"

namespace nicety {

namespace {

constexpr char kNagataText[] =
    "vars: x1 x2 x3\n"
    "F1 = x1 - 2*(x1*x3 + x2^2)*x2 - (x1*x3 + x2^2)^2*x3\n"
    "F2 = x2 + (x1*x3 + x2^2)*x3\n"
    "F3 = x3\n";

constexpr char kNagataInverseText[] =
    "vars: x1 x2 x3\n"
    "F1 = x1 + 2*(x1*x3 + x2^2)*x2 - (x1*x3 + x2^2)^2*x3\n"
    "F2 = x2 - (x1*x3 + x2^2)*x3\n"
    "F3 = x3\n";

constexpr char kElementaryText[] =
    "vars: x1 x2\n"
    "F1 = x1 + x2^2\n"
    "F2 = x2\n";

constexpr char kElementaryInverseText[] =
    "vars: x1 x2\n"
    "F1 = x1 - x2^2\n"
    "F2 = x2\n";

constexpr char kRemark1Text[] =
    "vars: x1 x2\n"
    "F1 = x1 + (x1^2 + x2)^3\n"
    "F2 = x2 + x1^2\n";

constexpr char kGz16SmallText[] =
    "vars: x1 x2 x3 x4\n"
    "F1 = x1 + (x1*x3 + x2*x4)*x4\n"
    "F2 = x2 - (x1*x3 + x2*x4)*x3\n"
    "F3 = x3 + x4^3\n"
    "F4 = x4\n";

RatMatrix matrix_from_rows(std::size_t rows, std::size_t cols,
                           const std::vector<std::vector<Rational>>& data) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = data[i][j];
    return m;
}

// The two linear forms of the 16-dimensional cubic-linear example, as
// coefficient rows over x1..x16.
std::vector<Rational> l1_row() {
    std::vector<Rational> r(16, Rational(0));
    r[0] = Rational(1, 24);
    r[1] = Rational(1, 24);
    r[2] = Rational(-1, 24);
    r[3] = Rational(-1, 24);
    r[4] = Rational(1, 6);
    r[5] = Rational(1, 6);
    r[6] = Rational(-1, 3);
    return r;
}

std::vector<Rational> l2_row() {
    std::vector<Rational> r(16, Rational(0));
    r[7] = Rational(-1, 6);
    r[8] = Rational(-1, 6);
    r[9] = Rational(1, 3);
    r[10] = Rational(-1, 24);
    r[11] = Rational(-1, 24);
    r[12] = Rational(1, 24);
    r[13] = Rational(1, 24);
    return r;
}

Polynomial linear_form(const std::vector<Rational>& coeffs) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (!coeffs[j].is_zero()) terms.push_back({Monomial::unit(coeffs.size(), j), coeffs[j]});
    return Polynomial::from_terms(coeffs.size(), std::move(terms));
}

PolyMap gz16_big_map() {
    const std::size_t n = 16;
    const Polynomial l1 = linear_form(l1_row());
    const Polynomial l2 = linear_form(l2_row());
    const Polynomial s = Polynomial::variable(n, 14);
    const Polynomial t = Polynomial::variable(n, 15);
    const Polynomial zero = Polynomial::zero(n);

    // Per-component cube arguments: a1 * L1 + a2 * L2 + c_s * X15 + c_t * X16.
    struct Arg {
        int a1, a2, cs, ct;
    };
    const Arg args[16] = {
        {1, 0, 1, 1},  {1, 0, -1, -1}, {1, 0, 1, -1}, {1, 0, -1, 1},
        {0, 1, 0, 1},  {0, 1, 0, -1},  {0, 1, 0, 0},  {1, 0, 1, 0},
        {1, 0, -1, 0}, {1, 0, 0, 0},   {0, 1, 1, 1},  {0, 1, -1, -1},
        {0, 1, 1, -1}, {0, 1, -1, 1},  {0, 0, 0, 1},  {0, 0, 0, 0},
    };

    std::vector<Polynomial> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial arg = zero;
        if (args[i].a1 != 0) arg = add(arg, scale(l1, Rational(args[i].a1)));
        if (args[i].a2 != 0) arg = add(arg, scale(l2, Rational(args[i].a2)));
        if (args[i].cs != 0) arg = add(arg, scale(s, Rational(args[i].cs)));
        if (args[i].ct != 0) arg = add(arg, scale(t, Rational(args[i].ct)));
        Polynomial comp = Polynomial::variable(n, i);
        if (!arg.is_zero()) comp = add(comp, pow(arg, 3));
        comps.push_back(std::move(comp));
    }
    return PolyMap(n, std::move(comps));
}

RatMatrix gz16_b() {
    RatMatrix b(4, 16);
    const auto r1 = l1_row();
    const auto r2 = l2_row();
    for (std::size_t j = 0; j < 16; ++j) {
        b.at(0, j) = r1[j];
        b.at(1, j) = r2[j];
    }
    b.at(2, 14) = 1;
    b.at(3, 15) = 1;
    return b;
}

RatMatrix gz16_c() {
    RatMatrix c(16, 4);
    c.at(6, 0) = -3;
    c.at(7, 1) = -6;
    c.at(14, 2) = 1;
    c.at(15, 3) = 1;
    return c;
}

// Identity except rows 7 and 8 (1-based), which hold the coefficient rows of
// L1 and L2.  In these coordinates the nonlinear part of the 16-dimensional
// map involves only y7, y8, y15, y16, which makes symbolic work on it cheap.
RatMatrix gz16_adapter() {
    RatMatrix m = RatMatrix::identity(16);
    const auto r1 = l1_row();
    const auto r2 = l2_row();
    for (std::size_t j = 0; j < 16; ++j) {
        m.at(6, j) = r1[j];
        m.at(7, j) = r2[j];
    }
    return m;
}

Fixture make_fixture(const std::string& name) {
    if (name == "identity_n") {
        ParsedMap pm = parse_map("vars: x1 x2 x3\nF1 = x1\nF2 = x2\nF3 = x3\n");
        return Fixture{name, "identity map of affine 3-space", pm.var_names, pm.map,
                       {}, {}, {}, {}};
    }
    if (name == "elementary") {
        ParsedMap pm = parse_map(kElementaryText);
        return Fixture{name,
                       "elementary shear (x1 + x2^2, x2)",
                       pm.var_names,
                       pm.map,
                       {},
                       {},
                       {},
                       {{"inverse", kElementaryInverseText}}};
    }
    if (name == "nagata") {
        ParsedMap pm = parse_map(kNagataText);
        return Fixture{name,
                       "Nagata automorphism of affine 3-space, p = x1*x3 + x2^2",
                       pm.var_names,
                       pm.map,
                       {},
                       {},
                       {},
                       {{"inverse", kNagataInverseText}}};
    }
    if (name == "remark1_nonnice") {
        ParsedMap pm = parse_map(kRemark1Text);
        return Fixture{name,
                       "composition of two elementary shears whose difference sequence "
                       "never vanishes",
                       pm.var_names,
                       pm.map,
                       {},
                       {},
                       {},
                       {}};
    }
    if (name == "druzkowski_idx2") {
        RatMatrix a = matrix_from_rows(2, 2, {{1, -1}, {1, -1}});
        DruzkowskiMap d = druzkowski(a);
        return Fixture{name,
                       "cubic-linear map from the rank-one nilpotent matrix [[1,-1],[1,-1]]",
                       default_names(2),
                       d.map,
                       {{"H", d.cubic_part}},
                       {},
                       {{"A", a}},
                       {}};
    }
    if (name == "druzkowski_idx3") {
        RatMatrix a = matrix_from_rows(3, 3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
        DruzkowskiMap d = druzkowski(a);
        return Fixture{name,
                       "cubic-linear map whose Jacobian of the cubic part has "
                       "nilpotence index 3",
                       default_names(3),
                       d.map,
                       {{"H", d.cubic_part}},
                       {},
                       {{"A", a}},
                       {}};
    }
    if (name == "gz16") {
        ParsedMap small = parse_map(kGz16SmallText);
        Fixture fx{name,
                   "16-dimensional cubic-linear map paired with a 4-dimensional cubic map "
                   "through B and C",
                   default_names(16),
                   gz16_big_map(),
                   {{"f", small.map}},
                   {{"f", small.var_names}},
                   {{"B", gz16_b()}, {"C", gz16_c()}, {"adapter", gz16_adapter()}},
                   {}};
        return fx;
    }
    if (name == "hubbers8_default") {
        HubbersMaps maps = hubbers_eighth();
        return Fixture{name,
                       "eighth class of the dimension-4 cubic homogeneous classification, "
                       "all parameters 1, with its factorization F = G o H",
                       default_names(4),
                       maps.f,
                       {{"H", maps.h}, {"G", maps.g}},
                       {},
                       {},
                       {}};
    }
    throw UnknownFixtureError("unknown fixture '" + name + "'");
}

const std::map<std::string, Fixture>& registry() {
    static const std::map<std::string, Fixture> fixtures = [] {
        std::map<std::string, Fixture> m;
        for (const auto& name : list_fixtures()) m.emplace(name, make_fixture(name));
        return m;
    }();
    return fixtures;
}

void push(std::vector<FactResult>& out, std::string label, Provenance prov, bool pass,
          std::string detail = "") {
    out.push_back({std::move(label), prov, pass, false, std::move(detail)});
}

void push_info(std::vector<FactResult>& out, std::string label, Provenance prov,
               std::string detail) {
    out.push_back({std::move(label), prov, true, true, std::move(detail)});
}

std::string verdict_text(const NicetyReport& rep) {
    switch (rep.verdict) {
    case Verdict::nice: return "Nice(" + std::to_string(rep.m) + ")";
    case Verdict::not_nice_within: return "NotNiceWithin(" + std::to_string(rep.m) + ")";
    default: return "BudgetExceeded(" + std::to_string(rep.m) + ")";
    }
}

// Closed forms of the third and fourth steps for cubic-linear maps with
// (JH)^3 = 0: with s_i = sum_j a_ij L_j^3,
//   P_3^i = 6 L_i s_i^2 + 6 s_i^3 and P_4^i = 6 s_i^3.
PolyMap closed_form_step3(const DruzkowskiMap& d, const Limits& lim) {
    const std::size_t n = d.a.rows();
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial s = Polynomial::zero(n);
        for (std::size_t j = 0; j < n; ++j)
            if (!d.a.at(i, j).is_zero())
                s = add(s, scale(d.cubic_part.component(j), d.a.at(i, j)));
        Polynomial s2 = mul(s, s, lim);
        comps.push_back(add(scale(mul(d.linear_forms[i], s2, lim), 6),
                            scale(mul(s2, s, lim), 6)));
    }
    return PolyMap(n, std::move(comps));
}

PolyMap closed_form_step4(const DruzkowskiMap& d, const Limits& lim) {
    const std::size_t n = d.a.rows();
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial s = Polynomial::zero(n);
        for (std::size_t j = 0; j < n; ++j)
            if (!d.a.at(i, j).is_zero())
                s = add(s, scale(d.cubic_part.component(j), d.a.at(i, j)));
        comps.push_back(scale(mul(mul(s, s, lim), s, lim), 6));
    }
    return PolyMap(n, std::move(comps));
}

// Lowest terms of the first component's sequence for the non-nice
// two-variable map.  The monomial pattern is x1^(2r-2+5m) x2^(4-r) for
// k = 4m + r, r in 1..4.  The coefficients for k <= 4 are 1, 3, 6, 6; from
// k = 5 on, the exact expansion gives 252, 756, 1512, 1512 (each verified
// against an independent truncated brute-force expansion in the tests): at
// the r = 4 -> r = 1 rollover the lowest term of P_{k+1} collects a second
// contribution from the degree-7 part of P_k (54 x1^3 x2^4 in P_4), so a
// recursion on the lowest term alone understates the coefficient.
Polynomial remark1_trace_monomial(int k, Rational coeff) {
    const int m = (k - 1) / 4;
    const int r = k - 4 * m;
    Monomial::Exponents exps{static_cast<std::uint32_t>(2 * r - 2 + 5 * m),
                             static_cast<std::uint32_t>(4 - r)};
    return Polynomial::monomial(2, Monomial(std::move(exps)), std::move(coeff));
}

Polynomial remark1_trace_value(int k) {
    static const long coeff[9] = {0, 1, 3, 6, 6, 252, 756, 1512, 1512};
    if (k < 1 || k > 8) throw DomainError("trace value frozen only for k <= 8");
    return remark1_trace_monomial(k, Rational(coeff[k]));
}

std::vector<FactResult> run_identity(const Fixture& fx, const Budgets& budgets) {
    std::vector<FactResult> out;
    NicetyReport rep = check_nice(fx.map, 4, budgets);
    push(out, "verdict is Nice(1)", Provenance::trivial,
         rep.verdict == Verdict::nice && rep.m == 1, verdict_text(rep));
    push(out, "inverse is the identity", Provenance::trivial,
         rep.inverse && rep.inverse->is_identity() && rep.inverse_verified);
    return out;
}

std::vector<FactResult> run_elementary(const Fixture& fx, const Budgets& budgets) {
    std::vector<FactResult> out;
    NicetyReport rep = check_nice(fx.map, 8, budgets);
    push(out, "verdict is Nice(2)", Provenance::derived,
         rep.verdict == Verdict::nice && rep.m == 2, verdict_text(rep));
    const PolyMap expected = parse_map(fx.frozen_texts.at("inverse")).map;
    push(out, "inverse equals the frozen expected map", Provenance::derived,
         rep.inverse && *rep.inverse == expected && rep.inverse_verified);
    push(out, "map is Keller", Provenance::trivial,
         keller_check(fx.map, budgets.limits()).is_keller);
    return out;
}

std::vector<FactResult> run_nagata(const Fixture& fx, const Budgets& budgets) {
    std::vector<FactResult> out;
    NicetyReport rep = check_nice(fx.map, 8, budgets);
    push(out, "verdict is Nice(3)", Provenance::asserted,
         rep.verdict == Verdict::nice && rep.m == 3, verdict_text(rep));
    const bool p31 = rep.sequence.steps.size() > 3 &&
                     rep.sequence.full_step(3).component(0).is_zero();
    const bool p22 = rep.sequence.steps.size() > 2 &&
                     rep.sequence.full_step(2).component(1).is_zero();
    push(out, "P_3^1 = 0", Provenance::asserted, p31);
    push(out, "P_2^2 = 0", Provenance::asserted, p22);
    {
        // P_2^1 = -2 p^2 x3 with p = x1 x3 + x2^2.
        const Polynomial p = parse_map("vars: x1 x2 x3\nF1 = x1*x3 + x2^2\n").map.component(0);
        const Polynomial expected =
            scale(mul(mul(p, p), Polynomial::variable(3, 2)), Rational(-2));
        push(out, "P_2^1 = -2*p^2*x3", Provenance::derived,
             rep.sequence.steps.size() > 2 &&
                 rep.sequence.full_step(2).component(0) == expected);
    }
    const PolyMap expected_inv = parse_map(fx.frozen_texts.at("inverse")).map;
    push(out, "inverse equals the frozen expected map", Provenance::derived,
         rep.inverse && *rep.inverse == expected_inv && rep.inverse_verified);
    push(out, "Jacobian determinant is 1", Provenance::derived,
         keller_check(fx.map, budgets.limits()).det == Polynomial::one(3));
    const auto dg = rep.inverse ? rep.inverse->degree() : std::nullopt;
    push(out, "deg(inverse) = 5 <= deg(F)^2 = 25", Provenance::derived,
         dg && *dg == 5 && rep.inverse_degree_ok);
    return out;
}

std::vector<FactResult> run_remark1(const Fixture& fx, const Budgets& budgets) {
    std::vector<FactResult> out;
    NicetyReport rep = check_nice(fx.map, 8, budgets);
    push(out, "verdict is NotNiceWithin(8)", Provenance::asserted,
         rep.verdict == Verdict::not_nice_within && rep.m == 8, verdict_text(rep));
    TraceResult trace = lowest_term_trace(fx.map, 0, 8, budgets);
    bool monos_ok = trace.entries.size() == 8;
    bool low_ok = true;
    bool all_ok = trace.entries.size() == 8;
    for (const auto& e : trace.entries) {
        const Polynomial expected = remark1_trace_value(e.k);
        monos_ok = monos_ok && !e.lowest.is_zero() &&
                   e.lowest.terms().size() == 1 &&
                   e.lowest.terms()[0].mono == expected.terms()[0].mono;
        if (e.k <= 4) low_ok = low_ok && e.lowest == expected;
        all_ok = all_ok && e.lowest == expected;
    }
    push(out, "trace monomials follow x1^(2r-2+5m) x2^(4-r) for k <= 8", Provenance::asserted,
         monos_ok);
    push(out, "trace coefficients 1, 3, 6, 6 for k <= 4", Provenance::asserted, low_ok);
    push(out, "trace equals the exact expansion for k <= 8 (252, 756, 1512, 1512 from k = 5)",
         Provenance::derived, all_ok,
         "coefficients from k = 5 differ from the closed recursion, which tracks only the "
         "lowest term");
    push(out, "map is Keller with determinant 1", Provenance::derived,
         keller_check(fx.map, budgets.limits()).det == Polynomial::one(2));
    return out;
}

std::vector<FactResult> run_druzkowski_idx2(const Fixture& fx, const Budgets& budgets) {
    std::vector<FactResult> out;
    const RatMatrix& a = fx.aux_matrices.at("A");
    push(out, "A^2 = 0", Provenance::trivial, mul(a, a).is_zero());
    const PolyMap& h = fx.aux_maps.at("H");
    PolyMatrix jh = jacobian(h);
    push(out, "(JH)^2 = 0", Provenance::derived,
         mul(jh, jh, budgets.limits()).is_zero());
    NicetyReport rep = check_nice(fx.map, 8, budgets);
    push(out, "verdict is Nice(2)", Provenance::derived,
         rep.verdict == Verdict::nice && rep.m == 2, verdict_text(rep));
    const PolyMap x_minus_h = map_sub(PolyMap::identity(2), h);
    push(out, "inverse is X - H", Provenance::derived,
         rep.inverse && *rep.inverse == x_minus_h);
    return out;
}

std::vector<FactResult> run_druzkowski_idx3(const Fixture& fx, const Budgets& budgets) {
    std::vector<FactResult> out;
    const PolyMap& h = fx.aux_maps.at("H");
    const Limits lim = budgets.limits();
    PolyMatrix jh = jacobian(h);
    PolyMatrix jh2 = mul(jh, jh, lim);
    push(out, "(JH)^2 != 0 and (JH)^3 = 0", Provenance::derived,
         !jh2.is_zero() && mul(jh2, jh, lim).is_zero());
    NicetyReport rep = check_nice(fx.map, 8, budgets);
    push(out, "verdict is Nice(5)", Provenance::derived,
         rep.verdict == Verdict::nice && rep.m == 5, verdict_text(rep));
    const auto dg = rep.inverse ? rep.inverse->degree() : std::nullopt;
    push(out, "deg(inverse) <= 9", Provenance::asserted, dg && *dg <= 9,
         dg ? "deg = " + std::to_string(*dg) : "");
    DruzkowskiMap d = druzkowski(fx.aux_matrices.at("A"));
    const bool p3_ok = rep.sequence.steps.size() > 3 &&
                       rep.sequence.full_step(3) == closed_form_step3(d, lim);
    const bool p4_ok = rep.sequence.steps.size() > 4 &&
                       rep.sequence.full_step(4) == closed_form_step4(d, lim);
    push(out, "P_3 equals the closed form 6*L*s^2 + 6*s^3", Provenance::derived, p3_ok);
    push(out, "P_4 equals the closed form 6*s^3", Provenance::derived, p4_ok);
    return out;
}

std::vector<FactResult> run_gz16(const Fixture& fx, const Budgets& budgets) {
    std::vector<FactResult> out;
    const PolyMap& f = fx.aux_maps.at("f");
    const RatMatrix& b = fx.aux_matrices.at("B");
    const RatMatrix& c = fx.aux_matrices.at("C");
    const Limits lim = budgets.limits();

    GZReport gz = gz_check(GZPair{f, fx.map, b, c}, 3, budgets);
    push(out, "B C = I_4", Provenance::asserted, gz.bc_identity);
    push(out, "f(x) = B F(C x)", Provenance::asserted, gz.base_pairing);
    bool seq_ok = gz.sequence_pairing.size() == 4;
    for (const auto& [t, ok] : gz.sequence_pairing) seq_ok = seq_ok && ok;
    push(out, "p_t(x) = B P_t(C x) for t = 0..3", Provenance::asserted, seq_ok);

    NicetyReport small_rep = check_nice(f, 8, budgets);
    push(out, "f is NotNiceWithin(8)", Provenance::asserted,
         small_rep.verdict == Verdict::not_nice_within, verdict_text(small_rep));

    const PolyMap h = map_sub(fx.map, PolyMap::identity(16));
    NilpotenceResult rnd = nilpotence_index_randomized(jacobian(h), 8, 8, 20240116);
    push(out, "J(F - Id) has nilpotence index 5 (randomized, 8 samples)", Provenance::asserted,
         rnd.nilpotent && rnd.index == 5,
         "mode=randomized seed=20240116 samples=8 index=" + std::to_string(rnd.index));

    // Exact confirmation in adapted coordinates: conjugating by the adapter
    // concentrates the nonlinear part on four variables, where symbolic
    // powers stay small.
    const RatMatrix& adapter = fx.aux_matrices.at("adapter");
    const PolyMap conj = conjugate(fx.map, adapter.inverse(), lim);
    const PolyMap h_adapted = map_sub(conj, PolyMap::identity(16));
    bool four_vars_only = true;
    for (const auto& comp : h_adapted.components())
        for (std::size_t v = 0; v < 16; ++v)
            if (v != 6 && v != 7 && v != 14 && v != 15 && comp.involves(v))
                four_vars_only = false;
    push(out, "adapted coordinates concentrate F - Id on four variables",
         Provenance::derived, four_vars_only);
    NilpotenceResult sym = nilpotence_index_symbolic(jacobian(h_adapted), 8, lim);
    push(out, "J(F - Id) has nilpotence index 5 (symbolic, adapted coordinates)",
         Provenance::asserted, sym.nilpotent && sym.index == 5,
         "index=" + std::to_string(sym.index));
    return out;
}

std::vector<FactResult> run_hubbers(const Fixture& fx, const Budgets& budgets) {
    std::vector<FactResult> out;
    const PolyMap& h = fx.aux_maps.at("H");
    const PolyMap& g = fx.aux_maps.at("G");
    push(out, "G o H = F", Provenance::asserted,
         compose(g, h, budgets.limits()) == fx.map);
    NicetyReport hrep = check_nice(h, 32, budgets);
    push(out, "H is nice with m <= 32", Provenance::asserted,
         hrep.verdict == Verdict::nice && hrep.m <= 32, verdict_text(hrep));
    NicetyReport grep = check_nice(g, 32, budgets);
    push(out, "G is Nice(2)", Provenance::derived,
         grep.verdict == Verdict::nice && grep.m == 2, verdict_text(grep));
    NicetyReport frep = check_nice(fx.map, 32, budgets);
    push_info(out, "verdict for F itself (reported, not asserted)", Provenance::asserted,
              verdict_text(frep));
    return out;
}

} // namespace

std::string provenance_name(Provenance p) {
    switch (p) {
    case Provenance::asserted: return "paper";
    case Provenance::trivial: return "trivial";
    default: return "derived";
    }
}

const std::vector<std::string>& list_fixtures() {
    static const std::vector<std::string> names = {
        "identity_n",      "elementary",      "nagata",
        "remark1_nonnice", "druzkowski_idx2", "druzkowski_idx3",
        "gz16",            "hubbers8_default"};
    return names;
}

const Fixture& get_fixture(const std::string& name) {
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw UnknownFixtureError("unknown fixture '" + name + "'");
    return it->second;
}

std::vector<FactResult> run_fixture(const std::string& name, const Budgets& budgets) {
    const Fixture& fx = get_fixture(name);
    if (name == "identity_n") return run_identity(fx, budgets);
    if (name == "elementary") return run_elementary(fx, budgets);
    if (name == "nagata") return run_nagata(fx, budgets);
    if (name == "remark1_nonnice") return run_remark1(fx, budgets);
    if (name == "druzkowski_idx2") return run_druzkowski_idx2(fx, budgets);
    if (name == "druzkowski_idx3") return run_druzkowski_idx3(fx, budgets);
    if (name == "gz16") return run_gz16(fx, budgets);
    if (name == "hubbers8_default") return run_hubbers(fx, budgets);
    throw UnknownFixtureError("unknown fixture '" + name + "'");
}

std::vector<std::string> write_fixture_files(const std::string& name, const std::string& dir) {
    const Fixture& fx = get_fixture(name);
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::vector<std::string> written;
    auto emit = [&](const std::string& file, const std::string& content) {
        std::ofstream os(fs::path(dir) / file, std::ios::binary);
        if (!os) throw Error("cannot write " + file);
        os << content;
        written.push_back(file);
    };
    emit(name + ".map", render_map(fx.map, fx.var_names));
    for (const auto& [aux, map] : fx.aux_maps) {
        const auto names_it = fx.aux_names.find(aux);
        const auto& names =
            names_it != fx.aux_names.end() ? names_it->second : default_names(map.domain_dim());
        emit(name + "." + aux + ".map", render_map(map, names));
    }
    for (const auto& [aux, m] : fx.aux_matrices) emit(name + "." + aux + ".json", render_matrix(m));
    return written;
}

} // namespace nicety
