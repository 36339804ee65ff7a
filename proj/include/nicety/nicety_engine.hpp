#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nicety/poly_map.hpp"
#include "nicety/rat_matrix.hpp"

namespace nicety {

/// Budgets for the iterated difference sequence.  `step_work_limit` meters
/// each step separately (one unit per coefficient merge); on a breach the
/// engine falls back to a degree-truncated continuation when that is sound,
/// instead of giving up.
struct Budgets {
    std::size_t term_limit = 10'000'000;
    std::uint64_t step_work_limit = 8'000'000;
    std::uint32_t trunc_start = 16;
    std::uint32_t trunc_cap = 128;

    Limits limits() const { return Limits{term_limit, std::nullopt, nullptr}; }
};

enum class StepMode { full, truncated };

struct StepRecord {
    int k = 0;
    StepMode mode = StepMode::full;
    std::uint32_t cap = 0; // truncation degree when mode == truncated
    std::vector<std::optional<int>> degrees; // per component; empty optional = zero component
    std::vector<std::optional<int>> orders;
    std::vector<std::size_t> terms;
    std::uint64_t work = 0;
};

/// The sequence P_0 = X, P_1 = F - X, P_k = P_{k-1} o F - P_{k-1}.
///
/// `steps` holds the fully computed maps P_0 .. P_last_full; once a budget
/// trips and F fixes the origin, the engine keeps certifying steps nonzero
/// through degree-truncated arithmetic (composition by an origin-preserving
/// map never lowers the degree of a term, so a nonzero truncation of P_k
/// proves P_k != 0).  A truncated step can never declare P_k = 0.
struct NicetySequence {
    PolyMap base;
    std::vector<PolyMap> steps{};        // P_0 .. ; full maps only
    std::vector<StepRecord> records{};   // k = 1 .. last examined step
    std::optional<int> zero_step{};      // m with P_m = 0, exact
    bool truncated_tail = false;
    int first_truncated = 0;
    bool budget_exhausted = false;
    int budget_step = 0;
    std::string budget_reason{};
    bool degree_flag = false;            // some deg P_k exceeded deg(F)^(n-1) * deg(F)
    int degree_flag_step = 0;

    /// P_k for fully computed steps; zero map for k > zero_step.
    const PolyMap& full_step(int k) const;
};

NicetySequence p_sequence(const PolyMap& f, int m_max, const Budgets& budgets = {});

enum class Verdict { nice, not_nice_within, budget_exceeded };

struct NicetyReport {
    Verdict verdict = Verdict::budget_exceeded;
    int m = 0;                 // vanishing step / examined bound / breached step
    NicetySequence sequence;
    std::optional<PolyMap> inverse{};
    bool inverse_verified = false;
    bool inverse_degree_ok = false; // deg G <= deg(F)^(n-1)
};

/// Decides nicety up to m_max; on a nice verdict the inverse is synthesized
/// and verified in both composition orders.
NicetyReport check_nice(const PolyMap& f, int m_max = 32, const Budgets& budgets = {});

/// G_i = sum_{l=0}^{m-1} (-1)^l P_l^i.  Requires P_m = 0 in the sequence.
PolyMap synthesize_inverse(const NicetySequence& seq, int m);

/// Exact two-sided check G o F = F o G = identity.
bool verify_inverse(const PolyMap& f, const PolyMap& g, const Budgets& budgets = {});

struct InverseNicetyReport {
    int m = 0;                  // vanishing step of F
    int inverse_zero_step = 0;  // first zero step of the Q sequence (<= m)
    bool q_vanishes = false;    // Q_m = 0
    std::vector<std::pair<int, bool>> closed_form_ok; // per k in 1..m-1
    bool all_ok = false;
};

/// Verifies that the inverse of a nice map is nice: computes the Q sequence
/// of G = F^{-1} directly by the defining recursion, asserts Q_m = 0, and
/// cross-checks each Q_k against sum_{l=k}^{m-1} (-1)^l P_l o G^(k-1).
InverseNicetyReport verify_inverse_nicety(const PolyMap& f, int m_max = 32,
                                          const Budgets& budgets = {});

struct TransportReport {
    bool transport_ok = false;          // P~_k = T^{-1} o P_k o T for all k <= k_max
    std::optional<int> direct_zero_step{}; // vanishing step of the conjugate, when <= k_max
};

/// Builds F~ = T^{-1} o F o T, computes the sequence of F~ directly, and
/// checks P~_k = T^{-1} o P_k o T exactly for every k <= k_max.
TransportReport conjugation_transport_report(const PolyMap& f, const RatMatrix& t, int k_max,
                                             const Budgets& budgets = {});

bool conjugation_transport_check(const PolyMap& f, const RatMatrix& t, int k_max,
                                 const Budgets& budgets = {});

struct TraceEntry {
    int k;
    Polynomial lowest; // lowest homogeneous component of P_k^i
};

struct TraceResult {
    std::vector<TraceEntry> entries;
    bool complete = true;   // false when a budget stopped the trace early
    std::string note;
};

/// Lowest homogeneous component of P_k^i for k = 1.., stopping at the first
/// k with P_k^i = 0.  Uses truncated arithmetic once full steps exceed the
/// budget, which preserves lowest components exactly.
TraceResult lowest_term_trace(const PolyMap& f, std::size_t component, int k_max,
                              const Budgets& budgets = {});

/// The binomial form of the sequence: P_k = sum_{j=0}^k (-1)^(k-j) C(k,j) F^(o j),
/// pulled back through a map w (P_k o w) without materializing P_k itself.
/// `iterates` must hold F^(o 0) o w, ..., F^(o k) o w.
PolyMap sequence_pullback(std::span<const PolyMap> iterates, int k);

} // namespace nicety
