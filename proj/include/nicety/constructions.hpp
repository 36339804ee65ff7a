#pragma once

#include <cstdint>
#include <vector>

#include "nicety/nicety_engine.hpp"

namespace nicety {

struct TriangularOptions {
    int max_degree = 3;
    int max_terms_per_component = 3; // 0 terms allowed: H_i may vanish
    long coeff_bound = 3;            // nonzero coefficients in [-bound, bound]
};

/// Random triangular map: F_i = X_i + H_i(X_{i+1}, ..., X_n), F_n = X_n,
/// deterministic under the seed.
PolyMap make_triangular(std::size_t n, std::uint64_t seed, const TriangularOptions& opt = {});

/// Exact normalized triangular shape: F_n = X_n and F_i - X_i involves only
/// variables of index > i.  Triangulability up to conjugation is out of scope.
bool is_triangular(const PolyMap& f);

/// T^{-1} o F o T; throws SingularMatrixError for singular T.
PolyMap conjugate(const PolyMap& f, const RatMatrix& t, const Limits& lim = {});

/// Cubic-linear map data: F = X + H with H_i = L_i^3 and L_i = (A X)_i.
struct DruzkowskiMap {
    RatMatrix a;
    std::vector<Polynomial> linear_forms; // L_i
    PolyMap cubic_part;                   // H
    PolyMap map;                          // F = X + H
};

DruzkowskiMap druzkowski(const RatMatrix& a);

struct GZPair {
    PolyMap small_map; // f, dimension n
    PolyMap big_map;   // F, dimension N > n
    RatMatrix b;       // n x N
    RatMatrix c;       // N x n
};

struct GZReport {
    bool bc_identity = false;      // B C = I_n
    bool base_pairing = false;     // f(x) = B F(C x)
    std::vector<std::pair<int, bool>> sequence_pairing; // p_t(x) = B P_t(C x), t = 0..t_max
    bool all_ok = false;
};

/// Verifies the pairing identities, recomputing both sequences rather than
/// assuming them related.  p_t comes from the defining recursion on f; the
/// big side is evaluated as B (P_t o C) through the binomial form
/// P_t = sum_j (-1)^(t-j) C(t,j) F^(o j), so only polynomials in the small
/// variable set are ever expanded.
GZReport gz_check(const GZPair& pair, int t_max, const Budgets& budgets = {});

struct HubbersParams {
    Rational e3 = 1, e4 = 1, g4 = 1, k3 = 1, k4 = 1, m4 = 1;
};

struct HubbersMaps {
    PolyMap f; // the representative of the eighth class
    PolyMap h; // (X1, X2, F3, F4)
    PolyMap g; // (X1, F2, X3, X4); F = G o H
};

/// The eighth class of the dimension-4 cubic homogeneous classification,
/// with its factorization F = G o H.  Requires g4 != 0 (F_4 divides by g4
/// and g4^2).
HubbersMaps hubbers_eighth(const HubbersParams& params = {});

/// Invertible matrix with integer entries in [lo, hi], resampled until the
/// determinant is nonzero; deterministic under the seed.
RatMatrix random_linear_invertible(std::size_t n, long lo, long hi, std::uint64_t seed);

/// Random matrix of determinant +-1 with integer entries in [-bound, bound],
/// built from elementary row operations.  Conjugating by it keeps integer
/// coefficients integer, which the transport property tests rely on to stay
/// inside their time budgets.
RatMatrix random_unimodular(std::size_t n, long bound, std::uint64_t seed);

/// Rank-one A = u v^T with v . u = 0 and u restricted to {-1, 0, 1} entries,
/// so that componentwise u^3 = u.  This gives both A^2 = 0 and (JH)^2 = 0
/// for the cubic-linear map built from A; v . u = 0 alone does not control
/// (JH)^2 (u = (1,2), v = (2,-1) is a counterexample).
RatMatrix random_rank_one_nilpotent(std::size_t n, std::uint64_t seed);

/// Strictly lower triangular A conditioned so that (JH)^3 = 0 for the
/// cubic-linear map built from it.  For n <= 3 every strictly lower A
/// qualifies; for n = 4 one link of the a_21/a_32/a_43 chain is zeroed,
/// which kills the only length-3 path.
RatMatrix random_strictly_lower_nilpotent3(std::size_t n, long bound, std::uint64_t seed);

} // namespace nicety
