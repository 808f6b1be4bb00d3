#pragma once

#include <string>
#include <vector>

#include "factorlens/monoid.hpp"

namespace factorlens {

/// A reduced Krull monoid realizing the prescribed length set
/// L = {m_1} u {m_2 + 1, ..., m_s + 1} with min L = m_1 >= 2:
/// H lives in N_0^{m_1 + ... + m_s} (coordinates grouped in blocks of sizes
/// m_i); its atoms are all unit vectors together with
/// u_i0 = 1_{block 1} - 1_{block i} for i >= 2.
struct RealizedKrull {
    LengthSet L;
    std::vector<Int> m;          // m[0..s-1]
    std::vector<int> offset;     // offset[i] = first coordinate of block i
    AtomPresentation pres;       // atoms: basis vectors first, then the u_i0
    std::vector<std::size_t> u0_index;  // atom index of u_i0 for i = 2..s (0-based i-2)
};

/// Builds the realization. Requires |L| >= 2 and min L >= 2.
RealizedKrull realize(const LengthSet& L);

struct GammaProfile {
    std::vector<Int> gamma;        // gamma_i(x) = min over block i, i = 0..s-1
    std::vector<Int> gamma_prime;  // max(0, -gamma_i)
    Int C = 0;                     // min L_H(x)
    Int k = 0;                     // budget: gamma_1 - sum of gamma_prime (i >= 2)
};

GammaProfile gamma_profile(const RealizedKrull& r, const Vec& x);

/// x in H iff gamma_1(x) >= sum_{i >= 2} gamma'_i(x) (all coordinates of
/// blocks >= 2 may be negative only as absorbed by u_i0 copies).
bool membership(const RealizedKrull& r, const Vec& x);

/// Closed form for the length set of x in H:
/// L_H(x) = C(x) + { sum_i w_i b_i : b in N_0^{s-1}, sum b_i <= k(x) } with
/// weights w_i = m_i + 1 - m_1. Empty when x is not in H.
LengthSet closed_length_set(const RealizedKrull& r, const Vec& x);

/// Exact U_nu(H): every length set of H is L(C, kappa) for some C >= kappa*m_1,
/// and every such pair occurs, so U_nu is a finite enumeration over
/// kappa <= nu/m_1, C <= nu.
LengthSet krull_union(const RealizedKrull& r, int nu);

/// max U_k(H) from the same enumeration.
Int krull_rho(const RealizedKrull& r, int k);

struct VerifyReport {
    bool ok = true;
    std::string detail;
};

/// Brute-force cross-check of the closed forms: compares closed_length_set
/// against DFS factorizations on all sums of at most `atom_budget` atoms, and
/// krull_union(min L) against the direct union over m_1-atom sums.
VerifyReport verify_realization(const RealizedKrull& r, int atom_budget);

/// The counterexample family: block lengths m_0 = 0 < m_1 = 1 < m_2 < ...,
/// target sets L_k = [k, m_{k-1} + 1] u U_k where U_k is the difference-2 AP
/// from m_{k-1} + 2 to m_k.
struct CounterexampleSpec {
    Int d = 0;                // max allowed distance parameter (>= 2)
    int K = 0;                // horizon: components H_1 .. H_K are materialized
    std::vector<Int> m;       // m[0..K], m[0] = 0, m[1] = 1
    std::vector<LengthSet> L; // L[k] for k = 2..K (index k)
};

/// Greedily picks the smallest admissible m_k (respecting the growth
/// condition at every 3 <= k <= K+1, checked in exact rationals, and parity
/// so that U_k can be the difference-2 AP).
CounterexampleSpec admissible_instance(Int d, int K);

/// Validates all hypotheses of a (possibly handcrafted) spec; returns the
/// first violated index, or 0 when valid.
int validate_counterexample(const CounterexampleSpec& spec);

/// Exact U_k(H) for the product H = H_1 x ... x H_k (truncation suffices),
/// where H_1 = (N_0, +) and H_j realizes L_j. Uses the product rule over the
/// exact component unions.
LengthSet counterexample_unions(const CounterexampleSpec& spec, int k);

/// The predicted value [k, m_{k-1} + 1] u U_k (equals U_k(H) n N_{>= k}).
LengthSet counterexample_expected(const CounterexampleSpec& spec, int k);

}  // namespace factorlens
