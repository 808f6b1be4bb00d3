#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "factorlens/length_set.hpp"

namespace factorlens {

using Vec = std::vector<Int>;

struct UnsupportedPresentation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An additive submonoid of Z^dim generated by `atoms`, together with a
/// positive grading g (g . a_i > 0 for every atom). The grading certifies
/// that the monoid is reduced and BF, and bounds every factorization search.
struct AtomPresentation {
    int dim = 0;
    std::vector<Vec> atoms;
    Vec grading;

    std::size_t atom_count() const { return atoms.size(); }
};

Int dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(Int c, const Vec& a);
Int coord_sum(const Vec& a);
bool is_zero(const Vec& a);
bool leq_componentwise(const Vec& a, const Vec& b);

/// Builds a presentation; if no grading is supplied, searches for one by
/// exact rational Fourier-Motzkin elimination on {g : g . a_i >= 1}.
/// Throws UnsupportedPresentation when no positive grading exists (the
/// monoid is then not guaranteed atomic/BF and nothing here terminates).
AtomPresentation make_presentation(int dim, std::vector<Vec> atoms,
                                   std::optional<Vec> grading = std::nullopt);

/// A factorization of x is an exponent vector z in N^s with sum z_i a_i = x.
using Factorization = Vec;

/// All factorizations of x, sorted lexicographically. Deterministic.
std::vector<Factorization> factorizations(const AtomPresentation& p, const Vec& x);

LengthSet length_set(const AtomPresentation& p, const Vec& x);

struct UnionsResult {
    std::vector<LengthSet> unions;  // unions[k] = U_k, k = 0..k_max (U_0 = {0})
    std::vector<Int> lambda;        // lambda[k] = min U_k
    std::vector<Int> rho;           // rho[k]   = max U_k
};

/// Exact U_k(H) for k <= k_max, by enumerating all sums of exactly k atoms.
/// `budget` caps the number of k-atom multisets across all k.
UnionsResult unions(const AtomPresentation& p, int k_max, Int budget);

/// Invokes `leaf` on every sum of exactly k atoms (one call per multiset).
void for_each_atom_sum(const AtomPresentation& p, int k,
                       const std::function<void(const Vec&)>& leaf);

/// Distance between two factorizations: remove the common part, then take
/// the larger of the two remaining lengths.
Int distance(const Factorization& z1, const Factorization& z2);

/// Catenary degree of the element x: the least N such that any two
/// factorizations of x are connected by an N-chain; 0 if |Z(x)| <= 1.
Int catenary_degree(const AtomPresentation& p, const Vec& x);

/// Catenary degree of H, maximized over all sums of at most `atom_budget`
/// atoms. Exact for the element set explored; a lower bound for c(H).
Int catenary_degree_up_to(const AtomPresentation& p, int atom_budget);

/// omega(H, u) for the atom with index `atom_index`: the maximum length of a
/// minimal point of D_u = {z in N^s : u divides sum z_i a_i in H}. Computed
/// exactly via a Hilbert basis of the homogenized system [A | -A | -a_u].
Int omega(const AtomPresentation& p, std::size_t atom_index);

/// Same, for an arbitrary element x of H.
Int omega_element(const AtomPresentation& p, const Vec& x);

struct TameResult {
    Int value = 0;
    bool closed = false;  // true when the budgeted search provably attained t(H,u)
    Int ceiling = 0;      // rho_{omega(H,u)}(H), an a-priori upper bound
};

/// Tame degree t(H, u) for the atom `atom_index`, explored over all elements
/// that are sums of at most `atom_budget` atoms. The reported value is exact
/// on that range; `closed` is set when it already meets the ceiling
/// rho_{omega(H,u)}(H), which certifies global exactness.
TameResult tame_degree(const AtomPresentation& p, std::size_t atom_index, int atom_budget,
                       Int budget);

struct ZeroSumPresentation {
    AtomPresentation pres;
    std::vector<Vec> group_elements;  // row i of the lattice = multiplicity of this element
    Int davenport = 0;                // max total length of a minimal zero-sum sequence
};

/// Block monoid B(G_0) for G = Z_{n_1} + ... + Z_{n_r} and a subset G_0 of G
/// (all of G when absent). Atoms are the minimal zero-sum sequences over G_0.
ZeroSumPresentation zero_sum_presentation(const std::vector<Int>& invariant_factors,
                                          const std::vector<Vec>* subset = nullptr);

/// Direct product: concatenates the ambient lattices and atom lists.
AtomPresentation product(const std::vector<AtomPresentation>& components);

/// U_k of a finite product from exact component unions:
/// U_k(S x T) = union over nu of U_nu(S) + U_{k-nu}(T), with U_0 = {0}.
/// component_unions[i][nu] must be the exact U_nu of component i for nu <= k.
LengthSet product_unions(const std::vector<std::vector<LengthSet>>& component_unions, int k);

struct AtomCheck {
    bool ok = true;
    std::size_t bad_index = 0;
    Factorization witness;  // a length >= 2 factorization of the offending "atom"
};

/// Verifies that no listed atom decomposes as a sum of >= 2 atoms.
AtomCheck verify_atoms(const AtomPresentation& p);

}  // namespace factorlens
