#pragma once

#include <optional>
#include <string>
#include <vector>

#include "factorlens/length_set.hpp"

namespace factorlens {

/// A directed family of length sets described by generators: the family is
/// the closure of `generators` under sumset, truncated at `closure_depth`
/// summands. Every generator must be a non-empty subset of N_{>=1}.
struct FamilySpec {
    std::vector<LengthSet> generators;
    int closure_depth = 0;
};

/// A finite window into a directed family: an explicit member list plus the
/// horizon K up to which the k-indexed invariants computed from the list are
/// provably exact. Monoid-backed code builds this from the length sets of
/// all sums of at most K atoms; generator-backed code from sumset closure.
class FamilyView {
public:
    static FamilyView from_spec(const FamilySpec& spec);
    /// `members` must contain every length set of the family that meets
    /// [1, exact_horizon]; invariants at k <= exact_horizon are then exact.
    static FamilyView from_members(std::vector<LengthSet> members, int exact_horizon);

    const std::vector<LengthSet>& members() const { return members_; }
    int exact_horizon() const { return horizon_; }

    /// U_k for k = 0..k_max (U_0 = {0}); requires k_max <= exact_horizon.
    std::vector<LengthSet> unions_up_to(int k_max) const;
    Int lambda(int k) const;    // min U_k (0 when U_k is empty)
    Int rho_bar(int k) const;   // max U_k (0 when U_k is empty)

    struct DeltaReport {
        LengthSet delta;
        bool exact = false;  // stabilized across the last closure level
    };
    /// Union of the distance sets of all members. Exactness is certified
    /// empirically: the set must coincide with the one computed from the
    /// members of depth < closure_depth (for generator-backed views); views
    /// from explicit members report what the caller established.
    DeltaReport family_delta() const;

    struct FeketeReport {
        std::vector<Rational> ratios;  // rho_bar(k) / k for k = 1..k_max
        Rational lower_bound{1};       // max of the ratios: a lower bound for rho
    };
    FeketeReport fekete_elasticity(int k_max) const;

    struct AcceptedReport {
        bool accepted = false;
        int witness_k = 0;  // k with rho_bar(k) == k * rho, when accepted
    };
    /// Checks whether the exact elasticity `rho` is attained by some
    /// rho_bar(k) / k with k <= k_max.
    AcceptedReport accepted_elasticity_check(const Rational& rho, int k_max) const;

    /// The gcd of any non-empty subset of Delta closed under the family's
    /// arithmetic equals min Delta; here: gcd(Delta) == min Delta.
    bool gcd_min_delta_check() const;

    struct StructureReport {
        bool applicable = false;   // Delta non-empty, q = max/min integral
        bool trivial = false;      // Delta empty: every U_k is trivially an AAP
        Int delta_min = 0;         // d
        Int q = 0;                 // max Delta / min Delta
        int l = 0;                 // least l with {l, l + d} inside a member
        std::vector<Int> aap_bounds;      // M_k = minimal AAP bound of U_k at d
        bool bounds_stabilized = false;   // M_k constant over the top half of k <= K
        bool windows_ok = false;          // condition (b) windows are APs / empty
        std::string detail;
    };
    /// Finite-horizon instance of the structure theorem for unions: checks
    /// that each U_k (k <= K) is an AAP with difference min Delta, that the
    /// AAP bounds stabilize, and that the windows
    /// U_k n [rho_bar(k - l q) + l q, rho_bar(k) - M] are APs.
    StructureReport structure_check(int k_max) const;

private:
    std::vector<LengthSet> members_;
    int horizon_ = 0;
    std::optional<LengthSet> prev_level_delta_;  // for generator-backed exactness
};

}  // namespace factorlens
