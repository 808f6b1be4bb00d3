#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace factorlens {

using Int = long long;
using Rational = mpq_class;

/// gmpxx lacks long long constructors; long is 64-bit on every platform we
/// target, so route through it.
static_assert(sizeof(long) == sizeof(long long));
inline mpz_class to_mpz(Int v) {
    return mpz_class(static_cast<long>(v));
}

inline Rational make_rational(Int num, Int den = 1) {
    Rational r(to_mpz(num), to_mpz(den));
    r.canonicalize();
    return r;
}

/// A finite set of non-negative integers kept strictly increasing.
/// Used both for sets of factorization lengths and for the finite
/// subsets of N_0 that power monoids are built from.
class LengthSet {
public:
    LengthSet() = default;
    explicit LengthSet(std::vector<Int> sorted_unique);

    static LengthSet of(std::initializer_list<Int> values);
    static LengthSet from_values(std::vector<Int> values);  // sorts + dedups
    static LengthSet interval(Int lo, Int hi);              // [lo, hi], empty if lo > hi

    const std::vector<Int>& values() const { return values_; }
    bool empty() const { return values_.empty(); }
    std::size_t size() const { return values_.size(); }
    Int min() const { return values_.front(); }
    Int max() const { return values_.back(); }
    bool contains(Int v) const;

    /// L+ = L without 0.
    LengthSet positive_part() const;

    LengthSet unite(const LengthSet& other) const;
    LengthSet intersect_interval(Int lo, Int hi) const;

    bool operator==(const LengthSet& other) const = default;
    bool operator<(const LengthSet& other) const { return values_ < other.values_; }

    std::string to_string() const;  // "{2,3,5}" / "{}"

private:
    std::vector<Int> values_;
};

using FinSet = LengthSet;

/// Consecutive-gap values of L; empty if |L| <= 1.
LengthSet delta_set(const LengthSet& l);

/// rho(L) = max L+ / min L+, or 1 when L+ is empty.
Rational elasticity_of_set(const LengthSet& l);

LengthSet sumset(const LengthSet& a, const LengthSet& b);
LengthSet nfold(Int n, const LengthSet& l);   // n-fold sumset, n >= 1
LengthSet dilate(Int n, const LengthSet& l);  // {n*a : a in L}

/// Witness that L is an AAP with difference d and bound M:
/// L lies in one residue class mod d and the middle part
/// L n [min L + M, max L - M] is an AP with difference d (or empty).
struct AapWitness {
    Int difference = 0;
    Int bound = 0;
    Int residue = 0;  // y with L contained in y + d*Z
};

/// True if L is an AP with difference d (empty slices count as trivially ok
/// when `allow_empty`); singletons qualify for any d.
bool is_ap_with_difference(const LengthSet& l, Int d, bool allow_empty = false);

/// Smallest M making L an AAP with difference d; absent when L is not
/// contained in a single residue class mod d. Scans M upward from 0 to
/// ceil((max-min)/2)+1; beyond that the middle part is empty anyway.
std::optional<AapWitness> minimal_aap_bound(const LengthSet& l, Int d);

std::string to_string(const Rational& q);

}  // namespace factorlens
