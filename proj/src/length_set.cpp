#include "factorlens/length_set.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace factorlens {

LengthSet::LengthSet(std::vector<Int> sorted_unique) : values_(std::move(sorted_unique)) {
    assert(std::is_sorted(values_.begin(), values_.end()));
    assert(std::adjacent_find(values_.begin(), values_.end()) == values_.end());
}

LengthSet LengthSet::of(std::initializer_list<Int> values) {
    return from_values(std::vector<Int>(values));
}

LengthSet LengthSet::from_values(std::vector<Int> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return LengthSet(std::move(values));
}

LengthSet LengthSet::interval(Int lo, Int hi) {
    std::vector<Int> v;
    for (Int x = lo; x <= hi; ++x) v.push_back(x);
    return LengthSet(std::move(v));
}

bool LengthSet::contains(Int v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

LengthSet LengthSet::positive_part() const {
    std::vector<Int> v;
    for (Int x : values_)
        if (x > 0) v.push_back(x);
    return LengthSet(std::move(v));
}

LengthSet LengthSet::unite(const LengthSet& other) const {
    std::vector<Int> v;
    std::set_union(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
                   std::back_inserter(v));
    return LengthSet(std::move(v));
}

LengthSet LengthSet::intersect_interval(Int lo, Int hi) const {
    std::vector<Int> v;
    for (Int x : values_)
        if (x >= lo && x <= hi) v.push_back(x);
    return LengthSet(std::move(v));
}

std::string LengthSet::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out << ',';
        out << values_[i];
    }
    out << '}';
    return out.str();
}

LengthSet delta_set(const LengthSet& l) {
    const auto& v = l.values();
    std::vector<Int> gaps;
    for (std::size_t i = 1; i < v.size(); ++i) gaps.push_back(v[i] - v[i - 1]);
    return LengthSet::from_values(std::move(gaps));
}

Rational elasticity_of_set(const LengthSet& l) {
    LengthSet pos = l.positive_part();
    if (pos.empty()) return make_rational(1);
    return make_rational(pos.max(), pos.min());
}

LengthSet sumset(const LengthSet& a, const LengthSet& b) {
    if (a.empty() || b.empty()) return LengthSet();
    std::set<Int> out;
    for (Int x : a.values())
        for (Int y : b.values()) out.insert(x + y);
    return LengthSet(std::vector<Int>(out.begin(), out.end()));
}

LengthSet nfold(Int n, const LengthSet& l) {
    if (n < 1) throw std::invalid_argument("nfold: n must be >= 1");
    LengthSet acc = l;
    for (Int i = 1; i < n; ++i) acc = sumset(acc, l);
    return acc;
}

LengthSet dilate(Int n, const LengthSet& l) {
    std::vector<Int> v;
    for (Int x : l.values()) v.push_back(n * x);
    return LengthSet::from_values(std::move(v));
}

namespace {
Int mod_nonneg(Int a, Int d) {
    Int r = a % d;
    return r < 0 ? r + d : r;
}
}  // namespace

bool is_ap_with_difference(const LengthSet& l, Int d, bool allow_empty) {
    if (l.empty()) return allow_empty;
    const auto& v = l.values();
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] - v[i - 1] != d) return false;
    return true;
}

std::optional<AapWitness> minimal_aap_bound(const LengthSet& l, Int d) {
    if (d < 1) throw std::invalid_argument("minimal_aap_bound: d must be >= 1");
    if (l.empty()) return AapWitness{d, 0, 0};
    Int residue = mod_nonneg(l.min(), d);
    for (Int x : l.values())
        if (mod_nonneg(x, d) != residue) return std::nullopt;
    Int span = l.max() - l.min();
    Int cutoff = (span + 1) / 2 + 1;
    for (Int m = 0; m <= cutoff; ++m) {
        LengthSet middle = l.intersect_interval(l.min() + m, l.max() - m);
        if (is_ap_with_difference(middle, d, /*allow_empty=*/true))
            return AapWitness{d, m, residue};
    }
    // Unreachable: once the middle window shrinks to at most one point it is
    // trivially an AP.
    return std::nullopt;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace factorlens
