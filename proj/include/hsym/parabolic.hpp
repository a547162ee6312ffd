// Classification of theta-stable parabolic subalgebras q containing t, up to
// the equivalence keyed by u cap p. A class is a disjoint (filter, ideal)
// pair in the noncompact-root poset together with a rational witness; the
// search runs over order filters/ideals and each candidate is decided by
// exact LP feasibility.
#pragma once

#include "hsym/linprog.hpp"
#include "hsym/rootsystem.hpp"

#include <cstdint>
#include <vector>

namespace hsym {

/// Up-closed subset of the noncompact poset (the roots of u cap p+).
struct FilterSet {
    std::uint64_t mask = 0;
    std::vector<int> members; // node positions, increasing

    static FilterSet from_mask(const NoncompactPoset& poset, std::uint64_t mask);
    bool is_up_closed(const NoncompactPoset& poset) const;
    int size() const { return static_cast<int>(members.size()); }
    bool operator==(const FilterSet&) const = default;
};

/// Down-closed subset (the negatives of the roots of u cap p-).
struct IdealSet {
    std::uint64_t mask = 0;
    std::vector<int> members;

    static IdealSet from_mask(const NoncompactPoset& poset, std::uint64_t mask);
    bool is_down_closed(const NoncompactPoset& poset) const;
    int size() const { return static_cast<int>(members.size()); }
    bool operator==(const IdealSet&) const = default;
};

struct ParabolicClass {
    FilterSet U;
    IdealSet D;
    DominantVector witness;
    int r_plus = 0;
    int r_minus = 0;

    int degree() const { return r_plus + r_minus; }
    bool balanced() const { return r_plus == r_minus; }
};

/// All down-closed subsets of cardinality <= max_size, each exactly once,
/// ordered by (size, member list).
std::vector<IdealSet> enumerate_ideals(const NoncompactPoset& poset, int max_size);
/// All up-closed subsets of cardinality <= max_size, same ordering contract.
std::vector<FilterSet> enumerate_filters(const NoncompactPoset& poset, int max_size);

/// The class of q_lambda for a k-dominant lambda: U and D are read off the
/// pairing signs over the positive noncompact roots. Throws
/// std::invalid_argument naming the violated compact simple root when lambda
/// is not k-dominant.
ParabolicClass hodge_of_lambda(const RootSystem& rs, const DominantVector& lambda);

/// The sign-constraint system whose solutions are witnesses for (U, D):
/// strict positive on U, strict negative on D, equality on the remaining
/// positive noncompact roots, and weak nonnegativity at the compact
/// fundamental-weight coordinates.
ConstraintSystem class_constraints(const RootSystem& rs, const NoncompactPoset& poset,
                                   std::uint64_t u_mask, std::uint64_t d_mask);

/// Every feasible class with r_plus = r_minus = r for 1 <= r <= r_max,
/// sorted by (r, U, D). With `unbalanced` set, every feasible class with
/// 1 <= r_plus + r_minus <= 2 * r_max instead.
std::vector<ParabolicClass> classify(const RootSystem& rs, int r_max, bool unbalanced = false);

/// Number of classes of Hodge type exactly (r, r).
int n_of_r(const RootSystem& rs, int r);
/// Smallest r >= 1 with N(r) >= 1 (bounded by #Phi+_n / 2).
int r_zero(const RootSystem& rs);

/// The class of q_{iota(x)}; swaps (r_plus, r_minus) and is an involution.
ParabolicClass iota_dual(const RootSystem& rs, const ParabolicClass& cls);

} // namespace hsym
