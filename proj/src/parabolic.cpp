#include "hsym/parabolic.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>

namespace hsym {

namespace {

std::vector<int> mask_members(std::uint64_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if ((mask >> i) & 1) out.push_back(i);
    return out;
}

} // namespace

FilterSet FilterSet::from_mask(const NoncompactPoset& poset, std::uint64_t mask) {
    FilterSet f{mask, mask_members(mask)};
    check(f.is_up_closed(poset), "FilterSet: not up-closed");
    return f;
}

bool FilterSet::is_up_closed(const NoncompactPoset& poset) const {
    for (int i : members)
        if ((poset.above[i] & ~mask) != 0) return false;
    return true;
}

IdealSet IdealSet::from_mask(const NoncompactPoset& poset, std::uint64_t mask) {
    IdealSet d{mask, mask_members(mask)};
    check(d.is_down_closed(poset), "IdealSet: not down-closed");
    return d;
}

bool IdealSet::is_down_closed(const NoncompactPoset& poset) const {
    for (int i : members)
        if ((poset.below[i] & ~mask) != 0) return false;
    return true;
}

namespace {

// Down-closed subsets in the `below` relation handed in; passing `above`
// yields the filters. Node order is a linear extension, so a subset is
// closed iff each member's closure among earlier nodes is present.
std::vector<std::uint64_t> closed_subsets(const std::vector<std::uint64_t>& closure,
                                          int m, int max_size, bool reverse_scan) {
    std::vector<std::uint64_t> out;
    struct Frame {
        int i;
        std::uint64_t mask;
        int size;
    };
    std::vector<Frame> stack{{0, 0, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.i == m) {
            out.push_back(f.mask);
            continue;
        }
        int node = reverse_scan ? m - 1 - f.i : f.i;
        std::uint64_t bit = std::uint64_t{1} << node;
        stack.push_back({f.i + 1, f.mask, f.size});
        if (f.size < max_size && (closure[node] & ~(f.mask | bit)) == 0)
            stack.push_back({f.i + 1, f.mask | bit, f.size + 1});
    }
    return out;
}

template <typename Set>
void sort_sets(std::vector<Set>& sets) {
    std::sort(sets.begin(), sets.end(), [](const Set& a, const Set& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
}

} // namespace

std::vector<IdealSet> enumerate_ideals(const NoncompactPoset& poset, int max_size) {
    if (max_size < 0) throw std::invalid_argument("enumerate_ideals: max_size must be >= 0");
    std::vector<IdealSet> out;
    for (std::uint64_t mask : closed_subsets(poset.below, poset.size(), max_size, false))
        out.push_back(IdealSet{mask, mask_members(mask)});
    sort_sets(out);
    return out;
}

std::vector<FilterSet> enumerate_filters(const NoncompactPoset& poset, int max_size) {
    if (max_size < 0) throw std::invalid_argument("enumerate_filters: max_size must be >= 0");
    std::vector<FilterSet> out;
    // A filter's closure condition looks upward; scanning nodes from the top
    // keeps the prefix property of the linear extension.
    for (std::uint64_t mask : closed_subsets(poset.above, poset.size(), max_size, true))
        out.push_back(FilterSet{mask, mask_members(mask)});
    sort_sets(out);
    return out;
}

ParabolicClass hodge_of_lambda(const RootSystem& rs, const DominantVector& lambda) {
    rs.require_k_dominant(lambda);
    NoncompactPoset poset = rs.noncompact_poset();
    std::uint64_t u = 0, d = 0;
    for (int i = 0; i < poset.size(); ++i) {
        int s = sign(rs.pairing(lambda, rs.positive_roots()[poset.nodes[i]]));
        if (s > 0) u |= std::uint64_t{1} << i;
        if (s < 0) d |= std::uint64_t{1} << i;
    }
    ParabolicClass cls;
    cls.U = FilterSet::from_mask(poset, u); // up/down closure asserted here
    cls.D = IdealSet::from_mask(poset, d);
    cls.witness = lambda;
    cls.r_plus = cls.U.size();
    cls.r_minus = cls.D.size();
    return cls;
}

ConstraintSystem class_constraints(const RootSystem& rs, const NoncompactPoset& poset,
                                   std::uint64_t u_mask, std::uint64_t d_mask) {
    ConstraintSystem sys;
    sys.dim = rs.rank();
    auto pairing_row = [&](const Root& alpha) {
        std::vector<Rat> row(sys.dim);
        for (int i = 0; i < rs.rank(); ++i)
            row[i] = Rat(alpha.coeffs[i]) * rs.symmetrizer()[i];
        return row;
    };
    for (int i = 0; i < poset.size(); ++i) {
        const Root& alpha = rs.positive_roots()[poset.nodes[i]];
        std::uint64_t bit = std::uint64_t{1} << i;
        if (u_mask & bit) sys.add_strict(pairing_row(alpha), +1);
        else if (d_mask & bit) sys.add_strict(pairing_row(alpha), -1);
        else sys.add_equality(pairing_row(alpha));
    }
    for (int i = 1; i <= rs.rank(); ++i) {
        if (!rs.simple_is_compact(i)) continue;
        std::vector<Rat> row(sys.dim);
        row[i - 1] = 1;
        sys.add_weak(std::move(row));
    }
    return sys;
}

namespace {

int thread_count_from_env() {
    const char* s = std::getenv("HSYM_THREADS");
    if (!s) return 1;
    int n = std::atoi(s);
    return n > 1 ? n : 1;
}

struct Candidate {
    std::uint64_t u, d;
};

} // namespace

std::vector<ParabolicClass> classify(const RootSystem& rs, int r_max, bool unbalanced) {
    if (r_max < 1) throw std::invalid_argument("classify: r_max must be >= 1");
    NoncompactPoset poset = rs.noncompact_poset();
    int cap = std::min<int>(r_max, poset.size());
    std::vector<FilterSet> filters = enumerate_filters(poset, unbalanced ? 2 * cap : cap);
    std::vector<IdealSet> ideals = enumerate_ideals(poset, unbalanced ? 2 * cap : cap);

    std::vector<Candidate> cands;
    for (const FilterSet& U : filters) {
        if (U.size() == 0) continue;
        for (const IdealSet& D : ideals) {
            if (U.mask & D.mask) continue;
            if (unbalanced) {
                int deg = U.size() + D.size();
                if (deg < 1 || deg > 2 * cap) continue;
            } else {
                if (U.size() != D.size() || U.size() > cap) continue;
            }
            cands.push_back({U.mask, D.mask});
        }
    }
    if (unbalanced) // D-only candidates (U empty) are skipped above
        for (const IdealSet& D : ideals)
            if (D.size() >= 1 && D.size() <= 2 * cap) cands.push_back({0, D.mask});

    auto run_range = [&](std::size_t lo, std::size_t hi) {
        std::vector<ParabolicClass> found;
        for (std::size_t k = lo; k < hi; ++k) {
            ConstraintSystem sys = class_constraints(rs, poset, cands[k].u, cands[k].d);
            Feasibility f = feasible_strict(sys);
            if (!f.feasible) continue;
            ParabolicClass cls;
            cls.U = FilterSet::from_mask(poset, cands[k].u);
            cls.D = IdealSet::from_mask(poset, cands[k].d);
            cls.witness = DominantVector{f.witness};
            cls.r_plus = cls.U.size();
            cls.r_minus = cls.D.size();
            found.push_back(std::move(cls));
        }
        return found;
    };

    std::vector<ParabolicClass> out;
    int threads = thread_count_from_env();
    if (threads <= 1 || cands.size() < 32) {
        out = run_range(0, cands.size());
    } else {
        std::size_t chunk = (cands.size() + threads - 1) / threads;
        std::vector<std::future<std::vector<ParabolicClass>>> futs;
        for (std::size_t lo = 0; lo < cands.size(); lo += chunk)
            futs.push_back(std::async(std::launch::async, run_range, lo,
                                      std::min(lo + chunk, cands.size())));
        for (auto& fu : futs) {
            auto part = fu.get();
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    std::sort(out.begin(), out.end(), [](const ParabolicClass& a, const ParabolicClass& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.r_plus != b.r_plus) return a.r_plus < b.r_plus;
        if (a.U.members != b.U.members) return a.U.members < b.U.members;
        return a.D.members < b.D.members;
    });
    return out;
}

int n_of_r(const RootSystem& rs, int r) {
    if (r < 1) throw std::invalid_argument("n_of_r: r must be >= 1");
    NoncompactPoset poset = rs.noncompact_poset();
    if (2 * r > poset.size()) return 0;
    int count = 0;
    for (const ParabolicClass& cls : classify(rs, r))
        if (cls.r_plus == r) ++count;
    return count;
}

int r_zero(const RootSystem& rs) {
    int bound = rs.num_noncompact_positive() / 2;
    if (bound >= 1) {
        std::vector<ParabolicClass> all = classify(rs, bound);
        if (!all.empty()) return all.front().r_plus;
    }
    throw std::invalid_argument("r_zero: no class of balanced Hodge type (r,r) with r >= 1 exists");
}

ParabolicClass iota_dual(const RootSystem& rs, const ParabolicClass& cls) {
    ParabolicClass dual = hodge_of_lambda(rs, rs.iota(cls.witness));
    check(dual.r_plus == cls.r_minus && dual.r_minus == cls.r_plus,
          "iota_dual: Hodge type did not swap");
    return dual;
}

} // namespace hsym
