#include "hsym/linprog.hpp"

#include <algorithm>
#include <map>

namespace hsym {

void ConstraintSystem::add_equality(std::vector<Rat> row) {
    if (row.size() != dim) throw std::invalid_argument("constraint row: dimension mismatch");
    equalities.push_back(std::move(row));
}

void ConstraintSystem::add_strict(std::vector<Rat> row, int sign) {
    if (row.size() != dim) throw std::invalid_argument("constraint row: dimension mismatch");
    if (sign != 1 && sign != -1) throw std::invalid_argument("strict constraint sign must be +1 or -1");
    strict.emplace_back(std::move(row), sign);
}

void ConstraintSystem::add_weak(std::vector<Rat> row) {
    if (row.size() != dim) throw std::invalid_argument("constraint row: dimension mismatch");
    weak.push_back(std::move(row));
}

bool ConstraintSystem::satisfied_by(const std::vector<Rat>& x) const {
    if (x.size() != dim) return false;
    for (const auto& e : equalities)
        if (dot(e, x) != 0) return false;
    for (const auto& [row, sgn] : strict)
        if (sign(dot(row, x)) != sgn) return false;
    for (const auto& w : weak)
        if (dot(w, x) < 0) return false;
    return true;
}

namespace detail {

// ---------------------------------------------------------------------------
// Rational simplex. The feasibility question
//     strict rows s . y > 0,  weak rows w . y >= 0   (y free)
// is posed as: maximize t subject to s.y >= t, w.y >= 0, t <= 1. By
// homogeneity the optimum is 1 exactly when the strict system is feasible.
// Free variables are split y = u - v, u, v >= 0; the all-slack basis is then
// immediately feasible and no phase-1 is needed. Bland's rule guarantees
// termination under the heavy degeneracy this LP has.
// ---------------------------------------------------------------------------

std::optional<std::vector<Rat>> simplex_feasible(
    const std::vector<std::vector<Rat>>& strict_rows,
    const std::vector<std::vector<Rat>>& weak_rows,
    std::size_t dim) {
    if (strict_rows.empty()) return std::vector<Rat>(dim, Rat(0));

    const std::size_t k = dim;
    const std::size_t n = 2 * k + 1; // u, v, t
    const std::size_t m = strict_rows.size() + weak_rows.size() + 1;
    const std::size_t t_col = 2 * k;

    // Tableau: [A | I | b], rows m, structural columns n, then m slacks.
    std::vector<std::vector<Rat>> T(m, std::vector<Rat>(n + m + 1));
    std::size_t r = 0;
    auto fill_row = [&](const std::vector<Rat>& row, bool is_strict) {
        for (std::size_t j = 0; j < k; ++j) {
            T[r][j] = -row[j];
            T[r][k + j] = row[j];
        }
        if (is_strict) T[r][t_col] = 1; // -s.y + t <= 0
        T[r][n + r] = 1;
        ++r;
    };
    for (const auto& s : strict_rows) fill_row(s, true);
    for (const auto& w : weak_rows) fill_row(w, false);
    T[r][t_col] = 1;
    T[r][n + r] = 1;
    T[r][n + m] = 1; // t <= 1
    ++r;

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Objective row holds z_j - c_j for the maximization of t.
    std::vector<Rat> obj(n + m + 1);
    obj[t_col] = -1;

    for (;;) {
        // Bland: entering column = smallest index with negative reduced cost.
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j)
            if (obj[j] < 0) { enter = j; break; }
        if (enter == n + m) break; // optimal

        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rat ratio = T[i][n + m] / T[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        check(leave != m, "simplex: unbounded objective in a bounded LP");

        Rat piv = T[leave][enter];
        for (auto& x : T[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rat f = T[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
        }
        if (obj[enter] != 0) {
            Rat f = obj[enter];
            for (std::size_t j = 0; j <= n + m; ++j) obj[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }

    std::vector<Rat> value(n + m);
    for (std::size_t i = 0; i < m; ++i) value[basis[i]] = T[i][n + m];
    if (value[t_col] <= 0) return std::nullopt;

    std::vector<Rat> y(k);
    for (std::size_t j = 0; j < k; ++j) y[j] = value[j] - value[k + j];
    return y;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin elimination, verdict only. Rows carry a strictness flag;
// a derived all-zero strict row is the infeasibility certificate.
// ---------------------------------------------------------------------------

namespace {

struct FmRow {
    std::vector<Rat> c;
    bool strict;
};

// Normalizes to a primitive direction so duplicates collapse.
void fm_normalize(FmRow& row) { row.c = primitive_integer(row.c); }

// Returns false on an immediate contradiction (0 > 0).
bool fm_insert(std::map<std::vector<std::string>, FmRow>& pool, FmRow row) {
    bool all_zero = std::all_of(row.c.begin(), row.c.end(), [](const Rat& x) { return x == 0; });
    if (all_zero) return !row.strict;
    fm_normalize(row);
    std::vector<std::string> key;
    key.reserve(row.c.size());
    for (const Rat& x : row.c) key.push_back(rat_str(x));
    auto [it, inserted] = pool.emplace(std::move(key), row);
    if (!inserted) it->second.strict = it->second.strict || row.strict; // keep the stronger row
    return true;
}

} // namespace

bool fourier_motzkin_feasible(
    const std::vector<std::vector<Rat>>& strict_rows,
    const std::vector<std::vector<Rat>>& weak_rows,
    std::size_t dim) {
    std::vector<FmRow> rows;
    for (const auto& s : strict_rows) rows.push_back({s, true});
    for (const auto& w : weak_rows) rows.push_back({w, false});

    std::vector<std::size_t> vars(dim);
    for (std::size_t i = 0; i < dim; ++i) vars[i] = i;

    while (!vars.empty()) {
        // Eliminate the variable minimizing the product growth bound.
        std::size_t best_vi = 0;
        long long best_cost = -1;
        for (std::size_t vi = 0; vi < vars.size(); ++vi) {
            long long pos = 0, neg = 0;
            for (const auto& r : rows) {
                int s = sign(r.c[vars[vi]]);
                if (s > 0) ++pos;
                if (s < 0) ++neg;
            }
            long long cost = pos * neg - (pos + neg);
            if (best_cost == -1 || cost < best_cost) {
                best_cost = cost;
                best_vi = vi;
            }
        }
        std::size_t v = vars[best_vi];
        vars.erase(vars.begin() + best_vi);

        std::vector<const FmRow*> pos, neg;
        std::map<std::vector<std::string>, FmRow> pool;
        for (const auto& r : rows) {
            int s = sign(r.c[v]);
            if (s > 0) pos.push_back(&r);
            else if (s < 0) neg.push_back(&r);
            else if (!fm_insert(pool, r)) return false;
        }
        for (const FmRow* p : pos)
            for (const FmRow* q : neg) {
                FmRow derived;
                derived.strict = p->strict || q->strict;
                derived.c.resize(p->c.size());
                Rat a = p->c[v], b = q->c[v]; // a > 0 > b
                for (std::size_t j = 0; j < derived.c.size(); ++j)
                    derived.c[j] = (-b) * p->c[j] + a * q->c[j];
                derived.c[v] = 0;
                if (!fm_insert(pool, std::move(derived))) return false;
            }
        rows.clear();
        rows.reserve(pool.size());
        for (auto& [key, r] : pool) rows.push_back(std::move(r));
    }
    for (const auto& r : rows)
        if (r.strict) return false; // all coefficients are zero by now
    return true;
}

} // namespace detail

Feasibility feasible_strict(const ConstraintSystem& sys) {
    // Eliminate the equalities first.
    Mat basis = sys.equalities.empty()
                    ? Mat::identity(sys.dim)
                    : nullspace(Mat::from_rows(sys.equalities, sys.dim));
    const std::size_t k = basis.cols();

    auto project = [&](const std::vector<Rat>& row) {
        std::vector<Rat> out(k);
        for (std::size_t j = 0; j < k; ++j) {
            Rat s = 0;
            for (std::size_t i = 0; i < sys.dim; ++i) s += row[i] * basis.at(i, j);
            out[j] = s;
        }
        return out;
    };
    auto is_zero = [](const std::vector<Rat>& v) {
        return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
    };

    std::vector<std::vector<Rat>> strict_rows, weak_rows;
    for (const auto& [row, sgn] : sys.strict) {
        std::vector<Rat> pr = project(row);
        if (sgn < 0)
            for (Rat& x : pr) x = -x;
        if (is_zero(pr)) return {}; // strict constraint collapsed: infeasible
        strict_rows.push_back(std::move(pr));
    }
    for (const auto& row : sys.weak) {
        std::vector<Rat> pr = project(row);
        if (!is_zero(pr)) weak_rows.push_back(std::move(pr));
    }

    auto y = detail::simplex_feasible(strict_rows, weak_rows, k);
    if (k <= kFourierMotzkinCap) {
        bool fm = detail::fourier_motzkin_feasible(strict_rows, weak_rows, k);
        check(fm == y.has_value(), "feasible_strict: simplex and Fourier-Motzkin disagree");
    }
    if (!y) return {};

    std::vector<Rat> x = basis.apply(*y);
    if (is_zero(x) && strict_rows.empty()) {
        // Prefer a nonzero point when one is available (pure weak systems).
        for (std::size_t c = 0; c < k && is_zero(x); ++c) {
            for (int s : {1, -1}) {
                std::vector<Rat> cand = basis.col(c);
                if (s < 0)
                    for (Rat& e : cand) e = -e;
                if (sys.satisfied_by(cand)) {
                    x = std::move(cand);
                    break;
                }
            }
        }
    }
    x = primitive_integer(x);
    check(sys.satisfied_by(x), "feasible_strict: witness fails exact substitution");
    return {true, std::move(x)};
}

} // namespace hsym
