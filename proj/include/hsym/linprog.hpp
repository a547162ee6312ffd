// Exact feasibility testing for homogeneous systems of strict / weak /
// equality linear constraints. This is the engine behind the parabolic
// classification: everything is decided in rational arithmetic.
#pragma once

#include "hsym/matrix.hpp"

#include <optional>
#include <vector>

namespace hsym {

/// Homogeneous constraint system over `dim` variables:
///   - equalities:  a . x == 0
///   - strict:      sign * (a . x) > 0   with sign in {+1, -1}
///   - weak:        a . x >= 0
struct ConstraintSystem {
    std::size_t dim = 0;
    std::vector<std::vector<Rat>> equalities;
    std::vector<std::pair<std::vector<Rat>, int>> strict;
    std::vector<std::vector<Rat>> weak;

    void add_equality(std::vector<Rat> row);
    void add_strict(std::vector<Rat> row, int sign);
    void add_weak(std::vector<Rat> row);

    /// Exact substitution check of a candidate point.
    bool satisfied_by(const std::vector<Rat>& x) const;
};

struct Feasibility {
    bool feasible = false;
    /// Primitive integer witness (content 1) when feasible and nonzero.
    std::vector<Rat> witness;
};

/// Decides strict feasibility exactly. Equalities are eliminated through a
/// nullspace reduction, strict rows are normalized to `a . y >= 1` (valid by
/// homogeneity) and the resulting LP is solved by a rational simplex with a
/// uniform slack variable maximized (Bland's rule). When the reduced
/// dimension is at most `kFourierMotzkinCap`, Fourier-Motzkin elimination is
/// run as well and the two verdicts are required to agree.
Feasibility feasible_strict(const ConstraintSystem& sys);

inline constexpr std::size_t kFourierMotzkinCap = 6;

namespace detail {

/// Feasibility of { strict rows > 0, weak rows >= 0 } over free variables,
/// by rational simplex; returns a satisfying point when feasible.
std::optional<std::vector<Rat>> simplex_feasible(
    const std::vector<std::vector<Rat>>& strict_rows,
    const std::vector<std::vector<Rat>>& weak_rows,
    std::size_t dim);

/// Same question decided by Fourier-Motzkin elimination (verdict only).
bool fourier_motzkin_feasible(
    const std::vector<std::vector<Rat>>& strict_rows,
    const std::vector<std::vector<Rat>>& weak_rows,
    std::size_t dim);

} // namespace detail

} // namespace hsym
