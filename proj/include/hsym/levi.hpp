// Levi analysis of a classified parabolic: the zero-root subsystem, its
// Hermitian simple factors, and the compact dual Y_q with dimension, Euler
// characteristic and Poincare polynomial. The Euler characteristic is
// computed twice (Weyl-order ratio and Poincare value at 1) and the two
// results are cross-asserted.
#pragma once

#include "hsym/parabolic.hpp"
#include "hsym/rootsystem.hpp"

#include <string>
#include <vector>

namespace hsym {

struct DynkinType {
    char letter = 'A'; // 'A', 'B', 'C', 'D', 'E'
    int rank = 0;

    std::string str() const { return std::string(1, letter) + std::to_string(rank); }
    bool operator==(const DynkinType&) const = default;
};

/// Classifies an integer Cartan matrix by canonical-form matching under
/// vertex permutation; `perm[i]` is the canonical (0-based) node of input
/// vertex i. Coincidences resolve in the fixed order A, B, C, D, E.
struct DynkinMatch {
    DynkinType type;
    std::vector<int> perm;
};
DynkinMatch classify_cartan(const std::vector<std::vector<int>>& cartan);

/// Canonical Cartan matrix of a type (Bourbaki numbering).
std::vector<std::vector<int>> cartan_of(const DynkinType& t);

/// Order of the Weyl group of a (possibly disconnected) diagram.
Int weyl_order(const std::vector<std::vector<int>>& cartan);

/// One simple ideal l_alpha of [l,l]: the simple system Delta_alpha, the
/// roots Phi_alpha in its span, and the classified Hermitian pair.
struct HermitianFactor {
    int alpha;                      // positive-root index of the minimal root
    std::vector<int> delta_simples; // 1-based ambient simple indices in Delta_alpha
    std::vector<int> phi_pos;       // positive-root indices of Phi_alpha
    DynkinType type;
    int node = 0;       // noncompact node, canonicalized up to diagram automorphism
    std::string dual_name;
    int dim = 0;        // #Phi+_n of the factor = dim_C of its compact dual
    Int chi;            // Euler characteristic by Weyl-order ratio
    std::vector<Int> betti; // order-ideal counts by size (b_0, b_2, ...)
};

struct LeviFactorization {
    std::vector<int> phi_x_pos;          // positive roots with zero pairing
    std::vector<int> strongly_orthogonal; // the set C, as positive-root indices
    std::vector<HermitianFactor> factors;
    std::vector<int> compact_ideal_pos;  // Phi_c, positive part
};

struct CompactDualProduct {
    std::vector<HermitianFactor> factors;
    int dim_c = 0;
    Int euler;
    std::vector<Int> poincare; // coefficients of sum b_{2s} t^{2s}

    std::string name() const; // "S^2 x SO(12)/U(6)" style
};

LeviFactorization levi_factorize(const RootSystem& rs, const ParabolicClass& cls);
CompactDualProduct compact_dual(const RootSystem& rs, const LeviFactorization& lf);

Int euler_characteristic(const CompactDualProduct& dual);
std::vector<Int> poincare_polynomial(const CompactDualProduct& dual);

} // namespace hsym
