// The elementary abelian group Sigma of commuting involutions generated by
// the sigma_psi (psi compact simple) and the Cartan involution theta, acting
// on each root space by a sign read off coefficient parity. Codimensions of
// the fixed-point cycles X(sigma) and the minimum c(X) are computed from the
// parity formula alone.
#pragma once

#include "hsym/rootsystem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hsym {

/// sigma = prod_{psi in S} sigma_psi composed with theta^{theta_bit}.
/// The group law is symmetric difference on S and XOR on the theta bit.
struct SigmaElement {
    std::uint32_t compact_mask = 0; // bit i-1 = simple root psi_i, compact only
    bool theta = false;

    SigmaElement compose(const SigmaElement& other) const {
        return {compact_mask ^ other.compact_mask, theta != other.theta};
    }
    bool operator==(const SigmaElement&) const = default;
    std::string str() const; // "psi_2*psi_5*theta", "theta", "id"
};

/// Validates that S only contains compact simple roots of rs.
SigmaElement make_sigma(const RootSystem& rs, const std::vector<int>& simple_indices, bool theta);

struct CodimReport {
    SigmaElement sigma;
    int codim = 0;                 // #{alpha in Phi+_n : parity odd}
    int fixed_noncompact = 0;      // #Phi+_n - codim
};

/// Parity of alpha under sigma: sum of the S-coefficients plus the theta bit.
int parity(const RootSystem& rs, const SigmaElement& sigma, const Root& alpha);

CodimReport codim(const RootSystem& rs, const SigmaElement& sigma);

/// Minimum of codim over Sigma, excluding the trivial values 0 and #Phi+_n
/// (the latter is attained only by elements fixing just a point of X).
/// Ties break on (theta bit, lexicographically smallest S).
std::pair<int, SigmaElement> min_codim_over_sigma(const RootSystem& rs);

/// c(X): the least codimension of a constructed analytic cycle. Equal to
/// min_codim_over_sigma except for BDI with even p, where the outer
/// involution tau (fixing so(2,p-1)) contributes codimension 1.
int c_of_X(const RootSystem& rs);

/// The hard-coded outer-automorphism datum for BDI with p even.
struct OuterTau {
    int codim = 1;
    std::string fixed_subpair; // "so(2,p-1)"
};
std::optional<OuterTau> bdi_outer_tau(const RootSystem& rs);

/// Positive roots fixed by sigma (even parity), with compact/noncompact
/// counts and a Dynkin summary of the semisimple part of the fixed
/// subsystem.
struct FixedSubsystem {
    std::vector<int> fixed_pos;   // positive-root indices with even parity
    int fixed_compact = 0;
    int fixed_noncompact = 0;
    std::string dynkin_summary;   // e.g. "A1+C3"
};
FixedSubsystem fixed_subsystem(const RootSystem& rs, const SigmaElement& sigma);

} // namespace hsym
