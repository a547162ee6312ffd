// Root systems of the irreducible Hermitian symmetric pairs, with the
// compact/noncompact split and the dominance poset on positive noncompact
// roots. Internal coordinates are always simple-root coefficients (integers);
// epsilon coordinates exist only for display and parsing.
#pragma once

#include "hsym/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hsym {

enum class FamilyType { AIII, BDI, CI, DIII, EIII, EVII };

/// One of the six irreducible Hermitian families with its parameters:
/// AIII(p,q) = su(p,q), BDI(p) = so(2,p), CI(n) = sp(n,R),
/// DIII(n) = so*(2n), EIII = e6(-14), EVII = e7(-25).
struct HermitianFamily {
    FamilyType type;
    int p = 0, q = 0, n = 0;

    static HermitianFamily aiii(int p, int q) { return {FamilyType::AIII, p, q, 0}; }
    static HermitianFamily bdi(int p) { return {FamilyType::BDI, p, 0, 0}; }
    static HermitianFamily ci(int n) { return {FamilyType::CI, 0, 0, n}; }
    static HermitianFamily diii(int n) { return {FamilyType::DIII, 0, 0, n}; }
    static HermitianFamily eiii() { return {FamilyType::EIII, 0, 0, 0}; }
    static HermitianFamily evii() { return {FamilyType::EVII, 0, 0, 0}; }

    int rank() const;
    /// 1-based index of the unique noncompact simple root.
    int noncompact_node() const;
    std::string name() const;

    bool operator==(const HermitianFamily&) const = default;
};

struct Root {
    std::vector<int> coeffs; // over the simple roots, all of one sign

    int height() const;
    bool operator==(const Root&) const = default;
    /// Lexicographic on coefficient vectors; fixes all root orderings.
    auto operator<=>(const Root&) const = default;
};

Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a, const Root& b);

/// Rational coefficient vector over the fundamental weights, representing a
/// k-dominant lambda (equivalently the element x = h_lambda). The i-th
/// coefficient is exactly the pairing with the i-th simple coroot.
struct DominantVector {
    std::vector<Rat> fw_coeffs;

    bool is_zero() const;
    bool operator==(const DominantVector&) const = default;
};

struct HasseEdge {
    int lower;  // position into NoncompactPoset::nodes
    int upper;
    int label;  // 1-based simple root index (always compact)
};

/// Dominance order on the positive noncompact roots. Node payloads are
/// indices into RootSystem::positive_roots(); relations are bitmasks over
/// node positions (posets here never exceed 64 elements).
struct NoncompactPoset {
    std::vector<int> nodes;
    std::vector<std::uint64_t> below; // below[i] = {j : node j <= node i}, includes i
    std::vector<std::uint64_t> above; // above[i] = {j : node j >= node i}, includes i
    std::vector<HasseEdge> hasse_edges;

    int size() const { return static_cast<int>(nodes.size()); }
    bool leq(int i, int j) const { return (below[j] >> i) & 1; }
    std::uint64_t full_mask() const {
        return nodes.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << nodes.size()) - 1);
    }
};

class RootSystem {
public:
    /// Builds the root system of the given family. Throws
    /// std::invalid_argument naming the violated bound on bad parameters.
    static RootSystem build(const HermitianFamily& family);

    const HermitianFamily& family() const { return family_; }
    int rank() const { return rank_; }

    const std::vector<Root>& positive_roots() const { return positive_; }
    /// All roots: positives in lexicographic order, then their negatives.
    std::vector<Root> all_roots() const;

    bool is_noncompact(int pos_index) const { return noncompact_[pos_index]; }
    const std::vector<int>& noncompact_positive() const { return noncompact_idx_; }
    int num_noncompact_positive() const { return static_cast<int>(noncompact_idx_.size()); }

    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<Rat>& symmetrizer() const { return symmetrizer_; }
    const Root& highest_root() const { return highest_; }
    const Root& simple_root(int i) const { return simples_[i - 1]; } // 1-based
    bool simple_is_compact(int i) const;

    /// Index of a root in positive_roots(), or -1.
    int index_of(const Root& r) const;
    bool is_root(const Root& r) const { return index_of(r) >= 0; }

    /// Symmetrized inner product (alpha, beta); positive scale convention.
    Rat inner(const Root& a, const Root& b) const;
    /// <alpha, psi_i-check> = 2 (alpha, psi_i) / (psi_i, psi_i), an integer.
    int coroot_pairing(const Root& a, int simple_index_1based) const;

    /// Sign-exact pairing of a dominant vector against a root: a rational
    /// whose sign equals sign(alpha(h_lambda)). Linear in both arguments.
    Rat pairing(const DominantVector& lambda, const Root& alpha) const;

    /// True when every compact fundamental-weight coefficient is >= 0.
    /// On failure via `require`, the violated compact simple root is named.
    bool is_k_dominant(const DominantVector& lambda) const;
    void require_k_dominant(const DominantVector& lambda) const;

    /// The Weyl involution iota = -w0 of the compact Weyl group, computed by
    /// greedy descent; maps k-dominant vectors to k-dominant vectors.
    DominantVector iota(const DominantVector& lambda) const;

    NoncompactPoset noncompact_poset() const;

    // --- epsilon-coordinate display (presentation only) ---
    std::string epsilon_display(const Root& r) const;
    std::string epsilon_display(const DominantVector& v) const;
    /// Inverse of display: "e1-e2+2e5" etc. into fundamental-weight coords.
    DominantVector dominant_from_epsilon(const std::string& text) const;
    DominantVector dominant_from_epsilon(const std::vector<Rat>& eps) const;

    /// Fundamental-weight combination display, e.g. "w5-w1".
    std::string fw_display(const DominantVector& v) const;
    DominantVector dominant_from_fw(const std::vector<Rat>& coeffs) const;

    // --- DOT emission ---
    std::string hasse_dot() const;
    std::string extended_dynkin_dot() const;

private:
    HermitianFamily family_;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<Rat> symmetrizer_;
    std::vector<Root> positive_;   // lexicographically sorted
    std::vector<Root> simples_;
    std::vector<bool> noncompact_;
    std::vector<int> noncompact_idx_;
    Root highest_;
    Mat eps_rows_;                 // simple roots in epsilon coordinates
    std::vector<Rat> eps_gram_;    // diagonal Gram matrix of the epsilon basis
    Mat fw_to_eps_;                // fundamental weights in epsilon coordinates

    void generate_roots();
    void finish_build();
};

/// Number of down-closed subsets, computed exactly by enumeration.
unsigned long long count_order_ideals(const NoncompactPoset& poset);

// Shared by rootsystem and levi: positive roots of an abstract Cartan matrix.
std::vector<Root> generate_positive_roots(const std::vector<std::vector<int>>& cartan);
/// Diagonal d with d_i A_ij symmetric, scaled to smallest positive integers.
std::vector<Rat> cartan_symmetrizer(const std::vector<std::vector<int>>& cartan);
/// Canonical Cartan matrix in Bourbaki numbering; letter in {A,B,C,D,E}.
std::vector<std::vector<int>> cartan_matrix(char letter, int rank);

} // namespace hsym
