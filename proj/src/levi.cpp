#include "hsym/levi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace hsym {

// ---------------------------------------------------------------------------
// Dynkin classification by canonical-form matching
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> cartan_of(const DynkinType& t) { return cartan_matrix(t.letter, t.rank); }

DynkinMatch classify_cartan(const std::vector<std::vector<int>>& cartan) {
    const int k = static_cast<int>(cartan.size());
    check(k >= 1 && k <= 8, "classify_cartan: rank out of range");
    std::vector<DynkinType> candidates;
    candidates.push_back({'A', k});
    if (k >= 2) candidates.push_back({'B', k});
    if (k >= 2) candidates.push_back({'C', k});
    if (k >= 3) candidates.push_back({'D', k});
    if (k == 6 || k == 7) candidates.push_back({'E', k});

    for (const DynkinType& t : candidates) {
        std::vector<std::vector<int>> target = cartan_of(t);
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                for (int j = 0; j < k && ok; ++j)
                    if (target[perm[i]][perm[j]] != cartan[i][j]) ok = false;
            if (ok) return {t, perm};
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    throw internal_error("classify_cartan: matrix matches no finite type of rank <= 8");
}

Int weyl_order(const std::vector<std::vector<int>>& cartan) {
    const int k = static_cast<int>(cartan.size());
    // Split into connected components first.
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    for (int s = 0; s < k; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < k; ++j)
                if (j != i && cartan[i][j] != 0 && comp[j] < 0) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    Int order = 1;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> verts;
        for (int i = 0; i < k; ++i)
            if (comp[i] == c) verts.push_back(i);
        std::vector<std::vector<int>> sub(verts.size(), std::vector<int>(verts.size()));
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = 0; b < verts.size(); ++b) sub[a][b] = cartan[verts[a]][verts[b]];
        DynkinType t = classify_cartan(sub).type;
        Int o = 1;
        auto factorial = [](int n) {
            Int f = 1;
            for (int i = 2; i <= n; ++i) f *= i;
            return f;
        };
        switch (t.letter) {
            case 'A': o = factorial(t.rank + 1); break;
            case 'B':
            case 'C': o = factorial(t.rank) << t.rank; break;
            case 'D': o = factorial(t.rank) << (t.rank - 1); break;
            case 'E': o = t.rank == 6 ? Int(51840) : Int(2903040); break;
            default: throw internal_error("weyl_order: unsupported type");
        }
        order *= o;
    }
    return order;
}

// ---------------------------------------------------------------------------
// Levi factorization
// ---------------------------------------------------------------------------

namespace {

// Coordinates of `target` in the rational span of `rows`, if it lies there.
std::optional<std::vector<Rat>> coords_in_span(const std::vector<std::vector<Rat>>& rows,
                                               const std::vector<Rat>& target) {
    const std::size_t n = target.size();
    Mat aug(n, rows.size() + 1);
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) aug.at(i, j) = rows[j][i];
    for (std::size_t i = 0; i < n; ++i) aug.at(i, rows.size()) = target[i];
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == rows.size()) return std::nullopt; // inconsistent
    std::vector<Rat> coords(rows.size(), Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) coords[pivots[r]] = aug.at(r, rows.size());
    return coords;
}

std::vector<Rat> root_as_rat(const Root& r) {
    std::vector<Rat> v(r.coeffs.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = r.coeffs[i];
    return v;
}

// Canonical compact-dual label for a Hermitian (type, node) pair. Nodes are
// identified up to diagram automorphism; D4's minuscule nodes are all
// equivalent by triality and get the SO(8)/U(4) presentation.
std::string dual_label(const DynkinType& t, int& node) {
    const int m = t.rank;
    switch (t.letter) {
        case 'A': {
            node = std::min(node, m + 1 - node);
            if (m == 1) return "S^2";
            std::ostringstream os;
            os << "G_" << node << "(C^" << m + 1 << ")";
            return os.str();
        }
        case 'B':
            if (node == 1) return "Q_" + std::to_string(2 * m - 1);
            break;
        case 'C':
            if (node == m) return "Sp(" + std::to_string(m) + ")/U(" + std::to_string(m) + ")";
            break;
        case 'D':
            if (m == 4 && (node == 1 || node == 3 || node == 4)) {
                node = 4;
                return "SO(8)/U(4)";
            }
            if (node == 1) return "Q_" + std::to_string(2 * m - 2);
            if (node == m - 1 || node == m) {
                node = m;
                return "SO(" + std::to_string(2 * m) + ")/U(" + std::to_string(m) + ")";
            }
            break;
        case 'E':
            if (t.rank == 6 && (node == 1 || node == 6)) {
                node = 1;
                return "E6/(SO(10)xSO(2))";
            }
            if (t.rank == 7 && node == 7) return "E7/(E6xSO(2))";
            break;
    }
    throw internal_error("compact_dual: factor (" + t.str() + ", node " + std::to_string(node) +
                         ") is not a Hermitian pair; Levi analysis is inconsistent");
}

// Ideal counts by size for the dominance poset of the noncompact positive
// roots of an abstract (cartan, node) pair.
std::vector<Int> factor_betti(const std::vector<std::vector<int>>& cartan, int node, int expect_dim) {
    std::vector<Root> pos = generate_positive_roots(cartan);
    std::vector<int> nodes;
    for (std::size_t i = 0; i < pos.size(); ++i)
        if (pos[i].coeffs[node - 1] != 0) nodes.push_back(static_cast<int>(i));
    const int m = static_cast<int>(nodes.size());
    check(m == expect_dim, "factor_betti: noncompact count disagrees with ambient data");
    check(m <= 64, "factor_betti: poset too large");
    std::vector<std::uint64_t> below(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Root diff = pos[nodes[j]] - pos[nodes[i]];
            if (std::all_of(diff.coeffs.begin(), diff.coeffs.end(), [](int c) { return c >= 0; }))
                below[j] |= std::uint64_t{1} << i;
        }
    std::vector<Int> hist(m + 1, Int(0));
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
            hist[f.size] += 1;
            continue;
        }
        std::uint64_t bit = std::uint64_t{1} << f.i;
        stack.push_back({f.i + 1, f.mask, f.size});
        if ((below[f.i] & ~(f.mask | bit)) == 0) stack.push_back({f.i + 1, f.mask | bit, f.size + 1});
    }
    return hist;
}

} // namespace

LeviFactorization levi_factorize(const RootSystem& rs, const ParabolicClass& cls) {
    LeviFactorization lf;
    const auto& pos = rs.positive_roots();
    for (std::size_t i = 0; i < pos.size(); ++i)
        if (rs.pairing(cls.witness, pos[i]) == 0) lf.phi_x_pos.push_back(static_cast<int>(i));

    std::vector<int> zero_nc; // noncompact part of Phi_x, positive
    for (int i : lf.phi_x_pos)
        if (rs.is_noncompact(i)) zero_nc.push_back(i);

    // C = minimal elements of the noncompact zero roots under dominance.
    for (int i : zero_nc) {
        bool minimal = true;
        for (int j : zero_nc) {
            if (i == j) continue;
            Root diff = pos[i] - pos[j];
            if (std::all_of(diff.coeffs.begin(), diff.coeffs.end(), [](int c) { return c >= 0; })) {
                minimal = false;
                break;
            }
        }
        if (minimal) lf.strongly_orthogonal.push_back(i);
    }

    // Pairwise strong orthogonality of C.
    for (std::size_t a = 0; a < lf.strongly_orthogonal.size(); ++a)
        for (std::size_t b = a + 1; b < lf.strongly_orthogonal.size(); ++b) {
            const Root& x = pos[lf.strongly_orthogonal[a]];
            const Root& y = pos[lf.strongly_orthogonal[b]];
            check(!rs.is_root(x + y) && !rs.is_root(x - y) && !rs.is_root(y - x) &&
                      rs.inner(x, y) == 0,
                  "levi_factorize: C is not strongly orthogonal");
        }
    check(static_cast<int>(lf.strongly_orthogonal.size()) <= rs.rank(),
          "levi_factorize: #C exceeds the rank");

    std::vector<bool> in_factor(pos.size(), false);
    for (int alpha_idx : lf.strongly_orthogonal) {
        HermitianFactor fac;
        fac.alpha = alpha_idx;
        const Root& alpha = pos[alpha_idx];

        // Delta_alpha: alpha plus every compact simple psi with a noncompact
        // zero root beta > alpha whose difference involves psi.
        for (int k = 1; k <= rs.rank(); ++k) {
            if (!rs.simple_is_compact(k)) continue;
            bool linked = false;
            for (int b : zero_nc) {
                Root diff = pos[b] - alpha;
                if (pos[b] == alpha) continue;
                if (!std::all_of(diff.coeffs.begin(), diff.coeffs.end(),
                                 [](int c) { return c >= 0; }))
                    continue;
                if (diff.coeffs[k - 1] != 0) {
                    linked = true;
                    break;
                }
            }
            if (linked) fac.delta_simples.push_back(k);
        }

        // Phi_alpha: zero roots in the rational span of Delta_alpha.
        std::vector<std::vector<Rat>> delta_rows;
        std::vector<Root> delta_roots;
        delta_roots.push_back(alpha);
        for (int k : fac.delta_simples) delta_roots.push_back(rs.simple_root(k));
        for (const Root& d : delta_roots) delta_rows.push_back(root_as_rat(d));
        for (int i : lf.phi_x_pos)
            if (coords_in_span(delta_rows, root_as_rat(pos[i]))) fac.phi_pos.push_back(i);

        // Borel-de Siebenthal property: in Delta_alpha coordinates every
        // noncompact root of Phi_alpha has coefficient +-1 at alpha.
        int dim = 0;
        for (int i : fac.phi_pos) {
            auto coords = coords_in_span(delta_rows, root_as_rat(pos[i]));
            check(coords.has_value(), "levi_factorize: span test inconsistency");
            const Rat& ca = (*coords)[0];
            if (rs.is_noncompact(i)) {
                check(ca == 1 || ca == -1, "levi_factorize: factor is not Borel-de Siebenthal");
                ++dim;
            } else {
                check(ca == 0, "levi_factorize: compact root meets the noncompact node");
            }
            check(!in_factor[i], "levi_factorize: factors are not disjoint");
            in_factor[i] = true;
        }
        fac.dim = dim;

        // Cartan matrix of (Phi_alpha, Delta_alpha) through the ambient form.
        const int fr = static_cast<int>(delta_roots.size());
        std::vector<std::vector<int>> cart(fr, std::vector<int>(fr));
        for (int i = 0; i < fr; ++i)
            for (int j = 0; j < fr; ++j) {
                Rat v = 2 * rs.inner(delta_roots[j], delta_roots[i]) /
                        rs.inner(delta_roots[i], delta_roots[i]);
                check(denominator(v) == 1, "levi_factorize: non-integral Cartan pairing");
                cart[i][j] = static_cast<int>(numerator(v));
            }
        DynkinMatch match = classify_cartan(cart);
        fac.type = match.type;
        fac.node = match.perm[0] + 1; // position of alpha, canonical numbering
        lf.factors.push_back(std::move(fac));
    }

    for (int i : lf.phi_x_pos)
        if (!in_factor[i]) {
            check(!rs.is_noncompact(i), "levi_factorize: Phi_c contains a noncompact root");
            lf.compact_ideal_pos.push_back(i);
        }

    std::sort(lf.factors.begin(), lf.factors.end(),
              [&](const HermitianFactor& a, const HermitianFactor& b) {
                  if (a.dim != b.dim) return a.dim < b.dim;
                  return pos[a.alpha] < pos[b.alpha];
              });
    return lf;
}

CompactDualProduct compact_dual(const RootSystem& rs, const LeviFactorization& lf) {
    CompactDualProduct dual;
    dual.euler = 1;
    dual.poincare = {Int(1)};
    int zero_noncompact = 0;
    for (int i : lf.phi_x_pos)
        if (rs.is_noncompact(i)) ++zero_noncompact;

    for (HermitianFactor fac : lf.factors) {
        fac.dual_name = dual_label(fac.type, fac.node);

        std::vector<std::vector<int>> cart = cartan_of(fac.type);
        // chi as a Weyl-order ratio: delete the noncompact node for W(k).
        std::vector<std::vector<int>> deleted;
        for (int i = 0; i < fac.type.rank; ++i) {
            if (i == fac.node - 1) continue;
            std::vector<int> row;
            for (int j = 0; j < fac.type.rank; ++j)
                if (j != fac.node - 1) row.push_back(cart[i][j]);
            deleted.push_back(std::move(row));
        }
        Int wg = weyl_order(cart);
        Int wk = deleted.empty() ? Int(1) : weyl_order(deleted);
        check(wg % wk == 0, "compact_dual: Weyl order ratio is not integral");
        fac.chi = wg / wk;

        fac.betti = factor_betti(cart, fac.node, fac.dim);

        dual.euler *= fac.chi;
        dual.dim_c += fac.dim;
        std::vector<Int> conv(dual.poincare.size() + fac.betti.size() - 1, Int(0));
        for (std::size_t i = 0; i < dual.poincare.size(); ++i)
            for (std::size_t j = 0; j < fac.betti.size(); ++j)
                conv[i + j] += dual.poincare[i] * fac.betti[j];
        dual.poincare = std::move(conv);
        dual.factors.push_back(std::move(fac));
    }

    check(dual.dim_c == zero_noncompact,
          "compact_dual: dim Y_q disagrees with the zero-root count");
    check(static_cast<int>(dual.poincare.size()) == dual.dim_c + 1,
          "compact_dual: Poincare degree disagrees with dim Y_q");
    check(dual.poincare.front() == 1, "compact_dual: b_0 != 1");
    Int total = 0;
    for (std::size_t i = 0; i < dual.poincare.size(); ++i) {
        check(dual.poincare[i] == dual.poincare[dual.poincare.size() - 1 - i],
              "compact_dual: Poincare polynomial is not palindromic");
        total += dual.poincare[i];
    }
    check(total == dual.euler,
          "compact_dual: Poincare value at 1 disagrees with the Weyl-order ratio");
    return dual;
}

Int euler_characteristic(const CompactDualProduct& dual) { return dual.euler; }

std::vector<Int> poincare_polynomial(const CompactDualProduct& dual) { return dual.poincare; }

std::string CompactDualProduct::name() const {
    if (factors.empty()) return "point";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        out += factors[i].dual_name;
    }
    return out;
}

} // namespace hsym
