#include "hsym/cycles.hpp"

#include "hsym/levi.hpp"

#include <algorithm>
#include <sstream>

namespace hsym {

std::string SigmaElement::str() const {
    std::string out;
    for (int i = 0; i < 32; ++i)
        if ((compact_mask >> i) & 1) {
            if (!out.empty()) out += "*";
            out += "psi_" + std::to_string(i + 1);
        }
    if (theta) {
        if (!out.empty()) out += "*";
        out += "theta";
    }
    return out.empty() ? "id" : out;
}

SigmaElement make_sigma(const RootSystem& rs, const std::vector<int>& simple_indices, bool theta) {
    SigmaElement s;
    s.theta = theta;
    for (int i : simple_indices) {
        if (i < 1 || i > rs.rank())
            throw std::invalid_argument("sigma: simple root index out of range: " + std::to_string(i));
        if (!rs.simple_is_compact(i))
            throw std::invalid_argument("sigma: psi_" + std::to_string(i) +
                                        " is the noncompact simple root; S must be compact");
        s.compact_mask ^= std::uint32_t{1} << (i - 1);
    }
    return s;
}

int parity(const RootSystem& rs, const SigmaElement& sigma, const Root& alpha) {
    check(static_cast<int>(alpha.coeffs.size()) == rs.rank(), "parity: rank mismatch");
    int s = sigma.theta ? 1 : 0;
    for (int i = 0; i < rs.rank(); ++i)
        if ((sigma.compact_mask >> i) & 1) s += alpha.coeffs[i];
    return s & 1;
}

CodimReport codim(const RootSystem& rs, const SigmaElement& sigma) {
    for (int i = 0; i < rs.rank(); ++i)
        if (((sigma.compact_mask >> i) & 1) && !rs.simple_is_compact(i + 1))
            throw std::invalid_argument("codim: sigma contains the noncompact simple root psi_" +
                                        std::to_string(i + 1));
    CodimReport rep;
    rep.sigma = sigma;
    for (int idx : rs.noncompact_positive())
        if (parity(rs, sigma, rs.positive_roots()[idx])) ++rep.codim;
    rep.fixed_noncompact = rs.num_noncompact_positive() - rep.codim;
    return rep;
}

std::pair<int, SigmaElement> min_codim_over_sigma(const RootSystem& rs) {
    const int total = rs.num_noncompact_positive();
    std::vector<int> compact;
    for (int i = 1; i <= rs.rank(); ++i)
        if (rs.simple_is_compact(i)) compact.push_back(i);
    if (compact.size() > 24)
        throw std::invalid_argument("min_codim_over_sigma: family too large for the Sigma scan");

    struct Best {
        int codim;
        bool theta;
        std::vector<int> members;
        SigmaElement sigma;
    };
    std::optional<Best> best;
    for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << compact.size()); ++sub) {
        SigmaElement s;
        std::vector<int> members;
        for (std::size_t k = 0; k < compact.size(); ++k)
            if ((sub >> k) & 1) {
                members.push_back(compact[k]);
                s.compact_mask |= std::uint32_t{1} << (compact[k] - 1);
            }
        for (bool theta : {false, true}) {
            s.theta = theta;
            int c = codim(rs, s).codim;
            if (c == 0 || c == total) continue; // trivial action / point fixed set
            if (!best || std::tie(c, theta, members) <
                             std::tie(best->codim, best->theta, best->members))
                best = Best{c, theta, members, s};
        }
    }
    if (!best) {
        // Rank-1 degenerate families: the only nontrivial cycle is the point
        // fixed by the theta-type elements; report that codimension.
        return {total, SigmaElement{0, true}};
    }
    return {best->codim, best->sigma};
}

std::optional<OuterTau> bdi_outer_tau(const RootSystem& rs) {
    const HermitianFamily& f = rs.family();
    if (f.type != FamilyType::BDI || f.p % 2 != 0) return std::nullopt;
    return OuterTau{1, "so(2," + std::to_string(f.p - 1) + ")"};
}

int c_of_X(const RootSystem& rs) {
    if (auto tau = bdi_outer_tau(rs)) return tau->codim;
    return min_codim_over_sigma(rs).first;
}

FixedSubsystem fixed_subsystem(const RootSystem& rs, const SigmaElement& sigma) {
    FixedSubsystem out;
    const auto& pos = rs.positive_roots();
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (parity(rs, sigma, pos[i])) continue;
        out.fixed_pos.push_back(static_cast<int>(i));
        if (rs.is_noncompact(static_cast<int>(i))) ++out.fixed_noncompact;
        else ++out.fixed_compact;
    }

    // Simple roots of the fixed positive system: fixed positive roots that
    // are not a sum of two fixed positive roots.
    std::vector<int> simple;
    for (int i : out.fixed_pos) {
        bool decomposable = false;
        for (int a : out.fixed_pos) {
            if (a == i) continue;
            Root diff = pos[i] - pos[a];
            bool nonneg = std::all_of(diff.coeffs.begin(), diff.coeffs.end(),
                                      [](int c) { return c >= 0; });
            bool nonzero = std::any_of(diff.coeffs.begin(), diff.coeffs.end(),
                                       [](int c) { return c != 0; });
            if (nonneg && nonzero && rs.is_root(diff) && !parity(rs, sigma, diff)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(i);
    }
    if (!simple.empty()) {
        const int k = static_cast<int>(simple.size());
        std::vector<std::vector<int>> cart(k, std::vector<int>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                Rat v = 2 * rs.inner(pos[simple[j]], pos[simple[i]]) /
                        rs.inner(pos[simple[i]], pos[simple[i]]);
                check(denominator(v) == 1, "fixed_subsystem: non-integral Cartan pairing");
                cart[i][j] = static_cast<int>(numerator(v));
            }
        // Component-wise Dynkin summary.
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
                    if (j != i && cart[i][j] != 0 && comp[j] < 0) {
                        comp[j] = ncomp;
                        stack.push_back(j);
                    }
            }
            ++ncomp;
        }
        std::vector<std::string> parts;
        for (int c = 0; c < ncomp; ++c) {
            std::vector<int> verts;
            for (int i = 0; i < k; ++i)
                if (comp[i] == c) verts.push_back(i);
            std::vector<std::vector<int>> sub(verts.size(), std::vector<int>(verts.size()));
            for (std::size_t a = 0; a < verts.size(); ++a)
                for (std::size_t b = 0; b < verts.size(); ++b) sub[a][b] = cart[verts[a]][verts[b]];
            parts.push_back(classify_cartan(sub).type.str());
        }
        std::sort(parts.begin(), parts.end());
        std::ostringstream os;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) os << "+";
            os << parts[i];
        }
        out.dynkin_summary = os.str();
    }
    return out;
}

} // namespace hsym
