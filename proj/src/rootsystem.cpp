#include "hsym/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hsym {

// ---------------------------------------------------------------------------
// HermitianFamily
// ---------------------------------------------------------------------------

int HermitianFamily::rank() const {
    switch (type) {
        case FamilyType::AIII: return p + q - 1;
        case FamilyType::BDI: return p / 2 + 1;
        case FamilyType::CI: return n;
        case FamilyType::DIII: return n;
        case FamilyType::EIII: return 6;
        case FamilyType::EVII: return 7;
    }
    throw internal_error("unreachable family type");
}

int HermitianFamily::noncompact_node() const {
    switch (type) {
        case FamilyType::AIII: return p;
        case FamilyType::BDI: return 1;
        case FamilyType::CI: return n;
        case FamilyType::DIII: return n;
        case FamilyType::EIII: return 1;
        case FamilyType::EVII: return 7;
    }
    throw internal_error("unreachable family type");
}

std::string HermitianFamily::name() const {
    std::ostringstream os;
    switch (type) {
        case FamilyType::AIII: os << "su(" << p << "," << q << ")"; break;
        case FamilyType::BDI: os << "so(2," << p << ")"; break;
        case FamilyType::CI: os << "sp(" << n << ")"; break;
        case FamilyType::DIII: os << "so*(" << 2 * n << ")"; break;
        case FamilyType::EIII: os << "e6-1"; break;
        case FamilyType::EVII: os << "e7-7"; break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Root
// ---------------------------------------------------------------------------

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

Root operator+(const Root& a, const Root& b) {
    check(a.coeffs.size() == b.coeffs.size(), "Root addition: rank mismatch");
    Root r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

Root operator-(const Root& a, const Root& b) {
    check(a.coeffs.size() == b.coeffs.size(), "Root subtraction: rank mismatch");
    Root r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

bool DominantVector::is_zero() const {
    return std::all_of(fw_coeffs.begin(), fw_coeffs.end(), [](const Rat& c) { return c == 0; });
}

// ---------------------------------------------------------------------------
// Abstract Cartan-matrix machinery
// ---------------------------------------------------------------------------

std::vector<Root> generate_positive_roots(const std::vector<std::vector<int>>& cartan) {
    const int rank = static_cast<int>(cartan.size());
    std::set<std::vector<int>> seen;
    std::vector<Root> roots;
    std::vector<Root> level;
    for (int i = 0; i < rank; ++i) {
        Root psi{std::vector<int>(rank, 0)};
        psi.coeffs[i] = 1;
        seen.insert(psi.coeffs);
        roots.push_back(psi);
        level.push_back(psi);
    }
    // Height-by-height closure: alpha + psi_i is a root iff the psi_i-string
    // through alpha continues, i.e. p - <alpha, psi_i-check> > 0 where p is
    // the depth of the string below alpha.
    while (!level.empty()) {
        std::vector<Root> next;
        for (const Root& alpha : level) {
            for (int i = 0; i < rank; ++i) {
                int pairing = 0;
                for (int j = 0; j < rank; ++j) pairing += alpha.coeffs[j] * cartan[i][j];
                int p = 0;
                Root down = alpha;
                for (;;) {
                    down.coeffs[i] -= 1;
                    bool neg = std::any_of(down.coeffs.begin(), down.coeffs.end(),
                                           [](int c) { return c < 0; });
                    if (neg || !seen.count(down.coeffs)) break;
                    ++p;
                }
                if (p - pairing <= 0) continue;
                Root up = alpha;
                up.coeffs[i] += 1;
                if (seen.insert(up.coeffs).second) {
                    roots.push_back(up);
                    next.push_back(up);
                }
            }
        }
        level = std::move(next);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Rat> cartan_symmetrizer(const std::vector<std::vector<int>>& cartan) {
    const std::size_t rank = cartan.size();
    std::vector<Rat> d(rank, Rat(0));
    // Propagate d_j / d_i = A[i][j] / A[j][i] over the (connected) diagram.
    for (std::size_t start = 0; start < rank; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < rank; ++j) {
                if (i == j || cartan[i][j] == 0 || d[j] != 0) continue;
                d[j] = d[i] * cartan[i][j] / cartan[j][i];
                stack.push_back(j);
            }
        }
    }
    std::vector<Rat> scaled = primitive_integer(d);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            check(scaled[i] * cartan[i][j] == scaled[j] * cartan[j][i],
                  "cartan_symmetrizer: matrix is not symmetrizable");
    return scaled;
}

namespace {

std::vector<std::vector<int>> cartan_A(int m) {
    std::vector<std::vector<int>> a(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) {
        a[i][i] = 2;
        if (i + 1 < m) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
}

// Bourbaki B_m: psi_m is the short root.
std::vector<std::vector<int>> cartan_B(int m) {
    auto a = cartan_A(m);
    a[m - 1][m - 2] = -2;
    return a;
}

// Bourbaki C_m: psi_m is the long root.
std::vector<std::vector<int>> cartan_C(int m) {
    auto a = cartan_A(m);
    a[m - 2][m - 1] = -2;
    return a;
}

std::vector<std::vector<int>> cartan_D(int m) {
    auto a = cartan_A(m);
    a[m - 1][m - 2] = a[m - 2][m - 1] = 0;
    a[m - 1][m - 3] = a[m - 3][m - 1] = -1;
    return a;
}

// Bourbaki E-series: node 2 hangs off node 4 of the path 1-3-4-5-6(-7).
std::vector<std::vector<int>> cartan_E(int m) {
    std::vector<std::vector<int>> a(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) a[i][i] = 2;
    auto bond = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
    bond(1, 3);
    bond(3, 4);
    bond(4, 5);
    bond(5, 6);
    if (m == 7) bond(6, 7);
    bond(2, 4);
    return a;
}

} // namespace

std::vector<std::vector<int>> cartan_matrix(char letter, int rank) {
    switch (letter) {
        case 'A':
            if (rank >= 1) return cartan_A(rank);
            break;
        case 'B':
            if (rank >= 2) return cartan_B(rank);
            break;
        case 'C':
            if (rank >= 2) return cartan_C(rank);
            break;
        case 'D':
            if (rank >= 3) return cartan_D(rank);
            break;
        case 'E':
            if (rank == 6 || rank == 7) return cartan_E(rank);
            break;
    }
    throw std::invalid_argument(std::string("no Cartan matrix for type ") + letter +
                                std::to_string(rank));
}

// ---------------------------------------------------------------------------
// RootSystem construction
// ---------------------------------------------------------------------------

RootSystem RootSystem::build(const HermitianFamily& family) {
    RootSystem rs;
    rs.family_ = family;
    auto fail = [&](const std::string& msg) { throw std::invalid_argument(msg); };

    switch (family.type) {
        case FamilyType::AIII: {
            if (family.p < 1) fail("AIII requires p >= 1 (got p=" + std::to_string(family.p) + ")");
            if (family.p > family.q)
                fail("AIII requires p <= q (got p=" + std::to_string(family.p) +
                     ", q=" + std::to_string(family.q) + ")");
            int m = family.p + family.q - 1;
            rs.cartan_ = cartan_A(m);
            int N = family.p + family.q;
            rs.eps_rows_ = Mat(m, N);
            for (int i = 0; i < m; ++i) {
                rs.eps_rows_.at(i, i) = 1;
                rs.eps_rows_.at(i, i + 1) = -1;
            }
            rs.eps_gram_.assign(N, Rat(1));
            break;
        }
        case FamilyType::BDI: {
            if (family.p < 3) fail("BDI requires p >= 3 (got p=" + std::to_string(family.p) + ")");
            int m = family.p / 2 + 1;
            bool odd = family.p % 2 != 0;
            rs.cartan_ = odd ? cartan_B(m) : cartan_D(m);
            rs.eps_rows_ = Mat(m, m);
            for (int i = 0; i + 1 < m; ++i) {
                rs.eps_rows_.at(i, i) = 1;
                rs.eps_rows_.at(i, i + 1) = -1;
            }
            if (odd) {
                rs.eps_rows_.at(m - 1, m - 1) = 1;
            } else {
                rs.eps_rows_.at(m - 1, m - 2) = 1;
                rs.eps_rows_.at(m - 1, m - 1) = 1;
            }
            rs.eps_gram_.assign(m, Rat(1));
            break;
        }
        case FamilyType::CI: {
            if (family.n < 2) fail("CI requires n >= 2 (got n=" + std::to_string(family.n) + ")");
            int m = family.n;
            rs.cartan_ = cartan_C(m);
            rs.eps_rows_ = Mat(m, m);
            for (int i = 0; i + 1 < m; ++i) {
                rs.eps_rows_.at(i, i) = 1;
                rs.eps_rows_.at(i, i + 1) = -1;
            }
            rs.eps_rows_.at(m - 1, m - 1) = 2;
            rs.eps_gram_.assign(m, Rat(1));
            break;
        }
        case FamilyType::DIII: {
            if (family.n < 4) fail("DIII requires n >= 4 (got n=" + std::to_string(family.n) + ")");
            int m = family.n;
            rs.cartan_ = cartan_D(m);
            rs.eps_rows_ = Mat(m, m);
            for (int i = 0; i + 1 < m; ++i) {
                rs.eps_rows_.at(i, i) = 1;
                rs.eps_rows_.at(i, i + 1) = -1;
            }
            rs.eps_rows_.at(m - 1, m - 2) = 1;
            rs.eps_rows_.at(m - 1, m - 1) = 1;
            rs.eps_gram_.assign(m, Rat(1));
            break;
        }
        case FamilyType::EIII: {
            rs.cartan_ = cartan_E(6);
            // Display basis e0..e5 with e0 = eps8 - eps7 - eps6 of norm 3.
            rs.eps_rows_ = Mat(6, 6);
            Rat h(1, 2);
            rs.eps_rows_.at(0, 0) = h;
            rs.eps_rows_.at(0, 1) = h;
            for (int k = 2; k < 6; ++k) rs.eps_rows_.at(0, k) = -h;
            rs.eps_rows_.at(1, 1) = 1;
            rs.eps_rows_.at(1, 2) = 1; // psi_2 = e1 + e2
            rs.eps_rows_.at(2, 1) = -1;
            rs.eps_rows_.at(2, 2) = 1; // psi_3 = e2 - e1
            for (int i = 3; i < 6; ++i) {
                rs.eps_rows_.at(i, i - 1) = -1;
                rs.eps_rows_.at(i, i) = 1;
            }
            rs.eps_gram_ = {Rat(3), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)};
            break;
        }
        case FamilyType::EVII: {
            rs.cartan_ = cartan_E(7);
            rs.eps_rows_ = Mat(7, 8);
            Rat h(1, 2);
            rs.eps_rows_.at(0, 0) = h;
            for (int k = 1; k < 7; ++k) rs.eps_rows_.at(0, k) = -h;
            rs.eps_rows_.at(0, 7) = h;
            rs.eps_rows_.at(1, 0) = 1;
            rs.eps_rows_.at(1, 1) = 1; // psi_2 = e1 + e2
            rs.eps_rows_.at(2, 0) = -1;
            rs.eps_rows_.at(2, 1) = 1; // psi_3 = e2 - e1
            for (int i = 3; i < 7; ++i) {
                rs.eps_rows_.at(i, i - 2) = -1;
                rs.eps_rows_.at(i, i - 1) = 1;
            }
            rs.eps_gram_.assign(8, Rat(1));
            break;
        }
    }

    rs.rank_ = static_cast<int>(rs.cartan_.size());
    check(rs.rank_ == family.rank(), "rank mismatch against family data");
    rs.finish_build();
    return rs;
}

void RootSystem::finish_build() {
    symmetrizer_ = cartan_symmetrizer(cartan_);
    positive_ = generate_positive_roots(cartan_);
    simples_.clear();
    for (int i = 0; i < rank_; ++i) {
        Root psi{std::vector<int>(rank_, 0)};
        psi.coeffs[i] = 1;
        simples_.push_back(psi);
    }

    // Consistency of the display basis with the Cartan matrix:
    // 2 (psi_i, psi_j)_eps / (psi_j, psi_j)_eps must reproduce A[j][i].
    auto eps_inner = [&](int i, int j) {
        Rat s = 0;
        for (std::size_t k = 0; k < eps_gram_.size(); ++k)
            s += eps_gram_[k] * eps_rows_.at(i, k) * eps_rows_.at(j, k);
        return s;
    };
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            check(2 * eps_inner(i, j) == Rat(cartan_[j][i]) * eps_inner(j, j),
                  "epsilon rows inconsistent with the Cartan matrix");

    const int nc = family_.noncompact_node() - 1;
    noncompact_.resize(positive_.size());
    noncompact_idx_.clear();
    for (std::size_t i = 0; i < positive_.size(); ++i) {
        int c = positive_[i].coeffs[nc];
        check(c == 0 || c == 1, "Hermitian property violated: noncompact coefficient not in {0,1}");
        noncompact_[i] = c != 0;
        if (c != 0) noncompact_idx_.push_back(static_cast<int>(i));
    }
    check(!noncompact_idx_.empty(), "no noncompact roots");

    // The highest root is the unique maximal element for the dominance order.
    int best = -1;
    for (std::size_t i = 0; i < positive_.size(); ++i)
        if (best < 0 || positive_[i].height() > positive_[best].height())
            best = static_cast<int>(i);
    highest_ = positive_[best];
    for (const Root& r : positive_) {
        Root diff = highest_ - r;
        check(std::all_of(diff.coeffs.begin(), diff.coeffs.end(), [](int c) { return c >= 0; }),
              "highest root is not dominant over all positive roots");
    }

    // Fundamental weights in epsilon coordinates: varpi_j is column j of the
    // inverse Cartan matrix in simple-root coordinates.
    Mat acm(rank_, rank_);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) acm.at(i, j) = cartan_[i][j];
    auto ainv = inverse(acm);
    check(ainv.has_value(), "Cartan matrix is singular");
    fw_to_eps_ = eps_rows_.transposed() * (*ainv);
}

std::vector<Root> RootSystem::all_roots() const {
    std::vector<Root> out = positive_;
    for (const Root& r : positive_) {
        Root neg = r;
        for (int& c : neg.coeffs) c = -c;
        out.push_back(neg);
    }
    return out;
}

bool RootSystem::simple_is_compact(int i) const { return i != family_.noncompact_node(); }

int RootSystem::index_of(const Root& r) const {
    auto it = std::lower_bound(positive_.begin(), positive_.end(), r);
    if (it != positive_.end() && *it == r) return static_cast<int>(it - positive_.begin());
    return -1;
}

Rat RootSystem::inner(const Root& a, const Root& b) const {
    check(a.coeffs.size() == b.coeffs.size() && static_cast<int>(a.coeffs.size()) == rank_,
          "inner: rank mismatch");
    Rat s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            s += Rat(a.coeffs[i]) * b.coeffs[j] * symmetrizer_[i] * cartan_[i][j];
    }
    return s;
}

int RootSystem::coroot_pairing(const Root& a, int i) const {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += a.coeffs[j] * cartan_[i - 1][j];
    return s;
}

Rat RootSystem::pairing(const DominantVector& lambda, const Root& alpha) const {
    if (static_cast<int>(lambda.fw_coeffs.size()) != rank_ ||
        static_cast<int>(alpha.coeffs.size()) != rank_)
        throw std::invalid_argument("pairing: dimension mismatch");
    Rat s = 0;
    for (int i = 0; i < rank_; ++i) s += lambda.fw_coeffs[i] * alpha.coeffs[i] * symmetrizer_[i];
    return s;
}

bool RootSystem::is_k_dominant(const DominantVector& lambda) const {
    for (int i = 1; i <= rank_; ++i)
        if (simple_is_compact(i) && lambda.fw_coeffs[i - 1] < 0) return false;
    return true;
}

void RootSystem::require_k_dominant(const DominantVector& lambda) const {
    if (static_cast<int>(lambda.fw_coeffs.size()) != rank_)
        throw std::invalid_argument("dominant vector: dimension mismatch");
    for (int i = 1; i <= rank_; ++i)
        if (simple_is_compact(i) && lambda.fw_coeffs[i - 1] < 0)
            throw std::invalid_argument("vector is not k-dominant: negative at compact simple root psi_" +
                                        std::to_string(i));
}

DominantVector RootSystem::iota(const DominantVector& lambda) const {
    check(static_cast<int>(lambda.fw_coeffs.size()) == rank_, "iota: dimension mismatch");
    std::vector<Rat> v(rank_);
    for (int i = 0; i < rank_; ++i) v[i] = -lambda.fw_coeffs[i];
    // Greedy descent to the k-dominant chamber computes w0 of W_k applied
    // to -lambda, which is iota(lambda).
    for (long guard = 0; ; ++guard) {
        check(guard < 100000, "iota: descent failed to terminate");
        int i = -1;
        for (int k = 1; k <= rank_; ++k)
            if (simple_is_compact(k) && v[k - 1] < 0) { i = k; break; }
        if (i < 0) break;
        Rat ci = v[i - 1];
        for (int j = 0; j < rank_; ++j) v[j] -= ci * cartan_[j][i - 1];
    }
    return DominantVector{std::move(v)};
}

// ---------------------------------------------------------------------------
// Noncompact poset
// ---------------------------------------------------------------------------

NoncompactPoset RootSystem::noncompact_poset() const {
    NoncompactPoset poset;
    poset.nodes = noncompact_idx_;
    const int m = poset.size();
    check(m <= 64, "noncompact poset exceeds 64 elements; family too large for this build");
    poset.below.assign(m, 0);
    poset.above.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        const Root& a = positive_[poset.nodes[i]];
        for (int j = 0; j < m; ++j) {
            const Root& b = positive_[poset.nodes[j]];
            Root diff = b - a;
            bool le = std::all_of(diff.coeffs.begin(), diff.coeffs.end(), [](int c) { return c >= 0; });
            if (le) { // a <= b
                poset.below[j] |= std::uint64_t{1} << i;
                poset.above[i] |= std::uint64_t{1} << j;
            }
        }
    }
    for (int i = 0; i < m; ++i) {
        const Root& a = positive_[poset.nodes[i]];
        for (int j = 0; j < m; ++j) {
            const Root& b = positive_[poset.nodes[j]];
            Root diff = b - a;
            for (int k = 1; k <= rank_; ++k) {
                if (!simple_is_compact(k)) continue;
                if (diff == simple_root(k)) poset.hasse_edges.push_back({i, j, k});
            }
        }
    }
    std::sort(poset.hasse_edges.begin(), poset.hasse_edges.end(),
              [](const HasseEdge& x, const HasseEdge& y) {
                  return std::tie(x.lower, x.upper) < std::tie(y.lower, y.upper);
              });
    // Unique minimum (the noncompact simple root) and maximum (highest root).
    int minima = 0, maxima = 0;
    for (int i = 0; i < m; ++i) {
        if (poset.below[i] == (std::uint64_t{1} << i)) ++minima;
        if (poset.above[i] == (std::uint64_t{1} << i)) ++maxima;
    }
    check(minima == 1 && maxima == 1, "noncompact poset lacks a unique minimum/maximum");
    return poset;
}

unsigned long long count_order_ideals(const NoncompactPoset& poset) {
    const int m = poset.size();
    // Node order is a linear extension (lexicographic refines dominance),
    // so a subset is an ideal iff each member's down-set is already in.
    unsigned long long count = 0;
    std::vector<std::pair<int, std::uint64_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [i, mask] = stack.back();
        stack.pop_back();
        if (i == m) {
            ++count;
            continue;
        }
        std::uint64_t bit = std::uint64_t{1} << i;
        stack.push_back({i + 1, mask});
        if ((poset.below[i] & ~(mask | bit)) == 0) stack.push_back({i + 1, mask | bit});
    }
    return count;
}

// ---------------------------------------------------------------------------
// Epsilon display
// ---------------------------------------------------------------------------

namespace {

int eps_start_index(FamilyType t) { return t == FamilyType::EIII ? 0 : 1; }

std::string render_eps(const std::vector<Rat>& coords, int start) {
    std::string out;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        const Rat& c = coords[k];
        if (c == 0) continue;
        Rat a = c < 0 ? Rat(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        if (a != 1) {
            if (denominator(a) == 1) out += numerator(a).str();
            else out += "(" + rat_str(a) + ")";
        }
        out += "e" + std::to_string(start + static_cast<int>(k));
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string RootSystem::epsilon_display(const Root& r) const {
    std::vector<Rat> coords(eps_gram_.size(), Rat(0));
    for (int i = 0; i < rank_; ++i)
        for (std::size_t k = 0; k < coords.size(); ++k)
            coords[k] += Rat(r.coeffs[i]) * eps_rows_.at(i, k);
    return render_eps(coords, eps_start_index(family_.type));
}

std::string RootSystem::epsilon_display(const DominantVector& v) const {
    check(static_cast<int>(v.fw_coeffs.size()) == rank_, "epsilon_display: dimension mismatch");
    std::vector<Rat> coords = fw_to_eps_.apply(v.fw_coeffs);
    return render_eps(coords, eps_start_index(family_.type));
}

DominantVector RootSystem::dominant_from_epsilon(const std::vector<Rat>& eps) const {
    if (eps.size() != eps_gram_.size())
        throw std::invalid_argument("epsilon vector: dimension mismatch");
    std::vector<Rat> c(rank_);
    for (int i = 0; i < rank_; ++i) {
        Rat num = 0, den = 0;
        for (std::size_t k = 0; k < eps.size(); ++k) {
            num += eps_gram_[k] * eps[k] * eps_rows_.at(i, k);
            den += eps_gram_[k] * eps_rows_.at(i, k) * eps_rows_.at(i, k);
        }
        c[i] = 2 * num / den;
    }
    return DominantVector{std::move(c)};
}

DominantVector RootSystem::dominant_from_epsilon(const std::string& text) const {
    std::vector<Rat> eps(eps_gram_.size(), Rat(0));
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s == "0") return dominant_from_epsilon(eps);
    const int start = eps_start_index(family_.type);
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sgn = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sgn = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::string coef;
        if (s[pos] == '(') {
            std::size_t close = s.find(')', pos);
            if (close == std::string::npos) throw std::invalid_argument("unbalanced '(' in: " + text);
            coef = s.substr(pos + 1, close - pos - 1);
            pos = close + 1;
        } else {
            while (pos < s.size() && (isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
                coef += s[pos++];
        }
        if (pos >= s.size() || s[pos] != 'e')
            throw std::invalid_argument("expected epsilon term in: " + text);
        ++pos;
        std::string idx;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) idx += s[pos++];
        if (idx.empty()) throw std::invalid_argument("missing epsilon index in: " + text);
        int k = std::stoi(idx) - start;
        if (k < 0 || k >= static_cast<int>(eps.size()))
            throw std::invalid_argument("epsilon index out of range in: " + text);
        Rat c = coef.empty() ? Rat(1) : rat_parse(coef);
        eps[k] += sgn * c;
    }
    return dominant_from_epsilon(eps);
}

std::string RootSystem::fw_display(const DominantVector& v) const {
    std::string out;
    for (int i = 0; i < rank_; ++i) {
        const Rat& c = v.fw_coeffs[i];
        if (c == 0) continue;
        Rat a = c < 0 ? Rat(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        if (a != 1) {
            if (denominator(a) == 1) out += numerator(a).str();
            else out += "(" + rat_str(a) + ")";
        }
        out += "w" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

DominantVector RootSystem::dominant_from_fw(const std::vector<Rat>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != rank_)
        throw std::invalid_argument("fundamental-weight vector: dimension mismatch");
    return DominantVector{coeffs};
}

// ---------------------------------------------------------------------------
// DOT emission
// ---------------------------------------------------------------------------

std::string RootSystem::hasse_dot() const {
    NoncompactPoset poset = noncompact_poset();
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < poset.size(); ++i)
        os << "  n" << i << " [label=\"" << epsilon_display(positive_[poset.nodes[i]]) << "\"];\n";
    for (const HasseEdge& e : poset.hasse_edges)
        os << "  n" << e.lower << " -> n" << e.upper << " [label=\"psi_" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string RootSystem::extended_dynkin_dot() const {
    std::ostringstream os;
    os << "graph dynkin {\n";
    for (int i = 1; i <= rank_; ++i) {
        os << "  psi_" << i << " [label=\"psi_" << i << "\"";
        if (!simple_is_compact(i)) os << ", style=filled";
        os << "];\n";
    }
    os << "  malpha0 [label=\"-alpha0\"];\n";
    for (int i = 1; i <= rank_; ++i)
        for (int j = i + 1; j <= rank_; ++j) {
            if (cartan_[i - 1][j - 1] == 0) continue;
            int mult = std::max(-cartan_[i - 1][j - 1], -cartan_[j - 1][i - 1]);
            os << "  psi_" << i << " -- psi_" << j;
            if (mult > 1) os << " [label=\"" << mult << "\"]";
            os << ";\n";
        }
    for (int i = 1; i <= rank_; ++i) {
        int m = coroot_pairing(highest_, i);
        if (m == 0) continue;
        os << "  malpha0 -- psi_" << i << " [style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace hsym
