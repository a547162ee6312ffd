#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsym/rootsystem.hpp"

#include <random>
#include <set>

using namespace hsym;

namespace {

std::vector<HermitianFamily> sample_families() {
    return {HermitianFamily::aiii(1, 1), HermitianFamily::aiii(2, 2), HermitianFamily::aiii(2, 3),
            HermitianFamily::aiii(3, 4), HermitianFamily::bdi(5),     HermitianFamily::bdi(6),
            HermitianFamily::bdi(7),     HermitianFamily::ci(2),      HermitianFamily::ci(4),
            HermitianFamily::diii(4),    HermitianFamily::diii(6),    HermitianFamily::eiii(),
            HermitianFamily::evii()};
}

DominantVector fw(const RootSystem& rs, std::initializer_list<int> coeffs) {
    std::vector<Rat> c;
    for (int x : coeffs) c.emplace_back(x);
    return rs.dominant_from_fw(c);
}

} // namespace

TEST_CASE("positive root counts match the type") {
    auto count = [](const HermitianFamily& f) {
        return RootSystem::build(f).positive_roots().size();
    };
    CHECK(count(HermitianFamily::aiii(2, 3)) == 10); // A4
    CHECK(count(HermitianFamily::bdi(7)) == 16);     // B4
    CHECK(count(HermitianFamily::bdi(8)) == 20);     // D5
    CHECK(count(HermitianFamily::ci(4)) == 16);      // C4
    CHECK(count(HermitianFamily::diii(5)) == 20);    // D5
    CHECK(count(HermitianFamily::eiii()) == 36);     // E6
    CHECK(count(HermitianFamily::evii()) == 63);     // E7
}

TEST_CASE("noncompact positive root counts") {
    auto nc = [](const HermitianFamily& f) {
        return RootSystem::build(f).num_noncompact_positive();
    };
    CHECK(nc(HermitianFamily::aiii(2, 3)) == 6); // pq
    CHECK(nc(HermitianFamily::bdi(7)) == 7);     // p
    CHECK(nc(HermitianFamily::bdi(8)) == 8);
    CHECK(nc(HermitianFamily::ci(4)) == 10);     // n(n+1)/2
    CHECK(nc(HermitianFamily::diii(6)) == 15);   // n(n-1)/2
    CHECK(nc(HermitianFamily::eiii()) == 16);
    CHECK(nc(HermitianFamily::evii()) == 27);
}

TEST_CASE("AIII(2,3) has 20 roots, 10 positive") {
    RootSystem rs = RootSystem::build(HermitianFamily::aiii(2, 3));
    CHECK(rs.all_roots().size() == 20);
    CHECK(rs.positive_roots().size() == 10);
}

TEST_CASE("construction errors name the violated bound") {
    CHECK_THROWS_WITH_AS(RootSystem::build(HermitianFamily::diii(3)),
                         doctest::Contains("DIII requires n >= 4"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(RootSystem::build(HermitianFamily::ci(1)),
                         doctest::Contains("CI requires n >= 2"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(RootSystem::build(HermitianFamily::bdi(2)),
                         doctest::Contains("BDI requires p >= 3"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(RootSystem::build(HermitianFamily::aiii(3, 2)),
                         doctest::Contains("AIII requires p <= q"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build(HermitianFamily::aiii(0, 4)), std::invalid_argument);
}

TEST_CASE("noncompact coefficient is 0 or 1 and flags agree") {
    for (const auto& fam : sample_families()) {
        RootSystem rs = RootSystem::build(fam);
        int nc = fam.noncompact_node() - 1;
        for (std::size_t i = 0; i < rs.positive_roots().size(); ++i) {
            int c = rs.positive_roots()[i].coeffs[nc];
            CHECK((c == 0 || c == 1));
            CHECK(rs.is_noncompact(static_cast<int>(i)) == (c == 1));
        }
    }
}

TEST_CASE("sum of two positive noncompact roots is never a root") {
    for (const auto& fam : sample_families()) {
        RootSystem rs = RootSystem::build(fam);
        for (int i : rs.noncompact_positive())
            for (int j : rs.noncompact_positive())
                CHECK(!rs.is_root(rs.positive_roots()[i] + rs.positive_roots()[j]));
    }
}

TEST_CASE("root closure follows the Cartan integers") {
    // alpha, beta positive with <beta, alpha-check> < 0 forces alpha+beta
    // to be a root.
    for (const auto& fam : sample_families()) {
        RootSystem rs = RootSystem::build(fam);
        const auto& pos = rs.positive_roots();
        for (const Root& a : pos)
            for (const Root& b : pos) {
                if (a == b) continue;
                Rat num = 2 * rs.inner(b, a), den = rs.inner(a, a);
                if (num / den < 0) CHECK(rs.is_root(a + b));
            }
    }
}

TEST_CASE("symmetrized form is symmetric and invariant under simple reflections") {
    for (const auto& fam : sample_families()) {
        RootSystem rs = RootSystem::build(fam);
        const auto& pos = rs.positive_roots();
        auto reflect = [&](const Root& x, int k) {
            int c = rs.coroot_pairing(x, k);
            Root out = x;
            out.coeffs[k - 1] -= c;
            return out;
        };
        for (std::size_t i = 0; i < pos.size(); i += 3)
            for (std::size_t j = 0; j < pos.size(); j += 3) {
                CHECK(rs.inner(pos[i], pos[j]) == rs.inner(pos[j], pos[i]));
                for (int k = 1; k <= rs.rank(); ++k)
                    CHECK(rs.inner(reflect(pos[i], k), reflect(pos[j], k)) ==
                          rs.inner(pos[i], pos[j]));
            }
    }
}

TEST_CASE("hasse transitive closure equals dominance order") {
    for (const auto& fam : sample_families()) {
        RootSystem rs = RootSystem::build(fam);
        if (rs.rank() > 7) continue;
        NoncompactPoset poset = rs.noncompact_poset();
        const int m = poset.size();
        // reachability over hasse edges
        std::vector<std::uint64_t> reach(m);
        for (int i = 0; i < m; ++i) reach[i] = std::uint64_t{1} << i;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const HasseEdge& e : poset.hasse_edges) {
                std::uint64_t merged = reach[e.lower] | reach[e.upper];
                if (merged != reach[e.upper]) {
                    reach[e.upper] = merged;
                    changed = true;
                }
            }
        }
        for (int j = 0; j < m; ++j) CHECK(reach[j] == poset.below[j]);
    }
}

TEST_CASE("hasse edge labels are compact simple roots") {
    RootSystem rs = RootSystem::build(HermitianFamily::eiii());
    NoncompactPoset poset = rs.noncompact_poset();
    CHECK(poset.size() == 16);
    std::set<int> labels;
    for (const HasseEdge& e : poset.hasse_edges) labels.insert(e.label);
    CHECK(labels == std::set<int>{2, 3, 4, 5, 6});
}

TEST_CASE("EVII poset has 27 nodes with unique extremes") {
    RootSystem rs = RootSystem::build(HermitianFamily::evii());
    NoncompactPoset poset = rs.noncompact_poset();
    CHECK(poset.size() == 27);
    int minima = 0, maxima = 0, min_node = -1, max_node = -1;
    for (int i = 0; i < poset.size(); ++i) {
        if (poset.below[i] == (std::uint64_t{1} << i)) {
            ++minima;
            min_node = i;
        }
        if (poset.above[i] == (std::uint64_t{1} << i)) {
            ++maxima;
            max_node = i;
        }
    }
    CHECK(minima == 1);
    CHECK(maxima == 1);
    CHECK(rs.positive_roots()[poset.nodes[min_node]] == rs.simple_root(7));
    CHECK(rs.positive_roots()[poset.nodes[max_node]] == rs.highest_root());
}

TEST_CASE("AIII(1,1) poset is a single node") {
    RootSystem rs = RootSystem::build(HermitianFamily::aiii(1, 1));
    NoncompactPoset poset = rs.noncompact_poset();
    CHECK(poset.size() == 1);
    CHECK(poset.hasse_edges.empty());
}

TEST_CASE("order ideal counts") {
    CHECK(count_order_ideals(RootSystem::build(HermitianFamily::eiii()).noncompact_poset()) == 27);
    CHECK(count_order_ideals(RootSystem::build(HermitianFamily::evii()).noncompact_poset()) == 56);
    CHECK(count_order_ideals(RootSystem::build(HermitianFamily::aiii(1, 1)).noncompact_poset()) ==
          2);
    // p x q grid: binomial(p+q, p)
    CHECK(count_order_ideals(RootSystem::build(HermitianFamily::aiii(2, 2)).noncompact_poset()) ==
          6);
    CHECK(count_order_ideals(RootSystem::build(HermitianFamily::aiii(2, 3)).noncompact_poset()) ==
          10);
}

TEST_CASE("pairing examples") {
    RootSystem rs = RootSystem::build(HermitianFamily::evii());
    DominantVector zero = fw(rs, {0, 0, 0, 0, 0, 0, 0});
    for (const Root& a : rs.positive_roots()) CHECK(rs.pairing(zero, a) == 0);

    DominantVector l = fw(rs, {0, 1, 0, 0, 0, 0, -1}); // w2 - w7
    CHECK(rs.pairing(l, rs.simple_root(2)) > 0);

    // fundamental-weight duality: (w_i, psi_j) = 0 for i != j
    for (int i = 1; i <= rs.rank(); ++i) {
        std::vector<Rat> c(rs.rank(), Rat(0));
        c[i - 1] = 1;
        DominantVector wi = rs.dominant_from_fw(c);
        for (int j = 1; j <= rs.rank(); ++j) {
            if (i == j) CHECK(rs.pairing(wi, rs.simple_root(j)) > 0);
            else CHECK(rs.pairing(wi, rs.simple_root(j)) == 0);
        }
    }

    CHECK_THROWS_AS(rs.pairing(DominantVector{{Rat(1)}}, rs.simple_root(1)),
                    std::invalid_argument);
}

TEST_CASE("highest roots") {
    CHECK(RootSystem::build(HermitianFamily::eiii()).highest_root() ==
          Root{{1, 2, 2, 3, 2, 1}});
    CHECK(RootSystem::build(HermitianFamily::evii()).highest_root() ==
          Root{{2, 2, 3, 4, 3, 2, 1}});
    CHECK(RootSystem::build(HermitianFamily::ci(3)).highest_root() == Root{{2, 2, 1}});
}

TEST_CASE("epsilon display") {
    RootSystem ci = RootSystem::build(HermitianFamily::ci(4));
    // lambda = eps1 - eps4 in fundamental-weight coordinates
    DominantVector l = ci.dominant_from_epsilon("e1-e4");
    CHECK(ci.epsilon_display(l) == "e1-e4");
    CHECK(l.fw_coeffs == std::vector<Rat>{Rat(1), Rat(0), Rat(1), Rat(-1)});

    RootSystem su = RootSystem::build(HermitianFamily::aiii(2, 3));
    // omega = eps_{p+1} - eps_{p+q}; the noncompact node carries the -1
    DominantVector omega = su.dominant_from_fw({Rat(0), Rat(-1), Rat(1), Rat(1)});
    CHECK(su.epsilon_display(omega) == "e3-e5");
    CHECK(su.dominant_from_epsilon("e3-e5") == omega);

    DominantVector zero = su.dominant_from_fw({Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK(su.epsilon_display(zero) == "0");

    RootSystem e6 = RootSystem::build(HermitianFamily::eiii());
    CHECK(e6.epsilon_display(e6.simple_root(1)) ==
          "(1/2)e0+(1/2)e1-(1/2)e2-(1/2)e3-(1/2)e4-(1/2)e5");
    CHECK(e6.epsilon_display(e6.simple_root(3)) == "-e1+e2");
}

TEST_CASE("epsilon display round-trips with the fundamental-weight basis") {
    for (const auto& fam : sample_families()) {
        RootSystem rs = RootSystem::build(fam);
        std::mt19937_64 gen(fam.rank() * 977 + 3);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rat> c(rs.rank());
            for (auto& x : c)
                x = Rat(static_cast<int>(gen() % 11) - 5, 1 + static_cast<int>(gen() % 3));
            DominantVector v{c};
            DominantVector back = rs.dominant_from_epsilon(rs.epsilon_display(v));
            CHECK(back == v);
        }
    }
}

TEST_CASE("fw display") {
    RootSystem rs = RootSystem::build(HermitianFamily::eiii());
    CHECK(rs.fw_display(fw(rs, {-1, 0, 0, 0, 1, 0})) == "-w1+w5");
    CHECK(rs.fw_display(fw(rs, {0, 0, 0, 0, 0, 0})) == "0");
}

TEST_CASE("iota is an involution preserving k-dominance") {
    for (const auto& fam : sample_families()) {
        RootSystem rs = RootSystem::build(fam);
        std::mt19937_64 gen(fam.rank());
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<Rat> c(rs.rank());
            for (int i = 1; i <= rs.rank(); ++i) {
                int v = static_cast<int>(gen() % 7) - (rs.simple_is_compact(i) ? 0 : 3);
                c[i - 1] = rs.simple_is_compact(i) ? Rat(v < 0 ? -v : v) : Rat(v);
            }
            DominantVector l{c};
            DominantVector il = rs.iota(l);
            CHECK(rs.is_k_dominant(il));
            CHECK(rs.iota(il) == l);
        }
    }
}

TEST_CASE("DOT emitters are deterministic and well formed") {
    RootSystem rs = RootSystem::build(HermitianFamily::eiii());
    std::string h1 = rs.hasse_dot(), h2 = rs.hasse_dot();
    CHECK(h1 == h2);
    CHECK(h1.find("digraph hasse") != std::string::npos);
    // 16 nodes
    int nodes = 0;
    for (std::size_t p = h1.find("label="); p != std::string::npos; p = h1.find("label=", p + 1))
        ++nodes;
    int edges = 0;
    for (std::size_t p = h1.find("->"); p != std::string::npos; p = h1.find("->", p + 1)) ++edges;
    CHECK(nodes == 16 + edges); // every node and edge carries a label

    std::string d = rs.extended_dynkin_dot();
    CHECK(d.find("graph dynkin") != std::string::npos);
    CHECK(d.find("style=filled") != std::string::npos);   // noncompact node marked
    CHECK(d.find("malpha0 -- psi_2 [style=dashed]") != std::string::npos);

    // EVII: -alpha0 attaches to psi_1
    RootSystem e7 = RootSystem::build(HermitianFamily::evii());
    CHECK(e7.extended_dynkin_dot().find("malpha0 -- psi_1 [style=dashed]") != std::string::npos);
}

TEST_CASE("su(1,2) hasse has 2 nodes and 1 edge") {
    RootSystem rs = RootSystem::build(HermitianFamily::aiii(1, 2));
    NoncompactPoset poset = rs.noncompact_poset();
    CHECK(poset.size() == 2);
    CHECK(poset.hasse_edges.size() == 1);
}
