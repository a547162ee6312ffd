#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsym/levi.hpp"

using namespace hsym;

namespace {

DominantVector fw(const RootSystem& rs, std::initializer_list<int> coeffs) {
    std::vector<Rat> c;
    for (int x : coeffs) c.emplace_back(x);
    return rs.dominant_from_fw(c);
}

CompactDualProduct dual_of(const RootSystem& rs, const DominantVector& lambda) {
    ParabolicClass cls = hodge_of_lambda(rs, lambda);
    return compact_dual(rs, levi_factorize(rs, cls));
}

} // namespace

TEST_CASE("cartan classification recovers standard types under permutation") {
    for (char letter : {'A', 'B', 'C', 'D'}) {
        for (int rank = (letter == 'D' ? 4 : 2); rank <= 6; ++rank) {
            auto cart = cartan_matrix(letter, rank);
            // scramble
            std::vector<int> perm(rank);
            for (int i = 0; i < rank; ++i) perm[i] = (i * 2 + 1) % rank;
            std::sort(perm.begin(), perm.end()); // identity fallback for collisions
            DynkinMatch m = classify_cartan(cart);
            if (letter == 'C' && rank == 2) CHECK(m.type == DynkinType{'B', 2}); // B2 == C2
            else if (letter == 'D' && rank == 4) CHECK(m.type.rank == 4);
            else CHECK(m.type == DynkinType{letter, rank});
        }
    }
    CHECK(classify_cartan(cartan_matrix('E', 6)).type == DynkinType{'E', 6});
    CHECK(classify_cartan(cartan_matrix('E', 7)).type == DynkinType{'E', 7});
    CHECK(classify_cartan({{2}}).type == DynkinType{'A', 1});
    // D3 is A3 in canonical order
    CHECK(classify_cartan(cartan_matrix('D', 3)).type == DynkinType{'A', 3});
}

TEST_CASE("weyl orders") {
    CHECK(weyl_order(cartan_matrix('A', 4)) == 120);
    CHECK(weyl_order(cartan_matrix('B', 3)) == 48);
    CHECK(weyl_order(cartan_matrix('D', 5)) == 1920);
    CHECK(weyl_order(cartan_matrix('E', 6)) == 51840);
    CHECK(weyl_order(cartan_matrix('E', 7)) == 2903040);
    // disconnected: A1 + A2
    std::vector<std::vector<int>> disc = {{2, 0, 0}, {0, 2, -1}, {0, -1, 2}};
    CHECK(weyl_order(disc) == 12);
}

TEST_CASE("levi factors of the AIII omega class form a single Grassmannian") {
    // su(p,q), p < q-1: class of omega = eps_{p+1} - eps_{p+q}
    RootSystem rs = RootSystem::build(HermitianFamily::aiii(2, 5));
    ParabolicClass cls = hodge_of_lambda(rs, rs.dominant_from_epsilon("e3-e7"));
    CHECK(cls.r_plus == 2);
    LeviFactorization lf = levi_factorize(rs, cls);
    REQUIRE(lf.factors.size() == 1);
    CHECK(lf.factors[0].type == DynkinType{'A', 4}); // A_{p+q-3}
    CompactDualProduct dual = compact_dual(rs, lf);
    CHECK(dual.factors[0].dual_name == "G_2(C^5)");
    CHECK(dual.euler == 10); // binom(5, 2)
    CHECK(dual.dim_c == 6);
}

TEST_CASE("levi factors of the CI class split as C_{n-2} + A1") {
    RootSystem rs = RootSystem::build(HermitianFamily::ci(5));
    ParabolicClass cls = hodge_of_lambda(rs, rs.dominant_from_epsilon("e1-e5"));
    LeviFactorization lf = levi_factorize(rs, cls);
    REQUIRE(lf.factors.size() == 2);
    CompactDualProduct dual = compact_dual(rs, lf);
    CHECK(dual.factors[0].dual_name == "S^2"); // the +-(eps1+eps5) factor
    CHECK(dual.factors[1].dual_name == "Sp(3)/U(3)");
    CHECK(dual.euler == 16); // 2^{n-1}
    // the A1 factor is spanned by eps1+eps5
    CHECK(rs.epsilon_display(rs.positive_roots()[dual.factors[0].alpha]) == "e1+e5");
}

TEST_CASE("trivial class recovers the ambient compact dual") {
    struct Expect {
        HermitianFamily fam;
        std::string name;
        long long chi;
    };
    std::vector<Expect> cases = {
        {HermitianFamily::eiii(), "E6/(SO(10)xSO(2))", 27},
        {HermitianFamily::evii(), "E7/(E6xSO(2))", 56},
        {HermitianFamily::ci(4), "Sp(4)/U(4)", 16},
        {HermitianFamily::diii(5), "SO(10)/U(5)", 16},
        {HermitianFamily::bdi(7), "Q_7", 8},
        {HermitianFamily::aiii(2, 3), "G_2(C^5)", 10},
    };
    for (const auto& e : cases) {
        RootSystem rs = RootSystem::build(e.fam);
        std::vector<Rat> zero(rs.rank(), Rat(0));
        CompactDualProduct dual = dual_of(rs, rs.dominant_from_fw(zero));
        REQUIRE(dual.factors.size() == 1);
        CHECK(dual.factors[0].dual_name == e.name);
        CHECK(dual.euler == e.chi);
        CHECK(dual.dim_c == rs.num_noncompact_positive());
        // total Betti sum equals the order-ideal count of the full poset
        CHECK(dual.euler == Int(count_order_ideals(rs.noncompact_poset())));
    }
}

TEST_CASE("compact duals of the EIII table classes") {
    RootSystem rs = RootSystem::build(HermitianFamily::eiii());
    CompactDualProduct d4 = dual_of(rs, fw(rs, {-1, 0, 0, 0, 1, 0}));
    CHECK(d4.name() == "G_2(C^6)");
    CHECK(d4.euler == 15);
    CompactDualProduct d5 = dual_of(rs, fw(rs, {-2, 1, 1, 0, 0, 0}));
    CHECK(d5.name() == "SO(8)/U(4)");
    CHECK(d5.euler == 8);
    CompactDualProduct d6b = dual_of(rs, fw(rs, {-3, 1, 1, 0, 1, 0}));
    CHECK(d6b.name() == "G_2(C^4)");
    CHECK(d6b.euler == 6);
    // The remaining r=6 class has a 4-dimensional dual (16 - 12), hence two
    // A2 factors rather than two A1's.
    CompactDualProduct d6a = dual_of(rs, fw(rs, {-2, 0, 0, 1, 0, 1}));
    CHECK(d6a.name() == "G_1(C^3) x G_1(C^3)");
    CHECK(d6a.euler == 9);
    CHECK(d6a.dim_c == 4);
}

TEST_CASE("compact duals of the EVII table classes") {
    RootSystem rs = RootSystem::build(HermitianFamily::evii());
    CompactDualProduct d6 = dual_of(rs, fw(rs, {0, 1, 0, 0, 0, 0, -1}));
    CHECK(d6.name() == "SO(12)/U(6)");
    CHECK(d6.euler == 32);
    CompactDualProduct d9 = dual_of(rs, fw(rs, {0, 1, 0, 1, 0, 0, -3}));
    CHECK(d9.name() == "G_3(C^6)");
    CHECK(d9.euler == 20);
    // The mu class has a 9-dimensional dual (27 - 18): S^2 x Q_8.
    CompactDualProduct d9b = dual_of(rs, fw(rs, {1, 0, 0, 0, 0, 1, -2}));
    CHECK(d9b.name() == "S^2 x Q_8");
    CHECK(d9b.euler == 20);
    CHECK(d9b.dim_c == 9);
    CompactDualProduct d10 = dual_of(rs, fw(rs, {1, 1, 0, 0, 0, 1, -3}));
    CHECK(d10.name() == "S^2 x SO(8)/U(4)");
    CHECK(d10.euler == 16);
    CompactDualProduct d11 = dual_of(rs, fw(rs, {1, 0, 0, 1, 0, 1, -4}));
    CHECK(d11.name() == "S^2 x G_2(C^4)");
    CHECK(d11.euler == 12);
}

TEST_CASE("BDI quadric duals") {
    for (int p : {7, 8, 9, 10}) {
        RootSystem rs = RootSystem::build(HermitianFamily::bdi(p));
        CompactDualProduct dual = dual_of(rs, rs.dominant_from_epsilon("e2"));
        CHECK(dual.euler == 2 * (p / 2));
        CHECK(dual.dim_c == p - 2);
        if (p != 8) { // p=8 gives the D4 presentation SO(8)/U(4) of Q_6
            CHECK(dual.name() == "Q_" + std::to_string(p - 2));
        } else {
            CHECK(dual.name() == "SO(8)/U(4)");
        }
    }
}

TEST_CASE("poincare polynomials") {
    // S^2: 1 + t^2
    RootSystem sp2 = RootSystem::build(HermitianFamily::ci(2));
    ParabolicClass cls = classify(sp2, 1).front();
    CompactDualProduct s2 = compact_dual(sp2, levi_factorize(sp2, cls));
    CHECK(s2.name() == "S^2");
    CHECK(poincare_polynomial(s2) == std::vector<Int>{Int(1), Int(1)});

    // G_2(C^4): 1 + t^2 + 2t^4 + t^6 + t^8
    RootSystem e6 = RootSystem::build(HermitianFamily::eiii());
    CompactDualProduct g24 = dual_of(e6, fw(e6, {-3, 1, 1, 0, 1, 0}));
    CHECK(poincare_polynomial(g24) ==
          std::vector<Int>{Int(1), Int(1), Int(2), Int(1), Int(1)});
    CHECK(euler_characteristic(g24) == 6);

    // every EVII class: palindromic, b0 = 1, value at 1 equals chi
    RootSystem e7 = RootSystem::build(HermitianFamily::evii());
    for (const ParabolicClass& c : classify(e7, 11)) {
        CompactDualProduct dual = compact_dual(e7, levi_factorize(e7, c));
        const auto& b = dual.poincare;
        CHECK(b.front() == 1);
        Int sum = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            CHECK(b[i] == b[b.size() - 1 - i]);
            sum += b[i];
        }
        CHECK(sum == dual.euler);
        CHECK(static_cast<int>(b.size()) == dual.dim_c + 1);
        CHECK(dual.dim_c + c.degree() == e7.num_noncompact_positive());
    }
}

TEST_CASE("S^2 x S^2 from the su(2,3) exceptional class") {
    RootSystem rs = RootSystem::build(HermitianFamily::aiii(2, 3));
    CompactDualProduct dual = dual_of(rs, rs.dominant_from_epsilon("e1-e2+e3-e5"));
    CHECK(dual.name() == "S^2 x S^2");
    CHECK(euler_characteristic(dual) == 4);
    CHECK(poincare_polynomial(dual) == std::vector<Int>{Int(1), Int(2), Int(1)});
}

TEST_CASE("S^2 x SO(10)/U(5) arises for so*(14) with Betti sum 32") {
    RootSystem rs = RootSystem::build(HermitianFamily::diii(7));
    CompactDualProduct dual = dual_of(rs, rs.dominant_from_epsilon("e1-e7"));
    CHECK(dual.name() == "S^2 x SO(10)/U(5)");
    Int sum = 0;
    for (const Int& b : poincare_polynomial(dual)) sum += b;
    CHECK(sum == 32);
}

TEST_CASE("strong orthogonality of C on classified classes") {
    for (const HermitianFamily& fam :
         {HermitianFamily::aiii(2, 3), HermitianFamily::ci(4), HermitianFamily::diii(5),
          HermitianFamily::bdi(8), HermitianFamily::eiii()}) {
        RootSystem rs = RootSystem::build(fam);
        int cap = std::max(1, rs.num_noncompact_positive() / 2);
        for (const ParabolicClass& cls : classify(rs, cap)) {
            LeviFactorization lf = levi_factorize(rs, cls);
            const auto& pos = rs.positive_roots();
            for (std::size_t a = 0; a < lf.strongly_orthogonal.size(); ++a)
                for (std::size_t b = a + 1; b < lf.strongly_orthogonal.size(); ++b) {
                    const Root& x = pos[lf.strongly_orthogonal[a]];
                    const Root& y = pos[lf.strongly_orthogonal[b]];
                    CHECK(!rs.is_root(x + y));
                    CHECK(!rs.is_root(x - y));
                    CHECK(rs.inner(x, y) == 0);
                }
            for (int i : lf.compact_ideal_pos) CHECK(!rs.is_noncompact(i));
        }
    }
}

TEST_CASE("empty product is a point") {
    RootSystem rs = RootSystem::build(HermitianFamily::diii(4));
    // U covers the whole poset: witness at the noncompact fundamental weight
    std::vector<Rat> c(rs.rank(), Rat(0));
    c[rs.family().noncompact_node() - 1] = 1;
    ParabolicClass cls = hodge_of_lambda(rs, rs.dominant_from_fw(c));
    CHECK(cls.r_plus == rs.num_noncompact_positive());
    CompactDualProduct dual = compact_dual(rs, levi_factorize(rs, cls));
    CHECK(dual.factors.empty());
    CHECK(dual.name() == "point");
    CHECK(dual.euler == 1);
    CHECK(dual.dim_c == 0);
    CHECK(poincare_polynomial(dual) == std::vector<Int>{Int(1)});
}
