#include <gtest/gtest.h>

#include "tycat/error.hpp"
#include "tycat/fusion.hpp"

using namespace tycat;

TEST(Fusion, TYRingsAreConsistent) {
    for (auto f : {std::vector<int64_t>{1}, {2}, {3}, {2, 2}, {5}, {3, 3}}) {
        FinAbGroup G = f == std::vector<int64_t>{1} ? FinAbGroup() : FinAbGroup(f);
        auto R = ty_fusion_ring(G);
        EXPECT_EQ(R.rank(), size_t(G.order() + 1));
        auto rep = check_fusion_ring(R);
        EXPECT_TRUE(rep.ok()) << G.str();
        ASSERT_TRUE(rep.global_dim_exact.has_value());
        EXPECT_EQ(*rep.global_dim_exact, 2 * G.order());
    }
}

TEST(Fusion, RhoSquaredIsSumOfGroup) {
    auto R = ty_fusion_ring(FinAbGroup({5}));
    size_t rho = R.index_of("rho");
    auto p = R.product(rho, rho);
    EXPECT_EQ(p.size(), 5u);
    for (auto [k, m] : p) EXPECT_EQ(m, 1);
}

TEST(Fusion, GenMPRankAndDims) {
    for (int64_t n : {3, 5, 7, 9, 15}) {
        auto R = gen_mp_fusion_ring(FinAbGroup({n}));
        EXPECT_EQ(R.rank(), size_t((n + 7) / 2));
        auto rep = check_fusion_ring(R);
        EXPECT_TRUE(rep.ok());
        ASSERT_TRUE(rep.global_dim_exact.has_value());
        EXPECT_EQ(*rep.global_dim_exact, 4 * n);
    }
}

TEST(Fusion, GenTYConsistent) {
    for (int64_t n : {3, 5}) {
        auto R = gen_ty_fusion_ring(FinAbGroup({n}));
        EXPECT_TRUE(check_fusion_ring(R).ok()) << n;
    }
}

TEST(Fusion, BrokenRingDetected) {
    auto R = ty_fusion_ring(FinAbGroup({3}));
    size_t rho = R.index_of("rho");
    R.at(rho, rho, 0) = 2;
    EXPECT_FALSE(check_fusion_ring(R).ok());
}

TEST(Fusion, SameRulesWithRenaming) {
    auto a = gen_mp_fusion_ring(FinAbGroup({5}));
    auto b = a;
    b.labels[2] = "X";
    EXPECT_FALSE(same_fusion_rules(a, b));
    EXPECT_TRUE(same_fusion_rules(a, b, {{a.labels[2], "X"}}));
}

TEST(Hypergroup, TYHypergroupAxioms) {
    for (int64_t n : {1, 3, 4, 5, 9}) {
        FinAbGroup G = n == 1 ? FinAbGroup() : FinAbGroup({n});
        auto H = ty_hypergroup(G);
        EXPECT_TRUE(check_hypergroup(H).ok()) << n;
        size_t tau = H.index_of("tau");
        for (size_t g = 0; g < size_t(n); ++g) EXPECT_EQ(H(tau, tau, g), Rational(1, n));
    }
}

TEST(Hypergroup, NormalizedFusionMatchesBuilder) {
    FinAbGroup G({5});
    auto R = ty_fusion_ring(G);
    std::vector<int64_t> d2(R.rank(), 1);
    d2.back() = 5;
    auto H = hypergroup_from_fusion(R, d2);
    auto K = ty_hypergroup(G);
    ASSERT_EQ(H.rank(), K.rank());
    EXPECT_EQ(H.lambda, K.lambda);
}

TEST(Hypergroup, DualAndTable) {
    for (auto f : {std::vector<int64_t>{3}, {7}, {3, 3}}) {
        auto D = ty_dual_hypergroup_and_table(FinAbGroup(f));
        EXPECT_TRUE(check_hypergroup(D.dual).ok());
        auto rep = check_char_table(D);
        EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
    }
    EXPECT_THROW(ty_dual_hypergroup_and_table(FinAbGroup({4})), Unsupported);
}
