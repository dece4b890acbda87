#include <gtest/gtest.h>

#include <set>

#include "tycat/abgroup.hpp"
#include "tycat/error.hpp"

using namespace tycat;

TEST(Smith, ReconstructsAndDiagonalizes) {
    IntMatrix M{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto sf = smith_normal_form(M);
    EXPECT_EQ(sf.U * M * sf.V, sf.D);
    EXPECT_EQ(sf.D(0, 0), 2);
    EXPECT_EQ(sf.D(1, 1), 6);
    EXPECT_EQ(sf.D(2, 2), 12);
}

TEST(FinAbGroup, CyclicProductsNormalize) {
    EXPECT_EQ(group_from_cyclic({3, 5}).target.factors(), (std::vector<int64_t>{15}));
    EXPECT_EQ(group_from_cyclic({6, 4}).target.factors(), (std::vector<int64_t>{2, 12}));
    EXPECT_EQ(group_from_cyclic({3, 3}).target.factors(), (std::vector<int64_t>{3, 3}));
}

TEST(FinAbGroup, CyclicIsoIsHomomorphismAndBijective) {
    auto iso = group_from_cyclic({3, 5});
    const auto& G = iso.target;
    std::set<int64_t> seen;
    for (int64_t a = 0; a < 3; ++a)
        for (int64_t b = 0; b < 5; ++b) {
            seen.insert(G.index(iso.apply({a, b})));
            EXPECT_EQ(G.add(iso.apply({a, 0}), iso.apply({0, b})), iso.apply({a, b}));
        }
    EXPECT_EQ(seen.size(), 15u);
}

TEST(FinAbGroup, IndexRoundTripAndOrders) {
    FinAbGroup G({3, 9});
    EXPECT_EQ(G.order(), 27);
    EXPECT_EQ(G.exponent(), 9);
    for (int64_t i = 0; i < G.order(); ++i) EXPECT_EQ(G.index(G.element(i)), i);
    EXPECT_EQ(G.elem_order({1, 3}), 3);
    EXPECT_EQ(G.elem_order({0, 1}), 9);
    EXPECT_THROW(FinAbGroup({3, 4}), InvalidArgument);
}

TEST(PositiveSet, SplitsNonzeroElementsIntoPairs) {
    for (int64_t n : {1, 3, 5, 15}) {
        FinAbGroup G = n == 1 ? FinAbGroup() : FinAbGroup({n});
        auto ps = positive_set(G);
        EXPECT_EQ(int64_t(ps.positive.size()), (n - 1) / 2);
        for (auto h : ps.positive) EXPECT_FALSE(ps.is_positive[G.index(G.neg(G.element(h)))]);
    }
}

TEST(Subgroups, CountsMatchKnownValues) {
    // Z3xZ3 has 1 + 4 + 1 subgroups; Z9 has 3
    EXPECT_EQ(all_subgroups(FinAbGroup({3, 3})).size(), 6u);
    EXPECT_EQ(all_subgroups(FinAbGroup({9})).size(), 3u);
    EXPECT_EQ(all_subgroups(FinAbGroup({15})).size(), 4u);
}

TEST(Automorphisms, CountForSmallGroups) {
    EXPECT_EQ(aut_group_enumerate(FinAbGroup({5})).size(), 4u);
    EXPECT_EQ(aut_group_enumerate(FinAbGroup({3, 3})).size(), 48u);  // |GL(2,3)|
}
