#include <gtest/gtest.h>

#include "tycat/error.hpp"
#include "tycat/lattice.hpp"

using namespace tycat;

TEST(Lattice, NamedLatticeDeterminants) {
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(named_lattice("A" + std::to_string(n)).det(), n + 1);
    EXPECT_EQ(named_lattice("E6").det(), 3);
    EXPECT_EQ(named_lattice("E7").det(), 2);
    EXPECT_EQ(named_lattice("E8").det(), 1);
    EXPECT_THROW(named_lattice("D4x"), InvalidArgument);
}

TEST(Lattice, RejectsOddGram) { EXPECT_THROW(EvenLattice(IntMatrix{{1, 0}, {0, 2}}), InvalidArgument); }

TEST(Lattice, DiscriminantOfA2) {
    auto D = discriminant_form(named_lattice("A2"));
    EXPECT_EQ(D.group.factors(), (std::vector<int64_t>{3}));
    EXPECT_EQ(D.q.at(1), RootOfUnity(1, 3));
    EXPECT_EQ(D.q.at(2), RootOfUnity(1, 3));
    EXPECT_EQ(gauss_central_charge(D.q), 2);
}

TEST(Lattice, DiscriminantOfSumIsSumOfDiscriminants) {
    auto L = orthogonal_sum(named_lattice("A2"), named_lattice("A4"));
    auto D = discriminant_form(L);
    EXPECT_EQ(D.group.order(), 15);
    EXPECT_EQ(gauss_central_charge(D.q), 6);
}

TEST(Lattice, RootCounts) {
    EXPECT_EQ(count_roots(named_lattice("A1")), 2);
    EXPECT_EQ(count_roots(named_lattice("A4")), 20);
    EXPECT_EQ(count_roots(named_lattice("E6")), 72);
    EXPECT_EQ(count_roots(named_lattice("E7")), 126);
    EXPECT_EQ(count_roots(named_lattice("E8")), 240);
}

TEST(Lattice, GlueA1E7ToUnimodular) {
    auto L = orthogonal_sum(named_lattice("A1"), named_lattice("E7"));
    auto M = glue(L, {{1, 1}});
    EXPECT_EQ(M.det(), 1);
    EXPECT_EQ(M.rank(), 8u);
    EXPECT_EQ(count_roots(M), 240);
}

TEST(Lattice, GlueRejectsNonIsotropic) {
    auto L = orthogonal_sum(named_lattice("A2"), named_lattice("E6"));
    // (1,0) has norm 2/3 mod 2
    EXPECT_THROW(glue(L, {{1, 0}}), InvalidArgument);
}

TEST(Lattice, NormOfDualVector) {
    auto L = named_lattice("A1");
    EXPECT_EQ(norm(L, {Rational(1, 2)}), Rational(1, 2));
}
