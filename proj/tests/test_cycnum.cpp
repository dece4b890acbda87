#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "tycat/cycnum.hpp"
#include "tycat/error.hpp"

using namespace tycat;

namespace {
std::complex<double> cis(double r) { return std::polar(1.0, 2 * std::numbers::pi * r); }
}

TEST(CycNum, ZetaPowersReduceToOne) {
    for (int64_t N : {1, 2, 3, 4, 5, 8, 12, 15, 48}) {
        CycNum z = CycNum::zeta(N, 1);
        EXPECT_EQ(z.pow(N), CycNum(1)) << "N=" << N;
    }
}

TEST(CycNum, SumOfAllRootsVanishes) {
    for (int64_t N : {2, 3, 6, 9, 12, 30}) {
        CycNum s;
        for (int64_t k = 0; k < N; ++k) s += CycNum::zeta(N, k);
        EXPECT_TRUE(s.is_zero()) << "N=" << N;
    }
}

TEST(CycNum, ArithmeticMatchesComplexFloats) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-5, 5), k(0, 47);
    for (int trial = 0; trial < 200; ++trial) {
        CycNum a, b;
        std::complex<double> fa = 0, fb = 0;
        for (int t = 0; t < 4; ++t) {
            int ca = c(rng), ka = k(rng), cb = c(rng), kb = k(rng);
            a += CycNum(ca) * CycNum::zeta(48, ka);
            b += CycNum(cb) * CycNum::zeta(48, kb);
            fa += double(ca) * cis(ka / 48.0);
            fb += double(cb) * cis(kb / 48.0);
        }
        EXPECT_LT(std::abs((a * b).to_complex() - fa * fb), 1e-9);
        EXPECT_LT(std::abs((a + b).to_complex() - (fa + fb)), 1e-9);
        EXPECT_LT(std::abs(a.conj().to_complex() - std::conj(fa)), 1e-9);
        if (!a.is_zero()) EXPECT_EQ(a * a.inv(), CycNum(1));
    }
}

TEST(CycNum, SqrtIntSquares) {
    for (int64_t n : {1, 2, 3, 5, 7, 8, 9, 12, 15, 45}) {
        CycNum r = sqrt_int(n);
        EXPECT_EQ(r * r, CycNum(n)) << n;
        EXPECT_GT(r.sign(), 0);
        EXPECT_NEAR(r.to_complex().real(), std::sqrt(double(n)), 1e-12);
    }
}

TEST(CycNum, EqualityAcrossConductors) {
    EXPECT_EQ(CycNum::zeta(3, 1), CycNum::zeta(6, 2));
    EXPECT_EQ(CycNum::zeta(4, 1).promote(24), CycNum::zeta(8, 2));
    EXPECT_NE(CycNum::zeta(3, 1), CycNum::zeta(3, 2));
}

TEST(CycNum, RootOfUnityRecognition) {
    RootOfUnity z;
    EXPECT_TRUE((-CycNum::zeta(5, 2)).as_root_of_unity(z));
    EXPECT_EQ(z, RootOfUnity(9, 10));
    EXPECT_FALSE((CycNum(1) + CycNum::zeta(5, 1)).as_root_of_unity(z));
    EXPECT_FALSE(CycNum(2).as_root_of_unity(z));
}

TEST(CycNum, SignOfRealNumbers) {
    CycNum s2 = sqrt_int(2);
    EXPECT_EQ((s2 - CycNum(Rational(141421, 100000))).sign(), 1);
    EXPECT_EQ((s2 - CycNum(Rational(141422, 100000))).sign(), -1);
    EXPECT_EQ(CycNum(0).sign(), 0);
}

TEST(CycNum, GaloisConjugationIsFieldAutomorphism) {
    CycNum a = CycNum(1) + CycNum(2) * CycNum::zeta(15, 4);
    CycNum b = CycNum(Rational(1, 3)) - CycNum::zeta(15, 7);
    for (int64_t j : {1, 2, 4, 7, 8, 11, 13, 14})
        EXPECT_EQ((a * b).galois(j), a.galois(j) * b.galois(j)) << j;
    EXPECT_THROW(a.galois(3), InvalidArgument);
}

TEST(CycNum, DivisionByZeroThrows) { EXPECT_THROW(CycNum(0).inv(), ArithmeticError); }

TEST(CycMatrix, ProductMatchesFloat) {
    CycMatrix A(3, 12), B(3, 12);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            A.set(i, j, CycNum::zeta(12, int64_t(i * 3 + j)) + CycNum(int64_t(i)));
            B.set(i, j, CycNum::zeta(4, int64_t(i + 2 * j)));
        }
    auto C = A * B;
    auto fa = A.to_complex(), fb = B.to_complex(), fc = C.to_complex();
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            std::complex<double> s = 0;
            for (size_t k = 0; k < 3; ++k) s += fa[i * 3 + k] * fb[k * 3 + j];
            EXPECT_LT(std::abs(s - fc[i * 3 + j]), 1e-9);
        }
}
