#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tycat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);
int64_t mod64(int64_t a, int64_t m);
int64_t euler_phi(int64_t n);

// e^{2 pi i num/den}, stored with 0 <= num < den, gcd = 1.
class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(int64_t num, int64_t den);
    static RootOfUnity one() { return {}; }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }
    Rational exponent() const { return Rational(num_, den_); }

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity inv() const { return RootOfUnity(-num_, den_); }
    RootOfUnity conj() const { return inv(); }
    RootOfUnity pow(int64_t k) const;
    bool operator==(const RootOfUnity& o) const = default;
    auto operator<=>(const RootOfUnity& o) const = default;

    std::complex<double> to_complex() const;
    std::string str() const;

private:
    int64_t num_ = 0;
    int64_t den_ = 1;
};

RootOfUnity sqrt_root_of_unity(const RootOfUnity& z);

class CycNum {
public:
    CycNum() = default;                    // zero at conductor 1
    CycNum(int64_t v);                     // NOLINT: rationals embed implicitly
    CycNum(const Rational& v);             // NOLINT
    static CycNum zeta(int64_t conductor, int64_t k);
    static CycNum from_root(const RootOfUnity& z);
    // coefficients over zeta_N^0..zeta_N^{phi-1}; reduced on construction
    static CycNum from_coeffs(int64_t conductor, const std::vector<Rational>& c);

    int64_t conductor() const { return N_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()
    std::vector<Rational> coeffs() const;  // dense, length phi(N)
    const std::vector<std::pair<int, BigInt>>& terms() const { return terms_; }
    const BigInt& denom() const { return den_; }

    CycNum promote(int64_t M) const;

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator/(const CycNum& o) const;
    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
    CycNum conj() const;
    CycNum galois(int64_t j) const;  // zeta -> zeta^j, gcd(j,N) = 1
    CycNum inv() const;
    CycNum pow(int64_t k) const;

    // equality is conductor independent
    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;
    // exact sign of a real element (throws if not real)
    int sign() const;
    bool is_real() const { return conj() == *this; }
    // returns the exponent if this is a root of unity
    bool as_root_of_unity(RootOfUnity& out) const;

    std::string str() const;
    std::string key() const;  // canonical string at this conductor

    // internal: build from raw integer numerators on exponents mod N (not reduced)
    static CycNum from_raw(int64_t N, const std::vector<BigInt>& num_by_exp, const BigInt& den);

private:
    int64_t N_ = 1;
    std::vector<std::pair<int, BigInt>> terms_;  // sorted by exponent, nonzero
    BigInt den_ = 1;

    void normalize();
    friend class CycMatrix;
};

CycNum cyc_make(int64_t conductor, int64_t k);
CycNum sqrt_int(int64_t n);
std::complex<double> cyc_to_complex(const CycNum& a);

// cached x^k mod Phi_N for 0 <= k < N
const std::vector<std::vector<std::pair<int, int64_t>>>& reduction_table(int64_t N);

// square matrix of CycNums at one conductor
class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(size_t n, int64_t conductor);
    static CycMatrix identity(size_t n, int64_t conductor);

    size_t size() const { return n_; }
    int64_t conductor() const { return N_; }
    const CycNum& operator()(size_t i, size_t j) const { return a_[i * n_ + j]; }
    void set(size_t i, size_t j, const CycNum& v);

    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix conj() const;
    CycMatrix transpose() const;
    CycMatrix scaled(const CycNum& s) const;
    // diag(d) * M and M * diag(d)
    CycMatrix left_diag(const std::vector<CycNum>& d) const;
    CycMatrix right_diag(const std::vector<CycNum>& d) const;
    bool operator==(const CycMatrix& o) const;
    bool is_symmetric() const;
    bool is_identity() const;
    std::vector<std::complex<double>> to_complex() const;

private:
    size_t n_ = 0;
    int64_t N_ = 1;
    std::vector<CycNum> a_;
};

}  // namespace tycat
