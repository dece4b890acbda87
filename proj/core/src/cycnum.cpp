#include "tycat/cycnum.hpp"

#include <numeric>
#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "tycat/error.hpp"

namespace tycat {

namespace {

using Table = std::vector<std::vector<std::pair<int, int64_t>>>;

struct FieldData {
    int64_t phi;
    Table table;
    int64_t max_coeff;
};

std::vector<int64_t> poly_div_exact(std::vector<int64_t> num, const std::vector<int64_t>& den) {
    // den monic, low-to-high coefficients
    size_t dn = den.size() - 1;
    std::vector<int64_t> q(num.size() - dn, 0);
    for (size_t i = num.size(); i-- > dn;) {
        int64_t c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

std::map<int64_t, std::vector<int64_t>>& cyclo_cache() {
    static std::map<int64_t, std::vector<int64_t>> c;
    return c;
}

// caller holds the lock
const std::vector<int64_t>& cyclotomic_poly(int64_t n) {
    auto& cache = cyclo_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<int64_t> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int64_t d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div_exact(p, cyclotomic_poly(d));
    return cache.emplace(n, std::move(p)).first->second;
}

std::mutex& field_mutex() {
    static std::mutex m;
    return m;
}

const FieldData& field(int64_t N) {
    static std::map<int64_t, std::unique_ptr<FieldData>> cache;
    std::lock_guard<std::mutex> lock(field_mutex());
    auto it = cache.find(N);
    if (it != cache.end()) return *it->second;
    if (N > 100000) throw CapacityError("conductor " + std::to_string(N) + " exceeds 100000");
    const auto& phi_poly = cyclotomic_poly(N);
    int64_t phi = static_cast<int64_t>(phi_poly.size()) - 1;
    auto fd = std::make_unique<FieldData>();
    fd->phi = phi;
    fd->table.resize(N);
    fd->max_coeff = 1;
    std::vector<int64_t> cur(phi, 0);
    for (int64_t k = 0; k < N; ++k) {
        if (k < phi) {
            std::fill(cur.begin(), cur.end(), 0);
            cur[k] = 1;
        } else {
            // cur = x * cur mod Phi
            int64_t top = cur[phi - 1];
            for (int64_t j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            if (top != 0)
                for (int64_t j = 0; j < phi; ++j) {
                    int64_t t;
                    if (__builtin_mul_overflow(top, phi_poly[j], &t) ||
                        __builtin_sub_overflow(cur[j], t, &cur[j]))
                        throw CapacityError("reduction table overflow at conductor " + std::to_string(N));
                }
        }
        auto& row = fd->table[k];
        for (int64_t j = 0; j < phi; ++j)
            if (cur[j] != 0) {
                row.emplace_back(static_cast<int>(j), cur[j]);
                fd->max_coeff = std::max<int64_t>(fd->max_coeff, std::llabs(cur[j]));
            }
    }
    return *cache.emplace(N, std::move(fd)).first->second;
}

BigInt from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<uint64_t>(u);
    return neg ? BigInt(-r) : r;
}

bool fits(const BigInt& v, int bits) { return msb(abs(v) + 1) < static_cast<unsigned>(bits); }

}  // namespace

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }
int64_t lcm64(int64_t a, int64_t b) { return std::lcm(a, b); }
int64_t mod64(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}
int64_t euler_phi(int64_t n) {
    int64_t r = n;
    for (int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

const Table& reduction_table(int64_t N) { return field(N).table; }

// ---------------- RootOfUnity

RootOfUnity::RootOfUnity(int64_t num, int64_t den) {
    if (den <= 0) throw InvalidArgument("root of unity denominator must be positive");
    num = mod64(num, den);
    int64_t g = std::gcd(num, den);
    if (g == 0) g = den;
    num_ = num / g;
    den_ = den / g;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    int64_t d = std::lcm(den_, o.den_);
    return RootOfUnity(num_ * (d / den_) + o.num_ * (d / o.den_), d);
}

RootOfUnity RootOfUnity::pow(int64_t k) const {
    return RootOfUnity(static_cast<int64_t>((static_cast<__int128>(num_) * k) % den_), den_);
}

std::complex<double> RootOfUnity::to_complex() const {
    double a = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    return {std::cos(a), std::sin(a)};
}

std::string RootOfUnity::str() const {
    if (num_ == 0) return "0";
    return std::to_string(num_) + "/" + std::to_string(den_);
}

RootOfUnity sqrt_root_of_unity(const RootOfUnity& z) { return RootOfUnity(z.num(), 2 * z.den()); }

// ---------------- CycNum

CycNum::CycNum(int64_t v) {
    if (v != 0) terms_.emplace_back(0, BigInt(v));
}

CycNum::CycNum(const Rational& v) {
    if (v != 0) {
        terms_.emplace_back(0, numerator(v));
        den_ = denominator(v);
    }
}

CycNum CycNum::zeta(int64_t N, int64_t k) {
    if (N < 1) throw InvalidArgument("conductor must be >= 1");
    k = mod64(k, N);
    const auto& fd = field(N);
    CycNum r;
    r.N_ = N;
    for (auto [j, c] : fd.table[k]) r.terms_.emplace_back(j, BigInt(c));
    return r;
}

CycNum cyc_make(int64_t conductor, int64_t k) { return CycNum::zeta(conductor, k); }

CycNum CycNum::from_root(const RootOfUnity& z) { return zeta(z.den(), z.num()); }

CycNum CycNum::from_coeffs(int64_t N, const std::vector<Rational>& c) {
    if (N < 1) throw InvalidArgument("conductor must be >= 1");
    BigInt L = 1;
    for (const auto& x : c) L = boost::multiprecision::lcm(L, denominator(x));
    std::vector<BigInt> raw(N);
    for (size_t k = 0; k < c.size(); ++k) raw[k % N] += numerator(c[k]) * (L / denominator(c[k]));
    return from_raw(N, raw, L);
}

CycNum CycNum::from_raw(int64_t N, const std::vector<BigInt>& num, const BigInt& den) {
    const auto& fd = field(N);
    std::vector<BigInt> acc(fd.phi);
    for (int64_t k = 0; k < N && k < static_cast<int64_t>(num.size()); ++k) {
        if (num[k] == 0) continue;
        if (k < fd.phi) {
            acc[k] += num[k];
        } else {
            for (auto [j, c] : fd.table[k]) acc[j] += num[k] * c;
        }
    }
    CycNum r;
    r.N_ = N;
    r.den_ = den;
    for (int64_t j = 0; j < fd.phi; ++j)
        if (acc[j] != 0) r.terms_.emplace_back(static_cast<int>(j), std::move(acc[j]));
    r.normalize();
    return r;
}

void CycNum::normalize() {
    if (den_ == 0) throw ArithmeticError("zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        for (auto& t : terms_) t.second = -t.second;
    }
    if (terms_.empty()) {
        den_ = 1;
        return;
    }
    BigInt g = den_;
    for (const auto& t : terms_) {
        g = boost::multiprecision::gcd(g, t.second);
        if (g == 1) return;
    }
    den_ /= g;
    for (auto& t : terms_) t.second /= g;
}

bool CycNum::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

Rational CycNum::rational_value() const {
    if (!is_rational()) throw InvalidArgument("value is not rational: " + str());
    if (terms_.empty()) return 0;
    return Rational(terms_[0].second, den_);
}

std::vector<Rational> CycNum::coeffs() const {
    std::vector<Rational> c(field(N_).phi, Rational(0));
    for (const auto& [k, v] : terms_) c[k] = Rational(v, den_);
    return c;
}

CycNum CycNum::promote(int64_t M) const {
    if (M == N_) return *this;
    if (M % N_ != 0) throw InvalidArgument("cannot promote conductor " + std::to_string(N_) + " to " + std::to_string(M));
    if (terms_.empty()) {
        CycNum z;
        z.N_ = M;
        return z;
    }
    int64_t f = M / N_;
    std::vector<BigInt> raw(M);
    for (const auto& [k, v] : terms_) raw[k * f] += v;
    return from_raw(M, raw, den_);
}

CycNum CycNum::operator+(const CycNum& o) const {
    if (o.terms_.empty() && o.N_ <= N_ && N_ % o.N_ == 0) return *this;
    int64_t M = std::lcm(N_, o.N_);
    if (N_ != M || o.N_ != M) return promote(M) + o.promote(M);
    CycNum r;
    r.N_ = M;
    r.den_ = den_ * o.den_ / boost::multiprecision::gcd(den_, o.den_);
    BigInt fa = r.den_ / den_, fb = r.den_ / o.den_;
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            r.terms_.emplace_back(terms_[i].first, terms_[i].second * fa);
            ++i;
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            r.terms_.emplace_back(o.terms_[j].first, o.terms_[j].second * fb);
            ++j;
        } else {
            BigInt s = terms_[i].second * fa + o.terms_[j].second * fb;
            if (s != 0) r.terms_.emplace_back(terms_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    r.normalize();
    return r;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator*(const CycNum& o) const {
    int64_t M = std::lcm(N_, o.N_);
    if (terms_.empty() || o.terms_.empty()) {
        CycNum z;
        z.N_ = M;
        return z;
    }
    if (is_rational() && o.N_ == M) {
        CycNum r = o;
        for (auto& t : r.terms_) t.second *= terms_[0].second;
        r.den_ *= den_;
        r.normalize();
        return r;
    }
    if (o.is_rational() && N_ == M) return o * *this;
    if (N_ != M || o.N_ != M) return promote(M) * o.promote(M);
    const auto& fd = field(M);
    bool fast = fd.max_coeff < (int64_t{1} << 16);
    for (const auto& t : terms_) fast = fast && fits(t.second, 40);
    for (const auto& t : o.terms_) fast = fast && fits(t.second, 40);
    if (fast) {
        std::vector<__int128> acc(M, 0);
        for (const auto& [a, x] : terms_) {
            int64_t xv = static_cast<int64_t>(x);
            for (const auto& [b, y] : o.terms_) {
                int64_t k = a + b;
                if (k >= M) k -= M;
                acc[k] += static_cast<__int128>(xv) * static_cast<int64_t>(y);
            }
        }
        std::vector<__int128> red(fd.phi, 0);
        for (int64_t k = 0; k < M; ++k) {
            if (acc[k] == 0) continue;
            if (k < fd.phi)
                red[k] += acc[k];
            else
                for (auto [j, c] : fd.table[k]) red[j] += acc[k] * c;
        }
        CycNum r;
        r.N_ = M;
        r.den_ = den_ * o.den_;
        for (int64_t j = 0; j < fd.phi; ++j)
            if (red[j] != 0) r.terms_.emplace_back(static_cast<int>(j), from_i128(red[j]));
        r.normalize();
        return r;
    }
    std::vector<BigInt> raw(M);
    for (const auto& [a, x] : terms_)
        for (const auto& [b, y] : o.terms_) raw[(a + b) % M] += x * y;
    return from_raw(M, raw, den_ * o.den_);
}

CycNum CycNum::galois(int64_t j) const {
    j = mod64(j, N_);
    if (std::gcd(j, N_) != 1) throw InvalidArgument("galois exponent not coprime to conductor");
    if (terms_.empty() || N_ <= 2) return *this;
    std::vector<BigInt> raw(N_);
    for (const auto& [k, v] : terms_) raw[(k * j) % N_] += v;
    return from_raw(N_, raw, den_);
}

CycNum CycNum::conj() const { return galois(N_ - 1); }

CycNum CycNum::inv() const {
    if (terms_.empty()) throw ArithmeticError("division by zero");
    if (is_rational()) return CycNum(Rational(den_) / Rational(terms_[0].second));
    CycNum c = conj();
    CycNum p = *this * c;
    if (p.is_rational()) return c * CycNum(1 / p.rational_value());
    CycNum sq = *this * *this;
    if (sq.is_rational()) return *this * CycNum(1 / sq.rational_value());
    // product of the other Galois conjugates over the norm
    CycNum prod(1);
    for (int64_t j = 2; j < N_; ++j)
        if (std::gcd(j, N_) == 1) prod = prod * galois(j);
    CycNum norm = *this * prod;
    if (!norm.is_rational()) throw ArithmeticError("norm is not rational; internal error");
    return prod * CycNum(1 / norm.rational_value());
}

CycNum CycNum::operator/(const CycNum& o) const {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    return *this * o.inv();
}

CycNum CycNum::pow(int64_t k) const {
    if (k < 0) return inv().pow(-k);
    CycNum r(1), b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r.N_ == N_ ? r : r.promote(N_);
}

bool CycNum::operator==(const CycNum& o) const {
    if (N_ == o.N_) return den_ == o.den_ && terms_ == o.terms_;
    if (terms_.empty() || o.terms_.empty()) return terms_.empty() && o.terms_.empty();
    if (is_rational() && o.is_rational()) return den_ == o.den_ && terms_[0].second == o.terms_[0].second;
    int64_t M = std::lcm(N_, o.N_);
    return promote(M) == o.promote(M);
}

std::complex<double> CycNum::to_complex() const {
    std::complex<double> s = 0;
    for (const auto& [k, v] : terms_) {
        double a = 2.0 * std::numbers::pi * k / static_cast<double>(N_);
        s += v.convert_to<double>() * std::complex<double>(std::cos(a), std::sin(a));
    }
    return s / den_.convert_to<double>();
}

std::complex<double> cyc_to_complex(const CycNum& a) { return a.to_complex(); }

int CycNum::sign() const {
    if (terms_.empty()) return 0;
    if (!is_real()) throw InvalidArgument("sign of a non-real value: " + str());
    double v = 0, mag = 0;
    double d = den_.convert_to<double>();
    for (const auto& [k, c] : terms_) {
        double x = c.convert_to<double>() / d;
        v += x * std::cos(2.0 * std::numbers::pi * k / static_cast<double>(N_));
        mag += std::fabs(x);
    }
    double bound = 64.0 * (terms_.size() + 2) * 1.2e-16 * mag + 1e-300;
    if (std::fabs(v) > bound) return v > 0 ? 1 : -1;
    using boost::multiprecision::cpp_bin_float_100;
    cpp_bin_float_100 hv = 0, hm = 0;
    cpp_bin_float_100 twopi = boost::math::constants::two_pi<cpp_bin_float_100>();
    for (const auto& [k, c] : terms_) {
        cpp_bin_float_100 x = cpp_bin_float_100(c) / cpp_bin_float_100(den_);
        hv += x * cos(twopi * k / N_);
        hm += abs(x);
    }
    cpp_bin_float_100 hb = hm * cpp_bin_float_100("1e-90") * (terms_.size() + 2);
    if (abs(hv) > hb) return hv > 0 ? 1 : -1;
    throw ArithmeticError("sign undecidable at 100 digits for " + str());
}

bool CycNum::as_root_of_unity(RootOfUnity& out) const {
    if (terms_.empty()) return false;
    auto z = to_complex();
    if (std::fabs(std::abs(z) - 1.0) > 1e-6) return false;
    int64_t M = N_ % 2 == 0 ? N_ : 2 * N_;
    double a = std::arg(z) / (2.0 * std::numbers::pi) * M;
    int64_t k = mod64(static_cast<int64_t>(std::llround(a)), M);
    if (zeta(M, k) == *this) {
        out = RootOfUnity(k, M);
        return true;
    }
    for (int64_t j = 0; j < M; ++j)
        if (zeta(M, j) == *this) {
            out = RootOfUnity(j, M);
            return true;
        }
    return false;
}

std::string CycNum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        Rational c(v, den_);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (k == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "E(" << N_ << ")";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

std::string CycNum::key() const {
    std::ostringstream os;
    os << N_ << ':' << den_;
    for (const auto& [k, v] : terms_) os << ';' << k << ',' << v;
    return os.str();
}

namespace {

int64_t powmod(int64_t b, int64_t e, int64_t m) {
    __int128 r = 1, x = mod64(b, m);
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<int64_t>(r);
}

CycNum sqrt_prime(int64_t p) {
    if (p == 2) return CycNum::zeta(8, 1) + CycNum::zeta(8, 7);
    CycNum g;
    for (int64_t a = 1; a < p; ++a) {
        int64_t ls = powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
        g += CycNum(ls) * CycNum::zeta(p, a);
    }
    if (p % 4 == 1) return g;
    return CycNum::zeta(4, 3) * g;  // -i * g
}

}  // namespace

CycNum sqrt_int(int64_t n) {
    if (n < 1) throw InvalidArgument("sqrt_int needs n >= 1");
    int64_t m = 1, rest = n;
    CycNum r(1);
    for (int64_t p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            m *= p;
        }
        if (rest % p == 0) {
            rest /= p;
            r = r * sqrt_prime(p);
        }
    }
    if (rest > 1) r = r * sqrt_prime(rest);
    r = r * CycNum(m);
    return r.promote(4 * n);
}

// ---------------- CycMatrix

CycMatrix::CycMatrix(size_t n, int64_t conductor) : n_(n), N_(conductor), a_(n * n) {
    for (auto& x : a_) x.N_ = conductor;
}

CycMatrix CycMatrix::identity(size_t n, int64_t conductor) {
    CycMatrix m(n, conductor);
    for (size_t i = 0; i < n; ++i) m.a_[i * n + i] = CycNum(1).promote(conductor);
    return m;
}

void CycMatrix::set(size_t i, size_t j, const CycNum& v) {
    if (N_ % v.conductor() != 0) throw InvalidArgument("entry conductor does not divide matrix conductor");
    a_[i * n_ + j] = v.promote(N_);
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (n_ != o.n_) throw InvalidArgument("matrix size mismatch");
    int64_t M = std::lcm(N_, o.N_);
    if (N_ != M || o.N_ != M) {
        CycMatrix a(n_, M), b(n_, M);
        for (size_t i = 0; i < n_ * n_; ++i) {
            a.a_[i] = a_[i].promote(M);
            b.a_[i] = o.a_[i].promote(M);
        }
        return a * b;
    }
    const auto& fd = field(M);
    size_t n = n_;
    CycMatrix r(n, M);
    // common denominators
    BigInt La = 1, Lb = 1;
    for (const auto& x : a_) La = boost::multiprecision::lcm(La, x.den_);
    for (const auto& x : o.a_) Lb = boost::multiprecision::lcm(Lb, x.den_);
    struct SparseEntry {
        std::vector<int> e;
        std::vector<int64_t> c;
    };
    bool fast = fd.max_coeff < (int64_t{1} << 16);
    auto convert = [&](const std::vector<CycNum>& src, const BigInt& L, std::vector<SparseEntry>& dst) {
        dst.resize(src.size());
        for (size_t i = 0; i < src.size() && fast; ++i) {
            BigInt f = L / src[i].den_;
            for (const auto& [k, v] : src[i].terms_) {
                BigInt s = v * f;
                if (!fits(s, 40)) {
                    fast = false;
                    break;
                }
                dst[i].e.push_back(k);
                dst[i].c.push_back(static_cast<int64_t>(s));
            }
        }
    };
    std::vector<SparseEntry> A, B;
    convert(a_, La, A);
    convert(o.a_, Lb, B);
    if (!fast) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                CycNum s;
                for (size_t k = 0; k < n; ++k)
                    if (!a_[i * n + k].is_zero() && !o.a_[k * n + j].is_zero()) s += a_[i * n + k] * o.a_[k * n + j];
                r.a_[i * n + j] = s.promote(M);
            }
        return r;
    }
    BigInt den = La * Lb;
    std::vector<__int128> acc(M, 0), red(fd.phi, 0);
    std::vector<std::vector<size_t>> rownz(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (!A[i * n + k].e.empty()) rownz[i].push_back(k);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            bool any = false;
            for (size_t k : rownz[i]) {
                const auto& x = A[i * n + k];
                const auto& y = B[k * n + j];
                if (y.e.empty()) continue;
                any = true;
                for (size_t p = 0; p < x.e.size(); ++p)
                    for (size_t q = 0; q < y.e.size(); ++q) {
                        int64_t e = x.e[p] + y.e[q];
                        if (e >= M) e -= M;
                        acc[e] += static_cast<__int128>(x.c[p]) * y.c[q];
                    }
            }
            if (!any) continue;
            for (int64_t e = 0; e < M; ++e) {
                if (acc[e] == 0) continue;
                if (e < fd.phi)
                    red[e] += acc[e];
                else
                    for (auto [t, c] : fd.table[e]) red[t] += acc[e] * c;
                acc[e] = 0;
            }
            CycNum& out = r.a_[i * n + j];
            out.terms_.clear();
            for (int64_t t = 0; t < fd.phi; ++t)
                if (red[t] != 0) {
                    out.terms_.emplace_back(static_cast<int>(t), from_i128(red[t]));
                    red[t] = 0;
                }
            out.den_ = den;
            out.normalize();
        }
    }
    return r;
}

CycMatrix CycMatrix::conj() const {
    CycMatrix r(n_, N_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].conj();
    return r;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix r(n_, N_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) r.a_[j * n_ + i] = a_[i * n_ + j];
    return r;
}

CycMatrix CycMatrix::scaled(const CycNum& s) const {
    int64_t M = std::lcm(N_, s.conductor());
    CycMatrix r(n_, M);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] * s).promote(M);
    return r;
}

CycMatrix CycMatrix::left_diag(const std::vector<CycNum>& d) const {
    int64_t M = N_;
    for (const auto& x : d) M = std::lcm(M, x.conductor());
    CycMatrix r(n_, M);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) r.a_[i * n_ + j] = (d[i] * a_[i * n_ + j]).promote(M);
    return r;
}

CycMatrix CycMatrix::right_diag(const std::vector<CycNum>& d) const {
    int64_t M = N_;
    for (const auto& x : d) M = std::lcm(M, x.conductor());
    CycMatrix r(n_, M);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) r.a_[i * n_ + j] = (a_[i * n_ + j] * d[j]).promote(M);
    return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
    if (n_ != o.n_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (!(a_[i] == o.a_[i])) return false;
    return true;
}

bool CycMatrix::is_symmetric() const {
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = i + 1; j < n_; ++j)
            if (!(a_[i * n_ + j] == a_[j * n_ + i])) return false;
    return true;
}

bool CycMatrix::is_identity() const {
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) {
            const auto& x = a_[i * n_ + j];
            if (i == j ? !(x.is_rational() && x.rational_value() == 1) : !x.is_zero()) return false;
        }
    return true;
}

std::vector<std::complex<double>> CycMatrix::to_complex() const {
    std::vector<std::complex<double>> r(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) r[i] = a_[i].to_complex();
    return r;
}

}  // namespace tycat
