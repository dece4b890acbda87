#include "tycat/moddata.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>

#include "tycat/error.hpp"

namespace tycat {

std::string Label::str() const {
    switch (kind) {
        case Kind::Pointed: return "g[" + elem_str(g) + "]";
        case Kind::TYPt: return "pt[" + elem_str(g) + ";" + std::to_string(i) + "]";
        case Kind::TYRho: return "rho[" + elem_str(g) + ";" + std::to_string(i) + "]";
        case Kind::TYSigma: return "sigma[" + elem_str(g) + "|" + elem_str(h) + "]";
        case Kind::MPUnit: return "1";
        case Kind::MPAlpha: return "alpha";
        case Kind::MPRho: return "rho" + std::to_string(i);
        case Kind::MPSigma: return "sigma[" + elem_str(g) + "]";
        case Kind::Product: return "(" + parts.at(0).str() + ")x(" + parts.at(1).str() + ")";
    }
    return "?";
}

Rational mod8(const Rational& c) {
    Rational q = c / 8;
    BigInt f = numerator(q) / denominator(q);
    if (numerator(q) < 0 && numerator(q) % denominator(q) != 0) --f;
    return c - Rational(8 * f);
}

namespace {

RootOfUnity root_of_rational(const Rational& e) {
    Rational r = e - Rational(numerator(e) / denominator(e));
    if (r < 0) r += 1;
    return RootOfUnity(static_cast<int64_t>(numerator(r)), static_cast<int64_t>(denominator(r)));
}

// e^{-pi i c/12}
CycNum central_phase(const Rational& c) { return CycNum::from_root(root_of_rational(-c / 24)); }

int64_t md_conductor(const FinAbGroup& G) {
    return std::lcm(std::lcm<int64_t>(48, 8 * G.exponent()), 4 * G.order());
}

CycNum R(const RootOfUnity& z) { return CycNum::from_root(z); }

CycNum sgn(int s) { return CycNum(s); }

}  // namespace

size_t ModularData::index_of(const std::string& name) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i].str() == name) return i;
    throw InvalidArgument("unknown label " + name);
}

std::vector<CycNum> ModularData::dims() const {
    CycNum inv0 = S(0, 0).inv();
    std::vector<CycNum> d;
    for (size_t i = 0; i < rank(); ++i) d.push_back(S(i, 0) * inv0);
    return d;
}

std::vector<CycNum> ModularData::twists() const {
    CycNum inv0 = T[0].inv();
    std::vector<CycNum> t;
    for (const auto& x : T) t.push_back(x * inv0);
    return t;
}

std::vector<size_t> ModularData::charge_conjugation() const {
    CycMatrix C = S * S;
    size_t r = rank();
    std::vector<size_t> perm(r, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            const CycNum& x = C(i, j);
            if (x.is_zero()) continue;
            if (!(x.is_rational() && x.rational_value() == 1) || perm[i] != r)
                throw ModularityViolation("S^2 is not a permutation matrix at row " + labels[i].str());
            perm[i] = j;
        }
    for (size_t i = 0; i < r; ++i)
        if (perm[i] == r || perm[perm[i]] != i) throw ModularityViolation("S^2 is not an involutive permutation");
    return perm;
}

// ---------------- constructors

ModularData pointed_md(const QuadForm& theta) {
    const auto& G = theta.group();
    if (!theta.nondegenerate()) throw InvalidArgument("pointed modular data needs a nondegenerate form");
    // S lives in Q(zeta_K) with sqrt(n) in Q(zeta_4n); T keeps its own conductor
    int64_t n = G.order(), K = 4 * n;
    for (const auto& v : theta.values()) K = std::lcm(K, v.den());
    ModularData md;
    for (int64_t i = 0; i < n; ++i) md.labels.push_back(Label{Label::Kind::Pointed, G.element(i), {}, 0, {}});
    CycNum inv_sq = sqrt_int(n).inv();
    md.S = CycMatrix(n, K);
    for (int64_t i = 0; i < n; ++i)
        for (int64_t j = i; j < n; ++j) {
            CycNum v = R(theta.dq(G.element(i), G.element(j))) * inv_sq;
            md.S.set(i, j, v);
            md.S.set(j, i, v);
        }
    md.c_top = gauss_central_charge(theta);
    CycNum ph = central_phase(md.c_top);
    for (int64_t i = 0; i < n; ++i) md.T.push_back(ph * R(theta.at(i)));
    return md;
}

ModularData pointed_md(const MetricGroup& m) { return pointed_md(m.q); }

namespace {

void require_odd_nondegenerate(const Bichar& b) {
    if (b.group().order() % 2 == 0) throw Unsupported("construction needs |G| odd");
    if (!b.nondegenerate()) throw InvalidArgument("bicharacter is degenerate");
}

struct OmegaData {
    std::vector<RootOfUnity> a, ahat, omega;
};

OmegaData omega_data(const Bichar& b, int sign) {
    const auto& G = b.group();
    int64_t n = G.order(), m = (G.exponent() + 1) / 2;
    OmegaData od;
    for (int64_t i = 0; i < n; ++i) {
        Elem g = G.element(i);
        od.a.push_back(b(g, g).pow(-m));
    }
    for (int64_t i = 0; i < n; ++i) {
        Elem g = G.element(i);
        if (!(od.a[G.index(G.neg(g))] == od.a[i])) throw ModularityViolation("a(g) != a(-g) at " + elem_str(g));
        for (int64_t j = 0; j < n; ++j) {
            Elem h = G.element(j);
            if (!(od.a[i] * od.a[j] == b(g, h) * od.a[G.index(G.add(g, h))]))
                throw ModularityViolation("a(g)a(h) != b(g,h)a(g+h) at " + elem_str(g) + ", " + elem_str(h));
        }
    }
    CycNum inv_sq = sqrt_int(n).inv();
    for (int64_t i = 0; i < n; ++i) {
        Elem g = G.element(i);
        int64_t N = 1;
        std::vector<RootOfUnity> terms;
        for (int64_t j = 0; j < n; ++j) {
            terms.push_back(b(g, G.element(j)).conj() * od.a[j]);
            N = std::lcm(N, terms.back().den());
        }
        std::vector<BigInt> raw(N);
        for (const auto& t : terms) raw[t.num() * (N / t.den())] += 1;
        CycNum v = CycNum::from_raw(N, raw, 1) * inv_sq;
        RootOfUnity z;
        if (!v.as_root_of_unity(z)) throw ModularityViolation("|a-hat(g)| != 1 at " + elem_str(g));
        od.ahat.push_back(z);
        od.omega.push_back(sqrt_root_of_unity(sign < 0 ? z * RootOfUnity(1, 2) : z));
    }
    return od;
}

}  // namespace

ModularData ty_center_md(const Bichar& b, int sign) {
    require_odd_nondegenerate(b);
    if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
    const auto& G = b.group();
    int64_t n = G.order(), K = md_conductor(G);
    OmegaData od = omega_data(b, sign);
    ModularData md;
    using K_ = Label::Kind;
    for (int64_t g = 0; g < n; ++g)
        for (int i = 0; i < 2; ++i) md.labels.push_back(Label{K_::TYPt, G.element(g), {}, i, {}});
    for (int64_t g = 0; g < n; ++g)
        for (int i = 0; i < 2; ++i) md.labels.push_back(Label{K_::TYRho, G.element(g), {}, i, {}});
    for (int64_t g = 0; g < n; ++g)
        for (int64_t h = g + 1; h < n; ++h) md.labels.push_back(Label{K_::TYSigma, G.element(g), G.element(h), 0, {}});
    size_t r = md.labels.size();
    CycNum sq = sqrt_int(n);
    CycNum scale = CycNum(Rational(1, 2 * n));
    // rho-rho sums: sum_k b(k - s, k) for each s
    std::vector<CycNum> gsum(n);
    for (int64_t s = 0; s < n; ++s) {
        Elem se = G.element(s);
        for (int64_t k = 0; k < n; ++k) {
            Elem ke = G.element(k);
            gsum[s] += R(b(G.sub(ke, se), ke));
        }
    }
    auto entry = [&](const Label& x, const Label& y) -> CycNum {
        if (x.kind == K_::TYPt && y.kind == K_::TYPt) return R(b(x.g, y.g).conj().pow(2));
        if (x.kind == K_::TYPt && y.kind == K_::TYRho) return sgn(x.i ? -1 : 1) * sq * R(b(x.g, y.g).conj());
        if (x.kind == K_::TYPt && y.kind == K_::TYSigma) return CycNum(2) * R(b(x.g, G.add(y.g, y.h)).conj());
        if (x.kind == K_::TYRho && y.kind == K_::TYRho) {
            int64_t s = G.index(G.add(x.g, y.g));
            return sgn((x.i + y.i) % 2 ? -1 : 1) * R(od.omega[G.index(x.g)] * od.omega[G.index(y.g)]) * gsum[s];
        }
        if (x.kind == K_::TYRho && y.kind == K_::TYSigma) return CycNum(0);
        // sigma-sigma, conjugated (see README conventions)
        const Elem &h1 = x.g, &k1 = x.h, &h = y.g, &k = y.h;
        return CycNum(2) * (R(b(k, h1) * b(h, k1)) + R(b(k, k1) * b(h, h1))).conj();
    };
    auto rank_of = [](K_ k) { return k == K_::TYPt ? 0 : k == K_::TYRho ? 1 : 2; };
    md.S = CycMatrix(r, K);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i; j < r; ++j) {
            const Label &x = md.labels[i], &y = md.labels[j];
            CycNum v = rank_of(x.kind) <= rank_of(y.kind) ? entry(x, y) : entry(y, x);
            v = v * scale;
            md.S.set(i, j, v);
            md.S.set(j, i, v);
        }
    for (const auto& l : md.labels) {
        CycNum t;
        if (l.kind == K_::TYPt) t = R(b(l.g, l.g));
        else if (l.kind == K_::TYRho) t = sgn(l.i ? -1 : 1) * R(od.omega[G.index(l.g)]);
        else t = R(b(l.g, l.h));
        md.T.push_back(t.promote(K));
    }
    md.c_top = 0;
    std::vector<int> grad;
    for (const auto& l : md.labels) grad.push_back(l.kind == K_::TYRho ? 1 : 0);
    md.grading = grad;
    return md;
}

ModularData mp_md(const Bichar& b, int sign) {
    require_odd_nondegenerate(b);
    if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
    const auto& G = b.group();
    int64_t n = G.order(), K = md_conductor(G);
    OmegaData od = omega_data(b, sign);
    auto ps = positive_set(G);
    using K_ = Label::Kind;
    ModularData md;
    md.labels.push_back(Label{K_::MPUnit, {}, {}, 0, {}});
    md.labels.push_back(Label{K_::MPAlpha, {}, {}, 0, {}});
    md.labels.push_back(Label{K_::MPRho, {}, {}, 0, {}});
    md.labels.push_back(Label{K_::MPRho, {}, {}, 1, {}});
    for (auto h : ps.positive) md.labels.push_back(Label{K_::MPSigma, G.element(h), {}, 0, {}});
    size_t r = md.labels.size();
    CycNum sq = sqrt_int(n);
    CycNum scale = (CycNum(2) * sq).inv();
    CycNum sumbkk;
    for (int64_t k = 0; k < n; ++k) {
        Elem ke = G.element(k);
        sumbkk += R(b(ke, ke));
    }
    CycNum rr = R(od.omega[0].pow(2)) * sumbkk;
    auto eps = [](const Label& l) { return l.kind == K_::MPAlpha || (l.kind == K_::MPRho && l.i == 1) ? 1 : 0; };
    auto grp = [](const Label& l) { return l.kind == K_::MPUnit || l.kind == K_::MPAlpha ? 0 : l.kind == K_::MPRho ? 1 : 2; };
    auto entry = [&](const Label& x, const Label& y) -> CycNum {
        int gx = grp(x), gy = grp(y);
        if (gx == 0 && gy == 0) return CycNum(1);
        if (gx == 0 && gy == 1) return sgn(eps(x) ? -1 : 1) * sq;
        if (gx == 0 && gy == 2) return CycNum(2);
        if (gx == 1 && gy == 1) return sgn((eps(x) + eps(y)) % 2 ? -1 : 1) * rr;
        if (gx == 1 && gy == 2) return CycNum(0);
        RootOfUnity bhk = b(x.g, y.g);
        return CycNum(2) * (R(bhk.conj().pow(2)) + R(bhk.pow(2)));
    };
    md.S = CycMatrix(r, K);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i; j < r; ++j) {
            CycNum v = entry(md.labels[i], md.labels[j]) * scale;
            md.S.set(i, j, v);
            md.S.set(j, i, v);
        }
    md.c_top = gauss_central_charge(qform_from_bichar(b));
    CycNum ph = central_phase(md.c_top);
    for (const auto& l : md.labels) {
        CycNum t;
        switch (grp(l)) {
            case 0: t = CycNum(1); break;
            case 1: t = sgn(l.i ? -1 : 1) * R(od.omega[0]); break;
            default: t = R(b(l.g, l.g).conj());
        }
        md.T.push_back((ph * t).promote(K));
    }
    std::vector<int> grad;
    for (const auto& l : md.labels) grad.push_back(l.kind == K_::MPRho ? 1 : 0);
    md.grading = grad;
    return md;
}

// ---------------- Verlinde and indicators

FusionRing verlinde_fusion(const ModularData& md) {
    size_t r = md.rank();
    std::vector<std::string> names;
    for (const auto& l : md.labels) names.push_back(l.str());
    FusionRing ring(names);
    ring.dual = md.charge_conjugation();
    auto Sf = md.S.to_complex();
    for (size_t l = 0; l < r; ++l)
        if (md.S(0, l).is_zero()) throw ModularityViolation("S_{0," + names[l] + "} = 0");
    // both identities below are invariant under rescaling S; S/S_00 has much sparser entries
    CycMatrix Sn = md.S.scaled(md.S(0, 0).inv());
    std::vector<CycNum> invS0(r);
    for (size_t l = 0; l < r; ++l) invS0[l] = Sn(0, l).inv();
    std::vector<int64_t> cand(r * r);
    for (size_t i = 0; i < r; ++i) {
        bool suspicious = false;
        for (size_t j = 0; j < r; ++j)
            for (size_t k = 0; k < r; ++k) {
                std::complex<double> s = 0;
                for (size_t l = 0; l < r; ++l) s += Sf[j * r + l] * Sf[i * r + l] * std::conj(Sf[k * r + l]) / Sf[l];
                double v = std::round(s.real());
                if (std::fabs(s.real() - v) > 1e-6 || std::fabs(s.imag()) > 1e-6 || v < 0) suspicious = true;
                cand[j * r + k] = static_cast<int64_t>(v);
            }
        // exact proof: N_i S = S diag(S_il / S_0l)
        bool ok = !suspicious;
        std::vector<CycNum> D(r);
        for (size_t l = 0; l < r && ok; ++l) D[l] = Sn(i, l) * invS0[l];
        for (size_t j = 0; j < r && ok; ++j)
            for (size_t l = 0; l < r && ok; ++l) {
                CycNum lhs;
                for (size_t k = 0; k < r; ++k)
                    if (cand[j * r + k] != 0) lhs += CycNum(cand[j * r + k]) * Sn(k, l);
                if (!(lhs == Sn(j, l) * D[l])) ok = false;
            }
        if (!ok) {
            for (size_t j = 0; j < r; ++j)
                for (size_t k = 0; k < r; ++k) {
                    CycNum s;
                    // S = S_00 Sn
                    for (size_t l = 0; l < r; ++l) s += Sn(j, l) * Sn(i, l) * Sn(k, l).conj() * invS0[l];
                    s *= md.S(0, 0) * md.S(0, 0).conj();
                    if (!s.is_rational() || denominator(s.rational_value()) != 1 || s.rational_value() < 0)
                        throw ModularityViolation("Verlinde coefficient N_{" + names[i] + "," + names[j] + "}^{" +
                                                  names[k] + "} = " + s.str() + " is not a nonnegative integer");
                    cand[j * r + k] = static_cast<int64_t>(numerator(s.rational_value()));
                }
        }
        for (size_t j = 0; j < r; ++j)
            for (size_t k = 0; k < r; ++k) ring.at(i, j, k) = cand[j * r + k];
    }
    return ring;
}

int bantay_fs(const ModularData& md, const FusionRing& ring, size_t lambda) {
    size_t r = md.rank();
    auto d = md.dims();
    CycNum D2;
    for (const auto& x : d) D2 += x * x;
    std::vector<CycNum> t2(r), t2c(r);
    for (size_t s = 0; s < r; ++s) {
        t2[s] = md.T[s] * md.T[s];
        t2c[s] = t2[s].conj();
    }
    CycNum nu;
    for (size_t s = 0; s < r; ++s)
        for (size_t t = 0; t < r; ++t) {
            int64_t m = ring(s, t, lambda);
            if (m == 0) continue;
            nu += CycNum(m) * d[s] * d[t] * t2[s] * t2c[t];
        }
    nu = nu / D2;
    if (!nu.is_rational()) throw ModularityViolation("indicator of " + md.labels[lambda].str() + " is " + nu.str());
    Rational v = nu.rational_value();
    if (v != 0 && v != 1 && v != -1)
        throw ModularityViolation("indicator of " + md.labels[lambda].str() + " is " + nu.str());
    return static_cast<int>(numerator(v));
}

int bantay_fs(const ModularData& md, size_t lambda) { return bantay_fs(md, verlinde_fusion(md), lambda); }

// ---------------- invariants

InvariantReport check_invariants(const ModularData& md) {
    InvariantReport rep;
    size_t r = md.rank();
    auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
    if (md.T.size() != r || md.S.size() != r) {
        fail("S/T size mismatch with labels");
        return rep;
    }
    rep.symmetric = md.S.is_symmetric();
    if (!rep.symmetric) fail("S is not symmetric");
    CycMatrix Sc = md.S.conj();
    rep.unitary = (md.S * Sc).is_identity();
    if (!rep.unitary) fail("S is not unitary");
    std::vector<size_t> C;
    try {
        C = md.charge_conjugation();
        rep.charge_perm = true;
    } catch (const ModularityViolation& e) {
        fail(e.what());
    }
    rep.t_roots = true;
    std::vector<CycNum> Tc(r);
    for (size_t i = 0; i < r; ++i) {
        RootOfUnity z;
        if (!md.T[i].as_root_of_unity(z)) {
            rep.t_roots = false;
            fail("T entry of " + md.labels[i].str() + " is not a root of unity");
        }
        Tc[i] = md.T[i].conj();
    }
    if (!(md.T[0] == central_phase(md.c_top))) {
        rep.t_roots = false;
        fail("T_00 != exp(-pi i c/12)");
    }
    if (rep.symmetric && rep.unitary && rep.charge_perm && rep.t_roots) {
        CycMatrix STS = md.S.right_diag(md.T) * md.S;
        rep.tstst = STS == md.S.left_diag(Tc).right_diag(Tc);
        if (!rep.tstst) fail("TSTST != S");
        // (ST)^3 = C  <=>  STS = C T^-1 S^-1 T^-1
        CycMatrix Y = Sc.left_diag(Tc).right_diag(Tc);
        bool ok = true;
        for (size_t i = 0; i < r && ok; ++i)
            for (size_t j = 0; j < r && ok; ++j) ok = STS(i, j) == Y(C[i], j);
        rep.st_cubed = ok;
        if (!ok) fail("(ST)^3 != S^2");
        rep.csc = true;
        rep.ctc = true;
        for (size_t i = 0; i < r; ++i) {
            if (!(md.T[C[i]] == md.T[i])) rep.ctc = false;
            for (size_t j = 0; j < r; ++j)
                if (!(md.S(C[i], C[j]) == md.S(i, j))) rep.csc = false;
        }
        if (!rep.csc) fail("CSC != S");
        if (!rep.ctc) fail("CTC != T");
    }
    std::vector<CycNum> d;
    try {
        d = md.dims();
        rep.dims_positive = true;
        for (size_t i = 0; i < r; ++i)
            if (!d[i].is_real() || d[i].sign() <= 0) {
                rep.dims_positive = false;
                fail("dimension of " + md.labels[i].str() + " is not positive");
            }
    } catch (const Error& e) {
        rep.dims_positive = false;
        fail(e.what());
    }
    if (rep.charge_perm && rep.dims_positive) {
        try {
            verlinde_fusion(md);
            rep.verlinde = true;
        } catch (const ModularityViolation& e) {
            fail(e.what());
        }
    }
    if (rep.dims_positive && rep.t_roots) {
        auto th = md.twists();
        CycNum z;
        for (size_t i = 0; i < r; ++i) z += d[i] * d[i] * th[i];
        CycNum w = z * CycNum::from_root(root_of_rational(-md.c_top / 8));
        rep.gauss = w.is_real() && w.sign() > 0;
        if (!rep.gauss) fail("Gauss sum phase does not match c_top");
    }
    return rep;
}

void validate(const ModularData& md) {
    auto rep = check_invariants(md);
    if (!rep.ok()) {
        std::string s;
        for (const auto& f : rep.failures) s += (s.empty() ? "" : "; ") + f;
        throw ModularityViolation(s);
    }
}

// ---------------- products, reversal, hat twist

ModularData tensor_md(const ModularData& a, const ModularData& b) {
    size_t ra = a.rank(), rb = b.rank(), r = ra * rb;
    int64_t K = std::lcm(a.S.conductor(), b.S.conductor());
    for (const auto& t : a.T) K = std::lcm(K, t.conductor());
    for (const auto& t : b.T) K = std::lcm(K, t.conductor());
    ModularData md;
    for (size_t i = 0; i < ra; ++i)
        for (size_t j = 0; j < rb; ++j) md.labels.push_back(Label{Label::Kind::Product, {}, {}, 0, {a.labels[i], b.labels[j]}});
    md.S = CycMatrix(r, K);
    for (size_t i = 0; i < ra; ++i)
        for (size_t j = 0; j < rb; ++j)
            for (size_t k = 0; k < ra; ++k)
                for (size_t l = 0; l < rb; ++l) md.S.set(i * rb + j, k * rb + l, a.S(i, k) * b.S(j, l));
    md.c_top = mod8(a.c_top + b.c_top);
    // c is kept mod 8, so rescale T by the cube root of unity that restores T_00 = exp(-pi i c/12)
    CycNum fix = central_phase(md.c_top) / (a.T[0] * b.T[0]);
    for (size_t i = 0; i < ra; ++i)
        for (size_t j = 0; j < rb; ++j) md.T.push_back((a.T[i] * b.T[j] * fix).promote(K));
    if (a.grading || b.grading) {
        std::vector<int> g;
        for (size_t i = 0; i < ra; ++i)
            for (size_t j = 0; j < rb; ++j) g.push_back(((a.grading ? (*a.grading)[i] : 0) + (b.grading ? (*b.grading)[j] : 0)) % 2);
        md.grading = g;
    }
    return md;
}

ModularData reverse_md(const ModularData& a) {
    ModularData md = a;
    md.S = a.S.conj();
    for (auto& t : md.T) t = t.conj();
    md.c_top = mod8(-a.c_top);
    return md;
}

ModularData hat_twist(const ModularData& md) {
    if (!md.grading) throw InvalidArgument("hat twist needs a grading");
    const auto& eps = *md.grading;
    size_t r = md.rank();
    if (eps.size() != r || eps[0] != 0) throw InvalidArgument("grading must have one entry per label and unit even");
    FusionRing ring = verlinde_fusion(md);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j)
            for (size_t k = 0; k < r; ++k)
                if (ring(i, j, k) != 0 && (eps[i] + eps[j]) % 2 != eps[k])
                    throw InvalidArgument("grading is not compatible with fusion at " + ring.labels[i] + "*" +
                                          ring.labels[j] + " -> " + ring.labels[k]);
    ModularData out = md;
    int64_t K = std::lcm<int64_t>(md.S.conductor(), 4);
    out.S = CycMatrix(r, K);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) out.S.set(i, j, (eps[i] && eps[j]) ? -md.S(i, j) : md.S(i, j));
    for (size_t i = 0; i < r; ++i) out.T[i] = (eps[i] ? md.T[i] * CycNum::zeta(4, 1) : md.T[i]).promote(std::lcm(md.T[i].conductor(), int64_t{4}));
    return out;
}

// ---------------- equivalence

size_t default_max_rank() {
    if (const char* v = std::getenv("TYCAT_MAX_RANK")) {
        try {
            long long x = std::stoll(v);
            if (x > 0) return static_cast<size_t>(x);
        } catch (...) {
        }
    }
    return 40;
}

namespace {

struct Interner {
    std::map<std::string, int> ids;
    int64_t K;
    int id(const CycNum& x) {
        auto key = x.promote(K).key();
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        int v = static_cast<int>(ids.size());
        ids.emplace(key, v);
        return v;
    }
};

}  // namespace

std::optional<MDEquivalence> md_equivalent(const ModularData& a, const ModularData& b, size_t max_rank) {
    if (max_rank == 0) max_rank = default_max_rank();
    size_t r = a.rank();
    if (r > max_rank || b.rank() > max_rank)
        throw CapacityError("equivalence search bound " + std::to_string(max_rank) + " exceeded (rank " +
                            std::to_string(std::max(r, b.rank())) + ")");
    if (b.rank() != r) return std::nullopt;
    CycNum zeta = b.T[0] / a.T[0];
    int zp = -1;
    for (int k = 0; k < 3; ++k)
        if (zeta == CycNum::zeta(3, k)) zp = k;
    if (zp < 0) return std::nullopt;
    int64_t K = std::lcm(a.S.conductor(), b.S.conductor());
    for (const auto& t : a.T) K = std::lcm(K, t.conductor() * 3);
    for (const auto& t : b.T) K = std::lcm(K, t.conductor());
    Interner in{{}, K};
    std::vector<int> Sa(r * r), Sb(r * r), Ta(r), Tb(r);
    for (size_t i = 0; i < r; ++i) {
        Ta[i] = in.id(a.T[i] * zeta);
        Tb[i] = in.id(b.T[i]);
        for (size_t j = 0; j < r; ++j) {
            Sa[i * r + j] = in.id(a.S(i, j));
            Sb[i * r + j] = in.id(b.S(i, j));
        }
    }
    auto signature = [&](const std::vector<int>& S, const std::vector<int>& T, size_t i) {
        std::vector<int> row(S.begin() + i * r, S.begin() + (i + 1) * r);
        std::sort(row.begin(), row.end());
        row.push_back(T[i]);
        row.push_back(S[i * r + i]);
        return row;
    };
    std::vector<std::vector<size_t>> cand(r);
    for (size_t i = 0; i < r; ++i) {
        auto si = signature(Sa, Ta, i);
        for (size_t j = 0; j < r; ++j)
            if ((i == 0) == (j == 0) && signature(Sb, Tb, j) == si) cand[i].push_back(j);
        if (cand[i].empty()) return std::nullopt;
    }
    std::vector<size_t> order(r);
    for (size_t i = 0; i < r; ++i) order[i] = i;
    std::stable_sort(order.begin() + 1, order.end(), [&](size_t x, size_t y) { return cand[x].size() < cand[y].size(); });
    std::vector<size_t> perm(r, r);
    std::vector<char> used(r, 0);
    int64_t nodes = 0;
    std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
        if (pos == r) return true;
        if (++nodes > 50000000) throw CapacityError("equivalence search exceeded node budget");
        size_t i = order[pos];
        for (size_t j : cand[i]) {
            if (used[j]) continue;
            bool ok = true;
            for (size_t q = 0; q < pos && ok; ++q) {
                size_t k = order[q];
                ok = Sa[i * r + k] == Sb[j * r + perm[k]];
            }
            if (!ok) continue;
            perm[i] = j;
            used[j] = 1;
            if (rec(pos + 1)) return true;
            used[j] = 0;
            perm[i] = r;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    for (size_t i = 0; i < r; ++i) {
        if (Ta[i] != Tb[perm[i]]) return std::nullopt;
        for (size_t j = 0; j < r; ++j)
            if (!(a.S(i, j) == b.S(perm[i], perm[j]))) return std::nullopt;
        if (!(a.T[i] * zeta == b.T[perm[i]])) return std::nullopt;
    }
    return MDEquivalence{perm, zp};
}

// ---------------- condensation

std::optional<BranchingMatrix> verify_condensation(const ModularData& P, const ModularData& Cd,
                                                   const std::vector<size_t>& bosons, int64_t node_budget) {
    size_t rp = P.rank(), rc = Cd.rank();
    size_t bound = default_max_rank();
    if (std::max(rp, rc) > std::max<size_t>(bound, 64))
        throw CapacityError("condensation search rank bound exceeded");
    auto dP = P.dims();
    auto thP = P.twists();
    std::vector<char> isb(rp, 0);
    for (size_t b : bosons) {
        if (b >= rp) throw InvalidArgument("boson index out of range");
        if (!(dP[b] == CycNum(1))) throw InvalidArgument("boson " + P.labels[b].str() + " is not invertible");
        if (!(thP[b] == CycNum(1))) throw InvalidArgument("boson " + P.labels[b].str() + " does not have trivial twist");
        isb[b] = 1;
    }
    if (!isb[0]) throw InvalidArgument("boson set must contain the unit");
    FusionRing ring = verlinde_fusion(P);
    for (size_t a : bosons)
        for (size_t b : bosons)
            for (size_t k = 0; k < rp; ++k)
                if (ring(a, b, k) != 0 && !isb[k]) throw InvalidArgument("bosons are not closed under fusion");
    CycNum zeta = P.T[0] / Cd.T[0];
    int zp = -1;
    for (int k = 0; k < 3; ++k)
        if (zeta == CycNum::zeta(3, k)) zp = k;
    if (zp < 0) return std::nullopt;
    // allowed[l][m]: T_p(l) = zeta T_c(m)
    std::vector<std::vector<char>> allowed(rp, std::vector<char>(rc, 0));
    for (size_t l = 0; l < rp; ++l)
        for (size_t m = 0; m < rc; ++m) allowed[l][m] = P.T[l] == zeta * Cd.T[m];
    auto Pf = P.S.to_complex();
    auto Cf = Cd.S.to_complex();
    std::vector<double> dp(rp), dc(rc);
    for (size_t l = 0; l < rp; ++l) dp[l] = (Pf[l * rp] / Pf[0]).real();
    for (size_t m = 0; m < rc; ++m) dc[m] = (Cf[m * rc] / Cf[0]).real();
    double Dc = 1.0 / Cf[0].real();
    double A = static_cast<double>(bosons.size());
    // row targets: sum_m B_lm d_m = D_c sum_b S_p(l,b)
    std::vector<double> rowrem(rp);
    for (size_t l = 0; l < rp; ++l) {
        std::complex<double> s = 0;
        for (size_t b : bosons) s += Pf[l * rp + b];
        rowrem[l] = Dc * s.real();
    }
    const double eps = 1e-7;
    std::vector<int64_t> B(rp * rc, 0);
    for (size_t l = 0; l < rp; ++l)
        if (isb[l]) {
            B[l * rc] = 1;
            rowrem[l] -= dc[0];
        }
    for (size_t l = 0; l < rp; ++l)
        if (isb[l] && !allowed[l][0]) return std::nullopt;
    // column order: child labels by decreasing dimension
    std::vector<size_t> cols;
    for (size_t m = 1; m < rc; ++m) cols.push_back(m);
    std::stable_sort(cols.begin(), cols.end(), [&](size_t x, size_t y) { return dc[x] > dc[y]; });
    std::vector<std::vector<size_t>> cand(rc);
    for (size_t m : cols)
        for (size_t l = 1; l < rp; ++l)
            if (allowed[l][m] && rowrem[l] > eps) cand[m].push_back(l);
    int64_t nodes = 0;
    std::optional<BranchingMatrix> result;
    auto exact_ok = [&]() {
        for (size_t l = 0; l < rp; ++l)
            for (size_t m = 0; m < rc; ++m) {
                CycNum lhs, rhs;
                for (size_t k = 0; k < rp; ++k)
                    if (B[k * rc + m] != 0) lhs += P.S(l, k) * CycNum(B[k * rc + m]);
                for (size_t k = 0; k < rc; ++k)
                    if (B[l * rc + k] != 0) rhs += CycNum(B[l * rc + k]) * Cd.S(k, m);
                if (!(lhs == rhs)) return false;
            }
        return true;
    };
    std::function<bool(size_t, size_t, double)> rec = [&](size_t ci, size_t li, double colrem) -> bool {
        if (++nodes > node_budget) throw CapacityError("condensation search exceeded node budget");
        if (ci == cols.size()) {
            for (size_t l = 0; l < rp; ++l)
                if (std::fabs(rowrem[l]) > eps) return false;
            return exact_ok();
        }
        size_t m = cols[ci];
        if (li == cand[m].size()) {
            if (std::fabs(colrem) > eps) return false;
            size_t nm = ci + 1 < cols.size() ? cols[ci + 1] : 0;
            return rec(ci + 1, 0, ci + 1 < cols.size() ? A * dc[nm] : 0.0);
        }
        size_t l = cand[m][li];
        int64_t maxmult = static_cast<int64_t>(std::floor(std::min(colrem / dp[l], rowrem[l] / dc[m]) + eps));
        for (int64_t t = maxmult; t >= 0; --t) {
            B[l * rc + m] = t;
            rowrem[l] -= t * dc[m];
            bool ok = rec(ci, li + 1, colrem - t * dp[l]);
            rowrem[l] += t * dc[m];
            if (ok) return true;
            B[l * rc + m] = 0;
        }
        return false;
    };
    bool found = cols.empty() ? ([&] {
        for (size_t l = 0; l < rp; ++l)
            if (std::fabs(rowrem[l]) > eps) return false;
        return exact_ok();
    })()
                              : rec(0, 0, A * dc[cols[0]]);
    if (!found) return std::nullopt;
    return BranchingMatrix{rp, rc, B, zp};
}

std::vector<ModularData> classify_mp(const FinAbGroup& G) {
    if (G.order() % 2 == 0) throw Unsupported("MP classification needs |G| odd");
    std::vector<ModularData> out;
    for (const auto& m : classify_metric_groups(G))
        for (int s : {1, -1}) out.push_back(mp_md(*m.b, s));
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (md_equivalent(out[i], out[j]))
                throw ModularityViolation("classification produced equivalent data at positions " + std::to_string(i) +
                                          " and " + std::to_string(j));
    return out;
}

}  // namespace tycat
