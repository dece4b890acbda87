#include "tycat/lattice.hpp"

#include <numeric>
#include <cmath>
#include <functional>

#include "tycat/error.hpp"

namespace tycat {

EvenLattice::EvenLattice(IntMatrix gram) : gram_(std::move(gram)) {
    size_t n = gram_.rows();
    if (gram_.cols() != n) throw InvalidArgument("Gram matrix must be square");
    for (size_t i = 0; i < n; ++i) {
        if (gram_(i, i) % 2 != 0) throw InvalidArgument("Gram diagonal entry " + std::to_string(i) + " is odd");
        for (size_t j = 0; j < n; ++j)
            if (gram_(i, j) != gram_(j, i)) throw InvalidArgument("Gram matrix is not symmetric");
    }
    for (size_t k = 1; k <= n; ++k) {
        IntMatrix m(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) m(i, j) = gram_(i, j);
        if (m.det() <= 0) throw InvalidArgument("Gram matrix is not positive definite");
    }
}

EvenLattice named_lattice(const std::string& name) {
    if (name.size() < 2) throw InvalidArgument("unknown lattice " + name);
    int n = 0;
    try {
        n = std::stoi(name.substr(1));
    } catch (...) {
        throw InvalidArgument("unknown lattice " + name);
    }
    IntMatrix G(n, n);
    for (int i = 0; i < n; ++i) G(i, i) = 2;
    if (name[0] == 'A' && n >= 1 && n <= 24) {
        for (int i = 0; i + 1 < n; ++i) G(i, i + 1) = G(i + 1, i) = -1;
        return EvenLattice(G);
    }
    if (name[0] == 'E' && n >= 6 && n <= 8) {
        // nodes 1..n; chain 1-3-4-...-n and 2-4
        auto link = [&](int a, int b) { G(a - 1, b - 1) = G(b - 1, a - 1) = -1; };
        link(1, 3);
        link(2, 4);
        for (int i = 3; i < n; ++i) link(i, i + 1);
        return EvenLattice(G);
    }
    throw InvalidArgument("unknown lattice " + name);
}

std::vector<Rational> DiscriminantForm::lift(const Elem& c) const {
    size_t r = lifts.empty() ? 0 : lifts[0].size();
    std::vector<Rational> x(r, Rational(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t k = 0; k < r; ++k) x[k] += c[i] * lifts[i][k];
    return x;
}

Rational norm(const EvenLattice& L, const std::vector<Rational>& x) {
    Rational s = 0;
    const auto& G = L.gram();
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0) s += x[i] * x[j] * Rational(G(i, j));
    }
    return s;
}

namespace {

RootOfUnity half_norm_phase(const Rational& nrm) {
    Rational h = nrm / 2;
    BigInt num = numerator(h), den = denominator(h);
    BigInt r = num % den;
    if (r < 0) r += den;
    return RootOfUnity(static_cast<int64_t>(r), static_cast<int64_t>(den));
}

}  // namespace

DiscriminantForm discriminant_form(const EvenLattice& L) {
    size_t n = L.rank();
    DiscriminantForm df;
    if (n == 0) return df;
    if (L.det() == 0) throw InvalidArgument("singular Gram matrix");
    auto sf = smith_normal_form(L.gram());
    std::vector<int64_t> f;
    for (size_t i = 0; i < n; ++i) {
        int64_t d = static_cast<int64_t>(sf.D(i, i));
        if (d > 1) {
            f.push_back(d);
            std::vector<Rational> v(n);
            for (size_t k = 0; k < n; ++k) v[k] = Rational(sf.V(k, i), d);
            df.lifts.push_back(v);
        }
    }
    df.group = FinAbGroup(f);
    std::vector<RootOfUnity> vals(df.group.order());
    for (int64_t i = 0; i < df.group.order(); ++i) vals[i] = half_norm_phase(norm(L, df.lift(df.group.element(i))));
    df.q = QuadForm(df.group, vals);
    return df;
}

EvenLattice orthogonal_sum(const EvenLattice& L, const EvenLattice& M) {
    size_t a = L.rank(), b = M.rank();
    IntMatrix G(a + b, a + b);
    for (size_t i = 0; i < a; ++i)
        for (size_t j = 0; j < a; ++j) G(i, j) = L.gram()(i, j);
    for (size_t i = 0; i < b; ++i)
        for (size_t j = 0; j < b; ++j) G(a + i, a + j) = M.gram()(i, j);
    return EvenLattice(G);
}

EvenLattice glue(const EvenLattice& L, const std::vector<Elem>& gens) {
    auto df = discriminant_form(L);
    const auto& G = df.group;
    std::vector<Elem> red;
    for (const auto& g : gens) {
        if (g.size() != G.rank()) throw InvalidArgument("glue element has wrong number of coordinates");
        red.push_back(G.reduce(g));
    }
    auto H = generated_subgroup(G, red);
    for (auto h : H)
        if (!(df.q.at(h) == RootOfUnity())) {
            Elem e = G.element(h);
            std::string s;
            for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
            throw InvalidArgument("subgroup is not isotropic: q([" + s + "]) = exp(2 pi i " + df.q.at(h).str() + ")");
        }
    size_t n = L.rank();
    BigInt den = 1;
    std::vector<std::vector<Rational>> lifts;
    for (const auto& g : red) {
        lifts.push_back(df.lift(g));
        for (const auto& x : lifts.back()) den = boost::multiprecision::lcm(den, denominator(x));
    }
    IntMatrix M(n + lifts.size(), n);
    for (size_t i = 0; i < n; ++i) M(i, i) = den;
    for (size_t t = 0; t < lifts.size(); ++t)
        for (size_t k = 0; k < n; ++k) M(n + t, k) = numerator(lifts[t][k] * Rational(den));
    IntMatrix B = hermite_normal_form(M);
    if (B.rows() != n) throw InvalidArgument("internal: overlattice basis has wrong rank");
    // Gram in new basis: B G B^T / den^2
    IntMatrix P = B * L.gram() * B.transpose();
    BigInt d2 = den * den;
    IntMatrix Gn(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (P(i, j) % d2 != 0) throw InvalidArgument("internal: glued Gram matrix is not integral");
            Gn(i, j) = P(i, j) / d2;
        }
    EvenLattice out(Gn);
    BigInt h = static_cast<int64_t>(H.size());
    if (out.det() * h * h != L.det()) throw InvalidArgument("internal: determinant law violated by glue");
    return out;
}

std::optional<Automorphism> mirror_check(const EvenLattice& L, const EvenLattice& Lbar) {
    auto d1 = discriminant_form(L);
    auto d2 = discriminant_form(Lbar);
    auto phi = qform_equiv(d1.q, d2.q.conj());
    if (!phi) return std::nullopt;
    for (int64_t i = 0; i < d1.group.order(); ++i) {
        Elem g = d1.group.element(i);
        Rational n = norm(L, d1.lift(g)) + norm(Lbar, d2.lift(phi->apply(d2.group, g)));
        if (denominator(n) != 1 || numerator(n) % 2 != 0) return std::nullopt;
    }
    return phi;
}

int64_t count_roots(const EvenLattice& L) {
    size_t n = L.rank();
    if (n > 8) throw CapacityError("root counting supports rank <= 8, got " + std::to_string(n));
    if (n == 0) return 0;
    // Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
    std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) q[i][j] = Rational(L.gram()(i, j));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] = q[i][j] / q[i][i];
        }
        for (size_t k = i + 1; k < n; ++k)
            for (size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    const Rational bound = 2;
    std::vector<int64_t> x(n, 0);
    int64_t count = 0;
    std::function<void(int, Rational)> rec = [&](int i, Rational rem) {
        Rational c = 0;
        for (size_t j = i + 1; j < n; ++j) c -= q[i][j] * x[j];
        double cd = c.convert_to<double>();
        double s = std::sqrt(std::max(0.0, (rem / q[i][i]).convert_to<double>()));
        int64_t lo = static_cast<int64_t>(std::floor(cd - s)) - 1;
        int64_t hi = static_cast<int64_t>(std::ceil(cd + s)) + 1;
        for (int64_t v = lo; v <= hi; ++v) {
            Rational t = Rational(v) - c;
            Rational used = q[i][i] * t * t;
            if (used > rem) continue;
            x[i] = v;
            if (i == 0) {
                if (rem - used == 0) ++count;
            } else {
                rec(i - 1, rem - used);
            }
        }
        x[i] = 0;
    };
    rec(static_cast<int>(n) - 1, bound);
    return count;
}

}  // namespace tycat
