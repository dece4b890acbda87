#include "tycat/quadform.hpp"

#include <numeric>
#include <algorithm>
#include <functional>
#include <map>

#include "tycat/error.hpp"

namespace tycat {

QuadForm::QuadForm(FinAbGroup G, std::vector<RootOfUnity> values) : G_(std::move(G)), values_(std::move(values)) {
    if (static_cast<int64_t>(values_.size()) != G_.order()) throw InvalidArgument("quadratic form table has wrong size");
    if (!(values_[0] == RootOfUnity())) throw InvalidArgument("q(0) must be 1");
    for (int64_t i = 0; i < G_.order(); ++i) {
        Elem g = G_.element(i);
        if (!(values_[G_.index(G_.neg(g))] == values_[i])) throw InvalidArgument("q(-g) != q(g) at " + std::to_string(i));
    }
    // dq bimultiplicative against generators
    for (size_t k = 0; k < G_.rank(); ++k) {
        Elem e = G_.generator(k);
        for (int64_t i = 0; i < G_.order(); ++i)
            for (int64_t j = 0; j < G_.order(); ++j) {
                Elem g = G_.element(i), h = G_.element(j);
                if (!(dq(G_.add(g, e), h) == dq(g, h) * dq(e, h)))
                    throw InvalidArgument("dq is not bimultiplicative; table is not a quadratic form");
            }
    }
}

QuadForm QuadForm::diagonal(const FinAbGroup& G, const std::vector<int64_t>& a) {
    const auto& d = G.factors();
    if (a.size() != d.size()) throw InvalidArgument("one coefficient per invariant factor expected");
    std::vector<RootOfUnity> v(G.order());
    for (int64_t i = 0; i < G.order(); ++i) {
        Elem x = G.element(i);
        RootOfUnity r;
        for (size_t k = 0; k < d.size(); ++k) r = r * RootOfUnity(mod64(a[k] * x[k] % d[k] * x[k], d[k]), d[k]);
        v[i] = r;
    }
    return QuadForm(G, v);
}

RootOfUnity QuadForm::dq(const Elem& g, const Elem& h) const {
    return (*this)(g) * (*this)(h) * (*this)(G_.add(g, h)).inv();
}

bool QuadForm::nondegenerate() const {
    for (int64_t i = 1; i < G_.order(); ++i) {
        Elem g = G_.element(i);
        bool trivial = true;
        for (size_t k = 0; k < G_.rank() && trivial; ++k)
            if (!(dq(g, G_.generator(k)) == RootOfUnity())) trivial = false;
        if (trivial) return false;
    }
    return true;
}

QuadForm QuadForm::conj() const {
    std::vector<RootOfUnity> v;
    for (const auto& x : values_) v.push_back(x.conj());
    return QuadForm(G_, v);
}

bool QuadForm::is_quadratic() const {
    for (int64_t i = 0; i < G_.order(); ++i) {
        Elem g = G_.element(i);
        for (int64_t n = 0; n <= G_.exponent(); ++n)
            if (!((*this)(G_.scale(g, n)) == values_[i].pow(n * n))) return false;
        for (int64_t j = 0; j < G_.order(); ++j)
            for (int64_t k = 0; k < G_.order(); ++k) {
                Elem h = G_.element(j), f = G_.element(k);
                if (!(dq(G_.add(g, h), f) == dq(g, f) * dq(h, f))) return false;
            }
    }
    return true;
}

Bichar::Bichar(FinAbGroup G, std::vector<std::vector<RootOfUnity>> gen) : G_(std::move(G)), B_(std::move(gen)) {
    size_t r = G_.rank();
    if (B_.size() != r) throw InvalidArgument("bicharacter generator matrix has wrong size");
    const auto& d = G_.factors();
    for (size_t i = 0; i < r; ++i) {
        if (B_[i].size() != r) throw InvalidArgument("bicharacter generator matrix has wrong size");
        for (size_t j = 0; j < r; ++j) {
            if (!(B_[i][j] == B_[j][i])) throw InvalidArgument("bicharacter is not symmetric");
            if (!(B_[i][j].pow(d[i]) == RootOfUnity())) throw InvalidArgument("bicharacter violates order constraint");
        }
    }
}

RootOfUnity Bichar::operator()(const Elem& g, const Elem& h) const {
    RootOfUnity r;
    for (size_t i = 0; i < B_.size(); ++i) {
        if (g[i] == 0) continue;
        for (size_t j = 0; j < B_.size(); ++j)
            if (h[j] != 0) r = r * B_[i][j].pow(g[i] * h[j]);
    }
    return r;
}

bool Bichar::nondegenerate() const {
    for (int64_t i = 1; i < G_.order(); ++i) {
        Elem g = G_.element(i);
        bool trivial = true;
        for (size_t k = 0; k < G_.rank() && trivial; ++k)
            if (!((*this)(g, G_.generator(k)) == RootOfUnity())) trivial = false;
        if (trivial) return false;
    }
    return true;
}

MetricGroup make_metric(const QuadForm& q) {
    MetricGroup m{q, std::nullopt};
    if (q.group().order() % 2 == 1) m.b = bichar_from_qform(q);
    return m;
}

Bichar bichar_from_qform(const QuadForm& q) {
    const auto& G = q.group();
    if (G.order() % 2 == 0) throw Unsupported("bicharacter translation needs |G| odd");
    if (!q.nondegenerate()) throw InvalidArgument("quadratic form is degenerate");
    int64_t m = (G.exponent() + 1) / 2;
    size_t r = G.rank();
    std::vector<std::vector<RootOfUnity>> B(r, std::vector<RootOfUnity>(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) B[i][j] = q.dq(G.generator(i), G.generator(j)).pow(m);
    return Bichar(G, B);
}

QuadForm qform_from_bichar(const Bichar& b) {
    const auto& G = b.group();
    if (G.order() % 2 == 0) throw Unsupported("bicharacter translation needs |G| odd");
    if (!b.nondegenerate()) throw InvalidArgument("bicharacter is degenerate");
    std::vector<RootOfUnity> v(G.order());
    for (int64_t i = 0; i < G.order(); ++i) {
        Elem g = G.element(i);
        v[i] = b(g, g).inv();
    }
    return QuadForm(G, v);
}

Rational gauss_central_charge(const QuadForm& q) {
    const auto& G = q.group();
    int64_t N = 1;
    for (const auto& v : q.values()) N = std::lcm(N, v.den());
    std::vector<BigInt> raw(N);
    for (const auto& v : q.values()) raw[v.num() * (N / v.den())] += 1;
    CycNum s = CycNum::from_raw(N, raw, 1) / sqrt_int(G.order());
    RootOfUnity z;
    if (!s.as_root_of_unity(z) || 8 % z.den() != 0)
        throw DegeneracyError("normalized Gauss sum " + s.str() + " is not an 8th root of unity");
    return Rational(8 * z.num(), z.den());
}

std::optional<Automorphism> qform_equiv(const QuadForm& q1, const QuadForm& q2, int64_t node_budget) {
    const auto& G = q1.group();
    if (!(G == q2.group())) return std::nullopt;
    auto v1 = q1.values(), v2 = q2.values();
    std::sort(v1.begin(), v1.end());
    std::sort(v2.begin(), v2.end());
    if (v1 != v2) return std::nullopt;
    const auto& d = G.factors();
    size_t r = d.size();
    std::vector<std::vector<Elem>> cand(r);
    for (int64_t i = 0; i < G.order(); ++i) {
        Elem y = G.element(i);
        int64_t o = G.elem_order(y);
        for (size_t k = 0; k < r; ++k)
            if (o == d[k] && q2(y) == q1(G.generator(k))) cand[k].push_back(y);
    }
    std::vector<Elem> img(r);
    int64_t nodes = 0;
    std::optional<Automorphism> found;
    std::vector<char> seen(G.order());
    std::function<bool(size_t)> rec = [&](size_t k) -> bool {
        if (++nodes > node_budget)
            throw CapacityError("metric equivalence search exceeded node budget " + std::to_string(node_budget));
        if (k == r) {
            Automorphism a{img};
            std::fill(seen.begin(), seen.end(), 0);
            for (int64_t i = 0; i < G.order(); ++i) {
                Elem x = G.element(i);
                Elem y = a.apply(G, x);
                int64_t j = G.index(y);
                if (seen[j] || !(q2.at(j) == q1.at(i))) return false;
                seen[j] = 1;
            }
            found = a;
            return true;
        }
        Elem ek = G.generator(k);
        for (const auto& y : cand[k]) {
            bool ok = true;
            for (size_t j = 0; j < k && ok; ++j) ok = q2.dq(y, img[j]) == q1.dq(ek, G.generator(j));
            if (!ok) continue;
            img[k] = y;
            if (rec(k + 1)) return true;
        }
        return false;
    };
    rec(0);
    return found;
}

std::optional<Automorphism> metric_equiv(const MetricGroup& m1, const MetricGroup& m2, int64_t node_budget) {
    return qform_equiv(m1.q, m2.q, node_budget);
}

int64_t smallest_nonresidue(int64_t p) {
    for (int64_t a = 2; a < p; ++a) {
        bool res = false;
        for (int64_t x = 1; x < p && !res; ++x) res = (x * x) % p == a;
        if (!res) return a;
    }
    throw InvalidArgument("no quadratic nonresidue mod " + std::to_string(p));
}

namespace {

// q on a product of cyclic groups with q(x) = prod exp(2 pi i a_k x_k^2 / n_k), carried to invariant form
QuadForm cyclic_product_form(const std::vector<int64_t>& orders, const std::vector<int64_t>& a) {
    CyclicIso iso = group_from_cyclic(orders);
    const FinAbGroup& G = iso.target;
    std::vector<RootOfUnity> v(G.order());
    int64_t total = 1;
    for (auto n : orders) total *= n;
    Elem x(orders.size(), 0);
    for (int64_t t = 0; t < total; ++t) {
        int64_t rem = t;
        RootOfUnity r;
        for (size_t k = orders.size(); k-- > 0;) {
            x[k] = rem % orders[k];
            rem /= orders[k];
            r = r * RootOfUnity(mod64(a[k] * x[k] % orders[k] * x[k], orders[k]), orders[k]);
        }
        v[G.index(iso.apply(x))] = r;
    }
    return QuadForm(G, v);
}

std::vector<std::pair<int64_t, int64_t>> prime_powers(int64_t n) {
    std::vector<std::pair<int64_t, int64_t>> out;  // (p, p^k)
    for (int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            int64_t pk = 1;
            while (n % p == 0) {
                n /= p;
                pk *= p;
            }
            out.emplace_back(p, pk);
        }
    if (n > 1) out.emplace_back(n, n);
    return out;
}

}  // namespace

std::vector<MetricGroup> classify_metric_groups(const FinAbGroup& G) {
    if (G.order() % 2 == 0) throw Unsupported("metric group classification needs |G| odd");
    // Sylow components as lists of prime-power cyclic orders
    std::map<int64_t, std::vector<int64_t>> comp;
    for (auto d : G.factors())
        for (auto [p, pk] : prime_powers(d)) comp[p].push_back(pk);
    std::vector<std::pair<std::vector<int64_t>, std::vector<std::vector<int64_t>>>> per_prime;  // orders, coefficient choices
    for (const auto& [p, orders] : comp) {
        int64_t nr = smallest_nonresidue(p);
        std::vector<std::vector<int64_t>> reps;
        std::vector<QuadForm> rep_forms;
        size_t r = orders.size();
        for (int64_t mask = 0; mask < (int64_t{1} << r); ++mask) {
            std::vector<int64_t> a(r);
            for (size_t k = 0; k < r; ++k) a[k] = (mask >> k) & 1 ? nr : 1;
            QuadForm q = cyclic_product_form(orders, a);
            bool dup = false;
            for (const auto& f : rep_forms)
                if (qform_equiv(q, f)) {
                    dup = true;
                    break;
                }
            if (!dup) {
                reps.push_back(a);
                rep_forms.push_back(q);
            }
        }
        per_prime.emplace_back(orders, reps);
    }
    std::vector<MetricGroup> out;
    std::vector<size_t> pick(per_prime.size(), 0);
    while (true) {
        std::vector<int64_t> orders, a;
        for (size_t i = 0; i < per_prime.size(); ++i) {
            const auto& [o, reps] = per_prime[i];
            orders.insert(orders.end(), o.begin(), o.end());
            a.insert(a.end(), reps[pick[i]].begin(), reps[pick[i]].end());
        }
        QuadForm q = cyclic_product_form(orders, a);
        if (!(q.group() == G)) throw InvalidArgument("internal: Sylow reassembly changed the group");
        out.push_back(make_metric(q));
        size_t k = 0;
        while (k < pick.size() && ++pick[k] == per_prime[k].second.size()) pick[k++] = 0;
        if (k == pick.size()) break;
    }
    return out;
}

QuadForm direct_sum(const QuadForm& q1, const QuadForm& q2) {
    const auto& G1 = q1.group();
    const auto& G2 = q2.group();
    std::vector<int64_t> orders = G1.factors();
    orders.insert(orders.end(), G2.factors().begin(), G2.factors().end());
    CyclicIso iso = group_from_cyclic(orders);
    std::vector<RootOfUnity> v(iso.target.order());
    for (int64_t i = 0; i < G1.order(); ++i)
        for (int64_t j = 0; j < G2.order(); ++j) {
            Elem x = G1.element(i), y = G2.element(j);
            x.insert(x.end(), y.begin(), y.end());
            v[iso.target.index(iso.apply(x))] = q1.at(i) * q2.at(j);
        }
    return QuadForm(iso.target, v);
}

MetricGroup direct_sum(const MetricGroup& m1, const MetricGroup& m2) { return make_metric(direct_sum(m1.q, m2.q)); }

std::vector<std::vector<int64_t>> lagrangian_subgroups(const MetricGroup& m) {
    const auto& G = m.group();
    std::vector<std::vector<int64_t>> out;
    int64_t n = G.order();
    int64_t s = 0;
    while (s * s < n) ++s;
    if (s * s != n) return out;
    for (auto& H : all_subgroups(G)) {
        if (static_cast<int64_t>(H.size()) != s) continue;
        bool iso = std::all_of(H.begin(), H.end(), [&](int64_t h) { return m.q.at(h) == RootOfUnity(); });
        if (iso) out.push_back(H);
    }
    return out;
}

MetricDouble metric_double(const FinAbGroup& A, const QuadForm& q) {
    if (A.order() % 2 == 0) throw Unsupported("metric double needs |A| odd");
    std::vector<int64_t> orders = A.factors();
    orders.insert(orders.end(), A.factors().begin(), A.factors().end());
    CyclicIso iso = group_from_cyclic(orders);
    std::vector<RootOfUnity> v(iso.target.order());
    for (int64_t i = 0; i < A.order(); ++i)
        for (int64_t j = 0; j < A.order(); ++j) {
            Elem chi = A.element(i), a = A.element(j);
            Elem x = chi;
            x.insert(x.end(), a.begin(), a.end());
            v[iso.target.index(iso.apply(x))] = character_pairing(A, chi, a);
        }
    MetricDouble md{make_metric(QuadForm(iso.target, v)), make_metric(direct_sum(q, q.conj())), std::nullopt};
    md.witness = metric_equiv(md.canonical, md.sum);
    return md;
}

}  // namespace tycat
