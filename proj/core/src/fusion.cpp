#include "tycat/fusion.hpp"

#include <numeric>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "tycat/error.hpp"

namespace tycat {

FusionRing::FusionRing(std::vector<std::string> l) : labels(std::move(l)) {
    size_t r = labels.size();
    N.assign(r * r * r, 0);
    dual.resize(r);
    for (size_t i = 0; i < r; ++i) dual[i] = i;
}

size_t FusionRing::index_of(const std::string& name) const {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw InvalidArgument("unknown label " + name);
    return static_cast<size_t>(it - labels.begin());
}

std::vector<std::pair<size_t, int64_t>> FusionRing::product(size_t i, size_t j) const {
    std::vector<std::pair<size_t, int64_t>> out;
    for (size_t k = 0; k < rank(); ++k)
        if ((*this)(i, j, k) != 0) out.emplace_back(k, (*this)(i, j, k));
    return out;
}

namespace {

std::string triple(const FusionRing& r, size_t i, size_t j, size_t k) {
    return "(" + r.labels[i] + "," + r.labels[j] + "," + r.labels[k] + ")";
}

}  // namespace

FusionReport check_fusion_ring(const FusionRing& R) {
    FusionReport rep;
    size_t r = R.rank();
    for (size_t j = 0; j < r; ++j)
        for (size_t k = 0; k < r; ++k) {
            int64_t want = j == k ? 1 : 0;
            if (R(0, j, k) != want || R(j, 0, k) != want) {
                rep.unit_ok = false;
                rep.failures.push_back("unit law fails at " + triple(R, 0, j, k));
            }
        }
    for (size_t i = 0; i < r; ++i) {
        if (R.dual[R.dual[i]] != i) {
            rep.dual_ok = false;
            rep.failures.push_back("dual is not an involution at " + R.labels[i]);
        }
        for (size_t j = 0; j < r; ++j) {
            if (R(i, j, 0) != (j == R.dual[i] ? 1 : 0)) {
                rep.dual_ok = false;
                rep.failures.push_back("unit multiplicity wrong in " + R.labels[i] + "*" + R.labels[j]);
            }
            for (size_t k = 0; k < r; ++k) {
                int64_t v = R(i, j, k);
                if (v < 0) {
                    rep.frobenius_ok = false;
                    rep.failures.push_back("negative coefficient at " + triple(R, i, j, k));
                }
                // N_ij^k = N_{i* k}^{j} = N_{k j*}^{i}; no commutativity assumed
                if (v != R(R.dual[i], k, j) || v != R(k, R.dual[j], i)) {
                    rep.frobenius_ok = false;
                    rep.failures.push_back("Frobenius reciprocity fails at " + triple(R, i, j, k));
                }
                // dual anti-automorphism
                if (v != R(R.dual[j], R.dual[i], R.dual[k])) {
                    rep.dual_ok = false;
                    rep.failures.push_back("dual is not an anti-automorphism at " + triple(R, i, j, k));
                }
            }
        }
    }
    // associativity with sparse products
    std::vector<std::vector<std::pair<size_t, int64_t>>> prod(r * r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) prod[i * r + j] = R.product(i, j);
    std::vector<int64_t> lhs(r), rhs(r);
    for (size_t i = 0; i < r && rep.associative; ++i)
        for (size_t j = 0; j < r && rep.associative; ++j)
            for (size_t k = 0; k < r; ++k) {
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                for (auto [m, a] : prod[i * r + j])
                    for (auto [l, b] : prod[m * r + k]) lhs[l] += a * b;
                for (auto [m, a] : prod[j * r + k])
                    for (auto [l, b] : prod[i * r + m]) rhs[l] += a * b;
                if (lhs != rhs) {
                    rep.associative = false;
                    rep.failures.push_back("associativity fails for " + triple(R, i, j, k));
                    break;
                }
            }
    // Perron-Frobenius dims from power iteration on I + sum_i N_i
    std::vector<double> v(r, 1.0), w(r);
    for (int it = 0; it < 2000; ++it) {
        std::fill(w.begin(), w.end(), 0.0);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) {
                w[j] += v[j];
                for (auto [k, m] : prod[i * r + j]) w[k] += static_cast<double>(m) * v[j];
            }
        double s = w[0];
        for (auto& x : w) x /= s;
        double diff = 0;
        for (size_t j = 0; j < r; ++j) diff = std::max(diff, std::fabs(w[j] - v[j]));
        v = w;
        if (diff < 1e-15) break;
    }
    rep.fp_dims = v;
    rep.global_fp_dim = 0;
    bool integral = true;
    double total = 0;
    for (double d : v) {
        double d2 = d * d;
        total += d2;
        if (std::fabs(d2 - std::round(d2)) > 1e-9) integral = false;
    }
    rep.global_fp_dim = total;
    if (integral) rep.global_dim_exact = static_cast<int64_t>(std::llround(total));
    return rep;
}

FusionRing ty_fusion_ring(const FinAbGroup& G) {
    int64_t n = G.order();
    std::vector<std::string> labels;
    for (int64_t i = 0; i < n; ++i) {
        labels.push_back("g[" + elem_str(G.element(i)) + "]");
    }
    labels.push_back("rho");
    FusionRing R(labels);
    size_t rho = n;
    for (int64_t i = 0; i < n; ++i) {
        Elem g = G.element(i);
        R.dual[i] = G.index(G.neg(g));
        for (int64_t j = 0; j < n; ++j) R.at(i, j, G.index(G.add(g, G.element(j)))) = 1;
        R.at(i, rho, rho) = R.at(rho, i, rho) = 1;
        R.at(rho, rho, i) = 1;
    }
    return R;
}

FusionRing gen_ty_fusion_ring(const FinAbGroup& A) {
    if (A.order() % 2 == 0) throw Unsupported("generalized TY rules need |A| odd");
    int64_t n = A.order();
    // (a, e) with e in {0,1}: index a + e*n; then rho+, rho-
    std::vector<std::string> labels;
    for (int e = 0; e < 2; ++e)
        for (int64_t i = 0; i < n; ++i) {
            Elem a = A.element(i);
            std::string s = "[";
            for (size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
            labels.push_back((e ? "tau" : "g") + s + "]");
        }
    labels.push_back("rho+");
    labels.push_back("rho-");
    FusionRing R(labels);
    size_t rp = 2 * n, rm = 2 * n + 1;
    auto mul = [&](int64_t i, int e, int64_t j, int f) -> size_t {
        Elem a = A.element(i), b = A.element(j);
        Elem c = e ? A.sub(a, b) : A.add(a, b);
        return A.index(c) + static_cast<size_t>((e + f) % 2) * n;
    };
    for (int e = 0; e < 2; ++e)
        for (int64_t i = 0; i < n; ++i) {
            size_t x = i + e * n;
            R.dual[x] = e ? x : static_cast<size_t>(A.index(A.neg(A.element(i))));
            for (int f = 0; f < 2; ++f)
                for (int64_t j = 0; j < n; ++j) R.at(x, j + f * n, mul(i, e, j, f)) = 1;
            // group elements fix rho+-, tau-type elements swap them
            size_t a = e ? rm : rp, b = e ? rp : rm;
            R.at(x, rp, a) = R.at(rp, x, a) = 1;
            R.at(x, rm, b) = R.at(rm, x, b) = 1;
        }
    for (int64_t i = 0; i < n; ++i) {
        R.at(rp, rp, i) = R.at(rm, rm, i) = 1;
        R.at(rp, rm, i + n) = R.at(rm, rp, i + n) = 1;
    }
    return R;
}

FusionRing gen_mp_fusion_ring(const FinAbGroup& G) {
    if (G.order() % 2 == 0) throw Unsupported("generalized metaplectic rules need |G| odd");
    auto ps = positive_set(G);
    std::vector<std::string> labels{"1", "alpha", "rho", "alpha_rho"};
    std::map<int64_t, size_t> sig;
    for (auto h : ps.positive) {
        sig[h] = labels.size();
        labels.push_back("sigma[" + elem_str(G.element(h)) + "]");
    }
    FusionRing R(labels);
    const size_t one = 0, al = 1, rho = 2, arho = 3;
    auto set_sym = [&](size_t i, size_t j, size_t k, int64_t v) { R.at(i, j, k) += v; if (i != j) R.at(j, i, k) += v; };
    for (size_t j = 0; j < R.rank(); ++j) R.at(one, j, j) = R.at(j, one, j) = 1;
    R.at(one, one, one) = 1;
    set_sym(al, al, one, 1);
    set_sym(al, rho, arho, 1);
    set_sym(al, arho, rho, 1);
    for (auto [h, s] : sig) set_sym(al, s, s, 1);
    // rho^2 = 1 + sum sigma; rho*alpha_rho = alpha + sum sigma; (alpha rho)^2 = 1 + sum sigma
    set_sym(rho, rho, one, 1);
    set_sym(arho, arho, one, 1);
    set_sym(rho, arho, al, 1);
    for (auto [h, s] : sig) {
        set_sym(rho, rho, s, 1);
        set_sym(arho, arho, s, 1);
        set_sym(rho, arho, s, 1);
        set_sym(rho, s, rho, 1);
        set_sym(rho, s, arho, 1);
        set_sym(arho, s, rho, 1);
        set_sym(arho, s, arho, 1);
    }
    for (auto [g, sg] : sig)
        for (auto [h, sh] : sig) {
            if (h < g) continue;
            Elem x = G.element(g), y = G.element(h);
            if (g == h) {
                R.at(sg, sg, one) += 1;
                R.at(sg, sg, al) += 1;
                R.at(sg, sg, sig.at(ps.fold[G.index(G.add(x, x))])) += 1;
            } else {
                set_sym(sg, sh, sig.at(ps.fold[G.index(G.add(x, y))]), 1);
                set_sym(sg, sh, sig.at(ps.fold[G.index(G.sub(x, y))]), 1);
            }
        }
    return R;
}

bool same_fusion_rules(const FusionRing& a, const FusionRing& b, const std::map<std::string, std::string>& rename) {
    if (a.rank() != b.rank()) return false;
    std::vector<size_t> m(a.rank());
    for (size_t i = 0; i < a.rank(); ++i) {
        auto it = rename.find(a.labels[i]);
        const std::string& name = it == rename.end() ? a.labels[i] : it->second;
        auto pos = std::find(b.labels.begin(), b.labels.end(), name);
        if (pos == b.labels.end()) return false;
        m[i] = static_cast<size_t>(pos - b.labels.begin());
    }
    for (size_t i = 0; i < a.rank(); ++i)
        for (size_t j = 0; j < a.rank(); ++j)
            for (size_t k = 0; k < a.rank(); ++k)
                if (a(i, j, k) != b(m[i], m[j], m[k])) return false;
    return true;
}

// ---------------- hypergroups

size_t Hypergroup::index_of(const std::string& name) const {
    auto it = std::find(elements.begin(), elements.end(), name);
    if (it == elements.end()) throw InvalidArgument("unknown hypergroup element " + name);
    return static_cast<size_t>(it - elements.begin());
}

HypergroupReport check_hypergroup(const Hypergroup& h) {
    HypergroupReport rep;
    size_t r = h.rank();
    for (size_t k = 0; k < r; ++k)
        for (size_t l = 0; l < r; ++l) {
            Rational s = 0;
            for (size_t n = 0; n < r; ++n) {
                if (h(k, l, n) < 0) rep.convex = false;
                s += h(k, l, n);
            }
            if (s != 1) {
                rep.convex = false;
                rep.failures.push_back("row " + h.elements[k] + "*" + h.elements[l] + " does not sum to 1");
            }
            bool has_unit = h(k, l, 0) > 0;
            if (has_unit != (l == h.star[k])) {
                rep.antipode = false;
                rep.failures.push_back("antipode law fails for " + h.elements[k] + "*" + h.elements[l]);
            }
        }
    for (size_t k = 0; k < r; ++k)
        for (size_t n = 0; n < r; ++n) {
            Rational want = k == n ? 1 : 0;
            if (h(0, k, n) != want || h(k, 0, n) != want) {
                rep.unit = false;
                rep.failures.push_back("unit law fails at " + h.elements[k]);
            }
        }
    for (size_t a = 0; a < r && rep.associative; ++a)
        for (size_t b = 0; b < r && rep.associative; ++b)
            for (size_t c = 0; c < r && rep.associative; ++c)
                for (size_t n = 0; n < r; ++n) {
                    Rational lhs = 0, rhs = 0;
                    for (size_t m = 0; m < r; ++m) {
                        if (h(a, b, m) != 0) lhs += h(a, b, m) * h(m, c, n);
                        if (h(b, c, m) != 0) rhs += h(b, c, m) * h(a, m, n);
                    }
                    if (lhs != rhs) {
                        rep.associative = false;
                        rep.failures.push_back("associativity fails at " + h.elements[a] + "," + h.elements[b] + "," +
                                               h.elements[c]);
                        break;
                    }
                }
    return rep;
}

Hypergroup ty_hypergroup(const FinAbGroup& G) {
    int64_t n = G.order();
    Hypergroup h;
    for (int64_t i = 0; i < n; ++i) h.elements.push_back("g[" + elem_str(G.element(i)) + "]");
    h.elements.push_back("tau");
    size_t r = h.rank(), tau = n;
    h.lambda.assign(r * r * r, Rational(0));
    h.star.resize(r);
    for (int64_t i = 0; i < n; ++i) {
        Elem g = G.element(i);
        h.star[i] = G.index(G.neg(g));
        for (int64_t j = 0; j < n; ++j) h.at(i, j, G.index(G.add(g, G.element(j)))) = 1;
        h.at(i, tau, tau) = h.at(tau, i, tau) = 1;
        h.at(tau, tau, i) = Rational(1, n);
    }
    h.star[tau] = tau;
    return h;
}

Hypergroup hypergroup_from_fusion(const FusionRing& R, const std::vector<int64_t>& d2) {
    size_t r = R.rank();
    if (d2.size() != r) throw InvalidArgument("one squared dimension per label expected");
    Hypergroup h;
    h.elements = R.labels;
    h.star = R.dual;
    h.lambda.assign(r * r * r, Rational(0));
    for (size_t k = 0; k < r; ++k)
        for (size_t l = 0; l < r; ++l)
            for (size_t n = 0; n < r; ++n) {
                int64_t m = R(k, l, n);
                if (m == 0) continue;
                Rational sq = Rational(d2[n]) / Rational(d2[k] * d2[l]);
                BigInt a = numerator(sq), b = denominator(sq);
                BigInt ra = sqrt(a), rb = sqrt(b);
                if (ra * ra != a || rb * rb != b)
                    throw InvalidArgument("normalized structure constant is irrational at " + R.labels[k] + "*" +
                                          R.labels[l]);
                h.at(k, l, n) = Rational(m) * Rational(ra, rb);
            }
    return h;
}

DualHypergroup ty_dual_hypergroup_and_table(const FinAbGroup& G) {
    if (G.order() % 2 == 0) throw Unsupported("TY dual hypergroup needs |G| odd");
    int64_t n = G.order();
    DualHypergroup out;
    out.primal = ty_hypergroup(G);
    Hypergroup& d = out.dual;
    d.elements = {"1", "eps"};
    for (int64_t i = 1; i < n; ++i) d.elements.push_back("c[" + elem_str(G.element(i)) + "]");
    size_t r = d.rank();
    d.lambda.assign(r * r * r, Rational(0));
    d.star.resize(r);
    auto cidx = [&](int64_t chi) -> size_t { return static_cast<size_t>(chi + 1); };
    d.star[0] = 0;
    d.star[1] = 1;
    for (int64_t i = 1; i < n; ++i) d.star[cidx(i)] = cidx(G.index(G.neg(G.element(i))));
    for (size_t k = 0; k < r; ++k) d.at(0, k, k) = d.at(k, 0, k) = 1;
    d.at(1, 1, 0) = 1;
    for (int64_t i = 1; i < n; ++i) d.at(1, cidx(i), cidx(i)) = d.at(cidx(i), 1, cidx(i)) = 1;
    for (int64_t i = 1; i < n; ++i)
        for (int64_t j = 1; j < n; ++j) {
            int64_t s = G.index(G.add(G.element(i), G.element(j)));
            if (s == 0) {
                d.at(cidx(i), cidx(j), 0) = Rational(1, 2);
                d.at(cidx(i), cidx(j), 1) = Rational(1, 2);
            } else {
                d.at(cidx(i), cidx(j), cidx(s)) = 1;
            }
        }
    CharTable& t = out.table;
    t.rows = d.elements;
    t.cols = out.primal.elements;
    for (int64_t i = 0; i < n; ++i) t.weights.push_back(Rational(1));
    t.weights.push_back(Rational(n));
    // rows: trivial, eps, then chi(g) with 0 on tau
    for (size_t c = 0; c < t.cols.size(); ++c) t.entries.push_back(CycNum(1));
    for (size_t c = 0; c < t.cols.size(); ++c) t.entries.push_back(CycNum(c + 1 == t.cols.size() ? -1 : 1));
    for (int64_t i = 1; i < n; ++i) {
        for (int64_t j = 0; j < n; ++j)
            t.entries.push_back(CycNum::from_root(character_pairing(G, G.element(i), G.element(j))));
        t.entries.push_back(CycNum(0));
    }
    return out;
}

CharTableReport check_char_table(const DualHypergroup& D) {
    CharTableReport rep;
    const auto& t = D.table;
    size_t nr = t.rows.size(), nc = t.cols.size();
    for (size_t c = 0; c < nc; ++c)
        if (!(t(0, c) == CycNum(1))) rep.first_row_trivial = false;
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = i + 1; j < nr; ++j) {
            CycNum s;
            for (size_t c = 0; c < nc; ++c) s += CycNum(t.weights[c]) * t(i, c) * t(j, c).conj();
            if (!s.is_zero()) {
                rep.orthogonal = false;
                rep.failures.push_back("rows " + t.rows[i] + " and " + t.rows[j] + " are not orthogonal");
            }
        }
    const auto& K = D.primal;
    for (size_t i = 0; i < nr; ++i)
        for (size_t k = 0; k < nc; ++k)
            for (size_t l = 0; l < nc; ++l) {
                CycNum rhs;
                for (size_t m = 0; m < nc; ++m)
                    if (K(k, l, m) != 0) rhs += CycNum(K(k, l, m)) * t(i, m);
                if (!(t(i, k) * t(i, l) == rhs)) {
                    rep.rows_are_characters = false;
                    rep.failures.push_back("row " + t.rows[i] + " is not multiplicative at " + K.elements[k] + "," +
                                           K.elements[l]);
                }
            }
    const auto& Kd = D.dual;
    for (size_t c = 0; c < nc; ++c)
        for (size_t a = 0; a < nr; ++a)
            for (size_t b = 0; b < nr; ++b) {
                CycNum rhs;
                for (size_t m = 0; m < nr; ++m)
                    if (Kd(a, b, m) != 0) rhs += CycNum(Kd(a, b, m)) * t(m, c);
                if (!(t(a, c) * t(b, c) == rhs)) {
                    rep.cols_are_characters = false;
                    rep.failures.push_back("column " + t.cols[c] + " is not a character of the dual at " +
                                           Kd.elements[a] + "," + Kd.elements[b]);
                }
            }
    return rep;
}

}  // namespace tycat
