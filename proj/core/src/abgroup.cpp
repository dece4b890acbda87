#include "tycat/abgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "tycat/error.hpp"

namespace tycat {

// ---------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
        if (row.size() != c_) throw InvalidArgument("ragged matrix");
        for (auto v : row) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int64_t>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.c_) throw InvalidArgument("ragged matrix");
        for (size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (c_ != o.r_) throw InvalidArgument("matrix shape mismatch");
    IntMatrix r(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const BigInt& x = (*this)(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < o.c_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

BigInt IntMatrix::det() const {
    if (r_ != c_) throw InvalidArgument("det of non-square matrix");
    size_t n = r_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    BigInt prev = 1;
    int sgn = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sgn = -sgn;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sgn * m(n - 1, n - 1);
}

void IntMatrix::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < r_; ++i) {
        os << (i ? ",[" : "[");
        for (size_t j = 0; j < c_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

// row op: row_i += q*row_j on both A and U
void add_row(IntMatrix& A, size_t i, size_t j, const BigInt& q) {
    for (size_t k = 0; k < A.cols(); ++k) A(i, k) += q * A(j, k);
}
void add_col(IntMatrix& A, size_t i, size_t j, const BigInt& q) {
    for (size_t k = 0; k < A.rows(); ++k) A(k, i) += q * A(k, j);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
    size_t m = M.rows(), n = M.cols();
    IntMatrix D = M, U = IntMatrix::identity(m), V = IntMatrix::identity(n);
    size_t t = 0;
    while (t < std::min(m, n)) {
        // pivot: smallest nonzero |entry| in the remaining block
        bool found = false;
        size_t pi = t, pj = t;
        BigInt best;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (D(i, j) != 0 && (!found || abs(D(i, j)) < best)) {
                    found = true;
                    best = abs(D(i, j));
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        D.swap_rows(t, pi);
        U.swap_rows(t, pi);
        D.swap_cols(t, pj);
        V.swap_cols(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                BigInt q = floor_div(D(i, t), D(t, t));
                add_row(D, i, t, -q);
                add_row(U, i, t, -q);
                if (D(i, t) != 0) {
                    D.swap_rows(t, i);
                    U.swap_rows(t, i);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                BigInt q = floor_div(D(t, j), D(t, t));
                add_col(D, j, t, -q);
                add_col(V, j, t, -q);
                if (D(t, j) != 0) {
                    D.swap_cols(t, j);
                    V.swap_cols(t, j);
                    clean = false;
                }
            }
            if (clean) {
                // divisibility: pivot must divide the rest of the block
                for (size_t i = t + 1; i < m && clean; ++i)
                    for (size_t j = t + 1; j < n; ++j)
                        if (D(i, j) % D(t, t) != 0) {
                            add_row(D, t, i, 1);
                            add_row(U, t, i, 1);
                            clean = false;
                            break;
                        }
            }
        }
        if (D(t, t) < 0) {
            for (size_t k = 0; k < n; ++k) D(t, k) = -D(t, k);
            for (size_t k = 0; k < m; ++k) U(t, k) = -U(t, k);
        }
        ++t;
    }
    return {D, U, V};
}

IntMatrix hermite_normal_form(const IntMatrix& M) {
    IntMatrix A = M;
    size_t m = A.rows(), n = A.cols();
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        // gcd-eliminate column below row
        while (true) {
            size_t piv = m;
            for (size_t i = row; i < m; ++i)
                if (A(i, col) != 0 && (piv == m || abs(A(i, col)) < abs(A(piv, col)))) piv = i;
            if (piv == m) break;
            A.swap_rows(row, piv);
            bool done = true;
            for (size_t i = row + 1; i < m; ++i) {
                if (A(i, col) == 0) continue;
                BigInt q = floor_div(A(i, col), A(row, col));
                add_row(A, i, row, -q);
                if (A(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (row < m && A(row, col) != 0) {
            if (A(row, col) < 0)
                for (size_t k = 0; k < n; ++k) A(row, k) = -A(row, k);
            for (size_t i = 0; i < row; ++i) {
                BigInt q = floor_div(A(i, col), A(row, col));
                if (q != 0) add_row(A, i, row, -q);
            }
            ++row;
        }
    }
    IntMatrix H(row, n);
    for (size_t i = 0; i < row; ++i)
        for (size_t j = 0; j < n; ++j) H(i, j) = A(i, j);
    return H;
}

// ---------------- FinAbGroup

std::string elem_str(const Elem& g) {
    if (g.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < g.size(); ++k) s += (k ? "," : "") + std::to_string(g[k]);
    return s;
}

FinAbGroup::FinAbGroup(std::vector<int64_t> f) : d_(std::move(f)) {
    for (size_t i = 0; i < d_.size(); ++i) {
        if (d_[i] < 2) throw InvalidArgument("invariant factors must be >= 2");
        if (i > 0 && d_[i] % d_[i - 1] != 0) throw InvalidArgument("invariant factors must form a divisibility chain");
        if (order_ > (int64_t{1} << 40) / d_[i]) throw CapacityError("group order too large");
        order_ *= d_[i];
    }
}

int64_t FinAbGroup::index(const Elem& x) const {
    int64_t idx = 0;
    for (size_t i = 0; i < d_.size(); ++i) idx = idx * d_[i] + mod64(x[i], d_[i]);
    return idx;
}

Elem FinAbGroup::element(int64_t idx) const {
    Elem x(d_.size());
    for (size_t i = d_.size(); i-- > 0;) {
        x[i] = idx % d_[i];
        idx /= d_[i];
    }
    return x;
}

Elem FinAbGroup::generator(size_t i) const {
    Elem x = zero();
    x[i] = 1;
    return x;
}

Elem FinAbGroup::reduce(Elem x) const {
    for (size_t i = 0; i < d_.size(); ++i) x[i] = mod64(x[i], d_[i]);
    return x;
}

Elem FinAbGroup::add(const Elem& a, const Elem& b) const {
    Elem r(d_.size());
    for (size_t i = 0; i < d_.size(); ++i) r[i] = (a[i] + b[i]) % d_[i];
    return r;
}

Elem FinAbGroup::sub(const Elem& a, const Elem& b) const {
    Elem r(d_.size());
    for (size_t i = 0; i < d_.size(); ++i) r[i] = mod64(a[i] - b[i], d_[i]);
    return r;
}

Elem FinAbGroup::neg(const Elem& a) const { return sub(zero(), a); }

Elem FinAbGroup::scale(const Elem& a, int64_t k) const {
    Elem r(d_.size());
    for (size_t i = 0; i < d_.size(); ++i) r[i] = mod64(static_cast<int64_t>((static_cast<__int128>(a[i]) * k) % d_[i]), d_[i]);
    return r;
}

int64_t FinAbGroup::elem_order(const Elem& a) const {
    int64_t o = 1;
    for (size_t i = 0; i < d_.size(); ++i) o = std::lcm(o, d_[i] / std::gcd(a[i], d_[i]));
    return o;
}

std::vector<Elem> FinAbGroup::elements() const {
    std::vector<Elem> r;
    r.reserve(order_);
    for (int64_t i = 0; i < order_; ++i) r.push_back(element(i));
    return r;
}

std::string FinAbGroup::str() const {
    if (d_.empty()) return "Z1";
    std::string s;
    for (size_t i = 0; i < d_.size(); ++i) s += (i ? "xZ" : "Z") + std::to_string(d_[i]);
    return s;
}

CyclicIso group_from_cyclic(const std::vector<int64_t>& orders) {
    size_t r = orders.size();
    for (auto o : orders)
        if (o < 1) throw InvalidArgument("cyclic orders must be positive");
    IntMatrix M(r, r);
    for (size_t i = 0; i < r; ++i) M(i, i) = orders[i];
    auto sf = smith_normal_form(M);
    CyclicIso iso;
    iso.source_orders = orders;
    std::vector<int64_t> f;
    for (size_t i = 0; i < r; ++i) {
        int64_t d = static_cast<int64_t>(sf.D(i, i));
        if (d > 1) {
            f.push_back(d);
            std::vector<int64_t> row(r);
            for (size_t j = 0; j < r; ++j) row[j] = static_cast<int64_t>(sf.U(i, j) % d);
            iso.U.push_back(row);
        }
    }
    iso.target = FinAbGroup(f);
    return iso;
}

Elem CyclicIso::apply(const Elem& x) const {
    Elem y(U.size());
    const auto& d = target.factors();
    for (size_t i = 0; i < U.size(); ++i) {
        __int128 s = 0;
        for (size_t j = 0; j < x.size(); ++j) s += static_cast<__int128>(U[i][j]) * x[j];
        y[i] = mod64(static_cast<int64_t>(s % d[i]), d[i]);
    }
    return y;
}

PositiveSet positive_set(const FinAbGroup& G) {
    if (G.order() % 2 == 0) throw InvalidArgument("positive set needs |G| odd, got " + std::to_string(G.order()));
    PositiveSet ps;
    const auto& d = G.factors();
    ps.fold.resize(G.order());
    ps.is_positive.assign(G.order(), false);
    for (int64_t i = 0; i < G.order(); ++i) {
        Elem x = G.element(i);
        size_t k = 0;
        while (k < x.size() && x[k] == 0) ++k;
        if (k < x.size() && x[k] <= (d[k] - 1) / 2) {
            ps.is_positive[i] = true;
            ps.positive.push_back(i);
        }
    }
    for (int64_t i = 0; i < G.order(); ++i) ps.fold[i] = ps.is_positive[i] || i == 0 ? i : G.index(G.neg(G.element(i)));
    return ps;
}

Elem Automorphism::apply(const FinAbGroup& G, const Elem& x) const {
    Elem r = G.zero();
    for (size_t i = 0; i < x.size(); ++i) r = G.add(r, G.scale(images[i], x[i]));
    return r;
}

std::vector<Automorphism> aut_group_enumerate(const FinAbGroup& G, int64_t bound) {
    const auto& d = G.factors();
    std::vector<std::vector<Elem>> cand(d.size());
    for (int64_t i = 0; i < G.order(); ++i) {
        Elem x = G.element(i);
        int64_t o = G.elem_order(x);
        for (size_t k = 0; k < d.size(); ++k)
            if (o == d[k]) cand[k].push_back(x);
    }
    double total = 1;
    for (const auto& c : cand) total *= static_cast<double>(c.size());
    if (total > static_cast<double>(bound))
        throw CapacityError("automorphism candidates " + std::to_string(static_cast<int64_t>(total)) +
                            " exceed bound " + std::to_string(bound));
    std::vector<Automorphism> out;
    std::vector<size_t> pick(d.size(), 0);
    std::vector<char> seen(G.order());
    while (true) {
        Automorphism a;
        for (size_t k = 0; k < d.size(); ++k) a.images.push_back(cand[k][pick[k]]);
        std::fill(seen.begin(), seen.end(), 0);
        bool bij = true;
        for (int64_t i = 0; i < G.order() && bij; ++i) {
            int64_t j = G.index(a.apply(G, G.element(i)));
            if (seen[j]) bij = false;
            seen[j] = 1;
        }
        if (bij) out.push_back(std::move(a));
        size_t k = 0;
        while (k < d.size() && ++pick[k] == cand[k].size()) pick[k++] = 0;
        if (k == d.size()) break;
    }
    return out;
}

FinAbGroup character_group(const FinAbGroup& G) { return G; }

RootOfUnity character_pairing(const FinAbGroup& G, const Elem& chi, const Elem& g) {
    int64_t e = G.exponent();
    int64_t s = 0;
    const auto& d = G.factors();
    for (size_t i = 0; i < d.size(); ++i) s = mod64(s + (e / d[i]) * mod64(chi[i] * g[i], d[i]), e);
    return RootOfUnity(s, e);
}

namespace {

// H + <g> for a subgroup H (as index list)
std::vector<int64_t> join_cyclic(const FinAbGroup& G, const std::vector<int64_t>& H, const Elem& g) {
    std::vector<Elem> mult{G.zero()};
    for (Elem x = g; G.index(x) != 0; x = G.add(x, g)) mult.push_back(x);
    std::vector<char> in(G.order(), 0);
    std::vector<int64_t> out;
    for (auto h : H) {
        Elem x = G.element(h);
        for (const auto& m : mult) {
            int64_t k = G.index(G.add(x, m));
            if (!in[k]) {
                in[k] = 1;
                out.push_back(k);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<int64_t> generated_subgroup(const FinAbGroup& G, const std::vector<Elem>& gens) {
    std::vector<int64_t> H{0};
    for (const auto& g : gens) H = join_cyclic(G, H, G.reduce(g));
    return H;
}

std::vector<std::vector<int64_t>> all_subgroups(const FinAbGroup& G, int64_t max_order) {
    if (G.order() > max_order) throw CapacityError("subgroup enumeration bound " + std::to_string(max_order) + " exceeded");
    std::set<std::vector<int64_t>> seen{{0}};
    std::vector<std::vector<int64_t>> queue{{0}};
    for (size_t q = 0; q < queue.size(); ++q) {
        std::vector<char> in(G.order(), 0);
        for (auto h : queue[q]) in[h] = 1;
        for (int64_t g = 1; g < G.order(); ++g) {
            if (in[g]) continue;
            auto K = join_cyclic(G, queue[q], G.element(g));
            if (seen.insert(K).second) queue.push_back(std::move(K));
        }
    }
    std::sort(queue.begin(), queue.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return queue;
}

}  // namespace tycat
