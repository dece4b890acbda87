#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tycat/cycnum.hpp"

namespace tycat {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows);
    static IntMatrix identity(size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<int64_t>>& rows);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    BigInt& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const BigInt& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& o) const = default;
    BigInt det() const;  // Bareiss, square only
    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    std::string str() const;

private:
    size_t r_ = 0, c_ = 0;
    std::vector<BigInt> a_;
};

struct SmithForm {
    IntMatrix D, U, V;  // U * M * V = D
};
SmithForm smith_normal_form(const IntMatrix& M);

// Row Hermite normal form of the row lattice; zero rows dropped.
IntMatrix hermite_normal_form(const IntMatrix& M);

using Elem = std::vector<int64_t>;
std::string elem_str(const Elem& g);  // "1,2"

class FinAbGroup {
public:
    FinAbGroup() = default;  // trivial group
    explicit FinAbGroup(std::vector<int64_t> invariant_factors);

    const std::vector<int64_t>& factors() const { return d_; }
    size_t rank() const { return d_.size(); }
    int64_t order() const { return order_; }
    int64_t exponent() const { return d_.empty() ? 1 : d_.back(); }

    int64_t index(const Elem& x) const;
    Elem element(int64_t idx) const;
    Elem zero() const { return Elem(d_.size(), 0); }
    Elem generator(size_t i) const;
    Elem reduce(Elem x) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem scale(const Elem& a, int64_t k) const;
    int64_t elem_order(const Elem& a) const;
    std::vector<Elem> elements() const;

    bool operator==(const FinAbGroup& o) const { return d_ == o.d_; }
    std::string str() const;

private:
    std::vector<int64_t> d_;
    int64_t order_ = 1;
};

// Isomorphism from a product of cyclic groups (given orders) onto its invariant-factor form.
struct CyclicIso {
    std::vector<int64_t> source_orders;
    FinAbGroup target;
    std::vector<std::vector<int64_t>> U;  // target.rank() x source_orders.size()
    Elem apply(const Elem& x) const;
};
CyclicIso group_from_cyclic(const std::vector<int64_t>& orders);

struct PositiveSet {
    std::vector<int64_t> positive;  // element indices, increasing
    std::vector<int64_t> fold;      // index -> index of |g|
    std::vector<bool> is_positive;
};
PositiveSet positive_set(const FinAbGroup& G);

struct Automorphism {
    std::vector<Elem> images;  // image of each generator
    Elem apply(const FinAbGroup& G, const Elem& x) const;
};
std::vector<Automorphism> aut_group_enumerate(const FinAbGroup& G, int64_t bound = 10000);

// dual group is G itself with chi_h(g) = exp(2 pi i sum h_i g_i / d_i)
FinAbGroup character_group(const FinAbGroup& G);
RootOfUnity character_pairing(const FinAbGroup& G, const Elem& chi, const Elem& g);

// subgroups as sorted element-index lists
std::vector<int64_t> generated_subgroup(const FinAbGroup& G, const std::vector<Elem>& gens);
std::vector<std::vector<int64_t>> all_subgroups(const FinAbGroup& G, int64_t max_order = 4096);

}  // namespace tycat
