#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tycat/abgroup.hpp"
#include "tycat/cycnum.hpp"

namespace tycat {

struct FusionRing {
    FusionRing() = default;
    explicit FusionRing(std::vector<std::string> labels);

    std::vector<std::string> labels;
    std::vector<int64_t> N;    // N[(i*r + j)*r + k] = N_{ij}^k
    std::vector<size_t> dual;  // k -> k-bar; unit is index 0

    size_t rank() const { return labels.size(); }
    int64_t operator()(size_t i, size_t j, size_t k) const { return N[(i * rank() + j) * rank() + k]; }
    int64_t& at(size_t i, size_t j, size_t k) { return N[(i * rank() + j) * rank() + k]; }
    size_t index_of(const std::string& name) const;
    // sum_k N_{ij}^k [k] as (label, multiplicity), nonzero only
    std::vector<std::pair<size_t, int64_t>> product(size_t i, size_t j) const;
};

struct FusionReport {
    bool unit_ok = true;
    bool associative = true;
    bool frobenius_ok = true;
    bool dual_ok = true;
    std::vector<std::string> failures;
    std::vector<double> fp_dims;  // advisory, Perron-Frobenius
    double global_fp_dim = 0;
    std::optional<int64_t> global_dim_exact;
    bool ok() const { return unit_ok && associative && frobenius_ok && dual_ok; }
};

FusionReport check_fusion_ring(const FusionRing& r);

FusionRing ty_fusion_ring(const FinAbGroup& G);
FusionRing gen_ty_fusion_ring(const FinAbGroup& A);
FusionRing gen_mp_fusion_ring(const FinAbGroup& G);

// a's labels renamed through `rename` (identity for absent names) must give b exactly
bool same_fusion_rules(const FusionRing& a, const FusionRing& b, const std::map<std::string, std::string>& rename = {});

struct Hypergroup {
    std::vector<std::string> elements;
    std::vector<Rational> lambda;  // lambda[(k*r + l)*r + n]
    std::vector<size_t> star;
    size_t rank() const { return elements.size(); }
    const Rational& operator()(size_t k, size_t l, size_t n) const { return lambda[(k * rank() + l) * rank() + n]; }
    Rational& at(size_t k, size_t l, size_t n) { return lambda[(k * rank() + l) * rank() + n]; }
    size_t index_of(const std::string& name) const;
};

struct HypergroupReport {
    bool convex = true;
    bool antipode = true;
    bool unit = true;
    bool associative = true;
    std::vector<std::string> failures;
    bool ok() const { return convex && antipode && unit && associative; }
};

HypergroupReport check_hypergroup(const Hypergroup& h);
Hypergroup ty_hypergroup(const FinAbGroup& G);
// lambda_{kl}^n = N_{kl}^n d_n / (d_k d_l); dims given through their squares
Hypergroup hypergroup_from_fusion(const FusionRing& r, const std::vector<int64_t>& dim_squares);

struct CharTable {
    std::vector<std::string> rows;  // dual hypergroup elements
    std::vector<std::string> cols;  // hypergroup elements
    std::vector<CycNum> entries;    // row-major
    std::vector<Rational> weights;  // per column
    const CycNum& operator()(size_t i, size_t j) const { return entries[i * cols.size() + j]; }
};

struct DualHypergroup {
    Hypergroup primal;
    Hypergroup dual;
    CharTable table;
};

DualHypergroup ty_dual_hypergroup_and_table(const FinAbGroup& G);

struct CharTableReport {
    bool first_row_trivial = true;
    bool orthogonal = true;
    bool rows_are_characters = true;
    bool cols_are_characters = true;
    std::vector<std::string> failures;
    bool ok() const { return first_row_trivial && orthogonal && rows_are_characters && cols_are_characters; }
};
CharTableReport check_char_table(const DualHypergroup& d);

}  // namespace tycat
