#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tycat/abgroup.hpp"
#include "tycat/cycnum.hpp"
#include "tycat/fusion.hpp"
#include "tycat/quadform.hpp"

namespace tycat {

struct Label {
    enum class Kind { Pointed, TYPt, TYRho, TYSigma, MPUnit, MPAlpha, MPRho, MPSigma, Product };
    Kind kind = Kind::Pointed;
    Elem g, h;
    int i = 0;
    std::vector<Label> parts;

    std::string str() const;
    bool operator==(const Label& o) const = default;
};

struct ModularData {
    std::vector<Label> labels;
    CycMatrix S;
    std::vector<CycNum> T;
    Rational c_top = 0;  // mod 8, in [0,8)
    std::optional<std::vector<int>> grading;

    size_t rank() const { return labels.size(); }
    size_t index_of(const std::string& label) const;
    std::vector<CycNum> dims() const;    // S_{l,0}/S_{0,0}
    std::vector<CycNum> twists() const;  // T_l/T_0
    std::vector<size_t> charge_conjugation() const;  // from S^2; throws if not a permutation
};

struct InvariantReport {
    bool symmetric = false;
    bool unitary = false;
    bool charge_perm = false;
    bool tstst = false;
    bool st_cubed = false;
    bool csc = false;
    bool ctc = false;
    bool t_roots = false;
    bool dims_positive = false;
    bool verlinde = false;
    bool gauss = false;
    std::vector<std::string> failures;
    bool ok() const {
        return symmetric && unitary && charge_perm && tstst && st_cubed && csc && ctc && t_roots && dims_positive &&
               verlinde && gauss;
    }
};

InvariantReport check_invariants(const ModularData& md);
void validate(const ModularData& md);  // throws ModularityViolation

Rational mod8(const Rational& c);

ModularData pointed_md(const QuadForm& theta);
ModularData pointed_md(const MetricGroup& m);
ModularData ty_center_md(const Bichar& b, int sign);
ModularData mp_md(const Bichar& b, int sign);

FusionRing verlinde_fusion(const ModularData& md);
int bantay_fs(const ModularData& md, size_t label);
int bantay_fs(const ModularData& md, const FusionRing& ring, size_t label);

ModularData tensor_md(const ModularData& a, const ModularData& b);
ModularData reverse_md(const ModularData& a);
ModularData hat_twist(const ModularData& md);

struct MDEquivalence {
    std::vector<size_t> perm;  // label i of a -> perm[i] of b
    int zeta_power = 0;        // zeta = exp(2 pi i k/3)
};
size_t default_max_rank();  // 40 unless TYCAT_MAX_RANK is set
std::optional<MDEquivalence> md_equivalent(const ModularData& a, const ModularData& b, size_t max_rank = 0);

struct BranchingMatrix {
    size_t rows = 0, cols = 0;
    std::vector<int64_t> B;  // parent x child
    int zeta_power = 0;
    int64_t operator()(size_t i, size_t j) const { return B[i * cols + j]; }
};
std::optional<BranchingMatrix> verify_condensation(const ModularData& parent, const ModularData& child,
                                                   const std::vector<size_t>& bosons, int64_t node_budget = 50000000);

std::vector<ModularData> classify_mp(const FinAbGroup& G);

}  // namespace tycat
