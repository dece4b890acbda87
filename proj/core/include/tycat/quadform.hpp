#pragma once

#include <optional>
#include <vector>

#include "tycat/abgroup.hpp"
#include "tycat/cycnum.hpp"

namespace tycat {

class QuadForm {
public:
    QuadForm() : values_{RootOfUnity()} {}
    // values indexed by element index; checks q(0) = 1 and that dq is a bicharacter
    QuadForm(FinAbGroup G, std::vector<RootOfUnity> values);
    // q(x) = exp(2 pi i sum_i a_i x_i^2 / d_i) on a cyclic decomposition in invariant form
    static QuadForm diagonal(const FinAbGroup& G, const std::vector<int64_t>& a);

    const FinAbGroup& group() const { return G_; }
    const std::vector<RootOfUnity>& values() const { return values_; }
    const RootOfUnity& operator()(const Elem& g) const { return values_[G_.index(g)]; }
    const RootOfUnity& at(int64_t idx) const { return values_[idx]; }
    RootOfUnity dq(const Elem& g, const Elem& h) const;
    bool nondegenerate() const;
    QuadForm conj() const;
    // full check of q(ng) = q(g)^{n^2} and bimultiplicativity of dq
    bool is_quadratic() const;
    bool operator==(const QuadForm& o) const = default;

private:
    FinAbGroup G_;
    std::vector<RootOfUnity> values_;
};

class Bichar {
public:
    Bichar() = default;
    // gen(i,j) = b(e_i, e_j)
    Bichar(FinAbGroup G, std::vector<std::vector<RootOfUnity>> gen);

    const FinAbGroup& group() const { return G_; }
    const std::vector<std::vector<RootOfUnity>>& generator_values() const { return B_; }
    RootOfUnity operator()(const Elem& g, const Elem& h) const;
    bool nondegenerate() const;
    bool operator==(const Bichar& o) const = default;

private:
    FinAbGroup G_;
    std::vector<std::vector<RootOfUnity>> B_;
};

struct MetricGroup {
    QuadForm q;
    std::optional<Bichar> b;
    const FinAbGroup& group() const { return q.group(); }
};

MetricGroup make_metric(const QuadForm& q);  // attaches b when |G| is odd

Bichar bichar_from_qform(const QuadForm& q);
QuadForm qform_from_bichar(const Bichar& b);
Rational gauss_central_charge(const QuadForm& q);  // c mod 8 in [0,8)

std::optional<Automorphism> metric_equiv(const MetricGroup& m1, const MetricGroup& m2, int64_t node_budget = 10000000);
std::optional<Automorphism> qform_equiv(const QuadForm& q1, const QuadForm& q2, int64_t node_budget = 10000000);

std::vector<MetricGroup> classify_metric_groups(const FinAbGroup& G);
MetricGroup direct_sum(const MetricGroup& m1, const MetricGroup& m2);
QuadForm direct_sum(const QuadForm& q1, const QuadForm& q2);
std::vector<std::vector<int64_t>> lagrangian_subgroups(const MetricGroup& m);

struct MetricDouble {
    MetricGroup canonical;  // (A + A^, chi(a))
    MetricGroup sum;        // (A + A, q + conj q)
    std::optional<Automorphism> witness;
};
MetricDouble metric_double(const FinAbGroup& A, const QuadForm& q);

int64_t smallest_nonresidue(int64_t p);

}  // namespace tycat
