#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tycat/abgroup.hpp"
#include "tycat/quadform.hpp"

namespace tycat {

class EvenLattice {
public:
    EvenLattice() = default;  // rank 0
    explicit EvenLattice(IntMatrix gram);

    const IntMatrix& gram() const { return gram_; }
    size_t rank() const { return gram_.rows(); }
    BigInt det() const { return gram_.det(); }

private:
    IntMatrix gram_;
};

EvenLattice named_lattice(const std::string& name);  // A1..A24, E6, E7, E8

struct DiscriminantForm {
    FinAbGroup group;
    std::vector<std::vector<Rational>> lifts;  // generator lifts in L* basis coordinates
    QuadForm q;
    std::vector<Rational> lift(const Elem& c) const;
};

DiscriminantForm discriminant_form(const EvenLattice& L);
EvenLattice orthogonal_sum(const EvenLattice& L, const EvenLattice& M);
// H given by generators in discriminant-group coordinates
EvenLattice glue(const EvenLattice& L, const std::vector<Elem>& H_generators);
std::optional<Automorphism> mirror_check(const EvenLattice& L, const EvenLattice& Lbar);
int64_t count_roots(const EvenLattice& L);
Rational norm(const EvenLattice& L, const std::vector<Rational>& x);

}  // namespace tycat
