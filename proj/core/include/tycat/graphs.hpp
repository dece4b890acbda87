#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tycat/abgroup.hpp"

namespace tycat {

struct BipartiteGraph {
    std::vector<std::string> even, odd;
    std::vector<std::pair<size_t, size_t>> edges;  // (even index, odd index)
    size_t star = 0;                               // distinguished even vertex

    std::vector<size_t> even_degrees() const;
    std::vector<size_t> odd_degrees() const;
    bool connected() const;
    bool has_multi_edges() const;
};

BipartiteGraph lr_dual_principal_graph(const FinAbGroup& A);
BipartiteGraph lr_principal_graph(const FinAbGroup& A);

std::string emit_dot(const BipartiteGraph& g);

}  // namespace tycat
