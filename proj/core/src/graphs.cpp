#include "tycat/graphs.hpp"

#include <numeric>
#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "tycat/error.hpp"

namespace tycat {

std::vector<size_t> BipartiteGraph::even_degrees() const {
    std::vector<size_t> d(even.size(), 0);
    for (const auto& e : edges) ++d[e.first];
    return d;
}

std::vector<size_t> BipartiteGraph::odd_degrees() const {
    std::vector<size_t> d(odd.size(), 0);
    for (const auto& e : edges) ++d[e.second];
    return d;
}

bool BipartiteGraph::has_multi_edges() const {
    std::set<std::pair<size_t, size_t>> s(edges.begin(), edges.end());
    return s.size() != edges.size();
}

bool BipartiteGraph::connected() const {
    size_t ne = even.size(), n = ne + odd.size();
    if (n == 0) return true;
    std::vector<std::vector<size_t>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(ne + b);
        adj[ne + b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::queue<size_t> q;
    q.push(0);
    seen[0] = 1;
    size_t count = 1;
    while (!q.empty()) {
        size_t v = q.front();
        q.pop();
        for (size_t w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == n;
}

namespace {

void require_odd(const FinAbGroup& A) {
    if (A.order() % 2 == 0) throw Unsupported("graphs are only built for |A| odd");
}

}  // namespace

BipartiteGraph lr_dual_principal_graph(const FinAbGroup& A) {
    require_odd(A);
    int64_t n = A.order();
    auto ps = positive_set(A);
    BipartiteGraph G;
    std::vector<size_t> id_v(n), alpha_v(n);
    std::vector<std::vector<size_t>> sigma_v(n, std::vector<size_t>(n, 0));
    for (int64_t g = 0; g < n; ++g) {
        std::string gs = elem_str(A.element(g));
        id_v[g] = G.even.size();
        G.even.push_back("(id," + gs + ")");
        alpha_v[g] = G.even.size();
        G.even.push_back("(alpha," + gs + ")");
        for (int64_t h : ps.positive) {
            sigma_v[h][g] = G.even.size();
            G.even.push_back("(sigma[" + elem_str(A.element(h)) + "]," + gs + ")");
        }
        G.odd.push_back("iota(id," + gs + ")");
    }
    for (int64_t g = 0; g < n; ++g) {
        G.edges.emplace_back(id_v[g], g);
        G.edges.emplace_back(alpha_v[g], g);
        for (int64_t h = 0; h < n; ++h) {
            if (h == g) continue;
            int64_t d = ps.fold[A.index(A.sub(A.element(g), A.element(h)))];
            G.edges.emplace_back(sigma_v[d][h], g);
        }
    }
    G.star = id_v[0];
    if (G.has_multi_edges()) throw Error("internal", "graph builder produced a multi-edge");
    return G;
}

BipartiteGraph lr_principal_graph(const FinAbGroup& A) {
    require_odd(A);
    int64_t n = A.order();
    BipartiteGraph G;
    for (int64_t g = 0; g < n; ++g)
        for (int64_t h = 0; h < n; ++h)
            G.even.push_back("(" + elem_str(A.element(g)) + "|" + elem_str(A.element(h)) + ")");
    size_t rho = G.even.size();
    G.even.push_back("(rho,rho)");
    for (int64_t g = 0; g < n; ++g) G.odd.push_back("iota(id," + elem_str(A.element(g)) + ")");
    for (int64_t g = 0; g < n; ++g) {
        for (int64_t h = 0; h < n; ++h) {
            int64_t hg = A.index(A.add(A.element(h), A.element(g)));
            G.edges.emplace_back(static_cast<size_t>(h * n + hg), g);
        }
        G.edges.emplace_back(rho, g);
    }
    G.star = 0;
    if (G.has_multi_edges()) throw Error("internal", "graph builder produced a multi-edge");
    return G;
}

std::string emit_dot(const BipartiteGraph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (size_t i = 0; i < g.even.size(); ++i)
        os << "  e" << i << " [label=\"" << g.even[i] << (i == g.star ? " *" : "")
           << "\", shape=circle, style=filled];\n";
    for (size_t i = 0; i < g.odd.size(); ++i) os << "  o" << i << " [label=\"" << g.odd[i] << "\", shape=circle];\n";
    auto edges = g.edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) os << "  e" << a << " -- o" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace tycat
