#ifndef INDATT_GRAPH_HPP
#define INDATT_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "indatt/poly.hpp"

namespace indatt {

class Graph6Error : public Error {
public:
    enum class Kind { Header, Byte, Size, Length, Padding };
    Graph6Error(Kind kind, const std::string& msg) : Error(msg), kind(kind) {}
    Kind kind;
};

class SizeError : public Error {
public:
    using Error::Error;
};

/// Simple undirected graph on 1..64 vertices.
/// One 64-bit adjacency row per vertex; rows are kept symmetric, loop-free,
/// and zero above the vertex count.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint64_t row(int v) const { return adj_[v]; }
    int degree(int v) const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    void check_pair(int u, int v) const;
};

Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Vertices of the product are pairs (u, v) in row-major order:
/// (u,v) ~ (u',v') iff u ~ u' in g, or u = u' and v ~ v' in h.
Graph lexicographic_product(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);

struct GraphStats {
    int vertex_count = 0;
    long long edge_count = 0;
    long long triangle_count = 0;
    long long k4_count = 0;
    std::vector<int> degrees;
    long long degree_sq_sum = 0;
    /// Pairs (edge, vertex adjacent to neither endpoint): induced P2 u K1 count.
    long long edge_far_pair_count = 0;
    /// Two-edge paths whose endpoints are non-adjacent.
    long long open_wedge_count = 0;
};

GraphStats graph_stats(const Graph& g);

/// Isomorphism-invariant byte string: two graphs have equal canonical forms
/// iff they are isomorphic. Degree/neighborhood refinement plus backtracking
/// over the remaining cells; capped at 16 vertices.
std::string canonical_form(const Graph& g);
/// The canonically relabeled graph itself (canonical_form is its graph6 line).
Graph canonical_graph(const Graph& g);

/// Independence polynomial: coefficient i counts the independent sets of
/// cardinality i. Branches on a maximum-degree vertex with
/// I_G = I_{G-v} + z * I_{G-N[v]}, memoized on the surviving vertex set,
/// with connected components handled multiplicatively.
IntPoly independence_polynomial(const Graph& g);

/// Independent oracle for the above: direct enumeration over all vertex
/// subsets. Capped at 24 vertices.
IntPoly independence_polynomial_subsets(const Graph& g);

/// Multi-word variant used only where products exceed 64 vertices
/// (capped at 256).
class WideGraph {
public:
    WideGraph(int n);
    int order() const { return n_; }
    int words() const { return words_; }
    const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> rows_;
};

WideGraph lexicographic_product_wide(const Graph& g, const Graph& h);
IntPoly independence_polynomial(const WideGraph& g);

} // namespace indatt

#endif
