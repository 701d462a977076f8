#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromcoh {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

struct GraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Multigraph with loops and an explicit edge order. The order fixes the
/// orientation of the state cube, so it is part of the value: two graphs are
/// equal iff they have the same vertex count and the same ordered edge list.
class Graph {
public:
    Graph() = default;
    Graph(int num_vertices, std::vector<Edge> edges);

    static Graph null_graph(int n) { return Graph(n, {}); }

    int num_vertices() const { return num_vertices_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }

    bool has_loop() const;
    int degree(Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int num_vertices_ = 0;
    std::vector<Edge> edges_;
};

/// Subset of a graph's edges; bit i set iff edge i is in the subset.
/// Limited to 63 edges, which is far beyond what the 2^n state cube allows.
class EdgeSubset {
public:
    static constexpr std::size_t kMaxEdges = 63;

    EdgeSubset() = default;
    EdgeSubset(std::size_t size, std::uint64_t bits);
    static EdgeSubset empty(std::size_t size) { return {size, 0}; }
    static EdgeSubset full(std::size_t size);

    std::size_t size() const { return size_; }
    std::uint64_t bits() const { return bits_; }
    bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
    int count() const { return __builtin_popcountll(bits_); }
    EdgeSubset with(std::size_t i) const { return {size_, bits_ | (std::uint64_t{1} << i)}; }

    friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

private:
    std::size_t size_ = 0;
    std::uint64_t bits_ = 0;
};

/// Connected components of the spanning subgraph [G:s]. Components are
/// numbered 0..count-1 in increasing order of their smallest vertex.
struct ComponentPartition {
    std::vector<int> component_of;
    int count = 0;

    /// Smallest vertex of each component.
    std::vector<Vertex> representatives() const;

    friend bool operator==(const ComponentPartition&, const ComponentPartition&) = default;
};

ComponentPartition spanning_components(const Graph& g, const EdgeSubset& s);
/// Components of the whole graph.
ComponentPartition components(const Graph& g);

Graph delete_edge(const Graph& g, std::size_t i);

struct Contraction {
    Graph graph;
    /// Old vertex index -> vertex index in the contracted graph.
    std::vector<Vertex> vertex_map;
    /// Set when the contracted edge was a loop; graph is then G - e.
    bool was_loop = false;
};

/// Merges the endpoints of edge i into the smaller index, renumbers the
/// vertices densely and keeps every other edge (including loops and
/// parallel edges created by the merge) in order.
Contraction contract_edge(const Graph& g, std::size_t i);

/// Edge i of g lands at position perm[i] of the result.
Graph permute_edges(const Graph& g, const std::vector<std::size_t>& perm);

/// Vertices of b are shifted past those of a; edges of a come first.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Keeps the first edge of every class of parallel edges (loops at the same
/// vertex included), preserving order.
Graph collapse_multi_edges(const Graph& g);

/// Line-oriented text format: "v <n>" then one "e <u> <v>" per edge, '#'
/// starts a comment line. Errors carry the offending line number.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph load_graph(const std::string& path);
std::string format_graph(const Graph& g);

}  // namespace chromcoh
