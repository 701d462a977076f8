#include "chromcoh/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace chromcoh {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

ComponentPartition canonical_partition(DisjointSets& ds, int n) {
    ComponentPartition p;
    p.component_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> id_of_root(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int r = ds.find(v);
        if (id_of_root[r] < 0) id_of_root[r] = p.count++;
        p.component_of[v] = id_of_root[r];
    }
    return p;
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<Edge> edges) : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices_ < 0) throw GraphError("negative vertex count");
    for (const auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
}

bool Graph::has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.first == e.second; });
}

int Graph::degree(Vertex v) const {
    int d = 0;
    for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
    return d;
}

EdgeSubset::EdgeSubset(std::size_t size, std::uint64_t bits) : size_(size), bits_(bits) {
    if (size > kMaxEdges) throw GraphError("edge subsets support at most 63 edges");
    if (size < 64 && (bits >> size) != 0) throw GraphError("edge subset has bits beyond its length");
}

EdgeSubset EdgeSubset::full(std::size_t size) {
    if (size > kMaxEdges) throw GraphError("edge subsets support at most 63 edges");
    return {size, size == 0 ? 0 : (~std::uint64_t{0} >> (64 - size))};
}

std::vector<Vertex> ComponentPartition::representatives() const {
    std::vector<Vertex> reps(static_cast<std::size_t>(count), -1);
    for (std::size_t v = 0; v < component_of.size(); ++v)
        if (reps[component_of[v]] < 0) reps[component_of[v]] = static_cast<Vertex>(v);
    return reps;
}

ComponentPartition spanning_components(const Graph& g, const EdgeSubset& s) {
    if (s.size() != g.num_edges()) throw GraphError("edge subset length does not match edge count");
    DisjointSets ds(g.num_vertices());
    for (std::size_t i = 0; i < g.num_edges(); ++i)
        if (s.contains(i)) ds.unite(g.edge(i).first, g.edge(i).second);
    return canonical_partition(ds, g.num_vertices());
}

ComponentPartition components(const Graph& g) {
    DisjointSets ds(g.num_vertices());
    for (const auto& [u, v] : g.edges()) ds.unite(u, v);
    return canonical_partition(ds, g.num_vertices());
}

Graph delete_edge(const Graph& g, std::size_t i) {
    if (i >= g.num_edges()) throw GraphError("edge index out of range");
    std::vector<Edge> edges = g.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
    return Graph(g.num_vertices(), std::move(edges));
}

Contraction contract_edge(const Graph& g, std::size_t i) {
    if (i >= g.num_edges()) throw GraphError("edge index out of range");
    auto [a, b] = g.edge(i);
    Contraction out;
    if (a == b) {
        out.graph = delete_edge(g, i);
        out.vertex_map.resize(static_cast<std::size_t>(g.num_vertices()));
        std::iota(out.vertex_map.begin(), out.vertex_map.end(), 0);
        out.was_loop = true;
        return out;
    }
    Vertex keep = std::min(a, b), drop = std::max(a, b);
    out.vertex_map.resize(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        out.vertex_map[v] = v == drop ? keep : (v > drop ? v - 1 : v);
    std::vector<Edge> edges;
    edges.reserve(g.num_edges() - 1);
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
        if (k == i) continue;
        edges.emplace_back(out.vertex_map[g.edge(k).first], out.vertex_map[g.edge(k).second]);
    }
    out.graph = Graph(g.num_vertices() - 1, std::move(edges));
    return out;
}

Graph permute_edges(const Graph& g, const std::vector<std::size_t>& perm) {
    const std::size_t n = g.num_edges();
    if (perm.size() != n) throw GraphError("permutation length does not match edge count");
    std::vector<Edge> edges(n);
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || hit[perm[i]]) throw GraphError("edge permutation is not a bijection");
        hit[perm[i]] = true;
        edges[perm[i]] = g.edge(i);
    }
    return Graph(g.num_vertices(), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const int shift = a.num_vertices();
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph(a.num_vertices() + b.num_vertices(), std::move(edges));
}

Graph collapse_multi_edges(const Graph& g) {
    std::set<Edge> seen;
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        if (seen.insert({std::min(u, v), std::max(u, v)}).second) edges.emplace_back(u, v);
    }
    return Graph(g.num_vertices(), std::move(edges));
}

Graph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    auto fail = [&](const std::string& msg) {
        throw GraphError("graph parse error at line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line.substr(first));
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            if (n >= 0) fail("duplicate vertex count line");
            long count = -1;
            if (!(ls >> count) || count < 0) fail("expected 'v <n>' with n >= 0");
            n = static_cast<int>(count);
        } else if (tag == "e") {
            if (n < 0) fail("edge before vertex count");
            long u = -1, v = -1;
            if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
            if (u < 0 || v < 0 || u >= n || v >= n) fail("edge endpoint out of range");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        } else {
            fail("unknown record '" + tag + "'");
        }
        std::string rest;
        if (ls >> rest) fail("trailing tokens");
    }
    if (n < 0) throw GraphError("graph parse error: missing 'v <n>' line");
    return Graph(n, std::move(edges));
}

Graph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "v " << g.num_vertices() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace chromcoh
