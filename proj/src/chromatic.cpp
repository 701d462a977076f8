#include "chromcoh/chromatic.hpp"

#include <algorithm>
#include <map>

namespace chromcoh {

namespace {

using Key = std::pair<int, std::vector<Edge>>;

Key canonical_key(const Graph& g) {
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return {g.num_vertices(), std::move(edges)};
}

IntPolynomial delete_contract(const Graph& g, std::map<Key, IntPolynomial>& memo) {
    if (g.has_loop()) return {};
    Key key = canonical_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Graph simple(key.first, key.second);
    IntPolynomial result;
    if (simple.num_edges() == 0) {
        result = IntPolynomial::monomial(1, static_cast<std::size_t>(simple.num_vertices()));
    } else {
        const std::size_t last = simple.num_edges() - 1;
        result = delete_contract(delete_edge(simple, last), memo) - delete_contract(contract_edge(simple, last).graph, memo);
    }
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

IntPolynomial chromatic_delete_contract(const Graph& g) {
    std::map<Key, IntPolynomial> memo;
    return delete_contract(g, memo);
}

IntPolynomial chromatic_state_sum(const Graph& g, std::size_t max_edges) {
    if (g.num_edges() > max_edges || g.num_edges() > EdgeSubset::kMaxEdges)
        throw ChromaticError("state sum refused: " + std::to_string(g.num_edges()) + " edges exceeds cap of " +
                             std::to_string(max_edges));
    std::vector<BigInt> coeffs(static_cast<std::size_t>(g.num_vertices()) + 1);
    const std::uint64_t cube = std::uint64_t{1} << g.num_edges();
    for (std::uint64_t mask = 0; mask < cube; ++mask) {
        const int k = spanning_components(g, EdgeSubset(g.num_edges(), mask)).count;
        if (__builtin_popcountll(mask) % 2)
            coeffs[k] -= 1;
        else
            coeffs[k] += 1;
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial evaluate_at_qdim(const IntPolynomial& p, const IntPolynomial& qd) { return p.compose(qd); }

}  // namespace chromcoh
