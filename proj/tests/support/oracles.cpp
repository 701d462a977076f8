#include "oracles.hpp"

#include <functional>
#include <numeric>
#include <random>

namespace testsupport {

using chromcoh::BigInt;

BigInt cofactor_determinant(const std::vector<std::vector<long>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigInt total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<long>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        BigInt term = BigInt(m[0][c]) * cofactor_determinant(minor);
        total += (c % 2 == 0) ? term : BigInt(-term);
    }
    return total;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (cur.size() == k) {
        f(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, f);
        cur.pop_back();
    }
}

}  // namespace

std::vector<BigInt> minors_invariant_factors(const std::vector<std::vector<long>>& m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<BigInt> d{BigInt(1)};
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        BigInt g = 0;
        std::vector<std::size_t> rs, cs;
        subsets(rows, k, 0, rs, [&](const std::vector<std::size_t>& rsel) {
            subsets(cols, k, 0, cs, [&](const std::vector<std::size_t>& csel) {
                std::vector<std::vector<long>> sub;
                for (auto r : rsel) {
                    std::vector<long> row;
                    for (auto c : csel) row.push_back(m[r][c]);
                    sub.push_back(row);
                }
                BigInt det = cofactor_determinant(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
            });
        });
        if (g == 0) break;
        d.push_back(g);
    }
    std::vector<BigInt> factors;
    for (std::size_t k = 1; k < d.size(); ++k) factors.push_back(BigInt(d[k] / d[k - 1]));
    return factors;
}

chromcoh::IntMatrix to_matrix(const std::vector<std::vector<long>>& m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    chromcoh::IntMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = m[i][j];
    return out;
}

int bfs_component_count(const chromcoh::Graph& g, std::uint64_t mask) {
    const int n = g.num_vertices();
    std::vector<int> seen(n, 0);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++count;
        std::vector<int> queue{s};
        seen[s] = 1;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int v = queue[h];
            for (std::size_t e = 0; e < g.num_edges(); ++e) {
                if (!(mask >> e & 1)) continue;
                auto [a, b] = g.edge(e);
                int w = a == v ? b : b == v ? a : -1;
                if (w >= 0 && !seen[w]) seen[w] = 1, queue.push_back(w);
            }
        }
    }
    return count;
}

std::vector<long> state_sum_coefficients(const chromcoh::Graph& g) {
    std::vector<long> c(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.num_edges()); ++s)
        c[bfs_component_count(g, s)] += (__builtin_popcountll(s) % 2) ? -1 : 1;
    return c;
}

std::uint64_t count_colorings(const chromcoh::Graph& g, int k) {
    const int n = g.num_vertices();
    if (k == 0) return n == 0 ? 1 : 0;
    std::vector<int> color(n, 0);
    std::uint64_t total = 0;
    while (true) {
        bool ok = true;
        for (auto [a, b] : g.edges())
            if (color[a] == color[b]) ok = false;
        total += ok;
        int i = 0;
        while (i < n && ++color[i] == k) color[i++] = 0;
        if (i == n) break;
    }
    return total;
}

bool brute_ring_isomorphic(long a, long b, long a2, long b2, int bound) {
    // x -> k + l y with y^2 = a2 + b2 y must satisfy (k + l y)^2 = a + b (k + l y).
    for (long l : {1L, -1L})
        for (long k = -bound; k <= bound; ++k) {
            long constant = k * k + l * l * a2;
            long linear = 2 * k * l + l * l * b2;
            if (constant == a + b * k && linear == b * l) return true;
        }
    return false;
}

std::vector<std::map<int, std::size_t>> chain_ranks(const chromcoh::Graph& g, const std::vector<int>& algebra_degrees) {
    const std::size_t n = g.num_edges();
    std::vector<std::map<int, std::size_t>> out(n + 1);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const int k = bfs_component_count(g, s);
        std::map<int, std::size_t> poly{{0, 1}};
        for (int c = 0; c < k; ++c) {
            std::map<int, std::size_t> next;
            for (auto [j, r] : poly)
                for (int d : algebra_degrees) next[j + d] += r;
            poly = next;
        }
        for (auto [j, r] : poly) out[__builtin_popcountll(s)][j] += r;
    }
    return out;
}

std::vector<std::vector<long>> random_small_matrix(std::uint64_t& state, int rows, int cols, int bound) {
    std::mt19937_64 rng(state++);
    std::uniform_int_distribution<long> entry(-bound, bound);
    std::vector<std::vector<long>> m(rows, std::vector<long>(cols));
    for (auto& row : m)
        for (auto& x : row) x = entry(rng);
    return m;
}

}  // namespace testsupport
