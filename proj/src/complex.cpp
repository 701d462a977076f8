#include "chromcoh/complex.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chromcoh {

namespace {

constexpr std::size_t kMaxCubeEdges = 30;

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

SubsetBasis make_subset_basis(const Graph& g, const GradedAlgebra& a, std::uint64_t mask) {
    SubsetBasis b;
    b.subset = EdgeSubset(g.num_edges(), mask);
    b.partition = spanning_components(g, b.subset);
    const int m = a.dim(), k = b.partition.count;
    const std::uint64_t count = ipow(static_cast<std::uint64_t>(m), k);
    b.tensor_degree.resize(count);
    // Lexicographic enumeration with incremental degree update.
    std::vector<int> digits(static_cast<std::size_t>(k), 0);
    int deg = k * a.degree(0);
    for (std::uint64_t t = 0; t < count; ++t) {
        b.tensor_degree[t] = deg;
        for (int c = k - 1; c >= 0; --c) {
            deg -= a.degree(digits[c]);
            if (++digits[c] < m) {
                deg += a.degree(digits[c]);
                break;
            }
            digits[c] = 0;
            deg += a.degree(0);
        }
    }
    return b;
}

/// Sparse column lists of a twist matrix: f(b_i) = sum coeff * b_index.
std::vector<std::vector<GradedAlgebra::Term>> twist_columns(const Endomorphism& f) {
    std::vector<std::vector<GradedAlgebra::Term>> cols(f.matrix.cols());
    for (std::size_t i = 0; i < f.matrix.cols(); ++i)
        for (std::size_t k = 0; k < f.matrix.rows(); ++k)
            if (sgn(f.matrix(k, i)) != 0) cols[i].push_back({static_cast<int>(k), f.matrix(k, i)});
    return cols;
}

/// Calls emit(source_tensor, target_tensor, coefficient) for every nonzero
/// entry of the per-edge map from `from` along edge e to `to`.
template <class Emit>
void for_each_map_entry(const Graph& g, const GradedAlgebra& a, const SubsetBasis& from, const SubsetBasis& to,
                        std::size_t e, const std::vector<std::vector<GradedAlgebra::Term>>* twist, Emit&& emit) {
    const int m = a.dim();
    const int k1 = from.partition.count, k2 = to.partition.count;
    const auto [u, v] = g.edge(e);
    const int cu = from.partition.component_of[u], cv = from.partition.component_of[v];
    std::vector<int> digits(static_cast<std::size_t>(k1));
    std::vector<std::uint64_t> place(static_cast<std::size_t>(k2));
    for (int c = 0; c < k2; ++c) place[c] = ipow(static_cast<std::uint64_t>(m), k2 - 1 - c);

    if (cu == cv) {
        if (!twist) {
            for (std::uint64_t t = 0; t < from.size(); ++t) emit(t, t, BigInt(1));
            return;
        }
        // f applied to every factor.
        std::vector<BigInt> coeff(static_cast<std::size_t>(k1) + 1);
        std::vector<std::uint64_t> partial(static_cast<std::size_t>(k1) + 1);
        for (std::uint64_t t = 0; t < from.size(); ++t) {
            std::uint64_t rest = t;
            for (int c = k1 - 1; c >= 0; --c) digits[c] = static_cast<int>(rest % m), rest /= m;
            coeff[0] = 1;
            partial[0] = 0;
            auto expand = [&](auto&& self, int c) -> void {
                if (c == k1) {
                    emit(t, partial[c], coeff[c]);
                    return;
                }
                for (const auto& term : (*twist)[digits[c]]) {
                    coeff[c + 1] = coeff[c] * term.coeff;
                    partial[c + 1] = partial[c] + static_cast<std::uint64_t>(term.index) * place[c];
                    self(self, c + 1);
                }
            };
            expand(expand, 0);
        }
        return;
    }

    // Merge: factor of component c lands on the target component holding
    // c's smallest vertex.
    const auto reps = from.partition.representatives();
    std::vector<int> target_of(static_cast<std::size_t>(k1));
    for (int c = 0; c < k1; ++c) target_of[c] = to.partition.component_of[reps[c]];
    const int merged = target_of[cu];
    for (std::uint64_t t = 0; t < from.size(); ++t) {
        std::uint64_t rest = t;
        for (int c = k1 - 1; c >= 0; --c) digits[c] = static_cast<int>(rest % m), rest /= m;
        std::uint64_t base = 0;
        for (int c = 0; c < k1; ++c)
            if (c != cu && c != cv) base += static_cast<std::uint64_t>(digits[c]) * place[target_of[c]];
        for (const auto& term : a.product(digits[cu], digits[cv]))
            emit(t, base + static_cast<std::uint64_t>(term.index) * place[merged], term.coeff);
    }
}

void require_valid(const GradedAlgebra& a, const std::optional<Endomorphism>& twist) {
    auto rep = verify_algebra(a);
    if (!rep.ok()) throw AlgebraError("invalid algebra " + a.name() + ": " + rep.describe());
    if (twist) {
        auto trep = verify_endomorphism(a, *twist);
        if (!trep.ok()) throw AlgebraError("invalid twist: " + trep.describe());
    }
}

void check_cube_size(const Graph& g) {
    if (g.num_edges() > kMaxCubeEdges) throw ComplexError("graph has too many edges for the state cube");
}

}  // namespace

int edge_sign(const std::string& xi) {
    auto star = xi.find('*');
    if (star == std::string::npos || xi.find('*', star + 1) != std::string::npos)
        throw ComplexError("cube edge label needs exactly one '*'");
    for (char ch : xi)
        if (ch != '0' && ch != '1' && ch != '*') throw ComplexError("cube edge label must use 0, 1 and *");
    auto ones = std::count(xi.begin(), xi.begin() + static_cast<std::ptrdiff_t>(star), '1');
    return ones % 2 ? -1 : 1;
}

int edge_sign(std::uint64_t subset, std::size_t e) {
    std::uint64_t below = e == 0 ? 0 : (subset & ((std::uint64_t{1} << e) - 1));
    return __builtin_popcountll(below) % 2 ? -1 : 1;
}

std::vector<int> tensor_digits(std::uint64_t tensor, int components, int m) {
    std::vector<int> d(static_cast<std::size_t>(components));
    for (int c = components - 1; c >= 0; --c) d[c] = static_cast<int>(tensor % m), tensor /= m;
    return d;
}

SparseMatrix per_edge_map(const Graph& g, const GradedAlgebra& a, const EdgeSubset& s, std::size_t e,
                          const std::optional<Endomorphism>& twist) {
    if (e >= g.num_edges()) throw GraphError("edge index out of range");
    if (s.contains(e)) throw ComplexError("per-edge map needs an edge outside the subset");
    check_cube_size(g);
    const SubsetBasis from = make_subset_basis(g, a, s.bits());
    const SubsetBasis to = make_subset_basis(g, a, s.with(e).bits());
    std::optional<std::vector<std::vector<GradedAlgebra::Term>>> cols;
    if (twist) cols = twist_columns(*twist);
    std::vector<Triplet> entries;
    for_each_map_entry(g, a, from, to, e, cols ? &*cols : nullptr,
                       [&](std::uint64_t src, std::uint64_t dst, const BigInt& c) { entries.push_back({dst, src, c}); });
    return SparseMatrix(to.size(), from.size(), std::move(entries));
}

std::size_t BigradedComplex::dim(int i, int j) const {
    if (i < 0 || i > num_edges() || j < 0 || j > max_degree_) return 0;
    return states_[i][j].size();
}

const SparseMatrix& BigradedComplex::differential(int i, int j) const {
    static const SparseMatrix kEmpty;
    if (j < 0 || j > max_degree_) return kEmpty;
    if (i >= 0 && i < num_edges()) return d_[i][j];
    if (i == -1) return into_bottom_[j];
    if (i == num_edges()) return out_of_top_[j];
    return kEmpty;
}

IntPolynomial BigradedComplex::chain_q_dim(int i) const {
    if (i < 0 || i > num_edges()) return {};
    std::vector<BigInt> c(static_cast<std::size_t>(max_degree_) + 1);
    for (int j = 0; j <= max_degree_; ++j) c[j] = static_cast<unsigned long>(dim(i, j));
    return IntPolynomial(std::move(c));
}

std::vector<IntPolynomial> BigradedComplex::chain_q_dims() const {
    std::vector<IntPolynomial> out;
    for (int i = 0; i <= num_edges(); ++i) out.push_back(chain_q_dim(i));
    return out;
}

BigradedComplex build_complex(const Graph& g, const GradedAlgebra& a, const std::optional<Endomorphism>& twist,
                              Execution exec) {
    require_valid(a, twist);
    check_cube_size(g);
    BigradedComplex cx(g, a, twist);
    const int n = static_cast<int>(g.num_edges());
    cx.max_degree_ = a.max_degree() * g.num_vertices();
    const auto J = static_cast<std::size_t>(cx.max_degree_) + 1;

    // Bases, level by level in increasing mask order.
    const std::uint64_t cube = std::uint64_t{1} << n;
    std::vector<std::uint32_t> index_in_level(cube);
    cx.levels_.resize(static_cast<std::size_t>(n) + 1);
    for (std::uint64_t mask = 0; mask < cube; ++mask) {
        auto& lvl = cx.levels_[__builtin_popcountll(mask)];
        index_in_level[mask] = static_cast<std::uint32_t>(lvl.size());
        lvl.push_back(make_subset_basis(g, a, mask));
    }
    cx.states_.assign(static_cast<std::size_t>(n) + 1, std::vector<std::vector<EnhancedState>>(J));
    for (int i = 0; i <= n; ++i)
        for (auto& sb : cx.levels_[i]) {
            sb.block_position.resize(sb.size());
            for (std::uint64_t t = 0; t < sb.size(); ++t) {
                auto& block = cx.states_[i][sb.tensor_degree[t]];
                sb.block_position[t] = static_cast<std::uint32_t>(block.size());
                block.push_back({sb.subset.bits(), t});
            }
        }

    std::optional<std::vector<std::vector<GradedAlgebra::Term>>> cols;
    if (twist) cols = twist_columns(*twist);
    const auto* twist_cols = cols ? &*cols : nullptr;

    cx.d_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& src_level = cx.levels_[i];
        const auto& dst_level = cx.levels_[i + 1];
        // One triplet buffer per (source subset, degree); merged in order.
        std::vector<std::vector<std::vector<Triplet>>> local(src_level.size(), std::vector<std::vector<Triplet>>(J));
        const auto count = static_cast<long>(src_level.size());
        std::atomic<bool> degree_violation{false};
#pragma omp parallel for schedule(dynamic, 4) if (exec == Execution::Parallel)
        for (long si = 0; si < count; ++si) {
            const SubsetBasis& from = src_level[si];
            const std::uint64_t mask = from.subset.bits();
            for (int e = 0; e < n; ++e) {
                if ((mask >> e) & 1u) continue;
                const std::uint64_t target = mask | (std::uint64_t{1} << e);
                const SubsetBasis& to = dst_level[index_in_level[target]];
                const int sign = edge_sign(mask, static_cast<std::size_t>(e));
                for_each_map_entry(g, a, from, to, static_cast<std::size_t>(e), twist_cols,
                                   [&](std::uint64_t src, std::uint64_t dst, const BigInt& c) {
                                       const int j = from.tensor_degree[src];
                                       if (to.tensor_degree[dst] != j) degree_violation.store(true, std::memory_order_relaxed);
                                       local[si][j].push_back({to.block_position[dst], from.block_position[src],
                                                               sign > 0 ? BigInt(c) : BigInt(-c)});
                                   });
            }
        }
        if (degree_violation) throw ComplexError("per-edge map is not degree preserving");
        cx.d_[i].resize(J);
        for (std::size_t j = 0; j < J; ++j) {
            std::vector<Triplet> all;
            for (auto& per_subset : local) {
                auto& v = per_subset[j];
                all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
                v.clear();
            }
            cx.d_[i][j] = SparseMatrix(cx.states_[i + 1][j].size(), cx.states_[i][j].size(), std::move(all));
        }
    }
    for (std::size_t j = 0; j < J; ++j) {
        cx.into_bottom_.emplace_back(cx.states_[0][j].size(), 0);
        cx.out_of_top_.emplace_back(0, cx.states_[n][j].size());
    }
    return cx;
}

std::vector<std::vector<std::size_t>> chain_block_dims(const Graph& g, const GradedAlgebra& a) {
    check_cube_size(g);
    const int n = static_cast<int>(g.num_edges());
    const int J = a.max_degree() * g.num_vertices() + 1;
    // Degree distribution of A^{(x)k}, indexed by k.
    std::vector<std::vector<std::size_t>> tensor_power(static_cast<std::size_t>(g.num_vertices()) + 1,
                                                       std::vector<std::size_t>(static_cast<std::size_t>(J), 0));
    tensor_power[0][0] = 1;
    for (int k = 1; k <= g.num_vertices(); ++k)
        for (int j = 0; j < J; ++j) {
            if (!tensor_power[k - 1][j]) continue;
            for (int d : a.degrees()) tensor_power[k][j + d] += tensor_power[k - 1][j];
        }
    std::vector<std::vector<std::size_t>> dims(static_cast<std::size_t>(n) + 1,
                                               std::vector<std::size_t>(static_cast<std::size_t>(J), 0));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const int k = spanning_components(g, EdgeSubset(g.num_edges(), mask)).count;
        auto& row = dims[__builtin_popcountll(mask)];
        for (int j = 0; j < J; ++j) row[j] += tensor_power[k][j];
    }
    return dims;
}

std::vector<IntPolynomial> chain_q_dims(const Graph& g, const GradedAlgebra& a) {
    std::vector<IntPolynomial> out;
    for (const auto& row : chain_block_dims(g, a)) {
        std::vector<BigInt> c;
        for (auto v : row) c.emplace_back(static_cast<unsigned long>(v));
        out.emplace_back(std::move(c));
    }
    return out;
}

std::string complex_to_json(const BigradedComplex& cx) {
    nlohmann::json doc;
    doc["edges"] = cx.num_edges();
    doc["algebra"] = cx.algebra().name();
    doc["twisted"] = cx.twist().has_value();
    nlohmann::json blocks = nlohmann::json::array();
    for (int i = 0; i <= cx.num_edges(); ++i)
        for (int j = 0; j <= cx.max_degree(); ++j) {
            if (cx.dim(i, j) == 0) continue;
            nlohmann::json b{{"i", i}, {"j", j}, {"dim", cx.dim(i, j)}};
            if (i < cx.num_edges()) {
                nlohmann::json entries = nlohmann::json::array();
                for (const auto& t : cx.differential(i, j).entries())
                    entries.push_back({t.row, t.col, t.value.get_str()});
                b["d"] = std::move(entries);
            }
            blocks.push_back(std::move(b));
        }
    doc["blocks"] = std::move(blocks);
    return doc.dump();
}

}  // namespace chromcoh
