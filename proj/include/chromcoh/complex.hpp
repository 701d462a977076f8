#pragma once

#include "chromcoh/algebra.hpp"
#include "chromcoh/graph.hpp"
#include "chromcoh/matrix.hpp"
#include "chromcoh/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromcoh {

struct ComplexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A cube edge label in {0,1,*}^n: exactly one star.
/// +1 when an even number of ones precede the star, -1 otherwise.
int edge_sign(const std::string& xi);
/// Same sign for the cube edge from subset s along edge e.
int edge_sign(std::uint64_t subset, std::size_t e);

/// Basis tensors of one vertex of the cube. A tensor b_{t_0} (x) ... (x)
/// b_{t_{k-1}} over the components (canonical order) is indexed by the
/// multi-index t read as a base-m number, t_0 most significant; this is the
/// lexicographic order.
struct SubsetBasis {
    EdgeSubset subset;
    ComponentPartition partition;
    /// Internal degree of each tensor.
    std::vector<int> tensor_degree;
    /// Position of each tensor inside its (i, j) block.
    std::vector<std::uint32_t> block_position;

    std::size_t size() const { return tensor_degree.size(); }
};

/// Enhanced state: an edge subset and a basis tensor on its components.
struct EnhancedState {
    std::uint64_t subset;
    std::uint64_t tensor;
    friend bool operator==(const EnhancedState&, const EnhancedState&) = default;
};

std::vector<int> tensor_digits(std::uint64_t tensor, int components, int m);

/// Per-edge map C^{s} -> C^{s + e} on the canonical tensor bases of the two
/// cube vertices (rows: target tensors, columns: source tensors).
SparseMatrix per_edge_map(const Graph& g, const GradedAlgebra& a, const EdgeSubset& s, std::size_t e,
                          const std::optional<Endomorphism>& twist = std::nullopt);

enum class Execution { Serial, Parallel };

/// Cochain complex of a graph, split by internal degree j. Block (i, j) is
/// the span of enhanced states with |s| = i and degree j, ordered by subset
/// (increasing bit mask) and then by tensor index.
class BigradedComplex {
public:
    const Graph& graph() const { return graph_; }
    const GradedAlgebra& algebra() const { return algebra_; }
    const std::optional<Endomorphism>& twist() const { return twist_; }

    /// Number of edges n; levels run over 0..n.
    int num_edges() const { return static_cast<int>(graph_.num_edges()); }
    /// Largest internal degree that can occur.
    int max_degree() const { return max_degree_; }

    std::size_t dim(int i, int j) const;
    /// d^{i,j}: C^{i,j} -> C^{i+1,j}; an empty matrix of the right shape
    /// outside 0 <= i < n.
    const SparseMatrix& differential(int i, int j) const;
    const std::vector<EnhancedState>& states(int i, int j) const { return states_.at(i).at(j); }
    const std::vector<SubsetBasis>& level(int i) const { return levels_.at(i); }

    IntPolynomial chain_q_dim(int i) const;
    std::vector<IntPolynomial> chain_q_dims() const;

private:
    friend BigradedComplex build_complex(const Graph&, const GradedAlgebra&, const std::optional<Endomorphism>&,
                                         Execution);
    BigradedComplex(Graph g, GradedAlgebra a, std::optional<Endomorphism> f)
        : graph_(std::move(g)), algebra_(std::move(a)), twist_(std::move(f)) {}

    Graph graph_;
    GradedAlgebra algebra_;
    std::optional<Endomorphism> twist_;
    int max_degree_ = 0;
    std::vector<std::vector<SubsetBasis>> levels_;
    std::vector<std::vector<std::vector<EnhancedState>>> states_;
    std::vector<std::vector<SparseMatrix>> d_;
    std::vector<SparseMatrix> into_bottom_;  // d^{-1,j}
    std::vector<SparseMatrix> out_of_top_;   // d^{n,j}
};

/// Validates the algebra (and twist), enumerates the canonical bases and
/// assembles every d^{i,j} as a signed sum of per-edge maps.
BigradedComplex build_complex(const Graph& g, const GradedAlgebra& a,
                              const std::optional<Endomorphism>& twist = std::nullopt,
                              Execution exec = Execution::Parallel);

/// Chain group sizes without building the differentials: result[i][j] is
/// the rank of C^{i,j}.
std::vector<std::vector<std::size_t>> chain_block_dims(const Graph& g, const GradedAlgebra& a);
std::vector<IntPolynomial> chain_q_dims(const Graph& g, const GradedAlgebra& a);

/// Diagnostic JSON dump: dimensions and sparse differentials.
std::string complex_to_json(const BigradedComplex& cx);

}  // namespace chromcoh
