#pragma once

#include "chromcoh/algebra.hpp"
#include "chromcoh/graph.hpp"
#include "chromcoh/homology.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chromcoh {

/// Outcome of one executable structural check. A failed report always
/// carries a witness.
struct CheckReport {
    std::string check;
    std::string instance;
    bool passed = false;
    std::string witness;
};

/// Short instance tag: "<graph>/<algebra>[/twist]". An empty graph name
/// falls back to "v<n>e<m>".
std::string instance_name(const Graph& g, const GradedAlgebra& a, const std::optional<Endomorphism>& twist = std::nullopt,
                          const std::string& graph_name = {});

CheckReport check_algebra(const GradedAlgebra& a, const std::optional<Endomorphism>& twist = std::nullopt);

/// d^{i+1,j} d^{i,j} == 0 for every block.
CheckReport check_d_squared(const Graph& g, const GradedAlgebra& a, const std::optional<Endomorphism>& twist = std::nullopt,
                            const std::string& graph_name = {});

/// Every square face of the cube commutes before signs are applied.
CheckReport check_cube_faces(const Graph& g, const GradedAlgebra& a, const std::optional<Endomorphism>& twist = std::nullopt,
                             const std::string& graph_name = {});

/// Cohomology is unchanged under `trials` seeded random edge orderings.
CheckReport check_edge_order(const Graph& g, const GradedAlgebra& a, int trials, std::uint64_t seed,
                             const std::optional<Endomorphism>& twist = std::nullopt, const std::string& graph_name = {});

struct EulerOptions {
    /// Also check chi(G) == chi(G-e) - chi(G/e) for every edge.
    bool per_edge = true;
    /// Edge cap for the state-sum chromatic polynomial; deletion-contraction
    /// is used above it.
    std::size_t state_sum_cap = 20;
};

/// Graded Euler characteristic of H (and of C) equals P_G(q dim A).
CheckReport check_euler(const Graph& g, const GradedAlgebra& a, const std::optional<Endomorphism>& twist = std::nullopt,
                        EulerOptions options = {}, const std::string& graph_name = {});

/// With e moved last: alpha: C^{i-1,j}(G/e) -> C^{i,j}(G) and
/// beta: C^{i,j}(G) -> C^{i,j}(G-e) are chain maps, alpha is a split
/// injection, beta a split surjection and im alpha == ker beta.
CheckReport check_ses(const Graph& g, const GradedAlgebra& a, std::size_t e,
                      const std::optional<Endomorphism>& twist = std::nullopt, const std::string& graph_name = {});

/// A loop kills all cohomology; collapsing parallel edges changes nothing.
CheckReport check_loops_and_multiedges(const Graph& g, const GradedAlgebra& a, const std::string& graph_name = {});

/// For a pendant edge e: H^{i,j}(G) == sum over the A' basis b of
/// H^{i,j-deg b}(G/e).
CheckReport check_pendant(const Graph& g, const GradedAlgebra& a, std::size_t e, const std::string& graph_name = {});

/// Direct cohomology of g1 + g2 equals the Kunneth prediction.
CheckReport check_kunneth(const Graph& g1, const Graph& g2, const GradedAlgebra& a, const std::string& name1 = {},
                          const std::string& name2 = {});

bool is_pendant_edge(const Graph& g, std::size_t e);

struct SuiteOptions {
    std::optional<Endomorphism> twist;
    std::uint64_t seed = 1;
    int edge_order_trials = 5;
    /// Second graph for the Kunneth check; defaults to a single vertex.
    std::optional<Graph> partner;
    std::string graph_name;
    std::string partner_name;
    /// Empty means every applicable check.
    std::vector<std::string> only;
};

std::vector<std::string> check_names();

/// Runs the selected checks on one instance. Checks that rely on the
/// untwisted differential or on a unit are skipped when not applicable.
/// Reports are sorted by check name, then instance.
std::vector<CheckReport> run_checks(const Graph& g, const GradedAlgebra& a, const SuiteOptions& options);

}  // namespace chromcoh
