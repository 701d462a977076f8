#pragma once

#include "chromcoh/graph.hpp"
#include "chromcoh/polynomial.hpp"

#include <stdexcept>

namespace chromcoh {

struct ChromaticError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// P_G(L) by deletion-contraction, P_G = P_{G-e} - P_{G/e}, with P = 0 for
/// graphs with a loop, parallel edges collapsed, and memoization on the
/// (vertex count, sorted edge set) form of each subproblem.
IntPolynomial chromatic_delete_contract(const Graph& g);

/// P_G(L) as the sum over edge subsets s of (-1)^|s| L^k(s).
IntPolynomial chromatic_state_sum(const Graph& g, std::size_t max_edges = 20);

/// P(qd(q)).
IntPolynomial evaluate_at_qdim(const IntPolynomial& p, const IntPolynomial& qd);

}  // namespace chromcoh
