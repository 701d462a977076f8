#pragma once

#include "chromcoh/bigint.hpp"
#include "chromcoh/matrix.hpp"

#include <vector>

namespace chromcoh {

/// Invariant factors of an integer matrix: the nonzero diagonal entries of
/// its Smith normal form, positive and ordered so that each divides the next.
struct SnfResult {
    std::vector<BigInt> factors;
    std::size_t rank = 0;

    /// The factors greater than one.
    std::vector<BigInt> torsion() const;
    friend bool operator==(const SnfResult&, const SnfResult&) = default;
};

/// Smith normal form with unimodular transforms: left * m * right == diagonal.
struct SnfDecomposition {
    SnfResult result;
    IntMatrix left;
    IntMatrix right;
    IntMatrix diagonal;
};

/// Dense elimination with minimal-absolute-value pivoting. Runs in checked
/// int64 and transparently restarts in arbitrary precision on overflow.
SnfResult smith_normal_form(const IntMatrix& m);

/// Same pivoting as smith_normal_form, always in arbitrary precision, and
/// records the row and column operations.
SnfDecomposition smith_decomposition(const IntMatrix& m);

/// Sparse kernel used for differential blocks: eliminates unit pivots in
/// place (Markowitz-style, shortest row first) and finishes the residual
/// block densely. Same result as smith_normal_form.
SnfResult sparse_smith_normal_form(const SparseMatrix& m);

/// Turns an arbitrary list of cyclic orders into invariant-factor form
/// (divisibility chain, ones and zeros dropped).
std::vector<BigInt> canonical_torsion(std::vector<BigInt> orders);

}  // namespace chromcoh
