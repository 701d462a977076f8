#pragma once

#include "chromcoh/bigint.hpp"
#include "chromcoh/matrix.hpp"
#include "chromcoh/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromcoh {

struct AlgebraError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Coords = std::vector<BigInt>;

/// Commutative graded Z-algebra of finite rank, given by structure constants
/// on a homogeneous basis b_0..b_{m-1}: b_i * b_j = sum_k mult(i,j,k) b_k.
class GradedAlgebra {
public:
    /// Only checks shapes; the algebra axioms are checked by verify_algebra.
    GradedAlgebra(std::vector<int> degrees, std::vector<BigInt> mult, std::optional<Coords> unit,
                  std::string name = "custom");

    int dim() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int i) const { return degrees_[i]; }
    int max_degree() const;
    const BigInt& mult(int i, int j, int k) const { return mult_[(static_cast<std::size_t>(i) * dim() + j) * dim() + k]; }
    const std::optional<Coords>& unit() const { return unit_; }
    bool has_unit() const { return unit_.has_value(); }
    const std::string& name() const { return name_; }

    struct Term {
        int index;
        BigInt coeff;
    };
    /// Nonzero terms of b_i * b_j.
    const std::vector<Term>& product(int i, int j) const { return products_[static_cast<std::size_t>(i) * dim() + j]; }

private:
    std::vector<int> degrees_;
    std::vector<BigInt> mult_;
    std::optional<Coords> unit_;
    std::string name_;
    std::vector<std::vector<Term>> products_;
};

/// Linear map of the algebra to itself; column i holds the coordinates of
/// f(b_i).
struct Endomorphism {
    IntMatrix matrix;

    static Endomorphism identity(int m) { return {IntMatrix::identity(static_cast<std::size_t>(m))}; }
    static Endomorphism zero(int m) { return {IntMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(m))}; }
    bool is_identity() const { return matrix == IntMatrix::identity(matrix.rows()); }
};

struct Violation {
    std::string axiom;
    std::vector<int> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string describe() const;
};

ValidationReport verify_algebra(const GradedAlgebra& a);
ValidationReport verify_endomorphism(const GradedAlgebra& a, const Endomorphism& f);

Coords multiply(const GradedAlgebra& a, const Coords& u, const Coords& v);
Coords basis_vector(const GradedAlgebra& a, int i);
Coords apply_endomorphism(const Endomorphism& f, const Coords& v);

IntPolynomial q_dim(const GradedAlgebra& a);

/// Basis change exhibiting A = Z*1 (+) A'. Column 0 of `basis` is the unit;
/// columns 1..m-1 are homogeneous and span A'.
struct UnitComplement {
    IntMatrix basis;
    std::vector<Coords> complement;
    std::vector<int> complement_degrees;
};

UnitComplement unit_complement(const GradedAlgebra& a);

/// Named algebras: zxn:<n>, zx2, zx3, z, rank2:<a>,<b>, zx-nilpotent.
GradedAlgebra builtin_algebra(const std::string& name);
std::vector<std::string> builtin_algebra_names();

/// x*x = a*1 + b*x on the basis {1, x}, both in degree 0.
struct RingParams {
    BigInt a;
    BigInt b;
};

struct RingInvariant {
    BigInt discriminant;  // b^2 + 4a
    int parity;           // b mod 2, in {0, 1}
    friend bool operator==(const RingInvariant&, const RingInvariant&) = default;
};

RingInvariant ring_invariant(const RingParams& p);
bool rings_isomorphic(const RingParams& p, const RingParams& q);
GradedAlgebra rank2_algebra(const RingParams& p);

}  // namespace chromcoh
