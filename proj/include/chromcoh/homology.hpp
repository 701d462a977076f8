#pragma once

#include "chromcoh/algebra.hpp"
#include "chromcoh/complex.hpp"
#include "chromcoh/polynomial.hpp"
#include "chromcoh/snf.hpp"

#include <map>
#include <string>
#include <vector>

namespace chromcoh {

/// Free rank and invariant factors of the degree-j part of a graded group.
struct DegreePart {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;  // divisibility chain, entries >= 2

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const DegreePart&, const DegreePart&) = default;
};

/// Isomorphism type of a finitely generated graded abelian group, kept in
/// canonical form: trivial degrees are not stored and every torsion list is
/// an invariant-factor chain. Equality is isomorphism.
class GroupInvariant {
public:
    GroupInvariant() = default;

    static GroupInvariant free_group(int degree, std::size_t rank);
    static GroupInvariant cyclic_group(int degree, const BigInt& order);
    /// The algebra as a graded free group (its q-dimension).
    static GroupInvariant from_algebra(const GradedAlgebra& a);

    void add_free(int degree, std::size_t rank);
    void add_torsion(int degree, const BigInt& order);
    GroupInvariant& operator+=(const GroupInvariant& other);  // direct sum
    GroupInvariant shifted(int by) const;

    const std::map<int, DegreePart>& parts() const { return parts_; }
    DegreePart part(int degree) const;
    bool is_zero() const { return parts_.empty(); }
    std::size_t total_free_rank() const;
    bool has_torsion() const;
    /// Sum over degrees of q^j times the free rank.
    IntPolynomial q_dim() const;

    /// Rendering grammar: "Z^r{j}", "Z_m{j}", joined by " + ", "0" if trivial.
    std::string to_string() const;

    friend bool operator==(const GroupInvariant&, const GroupInvariant&) = default;

private:
    void canonicalize(int degree);
    std::map<int, DegreePart> parts_;
};

/// Cohomology H^0..H^n, one entry per cohomological degree.
using Cohomology = std::vector<GroupInvariant>;

/// Integer cohomology from the invariant factors of every d^{i,j}: free
/// rank = dim C^{i,j} - rank d^{i,j} - rank d^{i-1,j}, torsion = factors > 1
/// of d^{i-1,j}. Blocks are reduced with the sparse kernel, in parallel
/// unless exec is Serial.
Cohomology cohomology(const BigradedComplex& cx, Execution exec = Execution::Parallel);

namespace reference {
/// Serial dense-elimination version of cohomology(); kept as the oracle
/// for the sparse parallel kernel.
Cohomology cohomology(const BigradedComplex& cx);
}  // namespace reference

/// Convenience: build the complex and compute its cohomology.
Cohomology compute_cohomology(const Graph& g, const GradedAlgebra& a,
                              const std::optional<Endomorphism>& twist = std::nullopt);

IntPolynomial graded_euler(const Cohomology& h);
/// Chain-level alternating sum of q-dimensions.
IntPolynomial graded_euler(const BigradedComplex& cx);

GroupInvariant group_tensor(const GroupInvariant& a, const GroupInvariant& b);
GroupInvariant group_tor(const GroupInvariant& a, const GroupInvariant& b);

/// Kunneth prediction for a disjoint union:
/// H^i = sum_{p+q=i} h1^p (x) h2^q  +  sum_{p+q=i+1} Tor(h1^p, h2^q).
Cohomology kunneth_predict(const Cohomology& h1, const Cohomology& h2);

/// Drops trailing zero groups so cohomologies of different lengths compare.
Cohomology trimmed(Cohomology h);
bool same_cohomology(const Cohomology& a, const Cohomology& b);

/// One "H^i = ..." line per cohomological degree.
std::string render_cohomology(const Cohomology& h);

}  // namespace chromcoh
