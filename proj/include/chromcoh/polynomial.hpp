#pragma once

#include "chromcoh/bigint.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace chromcoh {

/// Integer polynomial in one variable. coeffs()[k] is the coefficient of
/// X^k; trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and equality is structural.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> coeffs);
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial constant(const BigInt& c);
    static IntPolynomial monomial(const BigInt& c, std::size_t exponent);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    BigInt coeff(std::size_t k) const;

    BigInt evaluate(const BigInt& x) const;
    /// Composition this(inner(X)).
    IntPolynomial compose(const IntPolynomial& inner) const;
    IntPolynomial pow(unsigned exponent) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    IntPolynomial operator-() const;

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Descending-order rendering, e.g. "L^3 - 3L^2 + 2L" for var = "L".
    std::string to_string(std::string_view var) const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

}  // namespace chromcoh
