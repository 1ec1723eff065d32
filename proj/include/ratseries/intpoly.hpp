#pragma once

#include "ratseries/bigint.hpp"

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace ratseries {

// Dense univariate polynomial with exact integer coefficients, index =
// degree. Canonical form: no trailing zero coefficients, so the zero
// polynomial is the empty coefficient list and degree() reports -1.
// Immutable value type; all arithmetic is exact.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(BigInt c);
    static IntPoly monomial(BigInt c, std::size_t k);

    // -1 stands in for the zero polynomial's degree of -infinity.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of x^k; zero beyond the degree.
    const BigInt& coeff(std::size_t k) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& rhs) const;
    IntPoly operator*(const BigInt& s) const;
    bool operator==(const IntPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const IntPoly& rhs) const { return !(*this == rhs); }

    // Quotient when rhs divides *this exactly in Z[x]; throws
    // std::logic_error otherwise (callers rely on Bareiss-guaranteed
    // divisibility).
    IntPoly divide_exact(const IntPoly& rhs) const;

    IntPoly derivative() const;

    // gcd of all coefficients (nonnegative); 0 for the zero polynomial.
    BigInt content() const;
    IntPoly primitive_part() const;

    // Polynomial gcd over Q, returned as a primitive integer polynomial
    // with positive leading coefficient (primitive PRS).
    static IntPoly gcd(IntPoly a, IntPoly b);

    BigInt eval_int(const BigInt& x) const;
    std::complex<double> eval(std::complex<double> x) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

}  // namespace ratseries
