#pragma once

#include "ratseries/bigint.hpp"
#include "ratseries/intpoly.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ratseries {

// Exact integer coefficients a_0..a_T of a univariate formal power series.
// Queries beyond the materialized truncation order are hard errors, never
// silent zeros: a truncated tail would silently corrupt Hankel determinants.
class IntSeries1D {
public:
    IntSeries1D() = default;
    explicit IntSeries1D(std::vector<BigInt> coeffs);
    IntSeries1D(std::initializer_list<long long> coeffs);

    // Highest materialized index; -1 when nothing is materialized.
    int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(std::size_t n) const;  // throws TruncationTooShort
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    void require_order(std::size_t n, const char* who) const;

private:
    std::vector<BigInt> coeffs_;
};

// Exact integer coefficients a_{jk} of a bivariate series, materialized for
// all j+k <= truncation_order. convergence_note is a user assertion about
// the convergence domain; it is metadata only and never enters computation.
class BiSeries {
public:
    BiSeries() : order_(-1) {}

    // fill(j, k) supplies a_{jk} for every j+k <= order.
    static BiSeries generate(int order, const std::function<BigInt(int, int)>& fill,
                             std::string convergence_note = {});
    // Rectangular row-major table a_{jk} = rows[j][k]; the materialized
    // triangle is the largest one fully covered by the table.
    static BiSeries from_rows(const std::vector<std::vector<BigInt>>& rows,
                              std::string convergence_note = {});

    int truncation_order() const { return order_; }
    const std::string& convergence_note() const { return note_; }
    const BigInt& coeff(int j, int k) const;  // throws TruncationTooShort

private:
    int order_;
    std::vector<BigInt> coeffs_;  // (j,k) at offset (j+k)(j+k+1)/2 + k
    std::string note_;
};

// Reduced P/Q with exact integer coefficients. Canonical form: gcd(P, Q)
// over Q is a unit, the shared integer content is 1, and Q(0) > 0 (so
// series-expandable inputs have Q(0) = +1 exactly).
class RationalFn {
public:
    RationalFn(IntPoly numerator, IntPoly denominator);

    const IntPoly& numerator() const { return num_; }
    const IntPoly& denominator() const { return den_; }

    bool operator==(const RationalFn& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const RationalFn& rhs) const { return !(*this == rhs); }

    std::string to_string(const std::string& var = "z") const;

private:
    IntPoly num_;
    IntPoly den_;
};

// Series expansion of P/Q through index N; requires |Q(0)| = 1 so that all
// coefficients are integers. Exact long division.
IntSeries1D expand_rational(const RationalFn& r, std::size_t N);

// coeff(n) = number of rule witnesses at n, e.g. #{j >= 0 : j! = n} for the
// factorial rule. The rule reports how many witnesses an index has.
IntSeries1D lacunary_series(const std::function<int(std::size_t)>& witness_count,
                            std::size_t N);

// Named coefficient rules used by the JSON series spec and the CLI.
std::function<int(std::size_t)> lacunary_rule_squares();
std::function<int(std::size_t)> lacunary_rule_cubes();
std::function<int(std::size_t)> lacunary_rule_factorials();
std::function<int(std::size_t)> lacunary_rule_powers(unsigned base);
std::function<int(std::size_t)> lacunary_rule_none();

// coeff(j,k) = g_j * h_k for j+k <= N.
BiSeries biseries_from_product(const IntSeries1D& g, const IntSeries1D& h,
                               std::size_t N, std::string convergence_note = {});

}  // namespace ratseries
