#pragma once

#include "ratseries/hankel.hpp"
#include "ratseries/intpoly.hpp"
#include "ratseries/restriction.hpp"
#include "ratseries/series.hpp"

#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace ratseries {

// Linear recurrence with polynomial-in-index coefficients:
//     sum_t coeffs[t](m) * a_{m + shift_min + t} = 0   for every m >= 0,
// with a_j = 0 for j < 0. Produced from an ODE with polynomial coefficients
// (P-recursive form) or built directly.
struct PRecurrence {
    int shift_min = 0;
    std::vector<IntPoly> coeffs;  // index t stands for shift sigma = shift_min + t

    int shift_max() const { return shift_min + static_cast<int>(coeffs.size()) - 1; }
    // number of coefficient shifts spanned
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    // indices not determined by forward application (absent singular indices)
    int offset() const { return std::max(0, shift_max()); }
    const IntPoly& leading() const { return coeffs.back(); }
};

// Compiles sum_i p[i](z) f^{(i)}(z) = 0 into the recurrence its coefficient
// sequence satisfies. Throws DegenerateEquation when every p[i] is zero.
PRecurrence recurrence_from_ode(const std::vector<IntPoly>& p);

// Coefficients a_0..a_N generated with exact rational arithmetic; the
// integrality of every value is checked, not assumed.
struct GeneratedSeries {
    std::vector<BigRat> values;
    std::optional<std::size_t> first_non_integer;

    IntSeries1D as_int_series() const;  // throws NonIntegerCoefficient
};

GeneratedSeries generate_coeffs(const PRecurrence& rec, const std::vector<BigRat>& initials,
                                std::size_t N);

// ---- holomorphic ODE continuation -----------------------------------------

struct ComplexPoly {
    std::vector<Complex> c;  // index = degree

    static ComplexPoly from_intpoly(const IntPoly& p);
    static ComplexPoly constant(Complex v);
    Complex eval(Complex z) const;
    // coefficients of p(z0 + t) through t^{len-1}
    std::vector<Complex> taylor_at(Complex z0, std::size_t len) const;
};

struct ComplexRational {
    ComplexPoly num;
    ComplexPoly den;  // nonzero; constant 1 for polynomial entries

    static ComplexRational constant(Complex v);
    Complex eval(Complex z) const;
    std::vector<Complex> taylor_at(Complex z0, std::size_t len) const;
    // distance from z0 to the nearest denominator root; +inf when none
    double singularity_distance(Complex z0) const;
};

// First-order linear system w'(z) = A(z) w(z) with entries holomorphic on
// the declared disc (poles of rational entries are detected during
// stepping). initial is w(center).
struct OdeSystem {
    std::size_t dim = 0;
    std::vector<std::vector<ComplexRational>> A;
    Complex center = 0.0;
    double radius = std::numeric_limits<double>::infinity();
    std::vector<Complex> initial;

    static OdeSystem constant(const std::vector<std::vector<Complex>>& matrix,
                              std::vector<Complex> initial);
};

struct OdeOptions {
    double tol = 1e-10;            // per-step local error target
    std::size_t taylor_degree = 20;
    double max_step = std::numeric_limits<double>::infinity();
    double safety = 0.5;           // fraction of the analyticity radius per step
};

struct OdeResult {
    std::vector<Complex> value;  // solution at the path end
    double residual_sum = 0.0;   // accumulated per-step tail estimates
    std::size_t steps = 0;
};

// Integrates along the polyline by local Taylor expansion with radius-based
// step control. The path must start at the system center; waypoints must
// stay in the declared disc.
OdeResult ode_continue(const OdeSystem& sys, const std::vector<Complex>& path,
                       const OdeOptions& opts = {});

// Companion-form system for q_0 f + q_1 f_w + ... + q_s f^{(s)}_w = 0 at a
// fixed first variable: y_1 = f, ..., y_s = f^{(s-1)}_w. The coefficients
// q are univariate in w, so the matrix itself does not depend on the slice
// anchor. Throws LeadingCoeffVanishes when q_s vanishes at the disc center.
OdeSystem companion_system(const std::vector<IntPoly>& q, Complex center = 0.0);

// ---- Bell-Chen pipeline ----------------------------------------------------

// One linear ODE with integer polynomial coefficients per variable, each
// coefficient univariate in its own variable, plus a corner block of series
// coefficients large enough to seed both recurrences.
struct DFiniteSystem {
    std::vector<std::vector<IntPoly>> equations;   // size 1 (z) or 2 (z, w)
    std::vector<std::vector<BigInt>> initials;     // initials[j][k] = a_{jk}
};

// Coefficient table of the bivariate solution through total degree N;
// integrality of every generated coefficient is asserted
// (NonIntegerCoefficient otherwise).
BiSeries dfinite_table(const DFiniteSystem& sys, std::size_t N);

// Univariate coefficient run for a one-equation system.
GeneratedSeries dfinite_series(const DFiniteSystem& sys, std::size_t N);

struct PipelineOptions {
    int n = 1;                 // diagonal exponent
    std::size_t N = 30;        // truncation (total degree)
    std::size_t m_lo = 1;
    std::size_t m_hi = 4;
    bool continuation_demo = true;  // only meaningful for ODE-given inputs
};

struct ContinuationDemo {
    bool attempted = false;
    bool ok = false;
    Complex z0;
    Complex w_end;
    double path_disagreement = 0.0;
    double residual = 0.0;
    std::string note;
};

struct PipelineReport {
    CriterionReport criterion;
    std::optional<RationalFn> slice0;       // reconstructed theta = 0 slice
    std::optional<std::size_t> slice_degree;
    double radius_estimate_z = 0.0;  // heuristic root-test estimates,
    double radius_estimate_w = 0.0;  // reported as a warning only
    bool radius_warning = false;
    ContinuationDemo continuation;
};

PipelineReport bell_chen_pipeline(const BiSeries& f, const PipelineOptions& opts);
PipelineReport bell_chen_pipeline(const DFiniteSystem& sys, const PipelineOptions& opts);

}  // namespace ratseries
