#pragma once

#include "ratseries/hankel.hpp"
#include "ratseries/intpoly.hpp"
#include "ratseries/series.hpp"

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace ratseries {

// The homogeneous-slice polynomials of a bivariate series relative to a
// diagonal exponent n: pv[v] is the univariate polynomial in w whose w^k
// coefficient is a_{v-nk,k}. Evaluating pv[v] at e^{i theta} gives the
// v-th coefficient of the diagonal slice z -> f(z, e^{i theta} z^n).
struct RestrictionFamily {
    int n = 1;                // diagonal exponent
    int order = -1;           // max v materialized
    std::vector<IntPoly> pv;  // pv[v], degree <= floor(v/n)
};

RestrictionFamily restriction_polys(const BiSeries& f, int n, int V);

// H_m(w) = det(pv[v1+v2](w))_{v1,v2=0..m}, computed fraction-free over the
// integer polynomial ring so that identical vanishing is decided exactly.
IntPoly hankel_poly(const RestrictionFamily& fam, std::size_t m);

// Certified upper bound for max_{|w|=1} |p(w)|: max over a uniform grid of
// max(64, 8*deg) points plus the Lipschitz correction (pi/grid) * sum k|c_k|.
double coeff_sup_bound(const IntPoly& p);

// True iff sup_bound < 1, in which case p = 0 exactly (an integer-coefficient
// polynomial with sup-modulus < 1 on the unit circle has no nonzero
// coefficient). A sup_bound < 1 over a nonzero p is an internal
// contradiction and raises InconsistentCertificate.
bool conclude_zero(const IntPoly& p, double sup_bound);

// Coefficients of the slice z -> f(z, e^{i theta} z^n): entry v is
// pv[v](e^{i theta}), evaluated in floating point.
std::vector<std::complex<double>> slice_coeffs(const RestrictionFamily& fam,
                                               double theta, int V);

struct HankelPolyResult {
    std::size_t m = 0;
    bool zero = false;
    // lowest-degree nonzero coefficient when not identically zero
    int witness_degree = -1;
    BigInt witness_coeff;
};

enum class CriterionVerdict {
    RationalEvidence,
    NotRationalEvidence,
    Inconclusive,
};

const char* criterion_verdict_name(CriterionVerdict v);

struct CriterionReport {
    int n = 1;
    std::size_t m_lo = 0;
    std::size_t m_hi = 0;
    std::vector<HankelPolyResult> results;
    CriterionVerdict verdict = CriterionVerdict::Inconclusive;
    // smallest m of the terminal run of identically-zero H_m, when the
    // verdict is RationalEvidence
    std::optional<std::size_t> onset_m;
};

// Runs hankel_poly for every m in [m_lo, m_hi]. RationalEvidence requires a
// terminal run of at least three consecutive identically-zero H_m; a nonzero
// H_{m_hi} yields NotRationalWitness; anything else is Inconclusive.
CriterionReport criterion_test(const BiSeries& f, int n, std::size_t m_lo, std::size_t m_hi);

}  // namespace ratseries
