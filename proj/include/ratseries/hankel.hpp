#pragma once

#include "ratseries/series.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ratseries {

enum class Verdict {
    RationalEvidence,     // consistent with rationality on the tested window
    NotRationalWitness,   // a nonzero determinant persists at the window end
    Inconclusive,
};

const char* verdict_name(Verdict v);

// Exact Hankel determinants A_n = det(a_{i+j})_{i,j=0..n} over a window.
// RationalEvidence requires every A_n in the window to vanish; it is
// evidence, not proof, since the window is finite.
struct HankelReport {
    std::size_t n_lo = 0;
    std::size_t n_hi = 0;
    std::vector<BigInt> dets;  // A_n for n = n_lo..n_hi
    Verdict verdict = Verdict::Inconclusive;
    std::optional<std::size_t> witness_n;  // largest n with A_n != 0, if any
};

// det(a_{i+j})_{i,j=0..n}; needs the series through index 2n.
BigInt hankel_det(const IntSeries1D& a, std::size_t n);

HankelReport kronecker_test(const IntSeries1D& a, std::size_t n_lo, std::size_t n_hi);

// Window policy when the caller has no better idea: n_lo = 1 and
// n_hi = 2*degree_hint + 4 when a hint exists, else 12. Kronecker's lemma
// promises vanishing only for sufficiently large n, with onset depending
// on the degrees.
std::pair<std::size_t, std::size_t> default_kronecker_window(
    std::optional<std::size_t> degree_hint);

// Exact rational reconstruction: P/Q with deg P, deg Q <= d whose expansion
// matches a through index 2d+1. Solves the Toeplitz system for the
// denominator over exact rationals, clears denominators, reduces, and
// re-expands to verify. Throws NoRationalFit when no such P/Q exists.
RationalFn reconstruct_rational(const IntSeries1D& a, std::size_t d);

}  // namespace ratseries
