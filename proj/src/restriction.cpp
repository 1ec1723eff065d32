#include "ratseries/restriction.hpp"

#include "ratseries/detail/bareiss.hpp"
#include "ratseries/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ratseries {

namespace {

struct IntPolyOps {
    bool is_zero(const IntPoly& p) const { return p.is_zero(); }
    IntPoly mul(const IntPoly& a, const IntPoly& b) const { return a * b; }
    IntPoly sub(const IntPoly& a, const IntPoly& b) const { return a - b; }
    IntPoly div_exact(const IntPoly& a, const IntPoly& b) const { return a.divide_exact(b); }
    IntPoly one() const { return IntPoly::constant(1); }
    IntPoly zero() const { return IntPoly(); }
    IntPoly neg(const IntPoly& a) const { return -a; }
};

}  // namespace

const char* criterion_verdict_name(CriterionVerdict v) {
    switch (v) {
        case CriterionVerdict::RationalEvidence: return "RationalEvidence";
        case CriterionVerdict::NotRationalEvidence: return "NotRationalEvidence";
        case CriterionVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

RestrictionFamily restriction_polys(const BiSeries& f, int n, int V) {
    if (n < 1) throw std::invalid_argument("restriction_polys: exponent n must be positive");
    if (V < 0) throw std::invalid_argument("restriction_polys: V must be nonnegative");
    if (f.truncation_order() < V)
        throw TruncationTooShort("restriction_polys: series materialized to total degree " +
                                 std::to_string(f.truncation_order()) + ", need " +
                                 std::to_string(V));
    RestrictionFamily fam;
    fam.n = n;
    fam.order = V;
    fam.pv.reserve(V + 1);
    for (int v = 0; v <= V; ++v) {
        std::vector<BigInt> c(static_cast<std::size_t>(v / n) + 1, BigInt(0));
        for (int k = 0; n * k <= v; ++k) c[k] = f.coeff(v - n * k, k);
        fam.pv.emplace_back(std::move(c));
    }
    return fam;
}

IntPoly hankel_poly(const RestrictionFamily& fam, std::size_t m) {
    if (fam.order < static_cast<int>(2 * m))
        throw TruncationTooShort("hankel_poly: family materialized to order " +
                                 std::to_string(fam.order) + ", need " + std::to_string(2 * m));
    std::vector<std::vector<IntPoly>> mat(m + 1, std::vector<IntPoly>(m + 1));
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= m; ++j) mat[i][j] = fam.pv[i + j];
    return detail::bareiss_determinant(std::move(mat), IntPolyOps{});
}

double coeff_sup_bound(const IntPoly& p) {
    if (p.is_zero()) return 0.0;
    const int deg = p.degree();
    const int grid = std::max(64, 8 * deg);
    double sup = 0.0;
    for (int t = 0; t < grid; ++t) {
        double theta = 2.0 * std::numbers::pi * t / grid;
        sup = std::max(sup, std::abs(p.eval(std::polar(1.0, theta))));
    }
    // |d/dtheta p(e^{i theta})| <= sum_k k |c_k|, and every circle point is
    // within pi/grid of a grid point
    double lip = 0.0;
    for (int k = 1; k <= deg; ++k)
        lip += k * std::abs(static_cast<double>(p.coeff(k)));
    return sup + std::numbers::pi / grid * lip;
}

bool conclude_zero(const IntPoly& p, double sup_bound) {
    if (sup_bound < 0)
        throw std::invalid_argument("conclude_zero: negative sup bound");
    if (sup_bound >= 1.0) return false;
    if (!p.is_zero())
        throw InconsistentCertificate(
            "conclude_zero: certified sup bound " + std::to_string(sup_bound) +
            " < 1 on a nonzero integer polynomial (max-principle contradiction)");
    return true;
}

std::vector<std::complex<double>> slice_coeffs(const RestrictionFamily& fam,
                                               double theta, int V) {
    if (fam.order < V)
        throw TruncationTooShort("slice_coeffs: family materialized to order " +
                                 std::to_string(fam.order) + ", need " + std::to_string(V));
    std::vector<std::complex<double>> out;
    out.reserve(V + 1);
    std::complex<double> w = std::polar(1.0, theta);
    for (int v = 0; v <= V; ++v) out.push_back(fam.pv[v].eval(w));
    return out;
}

CriterionReport criterion_test(const BiSeries& f, int n, std::size_t m_lo, std::size_t m_hi) {
    if (m_lo < 1 || m_lo > m_hi)
        throw std::invalid_argument("criterion_test: need 1 <= m_lo <= m_hi");
    RestrictionFamily fam = restriction_polys(f, n, static_cast<int>(2 * m_hi));

    CriterionReport rep;
    rep.n = n;
    rep.m_lo = m_lo;
    rep.m_hi = m_hi;
    for (std::size_t m = m_lo; m <= m_hi; ++m) {
        IntPoly h = hankel_poly(fam, m);
        HankelPolyResult res;
        res.m = m;
        res.zero = h.is_zero();
        if (!res.zero) {
            for (int k = 0; k <= h.degree(); ++k) {
                if (h.coeff(k) != 0) {
                    res.witness_degree = k;
                    res.witness_coeff = h.coeff(k);
                    break;
                }
            }
        }
        rep.results.push_back(std::move(res));
    }

    std::size_t terminal_zeros = 0;
    for (auto it = rep.results.rbegin(); it != rep.results.rend() && it->zero; ++it)
        ++terminal_zeros;
    if (terminal_zeros >= 3) {
        rep.verdict = CriterionVerdict::RationalEvidence;
        rep.onset_m = rep.results[rep.results.size() - terminal_zeros].m;
    } else if (!rep.results.back().zero) {
        rep.verdict = CriterionVerdict::NotRationalEvidence;
    } else {
        rep.verdict = CriterionVerdict::Inconclusive;
    }
    return rep;
}

}  // namespace ratseries
