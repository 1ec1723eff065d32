#include "ratseries/hankel.hpp"

#include "ratseries/detail/bareiss.hpp"
#include "ratseries/errors.hpp"

#include <stdexcept>

namespace ratseries {

namespace {

struct BigIntOps {
    bool is_zero(const BigInt& x) const { return x == 0; }
    BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
    BigInt sub(const BigInt& a, const BigInt& b) const { return a - b; }
    BigInt div_exact(const BigInt& a, const BigInt& b) const {
        BigInt q, r;
        boost::multiprecision::divide_qr(a, b, q, r);
        if (r != 0) throw std::logic_error("bareiss: inexact integer division");
        return q;
    }
    BigInt one() const { return 1; }
    BigInt zero() const { return 0; }
    BigInt neg(const BigInt& a) const { return -a; }
};

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::RationalEvidence: return "RationalEvidence";
        case Verdict::NotRationalWitness: return "NotRationalWitness";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

BigInt hankel_det(const IntSeries1D& a, std::size_t n) {
    a.require_order(2 * n, "hankel_det");
    std::vector<std::vector<BigInt>> m(n + 1, std::vector<BigInt>(n + 1));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) m[i][j] = a.coeff(i + j);
    return detail::bareiss_determinant(std::move(m), BigIntOps{});
}

HankelReport kronecker_test(const IntSeries1D& a, std::size_t n_lo, std::size_t n_hi) {
    if (n_lo > n_hi) throw std::invalid_argument("kronecker_test: n_lo > n_hi");
    a.require_order(2 * n_hi, "kronecker_test");
    HankelReport rep;
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;
    rep.dets.reserve(n_hi - n_lo + 1);
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        BigInt det = hankel_det(a, n);
        if (det != 0) rep.witness_n = n;
        rep.dets.push_back(std::move(det));
    }
    if (!rep.witness_n) {
        rep.verdict = Verdict::RationalEvidence;
    } else if (*rep.witness_n == n_hi) {
        rep.verdict = Verdict::NotRationalWitness;
    } else {
        // a nonzero head followed by vanishing tail: the window alone
        // cannot distinguish late onset from accidental zeros
        rep.verdict = Verdict::Inconclusive;
    }
    return rep;
}

std::pair<std::size_t, std::size_t> default_kronecker_window(
    std::optional<std::size_t> degree_hint) {
    if (degree_hint) return {1, 2 * *degree_hint + 4};
    return {1, 12};
}

namespace {

// Gaussian elimination over exact rationals for the (possibly over- or
// under-determined) system rows * x = rhs. Returns a solution with free
// variables set to zero, or nullopt when inconsistent.
std::optional<std::vector<BigRat>> solve_exact(std::vector<std::vector<BigRat>> rows,
                                               std::vector<BigRat> rhs) {
    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = n_rows ? rows[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
        std::size_t p = r;
        while (p < n_rows && rows[p][c] == 0) ++p;
        if (p == n_rows) continue;
        std::swap(rows[p], rows[r]);
        std::swap(rhs[p], rhs[r]);
        BigRat inv = rows[r][c];
        for (std::size_t j = c; j < n_cols; ++j) rows[r][j] /= inv;
        rhs[r] /= inv;
        for (std::size_t i = 0; i < n_rows; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            BigRat f = rows[i][c];
            for (std::size_t j = c; j < n_cols; ++j) rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < n_rows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    std::vector<BigRat> x(n_cols, BigRat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

}  // namespace

RationalFn reconstruct_rational(const IntSeries1D& a, std::size_t d) {
    a.require_order(2 * d + 1, "reconstruct_rational");

    // Q = 1 + q_1 z + ... + q_d z^d must kill coefficients d+1..2d+1 of Q*a.
    const std::size_t n_eq = d + 1;
    std::vector<std::vector<BigRat>> rows(n_eq, std::vector<BigRat>(d, BigRat(0)));
    std::vector<BigRat> rhs(n_eq);
    for (std::size_t e = 0; e < n_eq; ++e) {
        std::size_t m = d + 1 + e;
        for (std::size_t i = 1; i <= d; ++i) rows[e][i - 1] = BigRat(a.coeff(m - i));
        rhs[e] = -BigRat(a.coeff(m));
    }
    auto q = solve_exact(std::move(rows), std::move(rhs));
    if (!q) throw NoRationalFit("reconstruct_rational: Toeplitz system inconsistent at d = " +
                                std::to_string(d));

    // clear denominators: lambda * (1, q_1..q_d) is an integer vector
    BigInt lambda = 1;
    for (const auto& qi : *q) lambda = boost::multiprecision::lcm(lambda, denominator(qi));
    std::vector<BigInt> qz(d + 1, BigInt(0));
    qz[0] = lambda;
    for (std::size_t i = 1; i <= d; ++i) {
        BigRat scaled = (*q)[i - 1] * BigRat(lambda);
        qz[i] = numerator(scaled);
    }
    IntPoly Q(std::move(qz));

    // P = (Q * a) truncated to degree d, exact by construction
    std::vector<BigInt> pz(d + 1, BigInt(0));
    for (std::size_t m = 0; m <= d; ++m) {
        BigInt acc = 0;
        std::size_t top = std::min<std::size_t>(m, static_cast<std::size_t>(Q.degree()));
        for (std::size_t i = 0; i <= top; ++i) acc += Q.coeff(i) * a.coeff(m - i);
        pz[m] = acc;
    }
    RationalFn fit(IntPoly(std::move(pz)), std::move(Q));

    // verification: re-expand and compare exactly through 2d+1. The solve
    // already enforces this, but reduction and normalization happened since.
    const IntPoly& P2 = fit.numerator();
    const IntPoly& Q2 = fit.denominator();
    std::vector<BigRat> exp2(2 * d + 2, BigRat(0));
    BigRat q0(Q2.coeff(0));
    for (std::size_t m = 0; m <= 2 * d + 1; ++m) {
        BigRat acc(P2.coeff(m));
        std::size_t top = std::min<std::size_t>(m, static_cast<std::size_t>(Q2.degree()));
        for (std::size_t i = 1; i <= top; ++i) acc -= BigRat(Q2.coeff(i)) * exp2[m - i];
        exp2[m] = acc / q0;
        if (exp2[m] != BigRat(a.coeff(m)))
            throw NoRationalFit("reconstruct_rational: verification re-expansion mismatch");
    }
    return fit;
}

}  // namespace ratseries
