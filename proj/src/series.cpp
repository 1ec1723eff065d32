#include "ratseries/series.hpp"

#include "ratseries/errors.hpp"

#include <sstream>
#include <utility>

namespace ratseries {

IntSeries1D::IntSeries1D(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}

IntSeries1D::IntSeries1D(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
}

const BigInt& IntSeries1D::coeff(std::size_t n) const {
    if (n >= coeffs_.size())
        throw TruncationTooShort("IntSeries1D: coefficient index " + std::to_string(n) +
                                 " beyond truncation order " +
                                 std::to_string(truncation_order()));
    return coeffs_[n];
}

void IntSeries1D::require_order(std::size_t n, const char* who) const {
    if (static_cast<int>(n) > truncation_order())
        throw TruncationTooShort(std::string(who) + ": needs coefficients through index " +
                                 std::to_string(n) + ", series materialized through " +
                                 std::to_string(truncation_order()));
}

namespace {
std::size_t tri_offset(int v) { return static_cast<std::size_t>(v) * (v + 1) / 2; }
}  // namespace

BiSeries BiSeries::generate(int order, const std::function<BigInt(int, int)>& fill,
                            std::string convergence_note) {
    BiSeries out;
    out.order_ = order;
    out.note_ = std::move(convergence_note);
    if (order >= 0) {
        out.coeffs_.resize(tri_offset(order + 1));
        for (int v = 0; v <= order; ++v)
            for (int k = 0; k <= v; ++k) out.coeffs_[tri_offset(v) + k] = fill(v - k, k);
    }
    return out;
}

BiSeries BiSeries::from_rows(const std::vector<std::vector<BigInt>>& rows,
                             std::string convergence_note) {
    // largest T with every (j,k), j+k <= T, inside the table
    int T = static_cast<int>(rows.size()) - 1;
    for (const auto& row : rows)
        T = std::min(T, static_cast<int>(row.size()) - 1);
    return generate(T, [&](int j, int k) { return rows[j][k]; }, std::move(convergence_note));
}

const BigInt& BiSeries::coeff(int j, int k) const {
    if (j < 0 || k < 0) throw std::invalid_argument("BiSeries: negative index");
    if (j + k > order_)
        throw TruncationTooShort("BiSeries: coefficient (" + std::to_string(j) + "," +
                                 std::to_string(k) + ") beyond truncation order " +
                                 std::to_string(order_));
    return coeffs_[tri_offset(j + k) + k];
}

RationalFn::RationalFn(IntPoly numerator, IntPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw ZeroDenominator("RationalFn: denominator is the zero polynomial");
    if (den_.coeff(0) == 0)
        throw ZeroDenominator("RationalFn: denominator has zero constant term");
    if (!num_.is_zero()) {
        IntPoly g = IntPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
    }
    BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
    if (c > 1) {
        std::vector<BigInt> nc = num_.coeffs(), dc = den_.coeffs();
        for (auto& x : nc) x /= c;
        for (auto& x : dc) x /= c;
        num_ = IntPoly(std::move(nc));
        den_ = IntPoly(std::move(dc));
    }
    if (den_.coeff(0) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

std::string RationalFn::to_string(const std::string& var) const {
    std::ostringstream os;
    os << "(" << num_.to_string(var) << ") / (" << den_.to_string(var) << ")";
    return os.str();
}

IntSeries1D expand_rational(const RationalFn& r, std::size_t N) {
    const IntPoly& P = r.numerator();
    const IntPoly& Q = r.denominator();
    const BigInt& q0 = Q.coeff(0);
    if (q0 != 1 && q0 != -1) {
        BigInt mag = boost::multiprecision::abs(q0);
        throw NonUnitConstantTerm("expand_rational: |Q(0)| = " + mag.str() + ", need 1");
    }
    std::vector<BigInt> a(N + 1, BigInt(0));
    for (std::size_t m = 0; m <= N; ++m) {
        BigInt acc = P.coeff(m);
        std::size_t top = std::min<std::size_t>(m, static_cast<std::size_t>(Q.degree()));
        for (std::size_t i = 1; i <= top; ++i) acc -= Q.coeff(i) * a[m - i];
        a[m] = (q0 == 1) ? acc : -acc;
    }
    return IntSeries1D(std::move(a));
}

IntSeries1D lacunary_series(const std::function<int(std::size_t)>& witness_count,
                            std::size_t N) {
    std::vector<BigInt> a(N + 1);
    for (std::size_t n = 0; n <= N; ++n) a[n] = witness_count(n);
    return IntSeries1D(std::move(a));
}

std::function<int(std::size_t)> lacunary_rule_squares() {
    return [](std::size_t n) {
        for (std::size_t j = 0; j * j <= n; ++j)
            if (j * j == n) return 1;
        return 0;
    };
}

std::function<int(std::size_t)> lacunary_rule_cubes() {
    return [](std::size_t n) {
        for (std::size_t j = 0; j * j * j <= n; ++j)
            if (j * j * j == n) return 1;
        return 0;
    };
}

std::function<int(std::size_t)> lacunary_rule_factorials() {
    return [](std::size_t n) {
        int count = 0;
        BigInt f = 1;
        for (unsigned j = 0;; ++j) {
            if (j > 0) f *= j;
            if (f > n) break;
            if (f == n) ++count;
        }
        return count;
    };
}

std::function<int(std::size_t)> lacunary_rule_powers(unsigned base) {
    if (base < 2) throw std::invalid_argument("lacunary_rule_powers: base must be >= 2");
    return [base](std::size_t n) {
        BigInt p = 1;
        while (p < n) p *= base;
        return p == n ? 1 : 0;
    };
}

std::function<int(std::size_t)> lacunary_rule_none() {
    return [](std::size_t) { return 0; };
}

BiSeries biseries_from_product(const IntSeries1D& g, const IntSeries1D& h,
                               std::size_t N, std::string convergence_note) {
    g.require_order(N, "biseries_from_product");
    h.require_order(N, "biseries_from_product");
    return BiSeries::generate(static_cast<int>(N),
                              [&](int j, int k) { return g.coeff(j) * h.coeff(k); },
                              std::move(convergence_note));
}

}  // namespace ratseries
