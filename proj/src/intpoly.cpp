#include "ratseries/intpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace ratseries {

namespace {
const BigInt kZero = 0;

BigInt abs_gcd(BigInt a, BigInt b) {
    return boost::multiprecision::gcd(a, b);
}
}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(BigInt c, std::size_t k) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, BigInt(0));
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::coeff(std::size_t k) const {
    if (k >= coeffs_.size()) return kZero;
    return coeffs_[k];
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> out(coeffs_);
    for (auto& c : out) c = -c;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPoly();
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const BigInt& s) const {
    if (s == 0) return IntPoly();
    std::vector<BigInt> out(coeffs_);
    for (auto& c : out) c *= s;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& rhs) const {
    if (rhs.is_zero()) throw std::logic_error("IntPoly: division by zero polynomial");
    if (is_zero()) return IntPoly();
    if (degree() < rhs.degree())
        throw std::logic_error("IntPoly: inexact division (degree too small)");

    std::vector<BigInt> rem(coeffs_);
    const auto& d = rhs.coeffs_;
    const BigInt& lead = d.back();
    std::vector<BigInt> quot(coeffs_.size() - d.size() + 1, BigInt(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        BigInt top = rem[i + d.size() - 1];
        if (top == 0) continue;
        BigInt q, r;
        boost::multiprecision::divide_qr(top, lead, q, r);
        if (r != 0) throw std::logic_error("IntPoly: inexact division (leading coefficient)");
        quot[i] = q;
        for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= q * d[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::logic_error("IntPoly: inexact division (nonzero remainder)");
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly();
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * k;
    return IntPoly(std::move(out));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        g = abs_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    BigInt g = content();
    if (g == 0 || g == 1) return *this;
    std::vector<BigInt> out(coeffs_);
    for (auto& c : out) c /= g;
    return IntPoly(std::move(out));
}

// Primitive pseudo-remainder sequence. Degrees in this library are small,
// so coefficient growth control beyond taking primitive parts is not needed.
IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        int k = a.degree() - b.degree() + 1;
        BigInt lead = b.coeffs_.back();
        BigInt scale = 1;
        for (int i = 0; i < k; ++i) scale *= lead;
        IntPoly rem = a * scale;
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            BigInt q = rem.coeffs_.back() / b.coeffs_.back();
            if (q == 0) throw std::logic_error("IntPoly::gcd: pseudo-division underflow");
            rem = rem - IntPoly::monomial(q, rem.degree() - b.degree()) * b;
        }
        a = b;
        b = rem.primitive_part();
    }
    if (!a.is_zero() && a.coeffs_.back() < 0) a = -a;
    return a;
}

BigInt IntPoly::eval_int(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::complex<double> IntPoly::eval(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + static_cast<double>(coeffs_[i]);
    return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        BigInt mag = boost::multiprecision::abs(c);
        if (k == 0) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace ratseries
