#include "ratseries/contour.hpp"

#include "ratseries/detail/gauss.hpp"
#include "ratseries/detail/numeric.hpp"
#include "ratseries/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ratseries {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex cpow(Complex z, std::size_t p) {
    Complex acc = 1.0;
    for (std::size_t i = 0; i < p; ++i) acc *= z;
    return acc;
}

}  // namespace

double GammaContour::Piece::length() const {
    if (kind == Kind::Arc) return radius * std::abs(t1 - t0);
    return std::abs(b - a);
}

Complex GammaContour::Piece::point(double u) const {
    if (kind == Kind::Arc) return std::polar(radius, t0 + u * (t1 - t0));
    return a + u * (b - a);
}

Complex GammaContour::Piece::deriv(double u) const {
    if (kind == Kind::Arc) {
        Complex z = std::polar(radius, t0 + u * (t1 - t0));
        return Complex(0.0, t1 - t0) * z;
    }
    return b - a;
}

GammaContour make_gamma(double phi, double psi, double s, double delta) {
    double span = phi - psi;
    if (!(span > 0.0 && span < kTwoPi))
        throw BadAngles("make_gamma: need 0 < phi - psi < 2*pi, got phi - psi = " +
                        std::to_string(span));
    if (!(s > 1.0)) throw BadRadii("make_gamma: need s > 1, got " + std::to_string(s));
    if (!(delta >= 0.0 && delta < 1.0))
        throw BadRadii("make_gamma: need 0 <= delta < 1, got " + std::to_string(delta));

    GammaContour g;
    g.phi = phi;
    g.psi = psi;
    g.s = s;
    g.delta = delta;
    const double r = 1.0 - delta;

    GammaContour::Piece inner;
    inner.kind = GammaContour::Piece::Kind::Arc;
    inner.radius = r;
    inner.t0 = phi;
    inner.t1 = psi + kTwoPi;

    GammaContour::Piece out_seg;
    out_seg.kind = GammaContour::Piece::Kind::Segment;
    out_seg.a = std::polar(r, psi);
    out_seg.b = std::polar(s, psi);

    GammaContour::Piece outer;
    outer.kind = GammaContour::Piece::Kind::Arc;
    outer.radius = s;
    outer.t0 = psi;
    outer.t1 = phi;

    GammaContour::Piece in_seg;
    in_seg.kind = GammaContour::Piece::Kind::Segment;
    in_seg.a = std::polar(s, phi);
    in_seg.b = std::polar(r, phi);

    g.pieces = {inner, out_seg, outer, in_seg};
    return g;
}

double contour_length(const GammaContour& g) {
    const double r = 1.0 - g.delta;
    return r * (g.psi + kTwoPi - g.phi) + 2.0 * (g.s - r) + g.s * (g.phi - g.psi);
}

double min_modulus(const GammaContour& g) { return 1.0 - g.delta; }

PointCloud sample_contour(const GammaContour& g, double density) {
    if (!(density >= 64.0))
        throw std::invalid_argument("sample_contour: density must be >= 64 points per unit length");
    std::vector<Complex> pts;
    for (const auto& piece : g.pieces) {
        auto count = static_cast<std::size_t>(std::ceil(piece.length() * density));
        count = std::max<std::size_t>(count, 8);
        for (std::size_t k = 0; k < count; ++k)
            pts.push_back(piece.point(static_cast<double>(k) / count));
    }
    return PointCloud(std::move(pts), "gamma-contour");
}

IotaCheckReport iota_capacity_run(const GammaContour& g, std::size_t n_max,
                                  std::uint64_t seed, double margin, double density) {
    if (n_max < 2) throw std::invalid_argument("iota_capacity_run: n_max must be >= 2");
    PointCloud cloud = sample_contour(g, density);
    std::vector<Complex> inverted(cloud.points.size());
    for (std::size_t i = 0; i < inverted.size(); ++i) inverted[i] = 1.0 / cloud.points[i];
    PointCloud icloud(std::move(inverted), "iota(gamma-contour)");

    IotaCheckReport rep;
    rep.margin = margin;
    rep.cloud_size = icloud.points.size();
    rep.estimate.d_upper = std::numeric_limits<double>::infinity();
    double prev_d = std::numeric_limits<double>::infinity();
    for (std::size_t n = 2; n <= n_max; ++n) {
        FeketeResult fk = fekete_points(icloud, n, seed);
        double dn = std::exp(2.0 * fk.log_vandermonde / (static_cast<double>(n) * (n - 1)));
        rep.estimate.n_values.push_back(n);
        rep.estimate.d_seq.push_back(dn);
        rep.estimate.tau_upper_seq.push_back(
            std::pow(chebyshev_upper(icloud, fk.points), 1.0 / static_cast<double>(n)));
        if (dn > prev_d * (1.0 + 1e-6)) rep.estimate.monotone_violations.push_back(n);
        prev_d = dn;
        rep.estimate.d_upper = std::min(rep.estimate.d_upper, dn);
        if (dn < 1.0 - margin) {
            rep.certified = true;
            rep.certify_n = n;
            rep.certified_d = dn;
            break;
        }
    }
    return rep;
}

IotaCheckReport iota_capacity_check(const GammaContour& g, std::size_t n_max,
                                    std::uint64_t seed, double margin, double density) {
    IotaCheckReport rep = iota_capacity_run(g, n_max, seed, margin, density);
    if (!rep.certified)
        throw NoCertificate("iota_capacity_check: no d_n < " + std::to_string(1.0 - margin) +
                            " through n = " + std::to_string(n_max) +
                            " (min d_n = " + std::to_string(rep.estimate.d_upper) + ")");
    return rep;
}

namespace {

// quadrature nodes (z_i, W_i) with sum_i W_i f(z_i) ~ contour integral of f
std::vector<std::pair<Complex, Complex>> quadrature_nodes(const GammaContour& g,
                                                          double panels_per_unit,
                                                          int nodes_per_panel) {
    const auto& gl = detail::gauss_legendre(nodes_per_panel);
    std::vector<std::pair<Complex, Complex>> out;
    for (const auto& piece : g.pieces) {
        auto panels = static_cast<std::size_t>(
            std::max(1.0, std::ceil(piece.length() * panels_per_unit)));
        const double du = 1.0 / static_cast<double>(panels);
        for (std::size_t p = 0; p < panels; ++p) {
            double mid = (p + 0.5) * du;
            for (const auto& [x, w] : gl) {
                double u = mid + 0.5 * du * x;
                out.emplace_back(piece.point(u), 0.5 * du * w * piece.deriv(u));
            }
        }
    }
    return out;
}

Complex sum_nodes(const std::vector<std::pair<Complex, Complex>>& nodes,
                  const ComplexFn& f) {
    Complex acc = 0.0;
    for (const auto& [z, w] : nodes) acc += w * f(z);
    return acc;
}

}  // namespace

Complex contour_integral_fixed(const GammaContour& g, const ComplexFn& f,
                               double panels_per_unit, int nodes_per_panel) {
    return sum_nodes(quadrature_nodes(g, panels_per_unit, nodes_per_panel), f);
}

Complex contour_integral(const GammaContour& g, const ComplexFn& f,
                         const QuadratureOptions& opts) {
    double ppu = opts.panels_per_unit;
    Complex prev = sum_nodes(quadrature_nodes(g, ppu, opts.nodes_per_panel), f);
    for (int level = 0; level < opts.max_refinements; ++level) {
        ppu *= 2.0;
        Complex cur = sum_nodes(quadrature_nodes(g, ppu, opts.nodes_per_panel), f);
        if (std::abs(cur - prev) <= opts.tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    throw QuadratureDivergence(
        "contour_integral: refinement did not stabilize to tolerance " +
        std::to_string(opts.tol));
}

Complex cauchy_coeff(const ComplexFn& g, const GammaContour& gamma, std::size_t v,
                     const QuadratureOptions& opts) {
    Complex integral = contour_integral(
        gamma, [&](Complex z) { return g(z) / cpow(z, v + 1); }, opts);
    return integral / Complex(0.0, kTwoPi);
}

double symmetrization_check(const ComplexFn& g, const GammaContour& gamma, std::size_t m,
                            const QuadratureOptions& opts) {
    if (m < 1 || m > 2)
        throw std::invalid_argument(
            "symmetrization_check: m must be 1 or 2 (tensor quadrature cost)");

    // direct side: (m+1)! * det of the Cauchy-coefficient Hankel matrix
    std::vector<Complex> c(2 * m + 1);
    for (std::size_t v = 0; v <= 2 * m; ++v) c[v] = cauchy_coeff(g, gamma, v, opts);
    std::vector<std::vector<Complex>> h(m + 1, std::vector<Complex>(m + 1));
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= m; ++j) h[i][j] = c[i + j];
    double factorial = 1.0;
    for (std::size_t k = 2; k <= m + 1; ++k) factorial *= static_cast<double>(k);
    Complex direct = factorial * detail::complex_det(std::move(h));

    // iterated side: (m+1)-fold tensor quadrature of
    // g(z_1)...g(z_{m+1}) / (z_1...z_{m+1}) * prod_{j<k} (1/z_j - 1/z_k)^2
    auto tensor_value = [&](double ppu, int npp) {
        auto nodes = quadrature_nodes(gamma, ppu, npp);
        const std::size_t T = nodes.size();
        std::vector<Complex> A(T), inv(T);
        for (std::size_t i = 0; i < T; ++i) {
            const auto& [z, w] = nodes[i];
            A[i] = w * g(z) / z;
            inv[i] = 1.0 / z;
        }
        Complex acc = 0.0;
        if (m == 1) {
            for (std::size_t i = 0; i < T; ++i) {
                for (std::size_t j = 0; j < T; ++j) {
                    Complex d = inv[i] - inv[j];
                    acc += A[i] * A[j] * d * d;
                }
            }
        } else {
            for (std::size_t i = 0; i < T; ++i) {
                for (std::size_t j = 0; j < T; ++j) {
                    Complex dij = inv[i] - inv[j];
                    Complex aij = A[i] * A[j] * (dij * dij);
                    for (std::size_t k = 0; k < T; ++k) {
                        Complex dik = inv[i] - inv[k];
                        Complex djk = inv[j] - inv[k];
                        acc += aij * A[k] * (dik * dik) * (djk * djk);
                    }
                }
            }
        }
        // divide by (2 pi i)^{m+1}
        return acc / cpow(Complex(0.0, kTwoPi), m + 1);
    };

    const double base_ppu = (m == 1) ? opts.panels_per_unit : 1.0;
    const int base_npp = (m == 1) ? opts.nodes_per_panel : 8;
    Complex coarse = tensor_value(base_ppu, base_npp);
    Complex fine = tensor_value(2.0 * base_ppu, base_npp);
    if (std::abs(fine - coarse) > 1e-4 * std::max(1.0, std::abs(fine)))
        throw QuadratureDivergence(
            "symmetrization_check: tensor quadrature did not stabilize");

    return std::abs(fine - direct) / std::max(1.0, std::abs(direct));
}

double sup_on_contour(const ComplexFn& g, const GammaContour& gamma, double density) {
    PointCloud cloud = sample_contour(gamma, std::max(64.0, density));
    double sup = 0.0;
    for (Complex z : cloud.points) sup = std::max(sup, std::abs(g(z)));
    return sup;
}

double hankel_bound(const BoundInputs& b) {
    if (!(b.L > 0) || !(b.eta > 0) || !(b.rho > 0 && b.rho < 1) || b.M < 0)
        throw std::invalid_argument("hankel_bound: inputs violate L>0, M>=0, eta>0, 0<rho<1");
    if (b.m < 1) throw std::invalid_argument("hankel_bound: m must be >= 1");
    if (b.M == 0.0) return 0.0;
    const double mp1 = static_cast<double>(b.m) + 1.0;
    double log_bound = -mp1 * std::log(kTwoPi) - std::lgamma(mp1 + 1.0) +
                       mp1 * (std::log(b.L) + std::log(b.M) - std::log(b.eta)) +
                       static_cast<double>(b.m) * mp1 * std::log(b.rho);
    return std::exp(log_bound);
}

std::size_t find_m0(double L, double M, double eta, double rho, std::size_t m_max) {
    for (std::size_t m = 1; m <= m_max; ++m) {
        if (hankel_bound({L, M, eta, rho, m}) < 1.0) return m;
    }
    throw NoM0("find_m0: no m <= " + std::to_string(m_max) +
               " brings the bound below 1");
}

}  // namespace ratseries
