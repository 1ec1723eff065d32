#pragma once

#include "ratseries/capacity.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace ratseries {

// The simple closed curve made of an inner arc of radius 1-delta over
// t in [phi, psi+2pi], two radial segments at angles psi and phi over
// rho in [1-delta, s], and an outer arc of radius s over t in [psi, phi].
// Traversal is fixed positively oriented (winding +1 around 0): inner arc
// with increasing t, segment outward at psi, outer arc with increasing t,
// segment inward at phi.
struct GammaContour {
    double phi = 0.0;
    double psi = 0.0;
    double s = 0.0;
    double delta = 0.0;

    struct Piece {
        enum class Kind { Arc, Segment } kind;
        // arcs: z(u) = radius * e^{i(t0 + u(t1-t0))}; segments: a + u(b-a)
        double radius = 0.0, t0 = 0.0, t1 = 0.0;
        Complex a, b;

        double length() const;
        Complex point(double u) const;
        Complex deriv(double u) const;  // dz/du on [0,1]
    };
    std::vector<Piece> pieces;
};

GammaContour make_gamma(double phi, double psi, double s, double delta);

// Closed forms: L = (1-delta)(psi+2pi-phi) + 2(s-(1-delta)) + s(phi-psi),
// eta = min_{z in Gamma} |z| = 1-delta.
double contour_length(const GammaContour& g);
double min_modulus(const GammaContour& g);

// Points on the curve, each piece sampled on its own uniform parameter grid,
// corners included exactly once. density is points per unit arc length.
PointCloud sample_contour(const GammaContour& g, double density);

struct IotaCheckReport {
    CapacityEstimate estimate;  // on iota(sampled cloud); stops at certify_n
    bool certified = false;
    std::size_t certify_n = 0;
    double certified_d = 0.0;
    double margin = 0.0;
    std::size_t cloud_size = 0;
};

// Maps the sampled cloud through iota(z) = 1/z and runs the transfinite
// diameter estimator; certifies once some d_n < 1 - margin (each d_n
// upper-bounds d). The non-throwing runner returns the report either way;
// iota_capacity_check raises NoCertificate when nothing certifies by n_max.
IotaCheckReport iota_capacity_run(const GammaContour& g, std::size_t n_max,
                                  std::uint64_t seed, double margin = 0.02,
                                  double density = 512.0);
IotaCheckReport iota_capacity_check(const GammaContour& g, std::size_t n_max,
                                    std::uint64_t seed, double margin = 0.02,
                                    double density = 512.0);

using ComplexFn = std::function<Complex(Complex)>;

struct QuadratureOptions {
    int nodes_per_panel = 12;
    double panels_per_unit = 2.0;
    int max_refinements = 10;
    double tol = 1e-10;
};

// Contour integral of f over Gamma: composite Gauss-Legendre panels per
// smooth piece, panel count doubled until two consecutive levels agree to
// tol; QuadratureDivergence when refinement fails to stabilize.
Complex contour_integral(const GammaContour& g, const ComplexFn& f,
                         const QuadratureOptions& opts = {});

// Single quadrature level at a fixed panel density, no refinement. Mostly
// useful for convergence-order studies.
Complex contour_integral_fixed(const GammaContour& g, const ComplexFn& f,
                               double panels_per_unit, int nodes_per_panel);

// (1/2pi i) * contour integral of g(z) / z^{v+1}: the v-th Cauchy
// coefficient of g relative to Gamma.
Complex cauchy_coeff(const ComplexFn& g, const GammaContour& gamma, std::size_t v,
                     const QuadratureOptions& opts = {});

// Cross-check of the symmetrized determinant identity: computes
// (m+1)! * H_m once as a determinant of Cauchy coefficients and once as the
// (m+1)-fold iterated contour integral with the squared inverse-Vandermonde
// kernel, and returns the relative residual. m is capped at 2 (the tensor
// grid grows as nodes^{m+1}).
double symmetrization_check(const ComplexFn& g, const GammaContour& gamma, std::size_t m,
                            const QuadratureOptions& opts = {});

// max |g| over a sampled contour; feeds the M input of the bound.
double sup_on_contour(const ComplexFn& g, const GammaContour& gamma,
                      double density = 256.0);

struct BoundInputs {
    double L = 0.0;    // curve length
    double M = 0.0;    // sup of |g_theta| on the curve over the theta-interval
    double eta = 0.0;  // min |z| on the curve
    double rho = 0.0;  // Vandermonde factor bound in (0,1)
    std::size_t m = 1; // Hankel size
};

// (2pi)^{-(m+1)} / (m+1)! * (L M / eta)^{m+1} * rho^{m(m+1)}, evaluated in
// log space to dodge factorial overflow.
double hankel_bound(const BoundInputs& b);

// Smallest m <= m_max with hankel_bound < 1; throws NoM0 when none.
std::size_t find_m0(double L, double M, double eta, double rho, std::size_t m_max);

}  // namespace ratseries
