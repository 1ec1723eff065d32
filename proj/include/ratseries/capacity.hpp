#pragma once

#include "ratseries/bigint.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ratseries {

// Finite discretization of a planar compact. Exact duplicate points are
// dropped at construction; order of first appearance is preserved.
struct PointCloud {
    std::vector<Complex> points;
    std::string label;

    PointCloud() = default;
    PointCloud(std::vector<Complex> pts, std::string lbl = {});

    static PointCloud circle(double radius, std::size_t count, Complex center = 0.0);
    static PointCloud segment(Complex a, Complex b, std::size_t count);

    PointCloud scaled(Complex c) const;
};

struct FeketeResult {
    std::vector<std::size_t> indices;  // positions in the cloud
    std::vector<Complex> points;
    double log_vandermonde = 0.0;  // sum_{i<j} log |z_i - z_j|
    int sweeps_used = 0;
    bool exchange_converged = true;
};

// n-point subset locally maximizing prod_{i<j} |z_i - z_j| under
// single-point exchange. Farthest-point greedy start from the diameter
// pair, then exchange sweeps until fixpoint (or 50 sweeps). Deterministic
// for a fixed seed; the seed only shuffles the exchange visit order.
FeketeResult fekete_points(const PointCloud& cloud, std::size_t n, std::uint64_t seed);

struct CapacityEstimate {
    std::vector<std::size_t> n_values;
    std::vector<double> d_seq;          // d_n = V_n^{2/(n(n-1))}
    std::vector<double> tau_upper_seq;  // Fekete-node Chebyshev upper bounds
    double d_upper = 0.0;               // min over d_seq
    // n with d_n > d_{n-1} beyond tolerance: exchange-optimizer shortfall,
    // flagged rather than silently repaired
    std::vector<std::size_t> monotone_violations;
};

CapacityEstimate transfinite_diameter(const PointCloud& cloud, std::size_t n_max,
                                      std::uint64_t seed);

// max over the cloud of |prod (z - node_i)|: an upper bound for M_n, so its
// n-th root upper-bounds the n-th Chebyshev number tau_n.
double chebyshev_upper(const PointCloud& cloud, const std::vector<Complex>& nodes);

struct DTauReport {
    CapacityEstimate estimate;
    double d_final = 0.0;
    double tau_upper_final = 0.0;
    double gap = 0.0;
    // informational: both sequences upper-bound the capacity, so a tau
    // bound far below the final d_n signals optimizer shortfall
    bool tau_undercuts_d = false;
};

DTauReport d_tau_consistency(const PointCloud& cloud, std::size_t n_max,
                             std::uint64_t seed = 0);

}  // namespace ratseries
