#include "ratseries/capacity.hpp"

#include "ratseries/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace ratseries {

namespace {

double log_dist(Complex a, Complex b) { return std::log(std::abs(a - b)); }

// Gains below this are ties: above the float noise of the maintained
// log-sums, below any real improvement.
constexpr double kGainTol = 1e-10;

}  // namespace

PointCloud::PointCloud(std::vector<Complex> pts, std::string lbl) : label(std::move(lbl)) {
    points.reserve(pts.size());
    for (Complex p : pts) {
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
            throw std::invalid_argument("PointCloud: non-finite coordinate");
        bool dup = false;
        for (Complex q : points) {
            if (q == p) {
                dup = true;
                break;
            }
        }
        if (!dup) points.push_back(p);
    }
    if (points.empty()) throw std::invalid_argument("PointCloud: empty");
}

PointCloud PointCloud::circle(double radius, std::size_t count, Complex center) {
    std::vector<Complex> pts(count);
    for (std::size_t t = 0; t < count; ++t)
        pts[t] = center + std::polar(radius, 2.0 * std::numbers::pi * t / count);
    return PointCloud(std::move(pts), "circle");
}

PointCloud PointCloud::segment(Complex a, Complex b, std::size_t count) {
    if (count < 2) throw std::invalid_argument("PointCloud::segment: count < 2");
    std::vector<Complex> pts(count);
    for (std::size_t t = 0; t < count; ++t)
        pts[t] = a + (b - a) * (static_cast<double>(t) / (count - 1));
    return PointCloud(std::move(pts), "segment");
}

PointCloud PointCloud::scaled(Complex c) const {
    std::vector<Complex> pts(points);
    for (auto& p : pts) p *= c;
    PointCloud out(std::move(pts), label);
    return out;
}

FeketeResult fekete_points(const PointCloud& cloud, std::size_t n, std::uint64_t seed) {
    const auto& z = cloud.points;
    const std::size_t N = z.size();
    if (n < 2) throw std::invalid_argument("fekete_points: n must be >= 2");
    if (N < n)
        throw TooFewPoints("fekete_points: cloud has " + std::to_string(N) +
                           " points, need " + std::to_string(n));

    // diameter pair (squared distances; sqrt is monotone)
    std::size_t best_i = 0, best_j = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i + 1; j < N; ++j) {
            double d = std::norm(z[i] - z[j]);
            if (d > best) {
                best = d;
                best_i = i;
                best_j = j;
            }
        }
    }

    std::vector<std::size_t> sel{best_i, best_j};
    std::vector<char> selected(N, 0);
    selected[best_i] = selected[best_j] = 1;

    // S[c] = sum over selected j (j != c) of log|z_c - z_j|
    std::vector<double> S(N, 0.0);
    for (std::size_t c = 0; c < N; ++c) {
        if (c != best_i) S[c] += log_dist(z[c], z[best_i]);
        if (c != best_j) S[c] += log_dist(z[c], z[best_j]);
    }

    auto add_point = [&](std::size_t p) {
        sel.push_back(p);
        selected[p] = 1;
        for (std::size_t c = 0; c < N; ++c)
            if (c != p) S[c] += log_dist(z[c], z[p]);
    };

    // farthest-point greedy: maximize the sum of log-distances to the
    // current selection
    while (sel.size() < n) {
        std::size_t pick = N;
        double best_s = -std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < N; ++c) {
            if (selected[c]) continue;
            if (S[c] > best_s) {
                best_s = S[c];
                pick = c;
            }
        }
        add_point(pick);
    }

    // single-point exchange passes until fixpoint
    std::mt19937_64 rng(seed);
    FeketeResult res;
    res.exchange_converged = false;
    constexpr int kMaxSweeps = 50;
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        bool improved = false;
        std::vector<std::size_t> visit(n);
        for (std::size_t t = 0; t < n; ++t) visit[t] = t;
        std::shuffle(visit.begin(), visit.end(), rng);
        for (std::size_t pos : visit) {
            std::size_t old = sel[pos];
            double drop = S[old];
            std::size_t pick = N;
            double best_gain = kGainTol;
            for (std::size_t c = 0; c < N; ++c) {
                if (selected[c]) continue;
                double gain = (S[c] - log_dist(z[c], z[old])) - drop;
                if (gain > best_gain) {
                    best_gain = gain;
                    pick = c;
                }
            }
            if (pick == N) continue;
            // swap old -> pick
            for (std::size_t c = 0; c < N; ++c) {
                if (c != pick) S[c] += log_dist(z[c], z[pick]);
                if (c != old) S[c] -= log_dist(z[c], z[old]);
            }
            selected[old] = 0;
            selected[pick] = 1;
            sel[pos] = pick;
            improved = true;
        }
        if (!improved) {
            res.exchange_converged = true;
            break;
        }
        // refresh the maintained sums to kill accumulated float drift
        std::fill(S.begin(), S.end(), 0.0);
        for (std::size_t c = 0; c < N; ++c)
            for (std::size_t s : sel)
                if (s != c) S[c] += log_dist(z[c], z[s]);
    }
    res.sweeps_used = sweep;

    res.indices = sel;
    res.points.reserve(n);
    for (std::size_t s : sel) res.points.push_back(z[s]);
    double logV = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) logV += log_dist(z[sel[i]], z[sel[j]]);
    res.log_vandermonde = logV;
    return res;
}

double chebyshev_upper(const PointCloud& cloud, const std::vector<Complex>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("chebyshev_upper: no nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j])
                throw DuplicateNodes("chebyshev_upper: duplicate node at indices " +
                                     std::to_string(i) + "," + std::to_string(j));
    double best = -std::numeric_limits<double>::infinity();
    for (Complex zc : cloud.points) {
        double s = 0.0;
        for (Complex nd : nodes) s += std::log(std::abs(zc - nd));
        best = std::max(best, s);
    }
    return std::exp(best);
}

CapacityEstimate transfinite_diameter(const PointCloud& cloud, std::size_t n_max,
                                      std::uint64_t seed) {
    if (n_max < 2) throw std::invalid_argument("transfinite_diameter: n_max must be >= 2");
    CapacityEstimate est;
    est.d_upper = std::numeric_limits<double>::infinity();
    double prev_d = std::numeric_limits<double>::infinity();
    for (std::size_t n = 2; n <= n_max; ++n) {
        FeketeResult fk = fekete_points(cloud, n, seed);
        double dn = std::exp(2.0 * fk.log_vandermonde / (static_cast<double>(n) * (n - 1)));
        est.n_values.push_back(n);
        est.d_seq.push_back(dn);
        est.tau_upper_seq.push_back(
            std::pow(chebyshev_upper(cloud, fk.points), 1.0 / static_cast<double>(n)));
        if (dn > prev_d * (1.0 + 1e-6)) est.monotone_violations.push_back(n);
        prev_d = dn;
        est.d_upper = std::min(est.d_upper, dn);
    }
    return est;
}

DTauReport d_tau_consistency(const PointCloud& cloud, std::size_t n_max, std::uint64_t seed) {
    if (n_max < 4) throw std::invalid_argument("d_tau_consistency: n_max must be >= 4");
    DTauReport rep;
    rep.estimate = transfinite_diameter(cloud, n_max, seed);
    rep.d_final = rep.estimate.d_seq.back();
    rep.tau_upper_final = rep.estimate.tau_upper_seq.back();
    rep.gap = std::abs(rep.d_final - rep.tau_upper_final);
    rep.tau_undercuts_d = rep.tau_upper_final < rep.estimate.d_upper;
    return rep;
}

}  // namespace ratseries
