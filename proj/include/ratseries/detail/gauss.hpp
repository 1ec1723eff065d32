#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ratseries::detail {

// n-point Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on
// the Legendre recurrence. Cached per order.
inline const std::vector<std::pair<double, double>>& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<std::pair<double, double>> nw(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nw[i] = {-x, w};
        nw[n - 1 - i] = {x, w};
    }
    return cache.emplace(n, std::move(nw)).first->second;
}

}  // namespace ratseries::detail
