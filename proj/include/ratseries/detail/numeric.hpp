#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace ratseries::detail {

// Determinant of a small dense complex matrix, Gaussian elimination with
// partial pivoting.
inline std::complex<double> complex_det(std::vector<std::vector<std::complex<double>>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("complex_det: matrix not square");
    std::complex<double> det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(m[k][k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(m[i][k]) > best) {
                best = std::abs(m[i][k]);
                pivot = i;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != k) {
            std::swap(m[k], m[pivot]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            std::complex<double> f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

}  // namespace ratseries::detail
