#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace ratseries::detail {

// All roots of a complex-coefficient polynomial (dense, index = degree) by
// Durand-Kerner iteration. Adequate for the small degrees that appear as
// denominators of ODE coefficient matrices.
inline std::vector<std::complex<double>> poly_roots(std::vector<std::complex<double>> c) {
    using C = std::complex<double>;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    const std::size_t n = c.size() - 1;
    const C lead = c.back();
    for (auto& x : c) x /= lead;

    std::vector<C> r(n);
    C seed(0.4, 0.9);
    C acc = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc *= seed;
        r[i] = acc;
    }
    auto eval = [&](C z) {
        C v = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * z + c[i];
        return v;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double move = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            C denom = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) denom *= (r[i] - r[j]);
            C delta = eval(r[i]) / denom;
            r[i] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-13) break;
    }
    return r;
}

}  // namespace ratseries::detail
