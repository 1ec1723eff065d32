#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace ratseries::detail {

// Fraction-free (Bareiss) determinant over an integral domain. Every
// division is exact by Bareiss' theorem, so this works verbatim for big
// integers and for integer polynomials. Ops must provide:
//   bool is_zero(const T&);
//   T mul(const T&, const T&);
//   T sub(const T&, const T&);
//   T div_exact(const T&, const T&);
//   T one(); T zero(); T neg(const T&);
template <class T, class Ops>
T bareiss_determinant(std::vector<std::vector<T>> m, const Ops& ops) {
    const std::size_t n = m.size();
    if (n == 0) return ops.one();
    T prev = ops.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ops.is_zero(m[k][k])) {
            std::size_t pivot = k + 1;
            while (pivot < n && ops.is_zero(m[pivot][k])) ++pivot;
            if (pivot == n) return ops.zero();
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T t = ops.sub(ops.mul(m[i][j], m[k][k]), ops.mul(m[i][k], m[k][j]));
                m[i][j] = ops.div_exact(t, prev);
            }
            m[i][k] = ops.zero();
        }
        prev = m[k][k];
    }
    T det = std::move(m[n - 1][n - 1]);
    return negate ? ops.neg(det) : det;
}

}  // namespace ratseries::detail
