// Test-only oracles, kept independent of the library implementations they
// check: cofactor determinants, Simpson quadrature, and bisection inversion.
#ifndef GJTRIG_TEST_ORACLES_HPP
#define GJTRIG_TEST_ORACLES_HPP

#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace oracles {

// determinant by recursive Laplace expansion
inline double det_laplace(const Eigen::MatrixXd& m) {
    const Eigen::Index n = m.rows();
    if (n == 1) return m(0, 0);
    double acc = 0.0;
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::MatrixXd sub(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            Eigen::Index cc = 0;
            for (Eigen::Index k = 0; k < n; ++k) {
                if (k == c) continue;
                sub(r - 1, cc++) = m(r, k);
            }
        }
        acc += ((c % 2 == 0) ? 1.0 : -1.0) * m(0, c) * det_laplace(sub);
    }
    return acc;
}

// fixed-panel composite Simpson rule
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels = 4096) {
    const double h = (b - a) / (2 * panels);
    double acc = f(a) + f(b);
    for (int i = 1; i < 2 * panels; ++i) acc += f(a + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// bisection for a monotone increasing function
inline double bisect(const std::function<double(double)>& f, double target, double lo, double hi,
                     int iters = 80) {
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace oracles

#endif
