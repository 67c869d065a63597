#include "mfris/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mfris::numerics {

namespace {

// Eigenvalues of a symmetric tridiagonal matrix by the implicit QL
// method with Wilkinson shifts. diag has n entries, offdiag n-1.
std::vector<double> tridiag_eigenvalues(std::vector<double> diag, std::vector<double> offdiag) {
    const int n = static_cast<int>(diag.size());
    offdiag.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(offdiag[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (++iter > 50) throw std::runtime_error("tridiagonal QL did not converge");
                double g = (diag[l + 1] - diag[l]) / (2.0 * offdiag[l]);
                double r = std::hypot(g, 1.0);
                g = diag[m] - diag[l] + offdiag[l] / (g + std::copysign(r, g));
                double s = 1.0;
                double c = 1.0;
                double p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * offdiag[i];
                    const double b = c * offdiag[i];
                    r = std::hypot(f, g);
                    offdiag[i + 1] = r;
                    if (r == 0.0) {
                        diag[i + 1] -= p;
                        offdiag[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = diag[i + 1] - p;
                    r = (diag[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    diag[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && m - 1 >= l) continue;
                diag[l] -= p;
                offdiag[l] = g;
                offdiag[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

// Laguerre polynomial value pair (L_{n-1}, L_n) at x with a shared
// power-of-two exponent so magnitudes at large n and x stay representable.
struct ScaledLaguerre {
    double l_prev;  // L_{n-1} mantissa
    double l_curr;  // L_n mantissa
    long exp2;      // shared binary exponent
};

ScaledLaguerre laguerre_eval(int n, double x) {
    double lm = 1.0;       // L_0
    double lc = 1.0 - x;   // L_1
    long e2 = 0;
    for (int k = 1; k < n; ++k) {
        const double ln = ((2.0 * k + 1.0 - x) * lc - k * lm) / (k + 1.0);
        lm = lc;
        lc = ln;
        const double mag = std::max(std::abs(lm), std::abs(lc));
        if (mag > 1e150) {
            lm = std::ldexp(lm, -512);
            lc = std::ldexp(lc, -512);
            e2 += 512;
        } else if (mag < 1e-150 && mag > 0.0) {
            lm = std::ldexp(lm, 512);
            lc = std::ldexp(lc, 512);
            e2 -= 512;
        }
    }
    return {lm, lc, e2};
}

}  // namespace

double QuadRule::chebyshev_weight() const { return M_PI / order; }

QuadRule laguerre_rule(int order) {
    if (order < 1 || order > 512)
        throw std::domain_error("laguerre_rule order out of range [1, 512]: " + std::to_string(order));

    // Jacobi matrix of the monic Laguerre recurrence for weight e^{-x}:
    // diag 2k+1, offdiag k.
    std::vector<double> diag(order);
    std::vector<double> offdiag(order > 1 ? order - 1 : 0);
    for (int k = 0; k < order; ++k) diag[k] = 2.0 * k + 1.0;
    for (int k = 1; k < order; ++k) offdiag[k - 1] = static_cast<double>(k);

    QuadRule rule;
    rule.kind = QuadKind::laguerre;
    rule.order = order;
    rule.nodes = tridiag_eigenvalues(std::move(diag), std::move(offdiag));
    rule.weights.resize(order);
    rule.log_weights.resize(order);

    constexpr double kLn2 = 0.6931471805599453;
    for (int i = 0; i < order; ++i) {
        double x = rule.nodes[i];
        // Newton polish: x <- x - L_n(x) / L'_n(x), with
        // x L'_n(x) = n (L_n(x) - L_{n-1}(x)); the shared exponent cancels.
        for (int it = 0; it < 3; ++it) {
            const auto s = laguerre_eval(order, x);
            const double dmant = order * (s.l_curr - s.l_prev) / x;
            if (dmant == 0.0) break;
            const double step = s.l_curr / dmant;
            x -= step;
            if (std::abs(step) <= 1e-15 * x) break;
        }
        rule.nodes[i] = x;
        const auto s = laguerre_eval(order, x);
        const double dmant = order * (s.l_curr - s.l_prev) / x;
        // w = 1 / (x * L'_n(x)^2) in log form.
        const double log_w = -std::log(x) - 2.0 * (std::log(std::abs(dmant)) + s.exp2 * kLn2);
        rule.log_weights[i] = log_w;
        rule.weights[i] = std::exp(log_w);
        if (!std::isfinite(log_w))
            throw std::runtime_error("laguerre_rule: non-finite log weight at node " + std::to_string(i));
    }
    return rule;
}

QuadRule chebyshev_nodes(int order) {
    if (order < 1) throw std::domain_error("chebyshev_nodes requires order >= 1");
    QuadRule rule;
    rule.kind = QuadKind::chebyshev1;
    rule.order = order;
    rule.nodes.resize(order);
    for (int w = 1; w <= order; ++w)
        rule.nodes[w - 1] = std::cos((2.0 * w - 1.0) * M_PI / (2.0 * order));
    return rule;
}

}  // namespace mfris::numerics
