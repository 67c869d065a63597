#pragma once

#include <vector>

namespace mfris::numerics {

enum class QuadKind { laguerre, chebyshev1 };

// Nodes and weights of a fixed quadrature rule.
//
// laguerre: integrates f against e^{-x} on (0, inf); nodes strictly
// increasing and positive, weights positive with sum 1. log_weights stay
// finite at orders where the plain weights underflow (order ~300).
//
// chebyshev1: stores only the nodes z_w = cos((2w-1) pi / (2W)),
// w = 1..W, strictly decreasing in w; every node carries the implicit
// weight pi/W against 1/sqrt(1-z^2).
struct QuadRule {
    QuadKind kind;
    int order;
    std::vector<double> nodes;
    std::vector<double> weights;      // empty for chebyshev1
    std::vector<double> log_weights;  // empty for chebyshev1

    double chebyshev_weight() const;  // pi / order
};

// Gauss-Laguerre rule of the given order (1..512). Nodes come from the
// symmetric-tridiagonal Jacobi matrix (Golub-Welsch) with a Newton
// polish; weights from 1 / (tau_x * L'_X(tau_x)^2) evaluated through an
// exponent-tracked recurrence so large orders do not underflow.
QuadRule laguerre_rule(int order);

// Chebyshev (first kind) nodes for the given order W >= 1.
QuadRule chebyshev_nodes(int order);

}  // namespace mfris::numerics
