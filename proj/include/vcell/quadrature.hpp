#pragma once

#include <functional>
#include <vector>

#include "vcell/bigfloat.hpp"

namespace vcell {

// Nodes on [-1, 1] and weights, at the working precision.
struct GaussLegendreRule {
    std::vector<BigReal> x;
    std::vector<BigReal> w;
};

// Cached per (n, working precision).
const GaussLegendreRule& gauss_legendre(int n);

struct QuadratureConfig {
    int nodes = 24;
    int initial_panels = 8;
    int max_depth = 24;
    BigReal abs_tol;  // zero: 2^{-3p/4} times the first-pass scale
};

struct QuadratureResult {
    BigComplex value;
    BigReal error;
    int panels = 0;
};

// Integral over t in [t0, t1] of a complex-valued f by adaptive bisection of
// Gauss-Legendre panels. Throws ConvergenceError at max_depth.
QuadratureResult integrate(const std::function<BigComplex(const BigReal&)>& f, const BigReal& t0,
                           const BigReal& t1, const QuadratureConfig& cfg = {});

}  // namespace vcell
