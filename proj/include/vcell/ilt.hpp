#pragma once

#include <functional>

#include "vcell/bigfloat.hpp"

namespace vcell {

enum class ILTMethod {
    deformed_contour,     // fixed Talbot contour
    accelerated_fourier,  // Fourier series on a vertical line, Euler summation
};

struct ILTConfig {
    ILTMethod method = ILTMethod::deformed_contour;
    int node_count = 64;
    int precision_bits = 0;  // 0: working precision
    BigReal target_tol;      // relative; zero: 1e-6
};

struct ILTResult {
    BigReal value;      // primary method
    BigReal secondary;  // the other method
    BigReal error;      // |value - secondary|
};

using LaplaceTransform = std::function<BigComplex(const BigComplex&)>;

// Single-method inversions, evaluated at the working precision.
BigReal ilt_talbot(const LaplaceTransform& F, const BigReal& t, int nodes);
BigReal ilt_euler(const LaplaceTransform& F, const BigReal& t, int nodes);

// f(t) by the configured method, cross-checked against the other one.
// Throws ConvergenceError when they differ by more than target_tol relative.
ILTResult ilt(const LaplaceTransform& F, const BigReal& t, const ILTConfig& cfg = {});

}  // namespace vcell
