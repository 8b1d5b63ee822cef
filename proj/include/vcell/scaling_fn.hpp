#pragma once

#include "vcell/bigfloat.hpp"
#include "vcell/laurent.hpp"
#include "vcell/scaling_tables.hpp"

namespace vcell {

enum class FPath { direct, near_diagonal, near_zero };

struct ScalingConfig {
    int precision_bits = 0;          // 0: working precision
    double diagonal_threshold = 1e-3; // |a-b|/max(a,b) below this: Taylor in b-a
    double zero_threshold = 1e-3;     // min(a,b)/max(a,b) below this: Taylor in b
};

FPath select_path(const BigReal& a, const BigReal& b, const ScalingConfig& cfg = {});

// Scaling function F(S, a, b); symmetric in (a, b).
BigReal eval_F(const BigReal& S, const BigReal& a, const BigReal& b, const ScalingConfig& cfg = {});
// Same value forced through one path (for cross-checks).
BigReal eval_F_path(FPath path, const BigReal& S, const BigReal& a, const BigReal& b, int precision_bits = 0);

// 2a^3 q (1+q)/(1-q)^3, q = e^{-2aS}.
BigReal eval_F_diag(const BigReal& S, const BigReal& a);
// b = 0 closed form through p_m, q_m.
BigReal eval_F_b0(const BigReal& S, const BigReal& a);
// -a^2 (1 + 10 e^{-aS} + e^{-2aS}) / (3 (1 - e^{-aS})^2)
BigReal eval_r(const BigReal& S, const BigReal& a);

// F(S, a, tau/S) as a Laurent series in S, through order `top` at least.
// tau = 0 goes through the b = 0 closed form.
Laurent<BigReal> F_laurent(const BigReal& a, const BigReal& tau, int top);

struct PhiCoefficient {
    BigReal value;        // Laurent-series path
    BigReal fit_value;    // polynomial fit of S^3 F at small S
    BigReal discrepancy;  // |value - fit_value|
    int precision_bits = 0;
};

// [S^{2i-3}] F(S, sqrt 6, tau/S). Throws PrecisionError when the two paths
// disagree beyond 2^{-precision_bits/8} relative.
PhiCoefficient extract_phi_coeff(int i, const BigReal& tau, int precision_bits = 512);
BigReal extract_phi_laurent(int i, const BigReal& tau, int precision_bits = 512);
BigReal extract_phi_fit(int i, const BigReal& tau, int precision_bits = 512);

}  // namespace vcell
