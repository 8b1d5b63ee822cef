#pragma once

#include "vcell/bigfloat.hpp"
#include "vcell/quadrature.hpp"

namespace vcell {

enum class ContourKind { a6, quartic_shift };

enum class ContourShape {
    // two rays at +-45 degrees through the origin plus the excursion to (36 mu)^{1/4}
    through_origin,
    // the same rays issued from x0 on the real axis: x0 > (36 mu)^{1/4} for mu >= 0, x0 = 1 for mu < 0
    shifted_vertex,
};

struct ContourSpec {
    BigReal ray_length = BigReal(12);
    ContourShape shape = ContourShape::through_origin;
    QuadratureConfig quadrature;
    // absolute bound on the imaginary residue; zero: 2^{-(p/2)}
    BigReal imag_tol;
};

struct ContourResult {
    BigReal value;
    BigReal error;         // quadrature estimate
    BigReal imag_residue;  // |Im| of the normalized integral
};

// (1/2 i pi) \int da (-a^3/9) e^{a^4/36} K(a), K = a^6 or (a^4 - 36 mu)^{3/2}.
ContourResult contour_integral(ContourKind kind, const BigReal& mu, const ContourSpec& spec = {});
// Same weight times a^power (power 0 and 4 vanish by symmetry).
ContourResult contour_monomial(int power, const BigReal& mu, const ContourSpec& spec = {});

// Large-s limit of the generating function of the volume fraction:
// (I_a6(mu) + I_shift(mu)) / (I_a6(0) + I_shift(0)) = (1 + e^mu)/2.
ContourResult phi_mgf(const BigReal& mu, const ContourSpec& spec = {});

}  // namespace vcell
