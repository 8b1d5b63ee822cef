#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "vcell/bigfloat.hpp"

namespace vcell {

// Ascending coefficients in omega, exact.
using OmegaPoly = std::vector<mpq_class>;

OmegaPoly omega_poly_mul(const OmegaPoly& a, const OmegaPoly& b);
mpq_class omega_poly_eval(const OmegaPoly& p, const mpq_class& w);
OmegaPoly omega_poly_reflect(const OmegaPoly& p);  // p(-omega)

// (1/64)(1+w)^3 (32 - 33w + 3w^2 + 9w^3 - 3w^4), expanded.
const OmegaPoly& Pi_poly();
// Probability that the disfavoured cell stays finite; |omega| <= 1.
mpq_class Pi(const mpq_class& omega);
BigReal Pi(const BigReal& omega);

// Small-S expansion of F(S, omega S, a, 0) beyond 1/(2 S^3):
// s1 multiplies a^4 S, s3 multiplies a^6 S^3.
struct AsymExpansion {
    OmegaPoly s1;  // -(1/480)(1+w)^3 (8 - 9w + 3w^2)
    OmegaPoly s3;  // (1/6048)(1+w)^3 (32 - 33w + 3w^2 + 9w^3 - 3w^4)
};
const AsymExpansion& asym_expansion();

struct ConsistencyReport {
    mpq_class s3_value;     // [S^3] at a = sqrt6
    mpq_class pi_from_s3;   // (7/16) of it
    mpq_class pi_value;
    mpq_class s1_value;     // [S^1] at the given a^2 and omega
    mpq_class s1_at_zero;   // [S^1] at omega = 0
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

// Exact identity checks; a enters through a^2 so that a^4, a^6 stay rational.
ConsistencyReport check_expansion_consistency(const mpq_class& a_squared, const mpq_class& omega);

}  // namespace vcell
