#pragma once

#include <array>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vcell/bigfloat.hpp"
#include "vcell/ilt.hpp"

namespace vcell {

// x1 + x2 sqrt2 + x3 sqrt3 + x6 sqrt6, exact.
struct Surd {
    mpq_class x1, x2, x3, x6;

    Surd() = default;
    Surd(long v) : x1(v) {}
    Surd(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
        : x1(std::move(a)), x2(std::move(b)), x3(std::move(c)), x6(std::move(d)) {}

    bool is_zero() const { return x1 == 0 && x2 == 0 && x3 == 0 && x6 == 0; }
    BigReal eval() const;
    std::string to_string() const;

    friend bool operator==(const Surd& a, const Surd& b) {
        return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3 && a.x6 == b.x6;
    }
    friend Surd operator+(const Surd& a, const Surd& b);
    friend Surd operator-(const Surd& a, const Surd& b);
    friend Surd operator-(const Surd& a);
    friend Surd operator*(const Surd& a, const Surd& b);
    friend Surd operator*(const Surd& a, const mpq_class& q);
};

Surd inverse(const Surd& x);

// Polynomials of the closed Laplace transform of the cell volume law, in r = sigma^{1/4}.
struct LawPolynomials {
    std::array<Surd, 9> P;
    // Pm[m-1][0] at gamma = +sqrt2, Pm[m-1][1] at gamma = -sqrt2
    std::array<std::array<std::array<Surd, 9>, 2>, 3> Pm;
    std::array<Surd, 3> Q;  // 1 + sqrt3 r + r^2
    Surd d_plus, d_minus;   // 4 +- 3 sqrt2

    static const LawPolynomials& instance();
};

// Taylor coefficients of E in r = sigma^{1/4} at r = 0, exact.
std::vector<Surd> E_series_in_r(int order, const LawPolynomials& law = LawPolynomials::instance());
// Transcription checks; empty when all hold. The large-sigma check uses the built-in law.
std::vector<std::string> law_identity_failures(const LawPolynomials& law);

// E[e^{-sigma V}] at real sigma >= 0 and at complex sigma (principal sigma^{1/4}).
// Guard bits are raised until the measured cancellation is covered; throws
// PrecisionError if that fails. precision_bits 0: working precision.
BigReal E_sigma(const BigReal& sigma, int precision_bits = 0);
BigComplex E_sigma(const BigComplex& sigma, int precision_bits = 0);
// dE/dsigma by a four-point central difference at raised precision.
BigComplex E_sigma_derivative(const BigComplex& sigma, int precision_bits = 0);

// (9/2)(3 sqrt2 - 4) and E(sigma) e^{sqrt6 sigma^{1/4}} divided by it.
BigReal E_large_sigma_constant();
BigReal E_large_sigma_ratio(const BigReal& sigma);

// Density of the rescaled finite cell volume, its CDF and the truncated
// first moment, through the two-method inverse Laplace transform.
ILTResult P_V(const BigReal& V, const ILTConfig& cfg = {});
ILTResult P_cdf(const BigReal& V, const ILTConfig& cfg = {});
ILTResult P_truncated_mean(const BigReal& V, const ILTConfig& cfg = {});

// 665 sqrt3 / (4096 Gamma(3/4)) V^{-5/4}
BigReal asympt_tail(const BigReal& V);
// 3^{11/6} (3 - 2 sqrt2) / (2 sqrt pi) V^{-7/6} exp(-(3^{5/3}/4) V^{-1/3})
BigReal asympt_flat(const BigReal& V);
// stationary point of sigma V - sqrt6 sigma^{1/4}
BigReal saddle_point(const BigReal& V);

struct SmallSigmaFit {
    BigReal c1, c2, c3, c4;  // coefficients of sigma^{1/4}, ^{1/2}, ^{3/4}, sigma
};
// Polynomial fit of E - 1 in r = sigma^{1/4} over sigma in [lo, hi].
SmallSigmaFit small_sigma_fit(const BigReal& lo, const BigReal& hi, int points = 10);

// Trees: e^{-2 sqrt sigma} and its inverse, V^{-3/2} e^{-1/V} / sqrt pi.
BigReal tree_E(const BigReal& sigma);
BigComplex tree_E(const BigComplex& sigma);
BigReal tree_P(const BigReal& V);

// One-sided Levy law with parameter alpha: small-V form
// V^{-flat_power} exp(-c V^{-flat_exponent}), tail V^{-tail_exponent}.
struct LevyAsymptotics {
    mpq_class flat_power, flat_exponent, tail_exponent;
};
LevyAsymptotics levy_asympt(const mpq_class& alpha);

}  // namespace vcell
