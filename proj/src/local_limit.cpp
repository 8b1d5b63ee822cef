#include "vcell/local_limit.hpp"

#include <cmath>
#include <functional>

#include "vcell/errors.hpp"

namespace vcell {

namespace {

// K(a) given a, a^4 and the side of the cut (+1 upper, -1 lower, 0 principal form).
using KFun = std::function<BigComplex(const BigComplex& a, const BigComplex& a4, int side)>;

// x^{3/2} with arg x continued to (0, 2pi) on the upper side, (-2pi, 0) on the lower.
BigComplex pow32_side(const BigComplex& x, int side) {
    BigReal r = abs(x), th = arg(x);
    BigReal twopi = pi() * 2L;
    if (side > 0 && th.sign() < 0) th += twopi;
    if (side < 0 && th.sign() > 0) th -= twopi;
    return polar(r * sqrt(r), th * 3L / 2L);
}

BigComplex pow_n(const BigComplex& z, int n) {
    BigComplex r(BigReal(1), BigReal(0));
    for (int k = 0; k < n; ++k) r = r * z;
    return r;
}

// -a^3/9 e^{a^4/36}
BigComplex weight(const BigComplex& a, const BigComplex& a4) { return -(a * a * a) * exp(a4 / 36L) / 9L; }

ContourResult run_contour(const KFun& K, bool has_cut, const BigReal& mu, const ContourSpec& spec) {
    BigReal r2 = sqrt(BigReal(2)) / 2L;
    BigComplex up(r2, r2), down(r2, -r2);
    BigReal x0(0), L = spec.ray_length;
    bool shifted = spec.shape == ContourShape::shifted_vertex;
    if (shifted) {
        // mu < 0: the cuts run from 0 along the 45-degree lines, parallel to the rays
        x0 = mu.sign() < 0 ? BigReal(1) : max(BigReal(1), root(mu * 36L, 4) * 2L);
        L += x0 * 2L;
    } else if (mu.sign() < 0) {
        throw DomainError("contour through the origin needs mu >= 0; use the shifted vertex");
    }
    int side_in = shifted ? 0 : 1, side_out = shifted ? 0 : -1;
    // the integrand peaks near e^{1.8 x0^4/36} on the shifted rays
    int out_bits = working_precision();
    double x04 = std::pow(x0.to_double(), 4);
    PrecisionScope guard(out_bits + static_cast<int>(x04 / 18 / std::log(2.0)) + 16);

    auto ray = [&](const BigComplex& dir, int side, int orient) {
        return integrate(
            [&, orient, side](const BigReal& t) {
                BigComplex a = BigComplex(x0) + dir * t;
                BigComplex a2 = a * a, a4 = a2 * a2;
                return weight(a, a4) * K(a, a4, side) * dir * static_cast<long>(orient);
            },
            BigReal(0), L, spec.quadrature);
    };
    // inbound along +45 degrees, outbound along -45 degrees
    QuadratureResult in = ray(up, side_in, -1), out = ray(down, side_out, 1);
    BigComplex total = in.value + out.value;
    BigReal err = in.error + out.error;

    if (!shifted && has_cut && mu.sign() > 0) {
        // back-and-forth along [0, (36 mu)^{1/4}] in w = sqrt(36 mu - a^4):
        // a^3 da = -(w/2) dw
        BigReal wmax = sqrt(mu) * 6L;
        auto leg = [&](int side, int orient) {
            return integrate(
                [&, side, orient](const BigReal& w) {
                    BigReal a4r = mu * 36L - w * w;
                    BigComplex a4(a4r, BigReal(0));
                    BigComplex a(root(max(a4r, BigReal(0)), 4), BigReal(0));
                    BigComplex k = K(a, a4, side);
                    return k * (w * exp(a4r / 36L) / 18L) * static_cast<long>(orient);
                },
                BigReal(0), wmax, spec.quadrature);
        };
        QuadratureResult upper = leg(1, -1), lower = leg(-1, 1);
        total += upper.value + lower.value;
        err += upper.error + lower.error;
    }
    BigReal twopi = pi() * 2L;
    PrecisionScope back(out_bits);
    ContourResult res;
    res.value = total.im / twopi;
    res.imag_residue = abs(total.re) / twopi;
    res.error = err / twopi;
    BigReal tol = spec.imag_tol.is_zero() ? epsilon(working_precision() / 2) * max(BigReal(1), abs(res.value))
                                          : spec.imag_tol;
    if (res.imag_residue > tol)
        throw ConvergenceError("contour integral: imaginary residue " + res.imag_residue.str(6) +
                               " above tolerance (contour or branch error)");
    return res;
}

}  // namespace

ContourResult contour_integral(ContourKind kind, const BigReal& mu, const ContourSpec& spec) {
    if (kind == ContourKind::a6)
        return run_contour([](const BigComplex& a, const BigComplex&, int) { return pow_n(a, 6); }, false, mu, spec);
    BigReal m36 = mu * 36L;
    return run_contour(
        [m36](const BigComplex& a, const BigComplex& a4, int side) {
            if (side == 0) {
                // a^6 (1 - 36 mu / a^4)^{3/2}, principal branch
                BigComplex s = BigComplex(BigReal(1), BigReal(0)) - BigComplex(m36) / a4;
                return pow_n(a, 6) * pow(s, BigReal(3) / 2L);
            }
            return pow32_side(a4 - m36, side);
        },
        true, mu, spec);
}

ContourResult contour_monomial(int power, const BigReal& mu, const ContourSpec& spec) {
    if (power < 0) throw DomainError("contour_monomial: negative power");
    return run_contour([power](const BigComplex& a, const BigComplex&, int) { return pow_n(a, power); }, false, mu, spec);
}

ContourResult phi_mgf(const BigReal& mu, const ContourSpec& spec) {
    ContourSpec at_mu = spec;
    if (mu.sign() < 0) at_mu.shape = ContourShape::shifted_vertex;
    ContourResult n1 = contour_integral(ContourKind::a6, mu, at_mu);
    ContourResult n2 = contour_integral(ContourKind::quartic_shift, mu, at_mu);
    ContourResult d1 = contour_integral(ContourKind::a6, BigReal(0), spec);
    ContourResult d2 = contour_integral(ContourKind::quartic_shift, BigReal(0), spec);
    BigReal num = n1.value + n2.value, den = d1.value + d2.value;
    ContourResult r;
    r.value = num / den;
    r.error = abs(r.value) * ((n1.error + n2.error) / abs(num) + (d1.error + d2.error) / abs(den));
    r.imag_residue = abs(r.value) * ((n1.imag_residue + n2.imag_residue) / abs(num) +
                                     (d1.imag_residue + d2.imag_residue) / abs(den));
    return r;
}

}  // namespace vcell
