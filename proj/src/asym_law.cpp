#include "vcell/asym_law.hpp"

#include <algorithm>

#include "vcell/errors.hpp"

namespace vcell {

OmegaPoly omega_poly_mul(const OmegaPoly& a, const OmegaPoly& b) {
    if (a.empty() || b.empty()) return {};
    OmegaPoly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

mpq_class omega_poly_eval(const OmegaPoly& p, const mpq_class& w) {
    mpq_class acc = 0;
    for (size_t k = p.size(); k-- > 0;) acc = acc * w + p[k];
    return acc;
}

OmegaPoly omega_poly_reflect(const OmegaPoly& p) {
    OmegaPoly r = p;
    for (size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
    return r;
}

namespace {

OmegaPoly scaled(OmegaPoly p, const mpq_class& s) {
    for (auto& c : p) c *= s;
    return p;
}

OmegaPoly one_plus_w_cubed() { return {1, 3, 3, 1}; }

}  // namespace

const AsymExpansion& asym_expansion() {
    static const AsymExpansion e = [] {
        AsymExpansion x;
        x.s1 = scaled(omega_poly_mul(one_plus_w_cubed(), {8, -9, 3}), mpq_class(-1, 480));
        x.s3 = scaled(omega_poly_mul(one_plus_w_cubed(), {32, -33, 3, 9, -3}), mpq_class(1, 6048));
        return x;
    }();
    return e;
}

const OmegaPoly& Pi_poly() {
    static const OmegaPoly p = scaled(omega_poly_mul(one_plus_w_cubed(), {32, -33, 3, 9, -3}), mpq_class(1, 64));
    return p;
}

mpq_class Pi(const mpq_class& omega) {
    if (abs(omega) > 1) throw DomainError("Pi: |omega| must not exceed 1");
    return omega_poly_eval(Pi_poly(), omega);
}

BigReal Pi(const BigReal& omega) {
    if (abs(omega) > BigReal(1)) throw DomainError("Pi: |omega| must not exceed 1");
    const OmegaPoly& p = Pi_poly();
    BigReal acc(0);
    for (size_t k = p.size(); k-- > 0;) acc = acc * omega + BigReal(p[k]);
    return acc;
}

ConsistencyReport check_expansion_consistency(const mpq_class& a_squared, const mpq_class& omega) {
    if (!(a_squared > 0)) throw DomainError("check_expansion_consistency: a must be positive");
    if (!(abs(omega) < 1)) throw DomainError("check_expansion_consistency: need |omega| < 1");
    const AsymExpansion& e = asym_expansion();
    ConsistencyReport r;
    const mpq_class a6_at_sqrt6 = 216;
    r.s3_value = omega_poly_eval(e.s3, omega) * a6_at_sqrt6;
    r.pi_from_s3 = r.s3_value * mpq_class(7, 16);
    r.pi_value = Pi(omega);
    mpq_class a4 = a_squared * a_squared;
    r.s1_value = omega_poly_eval(e.s1, omega) * a4;
    r.s1_at_zero = omega_poly_eval(e.s1, 0) * a4;

    if (r.pi_from_s3 != r.pi_value)
        r.failures.push_back("(7/16)[S^3] at a = sqrt6 is " + r.pi_from_s3.get_str() + ", Pi is " + r.pi_value.get_str());
    if (r.s1_at_zero != -a4 / 60)
        r.failures.push_back("[S] at omega = 0 is " + r.s1_at_zero.get_str() + ", expected -a^4/60");
    // polynomial level: (7/16) 216 s3 == Pi_poly and Pi(w) + Pi(-w) == 1
    if (scaled(e.s3, a6_at_sqrt6 * mpq_class(7, 16)) != Pi_poly())
        r.failures.push_back("(7/16) 216 s3(omega) differs from Pi(omega) as a polynomial");
    OmegaPoly sum = Pi_poly(), refl = omega_poly_reflect(Pi_poly());
    for (size_t k = 0; k < sum.size(); ++k) sum[k] += refl[k];
    OmegaPoly one(sum.size(), 0);
    one[0] = 1;
    if (sum != one) r.failures.push_back("Pi(omega) + Pi(-omega) is not identically 1");
    return r;
}

}  // namespace vcell
