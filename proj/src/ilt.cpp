#include "vcell/ilt.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "vcell/errors.hpp"

namespace vcell {

namespace {

void check_args(const BigReal& t, int nodes) {
    if (!(t.sign() > 0)) throw DomainError("ilt: t must be positive");
    if (nodes < 8) throw DomainError("ilt: node_count must be at least 8");
}

BigComplex eval_checked(const LaplaceTransform& F, const BigComplex& s) {
    BigComplex v = F(s);
    if (!v.re.is_finite() || !v.im.is_finite())
        throw ConvergenceError("ilt: transform not finite at s = " + s.re.str(8) + " + " + s.im.str(8) + "i");
    return v;
}

}  // namespace

// Abate-Valko fixed Talbot: s(th) = r th (cot th + i), r = 2M/(5t).
BigReal ilt_talbot(const LaplaceTransform& F, const BigReal& t, int nodes) {
    check_args(t, nodes);
    int out_bits = working_precision();
    BigReal acc;
    {
        PrecisionScope ps(std::max(out_bits, static_cast<int>(std::ceil(3.33 * nodes)) + 32));
        const long M = nodes;
        BigReal r = BigReal(2L * M) / (t * 5L);
        acc = (exp(r * t) * eval_checked(F, BigComplex(r)).re) / 2L;
        BigReal p = pi();
        for (long k = 1; k < M; ++k) {
            BigReal th = p * k / M;
            BigReal cot = cos(th) / sin(th);
            BigComplex s(r * th * cot, r * th);
            BigComplex w(BigReal(1), th + (th * cot - BigReal(1)) * cot);
            acc += (exp(s * t) * eval_checked(F, s) * w).re;
        }
        acc = acc * r / M;
    }
    return acc + BigReal(0);
}

// Abate-Whitt: trapezoidal Bromwich sum on Re s = A/(2t), Euler-averaged
// over `nodes` binomial partial sums.
BigReal ilt_euler(const LaplaceTransform& F, const BigReal& t, int nodes) {
    check_args(t, nodes);
    int out_bits = working_precision();
    const int n = nodes, m = nodes;
    const double A_d = nodes * std::log(10.0) / 3;
    BigReal res;
    {
        PrecisionScope ps(out_bits + static_cast<int>(A_d / (2 * std::log(2.0))) + 32);
        BigReal A(A_d);
        BigReal p = pi();
        BigReal scale = exp(A / 2L) / t;
        BigReal x = A / (t * 2L);
        std::vector<BigReal> partial(n + m + 1);
        BigReal sum = eval_checked(F, BigComplex(x)).re / 2L;
        partial[0] = sum;
        for (int k = 1; k <= n + m; ++k) {
            BigComplex s(x, p * static_cast<long>(k) / t);
            BigReal term = eval_checked(F, s).re;
            sum += (k % 2 ? -term : term);
            partial[k] = sum;
        }
        // binomial average of s_n .. s_{n+m}
        mpz_class binom = 1;
        BigReal avg;
        for (int k = 0; k <= m; ++k) {
            avg += BigReal(binom) * partial[n + k];
            binom = binom * (m - k) / (k + 1);
        }
        res = scale * ldexp(avg, -m);
    }
    return res + BigReal(0);
}

ILTResult ilt(const LaplaceTransform& F, const BigReal& t, const ILTConfig& cfg) {
    int bits = cfg.precision_bits > 0 ? cfg.precision_bits : working_precision();
    PrecisionScope ps(bits);
    BigReal talbot = ilt_talbot(F, t, cfg.node_count);
    BigReal euler = ilt_euler(F, t, cfg.node_count);
    ILTResult r;
    bool primary_talbot = cfg.method == ILTMethod::deformed_contour;
    r.value = primary_talbot ? talbot : euler;
    r.secondary = primary_talbot ? euler : talbot;
    r.error = abs(talbot - euler);
    BigReal tol = cfg.target_tol.is_zero() ? BigReal("1e-6") : cfg.target_tol;
    if (r.error > tol * max(abs(r.value), epsilon(bits / 2)))
        throw ConvergenceError("ilt: methods disagree at t = " + t.str(8) + ": " + talbot.str(16) + " vs " +
                               euler.str(16));
    return r;
}

}  // namespace vcell
