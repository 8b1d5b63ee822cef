#include "vcell/scaling_fn.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "vcell/errors.hpp"

namespace vcell {

namespace {

using L = Laurent<BigReal>;

struct BoundQc {
    ScalarCoeffs u, v;
};

BoundQc bind(const QcPoly& p, const BigReal& a) { return {bind_a(p.u, a), bind_a(p.v, a)}; }

template <class T>
T eval_qc(const BoundQc& p, const T& b, const T& c, const T& zero) {
    T r = horner_b(p.u, b, zero);
    if (!p.v.by_b.empty()) r = r + c * horner_b(p.v, b, zero);
    return r;
}

// The coefficient tables bound at one value of a.
struct Bound {
    std::vector<std::vector<BoundQc>> t, u;
    BoundQc D;
    ScalarCoeffs E, E_tilde, E_over_b;

    Bound(const ScalingTables& tab, const BigReal& a) {
        t.assign(5, {});
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) t[i].push_back(bind(tab.t[i][j], a));
        u.assign(3, {});
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) u[i].push_back(bind(tab.u[i][j], a));
        D = bind(tab.D, a);
        E = bind_a(tab.E, a);
        E_tilde = bind_a(tab.E_tilde, a);
        E_over_b = bind_a(tab.E_over_b, a);
    }
};

// sum_{i,j} k_ij sig^i tau^j
template <class T>
T frak(const std::vector<std::vector<BoundQc>>& k, const T& sig, const T& tau, const T& b, const T& c,
       const T& zero) {
    T acc = zero;
    for (size_t i = k.size(); i-- > 0;) {
        T row = zero;
        for (size_t j = k[i].size(); j-- > 0;) row = row * tau + eval_qc(k[i][j], b, c, zero);
        acc = acc * sig + row;
    }
    return acc;
}

int bits_or_working(int bits) { return bits > 0 ? bits : working_precision(); }

double log2_ratio(const BigReal& num, const BigReal& den) {
    if (den.is_zero()) return 1e9;
    return std::max(0.0, std::log2(num.to_double()) - std::log2(den.to_double()));
}

void check_domain(const BigReal& S, const BigReal& a, const BigReal& b) {
    if (!(S.sign() > 0)) throw DomainError("scaling function: S must be positive");
    if (!(a.sign() > 0) && !(b.sign() > 0)) throw DomainError("scaling function: a must be positive");
    if (a.sign() < 0 || b.sign() < 0) throw DomainError("scaling function: a, b must be nonnegative");
}

BigReal direct(const BigReal& S, const BigReal& a, const BigReal& b) {
    const Bound k(ScalingTables::instance(), a);
    BigReal zero(0);
    BigReal c = sqrt((a * a + b * b) / 2L);
    BigReal sig = exp(-(a * S)), tau = exp(-(b * S));
    BigReal T = frak(k.t, sig, tau, b, c, zero);
    BigReal U = frak(k.u, sig, tau, b, c, zero);
    BigReal D = eval_qc(k.D, b, c, zero);
    BigReal E = horner_b(k.E, b, zero);
    BigReal ratio = E / U;
    return -(sig * tau) / 6L * T / D * ratio * ratio * ratio;
}

// Taylor path in x = b - a (near diagonal) or x = b (near zero), a >= b.
BigReal taylor_path(bool diagonal, const BigReal& S, const BigReal& a, const BigReal& b, int bits) {
    BigReal x0 = diagonal ? b - a : b;
    double lr = x0.is_zero() ? 1e9 : log2_ratio(min(a, BigReal(1) / S) / 4L, abs(x0));
    int K = std::clamp(static_cast<int>(std::ceil((bits + 32) / std::max(lr, 1.0))) + 6, 8, 400);

    const Bound k(ScalingTables::instance(), a);
    L zero(0, {}, L::kExact);
    L x = L::monomial(BigReal(1), 1);
    L bs = diagonal ? L(a) + x : x;
    L c = sqrt((L(a * a) + bs * bs) / 2L, K);
    L ex = exp(x * (-S), K);
    BigReal ea = exp(-(a * S));
    L sig(ea);
    L tau = diagonal ? ex * ea : ex;
    L pref = diagonal ? ex * (ea * ea) : ex * ea;

    // T and U vanish at x = 0 (U to second order on both paths, T to third
    // order at b = 0); E carries its zero analytically.
    BigReal rel = epsilon(bits / 2);
    L T = frak(k.t, sig, tau, bs, c, zero).strip(rel);
    L U = frak(k.u, sig, tau, bs, c, zero).strip(rel);
    L D = eval_qc(k.D, bs, c, zero);
    L E = diagonal ? horner_b(k.E_tilde, bs, zero).shifted(2) : horner_b(k.E_over_b, bs, zero).shifted(1);
    L ratio = E * inverse(U, K);
    L F = pref * T * inverse(D, K) * ratio * ratio * ratio;
    if (F.is_zero() || F.min_order() < 0)
        throw PrecisionError("scaling function: Taylor path did not cancel (leading order " +
                             std::to_string(F.min_order()) + ")");
    F = F.truncated(K);
    return -F.evaluate(x0) / 6L;
}

template <class T>
T b0_ratio(const ScalingTables& tab, const T& r, const std::vector<T>& em, const T& zero) {
    T num = zero;
    for (int m = 1; m <= 5; ++m) num = num + tab.p[m].eval_series(r, zero) * em[m];
    return num;
}

BigReal b0_prefactor(const BigReal& a) {
    BigReal s2 = sqrt(BigReal(2));
    return -(BigReal(36) * s2 * a * a * a) / (BigReal(577) + BigReal(408) * s2);
}

}  // namespace

FPath select_path(const BigReal& a, const BigReal& b, const ScalingConfig& cfg) {
    BigReal hi = max(a, b), lo = min(a, b);
    if (lo.is_zero() || lo / hi < BigReal(cfg.zero_threshold)) return FPath::near_zero;
    if (abs(a - b) / hi < BigReal(cfg.diagonal_threshold)) return FPath::near_diagonal;
    return FPath::direct;
}

BigReal eval_F_path(FPath path, const BigReal& S, const BigReal& a_in, const BigReal& b_in, int precision_bits) {
    check_domain(S, a_in, b_in);
    int bits = bits_or_working(precision_bits);
    int out_bits = working_precision();
    // symmetric: keep a >= b
    BigReal a = max(a_in, b_in), b = min(a_in, b_in);
    BigReal result;
    if (path == FPath::direct) {
        if (b.is_zero()) throw DomainError("scaling function: direct path needs b > 0");
        double guard = 32 + 2 * log2_ratio(a, a - b) + log2_ratio(a, b) + 6 * log2_ratio(BigReal(1), b * S);
        if (guard > 1e6) throw PrecisionError("scaling function: direct path at the diagonal");
        PrecisionScope p(bits + static_cast<int>(guard));
        result = direct(S, a, b);
    } else {
        PrecisionScope p(bits + 64);
        result = taylor_path(path == FPath::near_diagonal, S, a, b, bits + 64);
    }
    PrecisionScope p(out_bits);
    return result * 1L;
}

BigReal eval_F(const BigReal& S, const BigReal& a, const BigReal& b, const ScalingConfig& cfg) {
    check_domain(S, a, b);
    return eval_F_path(select_path(a, b, cfg), S, a, b, cfg.precision_bits);
}

BigReal eval_F_diag(const BigReal& S, const BigReal& a) {
    if (!(S.sign() > 0) || !(a.sign() > 0)) throw DomainError("eval_F_diag: S, a must be positive");
    BigReal q = exp(-(a * S) * 2L);
    BigReal om = -expm1(-(a * S) * 2L);
    return a * a * a * 2L * q * (BigReal(1) + q) / (om * om * om);
}

BigReal eval_F_b0(const BigReal& S, const BigReal& a) {
    if (!(S.sign() > 0) || !(a.sign() > 0)) throw DomainError("eval_F_b0: S, a must be positive");
    int out_bits = working_precision();
    BigReal result;
    {
        double guard = 32 + 8 * log2_ratio(BigReal(1), a * S);
        PrecisionScope p(out_bits + static_cast<int>(guard));
        const ScalingTables& tab = ScalingTables::instance();
        BigReal r = a * S, e = exp(-r);
        std::vector<BigReal> em{BigReal(1)};
        for (int m = 1; m <= 5; ++m) em.push_back(em.back() * e);
        BigReal num = b0_ratio(tab, r, em, BigReal(0));
        BigReal den(0);
        for (int m = 0; m <= 2; ++m) den += tab.q[m].eval(r) * em[m];
        result = b0_prefactor(a) * num / (den * den * den);
    }
    return result * 1L;
}

BigReal eval_r(const BigReal& S, const BigReal& a) {
    if (!(S.sign() > 0) || !(a.sign() > 0)) throw DomainError("eval_r: S, a must be positive");
    BigReal e = exp(-(a * S));
    BigReal om = -expm1(-(a * S));
    return -(a * a) * (BigReal(1) + e * 10L + e * e) / (om * om * 3L);
}

Laurent<BigReal> F_laurent(const BigReal& a, const BigReal& tau, int top) {
    if (!(a.sign() > 0)) throw DomainError("F_laurent: a must be positive");
    if (tau.sign() < 0) throw DomainError("F_laurent: tau must be nonnegative");
    const ScalingTables& tab = ScalingTables::instance();
    BigReal rel = epsilon(working_precision() / 2);
    L zero(0, {}, L::kExact);
    for (int K = 48; K <= 480; K += 48) {
        L F;
        if (tau.is_zero()) {
            L r = L::monomial(a, 1);
            L e = exp(L::monomial(-a, 1), K);
            std::vector<L> em{L(BigReal(1))};
            for (int m = 1; m <= 5; ++m) em.push_back(em.back() * e);
            L num = b0_ratio(tab, r, em, zero);
            L den = zero;
            for (int m = 0; m <= 2; ++m) den = den + tab.q[m].eval_series(r, zero) * em[m];
            den = den.strip(rel);
            F = num * inverse(den * den * den, K) * b0_prefactor(a);
        } else {
            const Bound k(tab, a);
            L b = L::monomial(tau, -1);
            L c = sqrt(L(a * a / 2L) + L::monomial(tau * tau / 2L, -2), K);
            L sig = exp(L::monomial(-a, 1), K);
            L te(exp(-tau));
            L T = frak(k.t, sig, te, b, c, zero);
            L U = frak(k.u, sig, te, b, c, zero).strip(rel);
            L D = eval_qc(k.D, b, c, zero);
            L E = horner_b(k.E, b, zero);
            L ratio = E * inverse(U, K);
            F = sig * exp(-tau) * T * inverse(D, K) * ratio * ratio * ratio / -6L;
        }
        if (F.prec() > top) return F;
    }
    throw TruncationError("F_laurent: order S^" + std::to_string(top) + " not reached");
}

BigReal extract_phi_laurent(int i, const BigReal& tau, int precision_bits) {
    int out_bits = working_precision();
    BigReal v;
    {
        PrecisionScope p(precision_bits);
        v = F_laurent(sqrt(BigReal(6)), tau, 2 * i - 3)[2 * i - 3];
    }
    PrecisionScope p(out_bits);
    return v * 1L;
}

namespace {

// Coefficients of the polynomial through (x_k, y_k), low degree first.
std::vector<BigReal> polyfit_exact(const std::vector<BigReal>& x, const std::vector<BigReal>& y) {
    size_t n = x.size();
    std::vector<std::vector<BigReal>> A(n, std::vector<BigReal>(n + 1));
    for (size_t r = 0; r < n; ++r) {
        BigReal pw(1);
        for (size_t c = 0; c < n; ++c) {
            A[r][c] = pw;
            pw *= x[r];
        }
        A[r][n] = y[r];
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (abs(A[r][col]) > abs(A[piv][col])) piv = r;
        std::swap(A[col], A[piv]);
        for (size_t r = col + 1; r < n; ++r) {
            BigReal f = A[r][col] / A[col][col];
            for (size_t c = col; c <= n; ++c) A[r][c] -= f * A[col][c];
        }
    }
    std::vector<BigReal> sol(n);
    for (size_t r = n; r-- > 0;) {
        BigReal acc = A[r][n];
        for (size_t c = r + 1; c < n; ++c) acc -= A[r][c] * sol[c];
        sol[r] = acc / A[r][r];
    }
    return sol;
}

}  // namespace

BigReal extract_phi_fit(int i, const BigReal& tau, int precision_bits) {
    if (i < 0) throw DomainError("extract_phi_fit: i must be nonnegative");
    // For tau > 0, S^3 F is a series in S^2; at tau = 0 odd powers of S
    // appear beyond S^3 F's S^6 term, so the fit runs in S itself.
    const bool even = !tau.is_zero();
    const int n = even ? 16 : 28;
    const int power = even ? i : 2 * i;
    if (power >= n / 2) throw TruncationError("extract_phi_fit: order beyond the fit window");
    int out_bits = working_precision();
    int bits = 2 * precision_bits + 128;
    BigReal v;
    {
        PrecisionScope p(bits);
        BigReal a = sqrt(BigReal(6));
        BigReal S = even ? BigReal(1) / 50L : BigReal(1) / 100L;
        BigReal ratio = BigReal(4) / 5L;
        std::vector<BigReal> x, g;
        for (int k = 0; k < n; ++k) {
            BigReal f = even ? eval_F_path(FPath::direct, S, a, tau / S, bits) : eval_F_b0(S, a);
            x.push_back(even ? S * S : S);
            g.push_back(f * S * S * S);
            S *= ratio;
        }
        v = polyfit_exact(x, g)[power];
    }
    PrecisionScope p(out_bits);
    return v * 1L;
}

PhiCoefficient extract_phi_coeff(int i, const BigReal& tau, int precision_bits) {
    if (i < 0 || i > 6) throw DomainError("extract_phi_coeff: i outside the computed window 0..6");
    PhiCoefficient out;
    out.precision_bits = precision_bits;
    out.value = extract_phi_laurent(i, tau, precision_bits);
    out.fit_value = extract_phi_fit(i, tau, precision_bits);
    out.discrepancy = abs(out.value - out.fit_value);
    BigReal tol = epsilon(precision_bits / 8) * max(BigReal(1), abs(out.value));
    if (out.discrepancy > tol)
        throw PrecisionError("extract_phi_coeff: Laurent and fit paths disagree by " + out.discrepancy.str(6));
    return out;
}

}  // namespace vcell
