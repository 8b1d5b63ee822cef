#include "vcell/cell_law.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "vcell/errors.hpp"

namespace vcell {

Surd operator+(const Surd& a, const Surd& b) { return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3, a.x6 + b.x6}; }
Surd operator-(const Surd& a, const Surd& b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3, a.x6 - b.x6}; }
Surd operator-(const Surd& a) { return {-a.x1, -a.x2, -a.x3, -a.x6}; }

Surd operator*(const Surd& a, const Surd& b) {
    return {a.x1 * b.x1 + 2 * a.x2 * b.x2 + 3 * a.x3 * b.x3 + 6 * a.x6 * b.x6,
            a.x1 * b.x2 + a.x2 * b.x1 + 3 * (a.x3 * b.x6 + a.x6 * b.x3),
            a.x1 * b.x3 + a.x3 * b.x1 + 2 * (a.x2 * b.x6 + a.x6 * b.x2),
            a.x1 * b.x6 + a.x6 * b.x1 + a.x2 * b.x3 + a.x3 * b.x2};
}

Surd operator*(const Surd& a, const mpq_class& q) { return {a.x1 * q, a.x2 * q, a.x3 * q, a.x6 * q}; }

Surd inverse(const Surd& x) {
    if (x.is_zero()) throw DomainError("Surd: inverse of zero");
    // x = A + B sqrt3 with A, B in Q(sqrt2)
    Surd c3{x.x1, x.x2, -x.x3, -x.x6};
    Surd n = x * c3;  // in Q(sqrt2)
    Surd c2{n.x1, -n.x2, 0, 0};
    mpq_class norm = (n * c2).x1;
    return c3 * c2 * (1 / norm);
}

BigReal Surd::eval() const {
    BigReal s2 = sqrt(BigReal(2)), s3 = sqrt(BigReal(3));
    return BigReal(x1) + BigReal(x2) * s2 + BigReal(x3) * s3 + BigReal(x6) * (s2 * s3);
}

std::string Surd::to_string() const {
    std::ostringstream os;
    os << x1.get_str() << " + " << x2.get_str() << "*sqrt2 + " << x3.get_str() << "*sqrt3 + " << x6.get_str()
       << "*sqrt6";
    return os.str();
}

namespace {

struct Coef {
    long c, u, v;  // c (u + v gamma)
};

// Coefficients at odd powers of r carry a sqrt3.
std::array<Surd, 9> bind_gamma(const std::array<Coef, 9>& cs, long scale, int gamma_sign) {
    std::array<Surd, 9> out;
    for (int k = 0; k < 9; ++k) {
        mpq_class a = mpq_class(scale * cs[k].c) * cs[k].u;
        mpq_class b = mpq_class(scale * cs[k].c) * cs[k].v * gamma_sign;
        out[k] = k % 2 ? Surd(0, 0, a, b) : Surd(a, b, 0, 0);
    }
    return out;
}

LawPolynomials build_law() {
    LawPolynomials L;
    const long p[9] = {-252, -399, -756, -161, 170, 153, 144, 22, 4};
    for (int k = 0; k < 9; ++k) L.P[k] = k % 2 ? Surd(0, 0, 96 * p[k], 0) : Surd(96 * p[k], 0, 0, 0);

    const std::array<Coef, 9> p1 = {{{126, 168, 85},
                                     {63, 867, 596},
                                     {1323, 132, 95},
                                     {28, 3153, 2300},
                                     {24, 2463, 1843},
                                     {1, 588, 905},
                                     {-36, 177, 124},
                                     {-6, 174, 127},
                                     {-36, 4, 3}}};
    const std::array<Coef, 9> p2 = {{{63, 24, 17},
                                     {63, 105, 74},
                                     {378, 78, 55},
                                     {14, 1569, 1108},
                                     {12, 2337, 1652},
                                     {1, 6954, 4919},
                                     {18, 154, 109},
                                     {6, 24, 17},
                                     {0, 0, 0}}};
    const std::array<Coef, 9> p3 = {{{126, 24, 17},
                                     {63, 277, 196},
                                     {189, 516, 365},
                                     {28, 3399, 2404},
                                     {24, 7193, 5087},
                                     {1, 68436, 48397},
                                     {36, 1465, 1036},
                                     {6, 1342, 949},
                                     {12, 140, 99}}};
    for (int s = 0; s < 2; ++s) {
        int g = s == 0 ? 1 : -1;
        L.Pm[0][s] = bind_gamma(p1, 1, g);
        L.Pm[1][s] = bind_gamma(p2, -8, g);
        L.Pm[2][s] = bind_gamma(p3, 1, g);
    }
    L.Q = {Surd(1), Surd(0, 0, 1, 0), Surd(1)};
    L.d_plus = Surd(4, 3, 0, 0);
    L.d_minus = Surd(4, -3, 0, 0);
    return L;
}

using SurdSeries = std::vector<Surd>;

SurdSeries mul(const SurdSeries& a, const SurdSeries& b, size_t n) {
    SurdSeries c(n);
    for (size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size() && i + j < n; ++j)
            if (!b[j].is_zero()) c[i + j] = c[i + j] + a[i] * b[j];
    }
    return c;
}

// e^{m sqrt6 r}
SurdSeries exp_series(long m, size_t n) {
    SurdSeries e(n);
    Surd step(0, 0, 0, m);
    e[0] = Surd(1);
    for (size_t k = 1; k < n; ++k) e[k] = e[k - 1] * step * mpq_class(1, static_cast<long>(k));
    return e;
}

SurdSeries from_poly(const std::array<Surd, 9>& p) { return SurdSeries(p.begin(), p.end()); }

}  // namespace

const LawPolynomials& LawPolynomials::instance() {
    static const LawPolynomials law = build_law();
    return law;
}

std::vector<Surd> E_series_in_r(int order, const LawPolynomials& L) {
    if (order < 0) throw DomainError("E_series_in_r: negative order");
    const int max_val = 8;
    size_t n = static_cast<size_t>(order + 4 * max_val + 1);

    SurdSeries num = from_poly(L.P);
    num.resize(n);
    for (int m = 1; m <= 3; ++m) {
        SurdSeries a = mul(from_poly(L.Pm[m - 1][0]), exp_series(m, n), n);
        SurdSeries b = mul(from_poly(L.Pm[m - 1][1]), exp_series(-m, n), n);
        for (size_t k = 0; k < n; ++k) num[k] = num[k] + a[k] + b[k];
    }
    SurdSeries inner = exp_series(1, n), inner_m = exp_series(-1, n);
    for (size_t k = 0; k < n; ++k) inner[k] = inner[k] * L.d_plus + inner_m[k] * L.d_minus;
    inner[0] = inner[0] + Surd(4);
    SurdSeries base = mul(SurdSeries(L.Q.begin(), L.Q.end()), inner, n);
    base[0] = base[0] - Surd(12);

    size_t v = 0;
    while (v < n && base[v].is_zero()) ++v;
    if (v > static_cast<size_t>(max_val)) throw DomainError("E_series_in_r: denominator vanishes to high order");
    SurdSeries b2 = mul(base, base, n), den = mul(b2, b2, n);
    size_t shift = 4 * v;
    for (size_t k = 0; k < shift; ++k)
        if (!num[k].is_zero()) throw DomainError("E_series_in_r: numerator does not vanish with the denominator");

    size_t len = static_cast<size_t>(order + 1);
    SurdSeries nn(num.begin() + shift, num.begin() + shift + len), dd(den.begin() + shift, den.begin() + shift + len);
    Surd inv0 = inverse(dd[0]);
    SurdSeries out(len);
    for (size_t k = 0; k < len; ++k) {
        Surd acc = nn[k];
        for (size_t j = 1; j <= k; ++j) acc = acc - dd[j] * out[k - j];
        out[k] = acc * inv0;
    }
    for (auto& c : out) c = c * mpq_class(3, 2);
    return out;
}

std::vector<std::string> law_identity_failures(const LawPolynomials& law) {
    std::vector<std::string> fail;
    if (!(law.Q[0] == Surd(1) && law.Q[1] == Surd(0, 0, 1, 0) && law.Q[2] == Surd(1)))
        fail.push_back("Q is not 1 + sqrt3 r + r^2");
    if (!(law.d_plus * law.d_minus == Surd(-2))) fail.push_back("(4 + 3 sqrt2)(4 - 3 sqrt2) != -2");
    for (int m = 0; m < 3; ++m)
        for (int k = 0; k < 9; ++k) {
            const Surd &a = law.Pm[m][0][k], &b = law.Pm[m][1][k];
            if (!(a.x1 == b.x1 && a.x2 == -b.x2 && a.x3 == b.x3 && a.x6 == -b.x6))
                fail.push_back("P" + std::to_string(m + 1) + " gamma = +-sqrt2 entries are not conjugate at r^" +
                               std::to_string(k));
        }
    try {
        std::vector<Surd> e = E_series_in_r(0, law);
        if (!(e[0] == Surd(1))) fail.push_back("E(0) = " + e[0].to_string() + ", not 1");
    } catch (const Error& ex) {
        fail.push_back(std::string("E(0): ") + ex.what());
    }
    BigReal d16 = abs(E_large_sigma_ratio(BigReal("1e16")) - BigReal(1));
    BigReal d24 = abs(E_large_sigma_ratio(BigReal("1e24")) - BigReal(1));
    if (!(d24 < d16 && d16 < BigReal("1e-3")))
        fail.push_back("large-sigma ratio does not approach 1: " + d16.str(6) + ", " + d24.str(6));
    return fail;
}

namespace {

template <class T>
T horner(const std::vector<BigReal>& c, const T& r) {
    T acc = T(c.back());
    for (size_t k = c.size() - 1; k-- > 0;) acc = acc * r + T(c[k]);
    return acc;
}

std::vector<BigReal> numeric(const std::array<Surd, 9>& p) {
    std::vector<BigReal> out;
    for (const Surd& s : p) out.push_back(s.eval());
    return out;
}

// log2 of sum|terms| / |sum|; large when the sum is zero
template <class T>
long lost_bits(const std::vector<T>& terms, const T& sum) {
    BigReal mag(0);
    for (const T& t : terms) mag += abs(t);
    BigReal s = abs(sum);
    if (mag.is_zero()) return 0;
    if (s.is_zero()) return 1L << 20;
    return std::max(0L, mag.exponent2() - s.exponent2() + 1);
}

BigReal fourth_root(const BigReal& s) { return root(s, 4); }
BigComplex fourth_root(const BigComplex& s) { return polar(root(abs(s), 4), arg(s) / 4L); }

template <class T>
std::pair<T, long> E_kernel(const T& sigma) {
    const LawPolynomials& L = LawPolynomials::instance();
    T r = fourth_root(sigma);
    T x = r * sqrt(BigReal(6));
    T e1 = exp(x), em1 = exp(-x);
    T e2 = e1 * e1, em2 = em1 * em1;
    T ep[3] = {e1, e2, e2 * e1}, em[3] = {em1, em2, em2 * em1};

    std::vector<T> nterms{horner(numeric(L.P), r)};
    for (int m = 0; m < 3; ++m) {
        nterms.push_back(horner(numeric(L.Pm[m][0]), r) * ep[m]);
        nterms.push_back(horner(numeric(L.Pm[m][1]), r) * em[m]);
    }
    T num = nterms[0];
    for (size_t k = 1; k < nterms.size(); ++k) num = num + nterms[k];

    T q = T(BigReal(1)) + r * (r + sqrt(BigReal(3)));
    std::vector<T> bterms{q * BigReal(4), q * e1 * L.d_plus.eval(), q * em1 * L.d_minus.eval(), T(BigReal(-12))};
    T base = bterms[0] + bterms[1] + bterms[2] + bterms[3];
    T b2 = base * base;
    T val = num / (b2 * b2) * BigReal(3) / 2L;
    long loss = std::max(lost_bits(nterms, num), lost_bits(bterms, base) + 2);
    return {val, loss};
}

template <class T>
T E_guarded(const T& sigma, int precision_bits) {
    int p = precision_bits > 0 ? precision_bits : working_precision();
    if (abs(sigma).is_zero()) {
        PrecisionScope ps(p);
        return T(BigReal(1));
    }
    long guard = 64;
    for (int attempt = 0; attempt < 4; ++attempt) {
        T v;
        long loss;
        {
            PrecisionScope ps(p + static_cast<int>(guard));
            std::tie(v, loss) = E_kernel(sigma);
        }
        if (loss + 32 <= guard) {
            PrecisionScope ps(p);
            return v * BigReal(1);
        }
        guard = std::min(loss, 1L << 16) + 64;
    }
    throw PrecisionError("E_sigma: cancellation not covered at sigma magnitude " + abs(sigma).str(6));
}

}  // namespace

BigReal E_sigma(const BigReal& sigma, int precision_bits) {
    if (sigma.sign() < 0) throw DomainError("E_sigma: sigma must be nonnegative");
    return E_guarded(sigma, precision_bits);
}

BigComplex E_sigma(const BigComplex& sigma, int precision_bits) { return E_guarded(sigma, precision_bits); }

BigComplex E_sigma_derivative(const BigComplex& sigma, int precision_bits) {
    int p = precision_bits > 0 ? precision_bits : working_precision();
    if (abs(sigma).is_zero()) throw DomainError("E_sigma_derivative: singular at sigma = 0");
    int inner = p + p / 5 + 32;
    BigComplex d;
    {
        PrecisionScope ps(inner);
        BigReal h = abs(sigma) * epsilon(p / 5);
        BigComplex hc(h);
        auto at = [&](long k) { return E_sigma(sigma + hc * k, inner); };
        d = (at(-2) - at(2) + (at(1) - at(-1)) * 8L) / (h * 12L);
    }
    PrecisionScope ps(p);
    return d * BigReal(1);
}

BigReal E_large_sigma_constant() { return BigReal(9) / 2L * (sqrt(BigReal(2)) * 3L - BigReal(4)); }

BigReal E_large_sigma_ratio(const BigReal& sigma) {
    return E_sigma(sigma) * exp(sqrt(BigReal(6)) * root(sigma, 4)) / E_large_sigma_constant();
}

namespace {

ILTResult invert(const LaplaceTransform& F, const BigReal& V, const ILTConfig& cfg) {
    if (!(V.sign() > 0)) throw DomainError("cell law: V must be positive");
    return ilt(F, V, cfg);
}

}  // namespace

ILTResult P_V(const BigReal& V, const ILTConfig& cfg) {
    return invert([](const BigComplex& s) { return E_sigma(s); }, V, cfg);
}

ILTResult P_cdf(const BigReal& V, const ILTConfig& cfg) {
    return invert([](const BigComplex& s) { return E_sigma(s) / s; }, V, cfg);
}

ILTResult P_truncated_mean(const BigReal& V, const ILTConfig& cfg) {
    return invert([](const BigComplex& s) { return -E_sigma_derivative(s) / s; }, V, cfg);
}

BigReal asympt_tail(const BigReal& V) {
    return BigReal(665) * sqrt(BigReal(3)) / (gamma(BigReal(3) / 4L) * 4096L) * pow(V, BigReal(-5) / 4L);
}

BigReal asympt_flat(const BigReal& V) {
    BigReal three(3);
    BigReal pre = pow(three, BigReal(11) / 6L) * (three - sqrt(BigReal(2)) * 2L) / (sqrt(pi()) * 2L);
    BigReal c = pow(three, BigReal(5) / 3L) / 4L;
    return pre * pow(V, BigReal(-7) / 6L) * exp(-(c / cbrt(V)));
}

BigReal saddle_point(const BigReal& V) {
    return pow(BigReal(3), BigReal(2) / 3L) / (pow(V, BigReal(4) / 3L) * 4L);
}

SmallSigmaFit small_sigma_fit(const BigReal& lo, const BigReal& hi, int points) {
    if (!(lo.sign() > 0 && lo < hi)) throw DomainError("small_sigma_fit: need 0 < lo < hi");
    if (points < 4) throw DomainError("small_sigma_fit: need at least 4 points");
    int p = working_precision();
    std::vector<BigReal> c;
    {
        PrecisionScope ps(2 * p);
        size_t n = static_cast<size_t>(points);
        BigReal rhi = root(hi, 4), ratio = pow(lo / hi, BigReal(1) / static_cast<long>(points - 1));
        // E - 1 = sum_{j=1}^{n} c_j r^j, solved in u = r / r_hi
        std::vector<std::vector<BigReal>> A(n, std::vector<BigReal>(n + 1));
        BigReal sigma = hi;
        for (size_t i = 0; i < n; ++i, sigma *= ratio) {
            BigReal u = root(sigma, 4) / rhi, up = u;
            for (size_t j = 0; j < n; ++j, up *= u) A[i][j] = up;
            A[i][n] = E_sigma(sigma) - BigReal(1);
        }
        for (size_t col = 0; col < n; ++col) {
            size_t piv = col;
            for (size_t i = col + 1; i < n; ++i)
                if (abs(A[i][col]) > abs(A[piv][col])) piv = i;
            std::swap(A[col], A[piv]);
            for (size_t i = col + 1; i < n; ++i) {
                BigReal f = A[i][col] / A[col][col];
                for (size_t j = col; j <= n; ++j) A[i][j] -= f * A[col][j];
            }
        }
        c.assign(n, BigReal(0));
        for (size_t i = n; i-- > 0;) {
            BigReal acc = A[i][n];
            for (size_t j = i + 1; j < n; ++j) acc -= A[i][j] * c[j];
            c[i] = acc / A[i][i];
        }
        BigReal scale = rhi;
        for (size_t j = 0; j < n; ++j, scale *= rhi) c[j] /= scale;
    }
    return {c[0] * BigReal(1), c[1] * BigReal(1), c[2] * BigReal(1), c[3] * BigReal(1)};
}

BigReal tree_E(const BigReal& sigma) {
    if (sigma.sign() < 0) throw DomainError("tree_E: sigma must be nonnegative");
    return exp(-(sqrt(sigma) * 2L));
}

BigComplex tree_E(const BigComplex& sigma) { return exp(-(sqrt(sigma) * 2L)); }

BigReal tree_P(const BigReal& V) {
    if (!(V.sign() > 0)) throw DomainError("tree_P: V must be positive");
    return exp(-(BigReal(1) / V)) / (sqrt(pi()) * V * sqrt(V));
}

LevyAsymptotics levy_asympt(const mpq_class& alpha) {
    if (!(alpha > 0 && alpha < 1)) throw DomainError("levy_asympt: alpha must lie in (0, 1)");
    return {(2 - alpha) / (2 * (1 - alpha)), alpha / (1 - alpha), 1 + alpha};
}

}  // namespace vcell
