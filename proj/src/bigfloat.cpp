#include "vcell/bigfloat.hpp"

#include <climits>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <stdexcept>

namespace vcell {

namespace {

int env_precision() {
    if (const char* s = std::getenv("VCELL_PRECISION_BITS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v >= 32 && v <= 1 << 20) return static_cast<int>(v);
    }
    return 256;
}

thread_local int g_precision = env_precision();

constexpr mpfr_rnd_t R = MPFR_RNDN;

}  // namespace

int working_precision() { return g_precision; }
int default_precision() { return env_precision(); }

PrecisionScope::PrecisionScope(int bits) : saved_(g_precision) {
    if (bits < MPFR_PREC_MIN) throw std::invalid_argument("precision too small");
    g_precision = bits;
}

PrecisionScope::~PrecisionScope() { g_precision = saved_; }

BigReal::BigReal() {
    mpfr_init2(v_, g_precision);
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(int v) {
    mpfr_init2(v_, g_precision);
    mpfr_set_si(v_, v, R);
}

BigReal::BigReal(long v) {
    mpfr_init2(v_, g_precision);
    mpfr_set_si(v_, v, R);
}

BigReal::BigReal(double v) {
    mpfr_init2(v_, g_precision);
    mpfr_set_d(v_, v, R);
}

BigReal::BigReal(const mpq_class& q) {
    mpfr_init2(v_, g_precision);
    mpfr_set_q(v_, q.get_mpq_t(), R);
}

BigReal::BigReal(const mpz_class& z) {
    mpfr_init2(v_, g_precision);
    mpfr_set_z(v_, z.get_mpz_t(), R);
}

BigReal::BigReal(std::string_view decimal) {
    mpfr_init2(v_, g_precision);
    std::string s(decimal);
    if (mpfr_set_str(v_, s.c_str(), 10, R) != 0)
        throw std::invalid_argument("not a number: " + s);
}

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, R);
}

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, R);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

double BigReal::to_double() const { return mpfr_get_d(v_, R); }

long BigReal::exponent2() const {
    if (mpfr_zero_p(v_)) return LONG_MIN / 2;
    return mpfr_get_exp(v_);
}

std::string BigReal::str(int digits) const {
    if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }
BigReal& BigReal::operator/=(const BigReal& o) { return *this = *this / o; }

BigReal operator-(const BigReal& a) {
    BigReal r;
    mpfr_neg(r.v_, a.v_, R);
    return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r;
    mpfr_add(r.v_, a.v_, b.v_, R);
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r;
    mpfr_sub(r.v_, a.v_, b.v_, R);
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r;
    mpfr_mul(r.v_, a.v_, b.v_, R);
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r;
    mpfr_div(r.v_, a.v_, b.v_, R);
    return r;
}

BigReal operator*(const BigReal& a, long b) {
    BigReal r;
    mpfr_mul_si(r.v_, a.v_, b, R);
    return r;
}

BigReal operator/(const BigReal& a, long b) {
    BigReal r;
    mpfr_div_si(r.v_, a.v_, b, R);
    return r;
}

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.str(); }

namespace {

template <class F>
BigReal unary(const BigReal& x, F f) {
    BigReal r;
    f(r.get(), x.get(), R);
    return r;
}

}  // namespace

BigReal pi() {
    BigReal r;
    mpfr_const_pi(r.get(), R);
    return r;
}

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal cbrt(const BigReal& x) { return unary(x, mpfr_cbrt); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal expm1(const BigReal& x) { return unary(x, mpfr_expm1); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal log1p(const BigReal& x) { return unary(x, mpfr_log1p); }
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
BigReal gamma(const BigReal& x) { return unary(x, mpfr_gamma); }
BigReal magnitude(const BigReal& x) { return abs(x); }

BigReal root(const BigReal& x, unsigned long k) {
    BigReal r;
    mpfr_rootn_ui(r.get(), x.get(), k, R);
    return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
    BigReal r;
    mpfr_pow(r.get(), x.get(), y.get(), R);
    return r;
}

BigReal pow(const BigReal& x, long n) {
    BigReal r;
    mpfr_pow_si(r.get(), x.get(), n, R);
    return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r;
    mpfr_atan2(r.get(), y.get(), x.get(), R);
    return r;
}

BigReal ldexp(const BigReal& x, long e) {
    BigReal r;
    if (e >= 0)
        mpfr_mul_2ui(r.get(), x.get(), static_cast<unsigned long>(e), R);
    else
        mpfr_div_2ui(r.get(), x.get(), static_cast<unsigned long>(-e), R);
    return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }

BigReal epsilon(int bits) { return ldexp(BigReal(1), -bits); }

BigComplex& BigComplex::operator+=(const BigComplex& o) { return *this = *this + o; }
BigComplex& BigComplex::operator-=(const BigComplex& o) { return *this = *this - o; }
BigComplex& BigComplex::operator*=(const BigComplex& o) { return *this = *this * o; }
BigComplex& BigComplex::operator/=(const BigComplex& o) { return *this = *this / o; }

BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    // scale by the larger component to avoid overflow in |b|^2
    if (abs(b.re) >= abs(b.im)) {
        BigReal t = b.im / b.re;
        BigReal d = b.re + b.im * t;
        return {(a.re + a.im * t) / d, (a.im - a.re * t) / d};
    }
    BigReal t = b.re / b.im;
    BigReal d = b.re * t + b.im;
    return {(a.re * t + a.im) / d, (a.im * t - a.re) / d};
}

BigComplex operator*(const BigComplex& a, const BigReal& b) { return {a.re * b, a.im * b}; }
BigComplex operator*(const BigReal& a, const BigComplex& b) { return {a * b.re, a * b.im}; }
BigComplex operator/(const BigComplex& a, const BigReal& b) { return {a.re / b, a.im / b}; }
BigComplex operator+(const BigComplex& a, const BigReal& b) { return {a.re + b, a.im}; }
BigComplex operator-(const BigComplex& a, const BigReal& b) { return {a.re - b, a.im}; }
BigComplex operator*(const BigComplex& a, long b) { return {a.re * b, a.im * b}; }
BigComplex operator/(const BigComplex& a, long b) { return {a.re / b, a.im / b}; }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigReal abs(const BigComplex& z) {
    BigReal r;
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), R);
    return r;
}

BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }
BigReal magnitude(const BigComplex& z) { return abs(z); }

BigComplex polar(const BigReal& r, const BigReal& theta) {
    BigReal s, c;
    mpfr_sin_cos(s.get(), c.get(), theta.get(), R);
    return {r * c, r * s};
}

BigComplex exp(const BigComplex& z) { return polar(exp(z.re), z.im); }

BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

BigComplex sqrt(const BigComplex& z) {
    if (z.re.is_zero() && z.im.is_zero()) return {};
    BigReal m = abs(z);
    BigReal t = sqrt((m + abs(z.re)) / 2);
    if (z.re.sign() >= 0) return {t, z.im / (t * 2)};
    BigReal im = z.im.sign() >= 0 ? t : -t;
    return {abs(z.im) / (t * 2), im};
}

BigComplex pow(const BigComplex& z, const BigReal& p) {
    if (z.re.is_zero() && z.im.is_zero()) return {};
    return exp(log(z) * p);
}

BigComplex pow(const BigComplex& z, long n) {
    if (n < 0) return BigComplex(1) / pow(z, -n);
    BigComplex result(1), base = z;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

}  // namespace vcell
