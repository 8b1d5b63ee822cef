#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace vcell {

// Working precision (bits) for newly produced values on this thread.
// Initial value comes from VCELL_PRECISION_BITS, else 256.
int working_precision();
int default_precision();

class PrecisionScope {
public:
    explicit PrecisionScope(int bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    int saved_;
};

// Copies keep the precision of their source; arithmetic results are
// produced at the working precision.
class BigReal {
public:
    BigReal();
    BigReal(int v);
    BigReal(long v);
    BigReal(double v);
    explicit BigReal(const mpq_class& q);
    explicit BigReal(const mpz_class& z);
    explicit BigReal(std::string_view decimal);

    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }

    double to_double() const;
    std::string str(int digits = 30) const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    long exponent2() const;

    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);

    friend BigReal operator-(const BigReal& a);
    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, long b);
    friend BigReal operator*(long a, const BigReal& b) { return b * a; }
    friend BigReal operator/(const BigReal& a, long b);

    friend bool operator==(const BigReal& a, const BigReal& b);
    friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

private:
    mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigReal& x);

BigReal pi();
BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal cbrt(const BigReal& x);
BigReal root(const BigReal& x, unsigned long k);
BigReal exp(const BigReal& x);
BigReal expm1(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal gamma(const BigReal& x);
BigReal ldexp(const BigReal& x, long e);
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);
BigReal magnitude(const BigReal& x);
// 2^-bits as a BigReal, for tolerances tied to a precision.
BigReal epsilon(int bits);

struct BigComplex {
    BigReal re;
    BigReal im;

    BigComplex() = default;
    BigComplex(int r) : re(r) {}
    BigComplex(const BigReal& r) : re(r) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
};

BigComplex operator-(const BigComplex& a);
BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigReal& b);
BigComplex operator*(const BigReal& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigReal& b);
BigComplex operator+(const BigComplex& a, const BigReal& b);
BigComplex operator-(const BigComplex& a, const BigReal& b);
BigComplex operator*(const BigComplex& a, long b);
BigComplex operator/(const BigComplex& a, long b);

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigReal arg(const BigComplex& z);
BigReal magnitude(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, const BigReal& p);
BigComplex pow(const BigComplex& z, long n);
BigComplex polar(const BigReal& r, const BigReal& theta);

}  // namespace vcell
