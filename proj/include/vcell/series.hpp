#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vcell {

// Truncated univariate power series with exact rational coefficients.
// Holds c_0 + c_1 v + ... + c_order v^order + O(v^{order+1}).
class RationalSeries {
public:
    RationalSeries(std::string var, int order);
    RationalSeries(std::string var, std::vector<mpq_class> coeffs);

    static RationalSeries constant(std::string var, int order, const mpq_class& c);
    static RationalSeries variable(std::string var, int order);
    // Polynomial coefficients (low degree first), truncated or zero-padded to order.
    static RationalSeries polynomial(std::string var, int order, const std::vector<mpq_class>& p);

    const std::string& var() const { return var_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& operator[](int k) const;
    void set(int k, const mpq_class& v);

    RationalSeries truncated(int order) const;
    RationalSeries renamed(std::string var) const;
    bool is_zero() const;

    RationalSeries& operator+=(const RationalSeries& b);
    RationalSeries& operator-=(const RationalSeries& b);
    RationalSeries& operator*=(const RationalSeries& b);
    RationalSeries& operator/=(const RationalSeries& b);

    friend bool operator==(const RationalSeries& a, const RationalSeries& b) = default;

private:
    std::string var_;
    std::vector<mpq_class> c_;
};

RationalSeries operator-(const RationalSeries& a);
RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator/(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator*(const RationalSeries& a, const mpq_class& k);
RationalSeries operator*(const mpq_class& k, const RationalSeries& a);
RationalSeries operator+(const RationalSeries& a, const mpq_class& k);

RationalSeries inverse(const RationalSeries& f);
RationalSeries derivative(const RationalSeries& f);
RationalSeries integral(const RationalSeries& f);
RationalSeries log(const RationalSeries& f);
RationalSeries exp(const RationalSeries& f);
// f^p for rational p; requires f(0) = 1.
RationalSeries pow(const RationalSeries& f, const mpq_class& p);
// g with f(g(y)) = y; result carries f's order and variable `var`.
RationalSeries revert(const RationalSeries& f, std::string var);
RationalSeries revert(const RationalSeries& f);
// f(g(y)); requires g(0) = 0. Result variable is g's.
RationalSeries compose(const RationalSeries& f, const RationalSeries& g);
// Substitute v -> k v.
RationalSeries scale_variable(const RationalSeries& f, const mpq_class& k);
std::string to_string(const RationalSeries& f);

// Truncated series in (g, h) with half-integer exponents, keyed by the
// doubled exponents (2 n1, 2 n2). Keys obey 2n1 + 2n2 even and <= order2.
class HalfGridSeries {
public:
    using Key = std::pair<int, int>;

    explicit HalfGridSeries(int order2);
    static HalfGridSeries constant(int order2, const mpq_class& c);
    // sqrt(g h) raised to the power k: the single key (k, k).
    static HalfGridSeries sqrt_gh_power(int order2, int k);
    // Univariate series in g (or h) placed on the corresponding axis.
    static HalfGridSeries from_g(int order2, const RationalSeries& f);
    static HalfGridSeries from_h(int order2, const RationalSeries& f);
    // f(g) * k(h) without going through a generic product.
    static HalfGridSeries outer(int order2, const RationalSeries& fg, const RationalSeries& kh);

    int order2() const { return order2_; }
    const std::map<Key, mpq_class>& terms() const { return terms_; }
    // Coefficient of g^{n1} h^{n2} given doubled exponents; 0 if absent, throws beyond order2.
    mpq_class coeff(int n1_doubled, int n2_doubled) const;
    void set(int n1_doubled, int n2_doubled, const mpq_class& v);
    void add_to(int n1_doubled, int n2_doubled, const mpq_class& v);

    HalfGridSeries truncated(int order2) const;
    HalfGridSeries transposed() const;
    // h = g: collapses to a univariate series in g of order order2/2.
    RationalSeries diagonal(std::string var = "g") const;
    // Terms of doubled total degree d, ordered by 2n1.
    std::vector<std::pair<int, mpq_class>> grade(int d) const;
    bool is_zero() const { return terms_.empty(); }
    // Lowest doubled total degree present; order2 + 2 for the zero series.
    int valuation() const;

    friend bool operator==(const HalfGridSeries& a, const HalfGridSeries& b) = default;

private:
    static void check_key(int i, int j);
    int order2_;
    std::map<Key, mpq_class> terms_;
};

HalfGridSeries operator+(const HalfGridSeries& a, const HalfGridSeries& b);
HalfGridSeries operator-(const HalfGridSeries& a, const HalfGridSeries& b);
HalfGridSeries operator*(const HalfGridSeries& a, const HalfGridSeries& b);
HalfGridSeries operator*(const HalfGridSeries& a, const mpq_class& k);
// Product kept to the largest order the operands' valuations justify:
// min(a.order2 + val(b), b.order2 + val(a)), capped at `cap`.
HalfGridSeries product_to_order(const HalfGridSeries& a, const HalfGridSeries& b, int cap);
HalfGridSeries inverse(const HalfGridSeries& f);
HalfGridSeries log(const HalfGridSeries& f);

}  // namespace vcell
