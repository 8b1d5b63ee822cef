#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vcell/bigfloat.hpp"

namespace vcell {

// Exact polynomial in (a, b); key (i, j) is the exponent pair of a^i b^j.
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    static BiPoly constant(const mpq_class& c);
    static BiPoly monomial(const mpq_class& c, int i, int j);

    const std::map<Key, mpq_class>& terms() const { return terms_; }
    mpq_class coeff(int i, int j) const;
    void add_to(int i, int j, const mpq_class& v);
    bool is_zero() const { return terms_.empty(); }
    int degree_a() const;
    int degree_b() const;
    int total_degree() const;

    // a <-> b
    BiPoly swapped() const;
    // Coefficients of b^k as polynomials in a: result[k][i] = coeff(i, k).
    std::vector<std::vector<mpq_class>> by_b() const;
    // Exact value at rational (a, b).
    mpq_class eval(const mpq_class& a, const mpq_class& b) const;

    friend bool operator==(const BiPoly& x, const BiPoly& y) = default;

private:
    std::map<Key, mpq_class> terms_;
};

BiPoly operator-(const BiPoly& x);
BiPoly operator+(const BiPoly& x, const BiPoly& y);
BiPoly operator-(const BiPoly& x, const BiPoly& y);
BiPoly operator*(const BiPoly& x, const BiPoly& y);
BiPoly operator*(const BiPoly& x, const mpq_class& k);
BiPoly pow(const BiPoly& x, int n);
std::string to_string(const BiPoly& p);

// u + v c with c^2 = (a^2 + b^2)/2.
struct QcPoly {
    BiPoly u;
    BiPoly v;

    QcPoly() = default;
    QcPoly(BiPoly u_, BiPoly v_ = {}) : u(std::move(u_)), v(std::move(v_)) {}
    bool is_zero() const { return u.is_zero() && v.is_zero(); }
    // a <-> b; c is symmetric.
    QcPoly swapped() const { return {u.swapped(), v.swapped()}; }
    friend bool operator==(const QcPoly& x, const QcPoly& y) = default;
};

QcPoly operator-(const QcPoly& x);
QcPoly operator+(const QcPoly& x, const QcPoly& y);
QcPoly operator-(const QcPoly& x, const QcPoly& y);
QcPoly operator*(const QcPoly& x, const QcPoly& y);
QcPoly pow(const QcPoly& x, int n);

// Parses integer literals, a, b, c, + - * ^ and parentheses.
QcPoly parse_qc(std::string_view text);
// Same, but rejects any occurrence of c.
BiPoly parse_bipoly(std::string_view text);

// p(a, b) with a a scalar and b of ring type T (BigReal or a series type);
// Horner in b over scalar coefficients p_k(a).
struct ScalarCoeffs {
    std::vector<BigReal> by_b;  // value of the b^k coefficient at the given a
};

ScalarCoeffs bind_a(const BiPoly& p, const BigReal& a);

template <class T>
T horner_b(const ScalarCoeffs& p, const T& b, const T& zero) {
    T acc = zero;
    for (size_t k = p.by_b.size(); k-- > 0;) acc = acc * b + p.by_b[k];
    return acc;
}

}  // namespace vcell
