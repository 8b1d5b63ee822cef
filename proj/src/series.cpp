#include "vcell/series.hpp"

#include <algorithm>
#include <sstream>

#include "vcell/errors.hpp"

namespace vcell {

namespace {

void require_same_var(const RationalSeries& a, const RationalSeries& b) {
    if (a.var() != b.var())
        throw DomainError("series variable mismatch: " + a.var() + " vs " + b.var());
}

const mpq_class kZero(0);

}  // namespace

RationalSeries::RationalSeries(std::string var, int order) : var_(std::move(var)) {
    if (order < 0) throw TruncationError("negative series order");
    c_.assign(static_cast<size_t>(order) + 1, mpq_class(0));
}

RationalSeries::RationalSeries(std::string var, std::vector<mpq_class> coeffs)
    : var_(std::move(var)), c_(std::move(coeffs)) {
    if (c_.empty()) throw TruncationError("series needs at least one coefficient");
    for (auto& c : c_) c.canonicalize();
}

RationalSeries RationalSeries::constant(std::string var, int order, const mpq_class& c) {
    RationalSeries r(std::move(var), order);
    r.set(0, c);
    return r;
}

RationalSeries RationalSeries::variable(std::string var, int order) {
    RationalSeries r(std::move(var), order);
    if (order >= 1) r.c_[1] = 1;
    return r;
}

RationalSeries RationalSeries::polynomial(std::string var, int order, const std::vector<mpq_class>& p) {
    RationalSeries r(std::move(var), order);
    for (size_t k = 0; k < p.size() && static_cast<int>(k) <= order; ++k) r.set(static_cast<int>(k), p[k]);
    return r;
}

const mpq_class& RationalSeries::operator[](int k) const {
    if (k < 0) return kZero;
    if (k > order()) throw TruncationError("coefficient beyond series order");
    return c_[static_cast<size_t>(k)];
}

void RationalSeries::set(int k, const mpq_class& v) {
    if (k < 0 || k > order()) throw TruncationError("coefficient index outside series");
    c_[static_cast<size_t>(k)] = v;
    c_[static_cast<size_t>(k)].canonicalize();
}

RationalSeries RationalSeries::truncated(int order) const {
    if (order > this->order()) throw TruncationError("cannot extend a truncated series");
    return RationalSeries(var_, std::vector<mpq_class>(c_.begin(), c_.begin() + order + 1));
}

RationalSeries RationalSeries::renamed(std::string var) const { return RationalSeries(std::move(var), c_); }

bool RationalSeries::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& b) { return *this = *this + b; }
RationalSeries& RationalSeries::operator-=(const RationalSeries& b) { return *this = *this - b; }
RationalSeries& RationalSeries::operator*=(const RationalSeries& b) { return *this = *this * b; }
RationalSeries& RationalSeries::operator/=(const RationalSeries& b) { return *this = *this / b; }

RationalSeries operator-(const RationalSeries& a) {
    RationalSeries r(a.var(), a.order());
    for (int k = 0; k <= a.order(); ++k) r.set(k, -a[k]);
    return r;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    require_same_var(a, b);
    int n = std::min(a.order(), b.order());
    std::vector<mpq_class> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[k] = a[k] + b[k];
    return RationalSeries(a.var(), std::move(c));
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    require_same_var(a, b);
    int n = std::min(a.order(), b.order());
    std::vector<mpq_class> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[k] = a[k] - b[k];
    return RationalSeries(a.var(), std::move(c));
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    require_same_var(a, b);
    int n = std::min(a.order(), b.order());
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<mpq_class> c(static_cast<size_t>(n) + 1, mpq_class(0));
    mpq_class t;
    for (int i = 0; i <= n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (y[j] == 0) continue;
            mpq_mul(t.get_mpq_t(), x[i].get_mpq_t(), y[j].get_mpq_t());
            c[i + j] += t;
        }
    }
    return RationalSeries(a.var(), std::move(c));
}

RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) {
    require_same_var(a, b);
    if (b[0] == 0) throw DomainError("division by a series with zero constant term");
    int n = std::min(a.order(), b.order());
    const auto& y = b.coeffs();
    std::vector<mpq_class> q(static_cast<size_t>(n) + 1);
    mpq_class acc, t;
    for (int k = 0; k <= n; ++k) {
        acc = a[k];
        for (int j = 1; j <= k; ++j) {
            if (y[j] == 0) continue;
            mpq_mul(t.get_mpq_t(), y[j].get_mpq_t(), q[k - j].get_mpq_t());
            acc -= t;
        }
        q[k] = acc / y[0];
    }
    return RationalSeries(a.var(), std::move(q));
}

RationalSeries operator*(const RationalSeries& a, const mpq_class& k) {
    RationalSeries r(a.var(), a.order());
    for (int i = 0; i <= a.order(); ++i) r.set(i, a[i] * k);
    return r;
}

RationalSeries operator*(const mpq_class& k, const RationalSeries& a) { return a * k; }

RationalSeries operator+(const RationalSeries& a, const mpq_class& k) {
    RationalSeries r = a;
    r.set(0, a[0] + k);
    return r;
}

RationalSeries inverse(const RationalSeries& f) {
    return RationalSeries::constant(f.var(), f.order(), 1) / f;
}

RationalSeries derivative(const RationalSeries& f) {
    // order drops by one; the top coefficient of f' is unknown
    if (f.order() == 0) return RationalSeries(f.var(), 0);
    RationalSeries r(f.var(), f.order() - 1);
    for (int k = 1; k <= f.order(); ++k) r.set(k - 1, f[k] * k);
    return r;
}

RationalSeries integral(const RationalSeries& f) {
    RationalSeries r(f.var(), f.order() + 1);
    for (int k = 0; k <= f.order(); ++k) r.set(k + 1, f[k] / (k + 1));
    return r;
}

RationalSeries log(const RationalSeries& f) {
    if (f[0] != 1) throw DomainError("log needs constant term 1");
    int n = f.order();
    const auto& a = f.coeffs();
    std::vector<mpq_class> L(static_cast<size_t>(n) + 1, mpq_class(0));
    mpq_class acc, t;
    for (int m = 1; m <= n; ++m) {
        acc = a[m] * m;
        for (int k = 1; k < m; ++k) {
            if (L[k] == 0 || a[m - k] == 0) continue;
            mpq_mul(t.get_mpq_t(), L[k].get_mpq_t(), a[m - k].get_mpq_t());
            acc -= t * k;
        }
        L[m] = acc / m;
    }
    return RationalSeries(f.var(), std::move(L));
}

RationalSeries exp(const RationalSeries& f) {
    if (f[0] != 0) throw DomainError("exp needs zero constant term");
    int n = f.order();
    const auto& a = f.coeffs();
    std::vector<mpq_class> e(static_cast<size_t>(n) + 1, mpq_class(0));
    e[0] = 1;
    mpq_class acc, t;
    for (int m = 1; m <= n; ++m) {
        acc = 0;
        for (int k = 1; k <= m; ++k) {
            if (a[k] == 0) continue;
            mpq_mul(t.get_mpq_t(), a[k].get_mpq_t(), e[m - k].get_mpq_t());
            acc += t * k;
        }
        e[m] = acc / m;
    }
    return RationalSeries(f.var(), std::move(e));
}

RationalSeries pow(const RationalSeries& f, const mpq_class& p) {
    if (f[0] != 1) throw DomainError("rational power needs constant term 1");
    int n = f.order();
    const auto& a = f.coeffs();
    std::vector<mpq_class> w(static_cast<size_t>(n) + 1, mpq_class(0));
    w[0] = 1;
    mpq_class acc, t;
    for (int m = 1; m <= n; ++m) {
        acc = 0;
        for (int k = 1; k <= m; ++k) {
            if (a[k] == 0) continue;
            mpq_mul(t.get_mpq_t(), a[k].get_mpq_t(), w[m - k].get_mpq_t());
            acc += t * ((p + 1) * k - m);
        }
        w[m] = acc / m;
    }
    return RationalSeries(f.var(), std::move(w));
}

RationalSeries revert(const RationalSeries& f, std::string var) {
    if (f[0] != 0) throw DomainError("reversion needs f(0) = 0");
    int n = f.order();
    if (n < 1 || f[1] == 0) throw DomainError("reversion needs a nonzero linear coefficient");
    // Lagrange: [y^m] g = (1/m) [x^{m-1}] phi^m with phi = x / f(x)
    std::vector<mpq_class> q(f.coeffs().begin() + 1, f.coeffs().end());
    RationalSeries phi = inverse(RationalSeries(f.var(), std::move(q)));
    RationalSeries g(std::move(var), n);
    RationalSeries power = phi;
    for (int m = 1; m <= n; ++m) {
        g.set(m, power[m - 1] / m);
        if (m < n) power *= phi;
    }
    return g;
}

RationalSeries revert(const RationalSeries& f) { return revert(f, f.var()); }

RationalSeries compose(const RationalSeries& f, const RationalSeries& g) {
    if (g[0] != 0) throw DomainError("composition needs g(0) = 0");
    int n = std::min(f.order(), g.order());
    RationalSeries gt = g.truncated(n);
    RationalSeries acc = RationalSeries::constant(g.var(), n, f[n]);
    for (int k = n - 1; k >= 0; --k) acc = acc * gt + f[k];
    return acc;
}

RationalSeries scale_variable(const RationalSeries& f, const mpq_class& k) {
    RationalSeries r(f.var(), f.order());
    mpq_class p = 1;
    for (int i = 0; i <= f.order(); ++i) {
        r.set(i, f[i] * p);
        p *= k;
    }
    return r;
}

std::string to_string(const RationalSeries& f) {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= f.order(); ++k) {
        if (f[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << f[k].get_str();
        if (k >= 1) os << "*" << f.var();
        if (k >= 2) os << "^" << k;
    }
    if (first) os << "0";
    os << " + O(" << f.var() << "^" << f.order() + 1 << ")";
    return os.str();
}

// ---- half-grid series ----

namespace {

// Dense per-grade storage: grades[d][i] is the coefficient of key (i, d - i).
using Grades = std::vector<std::vector<mpq_class>>;

Grades to_grades(const HalfGridSeries& s, int order2) {
    Grades g(static_cast<size_t>(order2) + 1);
    for (int d = 0; d <= order2; d += 2) g[d].assign(static_cast<size_t>(d) + 1, mpq_class(0));
    for (const auto& [k, v] : s.terms()) {
        int d = k.first + k.second;
        if (d <= order2) g[d][k.first] = v;
    }
    return g;
}

HalfGridSeries from_grades(const Grades& g, int order2) {
    HalfGridSeries r(order2);
    for (int d = 0; d <= order2; d += 2)
        for (int i = 0; i <= d; ++i)
            if (g[d][i] != 0) r.set(i, d - i, g[d][i]);
    return r;
}

// out += a * b restricted to one grade pair
void grade_mul_add(std::vector<mpq_class>& out, const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                   mpq_class& t) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            mpq_mul(t.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
            out[i + j] += t;
        }
    }
}

}  // namespace

HalfGridSeries::HalfGridSeries(int order2) : order2_(order2) {
    if (order2 < 0) throw TruncationError("negative half-grid order");
}

void HalfGridSeries::check_key(int i, int j) {
    if (i < 0 || j < 0) throw DomainError("negative half-grid exponent");
    if ((i + j) % 2 != 0) throw DomainError("half-grid key with odd doubled total degree");
}

HalfGridSeries HalfGridSeries::constant(int order2, const mpq_class& c) {
    HalfGridSeries r(order2);
    r.set(0, 0, c);
    return r;
}

HalfGridSeries HalfGridSeries::sqrt_gh_power(int order2, int k) {
    HalfGridSeries r(order2);
    if (2 * k <= order2) r.set(k, k, 1);
    return r;
}

HalfGridSeries HalfGridSeries::from_g(int order2, const RationalSeries& f) {
    HalfGridSeries r(order2);
    for (int k = 0; 2 * k <= order2; ++k) r.set(2 * k, 0, f[k]);
    return r;
}

HalfGridSeries HalfGridSeries::from_h(int order2, const RationalSeries& f) {
    HalfGridSeries r(order2);
    for (int k = 0; 2 * k <= order2; ++k) r.set(0, 2 * k, f[k]);
    return r;
}

HalfGridSeries HalfGridSeries::outer(int order2, const RationalSeries& fg, const RationalSeries& kh) {
    HalfGridSeries r(order2);
    for (int i = 0; 2 * i <= order2; ++i) {
        if (fg[i] == 0) continue;
        for (int j = 0; 2 * (i + j) <= order2; ++j)
            if (kh[j] != 0) r.set(2 * i, 2 * j, fg[i] * kh[j]);
    }
    return r;
}

mpq_class HalfGridSeries::coeff(int n1_doubled, int n2_doubled) const {
    if (n1_doubled < 0 || n2_doubled < 0) throw DomainError("negative half-grid exponent");
    if (n1_doubled + n2_doubled > order2_) throw TruncationError("coefficient requested beyond order2");
    auto it = terms_.find({n1_doubled, n2_doubled});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void HalfGridSeries::set(int i, int j, const mpq_class& v) {
    check_key(i, j);
    if (i + j > order2_) throw TruncationError("key beyond order2");
    if (v == 0) {
        terms_.erase({i, j});
    } else {
        mpq_class& slot = terms_[{i, j}];
        slot = v;
        slot.canonicalize();
    }
}

void HalfGridSeries::add_to(int i, int j, const mpq_class& v) { set(i, j, coeff(i, j) + v); }

HalfGridSeries HalfGridSeries::truncated(int order2) const {
    if (order2 > order2_) throw TruncationError("cannot extend a truncated series");
    HalfGridSeries r(order2);
    for (const auto& [k, v] : terms_)
        if (k.first + k.second <= order2) r.terms_.emplace(k, v);
    return r;
}

HalfGridSeries HalfGridSeries::transposed() const {
    HalfGridSeries r(order2_);
    for (const auto& [k, v] : terms_) r.terms_.emplace(Key{k.second, k.first}, v);
    return r;
}

RationalSeries HalfGridSeries::diagonal(std::string var) const {
    RationalSeries r(std::move(var), order2_ / 2);
    std::vector<mpq_class> c(static_cast<size_t>(order2_ / 2) + 1, mpq_class(0));
    for (const auto& [k, v] : terms_) c[(k.first + k.second) / 2] += v;
    for (size_t n = 0; n < c.size(); ++n) r.set(static_cast<int>(n), c[n]);
    return r;
}

std::vector<std::pair<int, mpq_class>> HalfGridSeries::grade(int d) const {
    std::vector<std::pair<int, mpq_class>> out;
    for (const auto& [k, v] : terms_)
        if (k.first + k.second == d) out.emplace_back(k.first, v);
    return out;
}

int HalfGridSeries::valuation() const {
    int v = order2_ + 2;
    for (const auto& [k, c] : terms_) v = std::min(v, k.first + k.second);
    return v;
}

HalfGridSeries operator+(const HalfGridSeries& a, const HalfGridSeries& b) {
    int n = std::min(a.order2(), b.order2());
    HalfGridSeries r = a.truncated(n);
    for (const auto& [k, v] : b.terms())
        if (k.first + k.second <= n) r.add_to(k.first, k.second, v);
    return r;
}

HalfGridSeries operator-(const HalfGridSeries& a, const HalfGridSeries& b) { return a + b * mpq_class(-1); }

HalfGridSeries operator*(const HalfGridSeries& a, const HalfGridSeries& b) {
    int n = std::min(a.order2(), b.order2());
    Grades ga = to_grades(a, n), gb = to_grades(b, n);
    Grades out(static_cast<size_t>(n) + 1);
    for (int d = 0; d <= n; d += 2) out[d].assign(static_cast<size_t>(d) + 1, mpq_class(0));
    mpq_class t;
    for (int d1 = 0; d1 <= n; d1 += 2)
        for (int d2 = 0; d1 + d2 <= n; d2 += 2) grade_mul_add(out[d1 + d2], ga[d1], gb[d2], t);
    return from_grades(out, n);
}

HalfGridSeries product_to_order(const HalfGridSeries& a, const HalfGridSeries& b, int cap) {
    int n = std::min({a.order2() + b.valuation(), b.order2() + a.valuation(), cap});
    Grades ga = to_grades(a, std::min(n, a.order2())), gb = to_grades(b, std::min(n, b.order2()));
    Grades out(static_cast<size_t>(n) + 1);
    for (int d = 0; d <= n; d += 2) out[d].assign(static_cast<size_t>(d) + 1, mpq_class(0));
    mpq_class t;
    for (int d1 = 0; d1 <= std::min(n, a.order2()); d1 += 2)
        for (int d2 = 0; d1 + d2 <= n && d2 <= b.order2(); d2 += 2) grade_mul_add(out[d1 + d2], ga[d1], gb[d2], t);
    return from_grades(out, n);
}

HalfGridSeries operator*(const HalfGridSeries& a, const mpq_class& k) {
    HalfGridSeries r(a.order2());
    if (k == 0) return r;
    for (const auto& [key, v] : a.terms()) r.set(key.first, key.second, v * k);
    return r;
}

HalfGridSeries inverse(const HalfGridSeries& f) {
    int n = f.order2();
    mpq_class f0 = f.coeff(0, 0);
    if (f0 == 0) throw DomainError("inverse of a half-grid series with zero constant term");
    Grades gf = to_grades(f, n);
    Grades r(static_cast<size_t>(n) + 1);
    r[0] = {1 / f0};
    mpq_class t;
    for (int d = 2; d <= n; d += 2) {
        r[d].assign(static_cast<size_t>(d) + 1, mpq_class(0));
        for (int k = 2; k <= d; k += 2) grade_mul_add(r[d], gf[k], r[d - k], t);
        for (auto& c : r[d]) c = -c / f0;
    }
    return from_grades(r, n);
}

HalfGridSeries log(const HalfGridSeries& f) {
    int n = f.order2();
    if (f.coeff(0, 0) != 1) throw DomainError("log needs constant term 1");
    Grades gf = to_grades(f, n);
    Grades L(static_cast<size_t>(n) + 1);
    L[0] = {mpq_class(0)};
    mpq_class t;
    // grade-wise Euler operator: d L_d = d f_d - sum_k k L_k f_{d-k}
    for (int d = 2; d <= n; d += 2) {
        std::vector<mpq_class> acc(static_cast<size_t>(d) + 1, mpq_class(0));
        for (int k = 2; k < d; k += 2) {
            std::vector<mpq_class> part(static_cast<size_t>(d) + 1, mpq_class(0));
            grade_mul_add(part, L[k], gf[d - k], t);
            for (int i = 0; i <= d; ++i)
                if (part[i] != 0) acc[i] += part[i] * k;
        }
        L[d].assign(static_cast<size_t>(d) + 1, mpq_class(0));
        for (int i = 0; i <= d; ++i) L[d][i] = gf[d][i] - acc[i] / d;
    }
    return from_grades(L, n);
}

}  // namespace vcell
