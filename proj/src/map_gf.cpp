#include "vcell/map_gf.hpp"

#include <mutex>

#include "vcell/errors.hpp"

namespace vcell {

namespace {

using Poly = std::vector<mpq_class>;

Poly pmul(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Poly one_minus_xk(int k) {
    Poly p(static_cast<size_t>(k) + 1, mpq_class(0));
    p[0] += 1;
    p[k] -= 1;
    return p;
}

Poly product(const std::vector<Poly>& factors) {
    Poly acc{mpq_class(1)};
    for (const auto& f : factors) acc = pmul(acc, f);
    return acc;
}

// (1 - (1-y)^k) / y
Poly factor_in_y(int k) {
    Poly p(static_cast<size_t>(k), mpq_class(0));
    mpz_class binom = 1;
    for (int j = 1; j <= k; ++j) {
        binom = binom * (k - j + 1) / j;
        p[j - 1] = (j % 2 == 1) ? mpq_class(binom) : mpq_class(-binom);
    }
    return p;
}

// P(1 - y) as a polynomial in y
Poly shift_to_y(const Poly& p) {
    Poly out(p.size(), mpq_class(0));
    for (size_t k = 0; k < p.size(); ++k) {
        mpz_class binom = 1;
        for (size_t j = 0; j <= k; ++j) {
            mpq_class term = p[k] * binom;
            out[j] += (j % 2 == 0) ? term : mpq_class(-term);
            binom = binom * static_cast<long>(k - j) / static_cast<long>(j + 1);
        }
    }
    return out;
}

mpq_class peval0(const Poly& p) { return p.empty() ? mpq_class(0) : p[0]; }

// Numerator and denominator factors (1 - x^k) of X_{s,t}(g,g).
void x_diag_exponents(int s, int t, std::vector<int>& num, std::vector<int>& den) {
    if (s == 0 || t == 0) return;
    num.insert(num.end(), {3, s + 1, t + 1, s + t + 3});
    den.insert(den.end(), {1, s + 3, t + 3, s + t + 1});
}

// Exponents for X_ss X_{s-1,s-1} / (X_{s-1,s} X_{s,s-1}).
void f_ratio_exponents(int s, std::vector<int>& num, std::vector<int>& den) {
    x_diag_exponents(s, s, num, den);
    x_diag_exponents(s - 1, s - 1, num, den);
    x_diag_exponents(s - 1, s, den, num);
    x_diag_exponents(s, s - 1, den, num);
}

// Shared cache of x(g) and its powers, grown on demand.
class XPowers {
public:
    static XPowers& instance() {
        static XPowers p;
        return p;
    }

    RationalSeries x(int order) {
        std::lock_guard<std::mutex> lock(m_);
        grow_x(order);
        return x_.truncated(order);
    }

    // sum_k p_k x(g)^k truncated to `order`
    RationalSeries compose(const Poly& p, int order) {
        std::lock_guard<std::mutex> lock(m_);
        grow_x(order);
        int top = std::min<int>(static_cast<int>(p.size()) - 1, order);
        if (static_cast<int>(powers_.size()) <= top || powers_order_ < order) {
            if (powers_order_ < order) powers_.clear();
            powers_order_ = order;
            if (powers_.empty()) powers_.push_back(RationalSeries::constant("g", order, 1));
            RationalSeries xo = x_.truncated(order);
            while (static_cast<int>(powers_.size()) <= top) powers_.push_back(powers_.back() * xo);
        }
        std::vector<mpq_class> c(static_cast<size_t>(order) + 1, mpq_class(0));
        for (int k = 0; k <= top; ++k) {
            if (p[k] == 0) continue;
            const auto& pk = powers_[k].coeffs();
            // x^k = O(g^k)
            for (int n = k; n <= order; ++n)
                if (pk[n] != 0) c[n] += p[k] * pk[n];
        }
        return RationalSeries("g", std::move(c));
    }

private:
    void grow_x(int order) {
        if (x_order_ >= order) return;
        // g(1+4x+x^2)^2 = x + x^2 + x^3, solved for x_n order by order
        int n_max = std::max(order, 2 * x_order_);
        std::vector<mpq_class> x(n_max + 1), x2(n_max + 1), x3(n_max + 1), x4(n_max + 1);
        for (int n = 1; n <= n_max; ++n) {
            for (int k = 1; k < n; ++k) x2[n] += x[k] * x[n - k];
            for (int k = 1; k + 2 <= n; ++k) x3[n] += x[k] * x2[n - k];
            if (n - 1 >= 4)
                for (int k = 2; k + 2 <= n - 1; ++k) x4[n - 1] += x2[k] * x2[n - 1 - k];
            int m = n - 1;
            mpq_class rhs = (m == 0 ? mpq_class(1) : mpq_class(0)) + 8 * x[m] + 18 * x2[m] + 8 * x3[m] + x4[m];
            x[n] = rhs - x2[n] - x3[n];
        }
        x_ = RationalSeries("g", std::move(x));
        x_order_ = n_max;
        powers_.clear();
        powers_order_ = -1;
    }

    std::mutex m_;
    RationalSeries x_{"g", 0};
    int x_order_ = 0;
    std::vector<RationalSeries> powers_;
    int powers_order_ = -1;
};

RationalSeries compose_ratio(const std::vector<int>& num, const std::vector<int>& den, const Poly& extra_num,
                             const Poly& extra_den, int order) {
    std::vector<Poly> nf{extra_num}, df{extra_den};
    for (int k : num) nf.push_back(one_minus_xk(k));
    for (int k : den) df.push_back(one_minus_xk(k));
    Poly n = product(nf), d = product(df);
    auto& xp = XPowers::instance();
    return xp.compose(n, order) / xp.compose(d, order);
}

mpq_class critical_ratio(const std::vector<int>& num, const std::vector<int>& den) {
    // at x = 1 each (1 - x^k) ~ k (1 - x)
    mpq_class r = 1;
    for (int k : num) r *= k;
    for (int k : den) r /= k;
    return r;
}

}  // namespace

RationalSeries g_of_x(int order) {
    auto n = RationalSeries::polynomial("x", order, {0, 1, 1, 1});
    auto d = RationalSeries::polynomial("x", order, {1, 8, 18, 8, 1});
    return n / d;
}

RationalSeries x_of_g(int order) {
    if (order < 1) throw DomainError("x_of_g needs order >= 1");
    return XPowers::instance().x(order);
}

RationalSeries R_series(int s, int order) {
    if (s < 0) throw DomainError("label must be nonnegative");
    if (s == 0) return RationalSeries("g", order);
    return compose_ratio({s, s + 3}, {s + 1, s + 2}, {1, 4, 1}, {1, 1, 1}, order);
}

RationalSeries X_diag(int s, int t, int order) {
    if (s < 0 || t < 0) throw DomainError("labels must be nonnegative");
    std::vector<int> num, den;
    x_diag_exponents(s, t, num, den);
    if (num.empty()) return RationalSeries::constant("g", order, 1);
    return compose_ratio(num, den, {1}, {1}, order);
}

RationalSeries F_diag(int s, int order) {
    if (s < 1) throw DomainError("F needs s >= 1");
    std::vector<int> num, den;
    f_ratio_exponents(s, num, den);
    return log(compose_ratio(num, den, {1}, {1}, order));
}

mpq_class R_critical(int s) {
    if (s == 0) return 0;
    return 2 * critical_ratio({s, s + 3}, {s + 1, s + 2});
}

mpq_class X_critical(int s, int t) {
    std::vector<int> num, den;
    x_diag_exponents(s, t, num, den);
    return critical_ratio(num, den);
}

ProfileConstant profile_constant(int s) {
    if (s < 1) throw DomainError("profile constant needs s >= 1");
    mpz_class z = s;
    mpq_class f3 = mpq_class(4 * (2 * z + 1) * (10 * z * z + 10 * z + 1), mpz_class(35));
    f3.canonicalize();
    return {s, f3};
}

// ---- bivariate recursion ----

MapGFContext::MapGFContext(int order2) : order2_(order2) {
    if (order2 < 0) throw TruncationError("negative order2");
}

const RationalSeries& MapGFContext::R(int s) {
    auto it = r_cache_.find(s);
    if (it == r_cache_.end()) it = r_cache_.emplace(s, R_series(s, order2_ / 2)).first;
    return it->second;
}

HalfGridSeries MapGFContext::X(int s, int t, int order2) {
    if (order2 < 0) order2 = order2_;
    if (order2 > order2_) throw TruncationError("X requested beyond the context order");
    if (s < 0 || t < 0) throw DomainError("labels must be nonnegative");
    if (s == 0 || t == 0) return HalfGridSeries::constant(order2, 1);
    auto key = std::make_pair(s, t);
    if (auto it = x_cache_.find(key); it != x_cache_.end() && it->second.order2() >= order2)
        return it->second.truncated(order2);

    // X = 1 / (1 - u (1 + v X_{s+1,t+1})), u = sqrt(gh) R_s(g) R_t(h), v likewise at s+1, t+1
    HalfGridSeries root = HalfGridSeries::sqrt_gh_power(order2, 1);
    HalfGridSeries u = product_to_order(root, HalfGridSeries::outer(order2, R(s), R(t)), order2);
    HalfGridSeries w = u;
    if (order2 >= 4) {
        HalfGridSeries v = product_to_order(root, HalfGridSeries::outer(order2, R(s + 1), R(t + 1)), order2);
        HalfGridSeries next = X(s + 1, t + 1, order2 - 4);
        HalfGridSeries vx = product_to_order(v, next, order2);
        w = u + product_to_order(u, vx, order2);
    }

    // graded fixed point X = 1 + W X, one grade of rho per sweep
    std::vector<std::vector<std::pair<int, mpq_class>>> wg(order2 + 1), xg(order2 + 1);
    for (const auto& [k, c] : w.terms()) wg[k.first + k.second].emplace_back(k.first, c);
    HalfGridSeries x(order2);
    x.set(0, 0, 1);
    xg[0].emplace_back(0, mpq_class(1));
    for (int d = 2; d <= order2; d += 2) {
        std::vector<mpq_class> grade(d + 1, mpq_class(0));
        for (int k = 2; k <= d; k += 2)
            for (const auto& [i, a] : wg[k])
                for (const auto& [j, b] : xg[d - k]) grade[i + j] += a * b;
        for (int i = 0; i <= d; ++i)
            if (grade[i] != 0) {
                x.set(i, d - i, grade[i]);
                xg[d].emplace_back(i, grade[i]);
            }
    }
    HalfGridSeries residual = x - HalfGridSeries::constant(order2, 1) - w * x;
    if (!residual.is_zero()) throw ConvergenceError("X recursion fixed point not reached");
    x_cache_.insert_or_assign(key, x);
    return x;
}

HalfGridSeries MapGFContext::F(int s) {
    if (s < 1) throw DomainError("F needs s >= 1");
    HalfGridSeries num = X(s, s) * X(s - 1, s - 1);
    HalfGridSeries den = X(s - 1, s) * X(s, s - 1);
    return log(num * inverse(den));
}

HalfGridSeries X_rec(int s, int t, int order2) {
    MapGFContext ctx(order2);
    return ctx.X(s, t);
}

HalfGridSeries F_series(int s, int order2) {
    MapGFContext ctx(order2);
    return ctx.F(s);
}

// ---- epsilon expansion at the critical point ----

namespace {

// y(z) with y = 1 - x and z = (36 (1 - 12 g))^{1/4}
RationalSeries y_of_z(int order) {
    Poly ng{0, 1, 1, 1};
    Poly dg = pmul({1, 4, 1}, {1, 4, 1});
    Poly ny = shift_to_y(ng), dy = shift_to_y(dg);
    Poly h(dy.size(), mpq_class(0));
    for (size_t k = 0; k < dy.size(); ++k) h[k] = dy[k] - 12 * (k < ny.size() ? ny[k] : mpq_class(0));
    for (int k = 0; k < 4; ++k)
        if (h[k] != 0) throw Error("critical point is not a quartic zero of 1 - 12 g");
    Poly k4(h.begin() + 4, h.end());
    auto q = RationalSeries::polynomial("y", order, k4) * mpq_class(36) / RationalSeries::polynomial("y", order, dy);
    if (q[0] != 1) throw Error("unexpected normalization of the quartic zero");
    RationalSeries root = pow(q, mpq_class(1, 4));
    RationalSeries z("y", order);
    for (int n = 1; n <= order; ++n) z.set(n, root[n - 1]);
    return revert(z, "z");
}

}  // namespace

RationalSeries x_of_eps(const mpq_class& a, int order) {
    RationalSeries y = scale_variable(y_of_z(order), a).renamed("eps");
    return RationalSeries::constant("eps", order, 1) - y;
}

EpsilonExpansion F_diag_eps(int s, const mpq_class& a, int order) {
    if (s < 1) throw DomainError("F needs s >= 1");
    std::vector<int> num, den;
    f_ratio_exponents(s, num, den);
    std::vector<Poly> nf, df;
    for (int k : num) nf.push_back(factor_in_y(k));
    for (int k : den) df.push_back(factor_in_y(k));
    Poly n = product(nf), d = product(df);
    mpq_class c = peval0(n) / peval0(d);
    RationalSeries ratio = RationalSeries::polynomial("y", order, n) / RationalSeries::polynomial("y", order, d);
    RationalSeries logr = log(ratio * mpq_class(1 / c));
    RationalSeries y = scale_variable(y_of_z(order), a).renamed("eps");
    return {c, compose(logr.renamed("eps"), y)};
}

// ---- coefficient tables ----

nlohmann::json coefficient_table_json(int s, const HalfGridSeries& F) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [k, v] : F.terms())
        entries.push_back({k.first, k.second, v.get_num().get_str(), v.get_den().get_str()});
    return {{"s", s}, {"order2", F.order2()}, {"entries", entries}};
}

HalfGridSeries coefficient_table_from_json(const nlohmann::json& doc) {
    HalfGridSeries f(doc.at("order2").get<int>());
    for (const auto& e : doc.at("entries")) {
        mpq_class q(mpz_class(e.at(2).get<std::string>()), mpz_class(e.at(3).get<std::string>()));
        f.set(e.at(0).get<int>(), e.at(1).get<int>(), q);
    }
    return f;
}

// ---- large-N estimates ----

std::vector<BigReal> profile_ratios(int s, int n_max) {
    RationalSeries f = F_diag(s, n_max);
    std::vector<BigReal> out;
    BigReal sqrt_pi = sqrt(pi());
    for (int n = 1; n <= n_max; ++n) {
        mpz_class p12;
        mpz_ui_pow_ui(p12.get_mpz_t(), 12, static_cast<unsigned long>(n));
        BigReal scaled = BigReal(mpq_class(f[n] / p12));
        BigReal bn(n);
        out.push_back(scaled * sqrt_pi * bn * bn * sqrt(bn) * 4 / 3);
    }
    return out;
}

Extrapolation estimate_profile_constant(int s, int n_max, const RichardsonConfig& cfg) {
    PrecisionScope scope(std::max(working_precision(), 512));
    std::vector<BigReal> r = profile_ratios(s, n_max);
    std::vector<BigReal> n;
    for (int k = 1; k <= n_max; ++k) n.emplace_back(k);
    return richardson(n, r, cfg);
}

Extrapolation estimate_cell_probability(MapGFContext& ctx, int s, int n2_doubled, const RichardsonConfig& cfg) {
    if (n2_doubled < 1) throw DomainError("n2 must be positive");
    HalfGridSeries f = ctx.F(s);
    RationalSeries diag = f.diagonal();
    std::vector<BigReal> ns, ratios;
    for (int n = 1; 2 * n <= ctx.order2(); ++n) {
        int i = 2 * n - n2_doubled;
        if (i < 0 || diag[n] == 0) continue;
        mpq_class q = f.coeff(i, n2_doubled) / diag[n];
        ns.emplace_back(n);
        ratios.emplace_back(q);
    }
    Extrapolation e = richardson(ns, ratios, cfg);
    // a probability: project onto [0, inf) and keep the spread as error
    if (e.value.sign() < 0) {
        e.error = max(e.error, abs(e.value));
        e.value = BigReal(0);
    }
    return e;
}

Extrapolation estimate_cell_probability(int s, int n2_doubled, int order2, const RichardsonConfig& cfg) {
    MapGFContext ctx(order2);
    return estimate_cell_probability(ctx, s, n2_doubled, cfg);
}

}  // namespace vcell
