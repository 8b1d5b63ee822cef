#include "vcell/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "vcell/errors.hpp"

namespace vcell {

namespace {

GaussLegendreRule build_rule(int n) {
    GaussLegendreRule r;
    r.x.resize(n);
    r.w.resize(n);
    BigReal pi_ = pi();
    BigReal tol = epsilon(working_precision() - 4);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n
        BigReal x = cos(pi_ * (BigReal(4L * i + 3) / BigReal(4L * n + 2)));
        BigReal dp;
        for (int it = 0; it < 200; ++it) {
            BigReal p0(1), p1 = x;
            for (int k = 2; k <= n; ++k) {
                BigReal p2 = (x * p1 * static_cast<long>(2 * k - 1) - p0 * static_cast<long>(k - 1)) / static_cast<long>(k);
                p0 = p1;
                p1 = p2;
            }
            dp = (x * p1 - p0) * static_cast<long>(n) / (x * x - BigReal(1));
            BigReal dx = p1 / dp;
            x -= dx;
            if (abs(dx) <= tol) break;
        }
        BigReal w = BigReal(2) / ((BigReal(1) - x * x) * dp * dp);
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return r;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 2) throw DomainError("gauss_legendre: need at least 2 nodes");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, working_precision());
    auto& slot = cache[key];
    if (!slot) slot = std::make_unique<GaussLegendreRule>(build_rule(n));
    return *slot;
}

namespace {

BigComplex panel(const std::function<BigComplex(const BigReal&)>& f, const GaussLegendreRule& rule,
                 const BigReal& a, const BigReal& b) {
    BigReal half = (b - a) / 2L, mid = (a + b) / 2L;
    BigComplex acc;
    acc.re = BigReal(0);
    acc.im = BigReal(0);
    for (size_t k = 0; k < rule.x.size(); ++k) acc += f(mid + half * rule.x[k]) * rule.w[k];
    return acc * half;
}

struct Adaptive {
    const std::function<BigComplex(const BigReal&)>& f;
    const GaussLegendreRule& rule;
    const QuadratureConfig& cfg;
    QuadratureResult out;

    void run(const BigReal& a, const BigReal& b, const BigComplex& whole, const BigReal& tol, int depth) {
        BigReal m = (a + b) / 2L;
        BigComplex left = panel(f, rule, a, m), right = panel(f, rule, m, b);
        BigComplex halves = left + right;
        BigReal diff = abs(halves - whole);
        if (diff <= tol) {
            out.value += halves;
            out.error += diff;
            ++out.panels;
            return;
        }
        if (depth >= cfg.max_depth)
            throw ConvergenceError("integrate: panel subdivision limit reached on [" + a.str(8) + ", " + b.str(8) +
                                   "], diff " + diff.str(4) + " tol " + tol.str(4));
        BigReal sub = tol / 2L;
        run(a, m, left, sub, depth + 1);
        run(m, b, right, sub, depth + 1);
    }
};

}  // namespace

QuadratureResult integrate(const std::function<BigComplex(const BigReal&)>& f, const BigReal& t0,
                           const BigReal& t1, const QuadratureConfig& cfg) {
    const GaussLegendreRule& rule = gauss_legendre(cfg.nodes);
    int np = std::max(cfg.initial_panels, 1);
    std::vector<BigComplex> first;
    BigReal scale(0);
    for (int k = 0; k < np; ++k) {
        BigReal a = t0 + (t1 - t0) * static_cast<long>(k) / static_cast<long>(np);
        BigReal b = t0 + (t1 - t0) * static_cast<long>(k + 1) / static_cast<long>(np);
        first.push_back(panel(f, rule, a, b));
        scale += abs(first.back());
    }
    BigReal tol = cfg.abs_tol.is_zero() ? max(scale, BigReal(1)) * epsilon(working_precision() * 3 / 4) : cfg.abs_tol;
    Adaptive ad{f, rule, cfg, {}};
    BigReal panel_tol = tol / static_cast<long>(np);
    ad.out.value = BigComplex(BigReal(0), BigReal(0));
    ad.out.error = BigReal(0);
    for (int k = 0; k < np; ++k) {
        BigReal a = t0 + (t1 - t0) * static_cast<long>(k) / static_cast<long>(np);
        BigReal b = t0 + (t1 - t0) * static_cast<long>(k + 1) / static_cast<long>(np);
        ad.run(a, b, first[k], panel_tol, 0);
    }
    return ad.out;
}

}  // namespace vcell
