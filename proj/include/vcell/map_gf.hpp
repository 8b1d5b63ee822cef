#pragma once

#include <map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vcell/bigfloat.hpp"
#include "vcell/richardson.hpp"
#include "vcell/series.hpp"

namespace vcell {

// g(x) = x(1+x+x^2)/(1+4x+x^2)^2 as a series in x.
RationalSeries g_of_x(int order);
// Inverse of g_of_x, solved coefficient by coefficient from the algebraic relation.
RationalSeries x_of_g(int order);
// Tree generating function R_s(g); R_0 = 0.
RationalSeries R_series(int s, int order);
// Closed form of X_{s,t}(g,g).
RationalSeries X_diag(int s, int t, int order);
// F(s,g,g) from the closed diagonal form.
RationalSeries F_diag(int s, int order);
// Value of R_s at g = 1/12 (x = 1).
mpq_class R_critical(int s);
// Value of X_{s,t}(g,g) at g = 1/12 (x = 1).
mpq_class X_critical(int s, int t);

struct ProfileConstant {
    int s;
    mpq_class f3;
};

ProfileConstant profile_constant(int s);

// Memoizes R_s and X_{s,t} for one doubled truncation order.
class MapGFContext {
public:
    explicit MapGFContext(int order2);

    int order2() const { return order2_; }
    const RationalSeries& R(int s);
    // X_{s,t}(g,h) to doubled total degree `order2` (defaults to the context order).
    HalfGridSeries X(int s, int t, int order2 = -1);
    HalfGridSeries F(int s);
    size_t cached_labels() const { return x_cache_.size(); }

private:
    int order2_;
    std::map<int, RationalSeries> r_cache_;
    std::map<std::pair<int, int>, HalfGridSeries> x_cache_;
};

HalfGridSeries X_rec(int s, int t, int order2);
HalfGridSeries F_series(int s, int order2);

// Expansion at g = G(a, eps) = (1 - a^4 eps^4 / 36) / 12.
RationalSeries x_of_eps(const mpq_class& a, int order);

struct EpsilonExpansion {
    mpq_class ratio_at_critical;  // F = log(ratio_at_critical) + series
    RationalSeries series;        // in eps, zero constant term
};

EpsilonExpansion F_diag_eps(int s, const mpq_class& a, int order);

nlohmann::json coefficient_table_json(int s, const HalfGridSeries& F);
HalfGridSeries coefficient_table_from_json(const nlohmann::json& doc);

// r_N = F_N(s) sqrt(pi) N^{5/2} / ((3/4) 12^N) for N = 1..n_max.
std::vector<BigReal> profile_ratios(int s, int n_max);
// Default for the profile: the corrections are a series in s^4/N, so a deep
// extrapolation over consecutive N is needed.
inline RichardsonConfig profile_richardson() { return {30, 10}; }
Extrapolation estimate_profile_constant(int s, int n_max, const RichardsonConfig& cfg = profile_richardson());

// Limit over N of F_{N - n2, n2}(s) / F_N(s), n2 given doubled.
Extrapolation estimate_cell_probability(MapGFContext& ctx, int s, int n2_doubled,
                                        const RichardsonConfig& cfg = {});
Extrapolation estimate_cell_probability(int s, int n2_doubled, int order2, const RichardsonConfig& cfg = {});

}  // namespace vcell
