#include "doctest.h"
#include "vcell/errors.hpp"
#include "vcell/map_gf.hpp"

using namespace vcell;

namespace {

RationalSeries gser(const std::vector<mpq_class>& c) { return RationalSeries("g", c); }

// Planted labelled trees: R_s = 1 + g R_s (R_{s-1} + R_s + R_{s+1}), R_0 = 0,
// iterated in g; labels above s + order cannot be reached.
std::vector<RationalSeries> tree_oracle(int s_max, int order) {
    int top = s_max + order + 2;
    std::vector<RationalSeries> r(top + 1, RationalSeries::constant("g", order, 1));
    r[0] = RationalSeries("g", order);
    RationalSeries g = RationalSeries::variable("g", order);
    for (int it = 0; it <= order; ++it) {
        std::vector<RationalSeries> next = r;
        for (int s = 1; s < top; ++s)
            next[s] = RationalSeries::constant("g", order, 1) + g * r[s] * (r[s - 1] + r[s] + r[s + 1]);
        r = next;
    }
    return r;
}

}  // namespace

TEST_CASE("x(g) leading terms and inverse relation") {
    CHECK(x_of_g(1) == gser({0, 1}));
    CHECK(x_of_g(3) == gser({0, 1, 7, 59}));
    CHECK(x_of_g(6) == gser({0, 1, 7, 59, 544, 5289, 53256}));
    CHECK(compose(g_of_x(10), x_of_g(10)) == RationalSeries::variable("g", 10));
    // generic Lagrange reversion must agree with the algebraic solver
    CHECK(revert(g_of_x(30), "g") == x_of_g(30));
    CHECK_THROWS_AS(x_of_g(0), DomainError);
}

TEST_CASE("R_s closed form against the labelled-tree recursion") {
    CHECK(R_series(0, 5).is_zero());
    CHECK(R_series(1, 2) == gser({1, 2, 9}));
    CHECK(R_series(1, 4) == gser({1, 2, 9, 54, 378}));
    CHECK(R_series(2, 4) == gser({1, 3, 17, 119, 932}));
    auto oracle = tree_oracle(6, 9);
    for (int s = 0; s <= 6; ++s) CHECK(R_series(s, 9) == oracle[s].truncated(9));
}

TEST_CASE("critical values at x = 1") {
    for (int s = 1; s <= 6; ++s) {
        mpq_class expect(2 * s * (s + 3), (s + 1) * (s + 2));
        expect.canonicalize();
        CHECK(R_critical(s) == expect);
    }
    CHECK(R_critical(3) == mpq_class(9, 5));
    for (int s = 0; s <= 5; ++s)
        for (int t = 0; t <= 5; ++t) {
            mpq_class expect(3 * (s + 1) * (t + 1) * (s + t + 3), (s + 3) * (t + 3) * (s + t + 1));
            expect.canonicalize();
            CHECK(X_critical(s, t) == expect);
        }
    // numeric limit of the composed series: R_1 at g close to 1/12 is approached from below
    PrecisionScope p(128);
    RationalSeries r1 = R_series(1, 400);
    BigReal g = BigReal(1) / 12, acc(0), pw(1);
    for (int n = 0; n <= 400; ++n) {
        acc += BigReal(r1[n]) * pw;
        pw *= g;
    }
    CHECK(acc < BigReal(R_critical(1)));
    CHECK(acc > BigReal(R_critical(1)) * 0.99);
}

TEST_CASE("closed diagonal X and F") {
    CHECK(X_diag(0, 4, 6) == RationalSeries::constant("g", 6, 1));
    CHECK(X_diag(3, 0, 6) == RationalSeries::constant("g", 6, 1));
    CHECK(X_diag(1, 1, 2) == gser({1, 1, 6}));
    CHECK(X_diag(1, 1, 3) == gser({1, 1, 6, 44}));
    CHECK(X_diag(1, 2, 3) == gser({1, 1, 7, 57}));
    CHECK(F_diag(1, 4) == gser({0, 1, mpq_class(11, 2), mpq_class(115, 3), mpq_class(1207, 4)}));
    CHECK(F_diag(2, 4) == gser({0, 0, 0, 1, 19}));
    CHECK(F_diag(1, 6)[0] == 0);
}

TEST_CASE("recursive X: constant term, symmetry, diagonal identity") {
    MapGFContext ctx(20);
    for (int s = 0; s <= 8; ++s)
        for (int t = 0; t <= 8; ++t) {
            HalfGridSeries x = ctx.X(s, t);
            CHECK(x.coeff(0, 0) == 1);
            CHECK(x.diagonal() == X_diag(s, t, 10));
            CHECK(ctx.X(t, s) == x.transposed());
        }
    CHECK(ctx.X(0, 3) == HalfGridSeries::constant(20, 1));
    CHECK_THROWS_AS(ctx.X(1, 1, 22), TruncationError);
}

TEST_CASE("recursive X carries half-integer exponents") {
    HalfGridSeries x = X_rec(1, 1, 6);
    // leading chain term sqrt(gh) R_1(g) R_1(h)
    CHECK(x.coeff(1, 1) == 1);
    CHECK(x.coeff(3, 1) == 2);
    CHECK(x.coeff(1, 3) == 2);
}

TEST_CASE("bivariate F: symmetry, positivity, diagonal") {
    MapGFContext ctx(24);
    for (int s = 1; s <= 3; ++s) {
        HalfGridSeries f = ctx.F(s);
        CHECK(f.diagonal() == F_diag(s, 12));
        for (const auto& [k, v] : f.terms()) {
            CHECK(v > 0);
            CHECK(f.coeff(k.second, k.first) == v);
        }
    }
}

TEST_CASE("coefficient table JSON round trip") {
    HalfGridSeries f = F_series(2, 16);
    auto doc = coefficient_table_json(2, f);
    CHECK(doc["s"] == 2);
    CHECK(doc["order2"] == 16);
    CHECK(doc["entries"].size() == f.terms().size());
    CHECK(coefficient_table_from_json(nlohmann::json::parse(doc.dump())) == f);
}

TEST_CASE("epsilon expansion at the critical point") {
    CHECK(x_of_eps(1, 8) == RationalSeries("eps", {1, -1, mpq_class(1, 2), mpq_class(-5, 24), mpq_class(1, 12),
                                                   mpq_class(-13, 384), mpq_class(1, 72), mpq_class(-157, 27648),
                                                   mpq_class(1, 432)}));
    for (int s = 1; s <= 3; ++s) {
        for (const mpq_class& a : {mpq_class(1), mpq_class(3, 2), mpq_class(2, 7)}) {
            auto e = F_diag_eps(s, a, 8);
            mpq_class c(s * s * (2 * s + 3), (s + 1) * (s + 1) * (2 * s - 1));
            c.canonicalize();
            CHECK(e.ratio_at_critical == c);
            mpq_class a4 = a * a * a * a, a6 = a4 * a * a;
            CHECK(e.series[1] == 0);
            CHECK(e.series[2] == 0);
            CHECK(e.series[3] == 0);
            CHECK(e.series[5] == 0);
            CHECK(e.series[4] == -(2 * s + 1) * a4 / 60);
            CHECK(e.series[6] == (2 * s + 1) * (10 * s * s + 10 * s + 1) * a6 / 1890);
        }
    }
    CHECK(F_diag_eps(1, 1, 6).ratio_at_critical == mpq_class(5, 4));
}

TEST_CASE("profile constant") {
    CHECK(profile_constant(1).f3 == mpq_class(36, 5));
    CHECK(profile_constant(2).f3 == mpq_class(244, 7));
    PrecisionScope p(128);
    BigReal r = BigReal(profile_constant(1000).f3) / BigReal(1000L * 1000 * 1000);
    CHECK(abs(r - BigReal(16) / 7) < BigReal(0.01));
    CHECK_THROWS_AS(profile_constant(0), DomainError);
}

TEST_CASE("profile ratios approach the constant") {
    auto r = profile_ratios(1, 120);
    for (size_t i = 20; i + 1 < r.size(); ++i) CHECK(r[i] < r[i + 1]);
    auto e = estimate_profile_constant(1, 120);
    BigReal f3(profile_constant(1).f3);
    CHECK(abs(e.value / f3 - BigReal(1)) < BigReal(1e-4));
    CHECK(e.error < BigReal(1e-3));
}

TEST_CASE("cell probability estimates") {
    MapGFContext ctx(40);
    BigReal total(0);
    for (int n2d = 1; n2d <= 8; ++n2d) {
        auto e = estimate_cell_probability(ctx, 1, n2d);
        CHECK(e.value >= BigReal(-1e-12));
        total += e.value;
    }
    CHECK(total <= BigReal(1));
    CHECK_THROWS_AS(estimate_cell_probability(ctx, 1, 38), ConvergenceError);
}
