#include <random>

#include "doctest.h"
#include "vcell/errors.hpp"
#include "vcell/scaling_fn.hpp"

using namespace vcell;

namespace {

bool rel_close(const BigReal& x, const BigReal& y, int bits) {
    return abs(x - y) <= epsilon(bits) * max(abs(x), abs(y));
}

BigReal a_b(const char* s) { return BigReal(std::string_view(s)); }

}  // namespace

TEST_CASE("polynomial parser") {
    BiPoly a = BiPoly::monomial(1, 1, 0), b = BiPoly::monomial(1, 0, 1);
    CHECK(parse_bipoly("(a-b)^2") == a * a - a * b * mpq_class(2) + b * b);
    CHECK(parse_bipoly("-3*a^2*b + 4") == BiPoly::monomial(-3, 2, 1) + BiPoly::constant(4));
    QcPoly cc = parse_qc("c*c");
    CHECK(cc.v.is_zero());
    CHECK(cc.u == (a * a + b * b) * mpq_class(1, 2));
    CHECK(parse_qc("c^3").v == (a * a + b * b) * mpq_class(1, 2));
    CHECK_THROWS_AS(parse_bipoly("a*c"), DomainError);
    CHECK_THROWS_AS(parse_bipoly("(a+b"), DomainError);
    CHECK_THROWS_AS(parse_bipoly("a+x"), DomainError);
    CHECK(to_string(parse_bipoly("2*a^2*b-b")) == "2*a^2*b - b");
}

TEST_CASE("table transcription identities hold exactly") {
    const ScalingTables& tab = ScalingTables::instance();
    CHECK(table_identity_failures(tab).empty());
    CHECK(tab.t[2][2].is_zero());
    CHECK(tab.u[0][0].v.is_zero());
    // E > 0 for 0 < b < a on a rational grid
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j < i; ++j) CHECK(tab.E.eval(mpq_class(i, 2), mpq_class(j, 3)) > 0);
    // a corrupted entry is caught
    ScalingTables bad = tab;
    bad.t[0][3].u.add_to(3, 4, 1);
    CHECK_FALSE(table_identity_failures(bad).empty());
}

TEST_CASE("table JSON dump and load") {
    const ScalingTables& tab = ScalingTables::instance();
    auto doc = tables_to_json(tab);
    CHECK(doc["t"].size() == 50);
    CHECK(doc["u"].size() == 18);
    CHECK(doc["t"][0]["i"] == 0);
    CHECK(doc["t"][0]["component"] == 0);
    ScalingTables back = tables_from_json(nlohmann::json::parse(doc.dump()));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(back.t[i][j] == tab.t[i][j]);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(back.u[i][j] == tab.u[i][j]);
    CHECK(back.D == tab.D);
    CHECK(back.E == tab.E);
    CHECK(table_identity_failures(back).empty());
}

TEST_CASE("Laurent arithmetic") {
    PrecisionScope p(128);
    using L = Laurent<BigReal>;
    L x = L::monomial(BigReal(1), 1);
    L f = L::monomial(BigReal(3), -2) + L(BigReal(1));
    L g = exp(x, 10);
    L h = f * g;
    CHECK(h.min_order() == -2);
    CHECK(h.prec() == 8);
    CHECK(h[-2] == BigReal(3));
    CHECK(h[-1] == BigReal(3));
    CHECK_THROWS_AS(h[8], TruncationError);
    L inv = inverse(g, 10);
    L one = g * inv;
    CHECK(abs(one[0] - BigReal(1)) < epsilon(120));
    for (int k = 1; k < 10; ++k) CHECK(abs(one[k]) < epsilon(120));
    L sq = sqrt(L::monomial(BigReal(4), -2) + L(BigReal(1)), 8);
    CHECK(sq.min_order() == -1);
    CHECK(sq[-1] == BigReal(2));
    CHECK(abs(sq[1] - BigReal(1) / 4L) < epsilon(120));
    CHECK_THROWS_AS(sqrt(x, 4), DomainError);
    CHECK_THROWS_AS(sqrt(-L(BigReal(1)), 4), DomainError);
}

TEST_CASE("diagonal closed form and path agreement") {
    PrecisionScope p(256);
    BigReal S = log(BigReal(2)) / 2L;
    CHECK(rel_close(eval_F_diag(S, 1), BigReal(12), 240));
    CHECK(rel_close(eval_F(S, 1, 1), BigReal(12), 200));
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> us(0.1, 5), ua(0.5, 3);
    for (int n = 0; n < 6; ++n) {
        BigReal s(us(rng)), a(ua(rng));
        CHECK(rel_close(eval_F(s, a, a), eval_F_diag(s, a), 120));
        // sequence b = a + 2^-k approaches the diagonal value
        BigReal prev_err(1);
        for (int k = 4; k <= 40; k += 12) {
            BigReal err = abs(eval_F(s, a, a + ldexp(BigReal(1), -k)) / eval_F_diag(s, a) - BigReal(1));
            CHECK(err < prev_err);
            prev_err = err;
        }
        // both paths agree across the switch-over
        BigReal b = a * (BigReal(1) + BigReal(2e-3));
        CHECK(rel_close(eval_F_path(FPath::direct, s, a, b), eval_F_path(FPath::near_diagonal, s, a, b), 120));
    }
}

TEST_CASE("b -> 0 limit matches the p/q form") {
    PrecisionScope p(256);
    for (const char* s : {"0.05", "0.5", "1.7", "6"}) {
        BigReal S = a_b(s), a = a_b("1.25");
        CHECK(rel_close(eval_F(S, a, 0), eval_F_b0(S, a), 120));
        CHECK(rel_close(eval_F(S, 0, a), eval_F_b0(S, a), 120));
        BigReal b = a * BigReal(2e-3);
        CHECK(rel_close(eval_F_path(FPath::direct, S, a, b), eval_F_path(FPath::near_zero, S, a, b), 120));
    }
    // prototype value of the p/q form
    CHECK(rel_close(eval_F_b0(BigReal(1) / 2L, 1), a_b("3.992239955555873187149737374324519643934"), 120));
    // small S: S coefficient -a^4/60
    BigReal a(2), S = a_b("1e-4");
    BigReal lin = (eval_F_b0(S, a) - BigReal(1) / (S * S * S * 2L)) / S;
    CHECK(abs(lin + BigReal(16) / 60L) < BigReal(1e-6));
}

TEST_CASE("symmetry and positivity on grids") {
    PrecisionScope p(192);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> us(0.1, 5), ua(0.5, 3);
    for (int n = 0; n < 12; ++n) {
        BigReal S(us(rng)), a(ua(rng)), b(ua(rng));
        BigReal f = eval_F(S, a, b);
        CHECK(f > BigReal(0));
        CHECK(rel_close(f, eval_F(S, b, a), 180));
    }
    for (double s : {0.1, 1.0, 5.0})
        for (double a : {0.5, 1.5, 3.0})
            for (double b : {0.5, 1.0, 3.0}) CHECK(eval_F(s, a, b) > BigReal(0));
    CHECK_THROWS_AS(eval_F(0, 1, 1), DomainError);
    CHECK_THROWS_AS(eval_F(1, -1, 1), DomainError);
}

TEST_CASE("small and large S of the special cases") {
    PrecisionScope p(256);
    BigReal a = a_b("1.5");
    BigReal S = a_b("1e-6");
    CHECK(abs(eval_F_diag(S, a) * S * S * S * 2L - BigReal(1)) < BigReal(1e-10));
    // S coefficient of the diagonal case is -a^4/30
    BigReal lin = (eval_F_diag(S, a) - BigReal(1) / (S * S * S * 2L)) / S;
    CHECK(abs(lin + pow(a, 4) / 30L) < BigReal(1e-8));
    BigReal big(40);
    CHECK(abs(eval_F_diag(big, a) / (a * a * a * 2L * exp(-(a * big) * 2L)) - BigReal(1)) < BigReal(1e-20));
}

TEST_CASE("r(S,a)") {
    PrecisionScope p(256);
    BigReal a(2);
    CHECK(abs(eval_r(BigReal(200), a) + a * a / 3L) < BigReal(1e-80));
    BigReal S = a_b("1e-8");
    CHECK(abs(eval_r(S, a) * S * S + BigReal(4)) < BigReal(1e-6));
    for (double s : {0.01, 0.3, 1.0, 4.0, 30.0})
        for (double aa : {0.2, 1.0, 5.0}) CHECK(eval_r(s, aa) < BigReal(0));
}

TEST_CASE("coefficient extraction") {
    PrecisionScope p(256);
    // tau = 0: 1/(2S^3) - a^4 S/60 + a^6 S^3/189 at a = sqrt 6
    CHECK(rel_close(extract_phi_laurent(0, 0), BigReal(1) / 2L, 200));
    CHECK(rel_close(extract_phi_laurent(2, 0), BigReal(-3) / 5L, 200));
    auto c3 = extract_phi_coeff(3, 0);
    CHECK(rel_close(c3.value, BigReal(8) / 7L, 200));
    CHECK(rel_close(c3.value * 7L / 16L, BigReal(1) / 2L, 200));
    CHECK(c3.discrepancy < BigReal(1e-30));
    CHECK(abs(extract_phi_laurent(1, 0)) < BigReal(1e-60));
    // tau > 0: no even powers, phi_1 = 0
    Laurent<BigReal> f;
    {
        PrecisionScope q(512);
        f = F_laurent(sqrt(BigReal(6)), 1, 4);
    }
    for (int k : {-2, -1, 0, 2, 4}) CHECK(abs(f[k]) < BigReal(1e-60));
    CHECK(f[-3] > BigReal(0));
    CHECK(f[-3] < BigReal(1) / 2L);
    // reference values from an independent prototype of the closed Laplace transform
    const char* expect[] = {"0.311934731036825404962967705478", "0.160697343515802814182852621978",
                            "0.057888258988975984251379920353"};
    const char* sigma[] = {"0.25", "1", "4"};
    for (int n = 0; n < 3; ++n) {
        BigReal tau = sqrt(BigReal(6)) * root(a_b(sigma[n]), 4);
        auto c = extract_phi_coeff(3, tau);
        CHECK(abs(c.value * 7L / 8L - a_b(expect[n])) < BigReal(1e-29));
        CHECK(c.discrepancy < BigReal(1e-25));
    }
    CHECK_THROWS_AS(extract_phi_coeff(7, 1), DomainError);
    CHECK_THROWS_AS(extract_phi_coeff(3, -1), DomainError);
}
