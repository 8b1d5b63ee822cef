#include "doctest.h"
#include "vcell/cell_law.hpp"
#include "vcell/errors.hpp"
#include "vcell/scaling_fn.hpp"

using namespace vcell;

namespace {

BigReal num(const char* s) { return BigReal(std::string_view(s)); }

bool rel_close(const BigReal& x, const BigReal& y, const BigReal& tol) { return abs(x - y) <= tol * abs(y); }

}  // namespace

TEST_CASE("surd arithmetic") {
    Surd s2(0, 1, 0, 0), s3(0, 0, 1, 0);
    CHECK(s2 * s2 == Surd(2));
    CHECK(s2 * s3 == Surd(0, 0, 0, 1));
    CHECK(s3 * Surd(0, 0, 0, 1) == Surd(0, 3, 0, 0));
    Surd x(3, mpq_class(-1, 2), 5, 7);
    CHECK(x * inverse(x) == Surd(1));
    CHECK_THROWS_AS(inverse(Surd()), DomainError);
    PrecisionScope p(128);
    CHECK(abs(x.eval() - (BigReal(3) - sqrt(BigReal(2)) / 2L + sqrt(BigReal(3)) * 5L + sqrt(BigReal(6)) * 7L)) <
          epsilon(120));
}

TEST_CASE("law polynomials: transcription checks") {
    const LawPolynomials& law = LawPolynomials::instance();
    CHECK(law_identity_failures(law).empty());
    CHECK(law.P[0] == Surd(-24192));
    CHECK(law.Pm[1][0][8].is_zero());
    LawPolynomials bad = law;
    bad.P[3] = bad.P[3] + Surd(0, 0, 1, 0);
    CHECK_FALSE(law_identity_failures(bad).empty());
}

TEST_CASE("exact small-r expansion of E") {
    auto e = E_series_in_r(4);
    CHECK(e[0] == Surd(1));
    CHECK(e[1] == Surd(0, 0, mpq_class(-665, 1024), 0));
    CHECK(e[2].is_zero());
    // 49 / (768 sqrt3) = 49 sqrt3 / 2304
    CHECK(e[3] == Surd(0, 0, mpq_class(49, 2304), 0));
    CHECK(e[4] == Surd(mpq_class(63, 80), 0, 0, 0));
}

TEST_CASE("E(sigma): range, monotonicity, convexity") {
    PrecisionScope p(192);
    CHECK(E_sigma(BigReal(0)) == BigReal(1));
    BigReal prev = E_sigma(num("1e-6")), prev_slope(-1e30);
    for (int k = -5; k <= 12; ++k) {
        BigReal s = pow(BigReal(2), static_cast<long>(k));
        BigReal e = E_sigma(s);
        CHECK(e > BigReal(0));
        CHECK(e < BigReal(1));
        CHECK(e < prev);
        prev = e;
    }
    // convexity on a uniform grid
    BigReal h = num("0.1");
    for (int k = 1; k < 40; ++k) {
        BigReal s = h * static_cast<long>(k);
        CHECK(E_sigma(s - h) + E_sigma(s + h) - E_sigma(s) * 2L > BigReal(0));
    }
    CHECK_THROWS_AS(E_sigma(BigReal(-1)), DomainError);
}

TEST_CASE("E(sigma) survives the small-sigma cancellation") {
    PrecisionScope p(128);
    // the E_kernel loses ~16 log2(1/r) bits; the guard must absorb it
    BigReal s = num("1e-40");
    BigReal r = root(s, 4);
    BigReal series = BigReal(1) - BigReal(665) * sqrt(BigReal(3)) / 1024L * r;
    CHECK(abs(E_sigma(s) - series) < num("1e-18"));
    PrecisionScope q(512);
    BigReal hi = E_sigma(s);
    PrecisionScope back(128);
    CHECK(abs(E_sigma(s) - hi) < epsilon(120));
}

TEST_CASE("cross-identity with the scaling-function extraction") {
    PrecisionScope p(256);
    for (const char* s : {"0.25", "1", "4"}) {
        BigReal sigma = num(s);
        BigReal tau = sqrt(BigReal(6)) * root(sigma, 4);
        auto c = extract_phi_coeff(3, tau);
        CHECK(rel_close(E_sigma(sigma), c.value * 7L / 8L, num("1e-25")));
    }
}

TEST_CASE("complex E agrees with real E and is conjugate-symmetric") {
    PrecisionScope p(192);
    for (const char* s : {"0.01", "0.7", "30"}) {
        BigReal x = num(s);
        BigComplex z = E_sigma(BigComplex(x));
        CHECK(abs(z.re - E_sigma(x)) < epsilon(180));
        CHECK(abs(z.im) < epsilon(180));
    }
    BigComplex z(num("0.3"), num("2.5"));
    BigComplex a = E_sigma(z), b = E_sigma(conj(z));
    CHECK(abs(a.re - b.re) < epsilon(180));
    CHECK(abs(a.im + b.im) < epsilon(180));
    // derivative against the real difference quotient
    BigReal x(2), h = num("1e-20");
    BigReal fd = (E_sigma(x + h) - E_sigma(x - h)) / (h * 2L);
    CHECK(abs(E_sigma_derivative(BigComplex(x)).re - fd) < num("1e-30"));
}

TEST_CASE("small-sigma fit") {
    PrecisionScope p(256);
    SmallSigmaFit f = small_sigma_fit(num("1e-12"), num("1e-8"));
    BigReal s3 = sqrt(BigReal(3));
    CHECK(rel_close(f.c1, -BigReal(665) * s3 / 1024L, num("1e-3")));
    CHECK(rel_close(f.c3, BigReal(49) / (s3 * 768L), num("1e-3")));
    CHECK(rel_close(f.c4, BigReal(63) / 80L, num("1e-3")));
    CHECK(abs(f.c2) < num("1e-6"));
}

TEST_CASE("large-sigma constant approached at rate sigma^{-1/4}") {
    PrecisionScope p(256);
    BigReal prev(1);
    for (const char* s : {"1e4", "1e8", "1e12", "1e16"}) {
        BigReal sigma = num(s);
        BigReal d = E_large_sigma_ratio(sigma) - BigReal(1);
        CHECK(d > BigReal(0));
        CHECK(d < prev);
        // d sigma^{1/4} settles near 1.373
        CHECK(abs(d * root(sigma, 4) - num("1.373")) < num("0.03"));
        prev = d;
    }
}

TEST_CASE("ILT engine: elementary pairs and the Levy oracle") {
    PrecisionScope p(192);
    auto inv = [](const BigComplex& s) { return BigComplex(BigReal(1)) / s; };
    auto ex = [](const BigComplex& s) { return BigComplex(BigReal(1)) / (s + BigReal(1)); };
    for (const char* v : {"0.1", "1", "7"}) {
        BigReal V = num(v);
        CHECK(abs(ilt(inv, V).value - BigReal(1)) < num("1e-20"));
        CHECK(rel_close(ilt(ex, V).value, exp(-V), num("1e-15")));
    }
    auto levy = [](const BigComplex& s) { return tree_E(s); };
    for (const char* v : {"0.1", "0.3", "1", "3", "10"}) {
        BigReal V = num(v);
        ILTResult r = ilt(levy, V);
        CHECK(rel_close(r.value, tree_P(V), num("1e-8")));
        CHECK(rel_close(r.secondary, tree_P(V), num("1e-8")));
    }
    ILTConfig cfg;
    cfg.node_count = 4;
    CHECK_THROWS_AS(ilt(levy, BigReal(1), cfg), DomainError);
    CHECK_THROWS_AS(ilt(levy, BigReal(0)), DomainError);
    // a transform with no inverse in this class makes the methods disagree
    auto bad = [](const BigComplex& s) { return exp(s * s); };
    CHECK_THROWS_AS(ilt(bad, BigReal(1)), ConvergenceError);
}

TEST_CASE("density of the rescaled volume") {
    PrecisionScope p(192);
    // independent reference: mpmath invertlaplace (Talbot, 60 digits) on the same closed transform
    const char* V[] = {"0.05", "0.1", "1", "10", "100", "1e4"};
    const char* ref[] = {"0.26324828875837329636", "0.29824363913502812404", "0.12077006533240180066",
                         "0.011810527611156880505", "0.00071800915502844600746", "2.2938691092170432738e-6"};
    for (int k = 0; k < 6; ++k) {
        ILTResult r = P_V(num(V[k]));
        CHECK(rel_close(r.value, num(ref[k]), num("1e-15")));
        CHECK(r.error < num("1e-12") * r.value);
    }
    CHECK(rel_close(P_cdf(num("1e6")).value, num("0.970973567"), num("1e-8")));
    BigReal m2 = P_truncated_mean(num("1e2")).value, m6 = P_truncated_mean(num("1e6")).value;
    CHECK(rel_close(m2, num("8.97384"), num("1e-5")));
    CHECK(rel_close(m6, num("9673.85"), num("1e-5")));
    BigReal slope = log(m6 / m2) / log(num("1e4"));
    CHECK(abs(slope - num("0.75")) < num("0.05"));
}

TEST_CASE("asymptotic forms") {
    PrecisionScope p(192);
    BigReal V(2);
    // saddle point is stationary for sigma V - sqrt6 sigma^{1/4}
    BigReal s = saddle_point(V);
    CHECK(abs(V - sqrt(BigReal(6)) / (root(s, 4) * root(s, 4) * root(s, 4) * 4L)) < epsilon(180));
    CHECK(rel_close(saddle_point(BigReal(1)), pow(BigReal(3), BigReal(2) / 3L) / 4L, epsilon(180)));
    // tail exponent -5/4
    BigReal h = num("1e-10");
    BigReal slope = (log(asympt_tail(V * (BigReal(1) + h))) - log(asympt_tail(V))) / log(BigReal(1) + h);
    CHECK(abs(slope + BigReal(5) / 4L) < num("1e-8"));
    // flat at 0: f(V)/V^k vanishes for every k
    for (long k : {1L, 5L, 20L}) CHECK(asympt_flat(num("1e-9")) / pow(num("1e-9"), k) < num("1e-300"));
    // tail and flat forms against the density
    CHECK(abs(P_V(num("1e4")).value / asympt_tail(num("1e4")) - BigReal(1)) < num("0.1"));
    CHECK(asympt_flat(num("0.05")) > BigReal(0));
}

TEST_CASE("tree laws and the Levy family") {
    PrecisionScope p(128);
    CHECK(tree_E(BigReal(0)) == BigReal(1));
    CHECK(abs(tree_E(BigReal(1)) - exp(BigReal(-2))) < epsilon(120));
    // normalization: substitute V = 1/u^2, density 2 e^{-u^2}/sqrt(pi) on (0, inf)
    BigReal acc(0), du = num("0.001");
    for (int k = 1; k <= 8000; ++k) {
        BigReal u = du * (BigReal(k) - BigReal(1) / 2L);
        BigReal V = BigReal(1) / (u * u);
        acc += tree_P(V) * BigReal(2) / (u * u * u) * du;
    }
    CHECK(abs(acc - BigReal(1)) < num("1e-6"));
    LevyAsymptotics q = levy_asympt(mpq_class(1, 4));
    CHECK(q.tail_exponent == mpq_class(5, 4));
    CHECK(q.flat_power == mpq_class(7, 6));
    CHECK(q.flat_exponent == mpq_class(1, 3));
    LevyAsymptotics t = levy_asympt(mpq_class(1, 2));
    CHECK(t.tail_exponent == mpq_class(3, 2));
    CHECK(t.flat_power == mpq_class(3, 2));
    CHECK(t.flat_exponent == 1);
    CHECK_THROWS_AS(levy_asympt(mpq_class(1)), DomainError);
}
