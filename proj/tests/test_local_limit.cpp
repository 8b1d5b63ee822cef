#include "doctest.h"
#include "vcell/errors.hpp"
#include "vcell/local_limit.hpp"

using namespace vcell;

namespace {

BigReal gaussian_value() { return BigReal(162) / sqrt(pi()); }

bool rel_close(const BigReal& x, const BigReal& y, const BigReal& tol) { return abs(x - y) <= tol * abs(y); }

}  // namespace

TEST_CASE("contour integrals of a^6 and the shifted quartic") {
    PrecisionScope p(256);
    BigReal tol("1e-40");
    for (auto shape : {ContourShape::through_origin, ContourShape::shifted_vertex}) {
        ContourSpec spec;
        spec.shape = shape;
        for (int mu : {0, 1}) {
            ContourResult a6 = contour_integral(ContourKind::a6, BigReal(mu), spec);
            ContourResult q = contour_integral(ContourKind::quartic_shift, BigReal(mu), spec);
            CHECK(rel_close(a6.value, gaussian_value(), tol));
            CHECK(rel_close(q.value, gaussian_value() * exp(BigReal(mu)), tol));
            CHECK(a6.error < BigReal("1e-30"));
            CHECK(a6.imag_residue < BigReal("1e-60"));
        }
    }
    // both kinds coincide at mu = 0
    CHECK(abs(contour_integral(ContourKind::a6, 0).value - contour_integral(ContourKind::quartic_shift, 0).value) <
          BigReal("1e-60"));
}

TEST_CASE("constant and a^4 integrands vanish") {
    PrecisionScope p(256);
    for (int pw : {0, 4}) {
        CHECK(abs(contour_monomial(pw, 0).value) < BigReal("1e-50"));
        CHECK(abs(contour_monomial(pw, 1).value) < BigReal("1e-50"));
    }
    // a^2 does not vanish: the weight is not blind to every power
    CHECK(abs(contour_monomial(2, 0).value) > BigReal("1e-3"));
    CHECK_THROWS_AS(contour_monomial(-1, 0), DomainError);
}

TEST_CASE("limit law of the volume fraction") {
    PrecisionScope p(256);
    for (int mu : {-1, 0, 1, 2}) {
        ContourResult r = phi_mgf(BigReal(mu));
        BigReal expect = (BigReal(1) + exp(BigReal(mu))) / 2L;
        CHECK(abs(r.value - expect) < BigReal("1e-30"));
    }
    // strongly negative mu: only the half with no mass left survives
    CHECK(abs(phi_mgf(BigReal(-12)).value - BigReal(1) / 2L) < BigReal("1e-5"));
    CHECK_THROWS_AS(contour_integral(ContourKind::a6, -1), DomainError);
}

TEST_CASE("doubling the node count stays within the reported error") {
    PrecisionScope p(192);
    ContourSpec coarse, fine;
    coarse.quadrature.nodes = 16;
    fine.quadrature.nodes = 32;
    for (int mu : {0, 1}) {
        ContourResult a = contour_integral(ContourKind::quartic_shift, BigReal(mu), coarse);
        ContourResult b = contour_integral(ContourKind::quartic_shift, BigReal(mu), fine);
        CHECK(abs(a.value - b.value) <= a.error + b.error + epsilon(150) * abs(a.value));
    }
}
