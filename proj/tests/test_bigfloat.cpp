#include "doctest.h"
#include "vcell/bigfloat.hpp"

using namespace vcell;

TEST_CASE("precision scope restores the previous working precision") {
    int before = working_precision();
    {
        PrecisionScope p(512);
        CHECK(working_precision() == 512);
        BigReal x(1);
        CHECK(x.precision() == 512);
    }
    CHECK(working_precision() == before);
}

TEST_CASE("copies keep the precision of their source") {
    PrecisionScope p(128);
    BigReal x;
    {
        PrecisionScope q(400);
        x = sqrt(BigReal(2));
    }
    BigReal y = x;
    CHECK(y.precision() == 400);
    CHECK((x * x - BigReal(2)).precision() == 128);
}

TEST_CASE("elementary functions agree with known constants") {
    PrecisionScope p(256);
    BigReal tol = epsilon(240);
    CHECK(abs(exp(log(BigReal(7))) - BigReal(7)) < tol * 7);
    CHECK(abs(gamma(BigReal(5)) - BigReal(24)) < tol * 24);
    CHECK(abs(gamma(BigReal(1) / 2) - sqrt(pi())) < tol);
    CHECK(abs(root(BigReal(81), 4) - BigReal(3)) < tol * 3);
    CHECK(BigReal("0.5") == BigReal(1) / 2);
}

TEST_CASE("complex arithmetic round trips") {
    PrecisionScope p(256);
    BigReal tol = epsilon(230);
    BigComplex z(BigReal(3), BigReal(-4));
    CHECK(abs(abs(z) - BigReal(5)) < tol);
    BigComplex w = sqrt(z);
    CHECK(abs(w * w - z) < tol);
    CHECK(abs(exp(log(z)) - z) < tol);
    CHECK(abs(z / z - BigComplex(1)) < tol);
    BigComplex neg(BigReal(-4), BigReal(0));
    BigComplex r = sqrt(neg);
    CHECK(abs(r - BigComplex(BigReal(0), BigReal(2))) < tol);
    CHECK(abs(pow(z, 3L) - z * z * z) < tol * 125);
    BigComplex q = pow(z, BigReal(1) / 4);
    CHECK(abs(q * q * q * q - z) < tol * 10);
}
