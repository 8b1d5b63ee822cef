#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "vcell/bipoly.hpp"

namespace vcell {

// Polynomial in r with coefficients x + y*sqrt(2), x, y integers.
struct Sqrt2Poly {
    std::vector<std::pair<mpz_class, mpz_class>> c;  // low degree first
    BigReal eval(const BigReal& r) const;
    template <class T>
    T eval_series(const T& r, const T& zero) const {
        BigReal s2 = sqrt(BigReal(2));
        T acc = zero;
        for (size_t k = c.size(); k-- > 0;) acc = acc * r + (BigReal(c[k].first) + BigReal(c[k].second) * s2);
        return acc;
    }
};

// Coefficient tables of the scaling function, held exactly. t[i][j] and u[i][j] are u + v c with
// c = sqrt((a^2 + b^2)/2); E = (a-b)^2 E_tilde = b E_over_b.
struct ScalingTables {
    std::array<std::array<QcPoly, 5>, 5> t;
    std::array<std::array<QcPoly, 3>, 3> u;
    std::array<std::array<std::array<std::string, 5>, 5>, 2> t_text;
    std::array<std::array<std::array<std::string, 3>, 3>, 2> u_text;
    BiPoly E;
    BiPoly E_tilde;
    BiPoly E_over_b;
    std::string E_text;
    std::vector<QcPoly> D_factors;
    std::vector<std::string> D_text;
    QcPoly D;
    // b = 0 form: p[1..5] (p[0] unused) and q[0..2], polynomials in r = aS.
    std::array<Sqrt2Poly, 6> p;
    std::array<Sqrt2Poly, 3> q;

    static const ScalingTables& instance();
    static ScalingTables build();
};

// Failed exact identities (empty when the transcription is consistent):
// t_ij(a,b) = t_ji(b,a), u_ij(a,b) = u_ji(b,a), t_22 = 0, u_00^(1) = 0,
// E = (a-b)^2 E_tilde = b E_over_b, E(a,a) = 0.
std::vector<std::string> table_identity_failures(const ScalingTables& tab);

// Dump mirrors the layout: per entry i, j, component (0/1), the factored
// text and the expanded integer coefficient triples [deg_a, deg_b, value].
nlohmann::json tables_to_json(const ScalingTables& tab);
ScalingTables tables_from_json(const nlohmann::json& doc);

}  // namespace vcell
