#include "vcell/scaling_tables.hpp"

#include "vcell/errors.hpp"

namespace vcell {

namespace {

const char* const kT0[5][5] = {
    {"(a+b)^3*(396*a^10+1448*a^9*b+3672*a^8*b^2+6520*a^7*b^3+9135*a^6*b^4+10146*a^5*b^5+9135*a^4*b^6+6520*a^3*b^7+3672*a^2*b^8+1448*a*b^9+396*b^10)",
     "-4*(a^2-b^2)^2*(198*a^9+502*a^8*b+1099*a^7*b^2+1551*a^6*b^3+1806*a^5*b^4+1596*a^4*b^5+1128*a^3*b^6+596*a^2*b^7+224*a*b^8+48*b^9)",
     "-6*b*(a^2-b^2)*(2*a^2+b^2)*(198*a^8+280*a^7*b+611*a^6*b^2+584*a^5*b^3+599*a^4*b^4+368*a^3*b^5+200*a^2*b^6+64*a*b^7+12*b^8)",
     "4*a*(a^2-b^2)^2*(2*a^2+b^2)*(99*a^6+29*a^5*b+186*a^4*b^2+40*a^3*b^3+104*a^2*b^4+12*a*b^5+16*b^6)",
     "-(a-b)^3*(2*a^2+b^2)^2*(99*a^6-82*a^5*b+191*a^4*b^2-120*a^3*b^3+104*a^2*b^4-40*a*b^5+12*b^6)"},
    {"-4*(a^2-b^2)^2*(48*a^9+224*a^8*b+596*a^7*b^2+1128*a^6*b^3+1596*a^5*b^4+1806*a^4*b^5+1551*a^3*b^6+1099*a^2*b^7+502*a*b^8+198*b^9)",
     "8*(a+b)^3*(a^4+7*a^2*b^2+b^4)*(48*a^6+74*a^5*b+168*a^4*b^2+149*a^3*b^3+168*a^2*b^4+74*a*b^5+48*b^6)",
     "-24*b*(a^2-b^2)^2*(2*a^2+b^2)*(24*a^6+34*a^5*b+62*a^4*b^2+54*a^3*b^3+43*a^2*b^4+20*a*b^5+6*b^6)",
     "-8*a*(a-b)^2*(2*a^2+b^2)*(a^4+7*a^2*b^2+b^4)*(24*a^4+7*a^3*b+33*a^2*b^2+6*a*b^3+10*b^4)",
     "4*(a^2-b^2)^2*(2*a^2+b^2)^2*(12*a^5-22*a^4*b+27*a^3*b^2-27*a^2*b^3+14*a*b^4-6*b^5)"},
    {"6*a*(a^2-b^2)*(a^2+2*b^2)*(12*a^8+64*a^7*b+200*a^6*b^2+368*a^5*b^3+599*a^4*b^4+584*a^3*b^5+611*a^2*b^6+280*a*b^7+198*b^8)",
     "-24*a*(a^2-b^2)^2*(a^2+2*b^2)*(6*a^6+20*a^5*b+43*a^4*b^2+54*a^3*b^3+62*a^2*b^4+34*a*b^5+24*b^6)",
     "0",
     "24*a^2*(a^2-b^2)^2*(2*a^2+b^2)*(a^2+2*b^2)*(3*a^3-2*a^2*b+2*a*b^2-2*b^3)",
     "-6*a*(a^2-b^2)*(2*a^2+b^2)^2*(a^2+2*b^2)*(3*a^4-8*a^3*b+11*a^2*b^2-8*a*b^3+6*b^4)"},
    {"4*b*(a^2-b^2)^2*(a^2+2*b^2)*(16*a^6+12*a^5*b+104*a^4*b^2+40*a^3*b^3+186*a^2*b^4+29*a*b^5+99*b^6)",
     "-8*b*(a-b)^2*(a^2+2*b^2)*(a^4+7*a^2*b^2+b^4)*(10*a^4+6*a^3*b+33*a^2*b^2+7*a*b^3+24*b^4)",
     "-24*b^2*(a^2-b^2)^2*(2*a^2+b^2)*(a^2+2*b^2)*(2*a^3-2*a^2*b+2*a*b^2-3*b^3)",
     "-8*a*b*(a+b)^3*(2*a^2+b^2)*(a^2+2*b^2)*(a^4+7*a^2*b^2+b^4)",
     "4*b*(a^2-b^2)^2*(2*a^2+b^2)^2*(a^2+2*b^2)*(2*a^2-a*b+3*b^2)"},
    {"(a-b)^3*(a^2+2*b^2)^2*(12*a^6-40*a^5*b+104*a^4*b^2-120*a^3*b^3+191*a^2*b^4-82*a*b^5+99*b^6)",
     "-4*(a^2-b^2)^2*(a^2+2*b^2)^2*(6*a^5-14*a^4*b+27*a^3*b^2-27*a^2*b^3+22*a*b^4-12*b^5)",
     "6*b*(a^2-b^2)*(2*a^2+b^2)*(a^2+2*b^2)^2*(6*a^4-8*a^3*b+11*a^2*b^2-8*a*b^3+3*b^4)",
     "4*a*(a^2-b^2)^2*(2*a^2+b^2)*(a^2+2*b^2)^2*(3*a^2-a*b+2*b^2)",
     "-(a+b)^3*(2*a^2+b^2)^2*(a^2+2*b^2)^2*(3*a^2+2*a*b+3*b^2)"},
};
const char* const kT1[5][5] = {
    {"4*(a+b)^4*(10*a^4+18*a^3*b+25*a^2*b^2+18*a*b^3+10*b^4)*(14*a^4+12*a^3*b+29*a^2*b^2+12*a*b^3+14*b^4)",
     "-4*(a^2-b^2)^2*(280*a^8+710*a^7*b+1414*a^6*b^2+1839*a^5*b^3+1881*a^4*b^4+1428*a^3*b^5+812*a^2*b^6+316*a*b^7+68*b^8)",
     "-24*b*(a^2-b^2)*(2*a^2+b^2)*(10*a^3+7*a^2*b+8*a*b^2+2*b^3)*(7*a^4+5*a^3*b+9*a^2*b^2+4*a*b^3+2*b^4)",
     "4*(a^2-b^2)^2*(2*a^2+b^2)*(140*a^6+41*a^5*b+193*a^4*b^2+36*a^3*b^3+68*a^2*b^4+4*a*b^5+4*b^6)",
     "-4*(a-b)^3*(2*a^2+b^2)^2*(5*a^2-2*a*b+2*b^2)*(7*a^3-3*a^2*b+6*a*b^2-2*b^3)"},
    {"-4*(a^2-b^2)^2*(68*a^8+316*a^7*b+812*a^6*b^2+1428*a^5*b^3+1881*a^4*b^4+1839*a^3*b^5+1414*a^2*b^6+710*a*b^7+280*b^8)",
     "16*(a+b)^2*(a^4+7*a^2*b^2+b^4)*(34*a^6+86*a^5*b+155*a^4*b^2+179*a^3*b^3+155*a^2*b^4+86*a*b^5+34*b^6)",
     "-24*b*(a^2-b^2)^2*(2*a^2+b^2)*(34*a^5+48*a^4*b+71*a^3*b^2+52*a^2*b^3+30*a*b^4+8*b^5)",
     "-16*(a-b)^2*(2*a^2+b^2)*(a^4+7*a^2*b^2+b^4)*(17*a^4+5*a^3*b+15*a^2*b^2+2*a*b^3+2*b^4)",
     "4*(a^2-b^2)^2*(2*a^2+b^2)^2*(17*a^4-31*a^3*b+30*a^2*b^2-22*a*b^3+8*b^4)"},
    {"24*a*(a^2-b^2)*(a^2+2*b^2)*(2*a^3+8*a^2*b+7*a*b^2+10*b^3)*(2*a^4+4*a^3*b+9*a^2*b^2+5*a*b^3+7*b^4)",
     "-24*a*(a^2-b^2)^2*(a^2+2*b^2)*(8*a^5+30*a^4*b+52*a^3*b^2+71*a^2*b^3+48*a*b^4+34*b^5)",
     "0",
     "24*a*(a^2-b^2)^2*(2*a^2+b^2)*(a^2+2*b^2)*(4*a^3-3*a^2*b-2*b^3)",
     "-24*a*(a-2*b)*(a^2-b^2)*(2*a^2+b^2)^2*(a^2+2*b^2)*(a^2-a*b+b^2)"},
    {"4*(a^2-b^2)^2*(a^2+2*b^2)*(4*a^6+4*a^5*b+68*a^4*b^2+36*a^3*b^3+193*a^2*b^4+41*a*b^5+140*b^6)",
     "-16*(a-b)^2*(a^2+2*b^2)*(a^4+7*a^2*b^2+b^4)*(2*a^4+2*a^3*b+15*a^2*b^2+5*a*b^3+17*b^4)",
     "-24*b*(a^2-b^2)^2*(2*a^2+b^2)*(a^2+2*b^2)*(2*a^3+3*a*b^2-4*b^3)",
     "16*(a+b)^2*(2*a^2+b^2)*(a^2+2*b^2)*(a^2-a*b+b^2)*(a^4+7*a^2*b^2+b^4)",
     "-4*(a^2-b^2)^2*(2*a^2+b^2)^2*(a^2+2*b^2)*(a^2-a*b+4*b^2)"},
    {"-4*(a-b)^3*(a^2+2*b^2)^2*(2*a^2-2*a*b+5*b^2)*(2*a^3-6*a^2*b+3*a*b^2-7*b^3)",
     "4*(a^2-b^2)^2*(a^2+2*b^2)^2*(8*a^4-22*a^3*b+30*a^2*b^2-31*a*b^3+17*b^4)",
     "-24*b*(2*a-b)*(a^2-b^2)*(2*a^2+b^2)*(a^2+2*b^2)^2*(a^2-a*b+b^2)",
     "-4*(a^2-b^2)^2*(2*a^2+b^2)*(a^2+2*b^2)^2*(4*a^2-a*b+b^2)",
     "4*(a+b)^4*(2*a^2+b^2)^2*(a^2+2*b^2)^2"},
};
const char* const kU0[3][3] = {
    {"-(a-b)^2*(a+b)*(2*a^2+b^2)*(a^2+2*b^2)",
     "4*(a-b)^2*(a+b)*(a^2+2*b^2)^2",
     "-(a-b)*(a^2+2*b^2)*(2*a^4+17*a^2*b^2+17*b^4)"},
    {"4*(a-b)^2*(a+b)*(2*a^2+b^2)^2",
     "-8*(a+b)*(4*a^2+a*b+4*b^2)*(a^4+7*a^2*b^2+b^4)",
     "4*(a^2-b^2)*(4*a^5+14*a^4*b+22*a^3*b^2+32*a^2*b^3+19*a*b^4+17*b^5)"},
    {"(a-b)*(2*a^2+b^2)*(17*a^4+17*a^2*b^2+2*b^4)",
     "-4*(a^2-b^2)*(17*a^5+19*a^4*b+32*a^3*b^2+22*a^2*b^3+14*a*b^4+4*b^5)",
     "(a+b)*(34*a^6+76*a^5*b+137*a^4*b^2+154*a^3*b^3+137*a^2*b^4+76*a*b^5+34*b^6)"},
};
const char* const kU1[3][3] = {
    {"0",
     "-12*b*(a-b)^2*(a+b)*(a^2+2*b^2)",
     "12*b*(a-b)*(a^2+2*b^2)^2"},
    {"-12*a*(a-b)^2*(a+b)*(2*a^2+b^2)",
     "48*(a^2+a*b+b^2)*(a^4+7*a^2*b^2+b^4)",
     "-12*(a^2-b^2)*(2*a^4+6*a^3*b+11*a^2*b^2+9*a*b^3+8*b^4)"},
    {"-12*a*(a-b)*(2*a^2+b^2)^2",
     "12*(a^2-b^2)*(8*a^4+9*a^3*b+11*a^2*b^2+6*a*b^3+2*b^4)",
     "-12*(a+b)^2*(a^2+a*b+b^2)*(4*a^2+a*b+4*b^2)"},
};
const char* const kE = "6*a*b*(a-b)^2*(a+b)*(2*a^2+b^2)*(a^2+2*b^2)";
const char* const kD[6] = {"(a+2*c)",
    "(b+2*c)",
    "(5*a^3+7*a^2*c+4*a*b^2+2*b^2*c)",
    "(4*a^2*b+2*a^2*c+5*b^3+7*b^2*c)",
    "(17*a^2*(a^2+b^2)+12*a*(2*a^2+b^2)*c+2*b^4)",
    "(2*a^4+12*b*(a^2+2*b^2)*c+17*b^2*(a^2+b^2))"};

// k (x + y sqrt 2)
std::pair<mpz_class, mpz_class> z2(long k, long x, long y) { return {mpz_class(k * x), mpz_class(k * y)}; }

void fill_pq(ScalingTables& tab) {
    tab.p[1].c = {z2(-6, 816, 577), z2(-6, 915, 647), z2(-3, 618, 437), z2(-2, 99, 70)};
    tab.p[2].c = {z2(-24, 222, 157), z2(-12, 126, 89), z2(12, 27, 19), z2(4, 24, 17)};
    tab.p[3].c = {z2(-108, 4, 3), z2(-180, 3, 2), z2(-54, 4, 3), z2(-12, 3, 2)};
    tab.p[4].c = {z2(-24, -6, 5), z2(12, -6, 1), z2(-12, 3, 1), z2(-4, 0, 1)};
    tab.p[5].c = {z2(-6, -24, 17), z2(6, -27, 19), z2(-3, -18, 13), z2(2, -3, 2)};
    tab.q[0].c = {z2(1, 6, 0), z2(3, 0, 1), z2(1, 1, 0)};
    tab.q[1].c = {z2(-24, -4, 3), z2(-12, -3, 2), z2(2, -4, 3)};
    tab.q[2].c = {z2(6, -17, 12), z2(-3, -24, 17), z2(1, -17, 12)};
}

const char* const kETilde = "6*a*b*(a+b)*(2*a^2+b^2)*(a^2+2*b^2)";
const char* const kEOverB = "6*a*(a-b)^2*(a+b)*(2*a^2+b^2)*(a^2+2*b^2)";

QcPoly product(const std::vector<QcPoly>& fs) {
    QcPoly r{BiPoly::constant(1)};
    for (const auto& f : fs) r = r * f;
    return r;
}

nlohmann::json poly_json(const BiPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, v] : p.terms()) {
        if (v.get_den() != 1) throw DomainError("table coefficient is not an integer");
        const mpz_class& n = v.get_num();
        if (n.fits_slong_p()) arr.push_back({k.first, k.second, n.get_si()});
        else arr.push_back({k.first, k.second, n.get_str()});
    }
    return arr;
}

BiPoly poly_from_json(const nlohmann::json& arr) {
    BiPoly p;
    for (const auto& e : arr) {
        mpq_class v = e[2].is_string() ? mpq_class(e[2].get<std::string>()) : mpq_class(e[2].get<long>());
        p.add_to(e[0].get<int>(), e[1].get<int>(), v);
    }
    return p;
}

nlohmann::json sqrt2poly_json(const Sqrt2Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [x, y] : p.c) arr.push_back({x.get_si(), y.get_si()});
    return arr;
}

Sqrt2Poly sqrt2poly_from_json(const nlohmann::json& arr) {
    Sqrt2Poly p;
    for (const auto& e : arr) p.c.emplace_back(mpz_class(e[0].get<long>()), mpz_class(e[1].get<long>()));
    return p;
}

}  // namespace

BigReal Sqrt2Poly::eval(const BigReal& r) const { return eval_series(r, BigReal(0)); }

ScalingTables ScalingTables::build() {
    ScalingTables tab;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            tab.t_text[0][i][j] = kT0[i][j];
            tab.t_text[1][i][j] = kT1[i][j];
            tab.t[i][j] = QcPoly{parse_bipoly(kT0[i][j]), parse_bipoly(kT1[i][j])};
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            tab.u_text[0][i][j] = kU0[i][j];
            tab.u_text[1][i][j] = kU1[i][j];
            tab.u[i][j] = QcPoly{parse_bipoly(kU0[i][j]), parse_bipoly(kU1[i][j])};
        }
    tab.E_text = kE;
    tab.E = parse_bipoly(kE);
    tab.E_tilde = parse_bipoly(kETilde);
    tab.E_over_b = parse_bipoly(kEOverB);
    for (const char* d : kD) {
        tab.D_text.emplace_back(d);
        tab.D_factors.push_back(parse_qc(d));
    }
    tab.D = product(tab.D_factors);
    fill_pq(tab);
    return tab;
}

const ScalingTables& ScalingTables::instance() {
    static const ScalingTables tab = build();
    return tab;
}

std::vector<std::string> table_identity_failures(const ScalingTables& tab) {
    std::vector<std::string> bad;
    auto name = [](const char* what, int i, int j) {
        return std::string(what) + "_" + std::to_string(i) + "," + std::to_string(j);
    };
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (!(tab.t[i][j] == tab.t[j][i].swapped())) bad.push_back(name("t symmetry", i, j));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!(tab.u[i][j] == tab.u[j][i].swapped())) bad.push_back(name("u symmetry", i, j));
    if (!tab.t[2][2].is_zero()) bad.push_back("t_2,2 nonzero");
    if (!tab.u[0][0].v.is_zero()) bad.push_back("u_0,0^(1) nonzero");
    BiPoly amb = BiPoly::monomial(1, 1, 0) - BiPoly::monomial(1, 0, 1);
    if (!(tab.E == amb * amb * tab.E_tilde)) bad.push_back("E != (a-b)^2 E_tilde");
    if (!(tab.E == BiPoly::monomial(1, 0, 1) * tab.E_over_b)) bad.push_back("E != b E_over_b");
    for (int k = 1; k <= 5; ++k)
        if (tab.E.eval(k, k) != 0) bad.push_back("E(a,a) != 0");
    if (!(tab.E == tab.E.swapped())) bad.push_back("E not symmetric");
    if (!(tab.D == tab.D.swapped())) bad.push_back("D not symmetric");
    return bad;
}

nlohmann::json tables_to_json(const ScalingTables& tab) {
    nlohmann::json doc;
    auto entries = [](const auto& polys, const auto& text, int n) {
        nlohmann::json arr = nlohmann::json::array();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int comp = 0; comp < 2; ++comp) {
                    const BiPoly& p = comp == 0 ? polys[i][j].u : polys[i][j].v;
                    arr.push_back({{"i", i}, {"j", j}, {"component", comp}, {"factored", text[comp][i][j]},
                                   {"coeffs", poly_json(p)}});
                }
        return arr;
    };
    doc["t"] = entries(tab.t, tab.t_text, 5);
    doc["u"] = entries(tab.u, tab.u_text, 3);
    doc["E"] = {{"factored", tab.E_text}, {"coeffs", poly_json(tab.E)}};
    nlohmann::json d = nlohmann::json::array();
    for (size_t k = 0; k < tab.D_factors.size(); ++k)
        d.push_back({{"factored", tab.D_text[k]},
                     {"coeffs", poly_json(tab.D_factors[k].u)},
                     {"c_coeffs", poly_json(tab.D_factors[k].v)}});
    doc["D"] = d;
    nlohmann::json p = nlohmann::json::object(), q = nlohmann::json::object();
    for (int m = 1; m <= 5; ++m) p[std::to_string(m)] = sqrt2poly_json(tab.p[m]);
    for (int m = 0; m <= 2; ++m) q[std::to_string(m)] = sqrt2poly_json(tab.q[m]);
    doc["pq"] = {{"p", p}, {"q", q}, {"layout", "coefficients of r^k as [x, y] for x + y*sqrt(2)"}};
    return doc;
}

ScalingTables tables_from_json(const nlohmann::json& doc) {
    ScalingTables tab;
    for (const auto& e : doc.at("t")) {
        int i = e.at("i"), j = e.at("j"), comp = e.at("component");
        BiPoly p = poly_from_json(e.at("coeffs"));
        (comp == 0 ? tab.t[i][j].u : tab.t[i][j].v) = p;
        tab.t_text[comp][i][j] = e.at("factored").get<std::string>();
    }
    for (const auto& e : doc.at("u")) {
        int i = e.at("i"), j = e.at("j"), comp = e.at("component");
        BiPoly p = poly_from_json(e.at("coeffs"));
        (comp == 0 ? tab.u[i][j].u : tab.u[i][j].v) = p;
        tab.u_text[comp][i][j] = e.at("factored").get<std::string>();
    }
    tab.E_text = doc.at("E").at("factored").get<std::string>();
    tab.E = poly_from_json(doc.at("E").at("coeffs"));
    tab.E_tilde = parse_bipoly(kETilde);
    tab.E_over_b = parse_bipoly(kEOverB);
    for (const auto& d : doc.at("D")) {
        tab.D_text.push_back(d.at("factored").get<std::string>());
        tab.D_factors.push_back(QcPoly{poly_from_json(d.at("coeffs")), poly_from_json(d.at("c_coeffs"))});
    }
    tab.D = product(tab.D_factors);
    for (int m = 1; m <= 5; ++m) tab.p[m] = sqrt2poly_from_json(doc.at("pq").at("p").at(std::to_string(m)));
    for (int m = 0; m <= 2; ++m) tab.q[m] = sqrt2poly_from_json(doc.at("pq").at("q").at(std::to_string(m)));
    return tab;
}

}  // namespace vcell
