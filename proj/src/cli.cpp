#include "vcell/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "vcell/asym_law.hpp"
#include "vcell/cell_law.hpp"
#include "vcell/errors.hpp"
#include "vcell/local_limit.hpp"
#include "vcell/map_gf.hpp"
#include "vcell/scaling_fn.hpp"

namespace vcell::cli {

namespace {

using nlohmann::json;

// ---- number formatting and grids ----

// Exact value of a decimal literal such as "-1.25e-3".
mpq_class parse_decimal(const std::string& text) {
    std::string s = text;
    mpz_class scale_exp = 0;
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::stol(s.substr(epos + 1));
        s = s.substr(0, epos);
    }
    bool neg = !s.empty() && s[0] == '-';
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s = s.substr(1);
    auto dot = s.find('.');
    std::string digits = s;
    if (dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        exp10 -= static_cast<long>(s.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw CLI::ValidationError("not a decimal number: " + text);
    mpq_class q{mpz_class(digits, 10)};
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    if (exp10 >= 0)
        q *= p10;
    else
        q /= p10;
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

// "lo:hi:step", inclusive of hi up to rounding of the count.
std::vector<mpq_class> parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw CLI::ValidationError("grid must be lo:hi:step, got " + spec);
    mpq_class lo = parse_decimal(parts[0]), hi = parse_decimal(parts[1]), step = parse_decimal(parts[2]);
    if (step <= 0 || hi < lo) throw CLI::ValidationError("grid needs step > 0 and hi >= lo: " + spec);
    std::vector<mpq_class> out;
    for (mpq_class x = lo; x <= hi; x += step) {
        out.push_back(x);
        if (out.size() > 1000000) throw CLI::ValidationError("grid too large: " + spec);
    }
    return out;
}

// "lo:hi:n" with n points evenly spaced in log10.
std::vector<BigReal> parse_log_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw CLI::ValidationError("log grid must be lo:hi:count, got " + spec);
    BigReal lo(parse_decimal(parts[0])), hi(parse_decimal(parts[1]));
    int n = std::stoi(parts[2]);
    if (!(lo.sign() > 0) || hi < lo || n < 1) throw CLI::ValidationError("log grid needs 0 < lo <= hi, count >= 1");
    std::vector<BigReal> out;
    for (int k = 0; k < n; ++k) {
        BigReal t = n == 1 ? BigReal(0) : BigReal(k) / static_cast<long>(n - 1);
        out.push_back(lo * pow(hi / lo, t));
    }
    return out;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    json meta = json::object();
};

void write_table(const Table& t, const std::string& format, const json& config, std::ostream& os) {
    json meta = config;
    for (auto& [k, v] : t.meta.items()) meta[k] = v;
    if (format == "json") {
        os << json{{"config", meta}, {"columns", t.columns}, {"rows", t.rows}}.dump(2) << "\n";
        return;
    }
    os << "# " << meta.dump() << "\n";
    for (size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& r : t.rows) {
        for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << "\n";
    }
}

struct Common {
    int precision = 0;
    int digits = 20;
    std::string format = "csv";
    std::string output;
};

std::string fmt(const BigReal& x, int digits) { return x.str(digits); }

std::string q_str(const mpq_class& q) {
    // grid points print as decimals when they are
    BigReal x(q);
    return x.str(15);
}

// ---- verify ----

struct Checker {
    std::vector<CheckResult> results;

    void exact(const std::string& name, const std::string& anchor, bool ok, const std::string& computed,
               const std::string& reference) {
        results.push_back({name, anchor, computed, reference, "exact", ok ? "0" : "n/a", ok ? "0" : "n/a", true, ok});
    }

    void close(const std::string& name, const std::string& anchor, const BigReal& computed, const BigReal& reference,
               const BigReal& rel_tol) {
        BigReal ae = abs(computed - reference);
        BigReal re = reference.is_zero() ? ae : ae / abs(reference);
        bool ok = computed.is_finite() && re <= rel_tol;
        results.push_back({name, anchor, computed.str(25), reference.str(25), rel_tol.str(3) + " rel", ae.str(4),
                           re.str(4), false, ok});
    }

    void absolute(const std::string& name, const std::string& anchor, const BigReal& computed,
                  const BigReal& reference, const BigReal& abs_tol) {
        BigReal ae = abs(computed - reference);
        BigReal re = reference.is_zero() ? ae : ae / abs(reference);
        bool ok = computed.is_finite() && ae <= abs_tol;
        results.push_back({name, anchor, computed.str(25), reference.str(25), abs_tol.str(3) + " abs", ae.str(4),
                           re.str(4), false, ok});
    }

    void guarded(const std::string& name, const std::string& anchor, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            results.push_back({name, anchor, std::string("error: ") + e.what(), "", "", "", "", false, false});
        }
    }
};

BigReal dec(const char* s) { return BigReal(std::string_view(s)); }

LaplaceTransform tree_E_transform() {
    return [](const BigComplex& s) { return tree_E(s); };
}

}  // namespace

std::vector<CheckResult> run_checks(bool quick) {
    PrecisionScope ps(256);
    Checker c;

    c.guarded("diagonal_identity", "recursive X on the diagonal equals the closed form", [&] {
        int top = quick ? 4 : 8, order2 = quick ? 16 : 40;
        MapGFContext ctx(order2);
        int bad = 0;
        for (int s = 0; s <= top; ++s)
            for (int t = 0; t <= top; ++t)
                if (!(ctx.X(s, t).diagonal() == X_diag(s, t, order2 / 2))) ++bad;
        c.exact("diagonal_identity", "recursive X on the diagonal equals the closed form", bad == 0,
                std::to_string(bad) + " mismatches", "0 mismatches");
    });

    c.guarded("epsilon_expansion", "eps^4 and eps^6 terms of F(s, G(a,eps), G(a,eps))", [&] {
        int bad = 0;
        for (int s = 1; s <= 3; ++s)
            for (const mpq_class& a : {mpq_class(1), mpq_class(3, 2), mpq_class(2, 7)}) {
                auto e = F_diag_eps(s, a, 8);
                mpq_class a4 = a * a * a * a, a6 = a4 * a * a;
                if (e.series[4] != -(2 * s + 1) * a4 / 60) ++bad;
                if (e.series[6] != (2 * s + 1) * (10 * s * s + 10 * s + 1) * a6 / 1890) ++bad;
            }
        c.exact("epsilon_expansion", "eps^4 and eps^6 terms of F(s, G(a,eps), G(a,eps))", bad == 0,
                std::to_string(bad) + " mismatches", "0 mismatches");
    });

    for (int s = 1; s <= (quick ? 1 : 3); ++s) {
        std::string name = "profile_constant_s" + std::to_string(s);
        c.guarded(name, "large-N distance profile constant", [&] {
            Extrapolation e = estimate_profile_constant(s, quick ? 120 : 200);
            c.close(name, "large-N distance profile constant", e.value, BigReal(profile_constant(s).f3), dec("0.02"));
        });
    }

    c.guarded("scaling_tables", "coefficient table identities", [&] {
        auto f = table_identity_failures(ScalingTables::instance());
        c.exact("scaling_tables", "coefficient table identities", f.empty(),
                f.empty() ? "all hold" : f.front(), "all hold");
    });

    c.guarded("scaling_diagonal", "F(S,a,a) against the diagonal closed form", [&] {
        BigReal S = dec("0.7"), a = dec("1.3");
        c.close("scaling_diagonal", "F(S,a,a) against the diagonal closed form", eval_F(S, a, a), eval_F_diag(S, a),
                dec("1e-30"));
    });
    c.guarded("scaling_b0", "F(S,a,0) against the p/q closed form", [&] {
        BigReal S = dec("0.7"), a = dec("1.3");
        c.close("scaling_b0", "F(S,a,0) against the p/q closed form", eval_F(S, a, 0), eval_F_b0(S, a), dec("1e-30"));
    });
    c.guarded("s3_coefficient_tau0", "(7/16)[S^3] F(S, sqrt6, 0) = 1/2", [&] {
        auto k = extract_phi_coeff(3, 0);
        c.close("s3_coefficient_tau0", "(7/16)[S^3] F(S, sqrt6, 0) = 1/2", k.value * 7L / 16L, BigReal(1) / 2L,
                dec("1e-30"));
    });
    for (const char* sig : quick ? std::vector<const char*>{"1"} : std::vector<const char*>{"0.25", "1", "4"}) {
        std::string name = std::string("scaling_correspondence_sigma_") + sig;
        c.guarded(name, "E(sigma) = (7/8)[S^3] F(S, sqrt6, sqrt6 sigma^{1/4}/S)", [&] {
            BigReal s = dec(sig);
            auto k = extract_phi_coeff(3, sqrt(BigReal(6)) * root(s, 4));
            c.close(name, "E(sigma) = (7/8)[S^3] F(S, sqrt6, sqrt6 sigma^{1/4}/S)", E_sigma(s), k.value * 7L / 8L,
                    dec("1e-20"));
        });
    }

    c.guarded("small_sigma_series", "small-sigma expansion of E", [&] {
        auto e = E_series_in_r(4);
        bool ok = e[0] == Surd(1) && e[1] == Surd(0, 0, mpq_class(-665, 1024), 0) && e[2].is_zero() &&
                  e[3] == Surd(0, 0, mpq_class(49, 2304), 0) && e[4] == Surd(mpq_class(63, 80), 0, 0, 0);
        c.exact("small_sigma_series", "small-sigma expansion of E", ok,
                "[" + e[1].to_string() + "; " + e[3].to_string() + "; " + e[4].to_string() + "]",
                "[-665 sqrt3/1024; 49/(768 sqrt3); 63/80]");
    });
    if (!quick) {
        c.guarded("small_sigma_fit", "fitted sigma^{1/4} coefficient", [&] {
            SmallSigmaFit f = small_sigma_fit(dec("1e-12"), dec("1e-8"));
            c.close("small_sigma_fit", "fitted sigma^{1/4} coefficient", f.c1,
                    -BigReal(665) * sqrt(BigReal(3)) / 1024L, dec("1e-3"));
        });
    }
    c.guarded("large_sigma_equivalent", "E(sigma) e^{sqrt6 sigma^{1/4}} -> (9/2)(3 sqrt2 - 4)", [&] {
        c.close("large_sigma_equivalent", "E(sigma) e^{sqrt6 sigma^{1/4}} -> (9/2)(3 sqrt2 - 4), sigma = 1e28",
                E_large_sigma_ratio(dec("1e28")), BigReal(1), dec("1e-6"));
    });

    {
        PrecisionScope lp(quick ? 192 : 256);
        BigReal g = BigReal(162) / sqrt(pi());
        for (int mu : {0, 1}) {
            std::string m = std::to_string(mu);
            c.guarded("contour_a6_mu" + m, "contour integral of a^6", [&] {
                c.close("contour_a6_mu" + m, "contour integral of a^6",
                        contour_integral(ContourKind::a6, BigReal(mu)).value, g, dec("1e-10"));
            });
            c.guarded("contour_quartic_mu" + m, "contour integral of (a^4 - 36 mu)^{3/2}", [&] {
                c.close("contour_quartic_mu" + m, "contour integral of (a^4 - 36 mu)^{3/2}",
                        contour_integral(ContourKind::quartic_shift, BigReal(mu)).value, g * exp(BigReal(mu)),
                        dec("1e-10"));
            });
        }
        for (int pw : {0, 4}) {
            std::string name = "contour_vanishing_a" + std::to_string(pw);
            c.guarded(name, "symmetry-vanishing integrands", [&] {
                c.absolute(name, "symmetry-vanishing integrands", contour_monomial(pw, BigReal(1)).value, BigReal(0),
                           dec("1e-20"));
            });
        }
        for (int mu : {-1, 0, 1}) {
            std::string name = "limit_law_mu" + std::to_string(mu);
            c.guarded(name, "(1 + e^mu)/2 limit law", [&] {
                c.absolute(name, "(1 + e^mu)/2 limit law", phi_mgf(BigReal(mu)).value,
                           (BigReal(1) + exp(BigReal(mu))) / 2L, dec("1e-10"));
            });
        }
    }

    {
        PrecisionScope lp(192);
        for (const char* v : {"0.1", "1", "10"}) {
            std::string name = std::string("levy_inversion_V_") + v;
            c.guarded(name, "inverse of e^{-2 sqrt sigma}", [&] {
                BigReal V = dec(v);
                c.close(name, "inverse of e^{-2 sqrt sigma}", ilt(tree_E_transform(), V).value, tree_P(V),
                        dec("1e-8"));
            });
        }
        c.guarded("density_V_1", "density at V = 1 against an independent inversion", [&] {
            c.close("density_V_1", "density at V = 1 against an independent inversion", P_V(BigReal(1)).value,
                    dec("0.12077006533240180066"), dec("1e-12"));
        });
        for (const char* v : {"0.05", "100"}) {
            std::string name = std::string("density_methods_V_") + v;
            c.guarded(name, "Talbot and Euler inversions agree", [&] {
                ILTResult r = P_V(dec(v));
                c.close(name, "Talbot and Euler inversions agree", r.secondary, r.value, dec("1e-6"));
            });
        }
        c.guarded("tail_V_1e4", "large-V tail equivalent", [&] {
            BigReal V = dec("1e4");
            c.close("tail_V_1e4", "large-V tail equivalent", P_V(V).value / asympt_tail(V), BigReal(1), dec("0.1"));
        });
        c.guarded("cdf_1e6", "mass below V = 1e6", [&] {
            BigReal m = P_cdf(dec("1e6")).value;
            bool ok = m >= dec("0.95") && m <= BigReal(1);
            c.results.push_back({"cdf_1e6", "mass below V = 1e6", m.str(12), ">= 0.95", "bound", "", "", false, ok});
        });
        if (!quick) {
            c.guarded("flat_V_1e-3", "small-V flat equivalent", [&] {
                BigReal V = dec("1e-3");
                c.close("flat_V_1e-3", "small-V flat equivalent", P_V(V).value / asympt_flat(V), BigReal(1),
                        dec("0.2"));
            });
            c.guarded("truncated_mean_growth", "truncated first moment grows like V^{3/4}", [&] {
                BigReal a = P_truncated_mean(dec("1e2")).value, b = P_truncated_mean(dec("1e6")).value;
                c.absolute("truncated_mean_growth", "truncated first moment grows like V^{3/4}",
                           log(b / a) / log(dec("1e4")), BigReal(3) / 4L, dec("0.05"));
            });
        }
    }

    c.guarded("pi_identities", "Pi(0) = 1/2, Pi(1) = 1, Pi(-1) = 0, Pi(w) + Pi(-w) = 1", [&] {
        bool ok = Pi(mpq_class(0)) == mpq_class(1, 2) && Pi(mpq_class(1)) == 1 && Pi(mpq_class(-1)) == 0;
        OmegaPoly p = Pi_poly(), r = omega_poly_reflect(p);
        for (size_t k = 0; k < p.size(); ++k) ok = ok && (p[k] + r[k] == (k == 0 ? 1 : 0));
        c.exact("pi_identities", "Pi(0) = 1/2, Pi(1) = 1, Pi(-1) = 0, Pi(w) + Pi(-w) = 1", ok,
                ok ? "all hold" : "violated", "all hold");
    });
    c.guarded("asym_expansion", "S^3 and S terms of the asymmetric expansion", [&] {
        bool ok = true;
        for (const mpq_class& w : {mpq_class(0), mpq_class(1, 3), mpq_class(-5, 7)})
            ok = ok && check_expansion_consistency(6, w).passed();
        c.exact("asym_expansion", "S^3 and S terms of the asymmetric expansion", ok, ok ? "all hold" : "violated",
                "all hold");
    });
    return c.results;
}

json emit_report(const std::vector<CheckResult>& results, const json& config) {
    json checks = json::array();
    int failed = 0;
    for (const auto& r : results) {
        checks.push_back({{"name", r.name},
                          {"anchor", r.anchor},
                          {"computed", r.computed},
                          {"reference", r.reference},
                          {"tolerance", r.tolerance},
                          {"abs_error", r.abs_error},
                          {"rel_error", r.rel_error},
                          {"exact", r.exact},
                          {"passed", r.passed}});
        if (!r.passed) ++failed;
    }
    return {{"config", config},
            {"checks", checks},
            {"total", results.size()},
            {"failed", failed},
            {"status", failed ? "fail" : "pass"}};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Voronoi cell laws of random planar quadrangulations"};
    app.require_subcommand(1);
    app.fallthrough();
    Common com;
    app.add_option("-p,--precision", com.precision, "working precision in bits (default: VCELL_PRECISION_BITS or 256)")
        ->check(CLI::Range(32, 1 << 16));
    app.add_option("--digits", com.digits, "significant digits in floating output")->check(CLI::Range(5, 2000));
    app.add_option("--format", com.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("-o,--output", com.output, "output file (default: stdout)");

    // coeffs
    int c_s = 1, c_order2 = 16;
    auto* coeffs = app.add_subcommand("coeffs", "exact F_{n1,n2}(s) table");
    coeffs->add_option("-s,--s", c_s, "half distance s")->check(CLI::Range(1, 64));
    coeffs->add_option("--order2", c_order2, "doubled total degree")->check(CLI::Range(0, 200));

    // profile
    int p_s = 1, p_nmax = 100, p_order = profile_richardson().order;
    auto* profile = app.add_subcommand("profile", "F_N(s) ratio and its large-N limit");
    profile->add_option("-s,--s", p_s, "half distance s")->check(CLI::Range(1, 64));
    profile->add_option("--nmax", p_nmax, "largest N")->check(CLI::Range(12, 2000));
    profile->add_option("--richardson-order", p_order, "extrapolation order")->check(CLI::Range(1, 200));

    // scaling
    std::string sc_grid = "0.1:3:0.1";
    std::string sc_a = "1", sc_b = "0.5", sc_tau;
    int sc_phi = -1;
    auto* scaling = app.add_subcommand("scaling", "scaling function on an S grid, or a Laurent coefficient");
    scaling->add_option("--S-grid", sc_grid, "lo:hi:step");
    scaling->add_option("-a", sc_a, "a >= 0");
    scaling->add_option("-b", sc_b, "b >= 0");
    scaling->add_option("--phi", sc_phi, "extract [S^{2i-3}] F(S, sqrt6, tau/S) for this i")->check(CLI::Range(0, 6));
    scaling->add_option("--tau", sc_tau, "tau >= 0 for --phi");

    // law
    std::string l_sigma, l_v;
    int l_nodes = 64;
    std::string l_method = "talbot";
    auto* law = app.add_subcommand("law", "E(sigma) and the density P(V)");
    law->add_option("--sigma-grid", l_sigma, "lo:hi:step");
    law->add_option("--v-grid", l_v, "lo:hi:step");
    law->add_option("--nodes", l_nodes, "inversion nodes")->check(CLI::Range(8, 1024));
    law->add_option("--method", l_method, "primary inversion")->check(CLI::IsMember({"talbot", "euler"}));

    // asympt
    std::string as_v = "1e-2:1e5:36";
    auto* asympt = app.add_subcommand("asympt", "P(V) against its small- and large-V equivalents");
    asympt->add_option("--v-log-grid", as_v, "lo:hi:count, log-spaced");
    asympt->add_option("--nodes", l_nodes, "inversion nodes")->check(CLI::Range(8, 1024));

    // asym
    int a_grid = 101;
    auto* asym = app.add_subcommand("asym", "Pi(omega) on [-1, 1]");
    asym->add_option("--grid", a_grid, "number of points")->check(CLI::Range(2, 1000000));

    // tree
    std::string t_v = "0.1:5:0.1";
    auto* tree = app.add_subcommand("tree", "Levy law of bi-pointed trees");
    tree->add_option("--v-grid", t_v, "lo:hi:step");
    tree->add_option("--nodes", l_nodes, "inversion nodes")->check(CLI::Range(8, 1024));

    // verify
    bool quick = false;
    auto* verify = app.add_subcommand("verify", "invariant suite with a JSON report");
    verify->add_flag("--quick", quick, "desk-scale subset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    int bits = com.precision > 0 ? com.precision : default_precision();
    PrecisionScope ps(bits);
    json config = {{"command", app.get_subcommands().front()->get_name()},
                   {"args", args},
                   {"precision_bits", bits},
                   {"digits", com.digits},
                   {"format", com.format}};

    std::ofstream file;
    if (!com.output.empty()) {
        file.open(com.output);
        if (!file) {
            err << "error: cannot open " << com.output << "\n";
            return 1;
        }
    }
    std::ostream& os = com.output.empty() ? out : file;
    const int D = com.digits;

    try {
        Table t;
        if (*coeffs) {
            HalfGridSeries f = F_series(c_s, c_order2);
            t.columns = {"n1_doubled", "n2_doubled", "numerator", "denominator"};
            for (const auto& [k, v] : f.terms())
                t.rows.push_back({std::to_string(k.first), std::to_string(k.second), v.get_num().get_str(),
                                  v.get_den().get_str()});
            t.meta = {{"s", c_s}, {"order2", c_order2}};
        } else if (*profile) {
            std::vector<BigReal> r = profile_ratios(p_s, p_nmax);
            Extrapolation e = estimate_profile_constant(p_s, p_nmax, {p_order, 10});
            mpq_class f3 = profile_constant(p_s).f3;
            t.columns = {"n", "ratio"};
            for (int n = 1; n <= p_nmax; ++n) t.rows.push_back({std::to_string(n), fmt(r[n - 1], D)});
            t.meta = {{"s", p_s},
                      {"nmax", p_nmax},
                      {"richardson_order", p_order},
                      {"extrapolated", fmt(e.value, D)},
                      {"extrapolation_error", fmt(e.error, 6)},
                      {"f3_exact", f3.get_str()}};
        } else if (*scaling) {
            if (sc_phi >= 0) {
                if (sc_tau.empty()) throw DomainError("--phi needs --tau");
                BigReal tau(parse_decimal(sc_tau));
                PhiCoefficient k = extract_phi_coeff(sc_phi, tau, std::max(bits, 256));
                t.columns = {"tau", "coefficient", "error"};
                t.rows.push_back({fmt(tau, D), fmt(k.value, D), fmt(k.discrepancy, 6)});
                t.meta = {{"i", sc_phi}, {"order", 2 * sc_phi - 3}};
            } else {
                BigReal a(parse_decimal(sc_a)), b(parse_decimal(sc_b));
                t.columns = {"s", "f", "path"};
                const char* names[] = {"direct", "near_diagonal", "near_zero"};
                for (const mpq_class& S : parse_grid(sc_grid)) {
                    if (S <= 0) continue;
                    BigReal s(S);
                    t.rows.push_back({q_str(S), fmt(eval_F(s, a, b), D), names[static_cast<int>(select_path(a, b))]});
                }
                t.meta = {{"a", sc_a}, {"b", sc_b}};
            }
        } else if (*law) {
            if (l_sigma.empty() == l_v.empty()) throw DomainError("law needs exactly one of --sigma-grid, --v-grid");
            if (!l_sigma.empty()) {
                t.columns = {"sigma", "e_sigma"};
                for (const mpq_class& s : parse_grid(l_sigma)) {
                    if (s < 0) throw DomainError("sigma must be nonnegative");
                    t.rows.push_back({q_str(s), fmt(E_sigma(BigReal(s)), D)});
                }
            } else {
                ILTConfig cfg;
                cfg.node_count = l_nodes;
                cfg.method = l_method == "talbot" ? ILTMethod::deformed_contour : ILTMethod::accelerated_fourier;
                t.columns = {"v", "p_v", "error"};
                for (const mpq_class& v : parse_grid(l_v)) {
                    if (v <= 0) continue;
                    ILTResult r = P_V(BigReal(v), cfg);
                    t.rows.push_back({q_str(v), fmt(r.value, D), fmt(r.error, 6)});
                }
                t.meta = {{"method", l_method}, {"nodes", l_nodes}, {"cross_check", "talbot vs euler"}};
            }
        } else if (*asympt) {
            ILTConfig cfg;
            cfg.node_count = l_nodes;
            t.columns = {"v", "p_v", "error", "tail", "flat"};
            for (const BigReal& v : parse_log_grid(as_v)) {
                ILTResult r = P_V(v, cfg);
                t.rows.push_back({fmt(v, 12), fmt(r.value, D), fmt(r.error, 6), fmt(asympt_tail(v), D),
                                  fmt(asympt_flat(v), D)});
            }
            t.meta = {{"nodes", l_nodes}};
        } else if (*asym) {
            t.columns = {"omega", "pi", "pi_exact"};
            for (int k = 0; k < a_grid; ++k) {
                mpq_class w(2 * k - (a_grid - 1), a_grid - 1);
                w.canonicalize();
                mpq_class p = Pi(w);
                t.rows.push_back({q_str(w), fmt(BigReal(p), D), p.get_str()});
            }
        } else if (*tree) {
            ILTConfig cfg;
            cfg.node_count = l_nodes;
            t.columns = {"v", "p_tree", "error", "p_tree_exact"};
            for (const mpq_class& v : parse_grid(t_v)) {
                if (v <= 0) continue;
                BigReal V(v);
                ILTResult r = ilt(tree_E_transform(), V, cfg);
                t.rows.push_back({q_str(v), fmt(r.value, D), fmt(r.error, 6), fmt(tree_P(V), D)});
            }
            LevyAsymptotics la = levy_asympt(mpq_class(1, 2));
            t.meta = {{"nodes", l_nodes},
                      {"levy_alpha", "1/2"},
                      {"tail_exponent", la.tail_exponent.get_str()},
                      {"flat_power", la.flat_power.get_str()},
                      {"flat_exponent", la.flat_exponent.get_str()}};
        } else if (*verify) {
            config["quick"] = quick;
            json report = emit_report(run_checks(quick), config);
            os << report.dump(2) << "\n";
            return report["failed"].get<int>() == 0 ? 0 : 1;
        }
        write_table(t, com.format, config, os);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace vcell::cli
