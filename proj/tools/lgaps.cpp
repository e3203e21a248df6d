// Command-line front end: character tables, L-value evaluation, zero scans,
// the eps-Laurent oracle, kappa-coefficient evaluation/root solving, Euler
// products and the weight-function checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include "lgaps/characters.hpp"
#include "lgaps/kappacoeffs.hpp"
#include "lgaps/lfunc.hpp"
#include "lgaps/localconst.hpp"
#include "lgaps/shiftframe.hpp"
#include "lgaps/weights.hpp"
#include "lgaps/zeros.hpp"

using nlohmann::json;
using namespace lgaps;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitSolver = 4;

struct Options {
    long prec_bits = 128;
    long prime_limit = 100000;
    long q = 0;
    long chi_index = -1;
    double t_min = 0, t_max = 0, step = 0, t = 0, big_t = 0;
    double kappa = 0, u = 0.01, eps = 0.5, tol = 1e-12;
    long order = 12;
    long x_max = 1000000;
    long samples = 10000;
    long seed = 1;
    long threads = 1;
    int which = 0;
    int dir_i = 3, dir_j = 4;
    std::string s_arg;
    std::string format = "json";
    bool only_even = false, only_primitive = false;
};

void emit(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // csv: flat array of objects expected under "rows"
    const json& rows = j.contains("rows") ? j["rows"] : j;
    if (!rows.is_array() || rows.empty()) return;
    bool first = true;
    for (auto& [key, _] : rows[0].items()) {
        std::cout << (first ? "" : ",") << key;
        first = false;
    }
    std::cout << "\n";
    for (const auto& row : rows) {
        first = true;
        for (auto& [_, value] : row.items()) {
            std::cout << (first ? "" : ",");
            if (value.is_string())
                std::cout << value.get<std::string>();
            else
                std::cout << value.dump();
            first = false;
        }
        std::cout << "\n";
    }
}

json characters_cmd(const Options& o) {
    if (o.q < 1) throw std::invalid_argument("characters: --q must be >= 1");
    json rows = json::array();
    for (const auto& chi : enumerate_characters(o.q)) {
        if (o.only_even && !chi.is_even()) continue;
        if (o.only_primitive && !chi.is_primitive()) continue;
        Real norm_sq = norm(gauss_sum(chi).value);
        rows.push_back({{"q", chi.modulus()},
                        {"index", chi.index()},
                        {"conductor", chi.conductor()},
                        {"even", chi.is_even()},
                        {"primitive", chi.is_primitive()},
                        {"real", chi.is_real()},
                        {"order", chi.order()},
                        {"gauss_norm_sq", norm_sq.str()}});
    }
    return {{"schema", "lgaps.characters.v1"}, {"rows", rows}};
}

DirichletCharacter pick_character(const Options& o) {
    if (o.q < 1) throw std::invalid_argument("--q must be >= 1");
    auto all = enumerate_characters(o.q);
    long idx = o.chi_index;
    if (idx < 0) {
        // default: first even primitive character
        for (const auto& chi : all)
            if (chi.is_primitive() && chi.is_even() && !chi.is_principal()) return chi;
        if (o.q == 1) return all[0];
        throw std::invalid_argument("no even primitive character mod q; pass --chi-index");
    }
    if (idx >= static_cast<long>(all.size()))
        throw std::invalid_argument("--chi-index out of range");
    return all[static_cast<size_t>(idx)];
}

json lfunc_cmd(const Options& o) {
    PrecisionConfig cfg;
    cfg.bits = o.prec_bits;
    DirichletCharacter chi = pick_character(o);
    json out{{"schema", "lgaps.lfunc.v1"}, {"q", chi.modulus()}, {"chi_index", chi.index()}};
    if (!o.s_arg.empty()) {
        auto comma = o.s_arg.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--s expects re,im");
        Cplx s(Real(o.s_arg.substr(0, comma)), Real(o.s_arg.substr(comma + 1)));
        Cplx v = dirichlet_l(s, chi, cfg);
        out["l_value"] = {{"re", v.re.str()}, {"im", v.im.str()}};
        if (chi.is_primitive() && !chi.is_principal())
            out["fe_residual"] = fe_residual(s, chi, cfg).str();
    } else {
        WEvaluator w(chi, cfg);
        out["w_value"] = w(Real(o.t)).str();
        out["t"] = o.t;
    }
    out["error_estimate"] = cfg.tolerance().str();
    return out;
}

json zeros_scan_cmd(const Options& o, bool gaps) {
    PrecisionConfig cfg;
    cfg.bits = o.prec_bits;
    WEvaluator w(pick_character(o), cfg);
    ZeroList z = scan_zeros(w, Real(o.t_min), Real(o.t_max), Real(o.step));
    json rows = json::array();
    auto rep = gap_report(z);
    for (size_t i = 0; i < z.ordinates.size(); ++i) {
        json row{{"ordinate", z.ordinates[i].str()}};
        if (rep && i > 0) {
            row["gap"] = rep->gaps[i - 1];
            row["normalized_gap"] = rep->normalized[i - 1];
        } else {
            row["gap"] = nullptr;
            row["normalized_gap"] = nullptr;
        }
        rows.push_back(row);
    }
    json out{{"schema", "lgaps.zeros.v1"},
             {"q", z.q},
             {"chi_index", z.chi_index},
             {"count", z.ordinates.size()},
             {"rows", rows}};
    if (gaps && rep) {
        out["max_normalized_gap"] = rep->max_normalized;
        out["min_normalized_gap"] = rep->min_normalized;
    }
    return out;
}

json zeros_count_cmd(const Options& o) {
    PrecisionConfig cfg;
    cfg.bits = o.prec_bits;
    CountCheck c = count_vs_formula(pick_character(o), o.big_t, cfg);
    return {{"schema", "lgaps.zerocount.v1"}, {"q", o.q},          {"T", o.big_t},
            {"empirical", c.empirical},      {"predicted", c.predicted},
            {"residual", c.residual},        {"envelope", c.envelope},
            {"ok", c.ok}};
}

json oracle_cmd(const Options& o, bool deriv) {
    EngineConfig cfg;
    cfg.order = static_cast<int>(o.order);
    cfg.bits = o.prec_bits >= 128 ? o.prec_bits : 256;
    EpsSumResult r = deriv ? r_sum_deriv_eps0(Real(o.kappa), o.dir_i, o.dir_j, cfg)
                           : r_sum_eps0(Real(o.kappa), cfg);
    json out{{"schema", "lgaps.oracle.v1"},
             {"kappa", o.kappa},
             {"eps0", r.value.str()},
             {"max_negative_residual", r.max_negative.str()},
             {"imag_residual", r.imag_part.str()}};
    if (deriv) {
        out["dir_i"] = o.dir_i;
        out["dir_j"] = o.dir_j;
    }
    return out;
}

json coeffs_eval_cmd(const Options& o) {
    int which = c_alias(o.which);
    Real v = macl_eval(c_closed(which), Real(o.kappa));
    return {{"schema", "lgaps.coeffs.v1"},
            {"which", o.which},
            {"alias", which},
            {"kappa", o.kappa},
            {"regime", o.kappa < 0.5 ? "taylor" : "direct"},
            {"value", v.str()}};
}

json coeffs_solve_cmd(const Options& o) {
    KappaSolveResult r = solve_kappa(Real(o.tol));
    return {{"schema", "lgaps.solve.v1"},
            {"kappa_star", r.kappa_star.str()},
            {"ratio_to_2pi", r.ratio_to_2pi.str()},
            {"gap_multiplier", r.gap_multiplier.str()}};
}

json constants_cmd(const Options& o, const std::string& kind) {
    if (kind == "slope") {
        SlopeFit f = slope_fit(o.x_max);
        double max_resid = 0;
        for (double r : f.residuals) max_resid = std::max(max_resid, std::abs(r));
        return {{"schema", "lgaps.slope.v1"},  {"x_max", o.x_max},
                {"slope", f.slope},            {"intercept", f.intercept},
                {"h2_over_t", f.h2_over_t},    {"max_abs_residual", max_resid}};
    }
    EulerProductEstimate e = kind == "a3" ? a3(o.prime_limit, o.prec_bits)
                                          : a3_L(o.prime_limit, o.prec_bits);
    return {{"schema", "lgaps.euler.v1"},
            {"model", e.model},
            {"prime_limit", e.prime_cutoff},
            {"value", e.value.str()},
            {"tail_bound", e.tail_bound.str()}};
}

json weights_cmd(const Options& o) {
    WeightParams p;
    p.u = Real(o.u);
    p.T = Real(o.big_t > 0 ? o.big_t : 10.0);
    p.eps = Real(o.eps);
    std::mt19937_64 rng(static_cast<unsigned long>(o.seed));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double T = p.T.to_double();

    bool psi1_ok = true, psi2_ok = true, phi1_ok = true, phi2_ok = true;
    double worst_psi1 = 1e300, worst_psi2 = 1e300, worst_phi1 = 1e300, worst_phi2 = 1e300;
    for (long i = 0; i < o.samples; ++i) {
        double t = 0.5 + 2.0 * unit(rng);  // covers [0.5, 2.5] around the support
        double ind = (t > 1.25 && t <= 1.75) ? 1.0 : 0.0;
        double v1 = psi1(Real(t), p.u).to_double();
        double v2 = psi2(Real(t), p.u).to_double();
        if (v1 > ind) psi1_ok = false;
        if (v2 < ind) psi2_ok = false;
        worst_psi1 = std::min(worst_psi1, ind - v1);
        worst_psi2 = std::min(worst_psi2, v2 - ind);

        double z = -3.0 * T + 9.0 * T * unit(rng);
        double eps = p.eps.to_double();
        double ind1 = (z >= T + eps && z <= 2 * T - eps) ? 1.0 : 0.0;
        double ind2 = (z >= T && z <= 2 * T) ? 1.0 : 0.0;
        double f1 = phi1(Real(z), p).to_double();
        double f2 = phi2(Real(z), p).to_double();
        if (f1 > ind1) phi1_ok = false;
        if (f2 < ind2) phi2_ok = false;
        worst_phi1 = std::min(worst_phi1, ind1 - f1);
        worst_phi2 = std::min(worst_phi2, f2 - ind2);
    }
    auto n = reasonableness_constants(p);
    return {{"schema", "lgaps.weights.v1"},
            {"u", o.u},
            {"eps", o.eps},
            {"T", T},
            {"samples", o.samples},
            {"seed", o.seed},
            {"psi1_below_indicator", psi1_ok},
            {"psi2_above_indicator", psi2_ok},
            {"phi1_below_indicator", phi1_ok},
            {"phi2_above_indicator", phi2_ok},
            {"worst_margin_psi1", worst_psi1},
            {"worst_margin_psi2", worst_psi2},
            {"worst_margin_phi2", worst_phi2},
            {"n1", n.n1.str()},
            {"n2", n.n2.str()},
            {"n3", n.n3.str()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"critical-line zero gap toolkit"};
    app.require_subcommand(1);
    Options o;

    app.add_option("--prec-bits", o.prec_bits, "working precision in bits")->capture_default_str();
    app.add_option("--format", o.format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", o.threads, "worker count (accepted; work is single-threaded)")
        ->group("");
    app.add_option("--seed", o.seed, "random seed for sampled checks")->capture_default_str();

    auto* chars = app.add_subcommand("characters", "character table mod q");
    chars->add_option("--q", o.q)->required();
    chars->add_flag("--even", o.only_even);
    chars->add_flag("--primitive", o.only_primitive);

    auto* lf = app.add_subcommand("lfunc", "L-function and W evaluation");
    auto* lfe = lf->add_subcommand("eval", "evaluate at a point");
    lfe->add_option("--q", o.q)->required();
    lfe->add_option("--chi-index", o.chi_index);
    lfe->add_option("--s", o.s_arg, "complex point re,im");
    lfe->add_option("--t", o.t, "real ordinate for W(t)");

    auto* zr = app.add_subcommand("zeros", "zero scans and statistics");
    auto* zscan = zr->add_subcommand("scan", "scan for zeros of W");
    auto* zgaps = zr->add_subcommand("gaps", "scan and report gap statistics");
    for (auto* sc : {zscan, zgaps}) {
        sc->add_option("--q", o.q)->required();
        sc->add_option("--chi-index", o.chi_index);
        sc->add_option("--t-min", o.t_min)->required();
        sc->add_option("--t-max", o.t_max)->required();
        sc->add_option("--step", o.step);
    }
    auto* zcount = zr->add_subcommand("count-check", "empirical count vs the counting formula");
    zcount->add_option("--q", o.q)->required();
    zcount->add_option("--chi-index", o.chi_index);
    zcount->add_option("--T", o.big_t)->required();

    auto* orc = app.add_subcommand("oracle", "eps-Laurent engine");
    auto* oc0 = orc->add_subcommand("c0", "eps^0 coefficient of the 20-term sum");
    oc0->add_option("--kappa", o.kappa)->required();
    oc0->add_option("--order", o.order);
    auto* oci = orc->add_subcommand("ci", "mixed-derivative eps^0 coefficient");
    oci->add_option("--kappa", o.kappa)->required();
    oci->add_option("--i", o.dir_i)->required();
    oci->add_option("--j", o.dir_j)->required();
    oci->add_option("--order", o.order);

    auto* cf = app.add_subcommand("coeffs", "closed-form kappa-coefficients");
    auto* cfe = cf->add_subcommand("eval", "evaluate one coefficient");
    cfe->add_option("--which", o.which)->check(CLI::Range(0, 9))->required();
    cfe->add_option("--kappa", o.kappa)->required();
    auto* cfs = cf->add_subcommand("solve", "root of the gap inequality");
    cfs->add_option("--tol", o.tol);

    auto* cn = app.add_subcommand("constants", "Euler products and slope checks");
    auto* ca3 = cn->add_subcommand("a3");
    auto* ca3l = cn->add_subcommand("a3l");
    for (auto* sc : {ca3, ca3l}) sc->add_option("--prime-limit", o.prime_limit);
    auto* cslope = cn->add_subcommand("slope");
    cslope->add_option("--x-max", o.x_max);

    auto* wt = app.add_subcommand("weights", "weight-function sandwich checks");
    auto* wtc = wt->add_subcommand("check");
    wtc->add_option("--u", o.u);
    wtc->add_option("--eps", o.eps);
    wtc->add_option("--T", o.big_t);
    wtc->add_option("--samples", o.samples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    if (o.prec_bits < 32 || o.prec_bits > 8192) {
        std::cerr << "validation error: --prec-bits must be in [32, 8192]\n";
        return kExitValidation;
    }
    Real::set_working_bits(o.prec_bits);

    try {
        json out;
        if (chars->parsed()) out = characters_cmd(o);
        else if (lfe->parsed()) out = lfunc_cmd(o);
        else if (zscan->parsed()) out = zeros_scan_cmd(o, false);
        else if (zgaps->parsed()) out = zeros_scan_cmd(o, true);
        else if (zcount->parsed()) out = zeros_count_cmd(o);
        else if (oc0->parsed()) out = oracle_cmd(o, false);
        else if (oci->parsed()) out = oracle_cmd(o, true);
        else if (cfe->parsed()) out = coeffs_eval_cmd(o);
        else if (cfs->parsed()) out = coeffs_solve_cmd(o);
        else if (ca3->parsed()) out = constants_cmd(o, "a3");
        else if (ca3l->parsed()) out = constants_cmd(o, "a3l");
        else if (cslope->parsed()) out = constants_cmd(o, "slope");
        else if (wtc->parsed()) out = weights_cmd(o);
        else {
            std::cerr << "missing subcommand\n";
            return kExitValidation;
        }
        emit(out, o.format);
        return kExitOk;
    } catch (const SolverError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolver;
    } catch (const PoleError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const PrecisionError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
}
