#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "deadcore/balance.hpp"
#include "deadcore/barrier.hpp"
#include "deadcore/grid.hpp"
#include "deadcore/liouville.hpp"
#include "deadcore/model.hpp"
#include "deadcore/radial.hpp"
#include "deadcore/report.hpp"

namespace deadcore::cli {

using nlohmann::json;

namespace {

struct VerbInfo {
    const char* name;
    const char* summary;
    const char* anchors;
};

constexpr VerbInfo kVerbs[] = {
    {"admit", "check the structural constraints of the model row",
     "anchors: parameter table of the model rows (beta in [0,2], m < 3-beta, m+q+beta < 3, "
     "alpha > -1-gamma, LEM alpha bound (4-beta-m)(3-beta-gamma)/(2(3-beta-m)))"},
    {"balance", "exponents and constants of the power profile h = tau s^p",
     "anchors: power balance (h')^(2-beta) h'' = lambda s^alpha h^gamma giving p2 = (4-beta+alpha)/(3-beta-gamma); "
     "gradient balance giving p1 = (4-beta-m)/(3-m-beta-q); selection p = min(p1, p2)"},
    {"barrier", "dead-core barrier, ODE residuals and the supersolution check",
     "anchors: barrier Lambda [|x-x0| - R + (d/Lambda)^(1/p)]_+^p with plateau B_rho(x0), rho = R - T; "
     "radial identity Delta_inf^beta u = |h'|^(2-beta) h''"},
    {"radial", "shooting solve of the radial dead-core problem",
     "anchors: radial ODE (h')^(2-beta) h'' = cH(h,h') + lambda f(s,h), h(0) = h'(0) = 0, h(T) = d; "
     "thickness T = (d/tau)^(1/p) or the implicit LEM equation T^p* chi(T) tau* = d"},
    {"grid", "monotone finite-difference solve on a disc",
     "anchors: Dirichlet problem Delta_inf^beta u - cH - lambda f = h in B_R, u = g on the boundary; "
     "comparison (h1 > h2 gives v >= u); O(n) invariance; local Lipschitz bound"},
    {"liouville", "growth thresholds, witness classification and the plateau law",
     "anchors: limsup u/|x|^p < theta forces u = 0; sharpness witness theta |x|^p; "
     "LEM denominator |x|^p* (1+|x|^2)^(-alpha/(3-beta-gamma)); plateau radius R(1 - Phi^(1/p)) as R grows"},
    {"counterexample", "exponential counterexample and the oscillation criterion",
     "anchors: u = 1 - exp(-|x|^2) with a = 2^(3-beta-m-alpha); lim osc_{B_R} u / R = 0 forces u constant"},
    {"table1", "closed-form exponents and constants over a (beta, gamma) grid",
     "anchors: table of p, tau (or p*, tau*) and the structural assumptions per model row"},
};

json parse_value(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error&) {
        return json(text);
    }
}

double opt_number(const json& cfg, const char* key, double fallback) {
    if (!cfg.contains(key)) return fallback;
    const auto& v = cfg.at(key);
    if (!v.is_number()) throw Error(ErrorCode::InvalidInput, std::string("option '") + key + "' must be a number");
    return v.get<double>();
}

std::vector<double> opt_list(const json& cfg, const char* key, std::vector<double> fallback) {
    if (!cfg.contains(key)) return fallback;
    const auto& v = cfg.at(key);
    if (!v.is_array()) throw Error(ErrorCode::InvalidInput, std::string("option '") + key + "' must be a list");
    return v.get<std::vector<double>>();
}

std::string opt_string(const json& cfg, const char* key, const std::string& fallback) {
    if (!cfg.contains(key)) return fallback;
    const auto& v = cfg.at(key);
    if (!v.is_string()) throw Error(ErrorCode::InvalidInput, std::string("option '") + key + "' must be a string");
    return v.get<std::string>();
}

double closed_thickness(const ModelSpec& spec) {
    return select_profile(spec, std::numeric_limits<double>::max()).T;
}

json violations_json(const ValidationReport& rep) {
    json arr = json::array();
    for (const auto& v : rep) {
        arr.push_back({{"constraint", v.constraint}, {"value", v.value}, {"bound", v.bound}, {"message", v.message}});
    }
    return arr;
}

std::string fmt(const char* label, double x) { return std::string(label) + " = " + format_number(x); }

json pair_json(const BalancePair& bp) {
    return {{"p", bp.p}, {"tau", bp.tau}, {"source", bp.source == BalanceSource::Gradient ? "gradient" : "absorption"}};
}

// ---- verbs -------------------------------------------------------------------

void verb_balance(const ModelSpec& spec, const json&, Report& rep) {
    const LeadingProfile lead = leading_profile(spec);
    rep.results["p"] = lead.p;
    rep.results["tau"] = lead.tau;
    rep.results["dominant"] = std::string(to_string(lead.dominant));
    if (lead.absorption) rep.results["absorption"] = pair_json(*lead.absorption);
    if (lead.gradient) rep.results["gradient"] = pair_json(*lead.gradient);
    const BarrierProfile prof = select_profile(spec, std::numeric_limits<double>::max());
    rep.results["T"] = prof.T;
    rep.results["chi"] = prof.chi;
    rep.summary.push_back(fmt("p", lead.p));
    rep.summary.push_back(fmt("tau", lead.tau));
    rep.summary.push_back(fmt("T", prof.T));
    rep.summary.push_back("dominant = " + std::string(to_string(lead.dominant)));
}

void verb_barrier(const ModelSpec& spec, const json& cfg, Report& rep) {
    const double T = closed_thickness(spec);
    const double R = opt_number(cfg, "R", 2.0 * T);
    const int samples = static_cast<int>(opt_number(cfg, "samples", 50));
    const BarrierProfile prof = select_profile(spec, R);
    const RadialBarrier b(prof, {0.0, 0.0});
    rep.results["profile"] = prof;

    std::vector<double> s;
    for (int i = 1; i <= samples; ++i) s.push_back(prof.T * i / samples);
    const auto rows = ode_residual(spec, b, s);
    rep.raw["residuals"] = residual_csv(rows);
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, std::fabs(r.residual) / std::max(std::fabs(r.lhs), 1e-300));
    rep.results["max_relative_residual"] = worst;

    const auto sup = supersolution_check(spec, b, prof.T, samples);
    rep.results["supersolution"] = {{"holds", sup.holds}, {"worst_margin", sup.worst_margin}, {"worst_s", sup.worst_s}};

    Table values{{"r", "u"}, {}};
    for (int i = 0; i <= 200; ++i) {
        const double r = R * i / 200.0;
        const double x[2] = {r, 0.0};
        values.rows.push_back({r, eval_barrier(b, x)});
    }
    rep.tables["barrier"] = values;
    rep.summary.push_back(fmt("rho", prof.rho));
    rep.summary.push_back(fmt("T", prof.T));
    rep.summary.push_back(fmt("max relative residual", worst));
    rep.summary.push_back(std::string("supersolution ") + (sup.holds ? "holds" : "fails"));
}

void verb_radial(const ModelSpec& spec, const json& cfg, Report& rep) {
    const int steps = static_cast<int>(opt_number(cfg, "steps", 2000));
    const double T = closed_thickness(spec);
    const double R = opt_number(cfg, "R", 2.0 * T);
    const DeadcoreMeasurement meas = measure_deadcore(spec, R, spec.d, steps);
    rep.results["profile"] = meas.barrier;
    rep.results["T_closed"] = meas.barrier.T;
    rep.results["T_shoot"] = meas.T_found;
    rep.results["rho_measured"] = meas.rho_measured;
    rep.results["max_abs_deviation"] = meas.max_abs_deviation;
    rep.results["max_signed_deviation"] = meas.max_signed_deviation;
    rep.results["exact_barrier"] = meas.exact_barrier;

    if (spec.nonlinearity == NonlinearityKind::LaneEmdenMatukuma && meas.barrier.dominant != Dominant::Gradient) {
        RadialOptions frozen;
        frozen.weight = WeightMode::FrozenAtLength;
        const ShootResult shot = shoot_bvp(spec, spec.d, 0.5 * meas.barrier.T, 2.0 * meas.barrier.T, steps, frozen);
        rep.results["T_shoot_frozen_weight"] = shot.T_found;
    }
    const RadialSolution sol = integrate_ivp(spec, meas.T_found, steps);
    rep.results["max_ode_residual"] = sol.max_residual;
    rep.raw["radial_profile"] = sol.to_csv();
    rep.summary.push_back(fmt("T closed form", meas.barrier.T));
    rep.summary.push_back(fmt("T shooting", meas.T_found));
    rep.summary.push_back(fmt("plateau radius", meas.rho_measured));
    rep.summary.push_back(fmt("max |u - barrier| / d", meas.max_abs_deviation));
}

int verb_grid(const ModelSpec& spec, const json& cfg, Report& rep) {
    const double T = closed_thickness(spec);
    const double R = opt_number(cfg, "R", 2.0 * T);
    int n = static_cast<int>(opt_number(cfg, "n", 65));
    if (cfg.contains("epsilon")) n = static_cast<int>(std::lround(2.0 * R / opt_number(cfg, "epsilon", 0.0))) + 1;
    DiscGrid grid = DiscGrid::make(R, n);

    SolveOptions so;
    so.max_iters = static_cast<int>(opt_number(cfg, "max_iters", so.max_iters));
    so.tol = opt_number(cfg, "tol", so.tol);
    so.damping = opt_number(cfg, "damping", so.damping);
    so.stencil_dirs = static_cast<int>(opt_number(cfg, "stencil_dirs", so.stencil_dirs));
    const std::string mode = opt_string(cfg, "mode", "gauss_seidel");
    if (mode == "jacobi") {
        so.mode = SweepMode::Jacobi;
    } else if (mode != "gauss_seidel") {
        throw Error(ErrorCode::InvalidInput, "mode must be gauss_seidel or jacobi");
    }
    const std::string form = opt_string(cfg, "scheme", "monotone");
    if (form == "product") {
        so.form = SchemeForm::Product;
    } else if (form != "monotone") {
        throw Error(ErrorCode::InvalidInput, "scheme must be monotone or product");
    }
    const double shift = opt_number(cfg, "source_shift", 0.0);

    // Barrier for the ball bounded by the inner edge of the Dirichlet band.
    const RadialBarrier upper(select_profile(spec, R - grid.eps), {0.0, 0.0});
    auto barrier_at = [&](double x, double y) {
        const double p[2] = {x, y};
        return eval_barrier(upper, p);
    };
    if (opt_string(cfg, "initial", "barrier") == "barrier") grid.fill(barrier_at); else grid.fill(0.0);

    const double d = spec.d;
    const GridSolution sol = solve(spec, grid, [d](double, double) { return d; }, shift, so);
    const DiscGrid& g = sol.grid;
    double lowest = std::numeric_limits<double>::infinity();
    double above = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < g.n; ++j) {
        for (int i = 0; i < g.n; ++i) {
            if (g.at(i, j) == NodeKind::Outside) continue;
            const double u = g.u[g.index(i, j)];
            lowest = std::min(lowest, u);
            above = std::max(above, u - barrier_at(g.x(i), g.y(j)));
        }
    }
    const double lip = lipschitz_estimate(sol);
    const double rot = rotation_invariance_check(sol, {std::numbers::pi / 6, std::numbers::pi / 4});
    rep.results["R"] = R;
    rep.results["n"] = n;
    rep.results["epsilon"] = g.eps;
    rep.results["iterations"] = sol.iterations;
    rep.results["residual_inf"] = sol.residual_inf;
    rep.results["converged"] = sol.converged;
    rep.results["min_u"] = lowest;
    rep.results["max_u_minus_barrier"] = above;
    rep.results["lipschitz"] = lip;
    rep.results["rotation_deviation"] = rot;
    rep.results["degenerate_gradient_convention"] = "0^(2-beta) = 0 for beta < 2";
    rep.raw["grid"] = grid_csv(g);
    rep.summary.push_back("sweeps = " + std::to_string(sol.iterations));
    rep.summary.push_back(fmt("residual", sol.residual_inf));
    rep.summary.push_back(fmt("max(u - barrier)", above));
    rep.summary.push_back(fmt("rotation deviation", rot));
    rep.summary.push_back(fmt("Lipschitz estimate", lip));
    if (!sol.converged) {
        rep.warnings.push_back("grid solver did not converge");
        return kRuntimeError;
    }
    return kOk;
}

void verb_liouville(const ModelSpec& spec, const json& cfg, Report& rep) {
    const Threshold th = threshold(spec);
    rep.results["threshold"] = th;
    const std::vector<double> radii = opt_list(cfg, "radii", {1.0, 2.0, 4.0, 8.0});
    std::vector<GrowthSample> samples;
    if (cfg.contains("samples")) {
        for (const auto& row : cfg.at("samples")) samples.push_back({row.at(0).get<double>(), row.at(1).get<double>()});
    } else {
        samples = witness_samples(th, opt_number(cfg, "scale", 1.0), radii);
    }
    const double tol = opt_number(cfg, "tolerance", kAnalyticTolerance);
    const LiouvilleVerdict v = classify(spec, samples, tol);
    rep.results["verdict"] = v;
    Table ladder{{"R", "sup", "denominator", "ratio"}, {}};
    for (const auto& s : samples) {
        const double den = th.denominator(s.R);
        ladder.rows.push_back({s.R, s.sup, den, s.sup / den});
    }
    rep.tables["ladder"] = ladder;
    rep.summary.push_back(fmt("theta", th.theta));
    rep.summary.push_back(fmt("exponent", th.exponent));
    rep.summary.push_back("classification = " + std::string(to_string(v.classification)) + " (" + v.note + ")");

    const double phi = opt_number(cfg, "phi", 0.5);
    const std::vector<double> plateau_radii = opt_list(cfg, "plateau_radii", {2.0, 4.0, 8.0});
    const int steps = static_cast<int>(opt_number(cfg, "steps", 2000));
    const auto rows = deadcore_consistency(spec, plateau_radii, phi, steps);
    Table plateau{{"R", "d", "predicted_plateau", "measured_plateau", "predicted_fraction", "measured_fraction",
                   "relative_error"},
                  {}};
    json arr = json::array();
    for (const auto& r : rows) {
        plateau.rows.push_back({r.R, r.d, r.predicted_plateau, r.measured_plateau, r.predicted_fraction,
                                r.measured_fraction, r.relative_error});
        arr.push_back({{"R", r.R}, {"measured_fraction", r.measured_fraction},
                       {"predicted_fraction", r.predicted_fraction}, {"relative_error", r.relative_error}});
    }
    rep.results["plateau_law"] = {{"phi", phi}, {"rows", arr}};
    rep.tables["plateau"] = plateau;
}

void verb_counterexample(const ModelSpec& spec, const json& cfg, Report& rep) {
    const double r_max = opt_number(cfg, "r_max", 5.0);
    const int points = static_cast<int>(opt_number(cfg, "points", 300));
    std::vector<double> radii;
    for (int i = 0; i < points; ++i) radii.push_back(r_max * i / (points - 1));

    auto one = [&](double beta, double m, double alpha) {
        return exp_counterexample_residual(beta, m, alpha, spec.lambda, spec.gamma, radii);
    };
    const auto own = one(spec.beta, spec.m, spec.alpha);
    Table res{{"r", "residual"}, {}};
    for (std::size_t k = 0; k < radii.size(); ++k) res.rows.push_back({radii[k], own.residuals[k]});
    rep.tables["counterexample"] = res;
    rep.results["a"] = own.a;
    rep.results["max_residual"] = own.max_residual;
    rep.results["argmax_r"] = own.argmax_r;
    rep.summary.push_back(fmt("a", own.a));
    rep.summary.push_back(fmt("max residual", own.max_residual));

    if (cfg.value("lattice", false)) {
        Table lat{{"beta", "m", "alpha", "max_residual"}, {}};
        bool all = true;
        for (double beta : {0.0, 0.5, 1.0}) {
            for (double mf : {1.0 / 3.0, 2.0 / 3.0, 1.0}) {
                for (double alpha : {-0.9, -0.45, 0.0}) {
                    const auto r = one(beta, mf * (2.0 - beta), alpha);
                    lat.rows.push_back({beta, mf * (2.0 - beta), alpha, r.max_residual});
                    all = all && r.max_residual <= 0.0;
                }
            }
        }
        rep.tables["lattice"] = lat;
        rep.results["lattice_all_nonpositive"] = all;
    }

    std::vector<OscSample> osc;
    Table osc_table{{"R", "sup", "inf", "ratio"}, {}};
    for (double R : opt_list(cfg, "osc_radii", {1.0, 2.0, 5.0, 10.0})) osc.push_back({R, 1.0 - std::exp(-R * R), 0.0});
    const OscResult o = osc_criterion(osc, opt_number(cfg, "osc_tolerance", kOscTolerance));
    for (std::size_t k = 0; k < osc.size(); ++k) osc_table.rows.push_back({osc[k].R, osc[k].sup, osc[k].inf, o.ratios[k]});
    rep.tables["oscillation"] = osc_table;
    rep.results["oscillation"] = {{"ratios", o.ratios}, {"consistent", o.consistent}};
    rep.summary.push_back(std::string("oscillation criterion ") + (o.consistent ? "consistent" : "not consistent"));
}

void verb_table1(const ModelSpec& base, const json& cfg, Report& rep) {
    const auto betas = opt_list(cfg, "betas", {0.0, 0.5, 1.0, 1.5, 2.0});
    const auto gammas = opt_list(cfg, "gammas", {0.0, 0.5, 1.0, 2.0});
    Table t{{"row", "beta", "gamma", "p_gradient", "tau_gradient", "p_absorption", "tau_absorption", "p", "tau",
             "dominant"},
            {}};
    json arr = json::array();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (int row = 1; row <= 3; ++row) {
        for (double b : betas) {
            for (double g : gammas) {
                ModelSpec s = base;
                s.beta = b;
                s.gamma = g;
                if (row == 1) {
                    s.hamiltonian = HamiltonianKind::None;
                    s.nonlinearity = NonlinearityKind::HardyHenon;
                } else {
                    if (s.hamiltonian == HamiltonianKind::None) {
                        s.hamiltonian = HamiltonianKind::GradientPower;
                        if (s.c == 0.0) s.c = 1.0;
                    }
                    s.nonlinearity = row == 2 ? NonlinearityKind::HardyHenon : NonlinearityKind::LaneEmdenMatukuma;
                }
                if (!is_admissible(s)) continue;
                try {
                    const LeadingProfile lead = leading_profile(s);
                    const double dom = lead.dominant == Dominant::ExactBalance ? 0.0
                                       : lead.dominant == Dominant::Absorption ? 1.0
                                                                                : 2.0;
                    t.rows.push_back({static_cast<double>(row), b, g, lead.gradient ? lead.gradient->p : nan,
                                      lead.gradient ? lead.gradient->tau : nan, lead.absorption->p,
                                      lead.absorption->tau, lead.p, lead.tau, dom});
                    json e = {{"row", row},
                              {"beta", b},
                              {"gamma", g},
                              {"p", lead.p},
                              {"tau", lead.tau},
                              {"dominant", std::string(to_string(lead.dominant))},
                              {"absorption", pair_json(*lead.absorption)}};
                    if (lead.gradient) e["gradient"] = pair_json(*lead.gradient);
                    arr.push_back(e);
                } catch (const Error& ex) {
                    rep.warnings.push_back("row " + std::to_string(row) + " beta=" + format_number(b) +
                                           " gamma=" + format_number(g) + ": " + ex.what());
                }
            }
        }
    }
    rep.tables["table1"] = t;
    rep.results["rows"] = arr;
    rep.summary.push_back("evaluated " + std::to_string(arr.size()) + " admissible parameter points");
}

int write_report(const Report& rep, const Command& cmd, std::ostream& err) {
    try {
        emit_report(rep, cmd.output_dir);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kCannotWrite;
    }
    return kOk;
}

}  // namespace

json load_config(const Command& cmd) {
    std::ifstream f(cmd.spec_path);
    if (!f) throw std::runtime_error("cannot read config file '" + cmd.spec_path + "'");
    json cfg;
    try {
        cfg = json::parse(f);
    } catch (const json::parse_error& e) {
        throw std::runtime_error("config file '" + cmd.spec_path + "' is not valid JSON: " + e.what());
    }
    if (!cfg.is_object()) throw std::runtime_error("config file must hold a JSON object");
    for (const auto& kv : cmd.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw std::runtime_error("override '" + kv + "' is not key=value");
        cfg[kv.substr(0, eq)] = parse_value(kv.substr(eq + 1));
    }
    return cfg;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    json cfg;
    ModelSpec spec;
    try {
        cfg = load_config(cmd);
        spec = cfg.get<ModelSpec>();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kBadConfig;
    }

    Report rep;
    rep.verb = cmd.verb;
    rep.results["spec"] = spec;

    const bool needs_admissible = cmd.verb != "table1" && cmd.verb != "counterexample";
    ValidationReport violations;
    try {
        violations = validate_admissible(spec);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kBadConfig;
    }
    if (cmd.verb == "admit" || (needs_admissible && !violations.empty())) {
        rep.results["admissible"] = violations.empty();
        rep.results["violations"] = violations_json(violations);
        if (spec.nonlinearity == NonlinearityKind::LaneEmdenMatukuma) {
            rep.results["lem_alpha_bound"] = lem_alpha_bound(spec);
        }
        if (violations.empty()) {
            rep.summary.push_back("all constraints satisfied");
        } else {
            for (const auto& v : violations) rep.summary.push_back("violated: " + v.message);
        }
        const int wrote = write_report(rep, cmd, err);
        if (wrote != kOk) return wrote;
        for (const auto& line : rep.summary) out << line << '\n';
        return violations.empty() ? kOk : kInadmissible;
    }

    int code = kOk;
    try {
        if (cmd.verb == "balance") {
            verb_balance(spec, cfg, rep);
        } else if (cmd.verb == "barrier") {
            verb_barrier(spec, cfg, rep);
        } else if (cmd.verb == "radial") {
            verb_radial(spec, cfg, rep);
        } else if (cmd.verb == "grid") {
            code = verb_grid(spec, cfg, rep);
        } else if (cmd.verb == "liouville") {
            verb_liouville(spec, cfg, rep);
        } else if (cmd.verb == "counterexample") {
            verb_counterexample(spec, cfg, rep);
        } else if (cmd.verb == "table1") {
            verb_table1(spec, cfg, rep);
        } else {
            err << "error: unknown verb '" << cmd.verb << "'\n";
            return kBadConfig;
        }
    } catch (const Error& e) {
        rep.warnings.push_back(e.what());
        err << "error: " << e.what() << '\n';
        rep.results["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
        const int wrote = write_report(rep, cmd, err);
        return wrote != kOk ? wrote : kRuntimeError;
    }
    const int wrote = write_report(rep, cmd, err);
    if (wrote != kOk) return wrote;
    for (const auto& line : rep.summary) out << line << '\n';
    return code;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dead-core barriers, radial and grid solvers, and Liouville thresholds for "
                 "Delta_inf^beta u = cH(u, Du) + lambda f(|x|, u)"};
    app.require_subcommand(1);
    Command cmd;
    for (const auto& v : kVerbs) {
        CLI::App* sub = app.add_subcommand(v.name, std::string(v.summary) + "\n" + v.anchors);
        sub->add_option("--spec", cmd.spec_path, "JSON model spec (ModelSpec keys plus verb options)")->required();
        sub->add_option("--out", cmd.output_dir, "output directory")->required();
        sub->add_option("--set", cmd.overrides, "override key=value (repeatable)");
        sub->callback([&cmd, name = std::string(v.name)] { cmd.verb = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadConfig;
    }
    return run(cmd, out, err);
}

}  // namespace deadcore::cli
