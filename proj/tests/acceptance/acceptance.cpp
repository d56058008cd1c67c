// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "deadcore/balance.hpp"
#include "deadcore/barrier.hpp"
#include "deadcore/grid.hpp"
#include "deadcore/liouville.hpp"
#include "deadcore/radial.hpp"

using namespace deadcore;

namespace {

constexpr double kBig = std::numeric_limits<double>::max();

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

double rel(double a, double b) { return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-300}); }

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    bool coin() { return uniform(0.0, 1.0) < 0.5; }

private:
    std::mt19937_64 gen_;
};

ModelSpec random_absorption_spec(Rng& rng, bool allow_beta2) {
    for (;;) {
        ModelSpec s;
        s.beta = allow_beta2 && rng.uniform(0, 1) < 0.2 ? 2.0 : rng.uniform(0.0, 2.0);
        s.gamma = rng.uniform(0.0, 0.85 * (3.0 - s.beta));
        s.alpha = rng.uniform(-0.9 - s.gamma, 2.0);
        s.lambda = rng.uniform(0.2, 3.0);
        s.d = rng.uniform(0.5, 2.0);
        if (is_admissible(s)) return s;
    }
}

ModelSpec random_gradient_spec(Rng& rng) {
    for (;;) {
        ModelSpec s;
        s.beta = rng.uniform(0.0, 2.0);
        const int kind = static_cast<int>(rng.uniform(0.0, 3.0));
        s.hamiltonian = kind == 0 ? HamiltonianKind::GradientPower
                                  : kind == 1 ? HamiltonianKind::NegativeMixed : HamiltonianKind::PositiveMixed;
        s.q = kind == 0 ? 0.0 : rng.uniform(0.05, 0.8 * (3.0 - s.beta));
        s.m = rng.uniform(0.05, 0.9 * (3.0 - s.beta - s.q));
        s.c = (kind == 1 ? -1.0 : 1.0) * rng.uniform(0.2, 3.0);
        s.gamma = rng.uniform(0.0, 0.85 * (3.0 - s.beta));
        s.alpha = rng.uniform(-0.9 - s.gamma, 1.5);
        s.lambda = rng.uniform(0.2, 3.0);
        if (is_admissible(s)) return s;
    }
}

// ---- criteria ---------------------------------------------------------------

Outcome classical_constant() {
    double worst = 0.0;
    for (double g : {0.0, 0.5, 1.0, 2.0, 2.9}) {
        for (double lam : {0.5, 1.0, 2.0}) {
            ModelSpec s;
            s.gamma = g;
            s.lambda = lam;
            const double theta = threshold(s).theta;
            worst = std::max(worst, rel(std::pow(theta, 3.0 - g), lam * std::pow(3.0 - g, 4) / (64.0 * (1.0 + g))));
        }
    }
    return {worst <= 1e-12, "max relative error " + num(worst)};
}

Outcome balance_identities() {
    Rng rng(2024);
    double worst_abs = 0.0;
    for (int k = 0; k < 200; ++k) {
        const ModelSpec s = random_absorption_spec(rng, true);
        const auto bp = absorption_exponents(s);
        const double p = bp.p, t = bp.tau, b = s.beta;
        worst_abs = std::max(worst_abs, rel((p - 2) + (p - 1) * (2 - b), p * s.gamma + s.alpha) *
                                            (std::fabs((p - 2) + (p - 1) * (2 - b)) > 1e-3 ? 1.0 : 0.0));
        worst_abs = std::max(worst_abs, std::fabs((p - 2) + (p - 1) * (2 - b) - p * s.gamma - s.alpha) /
                                            std::max(1.0, std::fabs(p * s.gamma + s.alpha)));
        worst_abs = std::max(worst_abs,
                             rel(std::pow(t, 3 - b) * std::pow(p, 3 - b) * (p - 1), s.lambda * std::pow(t, s.gamma)));
    }
    double worst_grad = 0.0;
    for (int k = 0; k < 200; ++k) {
        const ModelSpec s = random_gradient_spec(rng).normalized();
        const auto bp = gradient_exponents(s);
        const double p = bp.p, t = bp.tau, b = s.beta;
        const double q = s.hamiltonian == HamiltonianKind::GradientPower ? 0.0 : s.q;
        worst_grad = std::max(worst_grad, std::fabs((p - 2) + (p - 1) * (2 - b) - (p - 1) * s.m - p * q) /
                                              std::max(1.0, std::fabs((p - 1) * s.m + p * q)));
        worst_grad = std::max(worst_grad, rel(std::pow(t, 3 - b) * std::pow(p, 3 - b) * (p - 1),
                                              std::fabs(s.c) * std::pow(t, q + s.m) * std::pow(p, s.m)));
    }
    return {worst_abs <= 1e-12 && worst_grad <= 1e-12,
            "absorption " + num(worst_abs) + ", gradient " + num(worst_grad)};
}

Outcome exact_residuals() {
    Rng rng(99);
    double worst = 0.0;
    int beta2 = 0;
    int gradient = 0;
    for (int k = 0; k < 50; ++k) {
        ModelSpec s;
        if (k % 3 == 2) {
            do {
                s = random_gradient_spec(rng);
            } while (leading_profile(s).dominant != Dominant::Gradient);
            ++gradient;
        } else {
            s = random_absorption_spec(rng, true);
            if (k % 10 == 0) s.beta = 2.0, s.gamma = std::min(s.gamma, 0.9), s.alpha = std::max(s.alpha, -0.9);
        }
        if (s.beta == 2.0) ++beta2;
        const RadialBarrier b(select_profile(s, kBig), {0.0, 0.0});
        std::vector<double> samples;
        for (int i = 1; i <= 50; ++i) samples.push_back(b.profile.T * i / 50.0);
        for (const auto& row : ode_residual(s, b, samples)) {
            worst = std::max(worst, std::fabs(row.residual) / std::fabs(row.lhs));
        }
    }
    return {worst <= 1e-10 && beta2 > 0,
            "max relative residual " + num(worst) + " (" + std::to_string(beta2) + " beta=2 specs, " +
                std::to_string(gradient) + " gradient-balanced)"};
}

Outcome ode_closed_form() {
    Rng rng(7);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        ModelSpec s;
        do {
            s = random_absorption_spec(rng, false);
        } while (absorption_exponents(s).p > 12.0);
        const double T = select_profile(s, kBig).T;
        worst = std::max(worst, rel(shoot_bvp(s, s.d, 0.5 * T, 2.0 * T).T_found, T));
    }
    double worst_lem = 0.0;
    RadialOptions frozen;
    frozen.weight = WeightMode::FrozenAtLength;
    for (int k = 0; k < 5; ++k) {
        ModelSpec s;
        s.nonlinearity = NonlinearityKind::LaneEmdenMatukuma;
        s.beta = rng.uniform(0.0, 1.5);
        s.gamma = rng.uniform(0.0, 0.8 * (3.0 - s.beta));
        s.alpha = rng.uniform(0.1, 0.9 * lem_alpha_bound(s));
        s.lambda = rng.uniform(0.5, 2.0);
        s.d = rng.uniform(0.5, 3.0);
        const double T = select_profile(s, kBig).T;
        worst_lem = std::max(worst_lem, rel(shoot_bvp(s, s.d, 0.5 * T, 2.0 * T, 2000, frozen).T_found, T));
    }
    return {worst <= 1e-4 && worst_lem <= 1e-4, "pure absorption " + num(worst) + ", LEM frozen weight " + num(worst_lem)};
}

Outcome deadcore_formation() {
    const ModelSpec s;
    const double T = select_profile(s, kBig).T;
    const double R = 2.0 * T;
    const auto m = measure_deadcore(s, R, s.d);
    const double err = std::fabs(m.rho_measured - (R - T));
    return {err <= 1e-3 * R && m.plateau_max <= 1e-9,
            "plateau radius error " + num(err) + " (R = " + num(R) + "), plateau max " + num(m.plateau_max)};
}

struct GridCase {
    ModelSpec spec;
    double R = 0.0;
    DiscGrid grid;
    RadialBarrier barrier;  // for the ball bounded by the inner edge of the Dirichlet band
};

GridCase make_grid_case(const ModelSpec& s, double datum) {
    ModelSpec sd = s;
    sd.d = datum;
    const double R = 2.0 * select_profile(s, kBig).T;
    DiscGrid g = DiscGrid::make(R, 65);
    RadialBarrier b(select_profile(sd, R - g.eps), {0.0, 0.0});
    g.fill([&](double x, double y) {
        const double p[2] = {x, y};
        return eval_barrier(b, p);
    });
    return {sd, R, g, b};
}

GridSolution grid_solve(const GridCase& gc, SweepMode mode) {
    SolveOptions o;
    o.mode = mode;
    const double d = gc.spec.d;
    return solve(gc.spec, gc.grid, [d](double, double) { return d; }, 0.0, o);
}

Outcome grid_sandwich() {
    ModelSpec s;
    s.m = 1;
    s.c = 1;
    s.hamiltonian = HamiltonianKind::GradientPower;
    const GridCase base = make_grid_case(s, 1.0);
    const GridCase raised = make_grid_case(s, 1.25);
    const auto gs = grid_solve(base, SweepMode::GaussSeidel);
    const auto up = grid_solve(raised, SweepMode::GaussSeidel);
    const auto ja = grid_solve(base, SweepMode::Jacobi);
    if (!gs.converged || !up.converged || !ja.converged) return {false, "a grid solve did not converge"};

    const DiscGrid& g = gs.grid;
    double below_zero = 0.0;
    double above_barrier = -kBig;
    double order = -kBig;
    double modes = 0.0;
    for (int j = 0; j < g.n; ++j) {
        for (int i = 0; i < g.n; ++i) {
            if (g.at(i, j) == NodeKind::Outside) continue;
            const std::size_t k = g.index(i, j);
            const double p[2] = {g.x(i), g.y(j)};
            below_zero = std::min(below_zero, g.u[k]);
            above_barrier = std::max(above_barrier, g.u[k] - eval_barrier(base.barrier, p));
            order = std::max(order, g.u[k] - up.grid.u[k]);
            modes = std::max(modes, std::fabs(g.u[k] - ja.grid.u[k]));
        }
    }
    // nodal values are settled only to the sweep tolerance
    const double slack = 1e-9;
    const bool pass = below_zero >= -slack && above_barrier <= slack && order <= slack && modes <= 1e-6;
    return {pass, "min u " + num(below_zero) + ", max(u - barrier) " + num(above_barrier) + ", max(u1 - u2) " +
                      num(order) + ", |GS - Jacobi| " + num(modes) + ", sweeps " + std::to_string(gs.iterations)};
}

Outcome grid_rotation() {
    const GridCase gc = make_grid_case(ModelSpec{}, 1.0);
    const auto sol = grid_solve(gc, SweepMode::GaussSeidel);
    if (!sol.converged) return {false, "grid solve did not converge"};
    const double lip = lipschitz_estimate(sol);
    double worst_ratio = 0.0;
    std::string detail;
    for (double th : {std::numbers::pi / 6, std::numbers::pi / 4}) {
        const double dev = rotation_invariance_check(sol, {th});
        worst_ratio = std::max(worst_ratio, dev / (2.0 * sol.grid.eps * lip));
        detail += "dev(" + num(th) + ") " + num(dev) + ", ";
    }
    return {worst_ratio <= 1.0, detail + "bound 2 eps Lip = " + num(2.0 * sol.grid.eps * lip)};
}

Outcome sharpness_trichotomy() {
    Rng rng(31);
    const std::vector<double> radii = {1.0, 2.0, 4.0, 8.0, 16.0};
    int good = 0;
    int total = 0;
    while (total < 20) {
        ModelSpec s;
        if (rng.coin()) {
            s = random_absorption_spec(rng, false);
            if (total % 3 == 0) s.nonlinearity = NonlinearityKind::LaneEmdenMatukuma, s.alpha = std::fabs(s.alpha) * 0.3;
        } else {
            s = random_gradient_spec(rng);
        }
        if (!is_admissible(s)) continue;
        Threshold th;
        try {
            th = threshold(s);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::TieUnresolved) continue;
            throw;
        }
        ++total;
        const bool ok = classify(s, witness_samples(th, 0.9, radii)).classification == Classification::Subcritical &&
                        classify(s, witness_samples(th, 1.0, radii)).classification == Classification::AtThreshold &&
                        classify(s, witness_samples(th, 1.1, radii)).classification == Classification::AboveThreshold;
        if (ok) ++good;
    }
    return {good == total, std::to_string(good) + "/" + std::to_string(total) + " specs classified correctly"};
}

Outcome exponential_counterexample() {
    std::vector<double> radii;
    for (int i = 0; i < 300; ++i) radii.push_back(5.0 * i / 299.0);
    double worst = -kBig;
    int combos = 0;
    for (double beta : {0.0, 0.5, 1.0}) {
        for (double mf : {1.0 / 3.0, 2.0 / 3.0, 1.0}) {
            for (double alpha : {-0.9, -0.45, 0.0}) {
                for (double gamma : {0.0, 1.0}) {
                    worst = std::max(worst, exp_counterexample_residual(beta, mf * (2.0 - beta), alpha, 1.0, gamma, radii)
                                                .max_residual);
                    ++combos;
                }
            }
        }
    }
    std::vector<OscSample> osc;
    for (double R : {1.0, 2.0, 5.0, 10.0}) osc.push_back({R, 1.0 - std::exp(-R * R), 0.0});
    const auto o = osc_criterion(osc);
    bool decreasing = true;
    for (std::size_t k = 1; k < o.ratios.size(); ++k) decreasing = decreasing && o.ratios[k] < o.ratios[k - 1];
    const double l10 = o.ratios.back();
    return {worst <= 0.0 && decreasing && std::fabs(l10 - 0.1) <= 1e-6 && o.consistent,
            "max residual " + num(worst) + " over " + std::to_string(combos) + " lattice points, L_10 = " +
                std::to_string(l10)};
}

Outcome plateau_fraction() {
    const auto rows = deadcore_consistency(ModelSpec{}, {2.0, 4.0, 8.0}, 0.5);
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, r.relative_error);
    const double predicted = rows.front().predicted_fraction;
    return {worst <= 0.02 && std::fabs(predicted - 0.40539) <= 1e-5,
            "predicted fraction " + num(predicted) + ", max relative error " + num(worst)};
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "classical constant reproduction", 1.0, classical_constant},
        {2, "balance identity suite", 5.0, balance_identities},
        {3, "exact-solution residuals", 5.0, exact_residuals},
        {4, "ODE and closed-form thickness agreement", 30.0, ode_closed_form},
        {5, "dead-core formation", 30.0, deadcore_formation},
        {6, "grid sandwich, comparison and sweep-mode agreement", 120.0, grid_sandwich},
        {7, "grid rotation invariance", 60.0, grid_rotation},
        {8, "sharpness trichotomy", 60.0, sharpness_trichotomy},
        {9, "exponential counterexample and oscillation criterion", 60.0, exponential_counterexample},
        {10, "plateau-fraction law", 60.0, plateau_fraction},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = o.pass && secs < c.limit_seconds;
        if (!pass) ++failed;
        std::printf("%s criterion %d: %s: %s [%.2fs, limit %.0fs]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs, c.limit_seconds);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
