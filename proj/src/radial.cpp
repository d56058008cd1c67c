#include "deadcore/radial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "deadcore/barrier.hpp"

namespace deadcore {

namespace {

using State = std::array<double, 2>;  // (h, h')

struct RadialRhs {
    ModelSpec spec;
    bool frozen = false;
    double frozen_at = 0.0;

    // cH + lambda f at (s, h, h').
    [[nodiscard]] double forcing(double s, double h, double hp) const {
        const double weight_s = frozen ? frozen_at : s;
        return eval_hamiltonian(spec, std::max(h, 0.0), std::max(hp, 0.0)) +
               eval_nonlinearity(spec, weight_s, h);
    }

    [[nodiscard]] double second_derivative(double s, double h, double hp) const {
        const double f = forcing(s, h, hp);
        if (spec.beta == 2.0) return f;
        if (hp <= 0.0) {
            if (f == 0.0) return 0.0;
            char buf[128];
            std::snprintf(buf, sizeof buf, "h' vanishes at s = %.6g with beta < 2", s);
            throw Error(ErrorCode::DegenerateGradient, buf);
        }
        return f * std::pow(hp, spec.beta - 2.0);
    }
};

State rk4_log_step(const RadialRhs& rhs, double t, const State& y, double dt) {
    auto f = [&](double tt, const State& yy) -> State {
        const double s = std::exp(tt);
        return {s * yy[1], s * rhs.second_derivative(s, yy[0], yy[1])};
    };
    const State k1 = f(t, y);
    const State k2 = f(t + 0.5 * dt, {y[0] + 0.5 * dt * k1[0], y[1] + 0.5 * dt * k1[1]});
    const State k3 = f(t + 0.5 * dt, {y[0] + 0.5 * dt * k2[0], y[1] + 0.5 * dt * k2[1]});
    const State k4 = f(t + dt, {y[0] + dt * k3[0], y[1] + dt * k3[1]});
    return {y[0] + dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            y[1] + dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

State rk4_step(const RadialRhs& rhs, double s, const State& y, double ds) {
    auto f = [&](double ss, const State& yy) -> State { return {yy[1], rhs.second_derivative(ss, yy[0], yy[1])}; };
    const State k1 = f(s, y);
    const State k2 = f(s + 0.5 * ds, {y[0] + 0.5 * ds * k1[0], y[1] + 0.5 * ds * k1[1]});
    const State k3 = f(s + 0.5 * ds, {y[0] + 0.5 * ds * k2[0], y[1] + 0.5 * ds * k2[1]});
    const State k4 = f(s + ds, {y[0] + ds * k3[0], y[1] + ds * k3[1]});
    return {y[0] + ds / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            y[1] + ds / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

// Leading power profile Lambda s^p of the dead-core branch, if it exists.
std::optional<std::pair<double, double>> seed_profile(const ModelSpec& spec, const RadialOptions& opt,
                                                      double s_end) {
    if (spec.lambda == 0.0) {
        if (!spec.has_gradient_term()) return std::nullopt;
        const auto g = gradient_exponents(spec);
        return std::make_pair(g.p, g.tau);
    }
    const auto lead = leading_profile(spec);
    double scale = lead.tau;
    if (spec.nonlinearity == NonlinearityKind::LaneEmdenMatukuma && lead.dominant != Dominant::Gradient &&
        opt.weight == WeightMode::FrozenAtLength) {
        scale *= lem_chi(spec, s_end);
    }
    return std::make_pair(lead.p, scale);
}

void check_state(const State& y, double s, double blowup) {
    if (!std::isfinite(y[0]) || !std::isfinite(y[1]) || y[0] > blowup) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "solution blew up near s = %.6g", s);
        throw Error(ErrorCode::Overflow, buf);
    }
}

}  // namespace

double RadialSolution::value_at(double s) const {
    if (s <= 0.0 || s_grid.size() < 2) return 0.0;
    if (s >= s_grid.back()) return h_vals.back() + hp_vals.back() * (s - s_grid.back());
    const auto it = std::upper_bound(s_grid.begin(), s_grid.end(), s);
    const std::size_t i = static_cast<std::size_t>(it - s_grid.begin()) - 1;
    const double s0 = s_grid[i];
    const double ds = s_grid[i + 1] - s0;
    const double t = (s - s0) / ds;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * h_vals[i] + (t3 - 2 * t2 + t) * ds * hp_vals[i] +
           (-2 * t3 + 3 * t2) * h_vals[i + 1] + (t3 - t2) * ds * hp_vals[i + 1];
}

std::string RadialSolution::to_csv() const {
    std::string out = "s,h,hp,residual\n";
    char buf[160];
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g\n", s_grid[i], h_vals[i], hp_vals[i], residual[i]);
        out += buf;
    }
    return out;
}

RadialSolution integrate_ivp(const ModelSpec& raw, double s_end, int steps, RadialSeed seed,
                             const RadialOptions& opt) {
    if (steps < 16) throw Error(ErrorCode::InvalidInput, "need at least 16 steps");
    if (!(s_end > 0.0)) throw Error(ErrorCode::InvalidInput, "s_end must be > 0");
    if (!(seed.h0 >= 0.0) || !(seed.hp0 >= 0.0)) throw Error(ErrorCode::InvalidInput, "seed must be >= 0");

    const ModelSpec spec = raw.normalized();
    RadialRhs rhs{spec, opt.weight == WeightMode::FrozenAtLength, s_end};

    RadialSolution sol;
    sol.spec = spec;
    const auto n = static_cast<std::size_t>(steps) + 1;
    const double ds = s_end / steps;
    sol.s_grid.resize(n);
    for (std::size_t i = 0; i < n; ++i) sol.s_grid[i] = ds * static_cast<double>(i);
    sol.s_grid.back() = s_end;
    sol.h_vals.assign(n, 0.0);
    sol.hp_vals.assign(n, 0.0);
    sol.residual.assign(n, 0.0);

    const bool degenerate_start = seed.h0 == 0.0 && seed.hp0 == 0.0;
    if (degenerate_start) {
        const auto lead = seed_profile(spec, opt, s_end);
        if (!lead) return sol;  // only the trivial solution leaves (0, 0)
        const auto [p, scale] = *lead;
        const double s1 = sol.s_grid[1];
        State y{scale * std::pow(s1, p), scale * p * std::pow(s1, p - 1.0)};
        sol.h_vals[1] = y[0];
        sol.hp_vals[1] = y[1];
        const double dt_max = 2.0 / steps;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double t0 = std::log(sol.s_grid[i]);
            const double t1 = std::log(sol.s_grid[i + 1]);
            const int sub = std::max(1, static_cast<int>(std::ceil((t1 - t0) / dt_max)));
            const double dt = (t1 - t0) / sub;
            for (int k = 0; k < sub; ++k) y = rk4_log_step(rhs, t0 + k * dt, y, dt);
            check_state(y, sol.s_grid[i + 1], opt.blowup);
            sol.h_vals[i + 1] = y[0];
            sol.hp_vals[i + 1] = y[1];
        }
    } else {
        State y{seed.h0, seed.hp0};
        sol.h_vals[0] = y[0];
        sol.hp_vals[0] = y[1];
        for (std::size_t i = 0; i + 1 < n; ++i) {
            y = rk4_step(rhs, sol.s_grid[i], y, sol.s_grid[i + 1] - sol.s_grid[i]);
            check_state(y, sol.s_grid[i + 1], opt.blowup);
            sol.h_vals[i + 1] = y[0];
            sol.hp_vals[i + 1] = y[1];
        }
    }

    for (std::size_t i = 2; i + 1 < n; ++i) {
        const double hpp = (sol.hp_vals[i + 1] - sol.hp_vals[i - 1]) / (sol.s_grid[i + 1] - sol.s_grid[i - 1]);
        const double lhs = std::pow(sol.hp_vals[i], 2.0 - spec.beta) * hpp;
        const double f = rhs.forcing(sol.s_grid[i], sol.h_vals[i], sol.hp_vals[i]);
        const double scale = std::max({std::fabs(lhs), std::fabs(f), 1e-300});
        sol.residual[i] = (lhs - f) / scale;
        sol.max_residual = std::max(sol.max_residual, std::fabs(sol.residual[i]));
    }

    for (std::size_t i = 1; i < n; ++i) {
        if (sol.h_vals[i] >= spec.d) {
            const double h0 = sol.h_vals[i - 1];
            const double h1 = sol.h_vals[i];
            const double w = h1 > h0 ? (spec.d - h0) / (h1 - h0) : 1.0;
            sol.measured_T = sol.s_grid[i - 1] + w * (sol.s_grid[i] - sol.s_grid[i - 1]);
            break;
        }
    }
    return sol;
}

double richardson_error(const ModelSpec& spec, double s_end, int steps, const RadialOptions& opt) {
    const double fine = integrate_ivp(spec, s_end, steps, {}, opt).end_value();
    const double coarse = integrate_ivp(spec, s_end, steps / 2, {}, opt).end_value();
    return std::fabs(fine - coarse) / 15.0;
}

ShootResult shoot_bvp(const ModelSpec& raw, double d, double lo, double hi, int steps,
                      const RadialOptions& opt) {
    if (!(d > 0.0)) throw Error(ErrorCode::InvalidInput, "d must be > 0");
    if (!(lo < hi) || !(hi > 0.0)) throw Error(ErrorCode::BracketError, "bracket must satisfy lo < hi, hi > 0");
    ModelSpec spec = raw;
    spec.d = d;

    auto endpoint = [&](double L) { return integrate_ivp(spec, L, steps, {}, opt); };
    const double g_lo = lo > 0.0 ? endpoint(lo).end_value() - d : -d;
    ShootResult res;
    res.solution = endpoint(hi);
    const double g_hi = res.solution.end_value() - d;
    if (!(g_lo < 0.0) || !(g_hi > 0.0)) {
        throw Error(ErrorCode::BracketError, "h(lo) < d < h(hi) does not hold");
    }
    res.T_found = hi;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        RadialSolution sol = endpoint(mid);
        const double g = sol.end_value() - d;
        res.iterations = it + 1;
        res.T_found = mid;
        res.solution = std::move(sol);
        if (std::fabs(g) <= 1e-8 * d) return res;
        if (g < 0.0) lo = mid; else hi = mid;
        if (hi - lo <= 1e-15 * hi) break;
    }
    return res;
}

DeadcoreMeasurement measure_deadcore(const ModelSpec& raw, double R, double d, int steps) {
    ModelSpec spec = raw.normalized();
    spec.d = d;
    DeadcoreMeasurement out;
    out.barrier = select_profile(spec, R);
    const double T = out.barrier.T;
    out.exact_barrier =
        out.barrier.dominant == Dominant::ExactBalance && spec.nonlinearity == NonlinearityKind::HardyHenon;

    double lo = 0.5 * T;
    double hi = 2.0 * T;
    for (int k = 0; k < 60 && integrate_ivp(spec, lo, steps).end_value() >= d; ++k) lo *= 0.5;
    for (int k = 0; k < 60 && integrate_ivp(spec, hi, steps).end_value() <= d; ++k) hi *= 2.0;
    const ShootResult shot = shoot_bvp(spec, d, lo, hi, steps);
    out.T_found = shot.T_found;
    if (!(R > out.T_found)) throw Error(ErrorCode::NoDeadCore, "numerical thickness exceeds R");
    out.rho_measured = R - out.T_found;

    const RadialBarrier barrier(out.barrier, {0.0});
    const double r_min = std::min(out.rho_measured, out.barrier.rho);
    constexpr int kSamples = 800;
    out.max_signed_deviation = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kSamples; ++i) {
        const double r = r_min + (R - r_min) * static_cast<double>(i) / kSamples;
        const double u_num = shot.solution.value_at(r - out.rho_measured);
        const double u_bar = eval_profile(barrier, r - out.barrier.rho);
        const double diff = (u_num - u_bar) / d;
        out.max_abs_deviation = std::max(out.max_abs_deviation, std::fabs(diff));
        out.max_signed_deviation = std::max(out.max_signed_deviation, diff);
    }
    for (int i = 0; i <= 100; ++i) {
        const double r = out.rho_measured * static_cast<double>(i) / 100.0;
        out.plateau_max = std::max(out.plateau_max, std::fabs(shot.solution.value_at(r - out.rho_measured)));
    }
    return out;
}

}  // namespace deadcore
