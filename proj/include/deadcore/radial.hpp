#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deadcore/balance.hpp"
#include "deadcore/model.hpp"

namespace deadcore {

// How the Lane-Emden-Matukuma weight enters the radial ODE.
//   Shifted       : phi(s) = (1+s^2)^(-alpha), the actual equation.
//   FrozenAtLength: phi(L) with L the integration length, the worst case the
//                   closed-form thickness is built on.
enum class WeightMode { Shifted, FrozenAtLength };

struct RadialOptions {
    WeightMode weight = WeightMode::Shifted;
    double blowup = 1e12;
};

struct RadialSeed {
    double h0 = 0.0;
    double hp0 = 0.0;
};

struct RadialSolution {
    std::vector<double> s_grid;
    std::vector<double> h_vals;
    std::vector<double> hp_vals;
    std::vector<double> residual;  // relative ODE residual at nodes (0 at the end points)
    std::optional<double> measured_T;
    double max_residual = 0.0;
    ModelSpec spec;

    // Cubic Hermite interpolation of h (0 for s <= 0, linear extension past the end).
    [[nodiscard]] double value_at(double s) const;
    [[nodiscard]] double end_value() const { return h_vals.back(); }
    [[nodiscard]] std::string to_csv() const;
};

// Integrates (h')^(2-b) h'' = cH(h,h') + lambda f(s,h) on [0, s_end].
// A (0,0) seed starts on the dead-core branch: the first cell is the leading
// power profile and the rest is classical RK4 in t = log s, with sub-steps
// no longer than 2/steps in t.
RadialSolution integrate_ivp(const ModelSpec& spec, double s_end, int steps, RadialSeed seed = {},
                             const RadialOptions& options = {});

// Richardson estimate |h_N(s_end) - h_{N/2}(s_end)| / 15 of the error at s_end.
double richardson_error(const ModelSpec& spec, double s_end, int steps, const RadialOptions& options = {});

struct ShootResult {
    double T_found = 0.0;
    RadialSolution solution;
    int iterations = 0;
};

// Bisection on the integration length L until |h(L) - d| <= 1e-8 d.
ShootResult shoot_bvp(const ModelSpec& spec, double d, double lo, double hi, int steps = 2000,
                      const RadialOptions& options = {});

struct DeadcoreMeasurement {
    BarrierProfile barrier;
    double T_found = 0.0;
    double rho_measured = 0.0;
    double max_abs_deviation = 0.0;     // max |u_num - u_barrier| / d on the annulus
    double max_signed_deviation = 0.0;  // max (u_num - u_barrier) / d; <= 0 for a supersolution barrier
    double plateau_max = 0.0;           // max |u_num| on the measured plateau
    bool exact_barrier = false;         // the barrier solves the equation exactly
};

DeadcoreMeasurement measure_deadcore(const ModelSpec& spec, double R, double d, int steps = 2000);

}  // namespace deadcore
