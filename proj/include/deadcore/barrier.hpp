#pragma once

#include <span>
#include <string>
#include <vector>

#include "deadcore/balance.hpp"
#include "deadcore/model.hpp"

namespace deadcore {

// u(x) = h(|x - x0| - rho), h(s) = chi tau s^p for s > 0 and 0 on the plateau.
struct RadialBarrier {
    BarrierProfile profile;
    std::vector<double> center;

    RadialBarrier(BarrierProfile profile_, std::vector<double> center_);
    [[nodiscard]] std::size_t dimension() const noexcept { return center.size(); }
};

double eval_profile(const RadialBarrier& b, double s);
double eval_profile_derivative(const RadialBarrier& b, double s);
double eval_profile_second_derivative(const RadialBarrier& b, double s);

// Lambda [|x-x0| - R + (d/Lambda)^(1/p)]_+^p with Lambda = chi tau.
double eval_barrier(const RadialBarrier& b, std::span<const double> x);

struct BarrierValue {
    double value = 0.0;
    bool extended = false;  // |x - x0| > R: value comes from the extension outside B_R
};

BarrierValue eval_barrier_checked(const RadialBarrier& b, std::span<const double> x);

struct ResidualSample {
    double s = 0.0;
    double lhs = 0.0;           // (h')^(2-b) h''
    double balanced_rhs = 0.0;  // the term the profile was balanced against
    double other_rhs = 0.0;     // remaining right-hand term of the full equation
    double residual = 0.0;      // lhs - balanced_rhs
    [[nodiscard]] double ratio_other_over_lhs() const noexcept { return lhs != 0.0 ? other_rhs / lhs : 0.0; }
};

// Pointwise check of the radial ODE on the profile. For Lane-Emden-Matukuma
// the absorption term is balanced with the weight frozen at its worst case
// (1+T^2)^(-alpha); other_rhs then holds the gradient term plus the gain
// lambda (phi(s) - phi(T)) h^gamma.
std::vector<ResidualSample> ode_residual(const ModelSpec& spec, const RadialBarrier& b,
                                         std::span<const double> s_samples);

std::string residual_csv(std::span<const ResidualSample> rows);

struct SupersolutionReport {
    bool holds = false;
    double worst_margin = 0.0;  // min over samples of (rhs - lhs) with the full right-hand side
    double worst_s = 0.0;
};

// lhs <= cH + lambda f at `samples` points s_i = s_max i / samples.
SupersolutionReport supersolution_check(const ModelSpec& spec, const RadialBarrier& b, double s_max,
                                        int samples);

// N_k < Lambda R_k^p for each (R_k, N_k).
struct PlateauSample {
    double R = 0.0;
    double sup = 0.0;
};
std::vector<bool> plateau_test(std::span<const PlateauSample> samples, const BarrierProfile& profile);

// Boundary barrier chi(x) = |x|^a - r1^a with a = m / (2(m+q)).
struct BoundaryBarrierParams {
    double beta = 0.0;
    double c = 1.0;  // magnitude of the Hamiltonian coefficient
    double m = 1.0;
    double q = 0.0;
    double r1 = 1.0;
};

struct BoundaryBarrierValue {
    double exponent = 0.0;  // a
    double chi = 0.0;
    double operator_term = 0.0;  // a^(3-b) |x|^((3-b)a-4+b) (a-1)
    double drift_gradient = 0.0;        // operator_term - c a^m |x|^((a-1)m)
    double drift_negative_mixed = 0.0;  // operator_term + (-c) chi^q a^m |x|^((a-1)m)
    double drift_positive_mixed = 0.0;  // operator_term - c chi^q a^m |x|^((a-1)m)
};

BoundaryBarrierValue boundary_barrier_chi(const BoundaryBarrierParams& params, std::span<const double> x);

struct NegativityRegion {
    bool found = false;
    double psi = 0.0;
    int halvings = 0;
};

// Largest psi = 0.1 r1 / 2^k (k <= 10) such that all three drifts are <= 0
// on |x| in [r1, r1 + psi], sampled at `samples` radii.
NegativityRegion boundary_negativity_region(const BoundaryBarrierParams& params, int samples = 64);

}  // namespace deadcore
