#include "deadcore/barrier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace deadcore {

RadialBarrier::RadialBarrier(BarrierProfile profile_, std::vector<double> center_)
    : profile(profile_), center(std::move(center_)) {
    if (center.empty()) throw Error(ErrorCode::InvalidInput, "barrier center must have dimension >= 1");
    if (!(profile.p > 1.0) || !(profile.tau > 0.0) || !(profile.chi > 0.0)) {
        throw Error(ErrorCode::InvalidInput, "barrier profile needs p > 1, tau > 0, chi > 0");
    }
}

double eval_profile(const RadialBarrier& b, double s) {
    if (s <= 0.0) return 0.0;
    return b.profile.scale() * std::pow(s, b.profile.p);
}

double eval_profile_derivative(const RadialBarrier& b, double s) {
    if (s <= 0.0) return 0.0;
    const auto& pr = b.profile;
    return pr.scale() * pr.p * std::pow(s, pr.p - 1.0);
}

double eval_profile_second_derivative(const RadialBarrier& b, double s) {
    if (s <= 0.0) throw Error(ErrorCode::SingularPoint, "h'' is evaluated only for s > 0");
    const auto& pr = b.profile;
    return pr.scale() * pr.p * (pr.p - 1.0) * std::pow(s, pr.p - 2.0);
}

namespace {

double distance_to_center(const RadialBarrier& b, std::span<const double> x) {
    if (x.size() != b.dimension()) throw Error(ErrorCode::InvalidInput, "point dimension mismatch");
    double r2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - b.center[i];
        r2 += dx * dx;
    }
    return std::sqrt(r2);
}

}  // namespace

BarrierValue eval_barrier_checked(const RadialBarrier& b, std::span<const double> x) {
    const double r = distance_to_center(b, x);
    const auto& pr = b.profile;
    const double shift = r - pr.R + pr.T;  // = r - rho
    return {eval_profile(b, shift), r > pr.R};
}

double eval_barrier(const RadialBarrier& b, std::span<const double> x) {
    return eval_barrier_checked(b, x).value;
}

std::vector<ResidualSample> ode_residual(const ModelSpec& raw, const RadialBarrier& b,
                                         std::span<const double> s_samples) {
    const ModelSpec spec = raw.normalized();
    const auto& pr = b.profile;
    const bool lem = spec.nonlinearity == NonlinearityKind::LaneEmdenMatukuma;
    std::vector<ResidualSample> rows;
    rows.reserve(s_samples.size());
    for (const double s : s_samples) {
        if (s == 0.0) throw Error(ErrorCode::SingularPoint, "the radial ODE is checked only for s > 0");
        if (!(s > 0.0)) throw Error(ErrorCode::InvalidInput, "sample radius must be > 0");
        const double h = eval_profile(b, s);
        const double hp = eval_profile_derivative(b, s);
        const double hpp = eval_profile_second_derivative(b, s);

        ResidualSample row;
        row.s = s;
        row.lhs = std::pow(hp, 2.0 - spec.beta) * hpp;
        const double gradient = eval_hamiltonian(spec, h, hp);
        const double absorption = eval_nonlinearity(spec, s, h);
        if (pr.dominant == Dominant::Gradient) {
            row.balanced_rhs = gradient;
            row.other_rhs = absorption;
        } else if (lem) {
            const double frozen = eval_nonlinearity(spec, pr.T, h);
            row.balanced_rhs = frozen;
            row.other_rhs = gradient + (absorption - frozen);
        } else {
            row.balanced_rhs = absorption;
            row.other_rhs = gradient;
        }
        row.residual = row.lhs - row.balanced_rhs;
        rows.push_back(row);
    }
    return rows;
}

std::string residual_csv(std::span<const ResidualSample> rows) {
    std::string out = "s,lhs,balanced_rhs,other_rhs,residual,ratio_other_over_lhs\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", r.s, r.lhs, r.balanced_rhs,
                      r.other_rhs, r.residual, r.ratio_other_over_lhs());
        out += buf;
    }
    return out;
}

SupersolutionReport supersolution_check(const ModelSpec& raw, const RadialBarrier& b, double s_max,
                                        int samples) {
    if (samples < 2) throw Error(ErrorCode::InvalidInput, "need at least 2 samples");
    if (!(s_max > 0.0) || s_max > b.profile.T * (1.0 + 1e-12)) {
        throw Error(ErrorCode::InvalidInput, "s_max must lie in (0, T]");
    }
    const ModelSpec spec = raw.normalized();
    SupersolutionReport report;
    report.holds = true;
    report.worst_margin = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= samples; ++i) {
        const double s = s_max * static_cast<double>(i) / samples;
        const double h = eval_profile(b, s);
        const double hp = eval_profile_derivative(b, s);
        const double lhs = std::pow(hp, 2.0 - spec.beta) * eval_profile_second_derivative(b, s);
        const double rhs = eval_hamiltonian(spec, h, hp) + eval_nonlinearity(spec, s, h);
        const double margin = rhs - lhs;
        // Exact single-term balances cancel only up to rounding.
        if (margin < -1e-10 * std::max({std::fabs(lhs), std::fabs(rhs), 1e-300})) report.holds = false;
        if (margin < report.worst_margin) {
            report.worst_margin = margin;
            report.worst_s = s;
        }
    }
    return report;
}

std::vector<bool> plateau_test(std::span<const PlateauSample> samples, const BarrierProfile& profile) {
    std::vector<bool> out;
    out.reserve(samples.size());
    for (const auto& smp : samples) {
        if (!(smp.sup >= 0.0)) throw Error(ErrorCode::InvalidInput, "sup of a candidate must be >= 0");
        out.push_back(smp.sup < profile.scale() * std::pow(smp.R, profile.p));
    }
    return out;
}

BoundaryBarrierValue boundary_barrier_chi(const BoundaryBarrierParams& prm, std::span<const double> x) {
    if (!(prm.r1 > 0.0)) throw Error(ErrorCode::InvalidInput, "r1 must be > 0");
    if (!(prm.m > 0.0) || !(prm.q >= 0.0)) throw Error(ErrorCode::InvalidInput, "need m > 0, q >= 0");
    double r2 = 0.0;
    for (double xi : x) r2 += xi * xi;
    const double r = std::sqrt(r2);
    if (r < prm.r1) throw Error(ErrorCode::DomainError, "|x| must be >= r1");

    BoundaryBarrierValue v;
    const double a = prm.m / (2.0 * (prm.m + prm.q));
    const double b = prm.beta;
    v.exponent = a;
    v.chi = std::max(0.0, std::pow(r, a) - std::pow(prm.r1, a));
    v.operator_term = std::pow(a, 3.0 - b) * std::pow(r, (3.0 - b) * a - 4.0 + b) * (a - 1.0);
    const double grad_m = std::pow(a, prm.m) * std::pow(r, (a - 1.0) * prm.m);
    const double chi_q = std::pow(v.chi, prm.q);
    const double c = std::fabs(prm.c);
    v.drift_gradient = v.operator_term - c * grad_m;
    v.drift_negative_mixed = v.operator_term + (-c) * chi_q * grad_m;
    v.drift_positive_mixed = v.operator_term - c * chi_q * grad_m;
    return v;
}

NegativityRegion boundary_negativity_region(const BoundaryBarrierParams& prm, int samples) {
    NegativityRegion out;
    double psi = 0.1 * prm.r1;
    for (int k = 0; k <= 10; ++k, psi *= 0.5) {
        bool ok = true;
        for (int i = 0; i <= samples && ok; ++i) {
            const double point[1] = {prm.r1 + psi * static_cast<double>(i) / samples};
            const auto v = boundary_barrier_chi(prm, point);
            ok = v.drift_gradient <= 0.0 && v.drift_negative_mixed <= 0.0 && v.drift_positive_mixed <= 0.0;
        }
        if (ok) {
            out.found = true;
            out.psi = psi;
            out.halvings = k;
            return out;
        }
    }
    return out;
}

}  // namespace deadcore
