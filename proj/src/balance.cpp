#include "deadcore/balance.hpp"

#include <algorithm>
#include <cmath>

namespace deadcore {

std::string_view to_string(Dominant d) noexcept {
    switch (d) {
        case Dominant::Absorption: return "absorption";
        case Dominant::Gradient: return "gradient";
        case Dominant::ExactBalance: return "exact_balance";
    }
    return "exact_balance";
}

Dominant parse_dominant(std::string_view name) {
    if (name == "absorption") return Dominant::Absorption;
    if (name == "gradient") return Dominant::Gradient;
    if (name == "exact_balance") return Dominant::ExactBalance;
    throw Error(ErrorCode::InvalidInput, "unknown dominant term '" + std::string(name) + "'");
}

double BarrierProfile::datum() const { return scale() * std::pow(T, p); }

namespace {

// x^(1/index) for x > 0, via exp(log x / index).
double root(double log_base, double index) { return std::exp(log_base / index); }

}  // namespace

BalancePair absorption_exponents(const ModelSpec& spec) {
    if (spec.nonlinearity == NonlinearityKind::Exponential) {
        throw Error(ErrorCode::InvalidInput, "no power balance for the exponential nonlinearity");
    }
    const double b = spec.beta;
    const double g = spec.gamma;
    const double a = spec.nonlinearity == NonlinearityKind::HardyHenon ? spec.alpha : 0.0;
    const double index = 3.0 - b - g;
    if (index <= 0.0) throw Error(ErrorCode::DegenerateBalance, "3 - beta - gamma <= 0");
    if (1.0 + a + g <= 0.0) throw Error(ErrorCode::DegenerateBalance, "1 + alpha + gamma <= 0 (p <= 1)");
    if (!(spec.lambda > 0.0)) throw Error(ErrorCode::InvalidInput, "lambda must be > 0");

    BalancePair out;
    out.source = BalanceSource::Absorption;
    out.p = (4.0 - b + a) / index;
    const double log_base = std::log(spec.lambda) + (4.0 - b) * std::log(index) -
                            (3.0 - b) * std::log(4.0 - b + a) - std::log(1.0 + a + g);
    out.tau = root(log_base, index);
    return out;
}

BalancePair gradient_exponents(const ModelSpec& raw) {
    const ModelSpec spec = raw.normalized();
    const double b = spec.beta;
    const double m = spec.m;
    double q = 0.0;
    switch (spec.hamiltonian) {
        case HamiltonianKind::None:
            throw Error(ErrorCode::InvalidInput, "no gradient term to balance");
        case HamiltonianKind::GradientPower:
            if (!(spec.c > 0.0)) throw Error(ErrorCode::SignError, "gradient_power requires c > 0");
            break;
        case HamiltonianKind::PositiveMixed:
            if (!(spec.c > 0.0)) throw Error(ErrorCode::SignError, "positive_mixed requires c > 0");
            q = spec.q;
            break;
        case HamiltonianKind::NegativeMixed:
            if (!(spec.c < 0.0)) throw Error(ErrorCode::SignError, "negative_mixed requires c < 0");
            q = spec.q;
            break;
    }
    if (!(m > 0.0)) throw Error(ErrorCode::InvalidInput, "m must be > 0");
    const double index = 3.0 - m - b - q;
    if (index <= 0.0) throw Error(ErrorCode::DegenerateBalance, "3 - m - beta - q <= 0");

    BalancePair out;
    out.source = BalanceSource::Gradient;
    out.p = (4.0 - b - m) / index;
    // tau^k = |c| k^(4-m-b) / ((4-m-b)^(3-m-b) (1+q)), k = 3-m-b-q.
    const double log_base = std::log(std::fabs(spec.c)) + (4.0 - m - b) * std::log(index) -
                            (3.0 - m - b) * std::log(4.0 - m - b) - std::log1p(q);
    out.tau = root(log_base, index);
    return out;
}

LeadingProfile leading_profile(const ModelSpec& raw) {
    const ModelSpec spec = raw.normalized();
    LeadingProfile out;
    out.absorption = absorption_exponents(spec);
    if (!spec.has_gradient_term()) {
        out.p = out.absorption->p;
        out.tau = out.absorption->tau;
        out.dominant = Dominant::ExactBalance;
        return out;
    }
    out.gradient = gradient_exponents(spec);
    const double p1 = out.gradient->p;
    const double p2 = out.absorption->p;
    if (std::fabs(p1 - p2) <= 1e-12 * std::max(p1, p2)) {
        throw Error(ErrorCode::TieUnresolved, "gradient and absorption exponents coincide");
    }
    if (p1 < p2) {
        out.p = p1;
        out.tau = out.gradient->tau;
        out.dominant = Dominant::Gradient;
    } else {
        out.p = p2;
        out.tau = out.absorption->tau;
        out.dominant = Dominant::Absorption;
    }
    return out;
}

double lem_chi(const ModelSpec& spec, double T) {
    return std::pow(1.0 + T * T, -spec.alpha / (3.0 - spec.beta - spec.gamma));
}

namespace {

double solve_lem_thickness(const ModelSpec& spec, double p, double tau) {
    const double d = spec.d;
    auto excess = [&](double T) { return lem_chi(spec, T) * tau * std::pow(T, p) - d; };

    double lo = 0.0;
    double hi = std::pow(d / tau, 1.0 / p);
    int expansions = 0;
    while (excess(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++expansions > 200) {
            throw Error(ErrorCode::DegenerateBalance, "no finite dead-core thickness (weight decays too fast)");
        }
    }
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (excess(mid) < 0.0) lo = mid; else hi = mid;
        if (hi - lo <= 1e-15 * hi) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

BarrierProfile select_profile(const ModelSpec& raw, double R) {
    if (!(R > 0.0)) throw Error(ErrorCode::InvalidInput, "R must be > 0");
    if (!(raw.d > 0.0)) throw Error(ErrorCode::InvalidInput, "d must be > 0");
    const ModelSpec spec = raw.normalized();
    const LeadingProfile lead = leading_profile(spec);

    BarrierProfile out;
    out.p = lead.p;
    out.tau = lead.tau;
    out.R = R;
    out.dominant = lead.dominant;
    out.chi = 1.0;
    if (spec.nonlinearity == NonlinearityKind::LaneEmdenMatukuma && lead.dominant != Dominant::Gradient) {
        out.T = solve_lem_thickness(spec, lead.p, lead.tau);
        out.chi = lem_chi(spec, out.T);
    } else {
        out.T = std::pow(spec.d / out.tau, 1.0 / out.p);
    }
    out.rho = R - out.T;
    if (!(R > out.T)) {
        throw Error(ErrorCode::NoDeadCore, "R <= T: the dead core does not fit in the ball");
    }
    return out;
}

double lem_thickness_residual(const ModelSpec& spec, const BarrierProfile& b) {
    return std::pow(b.T, b.p) * lem_chi(spec, b.T) * b.tau - spec.d;
}

void to_json(nlohmann::json& j, const BarrierProfile& b) {
    j = nlohmann::json{{"p", b.p},     {"tau", b.tau}, {"T", b.T},
                       {"rho", b.rho}, {"R", b.R},     {"chi", b.chi},
                       {"dominant", std::string(to_string(b.dominant))}};
}

void from_json(const nlohmann::json& j, BarrierProfile& b) {
    BarrierProfile out;
    out.p = j.at("p").get<double>();
    out.tau = j.at("tau").get<double>();
    out.T = j.at("T").get<double>();
    out.rho = j.at("rho").get<double>();
    out.R = j.at("R").get<double>();
    out.chi = j.at("chi").get<double>();
    out.dominant = parse_dominant(j.at("dominant").get<std::string>());
    b = out;
}

}  // namespace deadcore
