#include "deadcore/model.hpp"

#include <cmath>
#include <sstream>

namespace deadcore {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::SingularPoint: return "SingularPoint";
        case ErrorCode::DegenerateBalance: return "DegenerateBalance";
        case ErrorCode::SignError: return "SignError";
        case ErrorCode::TieUnresolved: return "TieUnresolved";
        case ErrorCode::NoDeadCore: return "NoDeadCore";
        case ErrorCode::DegenerateGradient: return "DegenerateGradient";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::BracketError: return "BracketError";
        case ErrorCode::NotConverged: return "NotConverged";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::UnsupportedForThreshold: return "UnsupportedForThreshold";
    }
    return "Unknown";
}

std::string_view to_string(HamiltonianKind kind) noexcept {
    switch (kind) {
        case HamiltonianKind::None: return "none";
        case HamiltonianKind::GradientPower: return "gradient_power";
        case HamiltonianKind::NegativeMixed: return "negative_mixed";
        case HamiltonianKind::PositiveMixed: return "positive_mixed";
    }
    return "none";
}

std::string_view to_string(NonlinearityKind kind) noexcept {
    switch (kind) {
        case NonlinearityKind::HardyHenon: return "hardy_henon";
        case NonlinearityKind::LaneEmdenMatukuma: return "lane_emden_matukuma";
        case NonlinearityKind::Exponential: return "exponential";
    }
    return "hardy_henon";
}

HamiltonianKind parse_hamiltonian(std::string_view name) {
    if (name == "none") return HamiltonianKind::None;
    if (name == "gradient_power") return HamiltonianKind::GradientPower;
    if (name == "negative_mixed") return HamiltonianKind::NegativeMixed;
    if (name == "positive_mixed") return HamiltonianKind::PositiveMixed;
    throw Error(ErrorCode::InvalidInput, "unknown hamiltonian '" + std::string(name) + "'");
}

NonlinearityKind parse_nonlinearity(std::string_view name) {
    if (name == "hardy_henon") return NonlinearityKind::HardyHenon;
    if (name == "lane_emden_matukuma" || name == "lem") return NonlinearityKind::LaneEmdenMatukuma;
    if (name == "exponential") return NonlinearityKind::Exponential;
    throw Error(ErrorCode::InvalidInput, "unknown nonlinearity '" + std::string(name) + "'");
}

ModelSpec ModelSpec::normalized() const {
    ModelSpec out = *this;
    if (q == 0.0) {
        if (hamiltonian == HamiltonianKind::NegativeMixed) {
            out.hamiltonian = HamiltonianKind::GradientPower;
            out.c = -c;
        } else if (hamiltonian == HamiltonianKind::PositiveMixed) {
            out.hamiltonian = HamiltonianKind::GradientPower;
        }
    }
    return out;
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

void require_finite(const ModelSpec& s) {
    const std::pair<const char*, double> fields[] = {
        {"beta", s.beta}, {"m", s.m}, {"q", s.q}, {"gamma", s.gamma},
        {"alpha", s.alpha}, {"lambda", s.lambda}, {"c", s.c}, {"d", s.d}};
    for (const auto& [name, v] : fields) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::InvalidInput, std::string("non-finite parameter ") + name);
        }
    }
}

struct Checker {
    ValidationReport& out;

    void less(const std::string& name, double value, double bound) {
        if (!(value < bound))
            out.push_back({name, value, bound, name + " fails: " + fmt(value) + " not < " + fmt(bound)});
    }
    void less_eq(const std::string& name, double value, double bound) {
        if (!(value <= bound))
            out.push_back({name, value, bound, name + " fails: " + fmt(value) + " not <= " + fmt(bound)});
    }
    void greater(const std::string& name, double value, double bound) {
        if (!(value > bound))
            out.push_back({name, value, bound, name + " fails: " + fmt(value) + " not > " + fmt(bound)});
    }
    void greater_eq(const std::string& name, double value, double bound) {
        if (!(value >= bound))
            out.push_back({name, value, bound, name + " fails: " + fmt(value) + " not >= " + fmt(bound)});
    }
};

bool is_mixed(HamiltonianKind k) {
    return k == HamiltonianKind::NegativeMixed || k == HamiltonianKind::PositiveMixed;
}

}  // namespace

double lem_alpha_bound(const ModelSpec& spec) {
    const double b = spec.beta;
    if (spec.hamiltonian == HamiltonianKind::None) return (4.0 - b) / 2.0;
    return (4.0 - b - spec.m) * (3.0 - b - spec.gamma) / (2.0 * (3.0 - b - spec.m));
}

ValidationReport validate_admissible(const ModelSpec& raw) {
    require_finite(raw);
    const ModelSpec s = raw.normalized();
    ValidationReport report;
    Checker check{report};

    check.greater_eq("beta >= 0", s.beta, 0.0);
    check.less_eq("beta <= 2", s.beta, 2.0);
    check.greater("lambda > 0", s.lambda, 0.0);
    check.greater("d > 0", s.d, 0.0);
    check.greater_eq("q >= 0", s.q, 0.0);
    check.greater_eq("gamma >= 0", s.gamma, 0.0);

    switch (s.hamiltonian) {
        case HamiltonianKind::None: break;
        case HamiltonianKind::GradientPower:
        case HamiltonianKind::PositiveMixed: check.greater("c > 0", s.c, 0.0); break;
        case HamiltonianKind::NegativeMixed: check.less("c < 0", s.c, 0.0); break;
    }

    if (s.nonlinearity == NonlinearityKind::Exponential) {
        if (s.hamiltonian != HamiltonianKind::GradientPower) {
            report.push_back({"hamiltonian == gradient_power", 0.0, 0.0,
                              "exponential nonlinearity requires the gradient_power Hamiltonian"});
        }
        check.greater("m > 0", s.m, 0.0);
        check.less_eq("m <= 2-beta", s.m, 2.0 - s.beta);
        check.greater("alpha > -1", s.alpha, -1.0);
        check.less_eq("alpha <= 0", s.alpha, 0.0);
        return report;
    }

    if (s.has_gradient_term()) {
        check.greater("m > 0", s.m, 0.0);
        check.less("m < 3-beta", s.m, 3.0 - s.beta);
        if (is_mixed(s.hamiltonian)) check.less("m+q+beta < 3", s.m + s.q + s.beta, 3.0);
    }
    check.less("gamma < 3-beta", s.gamma, 3.0 - s.beta);

    if (s.nonlinearity == NonlinearityKind::HardyHenon) {
        check.greater("alpha > -1-gamma", s.alpha, -1.0 - s.gamma);
    } else {
        check.greater_eq("alpha >= 0", s.alpha, 0.0);
        // The bound is undefined when 3-beta-m <= 0 (already reported above).
        if (!s.has_gradient_term() || 3.0 - s.beta - s.m > 0.0) {
            const std::string name = s.has_gradient_term()
                                         ? "alpha < (4-beta-m)(3-beta-gamma)/(2(3-beta-m))"
                                         : "alpha < (4-beta)/2";
            check.less(name, s.alpha, lem_alpha_bound(s));
        }
    }
    return report;
}

void require_admissible(const ModelSpec& spec) {
    const auto report = validate_admissible(spec);
    if (report.empty()) return;
    std::string msg = "inadmissible model:";
    for (const auto& v : report) msg += " [" + v.message + "]";
    throw Error(ErrorCode::InvalidInput, msg);
}

double positive_power(double u, double gamma) noexcept {
    if (u <= 0.0) return 0.0;
    return std::pow(u, gamma);
}

double eval_hamiltonian(const ModelSpec& spec, double u_val, double grad_norm) {
    if (!(grad_norm >= 0.0)) throw Error(ErrorCode::InvalidInput, "gradient norm must be >= 0");
    switch (spec.hamiltonian) {
        case HamiltonianKind::None: return 0.0;
        case HamiltonianKind::GradientPower: return spec.c * std::pow(grad_norm, spec.m);
        case HamiltonianKind::NegativeMixed:
        case HamiltonianKind::PositiveMixed: {
            if (u_val < 0.0 && spec.q != std::floor(spec.q)) {
                throw Error(ErrorCode::DomainError, "u^q undefined for u < 0 and non-integer q");
            }
            const double mag = std::pow(u_val, spec.q) * std::pow(grad_norm, spec.m);
            return spec.hamiltonian == HamiltonianKind::NegativeMixed ? -spec.c * mag : spec.c * mag;
        }
    }
    return 0.0;
}

double eval_nonlinearity(const ModelSpec& spec, double s, double u_val) {
    switch (spec.nonlinearity) {
        case NonlinearityKind::HardyHenon: {
            if (s < 0.0) throw Error(ErrorCode::InvalidInput, "radius shift must be >= 0");
            if (s == 0.0 && spec.alpha < 0.0) {
                throw Error(ErrorCode::SingularPoint, "s^alpha is singular at s = 0 for alpha < 0");
            }
            const double up = positive_power(u_val, spec.gamma);
            if (up == 0.0) return 0.0;
            return spec.lambda * std::pow(s, spec.alpha) * up;
        }
        case NonlinearityKind::LaneEmdenMatukuma: {
            const double up = positive_power(u_val, spec.gamma);
            if (up == 0.0) return 0.0;
            return spec.lambda * std::pow(1.0 + s * s, -spec.alpha) * up;
        }
        case NonlinearityKind::Exponential:
            return spec.lambda * std::pow(std::fabs(u_val), spec.gamma) * std::exp(u_val);
    }
    return 0.0;
}

void to_json(nlohmann::json& j, const ModelSpec& s) {
    j = nlohmann::json{{"beta", s.beta},
                       {"m", s.m},
                       {"q", s.q},
                       {"gamma", s.gamma},
                       {"alpha", s.alpha},
                       {"lambda", s.lambda},
                       {"c", s.c},
                       {"d", s.d},
                       {"hamiltonian", std::string(to_string(s.hamiltonian))},
                       {"nonlinearity", std::string(to_string(s.nonlinearity))}};
}

void from_json(const nlohmann::json& j, ModelSpec& s) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "model spec must be a JSON object");
    ModelSpec out;
    auto num = [&](const char* key, double& dst) {
        if (!j.contains(key)) return;
        if (!j.at(key).is_number()) throw Error(ErrorCode::InvalidInput, std::string("key '") + key + "' must be a number");
        dst = j.at(key).get<double>();
    };
    num("beta", out.beta);
    num("m", out.m);
    num("q", out.q);
    num("gamma", out.gamma);
    num("alpha", out.alpha);
    num("lambda", out.lambda);
    num("c", out.c);
    num("d", out.d);
    if (j.contains("hamiltonian")) out.hamiltonian = parse_hamiltonian(j.at("hamiltonian").get<std::string>());
    if (j.contains("nonlinearity")) out.nonlinearity = parse_nonlinearity(j.at("nonlinearity").get<std::string>());
    s = out;
}

}  // namespace deadcore
