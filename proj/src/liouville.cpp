#include "deadcore/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "deadcore/balance.hpp"
#include "deadcore/radial.hpp"

namespace deadcore {

double Threshold::denominator(double R) const {
    double den = std::pow(R, exponent);
    if (weight_power != 0.0) den *= std::pow(1.0 + R * R, weight_power);
    return den;
}

Threshold threshold(const ModelSpec& raw) {
    if (raw.nonlinearity == NonlinearityKind::Exponential) {
        throw Error(ErrorCode::UnsupportedForThreshold,
                    "the exponential nonlinearity has no growth threshold; use the oscillation criterion");
    }
    const ModelSpec spec = raw.normalized();
    const LeadingProfile lead = leading_profile(spec);
    Threshold t;
    t.exponent = lead.p;
    t.theta = lead.tau;
    if (spec.nonlinearity == NonlinearityKind::LaneEmdenMatukuma) {
        t.which = LiouvilleCase::LaneEmdenMatukuma;
        t.weight_power = -spec.alpha / (3.0 - spec.beta - spec.gamma);
    } else {
        t.which = spec.has_gradient_term() ? LiouvilleCase::WithGradient : LiouvilleCase::PurePower;
    }
    return t;
}

double growth_ratio(const std::vector<GrowthSample>& samples, double exponent, std::optional<double> weight_power) {
    if (samples.size() < 3) throw Error(ErrorCode::InsufficientData, "growth_ratio needs at least 3 samples");
    for (std::size_t k = 0; k < samples.size(); ++k) {
        if (!(samples[k].R > 0.0)) throw Error(ErrorCode::InvalidInput, "radii must be > 0");
        if (!(samples[k].sup >= 0.0)) throw Error(ErrorCode::InvalidInput, "sup values must be >= 0");
        if (k > 0 && !(samples[k].R > samples[k - 1].R)) {
            throw Error(ErrorCode::InvalidInput, "radii must be strictly increasing");
        }
    }
    Threshold shape;
    shape.exponent = exponent;
    shape.weight_power = weight_power.value_or(0.0);
    double best = 0.0;
    for (std::size_t k = samples.size() / 2; k < samples.size(); ++k) {
        best = std::max(best, samples[k].sup / shape.denominator(samples[k].R));
    }
    return best;
}

std::string_view to_string(Classification c) noexcept {
    switch (c) {
        case Classification::Subcritical: return "subcritical";
        case Classification::AtThreshold: return "at_threshold";
        case Classification::AboveThreshold: return "above_threshold";
    }
    return "above_threshold";
}

LiouvilleVerdict classify(const ModelSpec& spec, const std::vector<GrowthSample>& samples, double tolerance) {
    if (!(tolerance > 0.0 && tolerance < 1.0)) throw Error(ErrorCode::InvalidInput, "tolerance must lie in (0, 1)");
    LiouvilleVerdict v;
    v.threshold = threshold(spec);
    v.tolerance = tolerance;
    v.measured_ratio = growth_ratio(samples, v.threshold.exponent, v.threshold.weight_power);
    const double theta = v.threshold.theta;
    if (std::fabs(v.measured_ratio - theta) <= tolerance * theta) {
        v.classification = Classification::AtThreshold;
        v.note = "estimate: growth matches the sharpness witness; the Liouville conclusion does not apply";
    } else if (v.measured_ratio < theta) {
        v.classification = Classification::Subcritical;
        v.note = "estimate: Liouville applies; the candidate must vanish identically if it is a genuine solution";
    } else {
        v.classification = Classification::AboveThreshold;
        v.note = "estimate: growth exceeds the threshold; nontrivial solutions are not excluded";
    }
    if (v.threshold.which == LiouvilleCase::LaneEmdenMatukuma) {
        v.note += "; threshold uses tau* without the barrier factor chi";
    }
    return v;
}

std::vector<GrowthSample> witness_samples(const Threshold& th, double scale, const std::vector<double>& radii) {
    std::vector<GrowthSample> out;
    out.reserve(radii.size());
    for (double R : radii) out.push_back({R, scale * th.theta * th.denominator(R)});
    return out;
}

std::vector<PlateauRow> deadcore_consistency(const ModelSpec& raw, const std::vector<double>& radii, double phi,
                                             int steps) {
    if (!(phi > 0.0 && phi < 1.0)) throw Error(ErrorCode::InvalidInput, "Phi must lie in (0, 1)");
    const ModelSpec spec = raw.normalized();
    const Threshold th = threshold(spec);
    std::vector<PlateauRow> rows;
    for (double R : radii) {
        if (!(R > 0.0)) throw Error(ErrorCode::InvalidInput, "ladder radii must be > 0");
        PlateauRow row;
        row.R = R;
        row.d = phi * th.theta * th.denominator(R);
        row.predicted_fraction = 1.0 - std::pow(phi, 1.0 / th.exponent);
        row.predicted_plateau = R * row.predicted_fraction;
        const DeadcoreMeasurement meas = measure_deadcore(spec, R, row.d, steps);
        row.measured_plateau = meas.rho_measured;
        row.measured_fraction = meas.rho_measured / R;
        row.relative_error = std::fabs(row.measured_fraction - row.predicted_fraction) / row.predicted_fraction;
        rows.push_back(row);
    }
    return rows;
}

OscResult osc_criterion(const std::vector<OscSample>& samples, double tolerance) {
    if (samples.size() < 3) throw Error(ErrorCode::InsufficientData, "osc_criterion needs at least 3 samples");
    OscResult out;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto& s = samples[k];
        if (!(s.R > 0.0)) throw Error(ErrorCode::InvalidInput, "radii must be > 0");
        if (k > 0 && !(s.R > samples[k - 1].R)) throw Error(ErrorCode::InvalidInput, "radii must be increasing");
        if (!(s.sup >= s.inf)) throw Error(ErrorCode::InvalidInput, "sup must be >= inf");
        out.ratios.push_back((s.sup - s.inf) / s.R);
    }
    bool decreasing = true;
    for (std::size_t k = out.ratios.size() / 2 + 1; k < out.ratios.size(); ++k) {
        if (out.ratios[k] > out.ratios[k - 1]) decreasing = false;
    }
    out.consistent = decreasing && out.ratios.back() < tolerance;
    return out;
}

CounterexampleResult exp_counterexample_residual(double beta, double m, double alpha, double lambda, double gamma,
                                                 const std::vector<double>& radii) {
    if (!(beta >= 0.0 && beta < 2.0)) throw Error(ErrorCode::InvalidInput, "need 0 <= beta < 2");
    if (!(m > 0.0 && m <= 2.0 - beta)) throw Error(ErrorCode::InvalidInput, "need 0 < m <= 2 - beta");
    if (!(alpha > -1.0 && alpha <= 0.0)) throw Error(ErrorCode::InvalidInput, "need -1 < alpha <= 0");
    if (!(lambda > 0.0) || !(gamma >= 0.0)) throw Error(ErrorCode::InvalidInput, "need lambda > 0, gamma >= 0");
    if (radii.empty()) throw Error(ErrorCode::InvalidInput, "radius grid is empty");

    CounterexampleResult out;
    out.a = std::pow(2.0, 3.0 - beta - m - alpha);
    out.max_residual = -std::numeric_limits<double>::infinity();
    for (double r : radii) {
        if (!(r >= 0.0)) throw Error(ErrorCode::InvalidInput, "radii must be >= 0");
        const double e = std::exp(-r * r);
        const double u = 1.0 - e;
        const double lap = std::pow(2.0, 3.0 - beta) * std::pow(r, 2.0 - beta) * std::exp((beta - 3.0) * r * r) *
                           (1.0 - 2.0 * r * r);
        const double grad = 2.0 * r * e;
        const double ham = out.a * std::pow(r + 1.0, alpha) * std::pow(grad, m);
        const double src = lambda * (gamma == 0.0 ? 1.0 : std::pow(std::fabs(u), gamma)) * std::exp(u);
        const double res = lap - ham - src;
        out.residuals.push_back(res);
        if (res > out.max_residual) {
            out.max_residual = res;
            out.argmax_r = r;
        }
    }
    return out;
}

namespace {

std::string_view case_name(LiouvilleCase c) {
    switch (c) {
        case LiouvilleCase::PurePower: return "pure_power";
        case LiouvilleCase::WithGradient: return "with_gradient";
        case LiouvilleCase::LaneEmdenMatukuma: return "lane_emden_matukuma";
    }
    return "pure_power";
}

}  // namespace

void to_json(nlohmann::json& j, const Threshold& t) {
    j = nlohmann::json{{"exponent", t.exponent},
                       {"theta", t.theta},
                       {"weight_power", t.weight_power},
                       {"case", std::string(case_name(t.which))}};
}

void to_json(nlohmann::json& j, const LiouvilleVerdict& v) {
    j = nlohmann::json{{"threshold", v.threshold},
                       {"measured_ratio", v.measured_ratio},
                       {"tolerance", v.tolerance},
                       {"classification", std::string(to_string(v.classification))},
                       {"note", v.note}};
}

}  // namespace deadcore
