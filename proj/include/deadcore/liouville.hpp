#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "deadcore/model.hpp"

namespace deadcore {

enum class LiouvilleCase { PurePower, WithGradient, LaneEmdenMatukuma };

// limsup u / denominator(|x|) < theta forces u = 0, with
// denominator(R) = R^exponent (1 + R^2)^weight_power (weight_power = 0 outside the LEM case).
struct Threshold {
    double exponent = 0.0;
    double theta = 0.0;
    double weight_power = 0.0;
    LiouvilleCase which = LiouvilleCase::PurePower;

    [[nodiscard]] double denominator(double R) const;
};

Threshold threshold(const ModelSpec& spec);

struct GrowthSample {
    double R = 0.0;
    double sup = 0.0;
};

// Max of sup_k / denominator(R_k) over the tail half k >= floor(n/2).
double growth_ratio(const std::vector<GrowthSample>& samples, double exponent, std::optional<double> weight_power = {});

enum class Classification { Subcritical, AtThreshold, AboveThreshold };
std::string_view to_string(Classification c) noexcept;

inline constexpr double kAnalyticTolerance = 1e-6;
inline constexpr double kNumericalTolerance = 1e-2;

struct LiouvilleVerdict {
    Threshold threshold;
    double measured_ratio = 0.0;
    double tolerance = kAnalyticTolerance;
    Classification classification = Classification::Subcritical;
    std::string note;
};

LiouvilleVerdict classify(const ModelSpec& spec, const std::vector<GrowthSample>& samples,
                          double tolerance = kAnalyticTolerance);

// sup_k = scale * theta * denominator(R_k): the sharpness witness for scale = 1.
std::vector<GrowthSample> witness_samples(const Threshold& th, double scale, const std::vector<double>& radii);

struct PlateauRow {
    double R = 0.0;
    double d = 0.0;
    double predicted_plateau = 0.0;  // R (1 - Phi^(1/p))
    double measured_plateau = 0.0;
    double predicted_fraction = 0.0;
    double measured_fraction = 0.0;
    double relative_error = 0.0;  // |measured - predicted| / predicted fraction
};

// Boundary datum d(R) = Phi theta R^p; plateau radius from the radial shooting solver.
std::vector<PlateauRow> deadcore_consistency(const ModelSpec& spec, const std::vector<double>& radii, double phi,
                                             int steps = 2000);

struct OscSample {
    double R = 0.0;
    double sup = 0.0;
    double inf = 0.0;
};

struct OscResult {
    std::vector<double> ratios;  // (sup - inf) / R
    bool consistent = false;     // tail half non-increasing and last ratio < tolerance
};

inline constexpr double kOscTolerance = 0.2;

OscResult osc_criterion(const std::vector<OscSample>& samples, double tolerance = kOscTolerance);

struct CounterexampleResult {
    double a = 0.0;  // 2^(3-b-m-alpha)
    double max_residual = 0.0;
    double argmax_r = 0.0;
    std::vector<double> residuals;
};

// Residual of u = 1 - exp(-r^2) in Delta_inf^b u - a (r+1)^alpha |Du|^m - lambda |u|^gamma e^u.
CounterexampleResult exp_counterexample_residual(double beta, double m, double alpha, double lambda, double gamma,
                                                 const std::vector<double>& radii);

void to_json(nlohmann::json& j, const Threshold& t);
void to_json(nlohmann::json& j, const LiouvilleVerdict& v);

}  // namespace deadcore
