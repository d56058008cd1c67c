#pragma once

#include <optional>
#include <string_view>

#include <json.hpp>

#include "deadcore/model.hpp"

namespace deadcore {

enum class BalanceSource { Absorption, Gradient };

// Exponent/scale of a single-term power profile h(s) = tau * s^p.
struct BalancePair {
    double p = 0.0;
    double tau = 0.0;
    BalanceSource source = BalanceSource::Absorption;
};

// Which right-hand term the selected profile matches exactly.
// ExactBalance: no gradient term, so the profile solves the full radial ODE.
enum class Dominant { Absorption, Gradient, ExactBalance };

std::string_view to_string(Dominant d) noexcept;
Dominant parse_dominant(std::string_view name);

struct BarrierProfile {
    double p = 0.0;
    double tau = 0.0;
    double T = 0.0;     // dead-core thickness: chi * tau * T^p = d
    double rho = 0.0;   // plateau radius R - T
    double R = 0.0;
    double chi = 1.0;   // Lane-Emden-Matukuma worst-case weight factor
    Dominant dominant = Dominant::ExactBalance;

    // Lambda = chi * tau, the scale of the barrier (d / Lambda)^(1/p) = T.
    [[nodiscard]] double scale() const noexcept { return chi * tau; }
    [[nodiscard]] double datum() const;
};

// Absorption balance. Hardy-Henon:
//   p2 = (4-b+a)/(3-b-g),  tau2 = [l (3-b-g)^(4-b) / ((4-b+a)^(3-b) (1+a+g))]^(1/(3-b-g)).
// Lane-Emden-Matukuma returns (p2*, tau2**), i.e. the same with a = 0.
BalancePair absorption_exponents(const ModelSpec& spec);

// Gradient balance for the three Hamiltonians; solves
//   (p-2) + (p-1)(2-b) = (p-1)m + pq,   tau^(3-b) p^(3-b) (p-1) = |c| tau^(q+m) p^m.
BalancePair gradient_exponents(const ModelSpec& spec);

// Leading-order profile without the boundary datum: p = min(p1, p2) and the
// tau of the pair attaining it. For Lane-Emden-Matukuma the absorption tau
// is tau2**, unscaled by chi.
struct LeadingProfile {
    double p = 0.0;
    double tau = 0.0;
    Dominant dominant = Dominant::ExactBalance;
    std::optional<BalancePair> absorption;
    std::optional<BalancePair> gradient;
};

LeadingProfile leading_profile(const ModelSpec& spec);

// Lane-Emden-Matukuma worst-case weight factor (1+T^2)^(-alpha/(3-b-g)).
double lem_chi(const ModelSpec& spec, double T);

// Barrier profile in B_R with datum spec.d.
BarrierProfile select_profile(const ModelSpec& spec, double R);

// Residual of T^p chi(T) tau - d for a Lane-Emden-Matukuma profile.
double lem_thickness_residual(const ModelSpec& spec, const BarrierProfile& profile);

void to_json(nlohmann::json& j, const BarrierProfile& b);
void from_json(const nlohmann::json& j, BarrierProfile& b);

}  // namespace deadcore
