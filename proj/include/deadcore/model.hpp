#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "deadcore/error.hpp"

namespace deadcore {

// First-order term cH(u, grad u).
//   None          : 0
//   GradientPower : c |grad u|^m                 (c > 0)
//   NegativeMixed : c * (-u^q |grad u|^m)         (c < 0)
//   PositiveMixed : c * u^q |grad u|^m            (c > 0)
enum class HamiltonianKind { None, GradientPower, NegativeMixed, PositiveMixed };

// Zeroth-order term f(s, u).
//   HardyHenon        : s^alpha (u+)^gamma
//   LaneEmdenMatukuma : (1 + s^2)^(-alpha) u^gamma
//   Exponential       : |u|^gamma e^u
enum class NonlinearityKind { HardyHenon, LaneEmdenMatukuma, Exponential };

std::string_view to_string(HamiltonianKind kind) noexcept;
std::string_view to_string(NonlinearityKind kind) noexcept;
HamiltonianKind parse_hamiltonian(std::string_view name);
NonlinearityKind parse_nonlinearity(std::string_view name);

struct ModelSpec {
    double beta = 0.0;
    double m = 1.0;
    double q = 0.0;
    double gamma = 0.0;
    double alpha = 0.0;
    double lambda = 1.0;
    double c = 0.0;
    double d = 1.0;
    HamiltonianKind hamiltonian = HamiltonianKind::None;
    NonlinearityKind nonlinearity = NonlinearityKind::HardyHenon;

    // Mixed Hamiltonians with q == 0 are rewritten as GradientPower with
    // cH unchanged (NegativeMixed flips the sign of c).
    [[nodiscard]] ModelSpec normalized() const;
    [[nodiscard]] bool has_gradient_term() const noexcept { return hamiltonian != HamiltonianKind::None; }
};

struct Violation {
    std::string constraint;  // e.g. "m < 3-beta"
    double value = 0.0;      // offending left-hand value
    double bound = 0.0;      // bound it was compared against
    std::string message;
};

using ValidationReport = std::vector<Violation>;

// Structural admissibility of a parameter tuple for its (H, f) model row.
// Throws Error(InvalidInput) when any numeric field is not finite.
ValidationReport validate_admissible(const ModelSpec& spec);

inline bool is_admissible(const ModelSpec& spec) { return validate_admissible(spec).empty(); }

// Throws Error(InvalidInput) listing every violation.
void require_admissible(const ModelSpec& spec);

// Upper bound on alpha for the Lane-Emden-Matukuma row. With a gradient term
// it is (4-b-m)(3-b-g)/(2(3-b-m)); without one, the same growth requirement
// p* > 2 alpha/(3-b-g) gives (4-b)/2.
double lem_alpha_bound(const ModelSpec& spec);

// cH(u, |grad u|) for the selected variant.
double eval_hamiltonian(const ModelSpec& spec, double u_val, double grad_norm);

// lambda * f(s, u) with s the (already shifted) radial argument.
double eval_nonlinearity(const ModelSpec& spec, double radius_shift, double u_val);

// (u+)^gamma with the dead-core convention (u+)^0 = 0 for u <= 0.
double positive_power(double u, double gamma) noexcept;

void to_json(nlohmann::json& j, const ModelSpec& spec);
void from_json(const nlohmann::json& j, ModelSpec& spec);

}  // namespace deadcore
