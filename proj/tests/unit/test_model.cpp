#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "deadcore/model.hpp"

using namespace deadcore;

namespace {

bool has_constraint(const ValidationReport& rep, const std::string& name) {
    for (const auto& v : rep) {
        if (v.constraint == name) return true;
    }
    return false;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("negative mixed row with small exponents is admissible") {
    ModelSpec s;
    s.m = 1;
    s.q = 0.5;
    s.gamma = 1;
    s.hamiltonian = HamiltonianKind::NegativeMixed;
    s.c = -1;
    CHECK(validate_admissible(s).empty());
}

TEST_CASE("m = 3 - beta is rejected with the offending value") {
    ModelSpec s;
    s.m = 3;
    s.hamiltonian = HamiltonianKind::GradientPower;
    s.c = 1;
    const auto rep = validate_admissible(s);
    REQUIRE(has_constraint(rep, "m < 3-beta"));
    for (const auto& v : rep) {
        if (v.constraint != "m < 3-beta") continue;
        CHECK(v.value == 3.0);
        CHECK(v.bound == 3.0);
        CHECK(v.message == "m < 3-beta fails: 3 not < 3");
    }
}

TEST_CASE("LEM alpha above the growth bound") {
    ModelSpec s;
    s.m = 1;
    s.gamma = 1;
    s.alpha = 2.1;
    s.nonlinearity = NonlinearityKind::LaneEmdenMatukuma;
    s.hamiltonian = HamiltonianKind::GradientPower;
    s.c = 1;
    CHECK(lem_alpha_bound(s) == doctest::Approx(1.5));
    CHECK_FALSE(validate_admissible(s).empty());
    s.alpha = 1.4;
    CHECK(validate_admissible(s).empty());
}

TEST_CASE("sign of c must match the Hamiltonian") {
    ModelSpec s;
    s.hamiltonian = HamiltonianKind::GradientPower;
    s.c = -1;
    CHECK_FALSE(is_admissible(s));
    s.hamiltonian = HamiltonianKind::NegativeMixed;
    s.q = 1;
    CHECK(is_admissible(s));
    s.c = 1;
    CHECK_FALSE(is_admissible(s));
}

TEST_CASE("exponential row constraints") {
    ModelSpec s;
    s.nonlinearity = NonlinearityKind::Exponential;
    s.hamiltonian = HamiltonianKind::GradientPower;
    s.c = 1;
    s.m = 1;
    s.alpha = -0.5;
    CHECK(is_admissible(s));
    s.m = 2.5;
    CHECK_FALSE(is_admissible(s));
    s.m = 1;
    s.alpha = 0.5;
    CHECK_FALSE(is_admissible(s));
    s.alpha = 0;
    s.hamiltonian = HamiltonianKind::None;
    CHECK_FALSE(is_admissible(s));
}

TEST_CASE("non-finite input throws") {
    ModelSpec s;
    s.beta = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(validate_admissible(s), Error);
}

TEST_CASE("validation is pure") {
    ModelSpec s;
    s.m = 3;
    s.gamma = 4;
    s.hamiltonian = HamiltonianKind::GradientPower;
    s.c = 1;
    const auto a = validate_admissible(s);
    const auto b = validate_admissible(s);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].message == b[k].message);
}

TEST_CASE("eval_hamiltonian oracles") {
    ModelSpec s;
    s.hamiltonian = HamiltonianKind::GradientPower;
    s.c = 2;
    s.m = 1;
    CHECK(eval_hamiltonian(s, 0.0, 3.0) == doctest::Approx(6.0));
    s.hamiltonian = HamiltonianKind::None;
    CHECK(eval_hamiltonian(s, 7.0, 3.0) == 0.0);
    s.hamiltonian = HamiltonianKind::PositiveMixed;
    s.c = 1;
    s.q = 2;
    CHECK(eval_hamiltonian(s, 2.0, 3.0) == doctest::Approx(12.0));
    s.q = 0.5;
    CHECK_THROWS_AS(eval_hamiltonian(s, -1.0, 3.0), Error);
}

TEST_CASE("eval_nonlinearity oracles") {
    ModelSpec s;
    CHECK(eval_nonlinearity(s, 1.0, -5.0) == 0.0);
    s.nonlinearity = NonlinearityKind::LaneEmdenMatukuma;
    s.lambda = 2;
    s.alpha = 1;
    s.gamma = 1;
    CHECK(eval_nonlinearity(s, 1.0, 3.0) == doctest::Approx(3.0));
    ModelSpec e;
    e.nonlinearity = NonlinearityKind::Exponential;
    e.hamiltonian = HamiltonianKind::GradientPower;
    e.c = 1;
    CHECK(eval_nonlinearity(e, 0.0, 0.0) == doctest::Approx(1.0));
    ModelSpec h;
    h.alpha = -0.5;
    try {
        (void)eval_nonlinearity(h, 0.0, 1.0);
        FAIL("expected SingularPoint");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::SingularPoint);
    }
}

TEST_CASE("sign and monotonicity properties on random specs") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int checked = 0;
    while (checked < 200) {
        ModelSpec s;
        s.beta = 2.0 * U(rng);
        s.m = 0.1 + 2.5 * U(rng);
        s.q = U(rng) < 0.5 ? 0.0 : 1.5 * U(rng);
        s.gamma = 2.5 * U(rng);
        s.alpha = -0.9 + 2.0 * U(rng);
        s.lambda = 0.1 + 2.0 * U(rng);
        const int h = static_cast<int>(4 * U(rng));
        s.hamiltonian = static_cast<HamiltonianKind>(h);
        s.c = s.hamiltonian == HamiltonianKind::NegativeMixed ? -1.0 - U(rng) : 1.0 + U(rng);
        if (s.hamiltonian == HamiltonianKind::None) s.c = 0;
        s.nonlinearity = U(rng) < 0.5 ? NonlinearityKind::HardyHenon : NonlinearityKind::LaneEmdenMatukuma;
        if (!is_admissible(s)) continue;
        ++checked;
        const double u = 3 * U(rng);
        const double g = 3 * U(rng);
        CHECK(eval_hamiltonian(s, u, g) >= 0.0);
        const double r = 0.1 + 2 * U(rng);
        CHECK(eval_nonlinearity(s, r, u) <= eval_nonlinearity(s, r, u + 0.1));
        if (s.gamma > 0) CHECK(eval_nonlinearity(s, r, 0.0) == 0.0);
    }
}

TEST_CASE("mixed with q = 0 normalizes to gradient power") {
    ModelSpec s;
    s.hamiltonian = HamiltonianKind::NegativeMixed;
    s.c = -2;
    s.q = 0;
    const ModelSpec n = s.normalized();
    CHECK(n.hamiltonian == HamiltonianKind::GradientPower);
    CHECK(n.c == 2.0);
    CHECK(eval_hamiltonian(s, 1.0, 3.0) == doctest::Approx(eval_hamiltonian(n, 1.0, 3.0)));
}

TEST_CASE("json round trip and unknown option keys") {
    ModelSpec s;
    s.beta = 0.5;
    s.m = 1.25;
    s.hamiltonian = HamiltonianKind::PositiveMixed;
    s.nonlinearity = NonlinearityKind::LaneEmdenMatukuma;
    s.c = 3;
    nlohmann::json j = s;
    CHECK(j.at("hamiltonian") == "positive_mixed");
    CHECK(j.at("nonlinearity") == "lane_emden_matukuma");
    j["R"] = 4.0;
    const ModelSpec back = j.get<ModelSpec>();
    CHECK(back.beta == 0.5);
    CHECK(back.m == 1.25);
    CHECK(back.hamiltonian == HamiltonianKind::PositiveMixed);
    CHECK(back.nonlinearity == NonlinearityKind::LaneEmdenMatukuma);
    CHECK_THROWS(nlohmann::json({{"hamiltonian", "quadratic"}}).get<ModelSpec>());
}

}  // TEST_SUITE
