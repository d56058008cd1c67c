#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "deadcore/grid.hpp"

using namespace deadcore;

namespace {

// Fills the grid with u(x, y) and evaluates the scheme at the node closest to (px, py).
double scheme_at(DiscGrid g, const std::function<double(double, double)>& u, double px, double py, double beta,
                 SchemeForm form = SchemeForm::Monotone) {
    g.fill(u);
    const int i = static_cast<int>(std::lround((px - (g.cx - g.R)) / g.eps));
    const int j = static_cast<int>(std::lround((py - (g.cy - g.R)) / g.eps));
    return scheme_value(g, i, j, beta, form);
}

GridSolution classical_solve(int n, SweepMode mode = SweepMode::GaussSeidel, double shift = 0.0, double datum = 1.0) {
    const ModelSpec s;
    const double R = 2.0 * select_profile(s, 10.0).T;
    DiscGrid g = DiscGrid::make(R, n);
    g.fill(datum);
    SolveOptions o;
    o.mode = mode;
    return solve(s, g, [datum](double, double) { return datum; }, shift, o);
}

}  // namespace

TEST_SUITE("grid") {

TEST_CASE("node classification") {
    const DiscGrid g = DiscGrid::make(1.0, 33);
    CHECK(g.eps == doctest::Approx(2.0 / 32));
    CHECK(g.at(16, 16) == NodeKind::Interior);
    CHECK(g.at(0, 16) == NodeKind::Boundary);
    CHECK(g.at(0, 0) == NodeKind::Outside);
    const RingStencil ring(16);
    for (int j = 0; j < g.n; ++j) {
        for (int i = 0; i < g.n; ++i) {
            if (g.at(i, j) != NodeKind::Interior) continue;
            for (const auto& taps : ring.taps) {
                for (const auto& t : taps) CHECK(g.at(i + t.di, j + t.dj) != NodeKind::Outside);
            }
        }
    }
}

TEST_CASE("ring stencil weights") {
    const RingStencil ring(16);
    REQUIRE(ring.taps.size() == 16);
    for (const auto& taps : ring.taps) {
        double sum = 0.0;
        for (const auto& t : taps) {
            CHECK(t.w > 0.0);
            sum += t.w;
        }
        CHECK(sum == doctest::Approx(1.0));
    }
    CHECK(ring.taps[0].size() == 1);
    CHECK_THROWS(RingStencil(6));
}

TEST_CASE("scheme vanishes on affine and constant data") {
    const DiscGrid g = DiscGrid::make(1.0, 33);
    for (double beta : {0.0, 0.7, 2.0}) {
        for (auto form : {SchemeForm::Monotone, SchemeForm::Product}) {
            CHECK(std::fabs(scheme_at(g, [](double x, double y) { return 2.0 * x - 0.5 * y + 1.0; }, 0.1, 0.2, beta,
                                      form)) <= 1e-9);
            CHECK(scheme_at(g, [](double, double) { return 3.0; }, 0.0, 0.0, beta, form) == 0.0);
        }
    }
}

TEST_CASE("normalized scheme is consistent on a quadratic") {
    auto u = [](double x, double) { return 0.5 * x * x; };
    double prev = 1e9;
    for (int n : {33, 65, 129}) {
        const double v = scheme_at(DiscGrid::make(1.0, n), u, 0.5, 0.0, 2.0);
        CHECK(std::fabs(v - 1.0) <= prev);
        prev = std::fabs(v - 1.0);
    }
    CHECK(prev <= 1e-6);
    // beta = 0: |Du|^2 <D^2u n, n> = x^2 at (0.5, 0).
    CHECK(scheme_at(DiscGrid::make(1.0, 129), u, 0.5, 0.0, 0.0) == doctest::Approx(0.25).epsilon(1e-3));
}

TEST_CASE("monotone form is non-decreasing in every neighbor") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    DiscGrid g = DiscGrid::make(1.0, 9);
    for (int trial = 0; trial < 300; ++trial) {
        const double beta = 2.0 * (U(rng) + 1.0) / 2.0;
        for (auto& v : g.u) v = U(rng);
        const double base = scheme_value(g, 4, 4, beta);
        const int di = static_cast<int>(std::lround(U(rng)));
        const int dj = static_cast<int>(std::lround(U(rng)));
        if (di == 0 && dj == 0) continue;
        DiscGrid h = g;
        h.u[h.index(4 + di, 4 + dj)] += 0.05 + 0.5 * (U(rng) + 1.0);
        CHECK(scheme_value(h, 4, 4, beta) >= base - 1e-12);
    }
}

TEST_CASE("product form loses monotonicity for beta < 1") {
    DiscGrid g = DiscGrid::make(1.0, 9);
    g.fill(0.0);
    g.u[g.index(5, 4)] = 0.1;
    g.u[g.index(3, 4)] = -1.0;
    DiscGrid h = g;
    h.u[h.index(5, 4)] = 0.11;
    CHECK(scheme_value(h, 4, 4, 0.0, SchemeForm::Product) < scheme_value(g, 4, 4, 0.0, SchemeForm::Product));
    CHECK(scheme_value(h, 4, 4, 0.0, SchemeForm::Monotone) > scheme_value(g, 4, 4, 0.0, SchemeForm::Monotone));
}

TEST_CASE("zero data give the zero solution without updates") {
    const ModelSpec s;
    DiscGrid g = DiscGrid::make(1.0, 17);
    const auto sol = solve(s, g, [](double, double) { return 0.0; });
    CHECK(sol.converged);
    CHECK(sol.iterations == 0);
    for (double v : sol.grid.u) CHECK(v == 0.0);
}

TEST_CASE("fixed point reached from above and below, ordered by the source shift") {
    const ModelSpec s;
    DiscGrid g = DiscGrid::make(2.0, 9);
    auto run = [&](double init, double shift) {
        g.fill(init);
        SolveOptions o;
        o.tol = 1e-12;
        return solve(s, g, [](double, double) { return 1.0; }, shift, o);
    };
    const auto above = run(1.0, 0.0);
    const auto below = run(0.0, 0.0);
    const auto shifted = run(1.0, 0.5);
    REQUIRE(above.converged);
    REQUIRE(below.converged);
    REQUIRE(shifted.converged);
    double worst = 0.0;
    for (std::size_t k = 0; k < g.u.size(); ++k) {
        if (g.kind[k] == NodeKind::Outside) continue;
        worst = std::max(worst, std::fabs(above.grid.u[k] - below.grid.u[k]));
        CHECK(shifted.grid.u[k] <= above.grid.u[k] + 1e-10);
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("ordered boundary data give ordered solutions") {
    const auto lo = classical_solve(17, SweepMode::GaussSeidel, 0.0, 1.0);
    const auto hi = classical_solve(17, SweepMode::GaussSeidel, 0.0, 1.2);
    REQUIRE(lo.converged);
    REQUIRE(hi.converged);
    // both runs stop at the sweep tolerance, so the dead cores agree only to that level
    for (std::size_t k = 0; k < lo.grid.u.size(); ++k) CHECK(lo.grid.u[k] <= hi.grid.u[k] + 1e-9);
}

TEST_CASE("Jacobi and Gauss-Seidel share the fixed point") {
    const auto gs = classical_solve(17);
    const auto ja = classical_solve(17, SweepMode::Jacobi);
    REQUIRE(gs.converged);
    REQUIRE(ja.converged);
    double worst = 0.0;
    for (std::size_t k = 0; k < gs.grid.u.size(); ++k) worst = std::max(worst, std::fabs(gs.grid.u[k] - ja.grid.u[k]));
    CHECK(worst <= 1e-6);
}

TEST_CASE("rotation and Lipschitz diagnostics") {
    GridSolution flat;
    flat.grid = DiscGrid::make(1.0, 17);
    flat.grid.fill(2.0);
    CHECK(rotation_invariance_check(flat, {std::numbers::pi / 6}) == doctest::Approx(0.0));
    flat.grid.fill(0.0);
    CHECK(lipschitz_estimate(flat) == 0.0);

    const auto sol = classical_solve(33);
    REQUIRE(sol.converged);
    CHECK(rotation_invariance_check(sol, {std::numbers::pi / 2}) <= 1e-6);
    const double lip = lipschitz_estimate(sol);
    CHECK(rotation_invariance_check(sol, {std::numbers::pi / 6, std::numbers::pi / 4}) <= 2.0 * sol.grid.eps * lip);
    const auto prof = select_profile(ModelSpec{}, sol.grid.R);
    const double slope = prof.p * prof.tau * std::pow(prof.T, prof.p - 1.0);
    CHECK(lip == doctest::Approx(slope).epsilon(0.25));
}

TEST_CASE("csv export and non-convergence") {
    const DiscGrid g = DiscGrid::make(1.0, 9);
    const auto csv = grid_csv(g);
    CHECK(csv.rfind("x,y,u,interior_flag\n", 0) == 0);
    const ModelSpec s;
    DiscGrid h = DiscGrid::make(2.0, 17);
    SolveOptions o;
    o.max_iters = 2;
    const auto sol = solve(s, h, [](double, double) { return 1.0; }, 0.0, o);
    CHECK_FALSE(sol.converged);
    CHECK_THROWS_AS(require_converged(sol), Error);
}

}  // TEST_SUITE
