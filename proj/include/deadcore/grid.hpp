#pragma once

#include <functional>
#include <string>
#include <vector>

#include "deadcore/barrier.hpp"
#include "deadcore/model.hpp"

namespace deadcore {

enum class NodeKind : unsigned char { Interior, Boundary, Outside };

// Uniform n x n lattice on [cx - R, cx + R] x [cy - R, cy + R], spacing eps = 2R/(n-1).
// Interior: |x - c| <= R - eps. Boundary (Dirichlet): R - eps < |x - c| <= R + 1.5 eps.
struct DiscGrid {
    double cx = 0.0;
    double cy = 0.0;
    double R = 1.0;
    double eps = 0.0;
    int n = 0;
    std::vector<NodeKind> kind;
    std::vector<double> u;

    static DiscGrid make(double R, int n, double cx = 0.0, double cy = 0.0);

    [[nodiscard]] std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
    }
    [[nodiscard]] double x(int i) const noexcept { return cx - R + eps * i; }
    [[nodiscard]] double y(int j) const noexcept { return cy - R + eps * j; }
    [[nodiscard]] double radius(int i, int j) const noexcept;
    [[nodiscard]] NodeKind at(int i, int j) const { return kind[index(i, j)]; }
    [[nodiscard]] std::size_t count(NodeKind k) const;

    // Bilinear interpolation of u; the point must lie in the lattice square.
    [[nodiscard]] double sample(double px, double py) const;

    void fill(double value);
    void fill(const std::function<double(double, double)>& fn);
};

enum class SchemeForm {
    // (psi(M - u) - psi(u - m)) / eps^(4-b), psi(t) = sign(t)|t|^(3-b)/(3-b).
    // Monotone for every b in [0,2]; equals Product at b = 2.
    Monotone,
    // |Du|^(2-b) (M + m - 2u) / eps^2, |Du| = (M - m)/(2 eps). Monotone only for b >= 1.
    Product,
};

enum class SweepMode { GaussSeidel, Jacobi };

// Ring of `dirs` points at radius eps around a node, bilinear weights per point.
struct RingStencil {
    struct Tap {
        int di = 0;
        int dj = 0;
        double w = 0.0;
    };
    int dirs = 16;
    std::vector<std::vector<Tap>> taps;  // taps[k] for direction 2 pi k / dirs

    explicit RingStencil(int dirs = 16);
};

// Discrete Delta_inf^b at an interior node.
double scheme_value(const DiscGrid& grid, int i, int j, double beta, SchemeForm form = SchemeForm::Monotone,
                    int dirs = 16);

struct SolveOptions {
    int max_iters = 50000;
    double tol = 1e-8;
    double damping = 0.5;
    int stencil_dirs = 16;
    SweepMode mode = SweepMode::GaussSeidel;
    SchemeForm form = SchemeForm::Monotone;
    int threads = 0;  // Jacobi workers; 0 = hardware concurrency capped by DEADCORE_THREADS
};

struct GridSolution {
    DiscGrid grid;
    int iterations = 0;        // sweeps that changed the iterate by more than tol
    double residual_inf = 0.0; // max |nodal solve - u| over interior nodes in the last sweep
    bool converged = false;
};

using BoundaryData = std::function<double(double, double)>;

// Solves Delta_inf^b u - cH(u, |Du|) - lambda f(|x|, u) = source_shift with u = g
// at Boundary nodes (g evaluated at the radial projection onto the circle).
// grid.u holds the initial guess at Interior nodes.
GridSolution solve(const ModelSpec& spec, DiscGrid grid, const BoundaryData& g, double source_shift = 0.0,
                   const SolveOptions& options = {});

// Throws NotConverged carrying the residual when !sol.converged.
void require_converged(const GridSolution& sol);

// Max |u(x) - u(O_theta x)| over interior nodes x, with u(O_theta x) interpolated.
double rotation_invariance_check(const GridSolution& sol, const std::vector<double>& angles);

// Max |u(x) - u(y)| / |x - y| over pairs of non-outside nodes with |x - c|, |y - c| <= fraction R.
double lipschitz_estimate(const GridSolution& sol, double fraction = 1.0);

// Max over non-outside nodes of |u - fn(x, y)|.
double max_deviation(const DiscGrid& grid, const std::function<double(double, double)>& fn);

// Columns x, y, u, interior_flag for every non-outside node.
std::string grid_csv(const DiscGrid& grid);

int thread_cap();

}  // namespace deadcore
