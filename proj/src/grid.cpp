#include "deadcore/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <thread>

namespace deadcore {

DiscGrid DiscGrid::make(double R, int n, double cx, double cy) {
    if (!(R > 0.0)) throw Error(ErrorCode::InvalidInput, "grid radius must be > 0");
    if (n < 5) throw Error(ErrorCode::InvalidInput, "grid needs at least 5 nodes per side");
    DiscGrid g;
    g.cx = cx;
    g.cy = cy;
    g.R = R;
    g.n = n;
    g.eps = 2.0 * R / (n - 1);
    const std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    g.kind.assign(total, NodeKind::Outside);
    g.u.assign(total, 0.0);
    const double tiny = 1e-12 * g.eps;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double r = g.radius(i, j);
            NodeKind k = NodeKind::Outside;
            if (r <= R - g.eps + tiny) {
                k = NodeKind::Interior;
            } else if (r <= R + 1.5 * g.eps + tiny) {
                k = NodeKind::Boundary;
            }
            g.kind[g.index(i, j)] = k;
        }
    }
    return g;
}

double DiscGrid::radius(int i, int j) const noexcept { return std::hypot(x(i) - cx, y(j) - cy); }

std::size_t DiscGrid::count(NodeKind k) const { return static_cast<std::size_t>(std::count(kind.begin(), kind.end(), k)); }

double DiscGrid::sample(double px, double py) const {
    const double fx = (px - (cx - R)) / eps;
    const double fy = (py - (cy - R)) / eps;
    if (fx < -1e-9 || fy < -1e-9 || fx > n - 1 + 1e-9 || fy > n - 1 + 1e-9) {
        throw Error(ErrorCode::DomainError, "sample point outside the lattice");
    }
    const int i = std::clamp(static_cast<int>(std::floor(fx)), 0, n - 2);
    const int j = std::clamp(static_cast<int>(std::floor(fy)), 0, n - 2);
    const double tx = fx - i;
    const double ty = fy - j;
    return (1 - tx) * (1 - ty) * u[index(i, j)] + tx * (1 - ty) * u[index(i + 1, j)] +
           (1 - tx) * ty * u[index(i, j + 1)] + tx * ty * u[index(i + 1, j + 1)];
}

void DiscGrid::fill(double value) { std::fill(u.begin(), u.end(), value); }

void DiscGrid::fill(const std::function<double(double, double)>& fn) {
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (at(i, j) != NodeKind::Outside) u[index(i, j)] = fn(x(i), y(j));
        }
    }
}

RingStencil::RingStencil(int dirs_) : dirs(dirs_) {
    if (dirs < 4 || dirs % 4 != 0) throw Error(ErrorCode::InvalidInput, "stencil_dirs must be a positive multiple of 4");
    taps.resize(static_cast<std::size_t>(dirs));
    for (int k = 0; k < dirs; ++k) {
        const double th = 2.0 * std::numbers::pi * k / dirs;
        double dx = std::cos(th);
        double dy = std::sin(th);
        if (std::fabs(dx - std::round(dx)) < 1e-12) dx = std::round(dx);
        if (std::fabs(dy - std::round(dy)) < 1e-12) dy = std::round(dy);
        const int i0 = static_cast<int>(std::floor(dx));
        const int j0 = static_cast<int>(std::floor(dy));
        const double tx = dx - i0;
        const double ty = dy - j0;
        const Tap cand[4] = {{i0, j0, (1 - tx) * (1 - ty)},
                             {i0 + 1, j0, tx * (1 - ty)},
                             {i0, j0 + 1, (1 - tx) * ty},
                             {i0 + 1, j0 + 1, tx * ty}};
        for (const auto& t : cand) {
            if (t.w > 0.0) taps[static_cast<std::size_t>(k)].push_back(t);
        }
    }
}

int thread_cap() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("DEADCORE_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) return std::min(hw, cap);
    }
    return hw;
}

namespace {

double psi(double t, double e) {
    if (e == 1.0) return t;
    return std::copysign(std::pow(std::fabs(t), e), t) / e;
}

double dpsi(double t, double e) {
    if (e == 1.0) return 1.0;
    return std::pow(std::fabs(t), e - 1.0);
}

// Everything the nodal equation needs about one interior node.
struct NodeProblem {
    const ModelSpec* spec = nullptr;
    SchemeForm form = SchemeForm::Monotone;
    double eps = 0.0;
    double weight = 1.0;  // spatial factor of f at this node
    double shift = 0.0;
    const double* a = nullptr;   // ring values without the center contribution
    const double* cw = nullptr;  // center weight per direction
    int dirs = 0;

    struct Eval {
        double E = 0.0;
        double dE = 0.0;
    };

    [[nodiscard]] Eval eval(double u0) const {
        const ModelSpec& sp = *spec;
        int kM = 0;
        int km = 0;
        double M = a[0] + cw[0] * u0;
        double m = M;
        for (int k = 1; k < dirs; ++k) {
            const double v = a[k] + cw[k] * u0;
            if (v > M) { M = v; kM = k; }
            if (v < m) { m = v; km = k; }
        }
        const double b = sp.beta;
        const double e = 3.0 - b;
        const double da = M - u0;
        const double db = u0 - m;
        const double gM = 1.0 - cw[kM];
        const double gm = 1.0 - cw[km];

        Eval out;
        if (form == SchemeForm::Monotone) {
            const double scale = std::pow(eps, 4.0 - b);
            out.E = (psi(da, e) - psi(db, e)) / scale;
            out.dE = -(dpsi(da, e) * gM + dpsi(db, e) * gm) / scale;
        } else {
            const double G = (M - m) / (2.0 * eps);
            const double sec = (M + m - 2.0 * u0) / (eps * eps);
            const double dsec = -(gM + gm) / (eps * eps);
            double fac = 1.0;
            double dfac = 0.0;
            if (b < 2.0) {
                fac = G > 0.0 ? std::pow(G, 2.0 - b) : 0.0;
                const double dG = -(gM - gm) / (2.0 * eps);
                dfac = G > 0.0 ? (2.0 - b) * std::pow(G, 1.0 - b) * dG : 0.0;
            }
            out.E = fac * sec;
            out.dE = fac * dsec + dfac * sec;
        }

        if (sp.hamiltonian != HamiltonianKind::None && sp.c != 0.0) {
            double G = 0.0;
            double dG = 0.0;
            if (sp.c > 0.0) {
                if (db > 0.0) { G = db / eps; dG = gm / eps; }
            } else {
                if (da > 0.0) { G = da / eps; dG = -gM / eps; }
            }
            const bool mixed = sp.hamiltonian != HamiltonianKind::GradientPower;
            const double up = std::max(u0, 0.0);
            const double Uq = mixed ? positive_power(up, sp.q) : 1.0;
            const double dUq = (mixed && up > 0.0 && sp.q > 0.0) ? sp.q * std::pow(up, sp.q - 1.0) : 0.0;
            const double Gm = G > 0.0 ? std::pow(G, sp.m) : 0.0;
            const double dGm = G > 0.0 ? sp.m * std::pow(G, sp.m - 1.0) * dG : 0.0;
            out.E -= sp.c * Gm * Uq;
            out.dE -= sp.c * (dGm * Uq + Gm * dUq);
        }

        const double g = sp.gamma;
        if (sp.nonlinearity == NonlinearityKind::Exponential) {
            const double au = std::fabs(u0);
            const double ex = std::exp(u0);
            const double pw = g == 0.0 ? 1.0 : std::pow(au, g);
            out.E -= sp.lambda * pw * ex;
            double dpw = 0.0;
            if (g > 0.0 && au > 0.0) dpw = g * std::pow(au, g - 1.0) * (u0 > 0.0 ? 1.0 : -1.0);
            out.dE -= sp.lambda * ex * (pw + dpw);
        } else if (u0 > 0.0) {
            out.E -= sp.lambda * weight * (g == 0.0 ? 1.0 : std::pow(u0, g));
            if (g > 0.0) out.dE -= sp.lambda * weight * g * std::pow(u0, g - 1.0);
        }
        out.E -= shift;
        return out;
    }

    // Root of the non-increasing map E, or the point where it jumps across 0.
    [[nodiscard]] double solve(double x) const {
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        double step = 1e-3 * std::max(1.0, std::fabs(x));
        for (int it = 0; it < 200; ++it) {
            const Eval ev = eval(x);
            if (ev.E == 0.0 || !std::isfinite(ev.E)) return x;
            if (ev.E > 0.0) lo = x; else hi = x;
            const double tol = 1e-15 * std::max(1.0, std::fabs(x));
            if (hi - lo <= tol) return 0.5 * (lo + hi);
            double xn = std::numeric_limits<double>::quiet_NaN();
            if (ev.dE < 0.0 && std::isfinite(ev.dE)) xn = x - ev.E / ev.dE;
            const bool bracketed = std::isfinite(lo) && std::isfinite(hi);
            if (bracketed) {
                if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
            } else if (!std::isfinite(xn)) {
                xn = std::isfinite(lo) ? lo + step : hi - step;
                step *= 2.0;
            } else if (std::isfinite(lo) && xn <= lo) {
                xn = lo + step;
                step *= 2.0;
            } else if (std::isfinite(hi) && xn >= hi) {
                xn = hi - step;
                step *= 2.0;
            }
            if (std::fabs(xn - x) <= tol) return xn;
            x = xn;
        }
        return x;
    }
};

struct Workspace {
    const DiscGrid* grid = nullptr;
    const RingStencil* ring = nullptr;
    std::vector<double> cw;  // center weight per direction (same at every node)

    void ring_values(const std::vector<double>& u, int i, int j, double* a) const {
        for (int k = 0; k < ring->dirs; ++k) {
            double s = 0.0;
            for (const auto& t : ring->taps[static_cast<std::size_t>(k)]) {
                if (t.di == 0 && t.dj == 0) continue;
                s += t.w * u[grid->index(i + t.di, j + t.dj)];
            }
            a[k] = s;
        }
    }
};

std::vector<double> center_weights(const RingStencil& ring) {
    std::vector<double> cw(static_cast<std::size_t>(ring.dirs), 0.0);
    for (int k = 0; k < ring.dirs; ++k) {
        for (const auto& t : ring.taps[static_cast<std::size_t>(k)]) {
            if (t.di == 0 && t.dj == 0) cw[static_cast<std::size_t>(k)] = t.w;
        }
    }
    return cw;
}

}  // namespace

double scheme_value(const DiscGrid& grid, int i, int j, double beta, SchemeForm form, int dirs) {
    if (i < 0 || j < 0 || i >= grid.n || j >= grid.n || grid.at(i, j) != NodeKind::Interior) {
        throw Error(ErrorCode::InvalidInput, "scheme_value needs an interior node");
    }
    const RingStencil ring(dirs);
    double M = -std::numeric_limits<double>::infinity();
    double m = std::numeric_limits<double>::infinity();
    for (const auto& taps : ring.taps) {
        double v = 0.0;
        for (const auto& t : taps) v += t.w * grid.u[grid.index(i + t.di, j + t.dj)];
        M = std::max(M, v);
        m = std::min(m, v);
    }
    const double u0 = grid.u[grid.index(i, j)];
    const double eps = grid.eps;
    if (form == SchemeForm::Monotone) {
        const double e = 3.0 - beta;
        return (psi(M - u0, e) - psi(u0 - m, e)) / std::pow(eps, 4.0 - beta);
    }
    const double G = (M - m) / (2.0 * eps);
    double fac = 1.0;
    if (beta < 2.0) fac = G > 0.0 ? std::pow(G, 2.0 - beta) : 0.0;
    return fac * (M + m - 2.0 * u0) / (eps * eps);
}

GridSolution solve(const ModelSpec& raw, DiscGrid grid, const BoundaryData& g, double source_shift,
                   const SolveOptions& opt) {
    require_admissible(raw);
    const ModelSpec spec = raw.normalized();
    if (!(opt.damping > 0.0 && opt.damping <= 1.0)) throw Error(ErrorCode::InvalidInput, "damping must lie in (0, 1]");
    if (opt.max_iters < 1) throw Error(ErrorCode::InvalidInput, "max_iters must be >= 1");
    if (!(opt.tol > 0.0)) throw Error(ErrorCode::InvalidInput, "tol must be > 0");

    const RingStencil ring(opt.stencil_dirs);
    Workspace ws{&grid, &ring, center_weights(ring)};
    const int n = grid.n;

    // Dirichlet data at the radial projection.
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (grid.at(i, j) != NodeKind::Boundary) continue;
            const double r = grid.radius(i, j);
            const double px = grid.cx + grid.R * (grid.x(i) - grid.cx) / r;
            const double py = grid.cy + grid.R * (grid.y(j) - grid.cy) / r;
            grid.u[grid.index(i, j)] = g(px, py);
        }
    }

    struct Node {
        int i, j;
        double weight;
    };
    std::vector<Node> nodes;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (grid.at(i, j) != NodeKind::Interior) continue;
            double r = grid.radius(i, j);
            double w = 1.0;
            if (spec.nonlinearity == NonlinearityKind::HardyHenon) {
                if (r == 0.0 && spec.alpha < 0.0) r = 0.5 * grid.eps;
                w = r == 0.0 ? (spec.alpha == 0.0 ? 1.0 : 0.0) : std::pow(r, spec.alpha);
            } else if (spec.nonlinearity == NonlinearityKind::LaneEmdenMatukuma) {
                w = std::pow(1.0 + r * r, -spec.alpha);
            }
            nodes.push_back({i, j, w});
        }
    }

    const auto dirs = static_cast<std::size_t>(ring.dirs);
    auto make_problem = [&](const Node& nd, const double* a) {
        NodeProblem pb;
        pb.spec = &spec;
        pb.form = opt.form;
        pb.eps = grid.eps;
        pb.weight = nd.weight;
        pb.shift = source_shift;
        pb.a = a;
        pb.cw = ws.cw.data();
        pb.dirs = ring.dirs;
        return pb;
    };

    GridSolution sol;
    const double w = opt.damping;
    if (opt.mode == SweepMode::GaussSeidel) {
        std::vector<double> a(dirs);
        for (int sweep = 0; sweep < opt.max_iters; ++sweep) {
            double res = 0.0;
            for (const auto& nd : nodes) {
                ws.ring_values(grid.u, nd.i, nd.j, a.data());
                double& u0 = grid.u[grid.index(nd.i, nd.j)];
                const double target = make_problem(nd, a.data()).solve(u0);
                res = std::max(res, std::fabs(target - u0));
                u0 += w * (target - u0);
            }
            sol.residual_inf = res;
            if (res <= opt.tol) {
                sol.converged = true;
                break;
            }
            ++sol.iterations;
        }
    } else {
        const int workers = std::max(1, std::min<int>(opt.threads > 0 ? std::min(opt.threads, thread_cap()) : thread_cap(),
                                                       static_cast<int>(nodes.size() / 256) + 1));
        std::vector<double> next = grid.u;
        std::vector<double> part(static_cast<std::size_t>(workers));
        auto work = [&](int t) {
            std::vector<double> a(dirs);
            const std::size_t lo = nodes.size() * static_cast<std::size_t>(t) / static_cast<std::size_t>(workers);
            const std::size_t hi = nodes.size() * static_cast<std::size_t>(t + 1) / static_cast<std::size_t>(workers);
            double res = 0.0;
            for (std::size_t k = lo; k < hi; ++k) {
                const auto& nd = nodes[k];
                ws.ring_values(grid.u, nd.i, nd.j, a.data());
                const std::size_t idx = grid.index(nd.i, nd.j);
                const double u0 = grid.u[idx];
                const double target = make_problem(nd, a.data()).solve(u0);
                res = std::max(res, std::fabs(target - u0));
                next[idx] = u0 + w * (target - u0);
            }
            part[static_cast<std::size_t>(t)] = res;
        };
        for (int sweep = 0; sweep < opt.max_iters; ++sweep) {
            if (workers == 1) {
                work(0);
            } else {
                std::vector<std::thread> pool;
                pool.reserve(static_cast<std::size_t>(workers));
                for (int t = 0; t < workers; ++t) pool.emplace_back(work, t);
                for (auto& th : pool) th.join();
            }
            const double res = *std::max_element(part.begin(), part.end());
            sol.residual_inf = res;
            if (res <= opt.tol) {
                sol.converged = true;
                break;
            }
            grid.u.swap(next);
            for (const auto& nd : nodes) {
                const std::size_t idx = grid.index(nd.i, nd.j);
                next[idx] = grid.u[idx];
            }
            ++sol.iterations;
        }
    }
    sol.grid = std::move(grid);
    return sol;
}

void require_converged(const GridSolution& sol) {
    if (sol.converged) return;
    char buf[160];
    std::snprintf(buf, sizeof buf, "grid solver stopped after %d sweeps with residual %.6g", sol.iterations,
                  sol.residual_inf);
    throw Error(ErrorCode::NotConverged, buf);
}

double rotation_invariance_check(const GridSolution& sol, const std::vector<double>& angles) {
    const DiscGrid& g = sol.grid;
    double worst = 0.0;
    for (const double th : angles) {
        const double c = std::cos(th);
        const double s = std::sin(th);
        for (int j = 0; j < g.n; ++j) {
            for (int i = 0; i < g.n; ++i) {
                if (g.at(i, j) != NodeKind::Interior) continue;
                const double dx = g.x(i) - g.cx;
                const double dy = g.y(j) - g.cy;
                const double v = g.sample(g.cx + c * dx - s * dy, g.cy + s * dx + c * dy);
                worst = std::max(worst, std::fabs(g.u[g.index(i, j)] - v));
            }
        }
    }
    return worst;
}

double lipschitz_estimate(const GridSolution& sol, double fraction) {
    if (!(fraction > 0.0)) throw Error(ErrorCode::InvalidInput, "fraction must be > 0");
    const DiscGrid& g = sol.grid;
    struct P {
        double x, y, u;
    };
    std::vector<P> pts;
    const double rmax = fraction * g.R * (1.0 + 1e-12);
    for (int j = 0; j < g.n; ++j) {
        for (int i = 0; i < g.n; ++i) {
            if (g.at(i, j) == NodeKind::Outside || g.radius(i, j) > rmax) continue;
            pts.push_back({g.x(i), g.y(j), g.u[g.index(i, j)]});
        }
    }
    double L = 0.0;
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            const double du = std::fabs(pts[a].u - pts[b].u);
            if (du == 0.0) continue;
            L = std::max(L, du / std::hypot(pts[a].x - pts[b].x, pts[a].y - pts[b].y));
        }
    }
    return L;
}

double max_deviation(const DiscGrid& grid, const std::function<double(double, double)>& fn) {
    double worst = 0.0;
    for (int j = 0; j < grid.n; ++j) {
        for (int i = 0; i < grid.n; ++i) {
            if (grid.at(i, j) == NodeKind::Outside) continue;
            worst = std::max(worst, std::fabs(grid.u[grid.index(i, j)] - fn(grid.x(i), grid.y(j))));
        }
    }
    return worst;
}

std::string grid_csv(const DiscGrid& grid) {
    std::string out = "x,y,u,interior_flag\n";
    char buf[128];
    for (int j = 0; j < grid.n; ++j) {
        for (int i = 0; i < grid.n; ++i) {
            const NodeKind k = grid.at(i, j);
            if (k == NodeKind::Outside) continue;
            std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%d\n", grid.x(i), grid.y(j), grid.u[grid.index(i, j)],
                          k == NodeKind::Interior ? 1 : 0);
            out += buf;
        }
    }
    return out;
}

}  // namespace deadcore
