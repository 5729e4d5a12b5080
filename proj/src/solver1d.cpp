#include "silw/solver1d.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>

#include "silw/euler.hpp"
#include "silw/poly.hpp"
#include "silw/timeint.hpp"

namespace silw {

namespace {

bool admissible(const Eigen::Vector3d& U, double gamma) {
    return U.allFinite() && U(0) > 0.0 && euler_pressure(U, gamma) > 0.0;
}

std::vector<double> window_nodes(double C, int d) {
    std::vector<double> s(d);
    for (int j = 0; j < d; ++j)
        s[j] = C + j;
    return s;
}

// Shared per-run state for the ghost fills and residuals. The packed field
// stores the components back to back: component c of grid point j (counted
// from the leftmost ghost) lives at u[c*T + j].
struct Driver1D {
    const ProblemCase1D& pc;
    const RunOptions1D& opt;
    OffsetGrid1D grid;
    int T = 0;       // points per component
    int comps = 1;
    std::vector<std::vector<double>> right_extrap; // [p-1][j] weights

    Driver1D(const ProblemCase1D& problem, const RunOptions1D& options)
        : pc(problem), opt(options) {
        const Scheme& s = opt.scheme;
        validate(opt.silw);
        if (opt.silw.d > s.order)
            throw std::invalid_argument(
                "run_case: boundary order silw.d above the scheme order");
        if (pc.equation == Equation1D::euler && opt.silw.kd > 2)
            throw std::invalid_argument(
                "run_case: the Euler ILW ladder provides kd <= 2 only");
        grid = build_offset_grid(pc.domain_left, pc.domain_right, opt.N, opt.C_a,
                                 opt.C_b, s.ghost_width());
        if (opt.N + 1 < s.order)
            throw std::invalid_argument("run_case: fewer interior points than d");
        T = grid.total_points();
        comps = pc.equation == Equation1D::euler ? 3 : 1;
        right_extrap =
            right_extrapolation_weights(opt.silw.d, opt.C_b, grid.n_ghost);
    }

    int idx(int j) const { return grid.n_ghost + j; } // j in [-n_ghost, N+n_ghost]

    // ------------------------------------------------------------------
    // Euler ghost fill, shared by both sides via mirroring: the right
    // boundary is mapped onto a left boundary by flipping x (and thus the
    // momentum component), running the same case machinery, and flipping
    // back. `left` decides the window orientation; only walls may appear on
    // the mirrored side (Dirichlet data closures are left-boundary only).
    // ------------------------------------------------------------------
    void fill_euler_side(Field& u, bool left, bool wall, double t_n, double dt,
                         int stage) const {
        const int d = opt.silw.d;
        const int n_ghost = grid.n_ghost;
        const int N = grid.N;
        const double C = left ? opt.C_a : opt.C_b;
        const double dx = grid.dx;
        const bool shock = pc.shock_mode;

        std::array<std::vector<double>, 3> w;
        for (int c = 0; c < 3; ++c) {
            w[c].resize(d);
            for (int j = 0; j < d; ++j) {
                const int point = left ? idx(j) : idx(N - j);
                w[c][j] = u[static_cast<std::size_t>(c) * T + point];
            }
        }
        if (!left) {
            for (int j = 0; j < d; ++j)
                w[1][j] = -w[1][j];
        }
        const Eigen::Vector3d U_near(w[0][0], w[1][0], w[2][0]);

        // Boundary state and physical first derivative from the interior
        // interpolant (shock-safe extrapolation when shocks are expected).
        Eigen::Vector3d U_ext0, U_ext1;
        if (shock) {
            for (int c = 0; c < 3; ++c) {
                U_ext0(c) = weno_extrapolate(w[c], C, 0.0, 0, dx);
                U_ext1(c) = weno_extrapolate(w[c], C, 0.0, 1, dx) / dx;
            }
        } else {
            const std::vector<double> nodes = window_nodes(C, d);
            std::vector<double> pd;
            for (int c = 0; c < 3; ++c) {
                NewtonPoly p(nodes, w[c]);
                p.derivs(0.0, 1, pd);
                U_ext0(c) = pd[0];
                U_ext1(c) = pd[1] / dx;
            }
        }
        if (!admissible(U_ext0, pc.gamma)) {
            if (!shock)
                throw std::runtime_error(
                    "run_case: nonphysical extrapolated state at the " +
                    std::string(left ? "left" : "right") + " boundary");
            U_ext0 = U_near;
            U_ext1.setZero();
        }

        const EulerEigen eig = euler_eigenstructure(U_ext0, pc.gamma);
        InflowCase cs;
        Eigen::Vector3d g0eff = Eigen::Vector3d::Zero();
        Eigen::Vector3d g1eff = Eigen::Vector3d::Zero();
        if (wall) {
            cs = wall_case_1d();
        } else {
            if (!pc.euler_data)
                throw std::invalid_argument(
                    "run_case: Dirichlet boundary without euler_data");
            cs = inflow_case_1d(eig.u, eig.c);
            const EulerStack1D stack = pc.euler_data(t_n);
            for (int c = 0; c < 3; ++c) {
                const double st[3] = {stack[0](c), stack[1](c), stack[2](c)};
                double out[3];
                stage_boundary_taylor(st, 3, dt, stage, out);
                g0eff(c) = out[0];
                g1eff(c) = out[1];
            }
        }

        Eigen::VectorXd gvec(cs.prescribed.size());
        for (std::size_t i = 0; i < cs.prescribed.size(); ++i)
            gvec(static_cast<int>(i)) = wall ? 0.0 : g0eff(cs.prescribed[i]);

        const Eigen::VectorXd V = eig.L * U_ext0;
        Eigen::Vector3d U0 =
            solve_boundary_state(cs, gvec, eig.L, V, eig.lambda, eig.c).U;
        if (!admissible(U0, pc.gamma)) {
            if (!shock)
                throw std::runtime_error(
                    "run_case: nonphysical boundary state at the " +
                    std::string(left ? "left" : "right") + " boundary");
            U0 = U_near;
        }

        Eigen::Vector3d U1 = Eigen::Vector3d::Zero();
        if (opt.silw.kd == 2) {
            const Eigen::Matrix3d A = euler_jacobian(U0, pc.gamma);
            Eigen::VectorXd rhs(cs.prescribed.size());
            for (std::size_t i = 0; i < cs.prescribed.size(); ++i)
                rhs(static_cast<int>(i)) = -g1eff(cs.prescribed[i]);
            const Eigen::VectorXd V1 = eig.L * U_ext1;
            U1 = solve_boundary_derivative(cs, A, rhs, eig.L, V1, eig.lambda, eig.c).U;
            if (!U1.allFinite()) {
                if (!shock)
                    throw std::runtime_error(
                        "run_case: nonphysical boundary derivative at the " +
                        std::string(left ? "left" : "right") + " boundary");
                U1.setZero();
            }
        }

        std::array<std::vector<double>, 3> ghosts;
        for (int c = 0; c < 3; ++c) {
            std::vector<double> sb = {U0(c)};
            if (opt.silw.kd == 2)
                sb.push_back(dx * U1(c));
            ghosts[c].resize(n_ghost);
            silw_ghosts(opt.silw, C, w[c].data(), sb, n_ghost, shock, dx,
                        ghosts[c].data());
        }
        for (int p = 1; p <= n_ghost; ++p) {
            Eigen::Vector3d Ug(ghosts[0][p - 1], ghosts[1][p - 1], ghosts[2][p - 1]);
            if (!admissible(Ug, pc.gamma)) {
                if (!shock)
                    throw std::runtime_error(
                        "run_case: nonphysical ghost state at the " +
                        std::string(left ? "left" : "right") + " boundary");
                Ug = U_near;
            }
            const int point = left ? idx(-p) : idx(N + p);
            u[0 * static_cast<std::size_t>(T) + point] = Ug(0);
            u[1 * static_cast<std::size_t>(T) + point] = left ? Ug(1) : -Ug(1);
            u[2 * static_cast<std::size_t>(T) + point] = Ug(2);
        }
    }

    void fill_euler_right_extrapolation(Field& u) const {
        const int d = opt.silw.d;
        const int N = grid.N;
        for (int c = 0; c < 3; ++c) {
            double* uc = u.data() + static_cast<std::size_t>(c) * T;
            if (pc.shock_mode) {
                std::vector<double> w(d);
                for (int j = 0; j < d; ++j)
                    w[j] = uc[idx(N - j)];
                for (int p = 1; p <= grid.n_ghost; ++p)
                    uc[idx(N + p)] =
                        weno_extrapolate(w, opt.C_b, opt.C_b - p, 0, grid.dx);
            } else {
                for (int p = 1; p <= grid.n_ghost; ++p) {
                    double acc = 0.0;
                    for (int j = 0; j < d; ++j)
                        acc += right_extrap[p - 1][j] * uc[idx(N - d + 1 + j)];
                    uc[idx(N + p)] = acc;
                }
            }
        }
    }

    // ------------------------------------------------------------------
    // Scalar fills
    // ------------------------------------------------------------------
    void fill_scalar_left(Field& u, double t_n, double dt, int stage) const {
        const int d = opt.silw.d;
        const double a = pc.advection_speed;
        const double dx = grid.dx;
        std::vector<double> w(d);
        for (int j = 0; j < d; ++j)
            w[j] = u[idx(j)];

        if (a > eps_sonic(std::abs(a)) && pc.left_bc == LeftBC1D::dirichlet) {
            if (!pc.scalar_data)
                throw std::invalid_argument(
                    "run_case: Dirichlet boundary without scalar_data");
            const ScalarStack1D stack = pc.scalar_data(t_n);
            double out[4];
            stage_boundary_taylor(stack.data(), 4, dt, stage, out);
            const std::vector<double> g_derivs(out, out + opt.silw.kd);
            const std::vector<double> ders =
                ilw_scalar_derivatives(opt.silw.kd, g_derivs, a, 0.0);
            std::vector<double> sb(opt.silw.kd);
            double scale = 1.0;
            for (int k = 0; k < opt.silw.kd; ++k) {
                sb[k] = ders[k] * scale;
                scale *= dx;
            }
            std::vector<double> ghosts(grid.n_ghost);
            silw_ghosts(opt.silw, opt.C_a, w.data(), sb, grid.n_ghost,
                        pc.shock_mode, dx, ghosts.data());
            for (int p = 1; p <= grid.n_ghost; ++p)
                u[idx(-p)] = ghosts[p - 1];
        } else {
            // Outflow (or wall-less grazing wind): extrapolate the window.
            NewtonPoly p_fit(window_nodes(opt.C_a, d), w);
            for (int p = 1; p <= grid.n_ghost; ++p)
                u[idx(-p)] = p_fit.eval(opt.C_a - p);
        }
    }

    void fill_scalar_right(Field& u) const {
        const int d = opt.silw.d;
        const int N = grid.N;
        for (int p = 1; p <= grid.n_ghost; ++p) {
            double acc = 0.0;
            for (int j = 0; j < d; ++j)
                acc += right_extrap[p - 1][j] * u[idx(N - d + 1 + j)];
            u[idx(N + p)] = acc;
        }
    }

    void fill(Field& u, double t_n, double dt, int stage) const {
        if (pc.equation == Equation1D::euler) {
            fill_euler_side(u, true, pc.left_bc == LeftBC1D::wall, t_n, dt, stage);
            if (pc.right_bc == RightBC1D::wall)
                fill_euler_side(u, false, true, t_n, dt, stage);
            else
                fill_euler_right_extrapolation(u);
        } else {
            fill_scalar_left(u, t_n, dt, stage);
            if (pc.right_bc != RightBC1D::extrapolation)
                throw std::invalid_argument(
                    "run_case: scalar problems support extrapolation outflow only");
            fill_scalar_right(u);
        }
    }

    // ------------------------------------------------------------------
    // Residuals
    // ------------------------------------------------------------------
    void residual(const Field& u, Field& out) const {
        std::fill(out.begin(), out.end(), 0.0);
        const int g = grid.n_ghost;
        if (pc.equation == Equation1D::euler) {
            std::array<std::vector<double>, 3> f;
            for (auto& fc : f)
                fc.resize(T);
            double lf_alpha = 0.0;
            for (int j = 0; j < T; ++j) {
                const Eigen::Vector3d U(u[j], u[T + j], u[2 * static_cast<std::size_t>(T) + j]);
                const Eigen::Vector3d F = euler_flux(U, pc.gamma);
                f[0][j] = F(0);
                f[1][j] = F(1);
                f[2][j] = F(2);
                lf_alpha = std::max(lf_alpha, euler_max_speed(U, pc.gamma));
            }
            for (int c = 0; c < 3; ++c)
                line_residual(opt.scheme, u.data() + static_cast<std::size_t>(c) * T,
                              f[c].data(), T, lf_alpha, grid.dx,
                              out.data() + static_cast<std::size_t>(c) * T + g);
        } else {
            const double a = pc.advection_speed;
            std::vector<double> f(T);
            for (int j = 0; j < T; ++j)
                f[j] = a * u[j];
            line_residual(opt.scheme, u.data(), f.data(), T, std::abs(a), grid.dx,
                          out.data() + g);
        }
    }

    double max_speed(const Field& u) const {
        if (pc.equation != Equation1D::euler)
            return std::abs(pc.advection_speed);
        double a_x = 0.0;
        for (int j = 0; j <= grid.N; ++j) {
            const int point = idx(j);
            const Eigen::Vector3d U(u[point], u[T + point],
                                    u[2 * static_cast<std::size_t>(T) + point]);
            a_x = std::max(a_x, euler_max_speed(U, pc.gamma));
        }
        return a_x;
    }
};

} // namespace

RunResult1D run_case(const ProblemCase1D& pc, const RunOptions1D& opt) {
    Driver1D drv(pc, opt);
    const OffsetGrid1D& grid = drv.grid;
    const int T = drv.T;

    Field u(static_cast<std::size_t>(drv.comps) * T, 0.0);
    if (pc.equation == Equation1D::euler) {
        if (!pc.euler_init)
            throw std::invalid_argument("run_case: missing euler_init");
        for (int j = 0; j <= grid.N; ++j) {
            const Eigen::Vector3d U = pc.euler_init(grid.x(j));
            u[drv.idx(j)] = U(0);
            u[T + drv.idx(j)] = U(1);
            u[2 * static_cast<std::size_t>(T) + drv.idx(j)] = U(2);
        }
    } else {
        if (!pc.scalar_init)
            throw std::invalid_argument("run_case: missing scalar_init");
        for (int j = 0; j <= grid.N; ++j)
            u[drv.idx(j)] = pc.scalar_init(grid.x(j));
    }

    StepControl ctrl;
    ctrl.cfl = opt.cfl;
    ctrl.k = opt.time_k > 0 ? opt.time_k
                            : (pc.shock_mode ? 3 : opt.scheme.order);

    const GhostFill fill = [&](Field& v, double t_n, double dt, int stage) {
        drv.fill(v, t_n, dt, stage);
    };
    const ResidualOp residual = [&](const Field& v, Field& out) {
        drv.residual(v, out);
    };

    RunResult1D res;
    res.grid = grid;
    res.x.resize(grid.N + 1);
    for (int j = 0; j <= grid.N; ++j)
        res.x[j] = grid.x(j);

    double t = 0.0;
    int steps = 0;
    constexpr int k_max_steps = 20000000;
    while (t < pc.t_end) {
        double dt = opt.dt_fixed > 0.0 ? opt.dt_fixed
                                       : ctrl.dt_1d(drv.max_speed(u), grid.dx);
        dt = clamp_dt(t, dt, pc.t_end);
        try {
            rk3_step(u, t, dt, fill, residual);
        } catch (const blow_up_error&) {
            res.blew_up = true;
            res.blow_step = steps;
            break;
        }
        t += dt;
        ++steps;

        // Blow-up surveillance: runaway but still finite values are recorded
        // as instability; losing positivity in an Euler run is a hard error.
        double umax = 0.0;
        for (int c = 0; c < drv.comps; ++c)
            for (int j = 0; j <= grid.N; ++j)
                umax = std::max(umax,
                                std::abs(u[static_cast<std::size_t>(c) * T + drv.idx(j)]));
        if (!std::isfinite(umax) || umax > opt.blow_up_threshold) {
            res.blew_up = true;
            res.blow_step = steps - 1;
            break;
        }
        if (pc.equation == Equation1D::euler) {
            for (int j = 0; j <= grid.N; ++j) {
                const int point = drv.idx(j);
                const Eigen::Vector3d U(u[point], u[T + point],
                                        u[2 * static_cast<std::size_t>(T) + point]);
                const double p = euler_pressure(U, pc.gamma);
                if (!(U(0) > 0.0) || !(p > 0.0)) {
                    std::ostringstream msg;
                    msg << "run_case: positivity lost at step " << steps << ", x = "
                        << grid.x(j) << " (rho = " << U(0) << ", p = " << p << ")";
                    throw std::runtime_error(msg.str());
                }
            }
        }
        if (steps >= k_max_steps)
            throw std::runtime_error("run_case: step limit exceeded");
    }
    res.t_final = t;
    res.steps = steps;

    if (pc.equation == Equation1D::euler) {
        res.rho.resize(grid.N + 1);
        res.mom.resize(grid.N + 1);
        res.ener.resize(grid.N + 1);
        for (int j = 0; j <= grid.N; ++j) {
            res.rho[j] = u[drv.idx(j)];
            res.mom[j] = u[T + drv.idx(j)];
            res.ener[j] = u[2 * static_cast<std::size_t>(T) + drv.idx(j)];
        }
    } else {
        res.scalar.resize(grid.N + 1);
        for (int j = 0; j <= grid.N; ++j)
            res.scalar[j] = u[drv.idx(j)];
    }

    if (!res.blew_up) {
        if (pc.equation == Equation1D::euler && pc.euler_exact) {
            std::vector<double> exact(grid.N + 1);
            for (int j = 0; j <= grid.N; ++j)
                exact[j] = pc.euler_exact(grid.x(j), res.t_final)(0);
            const auto norms = error_norms(res.rho, exact);
            res.has_error = true;
            res.l1 = norms.first;
            res.linf = norms.second;
        } else if (pc.equation == Equation1D::advection && pc.scalar_exact) {
            std::vector<double> exact(grid.N + 1);
            for (int j = 0; j <= grid.N; ++j)
                exact[j] = pc.scalar_exact(grid.x(j), res.t_final);
            const auto norms = error_norms(res.scalar, exact);
            res.has_error = true;
            res.l1 = norms.first;
            res.linf = norms.second;
        }
    }
    return res;
}

std::pair<double, double> error_norms(const std::vector<double>& numeric,
                                      const std::vector<double>& exact,
                                      const std::vector<char>& mask) {
    if (numeric.size() != exact.size())
        throw std::invalid_argument("error_norms: size mismatch");
    if (!mask.empty() && mask.size() != numeric.size())
        throw std::invalid_argument("error_norms: mask size mismatch");
    double sum = 0.0, sup = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        if (!mask.empty() && !mask[i])
            continue;
        const double e = std::abs(numeric[i] - exact[i]);
        sum += e;
        sup = std::max(sup, e);
        ++count;
    }
    if (count == 0)
        return {0.0, 0.0};
    return {sum / static_cast<double>(count), sup};
}

std::vector<ConvergenceRow> convergence_table(const ProblemCase1D& pc,
                                              const RunOptions1D& base,
                                              const std::vector<int>& resolutions) {
    if (resolutions.size() < 2)
        throw std::invalid_argument("convergence_table: need at least 2 resolutions");
    std::vector<ConvergenceRow> rows;
    for (int N : resolutions) {
        RunOptions1D opt = base;
        opt.N = N;
        const RunResult1D r = run_case(pc, opt);
        if (r.blew_up)
            throw std::runtime_error("convergence_table: run blew up at N = " +
                                     std::to_string(N));
        if (!r.has_error)
            throw std::runtime_error("convergence_table: case has no exact solution");
        ConvergenceRow row;
        row.N = N;
        row.h = r.grid.dx;
        row.l1 = r.l1;
        row.linf = r.linf;
        if (!rows.empty()) {
            const ConvergenceRow& prev = rows.back();
            const double denom = std::log(prev.h / row.h);
            row.l1_order = std::log(prev.l1 / row.l1) / denom;
            row.linf_order = std::log(prev.linf / row.linf) / denom;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace silw
