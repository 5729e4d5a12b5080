#include "silw/ghost2d.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "silw/euler.hpp"
#include "silw/timeint.hpp"

namespace silw {

namespace {

// Bivariate monomials of total degree <= deg at scaled coordinates (sx, sy),
// degree-major: 1, x, y, x^2, xy, y^2, ...
void monomial_row(int deg, double sx, double sy, double* row) {
    std::vector<double> px(deg + 1, 1.0), py(deg + 1, 1.0);
    for (int k = 1; k <= deg; ++k) {
        px[k] = px[k - 1] * sx;
        py[k] = py[k - 1] * sy;
    }
    int idx = 0;
    for (int total = 0; total <= deg; ++total) {
        for (int k = 0; k <= total; ++k) {
            row[idx++] = px[total - k] * py[k];
        }
    }
}

bool admissible(const Eigen::Vector4d& U, double gamma) {
    if (!U.allFinite() || U[0] <= 0.0) {
        return false;
    }
    return euler_pressure(U, gamma) > 0.0;
}

std::string ghost_label(const GhostInfo& gi) {
    return "ghost (" + std::to_string(gi.i) + ", " + std::to_string(gi.j) + ")";
}

// Stage-corrected value and first derivative of a boundary signal given the
// raw Taylor stack (g, g', g'') at t_n.
void stage_pair(const double* stack, double dt, int stage, double& value,
                double& slope) {
    double out[3];
    stage_boundary_taylor(stack, 3, dt, stage, out);
    value = out[0];
    slope = out[1];
}

void check_fill_config(const SILWConfig& cfg, int d) {
    validate(cfg);
    if (cfg.d != d) {
        throw std::invalid_argument("GhostOp2D: config order " + std::to_string(cfg.d) +
                                    " does not match the precomputed degree " +
                                    std::to_string(d));
    }
    if (cfg.kd < 1 || cfg.kd > 2) {
        throw std::invalid_argument("GhostOp2D: 2D fills support kd = 1 or 2, got " +
                                    std::to_string(cfg.kd));
    }
    if (cfg.treatment != Treatment::silw_new) {
        throw std::invalid_argument(
            "GhostOp2D: only the auxiliary-point treatment is available in 2D");
    }
}

} // namespace

int n_monomials_2d(int deg) {
    if (deg < 0) {
        throw std::invalid_argument("n_monomials_2d: negative degree");
    }
    return (deg + 1) * (deg + 2) / 2;
}

EulerBC2D EulerBC2D::wall() { return EulerBC2D{}; }

EulerBC2D EulerBC2D::dirichlet(StateFn state, StateFn state_t, StateFn state_tt) {
    EulerBC2D bc;
    bc.kind = Kind::dirichlet;
    bc.state = std::move(state);
    bc.state_t = std::move(state_t);
    bc.state_tt = std::move(state_tt);
    return bc;
}

// ----------------------------------------------------------------------------
// Stencil construction
// ----------------------------------------------------------------------------

GhostOp2D::GhostOp2D(const EmbeddedGrid2D& grid, int d) : grid_(&grid), d_(d) {
    if (d < 2) {
        throw std::invalid_argument("GhostOp2D: order must be at least 2");
    }
    const int n_mono = n_monomials_2d(d - 1);
    const double h = std::max(grid.dx, grid.dy);
    const double delta = grid.delta();

    for (std::size_t g = 0; g < grid.ghosts.size(); ++g) {
        const GhostInfo& gi = grid.ghosts[g];
        if (gi.source != GhostSource::geometry) {
            continue;
        }
        const Vec2 pa = gi.foot.point;

        GhostStencil st;
        st.ghost = g;
        double radius = (d + 1) * h;
        for (int attempt = 0; attempt < 4; ++attempt) {
            st.cells.clear();
            const int i_lo = static_cast<int>(std::floor((pa.x - radius - grid.x0) / grid.dx));
            const int i_hi = static_cast<int>(std::ceil((pa.x + radius - grid.x0) / grid.dx));
            const int j_lo = static_cast<int>(std::floor((pa.y - radius - grid.y0) / grid.dy));
            const int j_hi = static_cast<int>(std::ceil((pa.y + radius - grid.y0) / grid.dy));
            for (int j = std::max(0, j_lo); j <= std::min(grid.ny - 1, j_hi); ++j) {
                for (int i = std::max(0, i_lo); i <= std::min(grid.nx - 1, i_hi); ++i) {
                    if (!grid.is_interior(i, j)) {
                        continue;
                    }
                    const double rx = grid.x(i) - pa.x;
                    const double ry = grid.y(j) - pa.y;
                    if (rx * rx + ry * ry <= radius * radius) {
                        st.cells.push_back(static_cast<std::size_t>(j) * grid.nx + i);
                    }
                }
            }
            if (static_cast<int>(st.cells.size()) >= 2 * n_mono) {
                break;
            }
            radius *= 1.25;
        }
        if (static_cast<int>(st.cells.size()) < 2 * n_mono) {
            throw std::runtime_error("GhostOp2D: stencil for " + ghost_label(gi) +
                                     " has only " + std::to_string(st.cells.size()) +
                                     " interior points; need " + std::to_string(2 * n_mono));
        }
        st.radius = radius;

        const std::size_t n_cells = st.cells.size();
        Eigen::MatrixXd M(n_cells, n_mono);
        std::vector<double> row(n_mono);
        double best = std::numeric_limits<double>::infinity();
        const double gx = grid.x(gi.i), gy = grid.y(gi.j);
        for (std::size_t r = 0; r < n_cells; ++r) {
            const int i = static_cast<int>(st.cells[r] % grid.nx);
            const int j = static_cast<int>(st.cells[r] / grid.nx);
            monomial_row(d - 1, (grid.x(i) - pa.x) / delta, (grid.y(j) - pa.y) / delta,
                         row.data());
            for (int m = 0; m < n_mono; ++m) {
                M(r, m) = row[m];
            }
            const double dist = std::hypot(grid.x(i) - gx, grid.y(j) - gy);
            if (dist < best) {
                best = dist;
                st.nearest_cell = st.cells[r];
            }
        }

        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
        if (qr.rank() < n_mono) {
            throw std::runtime_error("GhostOp2D: rank-deficient fit for " + ghost_label(gi) +
                                     " (rank " + std::to_string(qr.rank()) + " of " +
                                     std::to_string(n_mono) + " with " +
                                     std::to_string(n_cells) + " points)");
        }
        st.pinv = qr.solve(Eigen::MatrixXd::Identity(n_cells, n_cells));
        stencils_.push_back(std::move(st));
    }
}

// ----------------------------------------------------------------------------
// Euler fill
// ----------------------------------------------------------------------------

void GhostOp2D::fill_euler(EulerField2D& f, double gamma, const SILWConfig& cfg,
                           const EulerBC2D& bc, double t_n, double dt, int stage,
                           bool shock_safe) const {
    check_fill_config(cfg, d_);
    if (bc.kind == EulerBC2D::Kind::dirichlet && (!bc.state || !bc.state_t)) {
        throw std::invalid_argument("fill_euler: dirichlet data needs state and state_t");
    }
    const EmbeddedGrid2D& grid = *grid_;
    for (const Field2& comp : f) {
        if (comp.size() != static_cast<std::size_t>(grid.nx) * grid.ny) {
            throw std::invalid_argument("fill_euler: field size does not match the grid");
        }
    }

    const double delta = grid.delta();
    const int n_mono = n_monomials_2d(d_ - 1);
    const int n_aux = d_ - cfg.kd;
    std::vector<double> mono(n_mono);

    for (const GhostStencil& st : stencils_) {
        const GhostInfo& gi = grid.ghosts[st.ghost];
        const std::size_t cell = static_cast<std::size_t>(gi.j) * grid.nx + gi.i;
        const double theta = gi.foot.theta;
        const double ct = std::cos(theta), snt = std::sin(theta);
        const Vec2 pa = gi.foot.point;

        auto fallback = [&]() {
            for (int c = 0; c < 4; ++c) {
                f[c][cell] = f[c][st.nearest_cell];
            }
        };

        // Least-squares coefficients per conserved component.
        Eigen::VectorXd vals(st.cells.size());
        std::array<Eigen::VectorXd, 4> coeff;
        for (int c = 0; c < 4; ++c) {
            for (std::size_t r = 0; r < st.cells.size(); ++r) {
                vals[r] = f[c][st.cells[r]];
            }
            coeff[c] = st.pinv * vals;
        }

        Eigen::Vector4d U_ext, Ux, Uy;
        for (int c = 0; c < 4; ++c) {
            U_ext[c] = coeff[c][0];
            Ux[c] = coeff[c][1] / delta;
            Uy[c] = coeff[c][2] / delta;
        }
        if (!admissible(U_ext, gamma)) {
            if (shock_safe) {
                fallback();
                continue;
            }
            throw std::runtime_error("fill_euler: nonphysical extrapolated state at " +
                                     ghost_label(gi));
        }

        const Eigen::Vector4d U_ext_hat = rotate_state(U_ext, theta);
        const Eigen::Vector4d Xn_hat = rotate_state(ct * Ux + snt * Uy, theta);
        const Eigen::Vector4d W_hat = rotate_state(-snt * Ux + ct * Uy, theta);

        const EulerEigen eig = euler_eigenstructure(U_ext_hat, gamma);
        const InflowCase cs = (bc.kind == EulerBC2D::Kind::wall)
                                  ? wall_case_2d()
                                  : inflow_case_2d(eig.u, eig.c);

        // Stage-corrected boundary data in the rotated frame.
        Eigen::Vector4d g0 = Eigen::Vector4d::Zero();
        Eigen::Vector4d g1 = Eigen::Vector4d::Zero();
        if (bc.kind == EulerBC2D::Kind::dirichlet) {
            const Eigen::Vector4d G = rotate_state(bc.state(pa.x, pa.y, t_n), theta);
            const Eigen::Vector4d G1 = rotate_state(bc.state_t(pa.x, pa.y, t_n), theta);
            const Eigen::Vector4d G2 =
                bc.state_tt ? rotate_state(bc.state_tt(pa.x, pa.y, t_n), theta)
                            : Eigen::Vector4d::Zero();
            for (int c = 0; c < 4; ++c) {
                const double stack[3] = {G[c], G1[c], G2[c]};
                stage_pair(stack, dt, stage, g0[c], g1[c]);
            }
        }

        const int m = static_cast<int>(cs.prescribed.size());
        Eigen::VectorXd gvec(m);
        for (int i = 0; i < m; ++i) {
            gvec[i] = g0[cs.prescribed[i]];
        }
        const Eigen::VectorXd V = eig.L * U_ext_hat;
        const BoundarySolve sol0 =
            solve_boundary_state(cs, gvec, eig.L, V, eig.lambda, eig.c);
        Eigen::Vector4d U0_hat = sol0.U;
        if (!admissible(U0_hat, gamma)) {
            if (shock_safe) {
                fallback();
                continue;
            }
            throw std::runtime_error("fill_euler: nonphysical boundary state at " +
                                     ghost_label(gi));
        }

        Eigen::Vector4d U1_hat = Eigen::Vector4d::Zero();
        if (cfg.kd == 2) {
            const Eigen::Matrix4d A = euler_jacobian_x(U0_hat, gamma);
            const Eigen::Vector4d Res = -(euler_jacobian_y(U_ext_hat, gamma) * W_hat);
            Eigen::VectorXd rhs(m);
            for (int i = 0; i < m; ++i) {
                rhs[i] = -g1[cs.prescribed[i]] + Res[cs.prescribed[i]];
            }
            const Eigen::VectorXd V1 = eig.L * Xn_hat;
            const BoundarySolve sol1 =
                solve_boundary_derivative(cs, A, rhs, eig.L, V1, eig.lambda, eig.c);
            U1_hat = sol1.U;
        }

        // Auxiliary values from the fit, rotated into the local frame.
        std::vector<double> aux_s(n_aux);
        std::vector<std::array<double, 4>> aux_hat(n_aux);
        for (int k = 1; k <= n_aux; ++k) {
            const double sx = -k * cfg.alpha * ct;
            const double sy = -k * cfg.alpha * snt;
            monomial_row(d_ - 1, sx, sy, mono.data());
            Eigen::Vector4d Uk;
            for (int c = 0; c < 4; ++c) {
                double acc = 0.0;
                for (int mm = 0; mm < n_mono; ++mm) {
                    acc += mono[mm] * coeff[c][mm];
                }
                Uk[c] = acc;
            }
            const Eigen::Vector4d Uk_hat = rotate_state(Uk, theta);
            aux_s[k - 1] = k * cfg.alpha;
            for (int c = 0; c < 4; ++c) {
                aux_hat[k - 1][c] = Uk_hat[c];
            }
        }

        // Hermite evaluation in the scaled normal coordinate.
        const std::vector<double> eval_s = {-gi.foot.distance / delta};
        Eigen::Vector4d ghost_hat;
        std::vector<double> sb, aux_v(n_aux), out;
        for (int c = 0; c < 4; ++c) {
            sb.assign(1, U0_hat[c]);
            if (cfg.kd == 2) {
                sb.push_back(-delta * U1_hat[c]);
            }
            for (int k = 0; k < n_aux; ++k) {
                aux_v[k] = aux_hat[k][c];
            }
            silw_new_eval(sb, aux_s, aux_v, eval_s, out);
            ghost_hat[c] = out[0];
        }

        const Eigen::Vector4d U_ghost = rotate_state_back(ghost_hat, theta);
        if (!admissible(U_ghost, gamma)) {
            if (shock_safe) {
                fallback();
                continue;
            }
            throw std::runtime_error("fill_euler: nonphysical ghost value at " +
                                     ghost_label(gi));
        }
        for (int c = 0; c < 4; ++c) {
            f[c][cell] = U_ghost[c];
        }
    }
}

// ----------------------------------------------------------------------------
// Scalar (linear advection) fill
// ----------------------------------------------------------------------------

void GhostOp2D::fill_scalar(Field2& f, const SILWConfig& cfg, const AdvectionBC2D& bc,
                            double t_n, double dt, int stage) const {
    check_fill_config(cfg, d_);
    const EmbeddedGrid2D& grid = *grid_;
    if (f.size() != static_cast<std::size_t>(grid.nx) * grid.ny) {
        throw std::invalid_argument("fill_scalar: field size does not match the grid");
    }

    const double delta = grid.delta();
    const int n_mono = n_monomials_2d(d_ - 1);
    const int n_aux = d_ - cfg.kd;
    const double eps = eps_sonic(std::hypot(bc.ax, bc.ay));
    std::vector<double> mono(n_mono);

    for (const GhostStencil& st : stencils_) {
        const GhostInfo& gi = grid.ghosts[st.ghost];
        const std::size_t cell = static_cast<std::size_t>(gi.j) * grid.nx + gi.i;
        const double theta = gi.foot.theta;
        const double ct = std::cos(theta), snt = std::sin(theta);
        const Vec2 pa = gi.foot.point;

        Eigen::VectorXd vals(st.cells.size());
        for (std::size_t r = 0; r < st.cells.size(); ++r) {
            vals[r] = f[st.cells[r]];
        }
        const Eigen::VectorXd coeff = st.pinv * vals;

        const double c_n = bc.ax * ct + bc.ay * snt; // outward normal speed

        if (c_n < -eps && bc.g) {
            // Inflow: ILW value/derivative pair plus auxiliary points.
            const double stack[3] = {bc.g(pa.x, pa.y, t_n),
                                     bc.g_t ? bc.g_t(pa.x, pa.y, t_n) : 0.0,
                                     bc.g_tt ? bc.g_tt(pa.x, pa.y, t_n) : 0.0};
            double geff = 0.0, g1eff = 0.0;
            stage_pair(stack, dt, stage, geff, g1eff);

            std::vector<double> sb = {geff};
            if (cfg.kd == 2) {
                // The tangential derivative comes from the boundary data
                // itself, sampled along the tangent: the ILW identity
                // u_n = (-g' - c_t u_tan)/c_n would otherwise divide fit
                // noise by c_n, which can be arbitrarily small at feet
                // grazed by the characteristic.
                const double tau = 1e-3;
                auto data_at = [&](double s) {
                    const double qx = pa.x - snt * s, qy = pa.y + ct * s;
                    const double stk[3] = {bc.g(qx, qy, t_n),
                                           bc.g_t ? bc.g_t(qx, qy, t_n) : 0.0,
                                           bc.g_tt ? bc.g_tt(qx, qy, t_n) : 0.0};
                    double v = 0.0, vdot = 0.0;
                    stage_pair(stk, dt, stage, v, vdot);
                    return v;
                };
                const double u_tan =
                    (data_at(-2.0 * tau) - 8.0 * data_at(-tau) +
                     8.0 * data_at(tau) - data_at(2.0 * tau)) / (12.0 * tau);
                const double c_t = -bc.ax * snt + bc.ay * ct;
                sb.push_back(-delta * (-g1eff - c_t * u_tan) / c_n);
            }

            std::vector<double> aux_s(n_aux), aux_v(n_aux);
            for (int k = 1; k <= n_aux; ++k) {
                monomial_row(d_ - 1, -k * cfg.alpha * ct, -k * cfg.alpha * snt, mono.data());
                double acc = 0.0;
                for (int mm = 0; mm < n_mono; ++mm) {
                    acc += mono[mm] * coeff[mm];
                }
                aux_s[k - 1] = k * cfg.alpha;
                aux_v[k - 1] = acc;
            }

            std::vector<double> out;
            silw_new_eval(sb, aux_s, aux_v, {-gi.foot.distance / delta}, out);
            f[cell] = out[0];
        } else {
            // Outflow (or a boundary point grazed by the characteristic):
            // evaluate the interior fit at the ghost point itself.
            monomial_row(d_ - 1, (grid.x(gi.i) - pa.x) / delta,
                         (grid.y(gi.j) - pa.y) / delta, mono.data());
            double acc = 0.0;
            for (int mm = 0; mm < n_mono; ++mm) {
                acc += mono[mm] * coeff[mm];
            }
            f[cell] = acc;
        }
    }
}

} // namespace silw
