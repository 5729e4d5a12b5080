#pragma once

// ============================================================================
// Ghost-point construction on embedded (non body-fitted) 2D grids.
//
// For every geometry ghost P the grid supplies a foot point P_a on the
// boundary, the outward normal angle theta, and the distance |P - P_a|. The
// fill then
//   1. fits a bivariate polynomial of total degree d-1 to the interior
//      values near P_a (unweighted least squares, coordinates scaled by
//      delta = hypot(dx, dy)),
//   2. rotates the extrapolated state into the frame whose x-axis is the
//      outward normal and recovers the boundary state U*(0) and normal
//      derivative U*(1) from the inflow-case machinery (ILW rows plus
//      outgoing-characteristic extrapolations; the tangential flux term
//      enters the derivative right-hand side as Res = -[B(U_ext) W]),
//   3. samples the same fit at the auxiliary points P_k = P_a - k alpha
//      delta n, k = 1..d-kd, and
//   4. evaluates the one-dimensional auxiliary-point polynomial q in the
//      scaled normal coordinate s = -x_hat/delta at s = -|P - P_a|/delta,
//      rotating the result back to the global frame.
//
// The least-squares stencil starts as all interior points within radius
// (d+1) max(dx, dy) of P_a and is enlarged (up to a few times) until it
// holds at least twice as many points as fitted monomials. Stencils and
// their pseudo-inverses depend only on the grid, so they are precomputed
// once per (grid, d) pair.
//
// With shock_safe set, any ghost whose recovered boundary state or final
// value turns nonphysical falls back to copying the nearest interior value
// (first-order but sign-preserving); without it such states throw.
// ============================================================================

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "silw/boundary1d.hpp"
#include "silw/embedded.hpp"

namespace silw {

using Field2 = std::vector<double>;              // nx*ny, row-major (j*nx + i)
using EulerField2D = std::array<Field2, 4>;      // component-major conserved

// Number of bivariate monomials of total degree <= deg.
int n_monomials_2d(int deg);

// ----------------------------------------------------------------------------
// Boundary specifications. Closures return data in the global (unrotated)
// frame; state_tt/g_tt may be left empty and then count as zero in the
// stage-corrected boundary ladders.
// ----------------------------------------------------------------------------

struct EulerBC2D {
    enum class Kind { wall, dirichlet };
    Kind kind = Kind::wall;

    using StateFn = std::function<Eigen::Vector4d(double x, double y, double t)>;
    StateFn state;    // exact conserved state (dirichlet only)
    StateFn state_t;  // its time derivative
    StateFn state_tt; // optional second time derivative

    static EulerBC2D wall();
    static EulerBC2D dirichlet(StateFn state, StateFn state_t, StateFn state_tt = {});
};

// Linear advection u_t + ax u_x + ay u_y = 0 with Dirichlet data g on the
// inflow part of the boundary (a.n < 0); elsewhere ghosts are filled by
// evaluating the interior fit (pure extrapolation).  g must be evaluable in
// a small neighbourhood of the boundary: the inverse Lax-Wendroff step
// samples it along the boundary tangent to form the tangential derivative.
struct AdvectionBC2D {
    double ax = 1.0;
    double ay = 1.0;

    using DataFn = std::function<double(double x, double y, double t)>;
    DataFn g;
    DataFn g_t;
    DataFn g_tt; // optional
};

// ----------------------------------------------------------------------------
// Precomputed per-ghost least-squares operators
// ----------------------------------------------------------------------------

struct GhostStencil {
    std::size_t ghost = 0;          // index into grid.ghosts
    std::vector<std::size_t> cells; // flattened interior indices, row-major
    std::size_t nearest_cell = 0;   // fallback source (closest to the ghost)
    double radius = 0.0;            // accepted stencil radius
    Eigen::MatrixXd pinv;           // n_monomials x cells.size()
};

class GhostOp2D {
public:
    // Builds stencils for every geometry ghost of the grid. Throws
    // std::runtime_error when a stencil stays short of 2x the monomial count
    // after enlargement, or when the fit matrix is rank deficient.
    GhostOp2D(const EmbeddedGrid2D& grid, int d);

    int degree() const { return d_; }
    const EmbeddedGrid2D& grid() const { return *grid_; }
    const std::vector<GhostStencil>& stencils() const { return stencils_; }

    // Fills every geometry ghost of `f` for the given RK stage (0..2) at time
    // t_n. cfg.d must equal degree(); cfg.kd <= 2; the auxiliary-point
    // treatment is required (the Taylor variant is 1D-only here).
    void fill_euler(EulerField2D& f, double gamma, const SILWConfig& cfg,
                    const EulerBC2D& bc, double t_n, double dt, int stage,
                    bool shock_safe) const;

    void fill_scalar(Field2& f, const SILWConfig& cfg, const AdvectionBC2D& bc,
                     double t_n, double dt, int stage) const;

private:
    const EmbeddedGrid2D* grid_;
    int d_;
    std::vector<GhostStencil> stencils_;
};

} // namespace silw
