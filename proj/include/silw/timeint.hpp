#pragma once

// ============================================================================
// TVD-RK3 time stepping with stage-corrected inflow boundary data and the
// order-preserving time-step laws used by the accuracy/stability studies.
//
// Stage corrections (avoiding boundary order reduction):
//   stage 0: g(t_n)
//   stage 1: g(t_n) + dt g'(t_n)
//   stage 2: g(t_n) + dt/2 g'(t_n) + dt^2/4 g''(t_n)
// The same stage operators are applied to the derivative stack g', g'', ...
// (truncated where higher derivatives are unavailable) so that ILW
// conditions see consistently shifted data at each stage.
// ============================================================================

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace silw {

// Scalar boundary signal with closed-form time derivatives. g3 may be left
// empty when no fourth ILW condition is used; it is then treated as zero.
struct BoundaryFunction {
    std::function<double(double)> g;
    std::function<double(double)> g1;
    std::function<double(double)> g2;
    std::function<double(double)> g3;

    // k-th time derivative at t (k = 0..3); missing closures count as zero.
    double deriv(int k, double t) const;

    static BoundaryFunction constant(double value);
};

// Stage-corrected boundary value for RK3 stage 0, 1, or 2.
double stage_boundary_data(const BoundaryFunction& f, double t_n, double dt, int stage);

// Applies the stage operator to a Taylor stack g[0..n-1] = (g, g', ...);
// entries beyond the stack are treated as zero. out must hold n values.
void stage_boundary_taylor(const double* g, int n, double dt, int stage, double* out);

// ----------------------------------------------------------------------------
// Time-step laws: dt = cfl dx^{k/3} / a_x in 1D and
// dt = cfl / (a_x/dx^{k/3} + a_y/dy^{k/3}) in 2D, with k = d for accuracy
// studies and k = 3 for shock/stability runs.
// ----------------------------------------------------------------------------

struct StepControl {
    double cfl = 0.6;
    int k = 3; // law exponent

    double dt_1d(double a_x, double dx) const;
    double dt_2d(double a_x, double a_y, double dx, double dy) const;
};

// Shortens dt so the final step lands exactly on t_end.
double clamp_dt(double t, double dt, double t_end);

// ----------------------------------------------------------------------------
// RK3 stepper
// ----------------------------------------------------------------------------

// Thrown when a stage produces a non-finite value; run drivers treat this as
// a recorded blow-up result, not a crash.
class blow_up_error : public std::runtime_error {
public:
    blow_up_error(int stage, std::size_t index);
    int stage() const { return stage_; }
    std::size_t index() const { return index_; }

private:
    int stage_ = 0;
    std::size_t index_ = 0;
};

using Field = std::vector<double>;

// fill(u, t_n, dt, stage) refreshes ghost entries for the given stage;
// residual(u, out) writes L_h(u).
using GhostFill = std::function<void(Field&, double, double, int)>;
using ResidualOp = std::function<void(const Field&, Field&)>;

// Advances u from t_n to t_n + dt:
//   u1 = u + dt L(u);  u2 = 3/4 u + 1/4 u1 + 1/4 dt L(u1);
//   u  = 1/3 u + 2/3 u2 + 2/3 dt L(u2),
// with ghosts refreshed before every residual evaluation.
void rk3_step(Field& u, double t_n, double dt, const GhostFill& fill,
              const ResidualOp& residual);

} // namespace silw
