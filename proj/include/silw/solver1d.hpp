#pragma once

// ============================================================================
// 1D driver: WENO / linear-upwind interior residual, SILW ghost construction
// at the physical boundaries, TVD-RK3 in time, error norms and convergence
// tables. Blow-up (non-finite values or norms beyond a threshold) is a
// recorded result, not an exception; positivity loss in an Euler run aborts
// with diagnostics.
// ============================================================================

#include <utility>
#include <vector>

#include "silw/boundary1d.hpp"
#include "silw/grid.hpp"
#include "silw/problems1d.hpp"
#include "silw/weno.hpp"

namespace silw {

struct RunOptions1D {
    Scheme scheme;           // interior discretization
    SILWConfig silw;         // boundary treatment; silw.d <= scheme.order, so
                             // the boundary order can be studied in isolation
                             // under a higher-order interior
    int N = 100;             // interior points x_0..x_N
    double C_a = 0.5;        // left offset in units of dx
    double C_b = 0.5;        // right offset in units of dx
    double cfl = 0.6;
    int time_k = 0;          // dt-law exponent; 0 = scheme order (3 in shock mode)
    double dt_fixed = 0.0;   // > 0: constant time step (stability verification)
    double blow_up_threshold = 1e6;
};

struct RunResult1D {
    bool blew_up = false;
    int blow_step = -1;  // step index at which the run blew up
    double t_final = 0.0;
    int steps = 0;
    OffsetGrid1D grid;
    std::vector<double> x;  // interior coordinates x_0..x_N

    std::vector<double> scalar;            // advection runs
    std::vector<double> rho, mom, ener;    // Euler runs

    bool has_error = false;  // exact solution available and run completed
    double l1 = 0.0;         // L1/Linf of the scalar field or of rho
    double linf = 0.0;
};

RunResult1D run_case(const ProblemCase1D& pc, const RunOptions1D& opt);

// L1 (mean absolute) and Linf deviation over entries where mask is nonzero;
// an empty mask selects everything. Sizes must agree.
std::pair<double, double> error_norms(const std::vector<double>& numeric,
                                      const std::vector<double>& exact,
                                      const std::vector<char>& mask = {});

struct ConvergenceRow {
    int N = 0;
    double h = 0.0;
    double l1 = 0.0;
    double l1_order = 0.0;  // 0 on the first row
    double linf = 0.0;
    double linf_order = 0.0;
};

// Runs the case at each resolution and assembles the error/order table;
// orders use log(e1/e2)/log(h1/h2) so non-dyadic sequences work too.
std::vector<ConvergenceRow> convergence_table(const ProblemCase1D& pc,
                                              const RunOptions1D& base,
                                              const std::vector<int>& resolutions);

} // namespace silw
