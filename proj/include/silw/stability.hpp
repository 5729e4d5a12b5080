#pragma once

// ============================================================================
// Linear stability analysis of the boundary treatment for u_t + u_x = 0.
//
// The semi-discrete scheme with the d-th order upwind operator, the ghost
// closure at the (homogeneous) inflow boundary, and plain extrapolation at
// the outflow boundary reads dU/dt = (1/dx) Q U with a dimensionless matrix
// Q.  Eigenvalues s of Q that stay put while the grid size N changes are the
// boundary-induced ("fixed") modes; the scheme is stable at CFL number
// lambda iff every such mode satisfies |z(lambda*s)| <= 1 for the third
// order TVD Runge-Kutta growth factor z(mu) = 1 + mu + mu^2/2 + mu^3/6.
// Scanning (C_a, alpha) cells locates the stable alpha intervals; Fourier
// analysis of the pure Cauchy problem gives the reference CFL limits.
// ============================================================================

#include <complex>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "silw/boundary1d.hpp"

namespace silw {

// Tolerances and defaults used throughout the analysis.
constexpr double stability_tol = 1e-10;  // stable iff max|z| <= 1 + stability_tol
constexpr double fixed_match_tol = 1e-4; // absolute eigenvalue matching tolerance
std::vector<int> default_N_set();        // {30, 40, 50, 60}
std::vector<double> default_Ca_grid();   // {1e-6, 0.01..0.99, 1-1e-6}

// Inclusive range lo..hi in steps of `step`, rounded to the step grid.
std::vector<double> alpha_range(double lo, double hi, double step = 0.01);

// ----------------------------------------------------------------------------
// matrix assembly and eigenvalues
// ----------------------------------------------------------------------------

struct DiscretizationMatrix {
    SILWConfig cfg;
    double C_a = 0.0;
    double C_b = 0.5;
    int N = 0;             // interior points x_0..x_N
    std::vector<double> Q; // (N+1)^2 entries, row-major

    int size() const { return N + 1; }
    double q(int row, int col) const { return Q[std::size_t(row) * size() + col]; }
};

// Folds the left ghost closure (Algorithm 1/2 with g = 0) and the right
// extrapolation closure into the negated upwind coefficients.
DiscretizationMatrix assemble_Q(const SILWConfig& cfg, double C_a, int N,
                                double C_b = 0.5);

// All eigenvalues of a dense real n x n matrix (row-major storage).
std::vector<std::complex<double>> eigenvalues(const std::vector<double>& M, int n);

// ----------------------------------------------------------------------------
// fixed (N-invariant) eigenvalues and amplification
// ----------------------------------------------------------------------------

// Values present (within tol, absolute) in every spectrum, deduplicated.
// Candidates are drawn from the first spectrum.
std::vector<std::complex<double>>
match_fixed(const std::vector<std::vector<std::complex<double>>>& spectra, double tol);

// Fixed eigenvalues of Q across the given grid sizes (>= 3 required;
// empty N_set selects the default).
std::vector<std::complex<double>> fixed_eigenvalues(const SILWConfig& cfg, double C_a,
                                                    double C_b = 0.5,
                                                    std::vector<int> N_set = {},
                                                    double tol = fixed_match_tol);

// Third-order TVD RK growth factor z(mu) and the modulus |z(s*lambda)|.
std::complex<double> rk3_growth(std::complex<double> mu);
double amplification(std::complex<double> s, double lambda_cfl);

// ----------------------------------------------------------------------------
// (C_a, alpha) scan
// ----------------------------------------------------------------------------

struct ScanCell {
    double C_a = 0.0;
    double alpha = 0.0;
    int n_fixed = 0;
    double max_abs_z = 0.0; // 0 when no fixed eigenvalues exist
    bool stable = true;
};

struct StabilityScan {
    std::vector<double> C_a_grid;
    std::vector<double> alpha_grid;
    double lambda_cfl = 0.0;
    std::vector<ScanCell> cells; // cells[ia * C_a_grid.size() + ic]

    const ScanCell& cell(std::size_t ia, std::size_t ic) const {
        return cells[ia * C_a_grid.size() + ic];
    }
    bool alpha_stable_for_all(std::size_t ia) const;

    // Maximal alpha intervals [lo, hi] stable for every C_a in the grid.
    std::vector<std::pair<double, double>> stable_intervals() const;
};

// Full scan; cfg.alpha is overridden cell by cell.
StabilityScan scan_alpha(const SILWConfig& cfg, const std::vector<double>& C_a_grid,
                         const std::vector<double>& alpha_grid, double lambda_cfl);

// ----------------------------------------------------------------------------
// Cauchy-problem CFL limits (Fourier analysis)
// ----------------------------------------------------------------------------

// Fourier symbol of the d-th order upwind operator: sigma(xi) with
// dU/dt = (1/dx) sigma(xi) U for the mode e^{i xi j}.
std::complex<double> upwind_symbol(int d, double xi);

// Largest lambda with |z(lambda * symbol(xi))| <= 1 + 1e-12 over the sweep,
// located by bisection to `bisect_tol`.
double max_cfl_for_symbol(const std::function<std::complex<double>(double)>& symbol,
                          double bisect_tol = 1e-4, int n_xi = 8192);

// Cauchy CFL limit of the d-th order upwind scheme under third-order TVD RK.
double cauchy_cfl_max(int d);

// The two-decimal CFL table used by the (C_a, alpha) scans.
double table2_lambda(int d);

} // namespace silw
