#pragma once

// ============================================================================
// Ghost-point construction at a Dirichlet inflow boundary.
//
// Everything is formulated in scaled coordinates s = (x - a)/dx with the
// boundary at s = 0 and the first interior point at s = C_a, so interior
// points sit at s = C_a + j. Boundary data enters in scaled form,
//   sb[k] = u^{*(k)} * dx^k,   k = 0..kd-1,
// where u^{*(k)} is the physical k-th spatial derivative prescribed at the
// boundary (ILW ladder). Two treatments are provided:
//   * the auxiliary-point construction: q matches the kd boundary conditions
//     and interpolates the interior interpolant p at s = alpha, 2*alpha, ...;
//   * the Taylor construction: q is the Taylor polynomial whose higher
//     coefficients are extrapolated derivatives of p at the boundary.
// ============================================================================

#include <vector>

namespace silw {

enum class Treatment { silw_new, silw_original };

struct SILWConfig {
    int d = 5;            // interior points used / formal order
    int kd = 2;           // number of ILW derivative conditions, 1..d
    double alpha = 1.0;   // auxiliary-point spacing in units of dx
    Treatment treatment = Treatment::silw_new;
};

void validate(const SILWConfig& cfg);

// ----------------------------------------------------------------------------
// Scaled core builders (shared by the 1D fills and the 2D normal-line fills).
// ----------------------------------------------------------------------------

// Auxiliary-point construction: evaluates the polynomial q of degree
// sb.size() + aux_s.size() - 1 with
//   q^(k)(0) = sb[k],  k = 0..sb.size()-1,
//   q(aux_s[i]) = aux_v[i],
// at the locations eval_s. aux_s must be distinct and nonzero.
void silw_new_eval(const std::vector<double>& sb, const std::vector<double>& aux_s,
                   const std::vector<double>& aux_v, const std::vector<double>& eval_s,
                   std::vector<double>& out);

// Taylor construction: q(s) = sum_k ders[k] s^k / k!.
void silw_taylor_eval(const std::vector<double>& ders, const std::vector<double>& eval_s,
                      std::vector<double>& out);

// ----------------------------------------------------------------------------
// Runtime ghost fills. `u` holds the d interior values nearest the boundary
// (u[0] at s = C_a); ghosts_out[p-1] receives the value at s = C_a - p.
// With shock_safe the interior interpolant is replaced by the WENO-type
// extrapolation (dx_phys feeds its linear weights); otherwise dx_phys is
// ignored.
// ----------------------------------------------------------------------------

void new_silw_ghosts(const SILWConfig& cfg, double C_a, const double* u,
                     const std::vector<double>& sb, int n_ghost, bool shock_safe,
                     double dx_phys, double* ghosts_out);

void original_silw_ghosts(const SILWConfig& cfg, double C_a, const double* u,
                          const std::vector<double>& sb, int n_ghost, bool shock_safe,
                          double dx_phys, double* ghosts_out);

// Dispatches on cfg.treatment.
void silw_ghosts(const SILWConfig& cfg, double C_a, const double* u,
                 const std::vector<double>& sb, int n_ghost, bool shock_safe,
                 double dx_phys, double* ghosts_out);

// ----------------------------------------------------------------------------
// Precomputed linear weights (fast path for the linear solver and the
// eigenvalue analysis). Ghost p satisfies
//   u_{-p} = sum_j W[p-1][j] * u_j  +  sum_k G[p-1][k] * sb[k].
// ----------------------------------------------------------------------------

struct GhostWeights {
    std::vector<std::vector<double>> W; // [n_ghost][d]
    std::vector<std::vector<double>> G; // [n_ghost][kd]
};

GhostWeights left_ghost_weights(const SILWConfig& cfg, double C_a, int n_ghost);

// Outflow ghosts at the right boundary by plain d-point extrapolation:
//   u_{N+p} = sum_j E[p-1][j] * u_{N-d+1+j}.
std::vector<std::vector<double>> right_extrapolation_weights(int d, double C_b,
                                                             int n_ghost);

// ----------------------------------------------------------------------------
// ILW ladder for u_t + f(u)_x = 0 with u(a, t) = g(t) at an inflow boundary.
// g_derivs = {g, g', g'', ...} at the current time; fprime/fdoubleprime are
// f' and f'' at the boundary state g. Returns the physical derivatives
// u^{*(k)}, k = 0..kd-1. Orders k >= 3 are only available for linear fluxes
// (fdoubleprime == 0); nonlinear ladders beyond u^{*(2)} are not needed here.
// ----------------------------------------------------------------------------

std::vector<double> ilw_scalar_derivatives(int kd, const std::vector<double>& g_derivs,
                                           double fprime, double fdoubleprime);

} // namespace silw
