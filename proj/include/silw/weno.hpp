#pragma once

// ============================================================================
// Interface flux reconstruction. Two families share one entry point:
//   * linear upwind faces of orders 3..13, derived from the exact rational
//     derivative operators in stencil.hpp by partial summation, and
//   * nonlinear WENO3 / WENO5 faces with the classical smoothness indicators
//     and linear weights, regularised by eps = dx^2 so the design order holds
//     on smooth data through critical points.
// Fluxes are split globally, f± = (f ± lf_alpha u)/2, and each half is
// reconstructed with the appropriately biased face, so pure advection with
// lf_alpha = 1 reduces exactly to the linear derivative operator.
// ============================================================================

#include <cstddef>
#include <vector>

namespace silw {

struct Scheme {
    enum class Kind { linear_upwind, weno };
    Kind kind = Kind::linear_upwind;
    int order = 5; // 3..13 (odd) for linear_upwind, 3 or 5 for weno

    // Ghost points required on each side of a line for the residual.
    int ghost_width() const { return (order + 1) / 2; }
    bool is_weno() const { return kind == Kind::weno; }
};

Scheme make_linear_scheme(int d);
Scheme make_weno_scheme(int order);

// Upwind-biased interface value \hat f_{j+1/2} from split fluxes. `fp` and
// `fm` point at index j of the positive- and negative-part arrays; windows
// extend ghost_width() entries beyond j on the needed sides. `dx` is the mesh
// spacing the data lives on (sets the WENO regularisation; ignored by the
// linear schemes).
double interface_flux(const Scheme& s, const double* fp, const double* fm,
                      double dx);

// Convenience used by tests: \hat f_{j+1/2} from raw point values and point
// fluxes (both pointing at index j), applying the LF split internally.
double weno_flux(const Scheme& s, const double* u, const double* f,
                 double lf_alpha, double dx);

// Residual of one grid line. `u` and `f` hold n point values including
// ghost_width() ghosts at each end; `out` receives the n - 2*ghost_width()
// interior values of -(\hat f_{j+1/2} - \hat f_{j-1/2})/dx. `lf_alpha` must
// bound |f'(u)| over the whole field (global Lax-Friedrichs constant).
void line_residual(const Scheme& s, const double* u, const double* f, int n,
                   double lf_alpha, double dx, double* out);

} // namespace silw
