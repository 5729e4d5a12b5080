#pragma once

// ============================================================================
// Exact smooth solutions of Burgers' equation mu_t + (mu^2/2)_x = 0 with a
// sinusoidal initial profile mu0(s) = mean + amplitude sin(s), obtained by
// solving the characteristic fixed point
//
//     mu = mu0(x - mu t)
//
// with a safeguarded Newton iteration (residual <= 1e-13).  These profiles
// drive the gamma = 3 Euler test cases, where density, velocity and pressure
// are algebraic functions of mu; boundary data ladders additionally need
// closed-form time derivatives of mu at a fixed location.
//
// The 2D diagonal solution mu(x, y, t) with data mean + amplitude sin((x+y)/2)
// reduces to the same scalar problem via s = (x + y)/2:
//     mu(x, y, t) = mu_1d(s, t),  mu_x = mu_y = mu_1d_x / 2.
// ============================================================================

#include <stdexcept>

namespace silw {

// Sinusoidal initial profile and its derivatives.
struct BurgersIC {
    double mean = 1.0;
    double amplitude = 0.2;

    double value(double s) const;
    double d1(double s) const;
    double d2(double s) const;
    double d3(double s) const;

    // Time of the first characteristic crossing, 1/max(-mu0'); infinity for
    // a constant profile. Derivatives of the solution stay bounded only for
    // |t| below this.
    double breaking_time() const;
};

// Solution value together with the spatial and temporal derivatives used by
// boundary-data ladders. Spatial derivatives come from the characteristic
// map (D = 1 + t mu0'(xi)); time derivatives follow from the PDE:
//   mu_x  = mu0'/D,  mu_xx = mu0''/D^3,
//   mu_xxx = mu0'''/D^4 - 3 t mu0''^2 / D^5,
//   mu_t   = -mu mu_x,
//   mu_tt  = 2 mu mu_x^2 + mu^2 mu_xx,
//   mu_ttt = -(6 mu mu_x^3 + 9 mu^2 mu_x mu_xx + mu^3 mu_xxx).
struct BurgersState {
    double mu = 0.0;
    double mu_x = 0.0;
    double mu_xx = 0.0;
    double mu_xxx = 0.0;
    double mu_t = 0.0;
    double mu_tt = 0.0;
    double mu_ttt = 0.0;
};

// Root of mu = mu0(x - mu t), found by Newton steps safeguarded by bisection
// on [mean - |amplitude|, mean + |amplitude|]. Converges for any t (after
// breaking it returns one of the crossing characteristics, not the entropy
// solution). Throws std::runtime_error when max_iter steps fail to reach
// residual 1e-13.
double burgers_exact(double x, double t, const BurgersIC& ic, int max_iter = 100);

// Value plus derivatives; requires |t| < ic.breaking_time() so that the
// characteristic map is invertible (throws std::domain_error otherwise).
BurgersState burgers_exact_state(double x, double t, const BurgersIC& ic,
                                 int max_iter = 100);

} // namespace silw
