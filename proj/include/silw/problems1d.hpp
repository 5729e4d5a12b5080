#pragma once

// ============================================================================
// 1D test problems: initial data, boundary-data closures with closed-form
// time derivatives, and exact solutions where available. Euler quantities
// are stored in conserved variables (rho, rho u, E).
// ============================================================================

#include <array>
#include <functional>
#include <string>

#include <Eigen/Dense>

namespace silw {

enum class Equation1D { advection, euler };
enum class LeftBC1D { dirichlet, wall };
enum class RightBC1D { extrapolation, wall };

// Time stack {g, g', g''} of the conserved state at a Dirichlet boundary.
using EulerStack1D = std::array<Eigen::Vector3d, 3>;
// Time stack {g, g', g'', g'''} of a scalar boundary datum.
using ScalarStack1D = std::array<double, 4>;

struct ProblemCase1D {
    std::string name;
    Equation1D equation = Equation1D::euler;
    double gamma = 1.4;
    double domain_left = 0.0;
    double domain_right = 1.0;
    double t_end = 1.0;
    double advection_speed = 1.0; // scalar problems only

    LeftBC1D left_bc = LeftBC1D::dirichlet;
    RightBC1D right_bc = RightBC1D::extrapolation;
    bool shock_mode = false; // shock-safe extrapolation, dt ~ dx

    std::function<double(double x)> scalar_init;
    std::function<double(double x, double t)> scalar_exact;   // optional
    std::function<ScalarStack1D(double t)> scalar_data;       // left Dirichlet

    std::function<Eigen::Vector3d(double x)> euler_init;
    std::function<Eigen::Vector3d(double x, double t)> euler_exact; // optional
    std::function<EulerStack1D(double t)> euler_data;         // left Dirichlet
};

// Smooth Euler wave rho = 1 - 0.2 sin(2t - x), u = 2, p = 2 on [-pi, pi]:
// every characteristic enters on the left and leaves on the right, so the
// left boundary carries three Dirichlet conditions and the right boundary is
// pure extrapolation.
ProblemCase1D density_wave_case(double t_end = 1.0);

// gamma = 3 isentropic flow on [0, 2 pi] whose density rides the pre-shock
// Burgers solution mu = 1 + 0.2 sin(x - mu t): rho = mu/(2 sqrt 3),
// u = sqrt(gamma) rho = c, p = rho^gamma. The flow is exactly sonic, which
// exercises the subsonic-inflow case at the left boundary.
ProblemCase1D isentropic_burgers_case(double t_end = 3.0);

// Interacting blast waves on [0, 1]: rho = 1, u = 0 everywhere with
// p = 1000 / 0.01 / 100 on [0, 0.1) / (0.1, 0.9) / (0.9, 1]; solid walls on
// both sides, shocks reflect repeatedly.
ProblemCase1D blast_waves_case(double t_end = 0.038);

// Linear advection u_t + u_x = 0 on (-1, 1) with u = 0.25 + 0.5 sin(pi(x-t)):
// sine data at the left boundary, extrapolation on the right. Used both for
// accuracy verification and for time-domain stability checks.
ProblemCase1D advection_sine_case(double t_end);

} // namespace silw
