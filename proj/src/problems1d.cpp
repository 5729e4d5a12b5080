#include "silw/problems1d.hpp"

#include <cmath>

#include "silw/burgers.hpp"
#include "silw/euler.hpp"

namespace silw {

namespace {
constexpr double k_pi = 3.14159265358979323846;
}

// ----------------------------------------------------------------------------
// Smooth density wave
// ----------------------------------------------------------------------------

ProblemCase1D density_wave_case(double t_end) {
    ProblemCase1D pc;
    pc.name = "density-wave";
    pc.equation = Equation1D::euler;
    pc.gamma = 1.4;
    pc.domain_left = -k_pi;
    pc.domain_right = k_pi;
    pc.t_end = t_end;
    pc.left_bc = LeftBC1D::dirichlet;
    pc.right_bc = RightBC1D::extrapolation;

    const double gamma = pc.gamma;
    auto state = [gamma](double x, double t) {
        const double rho = 1.0 - 0.2 * std::sin(2.0 * t - x);
        return euler_conserved(rho, 2.0, 2.0, gamma);
    };
    pc.euler_init = [state](double x) { return state(x, 0.0); };
    pc.euler_exact = state;

    // At x = a the conserved state is (rho, 2 rho, 2/(gamma-1) + 2 rho), so
    // every time derivative is carried by rho alone.
    const double a = pc.domain_left;
    pc.euler_data = [a, gamma](double t) {
        const double s = 2.0 * t - a;
        const double rho = 1.0 - 0.2 * std::sin(s);
        const double rho1 = -0.4 * std::cos(s);
        const double rho2 = 0.8 * std::sin(s);
        EulerStack1D stack;
        stack[0] = euler_conserved(rho, 2.0, 2.0, gamma);
        stack[1] = Eigen::Vector3d(rho1, 2.0 * rho1, 2.0 * rho1);
        stack[2] = Eigen::Vector3d(rho2, 2.0 * rho2, 2.0 * rho2);
        return stack;
    };
    return pc;
}

// ----------------------------------------------------------------------------
// Sonic isentropic flow riding the Burgers solution
// ----------------------------------------------------------------------------

ProblemCase1D isentropic_burgers_case(double t_end) {
    ProblemCase1D pc;
    pc.name = "isentropic-burgers";
    pc.equation = Equation1D::euler;
    pc.gamma = 3.0;
    pc.domain_left = 0.0;
    pc.domain_right = 2.0 * k_pi;
    pc.t_end = t_end;
    pc.left_bc = LeftBC1D::dirichlet;
    pc.right_bc = RightBC1D::extrapolation;

    const BurgersIC ic; // mean 1, amplitude 0.2
    const double r3 = std::sqrt(3.0);

    // rho = mu/(2 sqrt 3), u = mu/2, p = rho^3; conserved values reduce to
    //   U = (mu/(2 sqrt 3), mu^2/(4 sqrt 3), mu^3/(12 sqrt 3)).
    auto conserved_of_mu = [r3](double mu) {
        return Eigen::Vector3d(mu / (2.0 * r3), mu * mu / (4.0 * r3),
                               mu * mu * mu / (12.0 * r3));
    };

    pc.euler_init = [ic, conserved_of_mu](double x) {
        return conserved_of_mu(ic.value(x));
    };
    pc.euler_exact = [ic, conserved_of_mu](double x, double t) {
        return conserved_of_mu(burgers_exact(x, t, ic));
    };

    const double a = pc.domain_left;
    pc.euler_data = [ic, a, r3](double t) {
        const BurgersState s = burgers_exact_state(a, t, ic);
        const double mu = s.mu, mu1 = s.mu_t, mu2 = s.mu_tt;
        EulerStack1D stack;
        stack[0] = Eigen::Vector3d(mu / (2.0 * r3), mu * mu / (4.0 * r3),
                                   mu * mu * mu / (12.0 * r3));
        stack[1] = Eigen::Vector3d(mu1 / (2.0 * r3), mu * mu1 / (2.0 * r3),
                                   mu * mu * mu1 / (4.0 * r3));
        stack[2] = Eigen::Vector3d(
            mu2 / (2.0 * r3), (mu1 * mu1 + mu * mu2) / (2.0 * r3),
            (2.0 * mu * mu1 * mu1 + mu * mu * mu2) / (4.0 * r3));
        return stack;
    };
    return pc;
}

// ----------------------------------------------------------------------------
// Interacting blast waves
// ----------------------------------------------------------------------------

ProblemCase1D blast_waves_case(double t_end) {
    ProblemCase1D pc;
    pc.name = "blast-waves";
    pc.equation = Equation1D::euler;
    pc.gamma = 1.4;
    pc.domain_left = 0.0;
    pc.domain_right = 1.0;
    pc.t_end = t_end;
    pc.left_bc = LeftBC1D::wall;
    pc.right_bc = RightBC1D::wall;
    pc.shock_mode = true;

    const double gamma = pc.gamma;
    pc.euler_init = [gamma](double x) {
        const double p = x < 0.1 ? 1000.0 : (x > 0.9 ? 100.0 : 0.01);
        return euler_conserved(1.0, 0.0, p, gamma);
    };
    return pc;
}

// ----------------------------------------------------------------------------
// Linear advection with sine data
// ----------------------------------------------------------------------------

ProblemCase1D advection_sine_case(double t_end) {
    ProblemCase1D pc;
    pc.name = "advection-sine";
    pc.equation = Equation1D::advection;
    pc.domain_left = -1.0;
    pc.domain_right = 1.0;
    pc.t_end = t_end;
    pc.advection_speed = 1.0;
    pc.left_bc = LeftBC1D::dirichlet;
    pc.right_bc = RightBC1D::extrapolation;

    pc.scalar_init = [](double x) { return 0.25 + 0.5 * std::sin(k_pi * x); };
    pc.scalar_exact = [](double x, double t) {
        return 0.25 + 0.5 * std::sin(k_pi * (x - t));
    };
    const double a = pc.domain_left;
    pc.scalar_data = [a](double t) {
        const double w = k_pi * (a - t);
        ScalarStack1D stack;
        stack[0] = 0.25 + 0.5 * std::sin(w);
        stack[1] = -0.5 * k_pi * std::cos(w);
        stack[2] = -0.5 * k_pi * k_pi * std::sin(w);
        stack[3] = 0.5 * k_pi * k_pi * k_pi * std::cos(w);
        return stack;
    };
    return pc;
}

} // namespace silw
