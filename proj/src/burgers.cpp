#include "silw/burgers.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace silw {

namespace {
constexpr double k_residual_tol = 1e-13;
}

// ----------------------------------------------------------------------------
// Initial profile
// ----------------------------------------------------------------------------

double BurgersIC::value(double s) const { return mean + amplitude * std::sin(s); }
double BurgersIC::d1(double s) const { return amplitude * std::cos(s); }
double BurgersIC::d2(double s) const { return -amplitude * std::sin(s); }
double BurgersIC::d3(double s) const { return -amplitude * std::cos(s); }

double BurgersIC::breaking_time() const {
    if (amplitude == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 1.0 / std::abs(amplitude);
}

// ----------------------------------------------------------------------------
// Characteristic fixed point
// ----------------------------------------------------------------------------

double burgers_exact(double x, double t, const BurgersIC& ic, int max_iter) {
    if (max_iter < 1) {
        throw std::runtime_error("burgers_exact: max_iter must be >= 1");
    }

    // mu lies in the range of mu0, which brackets a sign change of
    // F(mu) = mu - mu0(x - mu t).
    double lo = ic.mean - std::abs(ic.amplitude);
    double hi = ic.mean + std::abs(ic.amplitude);
    double mu = ic.mean;

    for (int it = 0; it < max_iter; ++it) {
        const double xi = x - mu * t;
        const double f = mu - ic.value(xi);
        if (std::abs(f) <= k_residual_tol) {
            return mu;
        }
        if (f > 0.0) {
            hi = mu;
        } else {
            lo = mu;
        }

        const double fprime = 1.0 + t * ic.d1(xi);
        double next = mu;
        if (fprime != 0.0) {
            next = mu - f / fprime;
        }
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi); // Newton left the bracket: bisect
        }
        mu = next;
    }

    throw std::runtime_error("burgers_exact: no convergence after " +
                             std::to_string(max_iter) + " iterations at x=" +
                             std::to_string(x) + " t=" + std::to_string(t));
}

BurgersState burgers_exact_state(double x, double t, const BurgersIC& ic,
                                 int max_iter) {
    if (!(std::abs(t) < ic.breaking_time())) {
        throw std::domain_error(
            "burgers_exact_state: derivatives requested at |t| >= breaking time " +
            std::to_string(ic.breaking_time()));
    }

    BurgersState s;
    s.mu = burgers_exact(x, t, ic, max_iter);

    const double xi = x - s.mu * t;
    const double d1 = ic.d1(xi);
    const double d2 = ic.d2(xi);
    const double d3 = ic.d3(xi);
    const double D = 1.0 + t * d1; // > 0 for |t| < breaking time

    s.mu_x = d1 / D;
    s.mu_xx = d2 / (D * D * D);
    s.mu_xxx = d3 / (D * D * D * D) - 3.0 * t * d2 * d2 / std::pow(D, 5);

    s.mu_t = -s.mu * s.mu_x;
    s.mu_tt = 2.0 * s.mu * s.mu_x * s.mu_x + s.mu * s.mu * s.mu_xx;
    s.mu_ttt = -(6.0 * s.mu * s.mu_x * s.mu_x * s.mu_x +
                 9.0 * s.mu * s.mu * s.mu_x * s.mu_xx +
                 s.mu * s.mu * s.mu * s.mu_xxx);
    return s;
}

} // namespace silw
