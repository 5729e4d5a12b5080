#include "silw/timeint.hpp"

#include <cmath>
#include <stdexcept>

namespace silw {

double BoundaryFunction::deriv(int k, double t) const {
    switch (k) {
    case 0: return g ? g(t) : 0.0;
    case 1: return g1 ? g1(t) : 0.0;
    case 2: return g2 ? g2(t) : 0.0;
    case 3: return g3 ? g3(t) : 0.0;
    default: throw std::invalid_argument("BoundaryFunction::deriv: order must be 0..3");
    }
}

BoundaryFunction BoundaryFunction::constant(double value) {
    BoundaryFunction f;
    f.g = [value](double) { return value; };
    f.g1 = [](double) { return 0.0; };
    f.g2 = [](double) { return 0.0; };
    f.g3 = [](double) { return 0.0; };
    return f;
}

double stage_boundary_data(const BoundaryFunction& f, double t_n, double dt, int stage) {
    switch (stage) {
    case 0: return f.deriv(0, t_n);
    case 1: return f.deriv(0, t_n) + dt * f.deriv(1, t_n);
    case 2:
        return f.deriv(0, t_n) + 0.5 * dt * f.deriv(1, t_n) +
               0.25 * dt * dt * f.deriv(2, t_n);
    default: throw std::invalid_argument("stage_boundary_data: stage must be 0, 1, or 2");
    }
}

void stage_boundary_taylor(const double* g, int n, double dt, int stage, double* out) {
    auto at = [&](int m) { return m < n ? g[m] : 0.0; };
    for (int m = 0; m < n; ++m) {
        switch (stage) {
        case 0: out[m] = at(m); break;
        case 1: out[m] = at(m) + dt * at(m + 1); break;
        case 2: out[m] = at(m) + 0.5 * dt * at(m + 1) + 0.25 * dt * dt * at(m + 2); break;
        default:
            throw std::invalid_argument("stage_boundary_taylor: stage must be 0, 1, or 2");
        }
    }
}

double StepControl::dt_1d(double a_x, double dx) const {
    if (!(a_x > 0.0) || !(dx > 0.0))
        throw std::invalid_argument("StepControl::dt_1d: wave speed and dx must be positive");
    return cfl * std::pow(dx, k / 3.0) / a_x;
}

double StepControl::dt_2d(double a_x, double a_y, double dx, double dy) const {
    if (!(a_x > 0.0) || !(a_y > 0.0) || !(dx > 0.0) || !(dy > 0.0))
        throw std::invalid_argument("StepControl::dt_2d: speeds and widths must be positive");
    return cfl / (a_x / std::pow(dx, k / 3.0) + a_y / std::pow(dy, k / 3.0));
}

double clamp_dt(double t, double dt, double t_end) {
    if (t + dt > t_end)
        return t_end - t;
    return dt;
}

blow_up_error::blow_up_error(int stage, std::size_t index)
    : std::runtime_error("non-finite value in RK3 stage " + std::to_string(stage) +
                         " at index " + std::to_string(index)),
      stage_(stage), index_(index) {}

namespace {

void check_finite(const Field& u, int stage) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!std::isfinite(u[i]))
            throw blow_up_error(stage, i);
}

} // namespace

void rk3_step(Field& u, double t_n, double dt, const GhostFill& fill,
              const ResidualOp& residual) {
    const std::size_t n = u.size();
    Field r(n), us(u);

    fill(us, t_n, dt, 0);
    residual(us, r);
    for (std::size_t i = 0; i < n; ++i)
        us[i] += dt * r[i];
    check_finite(us, 0);

    fill(us, t_n, dt, 1);
    residual(us, r);
    for (std::size_t i = 0; i < n; ++i)
        us[i] = 0.75 * u[i] + 0.25 * us[i] + 0.25 * dt * r[i];
    check_finite(us, 1);

    fill(us, t_n, dt, 2);
    residual(us, r);
    for (std::size_t i = 0; i < n; ++i)
        u[i] = (u[i] + 2.0 * us[i] + 2.0 * dt * r[i]) / 3.0;
    check_finite(u, 2);
}

} // namespace silw
