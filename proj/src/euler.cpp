#include "silw/euler.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace silw {

// ----------------------------------------------------------------------------
// State algebra
// ----------------------------------------------------------------------------

double euler_pressure(const Eigen::Vector3d& U, double gamma) {
    return (gamma - 1.0) * (U(2) - 0.5 * U(1) * U(1) / U(0));
}

double euler_pressure(const Eigen::Vector4d& U, double gamma) {
    return (gamma - 1.0) * (U(3) - 0.5 * (U(1) * U(1) + U(2) * U(2)) / U(0));
}

Eigen::Vector3d euler_conserved(double rho, double u, double p, double gamma) {
    return {rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u};
}

Eigen::Vector4d euler_conserved(double rho, double u, double v, double p, double gamma) {
    return {rho, rho * u, rho * v, p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v)};
}

Eigen::Vector3d euler_flux(const Eigen::Vector3d& U, double gamma) {
    const double u = U(1) / U(0), p = euler_pressure(U, gamma);
    return {U(1), U(1) * u + p, u * (U(2) + p)};
}

Eigen::Vector4d euler_flux_x(const Eigen::Vector4d& U, double gamma) {
    const double u = U(1) / U(0), p = euler_pressure(U, gamma);
    return {U(1), U(1) * u + p, U(2) * u, u * (U(3) + p)};
}

Eigen::Vector4d euler_flux_y(const Eigen::Vector4d& U, double gamma) {
    const double v = U(2) / U(0), p = euler_pressure(U, gamma);
    return {U(2), U(1) * v, U(2) * v + p, v * (U(3) + p)};
}

Eigen::Matrix3d euler_jacobian(const Eigen::Vector3d& U, double gamma) {
    const double u = U(1) / U(0);
    const double p = euler_pressure(U, gamma);
    const double H = (U(2) + p) / U(0);
    Eigen::Matrix3d A;
    A << 0.0, 1.0, 0.0,
         0.5 * (gamma - 3.0) * u * u, (3.0 - gamma) * u, gamma - 1.0,
         0.5 * (gamma - 1.0) * u * u * u - u * H, H - (gamma - 1.0) * u * u, gamma * u;
    return A;
}

Eigen::Matrix4d euler_jacobian_x(const Eigen::Vector4d& U, double gamma) {
    const double u = U(1) / U(0), v = U(2) / U(0);
    const double q2 = u * u + v * v;
    const double p = euler_pressure(U, gamma);
    const double H = (U(3) + p) / U(0);
    Eigen::Matrix4d A;
    A << 0.0, 1.0, 0.0, 0.0,
         0.5 * (gamma - 1.0) * q2 - u * u, (3.0 - gamma) * u, -(gamma - 1.0) * v, gamma - 1.0,
         -u * v, v, u, 0.0,
         u * (0.5 * (gamma - 1.0) * q2 - H), H - (gamma - 1.0) * u * u,
         -(gamma - 1.0) * u * v, gamma * u;
    return A;
}

Eigen::Matrix4d euler_jacobian_y(const Eigen::Vector4d& U, double gamma) {
    const double u = U(1) / U(0), v = U(2) / U(0);
    const double q2 = u * u + v * v;
    const double p = euler_pressure(U, gamma);
    const double H = (U(3) + p) / U(0);
    Eigen::Matrix4d B;
    B << 0.0, 0.0, 1.0, 0.0,
         -u * v, v, u, 0.0,
         0.5 * (gamma - 1.0) * q2 - v * v, -(gamma - 1.0) * u, (3.0 - gamma) * v, gamma - 1.0,
         v * (0.5 * (gamma - 1.0) * q2 - H), -(gamma - 1.0) * u * v,
         H - (gamma - 1.0) * v * v, gamma * v;
    return B;
}

namespace {

[[noreturn]] void throw_nonphysical(double rho, double p) {
    std::ostringstream os;
    os << "euler: nonphysical state rho=" << rho << " p=" << p;
    throw std::domain_error(os.str());
}

double sound_speed(double rho, double p, double gamma) {
    if (!(rho > 0.0) || !(p > 0.0))
        throw_nonphysical(rho, p);
    return std::sqrt(gamma * p / rho);
}

} // namespace

double euler_max_speed(const Eigen::Vector3d& U, double gamma) {
    const double u = U(1) / U(0);
    return std::abs(u) + sound_speed(U(0), euler_pressure(U, gamma), gamma);
}

double euler_max_speed_x(const Eigen::Vector4d& U, double gamma) {
    const double u = U(1) / U(0);
    return std::abs(u) + sound_speed(U(0), euler_pressure(U, gamma), gamma);
}

double euler_max_speed_y(const Eigen::Vector4d& U, double gamma) {
    const double v = U(2) / U(0);
    return std::abs(v) + sound_speed(U(0), euler_pressure(U, gamma), gamma);
}

Eigen::Vector3d mirror_state(const Eigen::Vector3d& U) { return {U(0), -U(1), U(2)}; }

Eigen::Vector4d rotate_state(const Eigen::Vector4d& U, double theta) {
    const double ct = std::cos(theta), st = std::sin(theta);
    return {U(0), ct * U(1) + st * U(2), -st * U(1) + ct * U(2), U(3)};
}

Eigen::Vector4d rotate_state_back(const Eigen::Vector4d& U_hat, double theta) {
    return rotate_state(U_hat, -theta);
}

// ----------------------------------------------------------------------------
// Characteristic decompositions
// ----------------------------------------------------------------------------

EulerEigen euler_eigenstructure(const Eigen::Vector3d& U, double gamma) {
    const double rho = U(0), u = U(1) / rho;
    const double p = euler_pressure(U, gamma);
    const double c = sound_speed(rho, p, gamma);
    const double H = (U(2) + p) / rho;

    EulerEigen e;
    e.c = c;
    e.H = H;
    e.u = u;
    e.lambda.resize(3);
    e.lambda << u - c, u, u + c;

    e.R.resize(3, 3);
    e.R << 1.0, 1.0, 1.0,
           u - c, u, u + c,
           H - u * c, 0.5 * u * u, H + u * c;

    const double g1 = gamma - 1.0;
    e.L.resize(3, 3);
    e.L << 0.5 * u * c + 0.25 * g1 * u * u, -0.5 * g1 * u - 0.5 * c, 0.5 * g1,
           c * c - 0.5 * g1 * u * u, g1 * u, 1.0 - gamma,
           -0.5 * u * c + 0.25 * g1 * u * u, -0.5 * g1 * u + 0.5 * c, 0.5 * g1;
    e.L /= c * c;
    return e;
}

EulerEigen euler_eigenstructure(const Eigen::Vector4d& U_hat, double gamma) {
    const double rho = U_hat(0);
    const double u = U_hat(1) / rho, v = U_hat(2) / rho;
    const double p = euler_pressure(U_hat, gamma);
    const double c = sound_speed(rho, p, gamma);
    const double H = (U_hat(3) + p) / rho;
    const double q2 = u * u + v * v;
    const double b1 = (gamma - 1.0) / (c * c);
    const double b2 = 0.5 * b1 * q2;

    EulerEigen e;
    e.c = c;
    e.H = H;
    e.u = u;
    e.lambda.resize(4);
    e.lambda << u - c, u, u, u + c;

    e.R.resize(4, 4);
    e.R << 1.0, 1.0, 0.0, 1.0,
           u - c, u, 0.0, u + c,
           v, v, 1.0, v,
           H - u * c, 0.5 * q2, v, H + u * c;

    e.L.resize(4, 4);
    e.L << 0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), -0.5 * b1 * v, 0.5 * b1,
           1.0 - b2, b1 * u, b1 * v, -b1,
           -v, 0.0, 1.0, 0.0,
           0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), -0.5 * b1 * v, 0.5 * b1;
    return e;
}

// ----------------------------------------------------------------------------
// Case classification
// ----------------------------------------------------------------------------

InflowCase inflow_case_1d(double u, double c) {
    if (!(c > 0.0))
        throw std::domain_error("inflow_case_1d: sound speed must be positive");
    InflowCase cs;
    if (u - c > 0.0) {
        cs = {1, 3, {0, 1, 2}, {}};
    } else if (u > 0.0) {
        cs = {2, 2, {0, 1}, {0}};
    } else if (u + c > 0.0) {
        // Prescribe density: the momentum row pairs badly with the lone
        // incoming mode (its eigenvector entry is u + c, which vanishes at
        // the sonic transition), whereas the density entry is identically 1.
        cs = {3, 1, {0}, {0, 1}};
    } else {
        cs = {4, 0, {}, {0, 1, 2}};
    }
    return cs;
}

InflowCase inflow_case_2d(double u_hat, double c) {
    if (!(c > 0.0))
        throw std::domain_error("inflow_case_2d: sound speed must be positive");
    InflowCase cs;
    if (u_hat - c >= 0.0) {
        cs = {1, 0, {}, {0, 1, 2, 3}};
    } else if (u_hat >= 0.0) {
        // Prescribe density rather than normal momentum: the incoming-mode
        // momentum entry is u_hat - c, so a momentum row turns singular at
        // the sonic transition, while the density row stays well posed for
        // all u_hat in [0, c).  Solid walls use wall_case_2d instead, which
        // keeps the physical rho*u_hat = 0 condition (u_hat ~ 0 there).
        cs = {2, 1, {0}, {1, 2, 3}};
    } else if (u_hat + c >= 0.0) {
        cs = {3, 3, {0, 1, 2}, {3}};
    } else {
        cs = {4, 4, {0, 1, 2, 3}, {}};
    }
    return cs;
}

InflowCase wall_case_1d() { return {3, 1, {1}, {0, 1}}; }

InflowCase wall_case_2d() { return {2, 1, {1}, {1, 2, 3}}; }

// ----------------------------------------------------------------------------
// Mixed boundary systems
// ----------------------------------------------------------------------------

double eps_sonic(double c) { return 1e-3 * std::max(1.0, c); }

BoundarySolve solve_mixed_system(const Eigen::MatrixXd& cond_rows,
                                 const Eigen::VectorXd& cond_rhs,
                                 const std::vector<int>& outgoing,
                                 const Eigen::MatrixXd& L, const Eigen::VectorXd& V,
                                 const Eigen::VectorXd& lambda, double c) {
    const int n = static_cast<int>(L.cols());
    if (cond_rows.rows() + static_cast<int>(outgoing.size()) != n)
        throw std::invalid_argument(
            "solve_mixed_system: conditions + outgoing rows must fill the state dimension");

    // Near-sonic modes without an extrapolation row get one appended.
    std::vector<int> extra;
    const double eps = eps_sonic(c);
    for (int k = 0; k < n; ++k) {
        const bool has_row =
            std::find(outgoing.begin(), outgoing.end(), k) != outgoing.end();
        if (!has_row && std::abs(lambda(k)) < eps)
            extra.push_back(k);
    }

    const int rows = n + static_cast<int>(extra.size());
    Eigen::MatrixXd M(rows, n);
    Eigen::VectorXd b(rows);
    int r = 0;
    for (int i = 0; i < cond_rows.rows(); ++i, ++r) {
        M.row(r) = cond_rows.row(i);
        b(r) = cond_rhs(i);
    }
    for (int k : outgoing) {
        M.row(r) = L.row(k);
        b(r) = V(k);
        ++r;
    }
    for (int k : extra) {
        M.row(r) = L.row(k);
        b(r) = V(k);
        ++r;
    }

    BoundarySolve out;
    if (extra.empty()) {
        // Square path with a conditioning check.
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const double smin = svd.singularValues()(n - 1);
        const double smax = svd.singularValues()(0);
        if (smin > 0.0 && smax / smin < 1e8) {
            out.U = svd.solve(b);
            return out;
        }
        // Ill-conditioned: append extrapolation rows for every mode that
        // lacks one and fall back to least squares.
        for (int k = 0; k < n; ++k)
            if (std::find(outgoing.begin(), outgoing.end(), k) == outgoing.end())
                extra.push_back(k);
        M.conservativeResize(n + static_cast<int>(extra.size()), Eigen::NoChange);
        b.conservativeResize(n + static_cast<int>(extra.size()));
        for (int k : extra) {
            M.row(r) = L.row(k);
            b(r) = V(k);
            ++r;
        }
    }
    out.augmented = true;
    out.U = M.colPivHouseholderQr().solve(b);
    return out;
}

BoundarySolve solve_boundary_state(const InflowCase& cs, const Eigen::VectorXd& g,
                                   const Eigen::MatrixXd& L, const Eigen::VectorXd& V,
                                   const Eigen::VectorXd& lambda, double c) {
    const int n = static_cast<int>(L.cols());
    const int m = static_cast<int>(cs.prescribed.size());
    Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(m, n);
    for (int i = 0; i < m; ++i)
        rows(i, cs.prescribed[i]) = 1.0;
    return solve_mixed_system(rows, g, cs.outgoing, L, V, lambda, c);
}

BoundarySolve solve_boundary_derivative(const InflowCase& cs, const Eigen::MatrixXd& A,
                                        const Eigen::VectorXd& rhs,
                                        const Eigen::MatrixXd& L, const Eigen::VectorXd& V1,
                                        const Eigen::VectorXd& lambda, double c) {
    const int n = static_cast<int>(L.cols());
    const int m = static_cast<int>(cs.prescribed.size());
    Eigen::MatrixXd rows(m, n);
    for (int i = 0; i < m; ++i)
        rows.row(i) = A.row(cs.prescribed[i]);
    return solve_mixed_system(rows, rhs, cs.outgoing, L, V1, lambda, c);
}

} // namespace silw
