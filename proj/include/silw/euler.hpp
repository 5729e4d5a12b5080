#pragma once

// ============================================================================
// Compressible Euler support: conserved/primitive conversion, fluxes,
// Jacobians, characteristic decompositions (1D and the rotated-frame 2D
// extension), inflow-case classification, and the mixed linear systems that
// recover the boundary state U*(0) and normal derivative U*(1) from given
// conditions plus outgoing-characteristic extrapolations.
//
// Conventions:
//   * 1D states are (rho, rho u, E); 2D states are (rho, rho u, rho v, E).
//   * The 2D decomposition acts on a state already rotated into the local
//     frame whose x-axis is the outward normal (u_hat = normal velocity).
//   * Outgoing characteristic indices are 0-based positions in Lambda.
// ============================================================================

#include <vector>

#include <Eigen/Dense>

namespace silw {

// ----------------------------------------------------------------------------
// State algebra
// ----------------------------------------------------------------------------

double euler_pressure(const Eigen::Vector3d& U, double gamma);
double euler_pressure(const Eigen::Vector4d& U, double gamma);

Eigen::Vector3d euler_conserved(double rho, double u, double p, double gamma);
Eigen::Vector4d euler_conserved(double rho, double u, double v, double p, double gamma);

Eigen::Vector3d euler_flux(const Eigen::Vector3d& U, double gamma);
Eigen::Vector4d euler_flux_x(const Eigen::Vector4d& U, double gamma);
Eigen::Vector4d euler_flux_y(const Eigen::Vector4d& U, double gamma);

Eigen::Matrix3d euler_jacobian(const Eigen::Vector3d& U, double gamma);
Eigen::Matrix4d euler_jacobian_x(const Eigen::Vector4d& U, double gamma);
Eigen::Matrix4d euler_jacobian_y(const Eigen::Vector4d& U, double gamma);

// Largest characteristic speed |u| + c (1D) or per-direction (2D).
double euler_max_speed(const Eigen::Vector3d& U, double gamma);
double euler_max_speed_x(const Eigen::Vector4d& U, double gamma);
double euler_max_speed_y(const Eigen::Vector4d& U, double gamma);

// Mirror x -> -x: flips the (first) momentum component.
Eigen::Vector3d mirror_state(const Eigen::Vector3d& U);

// Rotation into the local frame whose x-axis is (cos theta, sin theta):
// velocities transform, rho and E are invariant.
Eigen::Vector4d rotate_state(const Eigen::Vector4d& U, double theta);
Eigen::Vector4d rotate_state_back(const Eigen::Vector4d& U_hat, double theta);

// ----------------------------------------------------------------------------
// Characteristic decompositions. Throws std::domain_error on rho <= 0 or
// p <= 0 (message includes the offending state).
// ----------------------------------------------------------------------------

struct EulerEigen {
    Eigen::VectorXd lambda; // (u-c, u, u+c) or (u-c, u, u, u+c)
    Eigen::MatrixXd R, L;   // A = R diag(lambda) L,  L = R^{-1}
    double c = 0.0;         // sound speed
    double H = 0.0;         // total enthalpy
    double u = 0.0;         // (normal) velocity
};

EulerEigen euler_eigenstructure(const Eigen::Vector3d& U, double gamma);
EulerEigen euler_eigenstructure(const Eigen::Vector4d& U_hat, double gamma);

// ----------------------------------------------------------------------------
// Inflow-case classification.
//
// 1D left boundary (interior on the right): incoming characteristics move in
// +x, so the number of conditions is 3/2/1/0 for cases 1..4.
// 2D outward-normal frame (interior at negative x_hat): conditions 0/1/3/4.
// ----------------------------------------------------------------------------

struct InflowCase {
    int case_id = 0;               // 1..4
    int n_conditions = 0;          // number of boundary conditions to impose
    std::vector<int> prescribed;   // conserved components receiving data
    std::vector<int> outgoing;     // characteristic indices to extrapolate
};

InflowCase inflow_case_1d(double u, double c);
InflowCase inflow_case_2d(double u_hat, double c);

// Fixed wall variants: exactly one condition (zero normal momentum),
// independent of the sign noise of the near-zero normal velocity.
InflowCase wall_case_1d();
InflowCase wall_case_2d();

// ----------------------------------------------------------------------------
// Mixed boundary systems. `cond_rows`/`cond_rhs` hold one row per prescribed
// condition (unit rows for the state system, Jacobian rows for the derivative
// system); outgoing rows l_k.U = V[k] are appended from `L` and `V`. When any
// |lambda_k| < eps_sonic(c) for a mode without an extrapolation row, that row
// is appended as well and the (now overdetermined) system is solved in the
// least-squares sense; the same fallback engages when the square system is
// ill-conditioned.
// ----------------------------------------------------------------------------

double eps_sonic(double c);

struct BoundarySolve {
    Eigen::VectorXd U;      // solution
    bool augmented = false; // least-squares fallback engaged
};

BoundarySolve solve_mixed_system(const Eigen::MatrixXd& cond_rows,
                                 const Eigen::VectorXd& cond_rhs,
                                 const std::vector<int>& outgoing,
                                 const Eigen::MatrixXd& L, const Eigen::VectorXd& V,
                                 const Eigen::VectorXd& lambda, double c);

// State system: unit rows on `prescribed` with data g, outgoing rows from V.
BoundarySolve solve_boundary_state(const InflowCase& cs, const Eigen::VectorXd& g,
                                   const Eigen::MatrixXd& L, const Eigen::VectorXd& V,
                                   const Eigen::VectorXd& lambda, double c);

// Derivative system: Jacobian rows a_i(U*(0)) with right-hand sides
// -g_i'(t) (+ Res_i in 2D, folded into `rhs` by the caller), outgoing rows
// l_k.U' = V1[k].
BoundarySolve solve_boundary_derivative(const InflowCase& cs, const Eigen::MatrixXd& A,
                                        const Eigen::VectorXd& rhs,
                                        const Eigen::MatrixXd& L, const Eigen::VectorXd& V1,
                                        const Eigen::VectorXd& lambda, double c);

} // namespace silw
