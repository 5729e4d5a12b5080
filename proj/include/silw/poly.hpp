#pragma once

// ============================================================================
// Newton-form polynomial interpolation with derivative evaluation, plus the
// WENO-type extrapolation used near shocks. Everything operates on scaled
// coordinates supplied by the caller; conditioning is the caller's concern.
// ============================================================================

#include <vector>

namespace silw {

// Interpolating polynomial through (nodes[i], values[i]) in Newton form.
class NewtonPoly {
  public:
    NewtonPoly() = default;
    // Throws std::invalid_argument on duplicate nodes.
    NewtonPoly(std::vector<double> nodes, const std::vector<double>& values);

    double eval(double x) const;
    // Value and first m derivatives at x: out[k] = p^(k)(x), k = 0..m.
    void derivs(double x, int m, std::vector<double>& out) const;
    int degree() const { return static_cast<int>(dd_.size()) - 1; }

  private:
    std::vector<double> nodes_;
    std::vector<double> dd_; // divided differences on nodes_ in order
};

// Convenience wrapper matching the interpolation step of the ghost
// constructions: nodes distinct, degree <= count-1.
NewtonPoly lagrange_interpolant(const std::vector<double>& nodes,
                                const std::vector<double>& values);

// WENO-type extrapolation: given d values at nodes s = C_a, C_a+1, ..,
// C_a+d-1 (scaled coordinates, boundary at s = 0), evaluates the k-th
// s-derivative of the shock-safe extrapolant at `target`. Candidates are the
// nested boundary-adjacent substencils of degrees 0..d-1; smoothness
// indicators integrate squared s-derivatives over the cell [C_a-1, C_a];
// linear weights dx_phys^(d-1-r) favour the high-degree candidate on smooth
// data. The caller rescales the result by dx_phys^-k for physical derivatives.
double weno_extrapolate(const std::vector<double>& values, double C_a,
                        double target, int derivative_order, double dx_phys);

} // namespace silw
