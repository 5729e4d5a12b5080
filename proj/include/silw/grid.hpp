#pragma once

// ============================================================================
// 1D offset grids: uniform meshes whose first/last points sit a fractional
// offset (C_a, C_b in units of dx) inside the physical domain, so the
// boundaries generally do not coincide with grid points.
// ============================================================================

#include <vector>

namespace silw {

struct OffsetGrid1D {
    double domain_left = 0.0;
    double domain_right = 0.0;
    int N = 0;           // points are x_0..x_N (N+1 interior points)
    double dx = 0.0;
    double C_a = 0.0;    // x_0 = domain_left + C_a*dx
    double C_b = 0.0;    // x_N = domain_right - C_b*dx
    int n_ghost = 0;     // ghost points per side

    // Valid for j in [-n_ghost, N+n_ghost]; ghosts continue the uniform spacing.
    double x(int j) const { return domain_left + (C_a + j) * dx; }

    int total_points() const { return N + 1 + 2 * n_ghost; }
};

// Builds the offset grid with dx = (right-left)/(C_a+C_b+N).
// Throws std::invalid_argument if C_a/C_b lie outside [0,1) or N is too
// small to carry the stencil (N >= 2*n_ghost+1 required).
OffsetGrid1D build_offset_grid(double domain_left, double domain_right,
                               int N, double C_a, double C_b, int n_ghost);

} // namespace silw
