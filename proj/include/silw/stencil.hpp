#pragma once

// ============================================================================
// Linear upwind first-derivative operators of orders d = 3,5,7,9,11,13.
// Coefficients are stored as exact rationals and evaluated in double; the
// operator approximates  L_h(f)_j = -(1/dx) * sum_m c_m f_{j+m}  ~ -f'(x_j),
// exact for polynomials up to degree d.
// ============================================================================

#include <vector>

namespace silw {

struct UpwindStencil {
    int d = 0;                     // formal order
    int left = 0;                  // widest negative offset (>0, i.e. uses f_{j-left})
    int right = 0;                 // widest positive offset (uses f_{j+right})
    std::vector<long long> num;    // numerators,   index 0 -> offset -left
    std::vector<long long> den;    // denominators, same indexing

    int width() const { return left + right + 1; }
    double coeff(int m) const {    // coefficient of f_{j+m}
        int i = m + left;
        return static_cast<double>(num[i]) / static_cast<double>(den[i]);
    }
};

// Returns the stencil for one of the supported orders; throws on any other d.
const UpwindStencil& upwind_stencil(int d);

bool upwind_order_supported(int d);

// Applies L_h(f)_j = -(1/dx) sum_m c_m f_{j+m} for j in [0, n_interior-1].
// `f` must carry at least stencil.left ghost values before index 0 and
// stencil.right after index n_interior-1; `f0` points at f_0 (the first
// interior entry). Result is written to `out` (resized to n_interior).
void upwind_residual(int d, const double* f0, int n_interior, double dx,
                     std::vector<double>& out);

} // namespace silw
