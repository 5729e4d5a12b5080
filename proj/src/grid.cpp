#include "silw/grid.hpp"

#include <stdexcept>
#include <string>

namespace silw {

OffsetGrid1D build_offset_grid(double domain_left, double domain_right,
                               int N, double C_a, double C_b, int n_ghost) {
    if (!(domain_right > domain_left))
        throw std::invalid_argument("build_offset_grid: empty domain");
    if (!(C_a >= 0.0 && C_a < 1.0) || !(C_b >= 0.0 && C_b < 1.0))
        throw std::invalid_argument("build_offset_grid: offsets must lie in [0,1), got C_a=" +
                                    std::to_string(C_a) + " C_b=" + std::to_string(C_b));
    if (n_ghost < 1)
        throw std::invalid_argument("build_offset_grid: need at least one ghost point");
    if (N < 2 * n_ghost + 1)
        throw std::invalid_argument("build_offset_grid: N=" + std::to_string(N) +
                                    " too small for n_ghost=" + std::to_string(n_ghost));

    OffsetGrid1D g;
    g.domain_left = domain_left;
    g.domain_right = domain_right;
    g.N = N;
    g.C_a = C_a;
    g.C_b = C_b;
    g.n_ghost = n_ghost;
    g.dx = (domain_right - domain_left) / (C_a + C_b + N);
    return g;
}

} // namespace silw
