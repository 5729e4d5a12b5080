#include "silw/stencil.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace silw {

namespace {

UpwindStencil make(int d, int left, int right,
                   std::vector<long long> num, std::vector<long long> den) {
    UpwindStencil s;
    s.d = d;
    s.left = left;
    s.right = right;
    s.num = std::move(num);
    s.den = std::move(den);
    return s;
}

// Offsets run -left..right; one numerator/denominator pair per offset.
const std::map<int, UpwindStencil> k_stencils = {
    {3, make(3, 2, 1,
             {1, -1, 1, 1},
             {6, 1, 2, 3})},
    {5, make(5, 3, 2,
             {-1, 1, -1, 1, 1, -1},
             {30, 4, 1, 3, 2, 20})},
    {7, make(7, 4, 3,
             {1, -1, 3, -1, 1, 3, -1, 1},
             {140, 15, 10, 1, 4, 5, 10, 105})},
    {9, make(9, 5, 4,
             {-1, 1, -2, 1, -1, 1, 2, -1, 1, -1},
             {630, 56, 21, 3, 1, 5, 3, 7, 42, 504})},
    {11, make(11, 6, 5,
              {1, -1, 5, -5, 5, -1, 1, 5, -5, 5, -1, 1},
              {2772, 210, 168, 42, 14, 1, 6, 7, 28, 126, 168, 2310})},
    {13, make(13, 7, 6,
              {-1, 1, -1, 1, -5, 3, -1, 1, 3, -5, 1, -1, 1, -1},
              {12012, 792, 110, 24, 36, 8, 1, 7, 4, 24, 18, 88, 660, 10296})},
};

} // namespace

bool upwind_order_supported(int d) { return k_stencils.count(d) > 0; }

const UpwindStencil& upwind_stencil(int d) {
    auto it = k_stencils.find(d);
    if (it == k_stencils.end())
        throw std::invalid_argument("upwind_stencil: unsupported order d=" + std::to_string(d));
    return it->second;
}

void upwind_residual(int d, const double* f0, int n_interior, double dx,
                     std::vector<double>& out) {
    const UpwindStencil& s = upwind_stencil(d);
    out.resize(n_interior);
    const int w = s.width();
    std::vector<double> c(w);
    for (int i = 0; i < w; ++i)
        c[i] = static_cast<double>(s.num[i]) / static_cast<double>(s.den[i]);
    for (int j = 0; j < n_interior; ++j) {
        double acc = 0.0;
        const double* fj = f0 + j - s.left;
        for (int i = 0; i < w; ++i)
            acc += c[i] * fj[i];
        out[j] = -acc / dx;
    }
}

} // namespace silw
