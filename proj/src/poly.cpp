#include "silw/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace silw {

NewtonPoly::NewtonPoly(std::vector<double> nodes, const std::vector<double>& values)
    : nodes_(std::move(nodes)), dd_(values) {
    const int n = static_cast<int>(nodes_.size());
    if (n == 0 || values.size() != nodes_.size())
        throw std::invalid_argument("NewtonPoly: need equally many nodes and values");
    for (int j = 1; j < n; ++j) {
        for (int i = n - 1; i >= j; --i) {
            const double span = nodes_[i] - nodes_[i - j];
            if (span == 0.0)
                throw std::invalid_argument("NewtonPoly: duplicate interpolation nodes");
            dd_[i] = (dd_[i] - dd_[i - 1]) / span;
        }
    }
}

double NewtonPoly::eval(double x) const {
    const int n = static_cast<int>(dd_.size());
    double r = dd_[n - 1];
    for (int j = n - 2; j >= 0; --j)
        r = r * (x - nodes_[j]) + dd_[j];
    return r;
}

void NewtonPoly::derivs(double x, int m, std::vector<double>& out) const {
    // Generalized Horner: accumulates value and m derivatives in one sweep.
    const int n = static_cast<int>(dd_.size());
    out.assign(m + 1, 0.0);
    out[0] = dd_[n - 1];
    for (int j = n - 2; j >= 0; --j) {
        const int kmax = std::min(m, n - 1 - j);
        for (int k = kmax; k >= 1; --k)
            out[k] = out[k] * (x - nodes_[j]) + k * out[k - 1];
        out[0] = out[0] * (x - nodes_[j]) + dd_[j];
    }
}

NewtonPoly lagrange_interpolant(const std::vector<double>& nodes,
                                const std::vector<double>& values) {
    return NewtonPoly(nodes, values);
}

namespace {

// Monomial coefficients of the interpolant through the first r+1 nodes.
std::vector<double> monomial_coeffs(const std::vector<double>& nodes,
                                    const std::vector<double>& values, int r) {
    // Divided differences restricted to nodes[0..r].
    std::vector<double> dd(values.begin(), values.begin() + r + 1);
    for (int j = 1; j <= r; ++j)
        for (int i = r; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j]);
    // Horner expansion of the Newton form into monomials.
    std::vector<double> c{dd[r]};
    for (int j = r - 1; j >= 0; --j) {
        c.insert(c.begin(), 0.0);               // multiply by s
        for (size_t i = 0; i + 1 < c.size(); ++i)
            c[i] -= nodes[j] * c[i + 1];        // ... minus nodes[j]
        c[0] += dd[j];
    }
    return c;
}

std::vector<double> differentiate(const std::vector<double>& c) {
    if (c.size() <= 1) return {0.0};
    std::vector<double> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i)
        d[i - 1] = static_cast<double>(i) * c[i];
    return d;
}

double eval_monomial(const std::vector<double>& c, double x) {
    double r = 0.0;
    for (size_t i = c.size(); i-- > 0;)
        r = r * x + c[i];
    return r;
}

// Exact integral of p(s)^2 over [a, b] for monomial coefficients.
double integral_of_square(const std::vector<double>& c, double a, double b) {
    const int n = static_cast<int>(c.size());
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int k = i + j + 1;
            acc += c[i] * c[j] * (std::pow(b, k) - std::pow(a, k)) / k;
        }
    return acc;
}

} // namespace

double weno_extrapolate(const std::vector<double>& values, double C_a,
                        double target, int derivative_order, double dx_phys) {
    const int d = static_cast<int>(values.size());
    if (d < 1)
        throw std::invalid_argument("weno_extrapolate: empty stencil");
    std::vector<double> nodes(d);
    for (int j = 0; j < d; ++j)
        nodes[j] = C_a + j;

    constexpr double eps = 1e-6;
    const double cell_lo = C_a - 1.0, cell_hi = C_a;

    double wsum = 0.0, result = 0.0;
    for (int r = 0; r < d; ++r) {
        std::vector<double> coef = monomial_coeffs(nodes, values, r);

        // Smoothness: sum over derivative levels of the squared candidate,
        // integrated over the boundary-adjacent cell. beta_0 uses the mesh
        //-width floor so the constant candidate only wins near a jump.
        double beta = dx_phys * dx_phys;
        if (r > 0) {
            beta = 0.0;
            std::vector<double> dc = coef;
            for (int l = 1; l <= r; ++l) {
                dc = differentiate(dc);
                beta += integral_of_square(dc, cell_lo, cell_hi);
            }
        }

        const double gamma = std::pow(dx_phys, d - 1 - r);
        const double w = gamma / ((eps + beta) * (eps + beta));

        std::vector<double> dc = coef;
        for (int l = 0; l < derivative_order; ++l)
            dc = differentiate(dc);
        result += w * eval_monomial(dc, target);
        wsum += w;
    }
    return result / wsum;
}

} // namespace silw
