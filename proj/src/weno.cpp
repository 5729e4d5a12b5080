#include "silw/weno.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "silw/stencil.hpp"

namespace silw {

Scheme make_linear_scheme(int d) {
    upwind_stencil(d); // validates the order
    return Scheme{Scheme::Kind::linear_upwind, d};
}

Scheme make_weno_scheme(int order) {
    if (order != 3 && order != 5)
        throw std::invalid_argument("make_weno_scheme: order must be 3 or 5, got " +
                                    std::to_string(order));
    return Scheme{Scheme::Kind::weno, order};
}

namespace {

// Smoothness-indicator regularisation, scaled with the mesh. With eps of
// order dx^2 the nonlinear weights stay within O(dx) of the linear ones on
// smooth data even at critical points (where the indicators drop to O(dx^4)
// and a fixed eps would let them dominate), so the faces hold design order;
// at a discontinuity the indicators are O(jump^2) >> dx^2 and the ENO stencil
// selection is unaffected.
double weno_epsilon(double dx) { return dx * dx; }

// ---------------------------------------------------------------------------
// Linear faces. The derivative operator -(1/dx) sum c_m f_{j+m} telescopes as
// a flux difference with face weights b_m = sum_{k=m}^{right} c_k over the
// window m = -(left-1)..right (the coefficients sum to zero, so the two
// representations agree identically).
// ---------------------------------------------------------------------------
struct FaceWeights {
    int tail = 0;           // window extends tail points to the left of j
    std::vector<double> b;  // index 0 -> offset -tail
};

const FaceWeights& face_weights(int d) {
    static std::map<int, FaceWeights> cache;
    auto it = cache.find(d);
    if (it == cache.end()) {
        const UpwindStencil& s = upwind_stencil(d);
        FaceWeights fw;
        fw.tail = s.left - 1;
        fw.b.resize(s.width() - 1);
        double acc = 0.0;
        for (int m = s.right; m >= -fw.tail; --m) {
            acc += s.coeff(m);
            fw.b[m + fw.tail] = acc;
        }
        it = cache.emplace(d, std::move(fw)).first;
    }
    return it->second;
}

// Positive-part face at j+1/2 (biased left); `fp` points at index j.
double linear_face_plus(int d, const double* fp) {
    const FaceWeights& fw = face_weights(d);
    double acc = 0.0;
    for (int i = 0; i < static_cast<int>(fw.b.size()); ++i)
        acc += fw.b[i] * fp[i - fw.tail];
    return acc;
}

// Negative-part face at j+1/2: the mirrored stencil, reflected about the
// interface, applied to f-; `fm` points at index j.
double linear_face_minus(int d, const double* fm) {
    const FaceWeights& fw = face_weights(d);
    double acc = 0.0;
    for (int i = 0; i < static_cast<int>(fw.b.size()); ++i)
        acc += fw.b[i] * fm[1 - (i - fw.tail)];
    return acc;
}

// ---------------------------------------------------------------------------
// WENO faces (positive part; the negative part reuses them on a reflected
// window). Classical smoothness indicators and linear weights.
// ---------------------------------------------------------------------------
double weno3_face(double fm1, double f0, double fp1, double eps) {
    const double b0 = (f0 - fm1) * (f0 - fm1);
    const double b1 = (fp1 - f0) * (fp1 - f0);
    const double a0 = (1.0 / 3.0) / ((eps + b0) * (eps + b0));
    const double a1 = (2.0 / 3.0) / ((eps + b1) * (eps + b1));
    const double q0 = 0.5 * (-fm1 + 3.0 * f0);
    const double q1 = 0.5 * (f0 + fp1);
    return (a0 * q0 + a1 * q1) / (a0 + a1);
}

double weno5_face(double fm2, double fm1, double f0, double fp1, double fp2,
                  double eps) {
    const double s0 = (13.0 / 12.0) * (fm2 - 2.0 * fm1 + f0) * (fm2 - 2.0 * fm1 + f0) +
                      0.25 * (fm2 - 4.0 * fm1 + 3.0 * f0) * (fm2 - 4.0 * fm1 + 3.0 * f0);
    const double s1 = (13.0 / 12.0) * (fm1 - 2.0 * f0 + fp1) * (fm1 - 2.0 * f0 + fp1) +
                      0.25 * (fm1 - fp1) * (fm1 - fp1);
    const double s2 = (13.0 / 12.0) * (f0 - 2.0 * fp1 + fp2) * (f0 - 2.0 * fp1 + fp2) +
                      0.25 * (3.0 * f0 - 4.0 * fp1 + fp2) * (3.0 * f0 - 4.0 * fp1 + fp2);
    const double a0 = 0.1 / ((eps + s0) * (eps + s0));
    const double a1 = 0.6 / ((eps + s1) * (eps + s1));
    const double a2 = 0.3 / ((eps + s2) * (eps + s2));
    const double q0 = (2.0 * fm2 - 7.0 * fm1 + 11.0 * f0) / 6.0;
    const double q1 = (-fm1 + 5.0 * f0 + 2.0 * fp1) / 6.0;
    const double q2 = (2.0 * f0 + 5.0 * fp1 - fp2) / 6.0;
    return (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2);
}

double weno_face_plus(int order, const double* fp, double eps) {
    if (order == 3)
        return weno3_face(fp[-1], fp[0], fp[1], eps);
    return weno5_face(fp[-2], fp[-1], fp[0], fp[1], fp[2], eps);
}

double weno_face_minus(int order, const double* fm, double eps) {
    if (order == 3)
        return weno3_face(fm[2], fm[1], fm[0], eps);
    return weno5_face(fm[3], fm[2], fm[1], fm[0], fm[-1], eps);
}

} // namespace

double interface_flux(const Scheme& s, const double* fp, const double* fm,
                      double dx) {
    if (s.is_weno()) {
        const double eps = weno_epsilon(dx);
        return weno_face_plus(s.order, fp, eps) +
               weno_face_minus(s.order, fm, eps);
    }
    return linear_face_plus(s.order, fp) + linear_face_minus(s.order, fm);
}

double weno_flux(const Scheme& s, const double* u, const double* f,
                 double lf_alpha, double dx) {
    const int gw = s.ghost_width();
    std::vector<double> fp(2 * gw + 1), fm(2 * gw + 1);
    for (int i = -gw; i <= gw; ++i) {
        fp[i + gw] = 0.5 * (f[i] + lf_alpha * u[i]);
        fm[i + gw] = 0.5 * (f[i] - lf_alpha * u[i]);
    }
    return interface_flux(s, fp.data() + gw, fm.data() + gw, dx);
}

void line_residual(const Scheme& s, const double* u, const double* f, int n,
                   double lf_alpha, double dx, double* out) {
    const int gw = s.ghost_width();
    const int n_int = n - 2 * gw;
    if (n_int <= 0)
        throw std::invalid_argument("line_residual: line shorter than ghost frame");

    std::vector<double> fp(n), fm(n);
    for (int j = 0; j < n; ++j) {
        fp[j] = 0.5 * (f[j] + lf_alpha * u[j]);
        fm[j] = 0.5 * (f[j] - lf_alpha * u[j]);
    }

    // Interfaces j+1/2 for j = gw-1 .. n-gw-1 (one per interior cell edge).
    std::vector<double> face(n_int + 1);
    for (int j = gw - 1; j <= n - gw - 1; ++j)
        face[j - (gw - 1)] = interface_flux(s, fp.data() + j, fm.data() + j, dx);

    for (int i = 0; i < n_int; ++i)
        out[i] = -(face[i + 1] - face[i]) / dx;
}

} // namespace silw
