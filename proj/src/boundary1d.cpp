#include "silw/boundary1d.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "silw/poly.hpp"

namespace silw {

void validate(const SILWConfig& cfg) {
    if (cfg.d < 1)
        throw std::invalid_argument("SILWConfig: d must be positive");
    if (cfg.kd < 1 || cfg.kd > cfg.d)
        throw std::invalid_argument("SILWConfig: need 1 <= kd <= d, got kd=" +
                                    std::to_string(cfg.kd) + " d=" + std::to_string(cfg.d));
    if (cfg.treatment == Treatment::silw_new && cfg.kd < cfg.d && !(cfg.alpha > 0.0))
        throw std::invalid_argument("SILWConfig: auxiliary spacing alpha must be positive");
}

// ----------------------------------------------------------------------------
// Core builders
// ----------------------------------------------------------------------------

void silw_new_eval(const std::vector<double>& sb, const std::vector<double>& aux_s,
                   const std::vector<double>& aux_v, const std::vector<double>& eval_s,
                   std::vector<double>& out) {
    const int kd = static_cast<int>(sb.size());
    const int n_aux = static_cast<int>(aux_s.size());
    if (aux_v.size() != aux_s.size())
        throw std::invalid_argument("silw_new_eval: aux nodes/values mismatch");

    // Taylor part carrying the boundary conditions: T^(k)(0) = sb[k].
    auto taylor = [&](double s) {
        double acc = 0.0, pow_s = 1.0, fact = 1.0;
        for (int k = 0; k < kd; ++k) {
            if (k > 0) {
                pow_s *= s;
                fact *= k;
            }
            acc += sb[k] * pow_s / fact;
        }
        return acc;
    };

    out.resize(eval_s.size());
    if (n_aux == 0) {
        for (size_t i = 0; i < eval_s.size(); ++i)
            out[i] = taylor(eval_s[i]);
        return;
    }

    // Residual q - T vanishes to order kd at s = 0, so q = T + s^kd r with
    // r interpolating the deflated mismatches at the auxiliary nodes.
    std::vector<double> r_vals(n_aux);
    for (int i = 0; i < n_aux; ++i) {
        const double s = aux_s[i];
        if (s == 0.0)
            throw std::invalid_argument("silw_new_eval: auxiliary node at the boundary");
        r_vals[i] = (aux_v[i] - taylor(s)) / std::pow(s, kd);
    }
    NewtonPoly r(aux_s, r_vals);

    for (size_t i = 0; i < eval_s.size(); ++i) {
        const double s = eval_s[i];
        out[i] = taylor(s) + std::pow(s, kd) * r.eval(s);
    }
}

void silw_taylor_eval(const std::vector<double>& ders, const std::vector<double>& eval_s,
                      std::vector<double>& out) {
    out.resize(eval_s.size());
    for (size_t i = 0; i < eval_s.size(); ++i) {
        const double s = eval_s[i];
        double acc = 0.0, pow_s = 1.0, fact = 1.0;
        for (size_t k = 0; k < ders.size(); ++k) {
            if (k > 0) {
                pow_s *= s;
                fact *= static_cast<double>(k);
            }
            acc += ders[k] * pow_s / fact;
        }
        out[i] = acc;
    }
}

// ----------------------------------------------------------------------------
// Runtime fills
// ----------------------------------------------------------------------------

namespace {

std::vector<double> ghost_locations(double C_a, int n_ghost) {
    std::vector<double> s(n_ghost);
    for (int p = 1; p <= n_ghost; ++p)
        s[p - 1] = C_a - p;
    return s;
}

std::vector<double> interior_nodes(double C_a, int d) {
    std::vector<double> s(d);
    for (int j = 0; j < d; ++j)
        s[j] = C_a + j;
    return s;
}

} // namespace

void new_silw_ghosts(const SILWConfig& cfg, double C_a, const double* u,
                     const std::vector<double>& sb, int n_ghost, bool shock_safe,
                     double dx_phys, double* ghosts_out) {
    validate(cfg);
    if (static_cast<int>(sb.size()) != cfg.kd)
        throw std::invalid_argument("new_silw_ghosts: boundary data size != kd");

    const int n_aux = cfg.d - cfg.kd;
    std::vector<double> aux_s(n_aux), aux_v(n_aux);
    for (int k = 1; k <= n_aux; ++k)
        aux_s[k - 1] = k * cfg.alpha;

    const std::vector<double> vals(u, u + cfg.d);
    if (n_aux > 0) {
        if (shock_safe) {
            for (int i = 0; i < n_aux; ++i)
                aux_v[i] = weno_extrapolate(vals, C_a, aux_s[i], 0, dx_phys);
        } else {
            NewtonPoly p(interior_nodes(C_a, cfg.d), vals);
            for (int i = 0; i < n_aux; ++i)
                aux_v[i] = p.eval(aux_s[i]);
        }
    }

    std::vector<double> out;
    silw_new_eval(sb, aux_s, aux_v, ghost_locations(C_a, n_ghost), out);
    for (int p = 0; p < n_ghost; ++p)
        ghosts_out[p] = out[p];
}

void original_silw_ghosts(const SILWConfig& cfg, double C_a, const double* u,
                          const std::vector<double>& sb, int n_ghost, bool shock_safe,
                          double dx_phys, double* ghosts_out) {
    validate(cfg);
    if (static_cast<int>(sb.size()) != cfg.kd)
        throw std::invalid_argument("original_silw_ghosts: boundary data size != kd");

    std::vector<double> ders(cfg.d);
    for (int k = 0; k < cfg.kd; ++k)
        ders[k] = sb[k];

    if (cfg.kd < cfg.d) {
        const std::vector<double> vals(u, u + cfg.d);
        if (shock_safe) {
            for (int k = cfg.kd; k < cfg.d; ++k)
                ders[k] = weno_extrapolate(vals, C_a, 0.0, k, dx_phys);
        } else {
            NewtonPoly p(interior_nodes(C_a, cfg.d), vals);
            std::vector<double> pd;
            p.derivs(0.0, cfg.d - 1, pd);
            for (int k = cfg.kd; k < cfg.d; ++k)
                ders[k] = pd[k];
        }
    }

    std::vector<double> out;
    silw_taylor_eval(ders, ghost_locations(C_a, n_ghost), out);
    for (int p = 0; p < n_ghost; ++p)
        ghosts_out[p] = out[p];
}

void silw_ghosts(const SILWConfig& cfg, double C_a, const double* u,
                 const std::vector<double>& sb, int n_ghost, bool shock_safe,
                 double dx_phys, double* ghosts_out) {
    if (cfg.treatment == Treatment::silw_new)
        new_silw_ghosts(cfg, C_a, u, sb, n_ghost, shock_safe, dx_phys, ghosts_out);
    else
        original_silw_ghosts(cfg, C_a, u, sb, n_ghost, shock_safe, dx_phys, ghosts_out);
}

// ----------------------------------------------------------------------------
// Precomputed weights
// ----------------------------------------------------------------------------

GhostWeights left_ghost_weights(const SILWConfig& cfg, double C_a, int n_ghost) {
    validate(cfg);
    GhostWeights gw;
    gw.W.assign(n_ghost, std::vector<double>(cfg.d, 0.0));
    gw.G.assign(n_ghost, std::vector<double>(cfg.kd, 0.0));

    // The construction is linear in (u, sb); probe it with unit vectors.
    std::vector<double> u(cfg.d, 0.0), sb(cfg.kd, 0.0), ghosts(n_ghost);
    for (int j = 0; j < cfg.d; ++j) {
        u[j] = 1.0;
        silw_ghosts(cfg, C_a, u.data(), sb, n_ghost, false, 1.0, ghosts.data());
        for (int p = 0; p < n_ghost; ++p)
            gw.W[p][j] = ghosts[p];
        u[j] = 0.0;
    }
    for (int k = 0; k < cfg.kd; ++k) {
        sb[k] = 1.0;
        silw_ghosts(cfg, C_a, u.data(), sb, n_ghost, false, 1.0, ghosts.data());
        for (int p = 0; p < n_ghost; ++p)
            gw.G[p][k] = ghosts[p];
        sb[k] = 0.0;
    }
    return gw;
}

std::vector<std::vector<double>> right_extrapolation_weights(int d, double C_b,
                                                             int n_ghost) {
    // Mirrored coordinates: the last d interior points sit at C_b + j,
    // j = d-1..0, and ghost p sits at s = C_b - p on the mirrored axis, i.e.
    // beyond the right boundary. Probe the interpolant with unit vectors.
    std::vector<std::vector<double>> E(n_ghost, std::vector<double>(d, 0.0));
    std::vector<double> nodes(d), vals(d, 0.0);
    for (int j = 0; j < d; ++j)
        nodes[j] = C_b + (d - 1 - j); // node j corresponds to u_{N-d+1+j}
    for (int j = 0; j < d; ++j) {
        vals[j] = 1.0;
        NewtonPoly p(nodes, vals);
        for (int q = 1; q <= n_ghost; ++q)
            E[q - 1][j] = p.eval(C_b - q);
        vals[j] = 0.0;
    }
    return E;
}

// ----------------------------------------------------------------------------
// ILW ladder
// ----------------------------------------------------------------------------

std::vector<double> ilw_scalar_derivatives(int kd, const std::vector<double>& g_derivs,
                                           double fprime, double fdoubleprime) {
    if (kd < 1)
        throw std::invalid_argument("ilw_scalar_derivatives: kd must be >= 1");
    if (static_cast<int>(g_derivs.size()) < kd)
        throw std::invalid_argument("ilw_scalar_derivatives: need g derivatives up to order kd-1");
    std::vector<double> out(kd);
    out[0] = g_derivs[0];
    if (kd == 1)
        return out;

    if (fprime == 0.0)
        throw std::domain_error("ilw_scalar_derivatives: sonic boundary state (f'(g) = 0)");
    out[1] = g_derivs[1] / (-fprime);
    if (kd == 2)
        return out;

    out[2] = (fprime * g_derivs[2] - 2.0 * fdoubleprime * g_derivs[1] * g_derivs[1]) /
             (fprime * fprime * fprime);
    if (kd == 3)
        return out;

    if (fdoubleprime != 0.0)
        throw std::invalid_argument(
            "ilw_scalar_derivatives: orders beyond u''' need a linear flux");
    for (int k = 3; k < kd; ++k)
        out[k] = g_derivs[k] * std::pow(-1.0 / fprime, k);
    return out;
}

} // namespace silw
