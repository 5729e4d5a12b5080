#include "silw/stability.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "silw/stencil.hpp"

namespace silw {

std::vector<int> default_N_set() { return {30, 40, 50, 60}; }

std::vector<double> default_Ca_grid() {
    std::vector<double> grid;
    grid.reserve(101);
    grid.push_back(1e-6);
    for (int k = 1; k <= 99; ++k)
        grid.push_back(0.01 * k);
    grid.push_back(1.0 - 1e-6);
    return grid;
}

std::vector<double> alpha_range(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo))
        throw std::invalid_argument("alpha_range: need step > 0 and hi >= lo");
    std::vector<double> grid;
    const int n = int(std::lround((hi - lo) / step));
    grid.reserve(std::size_t(n) + 1);
    for (int k = 0; k <= n; ++k)
        grid.push_back(lo + k * step);
    return grid;
}

// ============================================================================
// assembly
// ============================================================================

DiscretizationMatrix assemble_Q(const SILWConfig& cfg, double C_a, int N, double C_b) {
    validate(cfg);
    if (C_a < 0.0 || C_a >= 1.0 || C_b < 0.0 || C_b >= 1.0)
        throw std::invalid_argument("assemble_Q: offsets must lie in [0, 1)");
    const UpwindStencil& st = upwind_stencil(cfg.d);
    if (N + 1 < 2 * cfg.d)
        throw std::invalid_argument("assemble_Q: N too small, the boundary "
                                    "closures would overlap");

    DiscretizationMatrix m;
    m.cfg = cfg;
    m.C_a = C_a;
    m.C_b = C_b;
    m.N = N;
    const int n = m.size();
    m.Q.assign(std::size_t(n) * n, 0.0);

    const GhostWeights left = left_ghost_weights(cfg, C_a, st.left);
    const auto right = right_extrapolation_weights(cfg.d, C_b, st.right);

    for (int j = 0; j <= N; ++j) {
        double* row = m.Q.data() + std::size_t(j) * n;
        for (int off = -st.left; off <= st.right; ++off) {
            const double c = st.coeff(off);
            const int t = j + off;
            if (t >= 0 && t <= N) {
                row[t] -= c;
            } else if (t < 0) {
                const auto& w = left.W[std::size_t(-t) - 1];
                for (int i = 0; i < cfg.d; ++i)
                    row[i] -= c * w[std::size_t(i)];
            } else {
                const auto& w = right[std::size_t(t - N) - 1];
                for (int i = 0; i < cfg.d; ++i)
                    row[N - cfg.d + 1 + i] -= c * w[std::size_t(i)];
            }
        }
    }
    return m;
}

std::vector<std::complex<double>> eigenvalues(const std::vector<double>& M, int n) {
    if (n < 1 || M.size() != std::size_t(n) * n)
        throw std::invalid_argument("eigenvalues: matrix size mismatch");
    Eigen::MatrixXd A(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            A(r, c) = M[std::size_t(r) * n + c];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(A, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalues: QR iteration did not converge");
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        out[std::size_t(k)] = solver.eigenvalues()[k];
    return out;
}

// ============================================================================
// fixed eigenvalues and amplification
// ============================================================================

std::vector<std::complex<double>>
match_fixed(const std::vector<std::vector<std::complex<double>>>& spectra, double tol) {
    if (spectra.size() < 3)
        throw std::invalid_argument("match_fixed: need spectra for >= 3 grid sizes");
    std::vector<std::complex<double>> fixed;
    for (const std::complex<double>& s : spectra.front()) {
        bool in_all = true;
        for (std::size_t k = 1; k < spectra.size() && in_all; ++k) {
            bool found = false;
            for (const std::complex<double>& t : spectra[k])
                if (std::abs(t - s) <= tol) {
                    found = true;
                    break;
                }
            in_all = found;
        }
        if (!in_all)
            continue;
        bool duplicate = false;
        for (const std::complex<double>& u : fixed)
            if (std::abs(u - s) <= tol) {
                duplicate = true;
                break;
            }
        if (!duplicate)
            fixed.push_back(s);
    }
    return fixed;
}

std::vector<std::complex<double>> fixed_eigenvalues(const SILWConfig& cfg, double C_a,
                                                    double C_b, std::vector<int> N_set,
                                                    double tol) {
    if (N_set.empty())
        N_set = default_N_set();
    if (N_set.size() < 3)
        throw std::invalid_argument("fixed_eigenvalues: need >= 3 grid sizes");
    std::vector<std::vector<std::complex<double>>> spectra;
    spectra.reserve(N_set.size());
    for (int N : N_set) {
        const DiscretizationMatrix m = assemble_Q(cfg, C_a, N, C_b);
        spectra.push_back(eigenvalues(m.Q, m.size()));
    }
    return match_fixed(spectra, tol);
}

std::complex<double> rk3_growth(std::complex<double> mu) {
    return 1.0 + mu + 0.5 * mu * mu + mu * mu * mu / 6.0;
}

double amplification(std::complex<double> s, double lambda_cfl) {
    return std::abs(rk3_growth(lambda_cfl * s));
}

// ============================================================================
// (C_a, alpha) scan
// ============================================================================

bool StabilityScan::alpha_stable_for_all(std::size_t ia) const {
    for (std::size_t ic = 0; ic < C_a_grid.size(); ++ic)
        if (!cell(ia, ic).stable)
            return false;
    return true;
}

std::vector<std::pair<double, double>> StabilityScan::stable_intervals() const {
    std::vector<std::pair<double, double>> intervals;
    std::size_t ia = 0;
    while (ia < alpha_grid.size()) {
        if (!alpha_stable_for_all(ia)) {
            ++ia;
            continue;
        }
        const std::size_t lo = ia;
        while (ia < alpha_grid.size() && alpha_stable_for_all(ia))
            ++ia;
        intervals.emplace_back(alpha_grid[lo], alpha_grid[ia - 1]);
    }
    return intervals;
}

StabilityScan scan_alpha(const SILWConfig& cfg, const std::vector<double>& C_a_grid,
                         const std::vector<double>& alpha_grid, double lambda_cfl) {
    if (C_a_grid.empty() || alpha_grid.empty())
        throw std::invalid_argument("scan_alpha: empty grid");
    StabilityScan scan;
    scan.C_a_grid = C_a_grid;
    scan.alpha_grid = alpha_grid;
    scan.lambda_cfl = lambda_cfl;
    scan.cells.reserve(C_a_grid.size() * alpha_grid.size());

    for (double alpha : alpha_grid) {
        SILWConfig c = cfg;
        c.alpha = alpha;
        for (double C_a : C_a_grid) {
            ScanCell cell;
            cell.C_a = C_a;
            cell.alpha = alpha;
            const auto fixed = fixed_eigenvalues(c, C_a);
            cell.n_fixed = int(fixed.size());
            for (const std::complex<double>& s : fixed)
                cell.max_abs_z = std::max(cell.max_abs_z, amplification(s, lambda_cfl));
            cell.stable = cell.n_fixed == 0 || cell.max_abs_z <= 1.0 + stability_tol;
            scan.cells.push_back(cell);
        }
    }
    return scan;
}

// ============================================================================
// Cauchy CFL limits
// ============================================================================

std::complex<double> upwind_symbol(int d, double xi) {
    const UpwindStencil& st = upwind_stencil(d);
    std::complex<double> sum = 0.0;
    for (int off = -st.left; off <= st.right; ++off)
        sum += st.coeff(off) * std::exp(std::complex<double>(0.0, off * xi));
    return -sum;
}

double max_cfl_for_symbol(const std::function<std::complex<double>(double)>& symbol,
                          double bisect_tol, int n_xi) {
    if (!(bisect_tol > 0.0) || n_xi < 16)
        throw std::invalid_argument("max_cfl_for_symbol: bad tolerance or sweep size");
    std::vector<std::complex<double>> sigma(static_cast<std::size_t>(n_xi));
    const double two_pi = 2.0 * M_PI;
    for (int k = 0; k < n_xi; ++k)
        sigma[std::size_t(k)] = symbol(two_pi * k / n_xi);

    const auto stable = [&](double lam) {
        for (const std::complex<double>& s : sigma)
            if (std::abs(rk3_growth(lam * s)) > 1.0 + 1e-12)
                return false;
        return true;
    };

    double lo = 0.0, hi = 4.0;
    if (!stable(lo))
        return 0.0;
    while (stable(hi) && hi < 1024.0)
        hi *= 2.0;
    if (hi >= 1024.0)
        throw std::runtime_error("max_cfl_for_symbol: no finite CFL limit found");
    while (hi - lo > bisect_tol) {
        const double mid = 0.5 * (lo + hi);
        (stable(mid) ? lo : hi) = mid;
    }
    return lo;
}

double cauchy_cfl_max(int d) {
    return max_cfl_for_symbol([d](double xi) { return upwind_symbol(d, xi); });
}

double table2_lambda(int d) {
    switch (d) {
    case 3: return 1.62;
    case 5: return 1.43;
    case 7: return 1.24;
    case 9: return 1.12;
    case 11: return 1.04;
    case 13: return 0.99;
    }
    throw std::invalid_argument("table2_lambda: unsupported order " + std::to_string(d));
}

} // namespace silw
