#ifndef SOLWAVE_SPECTRAL_HPP
#define SOLWAVE_SPECTRAL_HPP

// Pseudospectral application of radial multipliers on periodic grids, and the
// stabilized fixed-point solver for p(D) u = c_F u^k.
//
// The solver iterates (Petviashvili stabilization)
//
//   u_{n+1} = S_n^gamma p(D)^{-1} F(u_n),   S_n = <p(D)u_n, u_n> / <F(u_n), u_n>
//
// with gamma = k/(k-1) by default; at a genuine solution S = 1, and the
// stabilizer kills the scale drift that makes the plain iteration collapse to
// zero (the plain method is kept available precisely to demonstrate that).

#include "grid.hpp"
#include "identity.hpp"
#include "symbol.hpp"

namespace solwave::spectral {

// p(|xi_k|) over the grid's spectral layout.
std::vector<std::complex<double>> multiplier_values(const MultiplierSymbol& s, const Grid& g);

GridField apply_multiplier(const MultiplierSymbol& s, const GridField& f);

// Errc::singular_multiplier if |p| < 1e-12 at any grid frequency.
GridField invert_multiplier(const MultiplierSymbol& s, const GridField& f);

// Mixed partial of multi-index alpha (one entry per axis, each >= 0).
GridField spectral_derivative(const GridField& f, const std::vector<int>& alpha,
                              int max_total_order = 8);

// sup over the interior window (max_axis |x_axis| <= L/2) of |p(D)u - c_F u^k|.
double residual_sup(const MultiplierSymbol& s, const exact::MonomialNonlinearity& nl,
                    const GridField& u);

struct SolverConfig {
    enum class Method { petviashvili, plain };
    enum class Init { gaussian, ansatz, file };

    Method method = Method::petviashvili;
    double tol = 1e-10;            // sup-norm of the update
    int max_iter = 500;
    double gamma = 0.0;            // 0 selects k/(k-1); must land in (1, k+1)
    int dealias = -1;              // -1 auto (on for k >= 3), 0 off, 1 on
    double divergence_threshold = 1e6;

    Init init = Init::gaussian;
    double init_amplitude = 1.0;   // gaussian: a exp(-|x|^2 / w^2)
    double init_width = 1.0;
    double ansatz_amplitude = 1.0; // ansatz: c (1+|x|^2)^{-lambda}
    long ansatz_lambda = 1;
    std::string init_path;         // file init
};

struct SolveReport {
    bool converged = false;
    int iterations = 0;
    double final_residual = 0;     // interior sup of p(D)u - F(u)
    double final_update = 0;       // last sup-norm step
    double stabilizer_drift = 0;   // |S - 1| at the final iterate
    std::vector<double> residual_history;
    std::vector<double> stabilizer_history;
    std::string stop_reason;
};

std::pair<GridField, SolveReport> fixed_point_solve(const MultiplierSymbol& s,
                                                    const exact::MonomialNonlinearity& nl,
                                                    const Grid& g, const SolverConfig& cfg);

} // namespace solwave::spectral

#endif
