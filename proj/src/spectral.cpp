#include "spectral.hpp"

#include <cmath>

#include "fft.hpp"

namespace solwave::spectral {

namespace {

constexpr double kSingularTol = 1e-12;

using cd = std::complex<double>;

std::vector<double> freq_table(const Grid& g) {
    std::vector<double> f(static_cast<std::size_t>(g.n));
    for (int k = 0; k < g.n; ++k) f[static_cast<std::size_t>(k)] = g.freq(k);
    return f;
}

// |xi| at every flat spectral index.
std::vector<double> rho_table(const Grid& g) {
    const auto f = freq_table(g);
    std::vector<double> rho(g.size());
    std::array<int, 3> idx;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        g.unravel(i, idx);
        double r2 = 0;
        for (int a = 0; a < g.dim; ++a) {
            const double x = f[static_cast<std::size_t>(idx[a])];
            r2 += x * x;
        }
        rho[i] = std::sqrt(r2);
    }
    return rho;
}

GridField pointwise_power(const GridField& u, int k) {
    GridField w = u;
    for (std::size_t i = 0; i < w.size(); ++i) {
        cd acc = u[i];
        for (int p = 1; p < k; ++p) acc *= u[i];
        w[i] = acc;
    }
    return w;
}

// 2/3-rule mask: kill every mode with a signed index beyond n/3 on some axis.
std::vector<bool> dealias_mask(const Grid& g) {
    std::vector<bool> kill(g.size(), false);
    const int cut = g.n / 3;
    std::array<int, 3> idx;
    for (std::size_t i = 0; i < kill.size(); ++i) {
        g.unravel(i, idx);
        for (int a = 0; a < g.dim; ++a)
            if (std::abs(g.signed_mode(idx[a])) > cut) {
                kill[i] = true;
                break;
            }
    }
    return kill;
}

GridField init_field(const Grid& g, const SolverConfig& cfg) {
    switch (cfg.init) {
        case SolverConfig::Init::gaussian: {
            const double a = cfg.init_amplitude, w = cfg.init_width;
            if (!(w > 0)) fail(Errc::invalid_argument, "gaussian init width must be positive");
            return GridField::sample_radial(
                g, [a, w](double r) { return a * std::exp(-r * r / (w * w)); });
        }
        case SolverConfig::Init::ansatz: {
            const double c = cfg.ansatz_amplitude;
            const double lam = static_cast<double>(cfg.ansatz_lambda);
            return GridField::sample_radial(
                g, [c, lam](double r) { return c * std::pow(1.0 + r * r, -lam); });
        }
        case SolverConfig::Init::file: {
            GridField f = GridField::read_binary(cfg.init_path);
            if (!(f.grid() == g))
                fail(Errc::invalid_argument, "init field grid does not match the solver grid");
            return f;
        }
    }
    fail(Errc::internal, "unhandled init kind");
}

} // namespace

std::vector<cd> multiplier_values(const MultiplierSymbol& s, const Grid& g) {
    const auto rho = rho_table(g);
    std::vector<cd> p(rho.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = s.eval_complex(rho[i]);
    return p;
}

GridField apply_multiplier(const MultiplierSymbol& s, const GridField& f) {
    const auto p = multiplier_values(s, f.grid());
    GridField out = f;
    fft_forward(f.grid(), out.values());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= p[i];
    fft_backward(f.grid(), out.values());
    return out;
}

GridField invert_multiplier(const MultiplierSymbol& s, const GridField& f) {
    const auto p = multiplier_values(s, f.grid());
    for (std::size_t i = 0; i < p.size(); ++i)
        if (std::abs(p[i]) < kSingularTol)
            fail(Errc::singular_multiplier,
                 "multiplier magnitude below 1e-12 at a grid frequency");
    GridField out = f;
    fft_forward(f.grid(), out.values());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] /= p[i];
    fft_backward(f.grid(), out.values());
    return out;
}

GridField spectral_derivative(const GridField& f, const std::vector<int>& alpha,
                              int max_total_order) {
    const Grid& g = f.grid();
    if (static_cast<int>(alpha.size()) != g.dim)
        fail(Errc::invalid_argument, "derivative multi-index length must equal the dimension");
    int total = 0;
    for (int a : alpha) {
        if (a < 0) fail(Errc::invalid_argument, "derivative orders must be nonnegative");
        total += a;
    }
    if (total > max_total_order)
        fail(Errc::invalid_argument, "derivative order exceeds the configured maximum");

    const auto freqs = freq_table(g);
    GridField out = f;
    fft_forward(g, out.values());
    std::array<int, 3> idx;
    for (std::size_t i = 0; i < out.size(); ++i) {
        g.unravel(i, idx);
        cd m(1.0, 0.0);
        for (int a = 0; a < g.dim; ++a) {
            const int ord = alpha[static_cast<std::size_t>(a)];
            if (ord == 0) continue;
            // the unpaired Nyquist mode breaks odd-order symmetry; drop it
            if (idx[a] == g.n / 2 && (ord % 2)) {
                m = 0.0;
                break;
            }
            m *= std::pow(cd(0.0, freqs[static_cast<std::size_t>(idx[a])]), ord);
        }
        out[i] *= m;
    }
    fft_backward(g, out.values());
    return out;
}

double residual_sup(const MultiplierSymbol& s, const exact::MonomialNonlinearity& nl,
                    const GridField& u) {
    GridField pu = apply_multiplier(s, u);
    const double cf = exact::rat_to_double(nl.coeff);
    GridField fu = pointwise_power(u, nl.power);
    double m = 0;
    const double window = 0.5 * u.grid().half_length;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u.coord_max_abs(i) > window) continue;
        m = std::max(m, std::abs(pu[i] - cf * fu[i]));
    }
    return m;
}

std::pair<GridField, SolveReport> fixed_point_solve(const MultiplierSymbol& s,
                                                    const exact::MonomialNonlinearity& nl,
                                                    const Grid& g, const SolverConfig& cfg) {
    if (!(cfg.tol > 0)) fail(Errc::invalid_argument, "solver tolerance must be positive");
    if (cfg.max_iter < 1) fail(Errc::invalid_argument, "max_iter must be >= 1");
    if (nl.power < 2) fail(Errc::invalid_argument, "nonlinearity power must be >= 2");
    const int k = nl.power;
    const double gamma =
        cfg.gamma == 0.0 ? double(k) / double(k - 1) : cfg.gamma;
    if (!(gamma > 1.0) || !(gamma < double(k) + 1.0))
        fail(Errc::invalid_argument, "stabilizer exponent must lie in (1, k+1)");
    const bool petviashvili = cfg.method == SolverConfig::Method::petviashvili;
    const bool dealias = cfg.dealias == 1 || (cfg.dealias == -1 && k >= 3);
    const double cf = exact::rat_to_double(nl.coeff);

    const auto p = multiplier_values(s, g);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (std::abs(p[i]) < kSingularTol)
            fail(Errc::singular_multiplier,
                 "multiplier magnitude below 1e-12 at a grid frequency; cannot invert");
    const auto kill = dealias ? dealias_mask(g) : std::vector<bool>{};

    GridField u = init_field(g, cfg);
    SolveReport rep;
    const double interior = 0.5 * g.half_length;
    double last_s = 1.0;

    std::vector<cd> uhat, what, res;
    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        uhat = u.values();
        fft_forward(g, uhat);

        GridField fu = pointwise_power(u, k);
        what = fu.values();
        fft_forward(g, what);
        for (auto& z : what) z *= cf;
        if (dealias)
            for (std::size_t i = 0; i < what.size(); ++i)
                if (kill[i]) what[i] = 0.0;

        // residual of the current iterate: ifft(p uhat - what), interior sup
        res.resize(uhat.size());
        for (std::size_t i = 0; i < uhat.size(); ++i) res[i] = p[i] * uhat[i] - what[i];
        fft_backward(g, res);
        double rsup = 0;
        for (std::size_t i = 0; i < res.size(); ++i) {
            if (u.coord_max_abs(i) > interior) continue;
            rsup = std::max(rsup, std::abs(res[i]));
        }
        rep.residual_history.push_back(rsup);

        double factor = 1.0;
        if (petviashvili) {
            double numer = 0, denom = 0;
            for (std::size_t i = 0; i < uhat.size(); ++i) {
                numer += (p[i] * uhat[i] * std::conj(uhat[i])).real();
                denom += (what[i] * std::conj(uhat[i])).real();
            }
            if (std::abs(denom) < 1e-12 * std::max(1.0, std::abs(numer)))
                fail(Errc::degenerate_stabilizer,
                     "stabilizer denominator <F(u), u> vanished");
            const double S = numer / denom;
            rep.stabilizer_history.push_back(S);
            last_s = S;
            if (S <= 0 && std::floor(gamma) != gamma)
                fail(Errc::diverged, "stabilizer went nonpositive under a fractional exponent");
            factor = std::pow(S, gamma);
        }

        // u_{n+1} = factor * p(D)^{-1} F(u_n)
        std::vector<cd> next = what;
        for (std::size_t i = 0; i < next.size(); ++i) next[i] = factor * next[i] / p[i];
        fft_backward(g, next);

        double diff = 0, amp = 0;
        for (std::size_t i = 0; i < next.size(); ++i) {
            diff = std::max(diff, std::abs(next[i] - u[i]));
            amp = std::max(amp, std::abs(next[i]));
        }
        if (!std::isfinite(diff) || !std::isfinite(amp) || amp > cfg.divergence_threshold)
            fail(Errc::diverged, "iterate exceeded the divergence threshold");

        u.values() = std::move(next);
        rep.iterations = iter;
        rep.final_update = diff;
        if (diff < cfg.tol) {
            rep.converged = true;
            rep.stop_reason = "update below tolerance";
            break;
        }
    }
    if (!rep.converged) rep.stop_reason = "max_iterations";
    rep.final_residual = residual_sup(s, nl, u);
    rep.stabilizer_drift = petviashvili ? std::abs(last_s - 1.0) : 0.0;
    return {std::move(u), std::move(rep)};
}

} // namespace solwave::spectral
