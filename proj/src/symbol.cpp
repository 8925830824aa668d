#include "symbol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace solwave {

namespace {

bool is_positive_even_integer(double d) {
    if (!(d > 0)) return false;
    double r = std::round(d);
    if (r != d) return false;                       // exact: spec treats 2.0 as smooth, 2.0000001 not
    return std::fmod(r, 2.0) == 0.0;
}

} // namespace

bool HomogeneousTerm::smooth() const { return is_positive_even_integer(degree); }

MultiplierSymbol::MultiplierSymbol(exact::Rat p0, std::vector<HomogeneousTerm> terms,
                                   double p0_imag)
    : p0_(std::move(p0)), p0_im_(p0_imag), terms_(std::move(terms)) {
    if (!std::isfinite(p0_im_)) fail(Errc::invalid_argument, "non-finite imaginary part");
    double prev = 0.0;
    for (const auto& t : terms_) {
        if (!std::isfinite(t.degree) || t.degree <= 0)
            fail(Errc::invalid_argument, "term degree must be positive and finite");
        if (t.degree <= prev)
            fail(Errc::invalid_argument, "term degrees must be strictly increasing");
        if (t.coeff == 0)
            fail(Errc::invalid_argument, "zero-coefficient term (drop it instead)");
        prev = t.degree;
    }
    p0_d_ = exact::rat_to_double(p0_);
    coeff_d_.reserve(terms_.size());
    degree_.reserve(terms_.size());
    for (const auto& t : terms_) {
        coeff_d_.push_back(exact::rat_to_double(t.coeff));
        degree_.push_back(t.degree);
    }
}

double MultiplierSymbol::order() const {
    return terms_.empty() ? 0.0 : terms_.back().degree;
}

bool MultiplierSymbol::has_singular_term() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const HomogeneousTerm& t) { return !t.smooth(); });
}

double MultiplierSymbol::singularity_index() const {
    for (const auto& t : terms_)           // degrees ascend, so first hit is the minimum
        if (!t.smooth()) return t.degree;
    fail(Errc::no_singular_term, "symbol has no non-smooth term");
}

bool MultiplierSymbol::conformant(std::string* why) const {
    if (p0_ == 0 && p0_im_ == 0.0) {
        if (why) *why = "constant term p0 vanishes";
        return false;
    }
    if (!has_singular_term()) {
        if (why) *why = "no non-smooth term";
        return false;
    }
    return true;
}

double MultiplierSymbol::eval(double rho) const {
    if (p0_im_ != 0.0)
        fail(Errc::invalid_argument, "eval on a symbol with complex p0; use eval_complex");
    return eval_complex(rho).real();
}

std::complex<double> MultiplierSymbol::eval_complex(double rho) const {
    if (!(rho >= 0)) fail(Errc::invalid_argument, "eval requires rho >= 0");
    double acc = p0_d_;
    for (std::size_t j = 0; j < coeff_d_.size(); ++j)
        acc += coeff_d_[j] * std::pow(rho, degree_[j]);
    return {acc, p0_im_};
}

MultiplierSymbol MultiplierSymbol::scaled(double eps) const {
    if (!(eps > 0) || !std::isfinite(eps))
        fail(Errc::invalid_argument, "scaling parameter must be positive and finite");
    std::vector<HomogeneousTerm> scaled_terms;
    scaled_terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        // eps^{m_j} is formed in doubles (degrees are real); the product stays
        // exact relative to that dyadic factor.
        exact::Rat factor = exact::rat_from_double(std::pow(eps, t.degree));
        scaled_terms.push_back({t.coeff * factor, t.degree});
    }
    return MultiplierSymbol(p0_, std::move(scaled_terms), p0_im_);
}

EllipticityReport MultiplierSymbol::check_ellipticity(int samples) const {
    if (samples < 16) fail(Errc::invalid_argument, "need at least 16 samples");
    EllipticityReport rep;
    rep.note = "tail bound is certified; the compact part is a dense sampling, "
               "not a proof (raise samples to tighten)";

    const double M = order();
    auto ratio = [&](double rho) {
        return std::abs(eval_complex(rho)) / std::pow(1.0 + rho * rho, 0.5 * M);
    };

    const double abs_p0 = std::hypot(p0_d_, p0_im_);
    if (terms_.empty()) {
        // Constant symbol: the ratio is |p0| everywhere.
        rep.ok = abs_p0 > 0;
        rep.lower_bound = rep.tail_constant = rep.min_sampled = abs_p0;
        rep.tail_radius = 0;
        if (!rep.ok) rep.failure_bracket = {{0.0, 0.0}};
        return rep;
    }

    // Tail: for rho >= R*, |p| >= |c_h| rho^M - (sum_{j<h}|c_j| + |p0|) rho^{m_*}
    //       >= (1-delta)|c_h| rho^M  once rho^{M-m_*} >= lower_mass/(delta |c_h|).
    const double delta = 0.05;
    const double c_lead = std::abs(coeff_d_.back());
    double lower_mass = abs_p0;
    double m_star = 0.0;
    for (std::size_t j = 0; j + 1 < coeff_d_.size(); ++j) {
        lower_mass += std::abs(coeff_d_[j]);
        m_star = std::max(m_star, degree_[j]);
    }
    double r_star = 1.0;
    if (lower_mass > 0)
        r_star = std::max(1.0, std::pow(lower_mass / (delta * c_lead), 1.0 / (M - m_star)));
    rep.tail_radius = r_star;
    rep.tail_constant = (1.0 - delta) * c_lead *
                        std::pow(r_star * r_star / (1.0 + r_star * r_star), 0.5 * M);

    // Compact scan on [0, R*]: linear mesh near the origin, log mesh beyond.
    const double coeff_scale = std::max(abs_p0, std::abs(*std::max_element(
        coeff_d_.begin(), coeff_d_.end(), [](double a, double b) {
            return std::abs(a) < std::abs(b);
        })));
    const double near_zero = 1e-9 * std::max(1.0, coeff_scale);
    std::vector<double> mesh;
    mesh.reserve(static_cast<std::size_t>(samples) + 1);
    const int n_lin = samples / 2, n_log = samples - n_lin;
    const double lin_top = std::min(2.0, r_star);
    for (int i = 0; i <= n_lin; ++i) mesh.push_back(lin_top * i / n_lin);
    if (r_star > lin_top)
        for (int i = 1; i <= n_log; ++i)
            mesh.push_back(lin_top * std::pow(r_star / lin_top, double(i) / n_log));

    rep.min_sampled = ratio(mesh[0]);
    rep.min_sampled_at = mesh[0];
    bool prev_valid = p0_im_ == 0.0;
    double prev_rho = mesh[0], prev_p = prev_valid ? eval(mesh[0]) : 0.0;
    for (std::size_t i = 1; i < mesh.size(); ++i) {
        const double rho = mesh[i];
        const double rt = ratio(rho);
        if (rt < rep.min_sampled) {
            rep.min_sampled = rt;
            rep.min_sampled_at = rho;
        }
        if (prev_valid) {
            const double p_here = eval(rho);
            // A sign change (or a dip below the near-zero floor) brackets a root.
            if ((prev_p < 0) != (p_here < 0) || std::abs(p_here) < near_zero) {
                if (!rep.failure_bracket) rep.failure_bracket = {{prev_rho, rho}};
            }
            prev_p = p_here;
            prev_rho = rho;
        }
    }
    if (std::abs(eval_complex(0.0)) < near_zero && !rep.failure_bracket)
        rep.failure_bracket = {{0.0, mesh.size() > 1 ? mesh[1] : 0.0}};

    rep.lower_bound = std::min(rep.min_sampled, rep.tail_constant);
    rep.ok = !rep.failure_bracket && rep.min_sampled > near_zero;
    return rep;
}

} // namespace solwave
