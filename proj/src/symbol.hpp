#ifndef SOLWAVE_SYMBOL_HPP
#define SOLWAVE_SYMBOL_HPP

// Radial Fourier multipliers p(xi) = p0 + sum_j c_j |xi|^{m_j} with real
// coefficients and strictly increasing positive degrees.  Coefficients are
// stored exactly (rationals) so the verification lane stays exact; cached
// double views feed the numeric lane.  A term is "smooth" when its degree is a
// positive even integer (|xi|^{2k} is a polynomial in xi); every other degree
// contributes a genuine singularity at xi = 0, and the smallest such degree is
// the singularity index that drives all decay predictions.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "exact.hpp"

namespace solwave {

struct HomogeneousTerm {
    exact::Rat coeff;     // nonzero
    double degree = 0;    // m_j > 0

    bool smooth() const;  // degree is a positive even integer
};

struct EllipticityReport {
    bool ok = false;
    double lower_bound = 0;     // certified inf of |p(rho)| / <rho>^M over [0, inf)
    double tail_radius = 0;     // R*: beyond it the leading term provably dominates
    double tail_constant = 0;   // lower bound valid for all rho >= R*
    double min_sampled = 0;     // min of the ratio over the sampled compact part
    double min_sampled_at = 0;
    // Present when a sign change or near-vanishing of p was detected between
    // two sample points; [first, second] brackets the offending radius.
    std::optional<std::pair<double, double>> failure_bracket;
    std::string note;           // records the heuristic nature of the compact scan
};

class MultiplierSymbol {
  public:
    // Construction validates: finite degrees > 0, strictly increasing, nonzero
    // coefficients.  p0 = 0 and an empty/all-smooth term list are accepted so
    // bounded probe operators can be built; the operations that genuinely
    // require the conformant shape (nonzero p0, at least one singular term)
    // enforce it themselves.
    MultiplierSymbol(exact::Rat p0, std::vector<HomogeneousTerm> terms,
                     double p0_imag = 0.0);

    const exact::Rat& p0() const { return p0_; }
    double p0_imag() const { return p0_im_; }
    const std::vector<HomogeneousTerm>& terms() const { return terms_; }

    // Largest degree present; 0 for a constant symbol.
    double order() const;

    // Smallest non-smooth degree; errors when every term is smooth.
    double singularity_index() const;
    bool has_singular_term() const;

    // Nonzero p0 and at least one singular term.  When `why` is given it
    // receives the first violated requirement.
    bool conformant(std::string* why = nullptr) const;

    // p(rho) for rho = |xi| >= 0.  eval() requires a real symbol.
    double eval(double rho) const;
    std::complex<double> eval_complex(double rho) const;

    // p_eps(xi) = p0 + sum_j c_j eps^{m_j} |xi|^{m_j}, i.e. the constant term
    // survives the rescaling xi -> eps xi untouched.
    MultiplierSymbol scaled(double eps) const;

    // Certified tail bound plus a sampled scan of the compact part.  The tail
    // is a proof; the compact part is a dense sampling and is documented as
    // such in the report note.  `samples` tunes the scan density.
    EllipticityReport check_ellipticity(int samples = 512) const;

  private:
    exact::Rat p0_;
    double p0_im_ = 0;
    std::vector<HomogeneousTerm> terms_;
    // double mirrors for the numeric lane
    double p0_d_ = 0;
    std::vector<double> coeff_d_, degree_;
};

} // namespace solwave

#endif
