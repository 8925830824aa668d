#ifndef SOLWAVE_BESSEL_HPP
#define SOLWAVE_BESSEL_HPP

// Half-integer modified Bessel functions of the second kind and the closed
// forms they induce for Fourier transforms of inverse-square power weights.
//
//   K_{n+1/2}(x) = sqrt(pi/(2x)) e^{-x} sum_{j=0}^{n} c_j x^{-j}
//
// with integer coefficients c_j obeying a three-term recurrence; c_n is the
// odd double factorial (2n-1)!!, which overflows 64-bit integers by n = 18,
// hence the bignum coefficients.  The reduction
//
//   S (x/2)^mu K_{n+1/2}(x)  =  S' * poly(x) * (x/2)^{1/2} K_{1/2}(x)
//
// (valid when mu - 1/2 is an integer >= n) turns transform identities into
// exact polynomial identities, since (x/2)^{1/2} K_{1/2}(x) = (sqrt(pi)/2) e^{-x}.

#include "exact.hpp"

namespace solwave::exact {

inline constexpr int kMaxHalfOrder = 64;

struct HalfIntegerK {
    int n = 0;                 // order is n + 1/2
    std::vector<Int> coeff;    // c_0 .. c_n, c_0 = 1
};

// Coefficient table for K_{n+1/2}; n capped (default kMaxHalfOrder) to keep
// callers honest about the cost of the exact lane.
HalfIntegerK k_half(int n, int max_order = kMaxHalfOrder);

// Numeric evaluation of K_{n+1/2}(x), x > 0, straight from the closed form.
double eval_k_half(int n, double x);

// S * (x/2)^mu * K_nu(x) with S rational times a power of sqrt(pi).
struct RadialFourierExpr {
    PiScalar scale;
    Rat mu;     // signed half-integer exponent
    Rat nu;     // order of the Bessel factor, >= 0
};

// Fourier transform (convention: integral of e^{-i x.xi} u) of
// (1+|x|^2)^{-lambda} on R^dim:
//   (2 pi^{dim/2} / (lambda-1)!) (|xi|/2)^{lambda-dim/2} K_{lambda-dim/2}(|xi|).
// Exact lane requires integer lambda >= 1 and odd dim (half-odd Bessel order).
RadialFourierExpr ft_power_weight(long lambda, int dim);

// scale * poly(x) * (x/2)^{1/2} K_{1/2}(x), poly with ascending exact coefficients.
struct ReducedForm {
    PiScalar scale;
    RatPoly poly;
};

ReducedForm reduce_to_basis(const RadialFourierExpr& expr);

// Numeric value of a reduced form at x > 0.
double eval_reduced(const ReducedForm& rf, double x);

// Numeric value of the unreduced expression at x > 0 (used for cross-checks).
double eval_radial_expr(const RadialFourierExpr& expr, double x);

} // namespace solwave::exact

#endif
