#ifndef SOLWAVE_IDENTITY_HPP
#define SOLWAVE_IDENTITY_HPP

// Exact verification of closed-form solutions.  For the ansatz
// u(x) = c (1+|x|^2)^{-lambda} and nonlinearity F(u) = c_F u^k, the equation
// p(D) u = F(u) holds on R^d iff the transformed sides agree:
//
//   p(|xi|) * c * FT[(1+|x|^2)^{-lambda}]  ==  c_F c^k * FT[(1+|x|^2)^{-k lambda}]
//
// (u^k is again a power weight).  Both transforms reduce to the K_{1/2} basis,
// so the identity collapses to equality of two polynomials with rational
// coefficients times the common factor pi^{d/2} e^{-|xi|}; `holds` is exact,
// decided by big-rational arithmetic with no tolerances anywhere.

#include "bessel.hpp"
#include "symbol.hpp"

namespace solwave::exact {

struct PowerWeightAnsatz {
    Rat amplitude;     // c != 0
    long lambda = 1;   // integer weight exponent >= 1
    int dim = 1;       // spatial dimension (odd for the exact lane)
};

struct MonomialNonlinearity {
    Rat coeff;         // c_F
    int power = 2;     // k >= 2
};

struct VerificationResult {
    bool holds = false;
    ReducedForm lhs, rhs;      // scale includes the ansatz amplitude factors
    RatPoly residual;          // scale_l*poly_l - scale_r*poly_r (pi^{d/2} common)
    int pi_half_pow = 0;
    std::string detail;
};

// Exact decision.  Throws Errc::exact_unsupported when the inputs leave the
// exact lane (complex or non-integer-degree symbol, even dimension, ...), and
// Errc::non_polynomial when a reduction keeps negative powers.
VerificationResult verify_solution(const MultiplierSymbol& symbol,
                                   const MonomialNonlinearity& nl,
                                   const PowerWeightAnsatz& ansatz);

// Exact polynomial division of the transformed sides; the quotient is the
// unique multiplier symbol solving the equation for this ansatz, when one
// exists (Errc::no_exact_symbol otherwise).
MultiplierSymbol synthesize_symbol(const PowerWeightAnsatz& ansatz,
                                   const MonomialNonlinearity& nl);

// Sharp spatial decay rate predicted for a solitary profile of p(D)u = F(u):
// singularity index plus dimension.
double predicted_decay(const MultiplierSymbol& symbol, int dim);

} // namespace solwave::exact

#endif
