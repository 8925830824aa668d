#include "identity.hpp"

#include <cmath>
#include <sstream>

namespace solwave::exact {

namespace {

void validate_exact_inputs(const MonomialNonlinearity& nl, const PowerWeightAnsatz& a) {
    if (a.amplitude == 0) fail(Errc::invalid_argument, "ansatz amplitude must be nonzero");
    if (a.lambda < 1) fail(Errc::invalid_argument, "ansatz lambda must be a positive integer");
    if (a.dim < 1) fail(Errc::invalid_argument, "ansatz dimension must be >= 1");
    if (nl.power < 2) fail(Errc::invalid_argument, "nonlinearity power must be >= 2");
}

// The exact lane needs the symbol to be a genuine polynomial in |xi| with
// rational coefficients: real p0 and nonnegative integer degrees.
RatPoly symbol_as_poly(const MultiplierSymbol& s) {
    if (s.p0_imag() != 0.0)
        fail(Errc::exact_unsupported, "exact verification requires a real symbol");
    std::size_t deg = 0;
    for (const auto& t : s.terms()) {
        const double r = std::round(t.degree);
        if (r != t.degree)
            fail(Errc::exact_unsupported,
                 "exact verification requires integer symbol degrees (got " +
                 std::to_string(t.degree) + ")");
        deg = std::max(deg, static_cast<std::size_t>(r));
    }
    std::vector<Rat> c(deg + 1, Rat(0));
    c[0] = s.p0();
    for (const auto& t : s.terms())
        c[static_cast<std::size_t>(std::llround(t.degree))] += t.coeff;
    return make_poly(c);
}

// Transformed sides of p(D)u = F(u), with all scalar factors folded in.
struct Sides {
    ReducedForm lhs, rhs;   // common factor pi^{dim/2}
};

Sides transformed_sides(const RatPoly& sym_poly, const MonomialNonlinearity& nl,
                        const PowerWeightAnsatz& a) {
    ReducedForm lu = reduce_to_basis(ft_power_weight(a.lambda, a.dim));
    ReducedForm ru = reduce_to_basis(
        ft_power_weight(static_cast<long>(nl.power) * a.lambda, a.dim));
    Sides s;
    s.lhs.scale = lu.scale * a.amplitude;
    s.lhs.poly = sym_poly * lu.poly;
    s.rhs.scale = ru.scale * (nl.coeff * rat_pow(a.amplitude, nl.power));
    s.rhs.poly = ru.poly;
    return s;
}

} // namespace

VerificationResult verify_solution(const MultiplierSymbol& symbol,
                                   const MonomialNonlinearity& nl,
                                   const PowerWeightAnsatz& ansatz) {
    validate_exact_inputs(nl, ansatz);
    const RatPoly sp = symbol_as_poly(symbol);
    Sides s = transformed_sides(sp, nl, ansatz);
    if (s.lhs.scale.pi_half_pow != s.rhs.scale.pi_half_pow &&
        s.lhs.scale.rat != 0 && s.rhs.scale.rat != 0)
        fail(Errc::internal, "pi powers of the two sides disagree");

    VerificationResult res;
    res.lhs = s.lhs;
    res.rhs = s.rhs;
    res.pi_half_pow = ansatz.dim;
    res.residual = s.lhs.poly * s.lhs.scale.rat - s.rhs.poly * s.rhs.scale.rat;
    res.holds = res.residual.is_zero();
    std::ostringstream os;
    if (res.holds) {
        os << "identity holds exactly: both transformed sides equal pi^{" << ansatz.dim
           << "/2} * (" << poly_to_string(s.lhs.poly * s.lhs.scale.rat)
           << ") * (|xi|/2)^{1/2} K_{1/2}(|xi|)";
    } else {
        os << "refuted: residual polynomial " << poly_to_string(res.residual)
           << " (times pi^{" << ansatz.dim << "/2} and the basis factor) is nonzero";
    }
    res.detail = os.str();
    return res;
}

MultiplierSymbol synthesize_symbol(const PowerWeightAnsatz& ansatz,
                                   const MonomialNonlinearity& nl) {
    validate_exact_inputs(nl, ansatz);
    if (nl.coeff == 0) fail(Errc::no_exact_symbol, "zero nonlinearity has no elliptic symbol");
    ReducedForm lu = reduce_to_basis(ft_power_weight(ansatz.lambda, ansatz.dim));
    ReducedForm ru = reduce_to_basis(
        ft_power_weight(static_cast<long>(nl.power) * ansatz.lambda, ansatz.dim));

    const Rat num_scale = ru.scale.rat * nl.coeff * rat_pow(ansatz.amplitude, nl.power);
    const Rat den_scale = lu.scale.rat * ansatz.amplitude;
    RatPoly num = ru.poly * num_scale;
    const RatPoly& den = lu.poly;

    if (num.size() < den.size())
        fail(Errc::no_exact_symbol, "transformed nonlinearity has lower degree than the ansatz side");
    RatPoly q = num / den;
    RatPoly r = num % den;
    if (!r.is_zero())
        fail(Errc::no_exact_symbol,
             "polynomial division leaves remainder " + poly_to_string(r));
    q = q * (Rat(1) / den_scale);

    std::vector<HomogeneousTerm> terms;
    for (std::size_t j = 1; j < q.size(); ++j)
        if (q[j] != 0) terms.push_back({q[j], static_cast<double>(j)});
    return MultiplierSymbol(q.size() ? q[0] : Rat(0), std::move(terms));
}

double predicted_decay(const MultiplierSymbol& symbol, int dim) {
    if (dim < 1) fail(Errc::invalid_argument, "dimension must be >= 1");
    return symbol.singularity_index() + dim;
}

} // namespace solwave::exact
