#include "bessel.hpp"

#include <cmath>

namespace solwave::exact {

HalfIntegerK k_half(int n, int max_order) {
    if (n < 0) fail(Errc::invalid_argument, "k_half: order must be >= 0");
    if (n > max_order)
        fail(Errc::invalid_argument,
             "k_half: order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order));
    // c^{(n+1)}_j = c^{(n-1)}_j + (2n+1) c^{(n)}_{j-1}, seeded by [1] and [1, 1].
    std::vector<Int> prev{Int(1)};            // n = 0
    if (n == 0) return {0, prev};
    std::vector<Int> cur{Int(1), Int(1)};     // n = 1
    for (int m = 1; m < n; ++m) {
        std::vector<Int> next(m + 2, Int(0));
        const Int f = 2 * m + 1;
        for (int j = 0; j <= m + 1; ++j) {
            if (j < int(prev.size())) next[j] += prev[j];
            if (j >= 1) next[j] += f * cur[j - 1];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {n, cur};
}

double eval_k_half(int n, double x) {
    if (!(x > 0)) fail(Errc::invalid_argument, "eval_k_half: requires x > 0");
    const HalfIntegerK k = k_half(n);
    // Horner in 1/x over the coefficient tail.
    const double y = 1.0 / x;
    double s = 0.0;
    for (int j = n; j >= 0; --j) s = s * y + static_cast<double>(k.coeff[j]);
    return std::sqrt(M_PI / (2.0 * x)) * std::exp(-x) * s;
}

RadialFourierExpr ft_power_weight(long lambda, int dim) {
    if (lambda < 1)
        fail(Errc::exact_unsupported, "ft_power_weight: lambda must be a positive integer");
    if (dim < 1)
        fail(Errc::invalid_argument, "ft_power_weight: dimension must be >= 1");
    if (dim % 2 == 0)
        fail(Errc::exact_unsupported,
             "ft_power_weight: even dimension gives integer Bessel order, outside the exact basis");
    RadialFourierExpr e;
    e.scale = PiScalar(Rat(2) / Rat(factorial(lambda - 1)), dim);
    e.mu = Rat(2 * lambda - dim, 2);
    e.nu = e.mu >= 0 ? e.mu : -e.mu;
    return e;
}

ReducedForm reduce_to_basis(const RadialFourierExpr& expr) {
    // nu = n + 1/2 with integer n >= 0
    const Rat two_nu = expr.nu * 2;
    if (!rat_is_integer(two_nu) || rat_is_integer(expr.nu) || expr.nu < 0)
        fail(Errc::exact_unsupported,
             "reduce_to_basis: Bessel order must be half-odd-integer and nonnegative");
    const long n = static_cast<long>((static_cast<long>(boost::multiprecision::numerator(two_nu)) - 1) / 2);

    // (x/2)^mu = 2^{-t} x^{t} (x/2)^{1/2} basis scaling needs t = mu - 1/2 integer
    const Rat t_rat = expr.mu - Rat(1, 2);
    if (!rat_is_integer(t_rat))
        fail(Errc::exact_unsupported, "reduce_to_basis: mu - 1/2 must be an integer");
    const long t = static_cast<long>(boost::multiprecision::numerator(t_rat));
    if (t < n)
        fail(Errc::non_polynomial,
             "reduce_to_basis: negative powers survive (mu - 1/2 = " + std::to_string(t) +
             " < n = " + std::to_string(n) + ")");

    const HalfIntegerK k = k_half(static_cast<int>(n));
    std::vector<Rat> coeffs(static_cast<std::size_t>(t) + 1, Rat(0));
    for (long j = 0; j <= n; ++j) coeffs[static_cast<std::size_t>(t - j)] = Rat(k.coeff[j]);

    ReducedForm rf;
    rf.scale = expr.scale * rat_pow(Rat(1, 2), t);
    rf.poly = make_poly(coeffs);
    return rf;
}

double eval_reduced(const ReducedForm& rf, double x) {
    if (!(x > 0)) fail(Errc::invalid_argument, "eval_reduced: requires x > 0");
    double poly = 0.0;
    for (std::size_t j = rf.poly.size(); j-- > 0;)
        poly = poly * x + rat_to_double(rf.poly[j]);
    // basis value (x/2)^{1/2} K_{1/2}(x) = (sqrt(pi)/2) e^{-x}
    return rf.scale.value() * poly * 0.5 * std::sqrt(M_PI) * std::exp(-x);
}

double eval_radial_expr(const RadialFourierExpr& expr, double x) {
    if (!(x > 0)) fail(Errc::invalid_argument, "eval_radial_expr: requires x > 0");
    const Rat two_nu = expr.nu * 2;
    if (!rat_is_integer(two_nu) || rat_is_integer(expr.nu))
        fail(Errc::exact_unsupported, "eval_radial_expr: only half-odd-integer orders supported");
    const int n = static_cast<int>((static_cast<long>(boost::multiprecision::numerator(two_nu)) - 1) / 2);
    return expr.scale.value() * std::pow(0.5 * x, rat_to_double(expr.mu)) * eval_k_half(n, x);
}

} // namespace solwave::exact
