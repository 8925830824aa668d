#ifndef SOLWAVE_EXACT_HPP
#define SOLWAVE_EXACT_HPP

// Exact scalar layer: arbitrary-precision integers/rationals plus the
// "rational times a power of sqrt(pi)" scalars that closed-form transforms of
// power weights produce.  Everything here is exact; doubles appear only in the
// explicit value() bridges.

#include <boost/math/tools/polynomial.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace solwave::exact {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using RatPoly = boost::math::tools::polynomial<Rat>;

// boost 1.74's rational(p, q) constructor is broken for rational arguments, so
// polynomials are only ever built through this iterator-range helper.
inline RatPoly make_poly(const std::vector<Rat>& coeffs) {
    return RatPoly(coeffs.begin(), coeffs.end());
}

// Exact conversion: every finite double is a dyadic rational.
Rat rat_from_double(double x);

// Accepts "p", "-p", "p/q" with optional sign on p; q > 0 after normalization.
Rat rat_from_string(std::string_view s);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

double rat_to_double(const Rat& r);

bool rat_is_integer(const Rat& r);

// r^e for integer e (e < 0 inverts; errors on 0^negative).
Rat rat_pow(const Rat& r, long e);

// (2n-1)!! with (-1)!! = 1; exact for any n >= 0.
Int double_factorial_odd(long n);

Int factorial(long n);

// A scalar of the form rat * pi^(pi_half_pow/2).  Normalized so that rat == 0
// forces pi_half_pow == 0, making equality comparisons canonical.
struct PiScalar {
    Rat rat{0};
    int pi_half_pow = 0;

    PiScalar() = default;
    PiScalar(Rat r, int php) : rat(std::move(r)), pi_half_pow(rat == 0 ? 0 : php) {}

    PiScalar operator*(const PiScalar& o) const {
        return PiScalar(rat * o.rat, pi_half_pow + o.pi_half_pow);
    }
    PiScalar operator*(const Rat& r) const { return PiScalar(rat * r, pi_half_pow); }
    bool operator==(const PiScalar& o) const {
        return rat == o.rat && pi_half_pow == o.pi_half_pow;
    }

    double value() const;
    std::string to_string() const;   // e.g. "4 * pi^{1/2}", "2 * pi^{3/2}", "3/2"
};

std::string poly_to_string(const RatPoly& p);   // ascending powers, for reports

} // namespace solwave::exact

#endif
