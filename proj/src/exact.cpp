#include "exact.hpp"

#include <cmath>
#include <sstream>

namespace solwave::exact {

Rat rat_from_double(double x) {
    if (!std::isfinite(x)) fail(Errc::invalid_argument, "non-finite value has no rational form");
    return Rat(x);   // boost converts the dyadic expansion exactly
}

Rat rat_from_string(std::string_view s) {
    auto bad = [&] { fail(Errc::parse_error, "malformed rational '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    const auto slash = s.find('/');
    auto parse_int = [&](std::string_view t) -> Int {
        if (t.empty()) bad();
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) bad();
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') bad();
        return Int(std::string(t));
    };
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) fail(Errc::parse_error, "zero denominator in '" + std::string(s) + "'");
    return Rat(num) / Rat(den);
}

std::string rat_to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double rat_to_double(const Rat& r) { return static_cast<double>(r); }

bool rat_is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

Rat rat_pow(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    if (r == 0 && e < 0) fail(Errc::invalid_argument, "0 raised to a negative power");
    Rat base = e > 0 ? r : Rat(1) / r;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Int double_factorial_odd(long n) {
    if (n < 0) fail(Errc::invalid_argument, "double factorial of negative order");
    Int acc(1);
    for (long j = 1; j <= 2 * n - 1; j += 2) acc *= j;
    return acc;
}

Int factorial(long n) {
    if (n < 0) fail(Errc::invalid_argument, "factorial of negative argument");
    Int acc(1);
    for (long j = 2; j <= n; ++j) acc *= j;
    return acc;
}

double PiScalar::value() const {
    return rat_to_double(rat) * std::pow(M_PI, 0.5 * pi_half_pow);
}

std::string PiScalar::to_string() const {
    std::ostringstream os;
    os << rat_to_string(rat);
    if (pi_half_pow != 0) {
        os << " * pi^{" << pi_half_pow << "/2}";
    }
    return os.str();
}

std::string poly_to_string(const RatPoly& p) {
    if (p.size() == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] == 0 && p.size() > 1) continue;
        if (!first) os << " + ";
        os << rat_to_string(p[j]);
        if (j >= 1) os << "*x";
        if (j >= 2) os << "^" << j;
        first = false;
    }
    return os.str();
}

} // namespace solwave::exact
