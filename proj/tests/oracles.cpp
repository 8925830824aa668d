#include "oracles.hpp"

#include <cmath>
#include <cstddef>

namespace solwave_test {

namespace {

// Composite Simpson of f on [0, X] with enough panels for both the
// oscillation (>= 32 points per period) and the integrand's own variation.
double simpson(const std::function<double(double)>& f, double X, double xi) {
    const double per_period = 2.0 * M_PI / std::max(xi, 1e-9);
    double h = std::min(per_period / 32.0, 0.05);
    std::size_t n = static_cast<std::size_t>(std::ceil(X / h));
    if (n % 2) ++n;
    h = X / double(n);
    double acc = f(0.0) + f(X);
    for (std::size_t i = 1; i < n; ++i) acc += f(i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

} // namespace

double cos_integral(const std::function<double(double)>& g,
                    const std::function<double(double)>& dg,
                    double xi, double X) {
    double head = simpson([&](double x) { return std::cos(x * xi) * g(x); }, X, xi);
    // integral_X^inf cos(x xi) g dx
    //   = -g(X) sin(X xi)/xi - g'(X) cos(X xi)/xi^2 - xi^{-2} integral cos g''
    double tail = -g(X) * std::sin(X * xi) / xi - dg(X) * std::cos(X * xi) / (xi * xi);
    return head + tail;
}

double ft_power_weight_1d(int lambda, double xi) {
    const double lam = lambda;
    auto g = [lam](double x) { return std::pow(1.0 + x * x, -lam); };
    auto dg = [lam](double x) { return -2.0 * lam * x * std::pow(1.0 + x * x, -lam - 1.0); };
    return 2.0 * cos_integral(g, dg, xi, 3000.0);
}

double ft_power_weight_3d(int lambda, double rho) {
    const double lam = lambda;
    // integral_0^inf sin(r rho) g(r) dr with g = r (1+r^2)^{-lambda}:
    //   head by Simpson, tail = g(X) cos(X rho)/rho - g'(X) sin(X rho)/rho^2 + O(g''/rho^2)
    auto g = [lam](double r) { return r * std::pow(1.0 + r * r, -lam); };
    auto dg = [lam](double r) {
        return std::pow(1.0 + r * r, -lam) - 2.0 * lam * r * r * std::pow(1.0 + r * r, -lam - 1.0);
    };
    const double X = 2000.0;
    double head = simpson([&](double r) { return std::sin(r * rho) * g(r); }, X, rho);
    double tail = g(X) * std::cos(X * rho) / rho - dg(X) * std::sin(X * rho) / (rho * rho);
    return 4.0 * M_PI / rho * (head + tail);
}

} // namespace solwave_test
