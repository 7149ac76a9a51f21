#include "rgt/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace rgt {
namespace {

constexpr long double kInvSqrt2Pi = 0.398942280401432677939946059934381868L;

// Maclaurin series of the centered integral int_0^x phi(t) dt.
// Alternating with terms decreasing once 2k > x^2, so the truncation error
// is below the first omitted term; we stop when that bound is < 1e-19.
long double centered_integral(long double x) {
    const long double x2 = x * x;
    long double num = x;   // x^(2k+1) / (2^k k!)
    long double sum = x;   // term k=0
    for (int k = 1; k < 200; ++k) {
        num *= -x2 / (2 * k);
        const long double term = num / (2 * k + 1);
        sum += term;
        if (2 * k > x2 && std::fabs(term) < 1e-19L) break;
    }
    return kInvSqrt2Pi * sum;
}

// Laplace continued fraction for the Mills ratio I(x)/phi(x),
//   R(x) = 1/(x + 1/(x + 2/(x + 3/(...)))),
// evaluated with the modified Lentz scheme. Used for x > 3.5 where it
// converges in a few dozen iterations.
long double mills_ratio(long double x) {
    const long double tiny = 1e-60L;
    long double f = x, c = x, d = 0.0L;
    for (int n = 1; n < 500; ++n) {
        const long double an = static_cast<long double>(n);
        d = x + an * d;
        if (d == 0.0L) d = tiny;
        c = x + an / c;
        if (c == 0.0L) c = tiny;
        d = 1.0L / d;
        const long double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0L) < 1e-20L) break;
    }
    return 1.0L / f;
}

} // namespace

long double normal_density_ld(long double x) {
    return kInvSqrt2Pi * std::exp(-0.5L * x * x);
}

long double normal_tail_ld(long double x) {
    if (x < 0.0L) return 1.0L - normal_tail_ld(-x);
    if (x <= 3.5L) return 0.5L - centered_integral(x);
    return normal_density_ld(x) * mills_ratio(x);
}

double normal_tail(double x) {
    if (!std::isfinite(x)) throw std::domain_error("normal_tail: non-finite input");
    return static_cast<double>(normal_tail_ld(x));
}

double normal_density(double x) {
    if (!std::isfinite(x)) throw std::domain_error("normal_density: non-finite input");
    return static_cast<double>(normal_density_ld(x));
}

Constants constants(double c_l) {
    if (!(c_l > 0.0) || !(c_l < 1.0))
        throw std::invalid_argument("constants: c_l must be in (0, 1)");
    const double s2 = std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);
    Constants c{};
    c.c_star = 1.0 / (4.0 * normal_tail(s2));
    c.c_l = c_l;
    c.tau_l = (c.c_star - 1.0) * normal_tail(s3) / c_l;
    c.tau_star = (3.0 - 2.0 * s2) * s3;
    const double phi3 = normal_density(s3);
    const double i3 = normal_tail(s3);
    c.q_alpha = 2.0 * c.c_star * phi3;
    c.q_beta = 6.0 * s3 * c.c_star * phi3 - 2.0 * c.c_star * i3 - 1.0;
    c.q_gamma = 2.0 * s3 * c.c_star * i3;
    c.c_pinelis_asym = 14.10;
    return c;
}

} // namespace rgt
