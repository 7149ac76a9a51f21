#pragma once

namespace rgt {

/// Standard normal tail probability I(x) = P{eta >= x}.
///
/// Evaluated from the Maclaurin series of the integral of the density for
/// |x| <= 3.5 and from the Laplace continued fraction for the Mills ratio
/// beyond, both carried in extended precision. Absolute error <= 1e-15.
/// Throws std::domain_error for non-finite input.
double normal_tail(double x);

/// Standard normal density phi(x) = exp(-x^2/2)/sqrt(2*pi).
/// Relative error <= 1e-14. Throws std::domain_error for non-finite input.
double normal_density(double x);

/// Extended-precision variants used by the certifier's point oracles.
long double normal_tail_ld(long double x);
long double normal_density_ld(long double x);

/// Named constants of the tail-comparison problem. All entries are computed
/// from normal_tail/normal_density at construction; nothing is a baked-in
/// decimal except the published comparison constants (c_l, c_pinelis_asym).
struct Constants {
    double c_star;          // 1/(4*I(sqrt2)), the optimal comparison factor
    double c_l;             // Berry-Esseen constant, default 0.56, overridable
    double tau_l;           // (c_star - 1)*I(sqrt3)/c_l
    double tau_star;        // (3 - 2*sqrt2)*sqrt3, right end of the g/Q interval
    double q_alpha;         // 2*c_star*phi(sqrt3)
    double q_beta;          // 6*sqrt3*c_star*phi(sqrt3) - 2*c_star*I(sqrt3) - 1
    double q_gamma;         // 2*sqrt3*c_star*I(sqrt3)
    double c_pinelis_asym;  // ~14.10, display comparison only
};

/// Builds the constant set for a given Berry-Esseen constant.
/// Requires c_l in (0, 1); the defaults keep 0 < tau_l < tau_star < 1.
Constants constants(double c_l = 0.56);

} // namespace rgt
