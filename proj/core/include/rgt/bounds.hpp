#pragma once

#include "rgt/exact_tail.hpp"
#include "rgt/weights.hpp"

#include <map>
#include <optional>
#include <string>

namespace rgt {

/// Closed-form tail bounds for P{S_n >= x}, all clamped to [0, 1].
enum class BoundKind {
    GaussianOptimal,    // c_star * I(x)
    SymmetryChebyshev,  // min(1/2, 1/(2x^2)) for x > 0, else 1
    Hoeffding,          // exp(-x^2/2)
    BerryEsseen,        // I(x) + c_l * tau
    PinelisAsymptotic,  // I(x) * (1 + 14.10/x), display comparison only
};

/// Evaluates one bound. tau is required for BerryEsseen and ignored
/// otherwise; a missing tau there is an std::invalid_argument.
double bound(BoundKind kind, double x, std::optional<double> tau = std::nullopt);

/// c * I(x) clamped to [0,1]; rows for published prior constants.
double prior_constant_bound(double c, double x);

/// Name -> value rows for every bound at this (x, tau), including the
/// published prior constants 12.01, 4.46, 4.00 and 1.01*c_star.
std::map<std::string, double> bound_table(double x, double tau);

/// Full comparison: exact tail against every bound row.
RatioReport compare_all(const WeightVector& w, double x);

/// Two-point Chebyshev slack
///   E|S|^s/2 - [a^s P{S>=a} + (b^s-a^s) P{S>=b}]          (symmetric form)
///   E|S|^s   - [a^s P{|S|>=a} + (b^s-a^s) P{|S|>=b}]      (absolute form)
/// computed from the exact support. Nonnegative up to rounding.
enum class TwoPointForm { Symmetric, Absolute };
double verify_two_point(const WeightVector& w, double s, double a, double b,
                        TwoPointForm form = TwoPointForm::Symmetric);

/// Partial sum sum_{k=1..k_max} P{S_n >= sqrt(k)} and the slack 1/2 - sum.
struct ChainResult {
    double sum;
    double slack;
};
ChainResult chebyshev_chain(const WeightVector& w, int k_max);

} // namespace rgt
