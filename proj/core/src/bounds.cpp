#include "rgt/bounds.hpp"

#include "rgt/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace rgt {
namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

const Constants& default_constants() {
    static const Constants c = constants();
    return c;
}

} // namespace

double bound(BoundKind kind, double x, std::optional<double> tau) {
    if (!std::isfinite(x)) throw std::domain_error("bound: non-finite threshold");
    const Constants& c = default_constants();
    switch (kind) {
        case BoundKind::GaussianOptimal:
            return clamp01(c.c_star * normal_tail(x));
        case BoundKind::SymmetryChebyshev:
            if (x <= 0.0) return 1.0;
            return std::min(0.5, 1.0 / (2.0 * x * x));
        case BoundKind::Hoeffding:
            return clamp01(std::exp(-0.5 * x * x));
        case BoundKind::BerryEsseen:
            if (!tau) throw std::invalid_argument("bound: BerryEsseen needs tau");
            if (!(*tau > 0.0) || !(*tau <= 1.0))
                throw std::invalid_argument("bound: tau must be in (0, 1]");
            return clamp01(normal_tail(x) + c.c_l * *tau);
        case BoundKind::PinelisAsymptotic:
            if (x <= 0.0) return 1.0;
            return clamp01(normal_tail(x) * (1.0 + c.c_pinelis_asym / x));
    }
    throw std::invalid_argument("bound: unknown kind");
}

double prior_constant_bound(double c, double x) {
    return clamp01(c * normal_tail(x));
}

std::map<std::string, double> bound_table(double x, double tau) {
    const Constants& c = default_constants();
    std::map<std::string, double> t;
    t["gaussian_optimal"] = bound(BoundKind::GaussianOptimal, x);
    t["symmetry_chebyshev"] = bound(BoundKind::SymmetryChebyshev, x);
    t["hoeffding"] = bound(BoundKind::Hoeffding, x);
    t["berry_esseen"] = bound(BoundKind::BerryEsseen, x, tau);
    t["pinelis_asymptotic"] = bound(BoundKind::PinelisAsymptotic, x);
    t["prior_bgh_12.01"] = prior_constant_bound(12.01, x);
    t["prior_pinelis94_4.46"] = prior_constant_bound(4.46, x);
    t["prior_bentkus_4.00"] = prior_constant_bound(4.00, x);
    t["prior_pinelis07_1.01cstar"] = prior_constant_bound(1.01 * c.c_star, x);
    return t;
}

RatioReport compare_all(const WeightVector& w, double x) {
    return ratio(w, x);
}

double verify_two_point(const WeightVector& w, double s, double a, double b, TwoPointForm form) {
    if (!(s > 0.0)) throw std::invalid_argument("verify_two_point: s must be positive");
    if (a < 0.0 || a > b) throw std::invalid_argument("verify_two_point: need 0 <= a <= b");
    const auto support = atom_support(w);

    double moment = 0.0;
    for (const Atom& at : support) moment += at.probability * std::pow(std::fabs(at.value), s);

    const double as = std::pow(a, s);
    const double bs = std::pow(b, s);
    if (form == TwoPointForm::Symmetric) {
        const double lhs = as * tail_from_support(support, a) +
                           (bs - as) * tail_from_support(support, b);
        return moment / 2.0 - lhs;
    }
    auto abs_tail = [&](double t) {
        double p = 0.0;
        for (const Atom& at : support)
            if (std::fabs(at.value) >= t) p += at.probability;
        return p;
    };
    const double lhs = as * abs_tail(a) + (bs - as) * abs_tail(b);
    return moment - lhs;
}

ChainResult chebyshev_chain(const WeightVector& w, int k_max) {
    if (k_max < 1) throw std::invalid_argument("chebyshev_chain: k_max must be >= 1");
    const auto support = atom_support(w);
    double sum = 0.0;
    for (int k = 1; k <= k_max; ++k)
        sum += tail_from_support(support, std::sqrt(static_cast<double>(k)));
    return {sum, 0.5 - sum};
}

} // namespace rgt
