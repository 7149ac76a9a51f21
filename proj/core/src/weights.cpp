#include "rgt/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rgt {

WeightVector WeightVector::normalize(const std::vector<double>& raw) {
    if (raw.empty()) throw std::invalid_argument("normalize: empty weight list");
    std::vector<double> w;
    w.reserve(raw.size());
    long double sumsq = 0.0L;
    for (double v : raw) {
        if (!std::isfinite(v)) throw std::domain_error("normalize: non-finite weight");
        if (v == 0.0) continue;
        w.push_back(std::fabs(v));
        sumsq += static_cast<long double>(v) * v;
    }
    if (w.empty()) throw std::invalid_argument("normalize: all weights are zero");
    std::sort(w.begin(), w.end(), std::greater<double>());
    // Scale in extended precision so that e.g. (1,1) lands on the correctly
    // rounded double of 1/sqrt(2); a double-precision norm can be off by an
    // ulp, which matters for ties at atoms.
    const long double norm = std::sqrt(sumsq);
    for (double& v : w) v = static_cast<double>(static_cast<long double>(v) / norm);
    return WeightVector(std::move(w));
}

WeightVector WeightVector::from_unit_sorted(std::vector<double> w) {
    if (w.empty()) throw std::invalid_argument("from_unit_sorted: empty weight list");
    long double sumsq = 0.0L;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!std::isfinite(w[i]) || w[i] <= 0.0)
            throw std::invalid_argument("from_unit_sorted: weights must be positive and finite");
        if (i > 0 && w[i] > w[i - 1])
            throw std::invalid_argument("from_unit_sorted: weights must be sorted descending");
        sumsq += static_cast<long double>(w[i]) * w[i];
    }
    if (std::fabs(static_cast<double>(sumsq) - 1.0) > 1e-12)
        throw std::invalid_argument("from_unit_sorted: sum of squares is not 1");
    return WeightVector(std::move(w));
}

double WeightVector::theta() const {
    const double t = tau();
    return std::sqrt(std::max(0.0, 1.0 - t * t));
}

double WeightVector::max_sum() const {
    double s = 0.0;
    for (double v : w_) s += v;
    return s;
}

} // namespace rgt
