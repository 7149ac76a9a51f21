#include "rgt/exact_tail.hpp"

#include "rgt/bounds.hpp"
#include "rgt/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

namespace rgt {
namespace {

// All 2^m signed sums of the given weights, index i added before index i+1.
// Grown by doubling, which reproduces left-to-right accumulation per mask.
std::vector<double> half_sums(std::span<const double> w) {
    std::vector<double> sums{0.0};
    sums.reserve(std::size_t{1} << w.size());
    for (double a : w) {
        const std::size_t m = sums.size();
        for (std::size_t i = 0; i < m; ++i) {
            const double base = sums[i];
            sums[i] = base + a;
            sums.push_back(base - a);
        }
    }
    return sums;
}

std::size_t first_half_size(std::size_t n) { return (n + 1) / 2; }

} // namespace

std::uint64_t exact_tail_count(const WeightVector& w, double x) {
    const std::size_t n = w.size();
    if (n > kMaxExactN) throw std::length_error("exact_tail: n exceeds the meet-in-the-middle limit");
    const auto& weights = w.weights();
    const std::size_t n1 = first_half_size(n);
    std::vector<double> a = half_sums({weights.data(), n1});
    std::vector<double> b = half_sums({weights.data() + n1, n - n1});
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    // For ascending s1 the cut index in b is non-increasing: a pair counts
    // iff the rounded sum s1 + b[j] >= x, and rounding preserves order.
    std::uint64_t count = 0;
    std::size_t j = b.size();
    for (double s1 : a) {
        while (j > 0 && s1 + b[j - 1] >= x) --j;
        count += b.size() - j;
    }
    return count;
}

double exact_tail(const WeightVector& w, double x) {
    const std::uint64_t count = exact_tail_count(w, x);
    return std::ldexp(static_cast<double>(count), -static_cast<int>(w.size()));
}

std::vector<Atom> atom_support(const WeightVector& w) {
    const std::size_t n = w.size();
    if (n > kMaxSupportN) throw std::length_error("atom_support: n exceeds the enumeration limit");
    const auto& weights = w.weights();
    const std::size_t n1 = first_half_size(n);
    std::vector<double> a = half_sums({weights.data(), n1});
    std::vector<double> b = half_sums({weights.data() + n1, n - n1});

    std::vector<double> all;
    all.reserve(a.size() * b.size());
    for (double s1 : a)
        for (double s2 : b) all.push_back(s1 + s2);
    std::sort(all.begin(), all.end());

    std::vector<Atom> support;
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j] == all[i]) ++j;
        support.push_back({all[i], j - i, std::ldexp(static_cast<double>(j - i), -static_cast<int>(n))});
        i = j;
    }
    return support;
}

double tail_from_support(const std::vector<Atom>& support, double x) {
    double p = 0.0;
    for (auto it = support.rbegin(); it != support.rend() && it->value >= x; ++it)
        p += it->probability;
    return p;
}

RatioReport ratio(const WeightVector& w, double x) {
    RatioReport r;
    r.weights = w.weights();
    r.x = x;
    r.exact = exact_tail(w, x);
    r.gauss_tail = normal_tail(x);
    r.ratio = r.gauss_tail > 0.0 ? r.exact / r.gauss_tail : 0.0;
    r.bounds = bound_table(x, w.tau());
    return r;
}

double split_check(const WeightVector& w, double x) {
    const std::size_t n = w.size();
    if (n < 2) throw std::length_error("split_check: needs n >= 2");
    const double tau = w.tau();
    const double theta = w.theta();
    if (theta == 0.0) throw std::domain_error("split_check: degenerate theta = 0");

    std::vector<double> rest(w.weights().begin() + 1, w.weights().end());
    for (double& v : rest) v /= theta;
    const WeightVector sub = WeightVector::from_unit_sorted(std::move(rest));

    const double a = (x - tau) / theta;
    const double b = (x + tau) / theta;
    const double lhs = exact_tail(w, x);
    const double rhs = 0.5 * exact_tail(sub, a) + 0.5 * exact_tail(sub, b);
    return std::fabs(lhs - rhs);
}

} // namespace rgt
