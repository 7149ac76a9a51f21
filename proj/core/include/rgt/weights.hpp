#pragma once

#include <vector>

namespace rgt {

/// Normalized weight vector of a Rademacher sum: entries sorted descending,
/// all positive, sum of squares 1. tau is the largest weight, theta the
/// conditional scale sqrt(1 - tau^2).
class WeightVector {
public:
    /// Takes absolute values, drops zeros, sorts descending and scales to
    /// unit sum of squares. Throws std::invalid_argument if the input is
    /// empty or all-zero, std::domain_error on non-finite entries.
    static WeightVector normalize(const std::vector<double>& raw);

    /// Adopts an already descending-sorted, positive, unit-sum-of-squares
    /// vector without rescaling it (rescaling would perturb exact ties at
    /// atoms). Validates the invariants to 1e-12 and throws on violation.
    static WeightVector from_unit_sorted(std::vector<double> w);

    const std::vector<double>& weights() const { return w_; }
    std::size_t size() const { return w_.size(); }
    double operator[](std::size_t i) const { return w_[i]; }
    double tau() const { return w_.front(); }
    double theta() const;

    /// Sum of all weights = the largest atom of the sum distribution.
    double max_sum() const;

private:
    explicit WeightVector(std::vector<double> w) : w_(std::move(w)) {}
    std::vector<double> w_;
};

} // namespace rgt
