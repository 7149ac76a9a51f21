#pragma once

#include "rgt/weights.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rgt {

/// One atom of the sum distribution: value with its dyadic probability
/// count/2^n.
struct Atom {
    double value;
    std::uint64_t count;
    double probability;
};

/// Comparison record for one (weights, threshold) pair.
struct RatioReport {
    std::vector<double> weights;
    double x;
    double exact;
    double gauss_tail;
    double ratio;
    std::map<std::string, double> bounds;
};

inline constexpr std::size_t kMaxExactN = 40;     // meet-in-the-middle limit
inline constexpr std::size_t kMaxSupportN = 24;   // full-support enumeration limit

/// P{S_n >= x} for S_n = sum a_i eps_i, exact as a dyadic count over 2^n.
///
/// Half sums are enumerated over the index split [0, ceil(n/2)) / rest, each
/// accumulated in ascending index order; a pair is counted iff the rounded
/// double s1 + s2 compares >= x. Ties at x are included.
/// Throws std::length_error for n > kMaxExactN.
double exact_tail(const WeightVector& w, double x);

/// Exceedance count over 2^n behind exact_tail.
std::uint64_t exact_tail_count(const WeightVector& w, double x);

/// Distinct values of S_n with probabilities, strictly increasing.
/// Values are assembled with the same summation order as exact_tail, so
/// exact_tail(w, atom.value) includes that atom's mass.
/// Throws std::length_error for n > kMaxSupportN.
std::vector<Atom> atom_support(const WeightVector& w);

/// P{S_n >= x} read off a support table.
double tail_from_support(const std::vector<Atom>& support, double x);

/// Exact tail, Gaussian tail and their ratio, with the bound table filled in.
RatioReport ratio(const WeightVector& w, double x);

/// Both sides of the first-sign conditioning identity
///   P{S_n >= x} = 1/2 P{X >= A} + 1/2 P{X >= B},
/// X = (a_2 eps_2 + ... + a_n eps_n)/theta, A = (x-tau)/theta,
/// B = (x+tau)/theta. Returns |lhs - rhs|.
/// Throws std::length_error for n = 1, std::domain_error if theta == 0.
double split_check(const WeightVector& w, double x);

} // namespace rgt
