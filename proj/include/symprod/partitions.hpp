#ifndef SYMPROD_PARTITIONS_HPP
#define SYMPROD_PARTITIONS_HPP

#include <compare>
#include <utility>
#include <vector>

#include "symprod/common.hpp"

namespace symprod {

/* A partition of a positive integer n: a non-increasing tuple of positive
 * parts summing to n. The canonical form is non-increasing everywhere in
 * this library; helpers that need another ordering reorder internally.
 */
class Partition {
public:
    /// Requires parts already in canonical non-increasing order, all > 0,
    /// non-empty. Throws InvalidInput otherwise.
    explicit Partition(std::vector<int> parts);

    /// Sorts the given positive parts into canonical form first.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const { return sum_; }
    int length() const { return static_cast<int>(parts_.size()); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

/// All partitions of n in reverse-lexicographic order:
/// (n), ..., (1,1,...,1). Throws InvalidInput for n <= 0.
std::vector<Partition> enumerate_partitions(int n);

/// p(n), the number of partitions of n, by Euler's pentagonal-number
/// recurrence. Must (and, by test, does) agree with the length of
/// enumerate_partitions(n). Throws InvalidInput for n <= 0.
Integer partition_count(long long n);

/// A family of constant Hilbert polynomials (integers) is a good partition
/// of the constant polynomial n exactly when every member is strictly
/// positive and the family sums to n: Hilb^k of a curve is non-empty iff
/// k > 0. Order-insensitive. Throws InvalidInput for an empty family or
/// n <= 0.
bool is_good_partition(const std::vector<long long>& family, long long n);

/// Multiset differences (a \ b, b \ a): equal parts are removed pairwise,
/// each output stays non-increasing and the two outputs share no value.
std::pair<std::vector<int>, std::vector<int>>
strip_common_parts(const Partition& a, const Partition& b);

} // namespace symprod

#endif
