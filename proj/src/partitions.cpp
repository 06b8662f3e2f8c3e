#include "symprod/partitions.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace symprod {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw InvalidInput("partition: no parts");
    long long sum = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InvalidInput("partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw InvalidInput("partition: parts must be non-increasing");
        sum += parts_[i];
    }
    if (sum > std::numeric_limits<int>::max())
        throw InvalidInput("partition: sum out of range");
    sum_ = static_cast<int>(sum);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& stack,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    // Largest admissible first part first gives reverse-lexicographic order.
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        stack.push_back(part);
        emit_partitions(remaining - part, part, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n <= 0)
        throw InvalidInput("enumerate_partitions: n must be positive");
    std::vector<Partition> out;
    std::vector<int> stack;
    emit_partitions(n, n, stack, out);
    return out;
}

Integer partition_count(long long n) {
    if (n <= 0)
        throw InvalidInput("partition_count: n must be positive");
    // Euler: p(k) = sum_{j>=1} (-1)^{j-1} [p(k - j(3j-1)/2) + p(k - j(3j+1)/2)].
    std::vector<Integer> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (long long k = 1; k <= n; ++k) {
        Integer acc = 0;
        for (long long j = 1;; ++j) {
            const long long g1 = j * (3 * j - 1) / 2;
            const long long g2 = j * (3 * j + 1) / 2;
            if (g1 > k)
                break;
            Integer term = p[static_cast<std::size_t>(k - g1)];
            if (g2 <= k)
                term += p[static_cast<std::size_t>(k - g2)];
            if (j % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[static_cast<std::size_t>(k)] = acc;
    }
    return p[static_cast<std::size_t>(n)];
}

bool is_good_partition(const std::vector<long long>& family, long long n) {
    if (family.empty())
        throw InvalidInput("is_good_partition: empty family");
    if (n <= 0)
        throw InvalidInput("is_good_partition: n must be positive");
    Integer sum = 0;
    for (long long k : family) {
        if (k <= 0)
            return false; // Hilb^k of a curve is empty for k <= 0
        sum += static_cast<long>(k);
    }
    return sum == static_cast<long>(n);
}

std::pair<std::vector<int>, std::vector<int>>
strip_common_parts(const Partition& a, const Partition& b) {
    std::vector<int> ra, rb;
    const auto& pa = a.parts();
    const auto& pb = b.parts();
    std::size_t i = 0, j = 0;
    // Both inputs are non-increasing; one merge pass removes equal parts
    // pairwise and keeps each remainder sorted.
    while (i < pa.size() && j < pb.size()) {
        if (pa[i] == pb[j]) {
            ++i;
            ++j;
        } else if (pa[i] > pb[j]) {
            ra.push_back(pa[i++]);
        } else {
            rb.push_back(pb[j++]);
        }
    }
    ra.insert(ra.end(), pa.begin() + static_cast<std::ptrdiff_t>(i), pa.end());
    rb.insert(rb.end(), pb.begin() + static_cast<std::ptrdiff_t>(j), pb.end());
    return {std::move(ra), std::move(rb)};
}

} // namespace symprod
