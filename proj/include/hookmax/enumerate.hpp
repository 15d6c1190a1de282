#pragma once

#include <vector>

#include "hookmax/bigint.hpp"
#include "hookmax/partition.hpp"

namespace hookmax {

/* Exhaustive generator of the partitions of n, each yielded exactly once in
 * lexicographically decreasing part order: (4), (3,1), (2,2), (2,1,1),
 * (1,1,1,1). State is a single part buffer, O(n) memory. A max_part bound
 * restricts the stream to partitions with all parts <= max_part, which is
 * how the parallel maximization shards the search space. */
class PartitionStream {
public:
    explicit PartitionStream(int n);
    PartitionStream(int n, int max_part);

    /// Next partition's parts, or nullptr when exhausted.
    /// The pointee is only valid until the following next() call.
    const std::vector<int>* next();

private:
    void fill_greedy(int total, int cap);

    std::vector<int> parts_;
    bool started_ = false;
    bool done_ = false;
};

/// Applies fn to the raw part list of every partition of n, in stream order.
template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
    PartitionStream stream(n);
    while (const std::vector<int>* p = stream.next()) fn(*p);
}

/// p(n) by counting the stream.
long long count_partitions(int n);

struct BruteMaxResult {
    int value = 0;       // max k-hook count over all partitions of n
    Partition witness;   // first partition in stream order attaining it
};

/* Exhaustive maximum of the k-hook count over partitions of n. With
 * threads > 1 the stream is sharded by largest part and shards are scanned
 * concurrently; the combine step preserves the sequential witness, so the
 * result is identical to a single-threaded scan. */
BruteMaxResult max_hook_count_brute(int n, int k, int threads = 1);

/// Sum of the k-hook count over all partitions of n.
long long hook_count_sum(int n, int k);

/// Sum of x^(k-hook count) over all partitions of n, exact.
BigInt hook_count_weighted_sum(int n, int k, long long x);

} // namespace hookmax
