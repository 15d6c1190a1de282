#pragma once

#include "hookmax/partition.hpp"
#include "hookmax/transforms.hpp"

namespace hookmax {

/* Index of a staircase family member: m parts of width k, split as
 * m = blocks()*k + top() with 0 <= top() < k. */
struct StaircaseIndex {
    int m = 0;
    int k = 1;
    StaircaseIndex(int m_, int k_);  // validates m >= 0, k >= 1
    int blocks() const noexcept { return m / k; }
    int top() const noexcept { return m % k; }
};

/* The m-part staircase of width k: reading upward, blocks of k equal rows
 * of lengths k, 2k, 3k, ..., topped by m mod k rows one block wider. It is
 * the minimum-weight partition with m k-hooks and carries exactly one
 * k-hook per row. */
Partition nearly_triangular(int m, int k);

/// Weight of the m-part width-k staircase:
/// m(floor(m/k)+1)k - C(floor(m/k)+1, 2) k^2.
long long triangular_weight(int m, int k);

/// Same weight from the split m = jk + r with 0 <= r < k:
/// C(j+1,2) k^2 + r(j+1)k. Throws std::invalid_argument for r out of range.
long long triangular_weight_closed(long long j, int r, int k);

/// Maximum k-hook count over partitions of n: the unique m with
/// triangular_weight(m,k) <= n < triangular_weight(m+1,k).
int max_hook_count(long long n, int k);

/// Maximum number of distinct parts over partitions of n; equals
/// max_hook_count(n, 1).
int max_distinct_parts(long long n);

/* A partition of n attaining the maximum k-hook count. For k = 1 this is
 * the staircase (m, m-1, ..., 2) padded with 1s; for k > 1 it starts from
 * the width-k staircase of matching hook count and applies grow_one until
 * the weight reaches n. A non-null trace receives the growth steps. */
Partition max_hook_witness(long long n, int k, TransformTrace* trace = nullptr);

} // namespace hookmax
