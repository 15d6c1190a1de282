#include "hookmax/triangular.hpp"

#include <stdexcept>

namespace hookmax {

StaircaseIndex::StaircaseIndex(int m_, int k_) : m(m_), k(k_) {
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
}

Partition nearly_triangular(int m, int k) {
    StaircaseIndex index(m, k);
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < index.top(); ++i)
        parts.push_back((index.blocks() + 1) * k);
    for (int b = index.blocks(); b >= 1; --b)
        for (int i = 0; i < k; ++i) parts.push_back(b * k);
    return Partition::unchecked(std::move(parts));
}

long long triangular_weight(int m, int k) {
    StaircaseIndex index(m, k);
    long long blocks = index.blocks();
    return static_cast<long long>(m) * (blocks + 1) * k -
           (blocks + 1) * blocks / 2 * k * k;
}

long long triangular_weight_closed(long long j, int r, int k) {
    if (j < 0) throw std::invalid_argument("j must be >= 0");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (r < 0 || r >= k)
        throw std::invalid_argument("residue r must satisfy 0 <= r < k");
    return (j + 1) * j / 2 * k * k + static_cast<long long>(r) * (j + 1) * k;
}

int max_hook_count(long long n, int k) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    // The staircase weights grow quadratically, so walking m upward is
    // O(sqrt(n)) exact steps; no floating-point inversion.
    int m = 0;
    while (triangular_weight(m + 1, k) <= n) ++m;
    return m;
}

int max_distinct_parts(long long n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    // C(m+1,2) <= n <= C(m+2,2) - 1
    int m = 0;
    while (static_cast<long long>(m + 2) * (m + 1) / 2 <= n) ++m;
    return m;
}

Partition max_hook_witness(long long n, int k, TransformTrace* trace) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (trace) {
        trace->k = k;
        trace->steps.clear();
    }
    if (k == 1) {
        int m = max_distinct_parts(n);
        std::vector<int> parts;
        for (int v = m; v >= 2; --v) parts.push_back(v);
        long long staircase = static_cast<long long>(m + 1) * m / 2;
        if (m >= 1)
            for (long long i = 0; i < n - staircase + 1; ++i) parts.push_back(1);
        return Partition::unchecked(std::move(parts));
    }
    int m = max_hook_count(n, k);
    Partition cur = nearly_triangular(m, k);
    if (trace) {
        TraceStep start;
        start.label = "start T_" + std::to_string(m) + "^(" + std::to_string(k) + ")";
        start.result = cur;
        start.weight = cur.weight();
        start.hook_count = hook_count(cur, k);
        trace->steps.push_back(std::move(start));
    }
    long long steps = n - triangular_weight(m, k);
    for (long long s = 0; s < steps; ++s) {
        TraceStep grow;
        grow.label = "grow_" + std::to_string(s + 1);
        cur = grow_one(cur, k, trace ? &grow : nullptr);
        if (trace) trace->steps.push_back(std::move(grow));
    }
    return cur;
}

} // namespace hookmax
