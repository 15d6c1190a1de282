#include "hookmax/enumerate.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "hookmax/parallel.hpp"

namespace hookmax {

PartitionStream::PartitionStream(int n) : PartitionStream(n, n) {}

PartitionStream::PartitionStream(int n, int max_part) {
    if (n < 0) throw std::invalid_argument("partition weight must be >= 0");
    if (max_part < 0) throw std::invalid_argument("max_part must be >= 0");
    if (n == 0) return;  // the empty partition is the single yield
    if (max_part == 0) {
        done_ = true;  // no partition of n > 0 has all parts <= 0
        return;
    }
    fill_greedy(n, max_part);
}

void PartitionStream::fill_greedy(int total, int cap) {
    while (total >= cap) {
        parts_.push_back(cap);
        total -= cap;
    }
    if (total > 0) parts_.push_back(total);
}

const std::vector<int>* PartitionStream::next() {
    if (done_) return nullptr;
    if (!started_) {
        started_ = true;
        return &parts_;
    }
    // Drop trailing 1s, take one unit off the rightmost part > 1, and refill
    // the freed weight greedily with parts no larger than the reduced value.
    int idx = static_cast<int>(parts_.size()) - 1;
    while (idx >= 0 && parts_[static_cast<std::size_t>(idx)] == 1) --idx;
    if (idx < 0) {
        done_ = true;
        return nullptr;
    }
    int freed = static_cast<int>(parts_.size()) - idx;  // trailing 1s plus the unit
    int reduced = parts_[static_cast<std::size_t>(idx)] - 1;
    parts_.resize(static_cast<std::size_t>(idx) + 1);
    parts_[static_cast<std::size_t>(idx)] = reduced;
    fill_greedy(freed, reduced);
    return &parts_;
}

long long count_partitions(int n) {
    long long count = 0;
    for_each_partition(n, [&](const std::vector<int>&) { ++count; });
    return count;
}

namespace {

void require_nk(int n, int k) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
}

// Scans one shard (partitions of n with first part exactly `first`) keeping
// the first maximizer in stream order.
BruteMaxResult scan_shard(int n, int k, int first) {
    BruteMaxResult best;
    best.value = -1;
    std::vector<int> buf;
    std::vector<int> conj;
    buf.push_back(first);
    PartitionStream rest(n - first, first);
    while (const std::vector<int>* tail = rest.next()) {
        buf.resize(1);
        buf.insert(buf.end(), tail->begin(), tail->end());
        detail::conjugate_into(buf, conj);
        int a = detail::hook_count_raw(buf, conj, k);
        if (a > best.value) {
            best.value = a;
            best.witness = Partition::unchecked(buf);
        }
    }
    return best;
}

} // namespace

BruteMaxResult max_hook_count_brute(int n, int k, int threads) {
    require_nk(n, k);
    if (n == 0) return BruteMaxResult{0, Partition{}};
    if (threads <= 1) {
        BruteMaxResult best;
        best.value = -1;
        std::vector<int> conj;
        PartitionStream stream(n);
        while (const std::vector<int>* p = stream.next()) {
            detail::conjugate_into(*p, conj);
            int a = detail::hook_count_raw(*p, conj, k);
            if (a > best.value) {
                best.value = a;
                best.witness = Partition::unchecked(*p);
            }
        }
        return best;
    }
    // Shard by largest part: chunk c covers first part n - c, so chunk order
    // equals stream order and the sequential witness survives the combine.
    std::vector<BruteMaxResult> shard(static_cast<std::size_t>(n));
    parallel_for(n, threads, [&](int c) {
        shard[static_cast<std::size_t>(c)] = scan_shard(n, k, n - c);
    });
    BruteMaxResult best;
    best.value = -1;
    for (const BruteMaxResult& r : shard) {
        if (r.value > best.value) best = r;
    }
    return best;
}

long long hook_count_sum(int n, int k) {
    require_nk(n, k);
    long long sum = 0;
    std::vector<int> conj;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        detail::conjugate_into(parts, conj);
        sum += detail::hook_count_raw(parts, conj, k);
    });
    return sum;
}

BigInt hook_count_weighted_sum(int n, int k, long long x) {
    require_nk(n, k);
    BigInt sum = 0;
    std::vector<BigInt> powers{BigInt(1)};  // powers[a] = x^a
    std::vector<int> conj;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        detail::conjugate_into(parts, conj);
        int a = detail::hook_count_raw(parts, conj, k);
        while (static_cast<int>(powers.size()) <= a)
            powers.push_back(powers.back() * x);
        sum += powers[static_cast<std::size_t>(a)];
    });
    return sum;
}

} // namespace hookmax
