#pragma once

#include <limits>
#include <vector>

#include "gecon/graph.hpp"

namespace gecon {

inline constexpr int kDefaultPartitionCap = 10;

/// Calls fn(block_of) for every partition of {0..n-1} with at least two
/// blocks, where block_of[v] is the block index of v. Partitions are visited
/// in restricted-growth-string order.
template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
    std::vector<int> rgs(n, 0);   // rgs[v] <= 1 + max(rgs[0..v-1])
    std::vector<int> maxv(n, 0);  // maxv[v] = max of rgs[0..v]
    while (true) {
        if (maxv[n - 1] >= 1) fn(rgs);
        int v = n - 1;
        while (v > 0 && rgs[v] == maxv[v - 1] + 1) --v;
        if (v == 0) return;
        ++rgs[v];
        maxv[v] = std::max(rgs[v], maxv[v - 1]);
        for (int w = v + 1; w < n; ++w) {
            rgs[w] = 0;
            maxv[w] = maxv[v];
        }
    }
}

/// Spanning-tree packing number by the partition criterion: the minimum over
/// all partitions P with |P| >= 2 of floor(crossing(P) / (|P|-1)). Crossing
/// edges are those joining distinct blocks. Exhaustive, so only sensible for
/// small n (Bell(10) is about 1.16e5).
inline int nwt_partition_bound(const Graph& g, int max_n = kDefaultPartitionCap) {
    const int n = g.order();
    if (n > max_n) throw UnsupportedSizeError("nwt_partition_bound cap exceeded");
    if (n <= 1) return 0;
    const EdgeList edges = g.edges();
    int best = std::numeric_limits<int>::max();
    for_each_partition(n, [&](const std::vector<int>& block_of) {
        int blocks = 0;
        for (int v = 0; v < n; ++v) blocks = std::max(blocks, block_of[v] + 1);
        int crossing = 0;
        for (const Edge& e : edges) crossing += block_of[e.u] != block_of[e.v];
        best = std::min(best, crossing / (blocks - 1));
    });
    return best;
}

}  // namespace gecon
