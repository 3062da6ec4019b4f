#ifndef HOMDS_SETS_HPP
#define HOMDS_SETS_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "homds/errors.hpp"

namespace homds {

/// Subset of column indices {0, ..., n-1} as a bitmask. Ground sets are
/// capped at 30 elements, plenty for desk-scale scans.
using ColSet = std::uint32_t;

constexpr int kMaxGroundSet = 30;

inline int set_size(ColSet s) { return std::popcount(s); }

inline ColSet full_set(int n) { return n == 0 ? 0 : (ColSet{1} << n) - 1; }

/// 0-based sorted indices -> bitmask, bounds-checked against n.
ColSet set_from_indices(const std::vector<std::uint32_t>& idx, int n);

std::vector<std::uint32_t> set_to_indices(ColSet s);

/// Enumerates set partitions of {0..l-1} through restricted-growth strings.
/// The callback receives the block-id of each element and the block count;
/// returning false stops the scan early. Returns false iff stopped early.
template <typename Fn>
bool for_each_partition(int l, Fn&& fn) {
    std::vector<std::uint8_t> rgs(static_cast<std::size_t>(l), 0);
    std::vector<std::uint8_t> maxv(static_cast<std::size_t>(l), 0);
    for (;;) {
        std::uint8_t blocks = 0;
        for (int i = 0; i < l; ++i) blocks = std::max<std::uint8_t>(blocks, rgs[i]);
        if (!fn(rgs, static_cast<int>(blocks) + 1)) return false;
        int i = l - 1;
        while (i > 0) {
            if (rgs[i] <= maxv[i - 1]) break;
            --i;
        }
        if (i == 0) return true;
        ++rgs[i];
        maxv[i] = std::max(maxv[i - 1], rgs[i]);
        for (int j = i + 1; j < l; ++j) {
            rgs[j] = 0;
            maxv[j] = maxv[i];
        }
    }
}

namespace detail {
template <typename Fn>
bool compositions_rec(int total, int parts, std::vector<int>& acc, Fn& fn) {
    if (parts == 1) {
        acc.push_back(total);
        const bool keep_going = fn(const_cast<const std::vector<int>&>(acc));
        acc.pop_back();
        return keep_going;
    }
    for (int v = 0; v <= total; ++v) {
        acc.push_back(v);
        if (!compositions_rec(total - v, parts - 1, acc, fn)) {
            acc.pop_back();
            return false;
        }
        acc.pop_back();
    }
    return true;
}
}  // namespace detail

/// Enumerates weak compositions of total into parts nonnegative integers, in
/// ascending lexicographic order; early exit as in for_each_partition.
template <typename Fn>
bool for_each_composition(int total, int parts, Fn&& fn) {
    if (parts == 0) {
        std::vector<int> empty;
        return total == 0 ? fn(const_cast<const std::vector<int>&>(empty)) : true;
    }
    std::vector<int> acc;
    return detail::compositions_rec(total, parts, acc, fn);
}

}  // namespace homds

#endif
