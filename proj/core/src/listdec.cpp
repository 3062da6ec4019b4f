#include "homds/listdec.hpp"

#include <algorithm>
#include <numeric>

namespace homds {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u64 checked_pow(u64 base, u32 e, u64 cap) {
    u64 v = 1;
    for (u32 i = 0; i < e; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

}  // namespace

Radius make_radius(std::int64_t num, std::int64_t den) {
    require(den > 0, Err::BadParams, "radius denominator must be positive");
    require(num >= 0 && num <= den, Err::BadParams, "radius must lie in [0, 1]");
    const std::int64_t g = std::gcd(num, den);
    return Radius{num / g, den / g};
}

Radius singleton_list_bound(int n, int k, int L) {
    require(1 <= k && k <= n, Err::BadParams, "need 1 <= k <= n");
    require(L >= 1, Err::BadParams, "list size L must be >= 1");
    return make_radius(static_cast<std::int64_t>(L) * (n - k),
                       static_cast<std::int64_t>(L + 1) * n);
}

u64 min_weight_sum(const Mat& g, int L, const Budget& budget) {
    const Field& f = g.field();
    const u32 k = g.rows();
    const u32 n = g.cols();
    const u64 q = f.order();
    require(L >= 1, Err::BadParams, "list size L must be >= 1");

    const u64 n_msgs = checked_pow(q, k, 1 << 16);
    require(n_msgs <= (1 << 16), Err::TooLarge, "q^k message enumeration refused");
    require(n_msgs > static_cast<u64>(L), Err::TooLarge,
            "fewer than L+1 messages exist at this q^k");
    const u64 n_centers = checked_pow(q, n, budget.max_center_enumeration);
    require(n_centers <= budget.max_center_enumeration, Err::TooLarge,
            "q^n center enumeration exceeds the budget");

    // all codewords (one per message, duplicates kept deliberately)
    std::vector<std::vector<Fe>> codewords;
    codewords.reserve(n_msgs);
    {
        std::vector<u64> msg(k, 0);
        for (u64 t = 0; t < n_msgs; ++t) {
            u64 v = t;
            std::vector<Fe> cw(n, 0);
            for (u32 i = 0; i < k; ++i) {
                const Fe mi = f.element_at(v % q);
                v /= q;
                if (mi == 0) continue;
                for (u32 j = 0; j < n; ++j) cw[j] = f.add(cw[j], f.mul(mi, g.at(i, j)));
            }
            codewords.push_back(std::move(cw));
        }
    }

    const u32 list = static_cast<u32>(L) + 1;
    u64 best = UINT64_MAX;
    std::vector<Fe> y(n, 0);
    std::vector<u32> smallest;
    smallest.reserve(list + 1);
    for (u64 t = 0; t < n_centers; ++t) {
        u64 v = t;
        for (u32 j = 0; j < n; ++j) {
            y[j] = f.element_at(v % q);
            v /= q;
        }
        smallest.clear();
        for (const auto& cw : codewords) {
            u32 w = 0;
            for (u32 j = 0; j < n; ++j)
                if (cw[j] != y[j]) ++w;
            auto pos = std::upper_bound(smallest.begin(), smallest.end(), w);
            if (smallest.size() < list) {
                smallest.insert(pos, w);
            } else if (pos != smallest.end()) {
                smallest.insert(pos, w);
                smallest.pop_back();
            }
        }
        u64 sum = 0;
        for (u32 w : smallest) sum += w;
        best = std::min(best, sum);
    }
    return best;
}

bool brute_force_avg_radius(const Mat& g, Radius rho, int L, bool strict, const Budget& budget) {
    const u64 w = min_weight_sum(g, L, budget);
    // bad subset exists when sum <= rho * n * (L+1); exact integer compare
    const unsigned __int128 lhs = static_cast<unsigned __int128>(w) * static_cast<u64>(rho.den);
    const unsigned __int128 rhs = static_cast<unsigned __int128>(static_cast<u64>(rho.num)) *
                                  g.cols() * static_cast<u64>(L + 1);
    const bool bad = strict ? (lhs < rhs) : (lhs <= rhs);
    return !bad;
}

bool is_ld_mds_bruteforce(const Mat& g, int L, const Budget& budget) {
    const int n = static_cast<int>(g.cols());
    const int k = static_cast<int>(g.rows());
    require(1 <= k && k <= n, Err::BadParams, "need 1 <= k <= n");
    for (int lp = 1; lp <= L; ++lp) {
        const u64 w = min_weight_sum(g, lp, budget);
        const Radius bound = singleton_list_bound(n, k, lp);
        // verdicts can only flip on the w/(n(L'+1)) grid up to the bound
        const std::int64_t grid_den = static_cast<std::int64_t>(n) * (lp + 1);
        for (std::int64_t t = 0; t * bound.den <= bound.num * grid_den; ++t) {
            if (w <= static_cast<u64>(t)) return false;  // avg <= t/(n(L'+1)) * n achieved
        }
    }
    return true;
}

}  // namespace homds
