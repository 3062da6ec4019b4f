#ifndef HOMDS_LISTDEC_HPP
#define HOMDS_LISTDEC_HPP

#include <cstdint>
#include <string>

#include "homds/codes.hpp"
#include "homds/matrix.hpp"

namespace homds {

/// Exact rational radius in [0, 1], kept reduced.
struct Radius {
    std::int64_t num = 0;
    std::int64_t den = 1;

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

Radius make_radius(std::int64_t num, std::int64_t den);

/// L/(L+1) * (n-k)/n, the list-decoding Singleton bound.
Radius singleton_list_bound(int n, int k, int L);

/// Smallest over all centers y of the sum of distances from y to its L+1
/// closest codewords (distinct messages). The whole average-radius story at
/// a given list size reduces to this one integer.
std::uint64_t min_weight_sum(const Mat& g, int L, const Budget& budget = {});

/// Definitional average-radius check by exhaustive enumeration: no L+1
/// codewords and center with average distance <= rho*n (or < when strict).
bool brute_force_avg_radius(const Mat& g, Radius rho, int L, bool strict,
                            const Budget& budget = {});

/// Meets the list-decoding Singleton bound for every list size <= L,
/// checked on the w/(n(L'+1)) radius grid with the non-strict convention.
bool is_ld_mds_bruteforce(const Mat& g, int L, const Budget& budget = {});

}  // namespace homds

#endif
