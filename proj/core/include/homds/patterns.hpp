#ifndef HOMDS_PATTERNS_HPP
#define HOMDS_PATTERNS_HPP

#include <optional>
#include <vector>

#include "homds/sets.hpp"

namespace homds {

/// k subsets of [n] prescribing generator-row zeros. List order matters; the
/// number of distinct nonempty sets is the pattern's order.
struct ZeroPattern {
    int n = 0;
    int k = 0;
    std::vector<ColSet> sets;  // one per row, size k

    void validate() const;
    int order() const;
};

/// An ordered family A_1..A_l of subsets of [n], each of size at most k.
struct SetFamily {
    int n = 0;
    int k = 0;
    std::vector<ColSet> sets;

    void validate() const;
};

struct ConfigPair {
    int sigma = 0;
    ColSet cols = 0;
};

/// Order-l configuration (sigma_i, A_i) with 0 <= sigma_i <= b.
struct Config {
    int k = 0;
    int b = 0;
    std::vector<ConfigPair> pairs;

    void validate() const;
    bool proper() const;  // sigma_i + |A_i| <= k for all i
    int weight() const;   // sum sigma_i + |A_i|
};

/// Config plus dual weights delta_i.
struct NullConfig {
    Config config;
    std::vector<int> delta;
};

/// Hall-type condition: |intersection over I of S_i| <= k - |I| for every
/// nonempty I.
bool is_generic_zero_pattern(const ZeroPattern& p);

/// Partition inequality sum_i |A_{P_i}| <= (s-1)k over all partitions.
bool has_null_intersection(const SetFamily& f);

/// Relaxed partition bound with slack d (sum <= (s-1)k + d).
bool partition_bound(const SetFamily& f, int d);

/// Generic intersection dimension of a proper configuration:
/// max over partitions of [-k(s-1) + sum_i (sigma_{P_i} + |A_{P_i}|)].
int gid(const Config& c);

/// Same formula without the properness gate; only meaningful as an upper
/// bound probe during mutation scans.
int gid_formula_unchecked(const Config& c);

/// First (lexicographically) delta >= 0 with sum = k - d and
/// |A_J| <= k - sum_{j in J} delta_j for all nonempty J; nullopt if none.
std::optional<std::vector<int>> find_delta_certificate(const SetFamily& f, int d);

/// Delta certificate for a configuration with sum(delta) = total and
/// sigma_J + |A_J| <= k - sum_{j in J} delta_j.
std::optional<std::vector<int>> config_delta_certificate(const Config& c, int total);

bool is_null_configuration(const NullConfig& nc);

bool is_maximal_configuration(const Config& c);

/// One-unit contraction with gid lowered by exactly one. Decrements a
/// minimal sigma when all are positive, otherwise removes a necessary
/// element from the first sigma = 0 set (lowest index, lowest element).
Config minimal_contraction(const Config& c);

/// One-unit expansion keeping gid at zero; scans (i, j) pairs in ascending
/// order. Ground set size n bounds the candidate elements.
Config minimal_expansion(const Config& c, int n);

/// Greedy completion (with backtracking) to a generic pattern with every
/// row of size k-1; supersets row-wise, so attainment transfers back.
ZeroPattern complete_pattern(const ZeroPattern& p);

}  // namespace homds

#endif
