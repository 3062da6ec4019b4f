#include "homds/patterns.hpp"

#include <algorithm>
#include <set>

namespace homds {

namespace {

ColSet intersect_selected(const std::vector<ColSet>& sets, std::uint32_t mask, ColSet universe) {
    ColSet acc = universe;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) acc &= sets[i];
    return acc;
}

int min_sigma_selected(const std::vector<ConfigPair>& pairs, std::uint32_t mask) {
    int m = -1;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) m = (m < 0) ? pairs[i].sigma : std::min(m, pairs[i].sigma);
    return m < 0 ? 0 : m;
}

}  // namespace

void ZeroPattern::validate() const {
    require(n >= 0 && n <= kMaxGroundSet, Err::TooLarge, "pattern ground set capped at 30");
    require(k >= 1 && k <= 16, Err::TooLarge, "pattern row count capped at 16");
    require(static_cast<int>(sets.size()) == k, Err::DimensionMismatch,
            "zero pattern needs exactly k row sets");
    for (ColSet s : sets)
        require((s & ~full_set(n)) == 0, Err::IndexOutOfRange, "pattern set exceeds [n]");
}

int ZeroPattern::order() const {
    std::set<ColSet> distinct;
    for (ColSet s : sets)
        if (s != 0) distinct.insert(s);
    return static_cast<int>(distinct.size());
}

void SetFamily::validate() const {
    require(n >= 0 && n <= kMaxGroundSet, Err::TooLarge, "family ground set capped at 30");
    require(!sets.empty() && sets.size() <= 12, Err::TooLarge, "family order must lie in [1, 12]");
    for (ColSet s : sets) {
        require((s & ~full_set(n)) == 0, Err::IndexOutOfRange, "family set exceeds [n]");
        require(set_size(s) <= k, Err::BadParams, "family sets must have size <= k");
    }
}

void Config::validate() const {
    require(k >= 0 && b >= 0, Err::BadParams, "configuration needs k, b >= 0");
    require(!pairs.empty() && pairs.size() <= 12, Err::TooLarge,
            "configuration order must lie in [1, 12]");
    for (const auto& pr : pairs)
        require(pr.sigma >= 0 && pr.sigma <= b, Err::BadParams, "sigma out of [0, b]");
}

bool Config::proper() const {
    for (const auto& pr : pairs)
        if (pr.sigma + set_size(pr.cols) > k) return false;
    return true;
}

int Config::weight() const {
    int w = 0;
    for (const auto& pr : pairs) w += pr.sigma + set_size(pr.cols);
    return w;
}

bool is_generic_zero_pattern(const ZeroPattern& p) {
    p.validate();
    const auto k = static_cast<std::uint32_t>(p.k);
    const ColSet universe = full_set(p.n);
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        const ColSet inter = intersect_selected(p.sets, mask, universe);
        if (set_size(inter) > p.k - std::popcount(mask)) return false;
    }
    return true;
}

bool partition_bound(const SetFamily& f, int d) {
    f.validate();
    const int l = static_cast<int>(f.sets.size());
    const ColSet universe = full_set(f.n);
    return for_each_partition(l, [&](const std::vector<std::uint8_t>& rgs, int s) {
        int total = 0;
        for (int block = 0; block < s; ++block) {
            ColSet inter = universe;
            for (int i = 0; i < l; ++i)
                if (rgs[static_cast<std::size_t>(i)] == block) inter &= f.sets[static_cast<std::size_t>(i)];
            total += set_size(inter);
        }
        return total <= (s - 1) * f.k + d;
    });
}

bool has_null_intersection(const SetFamily& f) { return partition_bound(f, 0); }

int gid_formula_unchecked(const Config& c) {
    const int l = static_cast<int>(c.pairs.size());
    int best = 0;
    for_each_partition(l, [&](const std::vector<std::uint8_t>& rgs, int s) {
        int value = -c.k * (s - 1);
        for (int block = 0; block < s; ++block) {
            int sig = -1;
            ColSet inter = ~ColSet{0};
            for (int i = 0; i < l; ++i) {
                if (rgs[static_cast<std::size_t>(i)] != block) continue;
                const auto& pr = c.pairs[static_cast<std::size_t>(i)];
                sig = sig < 0 ? pr.sigma : std::min(sig, pr.sigma);
                inter &= pr.cols;
            }
            value += sig + set_size(inter);
        }
        best = std::max(best, value);
        return true;
    });
    return best;
}

int gid(const Config& c) {
    c.validate();
    require(c.proper(), Err::ImproperConfig, "gid is defined on proper configurations");
    return gid_formula_unchecked(c);
}

std::optional<std::vector<int>> find_delta_certificate(const SetFamily& f, int d) {
    f.validate();
    require(d >= 0 && d <= f.k, Err::BadParams, "d must lie in [0, k]");
    const int l = static_cast<int>(f.sets.size());
    const ColSet universe = full_set(f.n);
    std::optional<std::vector<int>> found;
    for_each_composition(f.k - d, l, [&](const std::vector<int>& delta) {
        for (std::uint32_t mask = 1; mask < (1u << l); ++mask) {
            int dsum = 0;
            for (int i = 0; i < l; ++i)
                if (mask & (1u << i)) dsum += delta[static_cast<std::size_t>(i)];
            const ColSet inter = intersect_selected(f.sets, mask, universe);
            if (set_size(inter) > f.k - dsum) return true;  // next composition
        }
        found = delta;
        return false;
    });
    return found;
}

std::optional<std::vector<int>> config_delta_certificate(const Config& c, int total) {
    const int l = static_cast<int>(c.pairs.size());
    std::optional<std::vector<int>> found;
    for_each_composition(total, l, [&](const std::vector<int>& delta) {
        for (std::uint32_t mask = 1; mask < (1u << l); ++mask) {
            int dsum = 0;
            ColSet inter = ~ColSet{0};
            for (int i = 0; i < l; ++i) {
                if (mask & (1u << i)) {
                    dsum += delta[static_cast<std::size_t>(i)];
                    inter &= c.pairs[static_cast<std::size_t>(i)].cols;
                }
            }
            const int sig = min_sigma_selected(c.pairs, mask);
            if (sig + set_size(inter) > c.k - dsum) return true;
        }
        found = delta;
        return false;
    });
    return found;
}

bool is_null_configuration(const NullConfig& nc) {
    const Config& c = nc.config;
    c.validate();
    const int l = static_cast<int>(c.pairs.size());
    if (static_cast<int>(nc.delta.size()) != l) return false;
    for (int d : nc.delta)
        if (d < 0) return false;

    if (c.weight() != (l - 1) * c.k) return false;

    int dsum = 0;
    for (int d : nc.delta) dsum += d;
    if (dsum != c.k) return false;

    for (std::uint32_t mask = 1; mask < (1u << l); ++mask) {
        int dm = 0;
        ColSet inter = ~ColSet{0};
        for (int i = 0; i < l; ++i) {
            if (mask & (1u << i)) {
                dm += nc.delta[static_cast<std::size_t>(i)];
                inter &= c.pairs[static_cast<std::size_t>(i)].cols;
            }
        }
        if (min_sigma_selected(c.pairs, mask) + set_size(inter) > c.k - dm) return false;
    }

    for (int i = 0; i < l; ++i) {
        const auto& pr = c.pairs[static_cast<std::size_t>(i)];
        if (pr.sigma + set_size(pr.cols) + nc.delta[static_cast<std::size_t>(i)] != c.k) return false;
    }
    return true;
}

bool is_maximal_configuration(const Config& c) {
    c.validate();
    if (!c.proper()) return false;
    const int l = static_cast<int>(c.pairs.size());
    if (c.weight() != (l - 1) * c.k) return false;

    const bool bound_ok = for_each_partition(l, [&](const std::vector<std::uint8_t>& rgs, int s) {
        int total = -(s - 1) * c.k;
        for (int block = 0; block < s; ++block) {
            int sig = -1;
            ColSet inter = ~ColSet{0};
            for (int i = 0; i < l; ++i) {
                if (rgs[static_cast<std::size_t>(i)] != block) continue;
                sig = sig < 0 ? c.pairs[static_cast<std::size_t>(i)].sigma
                              : std::min(sig, c.pairs[static_cast<std::size_t>(i)].sigma);
                inter &= c.pairs[static_cast<std::size_t>(i)].cols;
            }
            total += sig + set_size(inter);
        }
        return total <= 0;
    });
    if (!bound_ok) return false;

    return config_delta_certificate(c, c.k).has_value();
}

Config minimal_contraction(const Config& c) {
    const int d = gid(c);
    require(d >= 1, Err::BadParams, "contraction requires gid >= 1");
    const int l = static_cast<int>(c.pairs.size());

    int min_sigma = c.pairs[0].sigma;
    for (const auto& pr : c.pairs) min_sigma = std::min(min_sigma, pr.sigma);

    if (min_sigma >= 1) {
        // Lowering the global-minimum sigma lowers every partition value by
        // exactly one, hence the maximum as well.
        Config out = c;
        for (int i = 0; i < l; ++i) {
            if (out.pairs[static_cast<std::size_t>(i)].sigma == min_sigma) {
                out.pairs[static_cast<std::size_t>(i)].sigma -= 1;
                break;
            }
        }
        return out;
    }

    for (int i = 0; i < l; ++i) {
        if (c.pairs[static_cast<std::size_t>(i)].sigma != 0) continue;
        for (auto j : set_to_indices(c.pairs[static_cast<std::size_t>(i)].cols)) {
            Config out = c;
            out.pairs[static_cast<std::size_t>(i)].cols &= ~(ColSet{1} << j);
            if (gid_formula_unchecked(out) == d - 1) return out;
        }
        break;  // a valid removal always exists within the first sigma = 0 set
    }
    raise(Err::NoMutationExists, "no minimal contraction lowered gid (precondition logic bug)");
}

Config minimal_expansion(const Config& c, int n) {
    require(n >= 0 && n <= kMaxGroundSet, Err::TooLarge, "ground set capped at 30");
    const int d = gid(c);
    require(d == 0, Err::BadParams, "expansion requires gid = 0");
    const int l = static_cast<int>(c.pairs.size());
    require(c.weight() < (l - 1) * c.k, Err::BadParams, "expansion requires weight < (l-1)k");

    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < n; ++j) {
            const ColSet bit = ColSet{1} << j;
            if (c.pairs[static_cast<std::size_t>(i)].cols & bit) continue;
            Config out = c;
            out.pairs[static_cast<std::size_t>(i)].cols |= bit;
            if (gid_formula_unchecked(out) == 0) return out;
        }
    }
    raise(Err::NoMutationExists, "no minimal expansion kept gid at zero");
}

namespace {

bool complete_rows(ZeroPattern& p, int row) {
    if (row == p.k) return true;
    const int target = p.k - 1;
    if (set_size(p.sets[static_cast<std::size_t>(row)]) == target)
        return complete_rows(p, row + 1);
    for (int j = 0; j < p.n; ++j) {
        const ColSet bit = ColSet{1} << j;
        if (p.sets[static_cast<std::size_t>(row)] & bit) continue;
        p.sets[static_cast<std::size_t>(row)] |= bit;
        if (is_generic_zero_pattern(p) && complete_rows(p, row)) return true;
        p.sets[static_cast<std::size_t>(row)] &= ~bit;
    }
    return false;
}

}  // namespace

ZeroPattern complete_pattern(const ZeroPattern& p) {
    require(is_generic_zero_pattern(p), Err::NotGeneric, "pattern violates the Hall-type condition");
    require(p.k >= 1, Err::BadParams, "completion needs k >= 1");
    require(p.n >= p.k - 1, Err::CompletionFailed, "n too small for rows of size k-1");
    ZeroPattern out = p;
    if (!complete_rows(out, 0))
        raise(Err::CompletionFailed, "backtracking exhausted; n too small for this pattern");
    return out;
}

}  // namespace homds
