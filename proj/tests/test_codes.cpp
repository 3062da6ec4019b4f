#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homds/codes.hpp"
#include "homds/rng.hpp"

using namespace homds;

namespace {

EvalPoints pts1(const std::vector<Fe>& xs) {
    EvalPoints p;
    p.r = 1;
    for (Fe x : xs) p.pts.push_back({x});
    return p;
}

ZeroPattern zp(int n, int k, std::vector<std::vector<std::uint32_t>> sets0) {
    ZeroPattern p;
    p.n = n;
    p.k = k;
    for (auto& s : sets0) p.sets.push_back(set_from_indices(s, n));
    return p;
}

Mat rs_matrix(const Field& f, std::uint32_t k, const std::vector<Fe>& xs) {
    CodeSpec spec;
    spec.family = Family::ReedSolomon;
    spec.k = k;
    spec.field = f;
    return generator(spec, pts1(xs));
}

// Brute-force attainment oracle: search all tuples (u_1..u_k) of message
// vectors with u_i * G|_{S_i} = 0 and the u_i independent. Exponential and
// entirely separate from the transversal route.
bool attains_bruteforce(const Mat& g, const ZeroPattern& p) {
    const Field& f = g.field();
    const std::uint32_t k = g.rows();
    const std::uint64_t q = f.order();
    std::uint64_t space = 1;
    for (std::uint32_t i = 0; i < k; ++i) space *= q;

    std::vector<std::vector<Fe>> chosen;
    std::function<bool(std::uint32_t)> rec = [&](std::uint32_t row) -> bool {
        if (row == k) return true;
        for (std::uint64_t v = 0; v < space; ++v) {
            std::vector<Fe> u(k);
            std::uint64_t t = v;
            for (std::uint32_t i = 0; i < k; ++i) {
                u[i] = f.element_at(t % q);
                t /= q;
            }
            // u must annihilate the prescribed columns
            bool zeros = true;
            for (auto j : set_to_indices(p.sets[row])) {
                Fe acc = 0;
                for (std::uint32_t i = 0; i < k; ++i) acc = f.add(acc, f.mul(u[i], g.at(i, j)));
                if (acc != 0) zeros = false;
            }
            if (!zeros) continue;
            chosen.push_back(u);
            Mat m(f, static_cast<std::uint32_t>(chosen.size()), k);
            for (std::uint32_t a = 0; a < chosen.size(); ++a)
                for (std::uint32_t b = 0; b < k; ++b) m.set(a, b, chosen[a][b]);
            if (rank_of(m) == chosen.size() && rec(row + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("generator families") {
    const Field f5 = Field::make(5, 1);
    const Mat rs = rs_matrix(f5, 2, {0, 1, 2});
    CHECK(rs.equals(Mat::from_rows(f5, {{1, 1, 1}, {0, 1, 2}})));

    CodeSpec mono;
    mono.family = Family::Monomial;
    mono.k = 2;
    mono.field = f5;
    mono.exponents = {0, 2};
    const Mat mg = generator(mono, pts1({2, 3}));
    CHECK(mg.equals(Mat::from_rows(f5, {{1, 1}, {4, 4}})));

    // Gabidulin k=2 over GF(4), q=2, points 1, w: rows x, x^2
    const Field f4 = Field::make(2, 2);
    const Fe w = f4.from_coeffs(std::vector<std::uint64_t>{0, 1});
    CodeSpec gab;
    gab.family = Family::Gabidulin;
    gab.k = 2;
    gab.field = f4;
    gab.frobenius_q = 2;
    const Mat gg = generator(gab, pts1({f4.one(), w}));
    CHECK(gg.at(0, 0) == f4.one());
    CHECK(gg.at(0, 1) == w);
    CHECK(gg.at(1, 0) == f4.one());
    CHECK(gg.at(1, 1) == f4.mul(w, w));

    CHECK_THROWS_AS(generator(mono, pts1({2, 2})), Error);  // duplicate points
}

TEST_CASE("linearized RS uses the gamma substitution with alpha scaling") {
    const Field f9 = Field::make(3, 2);
    CodeSpec lrs;
    lrs.family = Family::LinearizedRS;
    lrs.k = 2;
    lrs.field = f9;
    lrs.frobenius_q = 3;

    EvalPoints pts;
    pts.r = 2;
    // points (alpha, beta) with distinct gamma = beta / alpha^{q-1}
    const Fe a1 = f9.element_at(1), b1 = f9.element_at(2);
    const Fe a2 = f9.element_at(3), b2 = f9.element_at(5);
    pts.pts = {{a1, b1}, {a2, b2}};
    const Mat g = generator(lrs, pts);
    // row 1 = alpha_j, row 2 = alpha_j * gamma_j = beta_j / alpha_j^{q-2}
    CHECK(g.at(0, 0) == a1);
    CHECK(g.at(0, 1) == a2);
    const Fe gamma1 = f9.div(b1, f9.pow(a1, 2));
    CHECK(g.at(1, 0) == f9.mul(a1, gamma1));

    // alpha = 0 is rejected
    EvalPoints badpts;
    badpts.r = 2;
    badpts.pts = {{0, b1}, {a2, b2}};
    CHECK_THROWS_AS(generator(lrs, badpts), Error);

    // shared gamma is rejected: (a, b) and (a * t, b * t^{q-1}) collide
    const Fe t = f9.element_at(4);
    EvalPoints clash;
    clash.r = 2;
    clash.pts = {{a1, b1}, {f9.mul(a1, t), f9.mul(b1, f9.pow(t, 2))}};
    CHECK_THROWS_AS(generator(lrs, clash), Error);
}

TEST_CASE("is_mds basics and the GF(2) witness") {
    const Field f5 = Field::make(5, 1);
    CHECK(is_mds(rs_matrix(f5, 2, {0, 1, 2})));

    const Field f2 = Field::make(2, 1);
    const Mat uv = Mat::from_rows(f2, {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 1}, {0, 0, 1, 0, 1}});
    std::vector<std::uint32_t> witness;
    CHECK_FALSE(is_mds(uv, &witness));
    CHECK(witness == std::vector<std::uint32_t>{2, 3, 4});  // 1-based {3,4,5}

    // k = 1: a zero entry kills it
    const Mat one = Mat::from_rows(f5, {{1, 0, 2}});
    CHECK_FALSE(is_mds(one));
}

TEST_CASE("is_mds_ell on generic-proxy RS and the paper anchor") {
    const Field fp = Field::make(2147483647ULL, 1);
    Rng rng(1);
    CHECK(is_mds_ell(rs_matrix(fp, 2, {fp.sample_uniform(rng), fp.sample_uniform(rng),
                                       fp.sample_uniform(rng), fp.sample_uniform(rng)}),
                     3));

    // [I_4 | two generic RS columns] fails MDS(4)
    const Fe a = fp.sample_uniform(rng);
    const Fe b = fp.sample_uniform(rng);
    Mat two(fp, 4, 2);
    for (std::uint32_t i = 0; i < 4; ++i) {
        two.set(i, 0, fp.pow(a, static_cast<std::int64_t>(i)));
        two.set(i, 1, fp.pow(b, static_cast<std::int64_t>(i)));
    }
    const Mat uv = Mat::hconcat(Mat::identity(fp, 4), two);
    SetFamily witness;
    CHECK_FALSE(is_mds_ell(uv, 4, Budget{}, &witness));
    CHECK(witness.sets.size() == 4);

    CHECK_THROWS_AS(is_mds_ell(uv, 7), Error);  // ell cap
}

TEST_CASE("is_mds_ell at ell = 2 equals is_mds on rank-k inputs") {
    Rng rng(2);
    for (auto q : {5ULL, 7ULL, 8ULL}) {
        const Field f = (q == 8) ? Field::make(2, 3) : Field::make(q, 1);
        for (int trial = 0; trial < 40; ++trial) {
            const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.below(3));
            const std::uint32_t n = k + static_cast<std::uint32_t>(rng.below(7 - k));
            Mat g(f, k, n);
            for (std::uint32_t i = 0; i < k; ++i)
                for (std::uint32_t j = 0; j < n; ++j) g.set(i, j, f.sample_uniform(rng));
            if (rank_of(g) != k) continue;
            CHECK(is_mds_ell(g, 2) == is_mds(g));
        }
    }
}

TEST_CASE("attains_zero_pattern pinned example") {
    const Field f5 = Field::make(5, 1);
    const Mat g = rs_matrix(f5, 2, {0, 1, 2});
    const auto out = attains_zero_pattern(g, zp(3, 2, {{0}, {1}}));
    REQUIRE(out.has_value());
    CHECK(out->equals(Mat::from_rows(f5, {{0, 1, 2}, {4, 0, 1}})));

    // all-empty pattern: the generator itself
    const auto same = attains_zero_pattern(g, zp(3, 2, {{}, {}}));
    REQUIRE(same.has_value());
    CHECK(same->equals(g));

    // non-generic pattern on an MDS code: no transform exists
    CHECK_FALSE(attains_zero_pattern(g, zp(3, 2, {{0}, {0}})).has_value());
}

TEST_CASE("attains_zero_pattern zeros land where prescribed") {
    Rng rng(3);
    const Field f7 = Field::make(7, 1);
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint32_t k = 2 + static_cast<std::uint32_t>(rng.below(2));
        const std::uint32_t n = k + 1 + static_cast<std::uint32_t>(rng.below(3));
        std::vector<Fe> xs;
        while (xs.size() < n) {
            const Fe x = f7.sample_uniform(rng);
            if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
        }
        const Mat g = rs_matrix(f7, k, xs);
        ZeroPattern p;
        p.n = static_cast<int>(n);
        p.k = static_cast<int>(k);
        for (std::uint32_t i = 0; i < k; ++i)
            p.sets.push_back(static_cast<ColSet>(rng.below(full_set(static_cast<int>(n)) + 1)));
        const auto out = attains_zero_pattern(g, p);
        if (!out) continue;
        CHECK(rank_of(*out) == k);
        CHECK(same_row_space(*out, g));
        for (std::uint32_t i = 0; i < k; ++i)
            for (auto j : set_to_indices(p.sets[i])) CHECK(out->at(i, j) == 0);
    }
}

TEST_CASE("attains_zero_pattern agrees with brute force at tiny scale") {
    Rng rng(4);
    for (auto q : {2ULL, 3ULL, 5ULL}) {
        const Field f = Field::make(q, 1);
        for (int trial = 0; trial < 30; ++trial) {
            const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.below(3));
            const std::uint32_t n = k + static_cast<std::uint32_t>(rng.below(3));
            if (n > q) continue;
            Mat g(f, k, n);
            for (std::uint32_t i = 0; i < k; ++i)
                for (std::uint32_t j = 0; j < n; ++j) g.set(i, j, f.sample_uniform(rng));
            if (rank_of(g) != k) continue;
            ZeroPattern p;
            p.n = static_cast<int>(n);
            p.k = static_cast<int>(k);
            for (std::uint32_t i = 0; i < k; ++i)
                p.sets.push_back(static_cast<ColSet>(rng.below(full_set(static_cast<int>(n)) + 1)));
            CHECK(attains_zero_pattern(g, p).has_value() == attains_bruteforce(g, p));
        }
    }
}

TEST_CASE("gm_mds_solve returns verified witnesses") {
    const Field f4 = Field::make(2, 2);
    CodeSpec spec;
    spec.family = Family::ReedSolomon;
    spec.k = 2;
    spec.field = f4;

    Rng rng(5);
    const auto out = gm_mds_solve(zp(3, 2, {{0}, {1}}), spec, Budget{}, rng);
    REQUIRE(out.has_value());
    const Mat g = generator(spec, out->points);
    CHECK(is_mds(g));
    CHECK(attains_zero_pattern(g, zp(3, 2, {{0}, {1}})).has_value());

    // all-empty pattern: immediate success
    Rng rng2(6);
    CHECK(gm_mds_solve(zp(3, 2, {{}, {}}), spec, Budget{}, rng2).has_value());

    Rng rng3(7);
    CHECK_THROWS_AS(gm_mds_solve(zp(3, 2, {{0}, {0}}), spec, Budget{}, rng3), Error);
}

TEST_CASE("solver determinism under a fixed seed") {
    const Field f11 = Field::make(11, 1);
    CodeSpec spec;
    spec.family = Family::ReedSolomon;
    spec.k = 3;
    spec.field = f11;
    const ZeroPattern p = zp(5, 3, {{0, 1}, {2, 3}, {1, 2}});
    Rng a(40), b(40);
    const auto ra = gm_mds_solve(p, spec, Budget{}, a);
    const auto rb = gm_mds_solve(p, spec, Budget{}, b);
    REQUIRE(ra.has_value());
    REQUIRE(rb.has_value());
    CHECK(ra->points.pts == rb->points.pts);
}

TEST_CASE("is_gzp_ell on generic-proxy codes and k = 1") {
    const Field fp = Field::make(2147483647ULL, 1);
    Rng rng(8);
    std::vector<Fe> xs;
    while (xs.size() < 5) {
        const Fe x = fp.sample_uniform(rng);
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    CHECK(is_gzp_ell(rs_matrix(fp, 3, xs), 2));

    // k = 1 with no zero coordinate
    const Mat ones = Mat::from_rows(Field::make(5, 1), {{1, 2, 3}});
    CHECK(is_gzp_ell(ones, 2));
    CHECK(is_gzp_ell(ones, 4));
}

TEST_CASE("is_gzp_ell agrees with is_mds_ell on random small codes") {
    Rng rng(9);
    int checked = 0;
    while (checked < 120) {
        const std::uint64_t q = std::vector<std::uint64_t>{5, 7, 8}[rng.below(3)];
        const Field f = (q == 8) ? Field::make(2, 3) : Field::make(q, 1);
        const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.below(3));
        const std::uint32_t n = k + static_cast<std::uint32_t>(rng.below(6 - k));
        Mat g(f, k, n);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < n; ++j) g.set(i, j, f.sample_uniform(rng));
        if (rank_of(g) != k) continue;
        ++checked;
        const int ell = 2 + static_cast<int>(rng.below(2));
        CHECK(is_gzp_ell(g, ell) == is_mds_ell(g, ell));
    }
}

TEST_CASE("puncture_random basics") {
    const Field f5 = Field::make(5, 1);
    const Mat g = rs_matrix(f5, 2, {0, 1, 2, 3});
    Rng a(10), b(10);
    const Mat pa = puncture_random(g, 2, a);
    const Mat pb = puncture_random(g, 2, b);
    CHECK(pa.equals(pb));

    Rng c(11);
    CHECK(puncture_random(g, 4, c).equals(g));
    CHECK(puncture_random(g, 0, c).cols() == 0);
    CHECK_THROWS_AS(puncture_random(g, 5, c), Error);
}
