#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "homds/field.hpp"
#include "homds/rng.hpp"

using namespace homds;

TEST_CASE("default moduli are the lexicographically smallest irreducibles") {
    const Field f4 = Field::make(2, 2);
    CHECK(f4.modulus() == std::vector<std::uint64_t>{1, 1, 1});  // x^2 + x + 1

    const Field f5 = Field::make(5, 1);
    CHECK(f5.modulus() == std::vector<std::uint64_t>{0, 1});  // x

    const Field f8 = Field::make(2, 3);
    CHECK(f8.modulus() == std::vector<std::uint64_t>{1, 0, 1, 1});  // x^3 + x^2 + 1
}

TEST_CASE("construction rejects bad inputs") {
    CHECK_THROWS_WITH_AS(Field::make(4, 1), doctest::Contains("not prime"), Error);
    // x^2 + 1 = (x+1)^2 over GF(2)
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<std::uint64_t>{1, 0, 1}), Error);
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<std::uint64_t>{1, 1}), Error);  // degree
    CHECK_THROWS_AS(Field::make(2, 0), Error);
    try {
        Field::make(2, 2, std::vector<std::uint64_t>{1, 0, 1});
        FAIL("expected ReducibleModulus");
    } catch (const Error& e) {
        CHECK(e.kind() == Err::ReducibleModulus);
    }
}

TEST_CASE("GF(4) multiplication table") {
    const Field f = Field::make(2, 2);
    const Fe w = f.from_coeffs(std::vector<std::uint64_t>{0, 1});       // x
    const Fe w1 = f.from_coeffs(std::vector<std::uint64_t>{1, 1});      // x + 1
    CHECK(f.mul(w, w) == w1);            // x^2 = x + 1 mod x^2+x+1
    CHECK(f.mul(w, w1) == f.one());      // x * (x+1) = 1
    CHECK(f.pow(w, 3) == f.one());       // multiplicative order 3
}

TEST_CASE("GF(5) arithmetic") {
    const Field f = Field::make(5, 1);
    CHECK(f.mul(3, 4) == 2);
    CHECK(f.pow(2, -1) == 3);  // 2 * 3 = 6 = 1
    CHECK(f.inv(2) == 3);
    CHECK(f.pow(4, 0) == 1);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (auto [p, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
        const Field f = Field::make(p, m);
        const std::uint64_t q = f.order();
        for (std::uint64_t i = 0; i < q; ++i) {
            const Fe a = f.element_at(i);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
            CHECK(f.pow(a, static_cast<std::int64_t>(q)) == a);  // x^q = x
            for (std::uint64_t j = 0; j < q; ++j) {
                const Fe b = f.element_at(j);
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                if (b != 0) CHECK(f.div(a, b) == f.mul(a, f.inv(b)));
                for (std::uint64_t t = 0; t < q; ++t) {
                    const Fe c = f.element_at(t);
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                }
            }
        }
    }
}

TEST_CASE("enumeration is deterministic and complete") {
    const Field f2 = Field::make(2, 1);
    CHECK(f2.element_at(0) == 0);
    CHECK(f2.element_at(1) == 1);

    const Field f4 = Field::make(2, 2);
    std::map<Fe, int> seen;
    for (std::uint64_t i = 0; i < f4.order(); ++i) seen[f4.element_at(i)]++;
    CHECK(seen.size() == 4);
    // lexicographic on (c_0, c_1)
    CHECK(f4.coeffs(f4.element_at(1)) == std::vector<std::uint64_t>{0, 1});
    CHECK(f4.coeffs(f4.element_at(2)) == std::vector<std::uint64_t>{1, 0});
}

TEST_CASE("uniform sampler stays within 4 sigma per bucket") {
    const Field f = Field::make(5, 1);
    Rng rng(20240817);
    const int draws = 100000;
    std::map<Fe, int> hist;
    for (int i = 0; i < draws; ++i) hist[f.sample_uniform(rng)]++;
    const double expected = draws / 5.0;
    const double sigma = std::sqrt(draws * 0.2 * 0.8);
    for (std::uint64_t v = 0; v < 5; ++v) {
        CHECK(std::abs(hist[v] - expected) <= 4.0 * sigma);
    }
}

TEST_CASE("large prime fields work and zero to a negative power throws") {
    const Field f = Field::make((1ULL << 61) - 1, 1);
    const Fe a = 123456789123456789ULL;
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.pow(a, static_cast<std::int64_t>(f.p())) == a);
    CHECK_THROWS_AS(f.pow(0, -1), Error);
}

TEST_CASE("extension envelope is enforced") {
    try {
        Field::make(3, 16);  // 3^16 > 2^20
        FAIL("expected FieldTooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == Err::FieldTooLarge);
    }
}
