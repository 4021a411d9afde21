#include <doctest.h>

#include <parthooks/series.hpp>

#include <nlohmann/json.hpp>

#include <random>
#include <stdexcept>

using namespace parthooks;

namespace {

truncated_series random_series(std::mt19937& rng, unsigned order, bool unit_constant = false) {
    std::uniform_int_distribution<int> dist(-9, 9);
    truncated_series s(order);
    for (unsigned n = 0; n <= order; ++n)
        s.coeff(n) = dist(rng);
    if (unit_constant)
        s.coeff(0) = dist(rng) % 2 == 0 ? 1 : -1;
    return s;
}

truncated_series geometric(unsigned order) {
    truncated_series s(order);
    for (unsigned n = 0; n <= order; ++n)
        s.coeff(n) = 1;
    return s;
}

truncated_series one_minus_z(unsigned order) {
    truncated_series s = truncated_series::one(order);
    if (order >= 1)
        s.coeff(1) = -1;
    return s;
}

} // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("construction and coefficient access") {
    truncated_series s(3);
    CHECK(s.order() == 3);
    CHECK(s.is_zero());
    s.coeff(2) = 7;
    CHECK(s[2] == 7);
    CHECK_FALSE(s.is_zero());
    CHECK_THROWS_AS(s[4], std::out_of_range);
    CHECK_THROWS_AS(s.coeff(4), std::out_of_range);
    CHECK_THROWS_AS(truncated_series(std::vector<Integer>{}), std::invalid_argument);

    CHECK(truncated_series::one(2) == truncated_series({1, 0, 0}));
    CHECK(truncated_series::monomial(2, 3) == truncated_series({0, 0, 1, 0}));
    CHECK(truncated_series::monomial(5, 3).is_zero());
}

TEST_CASE("addition, subtraction, negation") {
    const truncated_series a({1, 2, 3});
    const truncated_series b({4, -2, 1});
    CHECK(a + b == truncated_series({5, 0, 4}));
    CHECK(a - b == truncated_series({-3, 4, 2}));
    CHECK(-a == truncated_series({-1, -2, -3}));
}

TEST_CASE("mixed orders truncate to the smaller operand") {
    const truncated_series a({1, 2, 3, 4, 5, 6});
    const truncated_series b({1, 1, 1, 1});
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK(a + b == truncated_series({2, 3, 4, 5}));
    CHECK(a * b == truncated_series({1, 3, 6, 10}));
}

TEST_CASE("multiplication worked examples") {
    CHECK(truncated_series({1, 1, 0}) * truncated_series({1, -1, 0}) ==
          truncated_series({1, 0, -1})); /* (1+z)(1-z) = 1-z^2 */
    CHECK(geometric(40) * one_minus_z(40) == truncated_series::one(40));
}

TEST_CASE("ring laws on random series at order 50") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        const truncated_series a = random_series(rng, 50);
        const truncated_series b = random_series(rng, 50);
        const truncated_series c = random_series(rng, 50);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a - a == truncated_series(50));
        CHECK(a * truncated_series::one(50) == a);
    }
}

TEST_CASE("inverse of 1-z is the geometric series") {
    CHECK(one_minus_z(5).inverse() == geometric(5));
}

TEST_CASE("inverse requires a unit constant term") {
    CHECK_THROWS_AS(truncated_series({2, 1}).inverse(), std::domain_error);
    CHECK_THROWS_AS(truncated_series({0, 1}).inverse(), std::domain_error);
    CHECK_NOTHROW(truncated_series({-1, 5}).inverse());
}

TEST_CASE("inverse round trips on random unit series at order 50") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        const truncated_series a = random_series(rng, 50, true);
        const truncated_series inv = a.inverse();
        CHECK(a * inv == truncated_series::one(50));
        CHECK(inv * a == truncated_series::one(50));
        CHECK(inv.inverse() == a);
    }
}

TEST_CASE("in-place factors match explicit multiplication") {
    std::mt19937 rng(4242);
    for (unsigned k = 1; k <= 7; ++k) {
        const truncated_series a = random_series(rng, 30);
        truncated_series factor = truncated_series::one(30);
        if (k <= 30)
            factor.coeff(k) = -1; /* 1 - z^k */

        truncated_series via_inplace = a;
        via_inplace.mul_one_minus(k);
        CHECK(via_inplace == a * factor);

        truncated_series back = via_inplace;
        back.mul_inverse_one_minus(k);
        CHECK(back == a);

        truncated_series via_inverse = a;
        via_inverse.mul_inverse_one_minus(k);
        CHECK(via_inverse == a * factor.inverse());
    }
    truncated_series s = truncated_series::one(5);
    CHECK_THROWS_AS(s.mul_one_minus(0), std::invalid_argument);
    CHECK_THROWS_AS(s.mul_inverse_one_minus(0), std::invalid_argument);
}

TEST_CASE("shift and scaled accumulation") {
    const truncated_series a({1, 2, 3, 4});
    CHECK(a.shifted_up(2) == truncated_series({0, 0, 1, 2}));
    CHECK(a.shifted_up(0) == a);
    CHECK(a.shifted_up(9).is_zero());

    truncated_series acc({1, 0, 0, 0});
    acc.add_scaled(a, 10, 1); /* + 10 z (1+2z+3z^2+...) */
    CHECK(acc == truncated_series({1, 10, 20, 30}));
    acc.add_scaled(a, 0, 0);
    CHECK(acc == truncated_series({1, 10, 20, 30}));
}

TEST_CASE("json round trip preserves arbitrary precision") {
    truncated_series s(3);
    s.coeff(0) = 1;
    s.coeff(2) = Integer("-1267650600228229401496703205376"); /* -2^100 */
    const nlohmann::json j = series_to_json(s);
    CHECK(j.at("order") == 3);
    CHECK(j.at("coefficients").size() == 4);
    CHECK(j.at("coefficients")[0] == "1");
    CHECK(j.at("coefficients")[2] == "-1267650600228229401496703205376");
    CHECK(series_from_json(j) == s);

    nlohmann::json bad = j;
    bad["coefficients"].push_back("5");
    CHECK_THROWS_AS(series_from_json(bad), std::invalid_argument);
}

TEST_SUITE_END();
