#include <doctest.h>

#include "cylq/bijection.hpp"
#include "cylq/enumerate.hpp"
#include "cylq/identities.hpp"

using namespace cylq;

TEST_CASE("s_range") {
    CHECK(s_range(Profile({1, 1}), 1, 2) == 2);
    CHECK(s_range(Profile({1, 2, 0}), 2, 3) == 2);
    CHECK(s_range(Profile({1, 2, 0}), 2, 1) == 0);  // empty range convention
    CHECK_THROWS_AS(s_range(Profile({1, 1}), 0, 1), std::out_of_range);
    CHECK_THROWS_AS(s_range(Profile({1, 1}), 1, 3), std::out_of_range);
}

TEST_CASE("borodin series pinned prefixes") {
    auto b11 = borodin_series(Profile({1, 1}), 4);
    std::vector<long long> expect{1, 2, 3, 6, 10};
    for (int n = 0; n <= 4; ++n) CHECK(b11.coeff(n) == expect[static_cast<std::size_t>(n)]);

    // (2,0): equals 1/((q;q)inf (q^2;q^4)inf)
    const int N = 24;
    auto direct = product_of_inverse_pochhammers({{1, 1}, {2, 4}}, N);
    CHECK(first_difference(borodin_series(Profile({2, 0}), N), direct) == -1);
}

TEST_CASE("borodin equals the closed forms deep") {
    const int N = 120;
    CHECK(first_difference(borodin_series(Profile({1, 1}), N), f11_closed(N)) == -1);
    CHECK(first_difference(borodin_series(Profile({2, 0}), N), f20_closed(N)) == -1);
}

TEST_CASE("borodin equals enumeration for the four tested profiles") {
    for (const auto& [entries, order] :
         std::vector<std::pair<std::vector<int>, int>>{
             {{1, 1}, 14}, {{2, 0}, 14}, {{2, 1}, 12}, {{1, 2, 0}, 10}}) {
        Profile c(entries);
        auto series = borodin_series(c, order);
        auto counts = count_sequence(c, order);
        for (int n = 0; n <= order; ++n)
            CHECK(series.coeff(n) == counts[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("closed-form spot values") {
    CHECK(f11_closed(0).coeff(0) == 1);
    auto f20 = f20_closed(1);
    CHECK(f20.coeff(0) == 1);
    CHECK(f20.coeff(1) == 1);
}

TEST_CASE("odd-distinct substitution: hand expansion and deep check") {
    auto rep = euler_odd_distinct_check(100);
    CHECK(rep.pass);
    CHECK(rep.identity == "euler-odd-distinct");

    auto lhs = poch_infinite(FactorSpec<BigInt>{BigInt(1), 2, 4}, 4).invert();
    std::vector<long long> expect{1, 0, 1, 0, 1};
    for (int n = 0; n <= 4; ++n) CHECK(lhs.coeff(n) == expect[static_cast<std::size_t>(n)]);

    CHECK(euler_odd_distinct_check(0).pass);
}

TEST_CASE("f11 bivariate: spot coefficients and statistic bound") {
    auto f = f11_bivariate(8);
    CHECK(f.coeff(0) == TrackedPoly(1));
    CHECK(f.coeff(1).coeff(1) == 2);  // z^1 q^1
    for (int n = 0; n <= 8; ++n) CHECK(f.coeff(n).degree() <= n);
}

TEST_CASE("f11 bivariate equals refined enumeration") {
    const int N = 10;
    auto f = f11_bivariate(N);
    auto table = refined_counts(Profile({1, 1}), N);
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= n; ++m) CHECK(f.coeff(n).coeff(m) == table.at(m, n));
}

TEST_CASE("distinct-part sums at t = 1 match enumeration") {
    const int N = 14;
    auto d11 = d11_series(N);
    auto d20 = d20_series(N);
    auto c11 = count_sequence(Profile({1, 1}), N, PartFilter::Distinct);
    auto c20 = count_sequence(Profile({2, 0}), N, PartFilter::Distinct);
    for (int n = 0; n <= N; ++n) {
        CHECK(d11.coeff(n) == c11[static_cast<std::size_t>(n)]);
        CHECK(d20.coeff(n) == c20[static_cast<std::size_t>(n)]);
    }
    std::vector<long long> head{1, 2, 2, 4, 4, 6};
    for (int n = 0; n <= 5; ++n) CHECK(d11.coeff(n) == head[static_cast<std::size_t>(n)]);
    CHECK(d20.coeff(0) == 1);
    CHECK(d20.coeff(1) == 1);
}

TEST_CASE("bivariate distinct-part sums match refined enumeration") {
    const int N = 10;
    auto b11 = d11_bivariate(N);
    auto b20 = d20_bivariate(N);
    auto t11 = refined_counts(Profile({1, 1}), N, PartFilter::Distinct);
    auto t20 = refined_counts(Profile({2, 0}), N, PartFilter::Distinct);
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= n; ++m) {
            CHECK(b11.coeff(n).coeff(m) == t11.at(m, n));
            CHECK(b20.coeff(n).coeff(m) == t20.at(m, n));
        }
    CHECK(b11.coeff(6).coeff(3) == 4);  // weight 6, largest part 3
}

TEST_CASE("bivariate distinct-part sums specialize to the t = 1 series") {
    const int N = 16;
    CHECK(first_difference(at_tracking_one(d11_bivariate(N)), d11_series(N)) == -1);
    CHECK(first_difference(at_tracking_one(d20_bivariate(N)), d20_series(N)) == -1);
}

TEST_CASE("sqrt2 product identities") {
    auto reports = sqrt2_product_checks(80);
    REQUIRE(reports.size() == 3);
    for (const auto& rep : reports) {
        INFO(rep.identity);
        CHECK(rep.pass);
    }

    // q^1 coefficient of (-sqrt2;q)inf is 2 + sqrt2 = d11[1] + sqrt2*d20[1]
    auto p = poch_infinite(FactorSpec<QuadElem>{-QuadElem::sqrt2(), 0, 1}, 1);
    CHECK(p.coeff(1) == QuadElem(2, 1));
    CHECK(d11_series(1).coeff(1) == 2);
    CHECK(d20_series(1).coeff(1) == 1);
}

TEST_CASE("dissection route equals the integer-sum route") {
    auto rep = run_check("dissection-routes", {}, 60);
    REQUIRE(rep.has_value());
    CHECK(rep->pass);
}

TEST_CASE("the two displayed all-odd forms agree") {
    const int N = 80;
    CHECK(first_difference(oc_two_sum(N), oc_closed(N)) == -1);
    auto oc = oc_two_sum(4);
    CHECK(oc.coeff(0) == 1);
    CHECK(oc.coeff(2) == 1);
}

TEST_CASE("oc table: series counts the doubled-odd pairs, enumeration diverges at 1") {
    auto rows = oc_vs_enumeration(12);
    REQUIRE(rows.size() == 13);
    CHECK(rows[0].series_coefficient == 1);
    CHECK(rows[0].enumeration == 1);
    // weight 2: only ((1),(1))
    CHECK(rows[2].enumeration == 1);
    for (const auto& r : rows) {
        CHECK(r.series_coefficient == r.pair_count);  // our reading of the series
        if (r.weight % 2 == 0) CHECK(BigInt(r.enumeration) == r.series_coefficient);
    }
    // the naive all-odd count first departs from the series at weight 1
    CHECK(rows[1].series_coefficient == 1);
    CHECK(rows[1].enumeration == 2);
}

TEST_CASE("negative control: a corrupted exponent is caught and localized") {
    const int N = 40;
    auto factors = borodin_factor_exponents(Profile({1, 1}));
    REQUIRE(factors.size() == 5);
    factors[1].first += 1;  // mutate one exponent
    auto corrupted = product_of_inverse_pochhammers(factors, N);
    const int diff = first_difference(corrupted, f11_closed(N));
    CHECK(diff >= 0);
    CHECK(diff == 1);  // the damaged factor first contributes at q^1

    auto rep = compare_series("corrupted-borodin", corrupted, f11_closed(N));
    CHECK(!rep.pass);
    CHECK(rep.first_diff == 1);
    CHECK(rep.lhs == "1");
    CHECK(rep.rhs == "2");
}

TEST_CASE("run_check handles unknown names and order overrides") {
    CHECK(!run_check("no-such-check").has_value());
    auto rep = run_check("euler-odd-distinct", {}, 16);
    REQUIRE(rep.has_value());
    CHECK(rep->order == 16);
    CHECK(rep->pass);
}

TEST_CASE("verify_all passes with every order at zero") {
    VerifyConfig config;
    config.univariate = config.odd_distinct = config.f11_bivariate_order = 0;
    config.distinct_bivariate = config.distinct_t1 = config.enumeration = 0;
    config.three_row = config.dissection = config.oc_table = 0;
    for (const auto& rep : verify_all(config)) {
        INFO(rep.identity);
        CHECK(rep.pass);
    }
}

TEST_CASE("verify_all passes at reduced orders") {
    VerifyConfig config;
    config.univariate = 60;
    config.odd_distinct = 60;
    config.f11_bivariate_order = 8;
    config.distinct_bivariate = 8;
    config.distinct_t1 = 10;
    config.enumeration = 10;
    config.three_row = 7;
    config.dissection = 30;
    config.oc_table = 8;
    auto reports = verify_all(config);
    CHECK(reports.size() == verify_check_names().size());
    for (const auto& rep : reports) {
        INFO(rep.identity);
        CHECK(rep.pass);
    }
}
