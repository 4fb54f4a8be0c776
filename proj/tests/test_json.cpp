#include <doctest.h>

#include "cylq/bijection.hpp"
#include "cylq/enumerate.hpp"
#include "cylq/json_io.hpp"

using namespace cylq;

TEST_CASE("cylindric JSON round trip with zero stripping") {
    auto doc = Json::parse(R"({"profile":[1,1],"rows":[[7,4,4,3],[6,5,4,0]]})");
    auto parsed = cylindric_from_json(doc, std::nullopt);
    REQUIRE(parsed.value);
    CHECK(parsed.value->rows[1] == Partition({6, 5, 4}));  // trailing zero stripped

    auto out = to_json(*parsed.value);
    CHECK(out["profile"] == Json::array({1, 1}));
    CHECK(out["rows"][1] == Json::array({6, 5, 4}));
}

TEST_CASE("cylindric JSON error paths") {
    CHECK(!cylindric_from_json(Json::parse("[1,2]"), std::nullopt).value);
    CHECK(!cylindric_from_json(Json::parse(R"({"rows":[[1],[1,1]]})"), std::nullopt).value);

    auto bad = cylindric_from_json(Json::parse(R"({"profile":[1,1],"rows":[[1,1],[]]})"),
                                   std::nullopt);
    REQUIRE(!bad.value);
    CHECK(bad.error.find("row 2") != std::string::npos);

    auto clash = cylindric_from_json(Json::parse(R"({"profile":[2,0],"rows":[[],[]]})"),
                                     Profile({1, 1}));
    REQUIRE(!clash.value);
    CHECK(clash.error.find("disagrees") != std::string::npos);

    // profile only via argument works
    auto ok = cylindric_from_json(Json::parse(R"({"rows":[[1],[]]})"), Profile({1, 1}));
    CHECK(ok.value);
}

TEST_CASE("pair JSON round trip") {
    auto doc = Json::parse(R"({"mu":[5,5,4],"beta":[7,1],"flavor":"distinct-odd"})");
    auto parsed = pair_from_json(doc);
    REQUIRE(parsed.value);
    CHECK(parsed.value->mu == Partition({5, 5, 4}));
    CHECK(parsed.value->flavor == PairFlavor::DistinctOdd);

    auto again = pair_from_json(to_json(*parsed.value));
    REQUIRE(again.value);
    CHECK(*again.value == *parsed.value);

    CHECK(!pair_from_json(Json::parse(R"({"mu":[1]})")).value);
    CHECK(!pair_from_json(Json::parse(R"({"mu":[1],"beta":[1],"flavor":"x"})")).value);
    CHECK(!pair_from_json(Json::parse(R"({"mu":[1,2],"beta":[]})")).value);
}

TEST_CASE("map/unmap agree at the JSON level over an enumerated corpus") {
    for (long long n = 0; n <= 9; ++n)
        for (const auto& cp : enumerate_cylindric(Profile({1, 1}), n)) {
            auto [pair, trace] = forward_11(cp);
            auto round = pair_from_json(to_json(pair));
            REQUIRE(round.value);
            auto back = cylindric_from_json(to_json(inverse_11(*round.value)), std::nullopt);
            REQUIRE(back.value);
            CHECK(*back.value == cp);
        }
}

TEST_CASE("series serialization uses decimal strings") {
    auto f = f11_closed(4);
    CHECK(to_json(f) == Json::array({"1", "2", "3", "6", "10"}));

    TruncatedSeries<QuadElem> q(1);
    q.set_coeff(0, QuadElem(1, 1));
    q.set_coeff(1, QuadElem(-2, 0));
    CHECK(to_json(q) == Json::parse(R"([["1","1"],["-2","0"]])"));

    auto fz = f11_bivariate(2);
    // 1, 2zq, (z + 2z^2) q^2
    CHECK(to_json(fz) == Json::parse(R"([["1"],["0","2"],["0","1","2"]])"));
}

TEST_CASE("trace and report serialization") {
    auto [pair, trace] = forward_11(
        *validate_cylindric({{7, 4, 4, 3}, {6, 5, 4}}, Profile({1, 1})).value);
    auto j = to_json(trace);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["pair"] == 4);
    CHECK(j[0]["beta_part"] == 7);
    CHECK(j[0]["direction"] == "forward");

    VerificationReport rep;
    rep.identity = "sqrt2-sum";
    rep.order = 200;
    rep.pass = true;
    rep.millis = 1.5;
    auto rj = to_json(rep);
    CHECK(rj["identity"] == "sqrt2-sum");
    CHECK(rj["first_diff"].is_null());
}
