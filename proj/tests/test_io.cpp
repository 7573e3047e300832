#include "doctest.h"
#include "monosub/errors.hpp"
#include "monosub/io.hpp"

using namespace monosub;

TEST_CASE("family files") {
    CHECK(parse_family(R"({"kind":"vertical"})") == LambdaFamily::vertical());
    CHECK(parse_family(R"({"kind":"fibonacci"})") == LambdaFamily::fibonacci());
    LambdaFamily f = parse_family(R"({"kind":"finite","elements":[["1","0"],["3","1"],[2,5]]})");
    CHECK(f.elements() == std::vector<ExponentPair>{ExponentPair(1, 0), ExponentPair(3, 1), ExponentPair(2, 5)});
    CHECK(family_to_json(f).dump() == R"({"kind":"finite","elements":[["1","0"],["3","1"],["2","5"]]})");
    CHECK(parse_family(family_to_json(f).dump()) == f);

    CHECK_THROWS_WITH_AS(parse_family(R"({"kind":"finite","elements":[["3","1"]]})"), "family must contain (1,0)",
                         InvalidFamily);
    CHECK_THROWS_AS(parse_family(R"({"kind":"spiral"})"), ParseError);
    CHECK_THROWS_AS(parse_family(R"({"elements":[]})"), ParseError);
    CHECK_THROWS_AS(parse_family(R"({"kind":"finite","elements":[["0","1"],["1","0"]]})"), ParseError);
    CHECK_THROWS_AS(parse_family(R"({"kind":"finite","elements":[["1"]]})"), ParseError);
    CHECK_THROWS_AS(parse_family(R"({"kind":"finite","elements":[["1","x"]]})"), ParseError);
    CHECK_THROWS_AS(parse_family("not json"), ParseError);
    CHECK_THROWS_AS(parse_family("[]"), ParseError);
}

TEST_CASE("generator files") {
    GeneratorSet g = parse_generators(R"([["1","2"],["1","0"]])");
    CHECK(g.generators() == std::vector<ExponentPair>{ExponentPair(1, 0), ExponentPair(1, 2)});
    CHECK(parse_generators(R"({"generators":[["1","0"]]})").size() == 1);
    CHECK_THROWS_AS(parse_generators("[]"), ParseError);
    CHECK_THROWS_AS(parse_generators(R"({"gens":[]})"), ParseError);
}

TEST_CASE("certificate serialization") {
    Certificate c = construct_witness_from_generators(
        LambdaFamily::vertical(), GeneratorSet({ExponentPair(1, 0), ExponentPair(1, 1), ExponentPair(1, 2)}));
    std::string text = serialize_certificate(c);
    CHECK(text == R"({
  "version": "nonfg-cert/1",
  "family": {
    "kind": "vertical"
  },
  "generators": [
    [
      "1",
      "0"
    ],
    [
      "1",
      "1"
    ],
    [
      "1",
      "2"
    ]
  ],
  "beta": {
    "numerator": "2",
    "denominator": "1"
  },
  "witness": [
    "1",
    "3"
  ],
  "witness_in_family_index": "3",
  "created_from": null
}
)");
    Certificate back = parse_certificate(text);
    CHECK(back == c);
    CHECK(serialize_certificate(back) == text);
    CHECK(verify_certificate_text(text).passed);
}

TEST_CASE("big Fibonacci certificates keep exact integers") {
    auto chain = escalation_chain(LambdaFamily::fibonacci(), 60);
    const Certificate& last = chain.back();
    CHECK(last.witness.a() > BigInt(std::numeric_limits<std::uint64_t>::max()));
    std::string text = serialize_certificate(last);
    CHECK(parse_certificate(text) == last);
    CHECK(verify_certificate_text(text).passed);
}

TEST_CASE("certificate decoding errors") {
    Certificate c = construct_witness_from_generators(LambdaFamily::fibonacci(), GeneratorSet({ExponentPair(1, 0)}));
    Json j = certificate_to_json(c);

    Json bad_version = j;
    bad_version["version"] = "nonfg-cert/2";
    CHECK_THROWS_WITH_AS(verify_certificate_text(bad_version.dump()), "unsupported certificate version",
                         UnsupportedVersion);
    Json no_version = j;
    no_version.erase("version");
    CHECK_THROWS_AS(parse_certificate(no_version.dump()), UnsupportedVersion);
    CHECK_THROWS_AS(verify_certificate_text("{"), ParseError);

    Json garbled = j;
    garbled["witness"] = Json::array({"1", "1x"});
    auto r = verify_certificate_text(garbled.dump());
    CHECK_FALSE(r.passed);
    REQUIRE(r.first_failure());
    CHECK(r.first_failure()->name == "decode");

    Json unsorted = j;
    unsorted["generators"] = Json::array({Json::array({"1", "1"}), Json::array({"1", "0"})});
    CHECK_FALSE(verify_certificate_text(unsorted.dump()).passed);

    Json zero_den = j;
    zero_den["beta"]["denominator"] = "0";
    CHECK_FALSE(verify_certificate_text(zero_den.dump()).passed);

    Json sources = j;
    sources["created_from"] = Json::array({"1*x^1*y^0"});
    CHECK(parse_certificate(sources.dump()).created_from == std::vector<std::string>{"1*x^1*y^0"});
}
