#include <doctest.h>

#include <string>

#include "hwp/certificate.hpp"
#include "hwp/completion.hpp"
#include "hwp/errors.hpp"
#include "hwp/verifier.hpp"

using namespace hwp;

namespace {

BaseCycleSet assembled_95() {
    static BaseCycleSet base = assemble(make_params(9, 5));
    return base;
}

}  // namespace

TEST_CASE("json round trip is byte-identical after canonicalization") {
    Certificate cert = make_certificate(assembled_95(), true);
    std::string text = serialize(cert, CertFormat::Json);
    Certificate back = deserialize(text);
    CHECK(back == cert);
    CHECK(serialize(back, CertFormat::Json) == text);
}

TEST_CASE("text round trip is byte-identical after canonicalization") {
    Certificate cert = make_certificate(assembled_95(), true);
    std::string text = serialize(cert, CertFormat::Text);
    Certificate back = deserialize(text);
    CHECK(back == cert);
    CHECK(serialize(back, CertFormat::Text) == text);
}

TEST_CASE("text and json encode identical cycle data") {
    Certificate cert = make_certificate(assembled_95(), false);
    Certificate via_json = deserialize(serialize(cert, CertFormat::Json));
    Certificate via_text = deserialize(serialize(cert, CertFormat::Text));
    CHECK(via_json.short_base_cycles == via_text.short_base_cycles);
    CHECK(via_json.long_base_cycles == via_text.long_base_cycles);
    CHECK(via_json.params == via_text.params);
}

TEST_CASE("the round-tripped certificate still verifies") {
    Certificate cert = make_certificate(assembled_95(), false);
    Certificate back = deserialize(serialize(cert, CertFormat::Json));
    BaseCycleSet base = to_base_cycle_set(back);
    CHECK(check_base(base).ok);
}

TEST_CASE("malformed input raises ParseError") {
    CHECK_THROWS_AS(deserialize(""), ParseError);
    CHECK_THROWS_AS(deserialize("   \n "), ParseError);
    CHECK_THROWS_AS(deserialize("{ not json"), ParseError);
    CHECK_THROWS_AS(deserialize("hwp-certificate hwp-cert/1\nparams ell=banana"), ParseError);
}

TEST_CASE("schema violations raise SchemaError") {
    Certificate cert = make_certificate(assembled_95(), false);
    std::string text = serialize(cert, CertFormat::Json);

    // version mismatch
    std::string bad = text;
    bad.replace(bad.find("hwp-cert/1"), 10, "hwp-cert/9");
    CHECK_THROWS_AS(deserialize(bad), SchemaError);

    // unknown field under strict parsing
    std::string extra = text;
    extra.insert(extra.find("\"params\""), "\"surprise\": 1, ");
    CHECK_THROWS_AS(deserialize(extra), SchemaError);

    // out-of-range residue: vertex (91, 0) for M = 91
    std::string handmade = R"({
 "schema_version": "hwp-cert/1",
 "params": {"ell": 9, "n": 5, "M": 91, "v": 819, "r": 45, "r_prime": 364},
 "short_base_cycles": [[[91, 0], [1, 1], [2, 2]]],
 "long_base_cycles": []
})";
    CHECK_THROWS_AS(deserialize(handmade), SchemaError);

    // derived parameters that disagree with (ell, n)
    std::string wrong = R"({
 "schema_version": "hwp-cert/1",
 "params": {"ell": 9, "n": 5, "M": 92, "v": 819, "r": 45, "r_prime": 364},
 "short_base_cycles": [],
 "long_base_cycles": []
})";
    CHECK_THROWS_AS(deserialize(wrong), SchemaError);
}

TEST_CASE("tampering is caught by verification, not parsing") {
    Certificate cert = make_certificate(assembled_95(), false);
    // swap the first components of two vertices in one short cycle
    Certificate tampered = cert;
    auto& cyc = tampered.short_base_cycles[0];
    std::swap(cyc[1].a, cyc[2].a);
    Certificate back = deserialize(serialize(tampered, CertFormat::Json));
    CHECK_FALSE(check_base(to_base_cycle_set(back)).ok);
}
