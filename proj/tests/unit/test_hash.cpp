#include "matmonoid/error.hpp"
#include "matmonoid/hash.hpp"
#include "matmonoid/serialize.hpp"

#include <doctest.h>

using namespace matmonoid;

namespace {
HashParams const h235(2, 3, 5);
}

TEST_CASE("primality") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(5));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(561));
    CHECK_FALSE(is_prime(Natural("3215031751")));
    CHECK(is_prime(Natural("1000000007")));
    CHECK(is_prime(Natural("170141183460469231731687303715884105727")));
    CHECK_FALSE(is_prime(Natural("170141183460469231731687303715884105729")));
}

TEST_CASE("parameters") {
    CHECK_THROWS_AS(HashParams(2, 3, 4), InvalidParams);
    CHECK_THROWS_AS(HashParams(0, 3, 5), InvalidParams);
    CHECK(h235.field_width() == 1);
    CHECK(HashParams(1, 1, 257).field_width() == 2);
    CHECK(HashParams(1, 1, 2).field_width() == 1);
}

TEST_CASE("streaming state") {
    HashState st = init(h235);
    CHECK(st.digest() == Digest{1, 0, 0, 1});
    st.update_bit(false);
    CHECK(st.digest() == Digest{1, 0, 2, 1});
    st.update_bit(true);
    CHECK(st.digest() == Digest{1, 3, 2, 2});
    CHECK(st.bits_consumed() == 2);
    CHECK(det_mod(st.digest(), 5) == 1);
    CHECK_THROWS_AS(st.update_ascii("01x"), std::invalid_argument);
}

TEST_CASE("one-shot hashes") {
    CHECK(hash_string(h235, "01100") == Digest{0, 1, 4, 3});
    CHECK(hash_string(h235, " 0 11\n00 ") == Digest{0, 1, 4, 3});
    CHECK(hash_string(h235, "") == Digest{1, 0, 0, 1});
    CHECK(hash_string(HashParams(2, 3, 101), "01100") == Digest{25, 6, 54, 13});

    // 0x6 = 00000110: bytes-msb and ascii agree.
    HashState bytes(h235);
    std::uint8_t const b[] = {0x06};
    bytes.update_bytes(b);
    CHECK(bytes.digest() == hash_string(h235, "00000110"));
}

TEST_CASE("collision horizon and search") {
    CHECK(bound_n0(h235) == 1);
    CHECK(bound_n0(HashParams(2, 3, 101)) == 4);
    CHECK(bound_n0(HashParams(1, 1, 2)) == 1);
    CHECK_FALSE(exhaustive_collision_check(HashParams(2, 3, 101), 4).has_value());
    CHECK_FALSE(exhaustive_collision_check(h235, 1).has_value());

    auto const hit = exhaustive_collision_check(h235, 10);
    REQUIRE(hit.has_value());
    CHECK(hit->first != hit->second);
    CHECK(hash_string(h235, hit->first) == hash_string(h235, hit->second));

    CHECK_THROWS_AS(exhaustive_collision_check(h235, 30, EnumerationLimits{}), LimitExceeded);
}

TEST_CASE("serialization") {
    auto const bytes = serialize(Digest{0, 1, 4, 3}, h235);
    CHECK(bytes == std::vector<std::uint8_t>{0, 1, 4, 3});
    CHECK(to_hex(bytes) == "00010403");
    HashParams const h257(1, 1, 257);
    CHECK(to_hex(serialize(Digest{1, 0, 0, 1}, h257)) == "0001000000000001");
    CHECK(parse_digest(bytes, h235) == Digest{0, 1, 4, 3});
    std::vector<std::uint8_t> const bad{0, 1, 4};
    CHECK_THROWS_AS(parse_digest(bad, h235), std::invalid_argument);
    std::vector<std::uint8_t> const out_of_range{0, 1, 4, 9};
    CHECK_THROWS_AS(parse_digest(out_of_range, h235), std::invalid_argument);
}

TEST_CASE("JSON forms") {
    CHECK(to_json(Mat2{25, 6, 54, 13}).dump() == R"([["25","6"],["54","13"]])");
    CHECK(mat2_from_json(to_json(Mat2{25, 6, 54, 13})) == Mat2{25, 6, 54, 13});
    CHECK_THROWS_AS(mat2_from_json(nlohmann::json::parse("[1,2]")), std::invalid_argument);
    auto const j = to_json(witness(MonoidParams(2, 3), 3));
    CHECK(j["word"] == "RLR");
    CHECK(j["value"] == "24");
}
