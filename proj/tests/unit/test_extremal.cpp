#include "matmonoid/error.hpp"
#include "matmonoid/extremal.hpp"
#include "matmonoid/tree.hpp"

#include <doctest.h>

using namespace matmonoid;

namespace {
MonoidParams const p23(2, 3);
}

TEST_CASE("Lucas doubling") {
    auto const a = lucas(8, 1);
    CHECK(a.U == 1);
    CHECK(a.V == 8);
    auto const b = lucas(8, 2);
    CHECK(b.U == 8);
    CHECK(b.V == 62);
    CHECK(b.V * b.V - 60 * b.U * b.U == 4);
    CHECK(lucas(3, 5).U == 55);
    CHECK(lucas(3, 0).U == 0);
    CHECK(lucas(3, 0).V == 2);
    CHECK_THROWS(lucas(2, 4));
    // Against the plain recurrence.
    Natural u0 = 0, u1 = 1;
    for (std::uint64_t m = 1; m <= 60; ++m) {
        CHECK(lucas(7, m).U == u1);
        Natural next = 7 * u1 - u0;
        u0 = u1;
        u1 = next;
    }
}

TEST_CASE("alpha/gamma recurrence") {
    for (std::uint64_t u = 1; u <= 3; ++u) {
        auto const base = alpha_gamma(MonoidParams(u, 2), 1, 0, 0);
        CHECK(base.alpha == 1);
        CHECK(base.gamma == u);
    }
    auto const one = alpha_gamma(p23, 1, 0, 1);
    CHECK(one.alpha == 7);
    CHECK(one.gamma == 16);
    // Arbitrary starting column: M = L_u R_v has column (1, u).
    Mat2 const m = word_to_matrix(Word::parse("LRLRL") + Word::parse("LR"), p23);
    auto const ag = alpha_gamma(p23, 1, 2, 2);
    CHECK(ag.alpha == m.a);
    CHECK(ag.gamma == m.c);
    CHECK(ag.gamma >= ag.alpha);
    CHECK_THROWS(alpha_gamma(p23, 0, 0, 1));
}

TEST_CASE("closed forms") {
    CHECK(relative_error(closed_form_float(p23, 1, Parity::Odd), Natural(24)) < 1e-9);
    CHECK(relative_error(closed_form_float(MonoidParams(1, 1), 0, Parity::Odd), Natural(1)) < 1e-9);
    CHECK(relative_error(closed_form_float(MonoidParams(2, 1), 0, Parity::Even), Natural(4)) < 1e-9);
    CHECK(relative_error(gamma_closed_form(p23, 1, 0, 5), alpha_gamma(p23, 1, 0, 5).gamma) < 1e-9);
}

TEST_CASE("mu_depth") {
    Natural const expected[] = {1, 3, 7, 24, 55, 189};
    for (std::uint64_t n = 0; n < 6; ++n) CHECK(mu_depth(p23, n) == expected[n]);
    CHECK(mu_depth(MonoidParams(2, 1), 4) == 14);
    Natural const two_one[] = {4, 14, 52};
    for (std::uint64_t k = 0; k < 3; ++k) CHECK(mu_depth(MonoidParams(2, 1), 2 * k + 2) == two_one[k]);
    CHECK(mu_depth(MonoidParams(1, 1), 6) == 13);
    CHECK(mu_depth(MonoidParams(1, 1), 7) == 21);
    // Far beyond anything enumerable, still fast and symmetric.
    CHECK(mu_depth(p23, 100001) == mu_depth(p23.swapped(), 100001));
}

TEST_CASE("witnesses") {
    auto const w3 = witness(p23, 3);
    CHECK(w3.word.str() == "RLR");
    CHECK(w3.matrix == Mat2{7, 24, 2, 7});
    CHECK(w3.position == EntryPos{1, 2});
    auto const w1 = witness(p23, 1);
    CHECK(w1.word.str() == "R");
    CHECK(entry(w1.matrix, w1.position) == 3);
    auto const w4 = witness(MonoidParams(2, 1), 4);
    CHECK(w4.word.str() == "LLRL");
    CHECK(w4.matrix == Mat2{3, 1, 14, 5});
    CHECK(w4.position == EntryPos{2, 1});
    CHECK_THROWS(witness(p23, 0));
}

TEST_CASE("F sequence") {
    CHECK(fseq(MonoidParams(1, 1), 7) == 13);
    CHECK(fseq(p23, 3) == 7);
    CHECK(fseq(MonoidParams(2, 2), 4) == 12);
}

TEST_CASE("collision horizon") {
    CHECK(collision_horizon(p23, 5) == 1);
    CHECK(collision_horizon(p23, 101) == 4);
    CHECK(collision_horizon(MonoidParams(1, 1), 2) == 1);
    CHECK(collision_horizon(p23, 7) == 1);
    CHECK(collision_horizon(p23, 8) == 2);
    CHECK_THROWS(collision_horizon(p23, 1));
}
