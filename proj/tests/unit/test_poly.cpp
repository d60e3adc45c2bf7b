#include "matmonoid/matrix.hpp"
#include "matmonoid/poly.hpp"

#include <doctest.h>

using namespace matmonoid;

TEST_CASE("PolyN basics") {
    PolyN const f{1, 0, 0, 1};
    CHECK(f.degree() == 3);
    CHECK(f.coeff(3) == 1);
    CHECK(f.coeff(9) == 0);
    CHECK(PolyN{0, 0, 0}.is_zero());
    CHECK(PolyN{1, 2, 0} == PolyN{1, 2});
    CHECK(f.str() == "x^3 + 1");
    CHECK(PolyN::x().shifted(2) == PolyN::monomial(1, 3));
    CHECK((PolyN{1, 1} * PolyN{1, 1}) == PolyN{1, 2, 1});
    CHECK(PolyN{1, 1}.substitute_square() == PolyN{1, 0, 1});
    CHECK_THROWS_AS(PolyN(std::vector<Natural>{1, -1}), std::invalid_argument);
}

TEST_CASE("dominance order") {
    PolyN const f{1, 3, 2};
    CHECK(dominates(f, f));
    CHECK_FALSE(dominates(PolyN{1, 0, 0, 1}, PolyN{0, 1, 1}));
    CHECK(dominates(PolyN{1, 2, 1}, PolyN{1, 0, 1}));
    CHECK_FALSE(dominates(PolyN{1, 0, 1}, PolyN{1, 2, 1}));
    CHECK(dominates(PolyN{0, 0, 1}, PolyN{1, 1}) == false);
    CHECK(dominates(PolyN{0, 0, 2}, PolyN{1, 1}));
    CHECK(dominates(PolyN{}, PolyN{}));
    CHECK(dominates(PolyN{1}, PolyN{}));
}

TEST_CASE("evaluation") {
    CHECK(eval(PolyN{}, 17) == 0);
    CHECK(eval(PolyN{1, 0, 0, 1}, 2) == 9);
    CHECK(eval(g_poly(1), 2) == 8);
}

TEST_CASE("binomial table") {
    BinomialTable const C(10);
    CHECK(C(4, 2) == 6);
    CHECK(C(10, 0) == 1);
    CHECK(C(3, 5) == 0);
    CHECK(C(3, -1) == 0);
    CHECK(C(-2, 0) == 0);
}

TEST_CASE("F, G, H, I families") {
    CHECK(f_poly(0) == PolyN{1});
    CHECK(g_poly(0) == PolyN{0, 1});
    CHECK(f_poly(1) == PolyN{1, 1});
    CHECK(g_poly(1) == PolyN{0, 2, 1});
    CHECK(f_poly(2) == PolyN{1, 3, 1});
    CHECK(h_poly(1) == PolyN{1, 2});
    CHECK(i_poly(1) == PolyN{0, 2});
    CHECK(i_poly(2) == PolyN{0, 3, 2});
    CHECK(h_poly(2) == PolyN{1, 5, 2});
    CHECK_THROWS(h_poly(0));
    CHECK_THROWS(i_poly(0));
    for (std::size_t n = 1; n <= 20; ++n) {
        CHECK(fg_by_recurrence(n) == std::pair{f_poly(n), g_poly(n)});
        CHECK(hi_by_recurrence(n) == std::pair{h_poly(n), i_poly(n)});
    }
}

TEST_CASE("left column of the v = 1 tree") {
    CHECK(left_column_polys(Word{}) == std::pair{PolyN{1}, PolyN{}});
    CHECK(left_column_polys(Word::parse("L")) == std::pair{PolyN{1}, PolyN{0, 1}});
    CHECK(left_column_polys(Word::parse("LRL")) == std::pair{f_poly(1), g_poly(1)});
    CHECK(left_column_polys(Word::parse("RLL")) == std::pair{h_poly(1), i_poly(1)});
}

TEST_CASE("Fibonacci polynomials and Pascal merge") {
    CHECK(fibonacci_poly(0).is_zero());
    CHECK(fibonacci_poly(1) == PolyN{1});
    CHECK(fibonacci_poly(2) == PolyN{0, 1});
    CHECK(fibonacci_poly(3) == PolyN{1, 0, 1});
    for (std::size_t n = 0; n <= 10; ++n) CHECK(f_poly(n).substitute_square() == fibonacci_poly(2 * n + 1));
    CHECK(pascal_merge_check(1, 2));
    CHECK(pascal_merge_check(2, 4));
    CHECK(pascal_merge_check(3, 6));
    CHECK_THROWS(pascal_merge_check(0, 2));
    CHECK_THROWS(pascal_merge_check(3, 3));
}

TEST_CASE("bivariate polynomials") {
    BiPolyN const f = BiPolyN::constant(1) + BiPolyN::monomial(2, 1, 1);
    CHECK(f.total_degree() == 2);
    CHECK(f.coeff(1, 1) == 2);
    CHECK(f.eval(2, 3) == 13);
    CHECK(f.has_offset_balance(0, 0));
    CHECK(f.times_y().has_offset_balance(0, 1));
    CHECK_FALSE(f.times_y().has_offset_balance(0, 0));
    CHECK(BiPolyN::monomial(1, 2, 0).swapped() == BiPolyN::monomial(1, 0, 2));
}
