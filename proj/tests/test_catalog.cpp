#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bellex/catalog.hpp"
#include "bellex/constructions.hpp"
#include "helpers.hpp"

using namespace bellex;
using testutil::h2;

TEST_CASE("catalogue text parsing") {
    const auto one = parse_catalogue_text("++\n+-\n");
    REQUIRE(one.size() == 1);
    CHECK(one[0] == h2());

    const auto two = parse_catalogue_text("++\n+-\n\n+-\n++\n", MatrixKind::Any);
    CHECK(two.size() == 2);

    CHECK_THROWS_AS(parse_catalogue_text("++\n++\n"), BellexError);   // not orthogonal
    CHECK_THROWS_AS(parse_catalogue_text("++\n+\n"), BellexError);    // ragged
    CHECK_THROWS_AS(parse_catalogue_text("+x\n++\n"), BellexError);   // invalid character
    CHECK_THROWS_AS(parse_catalogue_text("+0\n0+\n"), BellexError);   // '0' in Hadamard kind
    CHECK(parse_catalogue_text("+0\n0+\n", MatrixKind::Weighing).size() == 1);

    const auto shipped = parse_catalogue_text(testutil::read_data_file("catalogue/had.12.0.txt"));
    REQUIRE(shipped.size() == 1);
    CHECK(shipped[0].order == 12);
}

TEST_CASE("builtin entries") {
    CHECK(builtin(2, 0).matrix == h2());
    CHECK(builtin(1, 0).matrix.order == 1);
    for (const auto& [order, index] : builtin_keys()) {
        const auto& e = builtin(order, index);
        CHECK(e.order == order);
        CHECK(e.source == "embedded");
        CHECK(is_hadamard(e.matrix));
    }
    const std::vector<std::pair<int, int>> expect = {{1, 0}, {2, 0},  {4, 0},  {8, 0},
                                                     {12, 0}, {16, 0}, {16, 1}, {16, 2},
                                                     {16, 3}, {16, 4}, {20, 0}, {20, 1}, {20, 2}};
    CHECK(builtin_keys() == expect);
    CHECK_THROWS_AS(builtin(6, 0), BellexError);
    CHECK_THROWS_AS(builtin(16, 5), BellexError);
}

TEST_CASE("regular-equivalence detection") {
    CHECK(detect_regular_equivalent(circulant({-1, 1, 1, 1})));
    CHECK_FALSE(detect_regular_equivalent(h2()));
    CHECK(detect_regular_equivalent(builtin(4, 0).matrix));
    int regular16 = 0;
    for (int i = 0; i < 5; ++i)
        regular16 += detect_regular_equivalent(builtin(16, i).matrix);
    CHECK(regular16 == 3);  // three regular classes at order 16
    for (int i = 0; i < 3; ++i) CHECK_FALSE(detect_regular_equivalent(builtin(20, i).matrix));
    // regular implies square order
    for (const auto& [order, index] : builtin_keys())
        if (detect_regular_equivalent(builtin(order, index).matrix)) {
            int r = 1;
            while (r * r < order) ++r;
            CHECK(r * r == order);
        }
}
