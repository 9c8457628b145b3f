#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bellex/catalog.hpp"
#include "bellex/constructions.hpp"
#include "bellex/lhv.hpp"
#include "helpers.hpp"

using namespace bellex;
using testutil::h2;

TEST_CASE("sylvester") {
    CHECK(sylvester(0).order == 1);
    CHECK(sylvester(0).at(0, 0) == 1);
    CHECK(sylvester(1) == h2());
    const SignMatrix H8 = sylvester(3);
    CHECK(is_hadamard(H8));
    CHECK(lhv_core_value(core_from_sign_matrix(H8)) == 20);
}

TEST_CASE("paley") {
    CHECK(is_hadamard(paley_hadamard(3)));
    CHECK(is_hadamard(paley_hadamard(11)));
    CHECK(is_hadamard(paley_hadamard(19)));
    CHECK(lhv_core_value(core_from_sign_matrix(paley_hadamard(11))) == 36);
    CHECK_THROWS_AS(paley_hadamard(13), BellexError);  // 1 (mod 4)
    CHECK_THROWS_AS(paley_hadamard(15), BellexError);  // composite
}

TEST_CASE("circulant") {
    const SignMatrix C = circulant({-1, 1, 1, 1});
    CHECK(is_hadamard(C));
    for (int r = 0; r < 4; ++r) {
        int s = 0;
        for (int c = 0; c < 4; ++c) s += C.at(r, c);
        CHECK(s == 2);  // constant row sum
    }
    const SignMatrix S = circulant({0, -1, 1});
    CHECK(is_skew_type(S));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(S.at(r, c) == -S.at(c, r));
    CHECK(circulant({1}).order == 1);
    CHECK_THROWS_AS(circulant({2, 0}), BellexError);
}

TEST_CASE("fourier_square") {
    for (int q = 2; q <= 7; ++q) {
        const GameMatrix M = fourier_square(q);
        CHECK_FALSE(validate_symmetry(M, 1e-9).has_value());
        const int n = q * q;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                std::complex<double> g = 0;
                for (int k = 0; k < n; ++k) g += M.at(r, k) * std::conj(M.at(c, k));
                CHECK(std::abs(g - (r == c ? double(n) : 0.0)) < 1e-8);  // M M^dag = q^2 I
            }
    }
    // entry (s,x,t,y) = (1,1,1,1) at q=2: w^{1-1} = 1
    CHECK(fourier_square(2).xat(2 * 1 + 1, 2 * 1 + 1) == XComplex(Rat(1)));
}

TEST_CASE("gyni") {
    for (int q : {2, 3}) {
        const GameTensor S = gyni_tensor(q);
        const LhvResult r = lhv_value(game_matrix_from_tensor(S));
        // probability form: C = q, i.e. q^3 / q^2 under the matrix convention
        CHECK(r.value == doctest::Approx(q).epsilon(1e-9));
    }
    // transform equals fourier_square up to a -> -a and the q^2 scale
    for (int q = 2; q <= 5; ++q) {
        const GameMatrix F = fourier_square(q);
        GameTensor S = gyni_tensor(q);
        GameTensor relabeled(q, q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int x = 0; x < q; ++x)
                    for (int y = 0; y < q; ++y)
                        relabeled.at((q - a) % q, b, x, y) = S.at(a, b, x, y) * Rat(q * q);
        const GameMatrix M = game_matrix_from_tensor(relabeled);
        for (int r = 0; r < q * q; ++r)
            for (int c = 0; c < q * q; ++c) CHECK(std::abs(M.at(r, c) - F.at(r, c)) < 1e-9);
    }
}

TEST_CASE("predicates") {
    CHECK(is_hadamard(sylvester(2)));
    CHECK_FALSE(is_hadamard(circulant({1, 1})));
    SignMatrix C2(2);
    C2.at(0, 1) = 1;
    C2.at(1, 0) = 1;
    CHECK(is_conference(C2));
    CHECK_FALSE(is_conference(h2()));
    CHECK(weighing_weight(h2()) == 2);
    CHECK(weighing_weight(C2) == 1);
    CHECK_FALSE(weighing_weight(circulant({1, 1})).has_value());
    // skew-type Hadamard: Paley with diagonal normalized to +1
    SignMatrix P = paley_hadamard(3);
    for (int c = 0; c < 4; ++c) P.at(0, c) = static_cast<std::int8_t>(-P.at(0, c));
    CHECK(is_skew_type(P));
}

TEST_CASE("mquwm order-2 fixtures") {
    const auto alice = parse_catalogue_text(testutil::read_data_file("optimal_strategies/alice_m2.txt"),
                                            MatrixKind::Weighing);
    const auto bob = parse_catalogue_text(testutil::read_data_file("optimal_strategies/bob_m2.txt"),
                                          MatrixKind::Weighing);
    REQUIRE(alice.size() == 2);
    REQUIRE(bob.size() == 2);
    for (const auto& set : {alice, bob}) {
        const MquwmResult r = mquwm_check(set[0], set[1], 4);
        CHECK(r.ok);
        CHECK(r.l == 1);  // MQUWM(2,2,1,4)
    }
    // the self-pair works too (H2 H2^T = 2I), but not with mismatched a
    CHECK(mquwm_check(h2(), h2(), 4).ok);
    CHECK_FALSE(mquwm_check(h2(), h2(), 2).ok);
}

TEST_CASE("mquwm order-8 fixtures") {
    // The printed parameter set reads (8,8,16,4), but a weighing matrix of
    // order 8 cannot have weight 16; the product entries are 0, +-4, which
    // forces a = 16, l = 4.
    const auto alice = parse_catalogue_text(testutil::read_data_file("optimal_strategies/alice_m8.txt"),
                                            MatrixKind::Weighing);
    const auto bob = parse_catalogue_text(testutil::read_data_file("optimal_strategies/bob_m8.txt"),
                                          MatrixKind::Weighing);
    REQUIRE(alice.size() == 8);
    REQUIRE(bob.size() == 8);
    for (const auto& set : {alice, bob})
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = i + 1; j < 8; ++j) {
                const MquwmResult r = mquwm_check(set[i], set[j], 16);
                CHECK(r.ok);
                CHECK(r.l == 4);
                CHECK_FALSE(mquwm_check(set[i], set[j], 4).ok);
            }
}

TEST_CASE("listed optimal pairings evaluate to the maximal value 20") {
    const auto alice = parse_catalogue_text(testutil::read_data_file("optimal_strategies/alice_m8.txt"),
                                            MatrixKind::Weighing);
    const auto bob = parse_catalogue_text(testutil::read_data_file("optimal_strategies/bob_m8.txt"),
                                          MatrixKind::Weighing);
    const SignMatrix H8 = sylvester(3);
    std::istringstream in(testutil::read_data_file("optimal_strategies/pairings_m8.txt"));
    int i, j, k, l, count = 0;
    while (in >> i >> j >> k >> l) {
        long long v = 0;
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c)
                v += static_cast<long long>(alice[j - 1].at(i - 1, r)) * H8.at(r, c) *
                     bob[l - 1].at(k - 1, c);
        CHECK(v == 20);  // the LHV value of the Sylvester H8 game
        ++count;
    }
    CHECK(count == 64);
}

TEST_CASE("order-4 fixture matrices are Hadamard") {
    const auto alice = parse_catalogue_text(testutil::read_data_file("optimal_strategies/alice_m4.txt"),
                                            MatrixKind::Weighing);
    const auto bob = parse_catalogue_text(testutil::read_data_file("optimal_strategies/bob_m4.txt"),
                                          MatrixKind::Weighing);
    REQUIRE(alice.size() == 1);
    REQUIRE(bob.size() == 1);
    CHECK(is_hadamard(alice[0]));
    CHECK(is_hadamard(bob[0]));
}
