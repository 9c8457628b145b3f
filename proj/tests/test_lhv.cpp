#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "bellex/catalog.hpp"
#include "bellex/constructions.hpp"
#include "bellex/lhv.hpp"
#include "helpers.hpp"

using namespace bellex;
using testutil::chsh;
using testutil::h2;

TEST_CASE("evaluate on worked cases") {
    const GameMatrix M = chsh();
    Strategy allplus{{0, 0}, {0, 0}};
    CHECK(evaluate_exact(M, allplus) == Rat(2));
    CHECK(evaluate(M, allplus) == doctest::Approx(2.0));
    // all-plus always evaluates to the excess
    CHECK(evaluate_exact(fourier_square(4), Strategy{{0, 0, 0, 0}, {0, 0, 0, 0}}) ==
          excess_exact(fourier_square(4)));
    // a_x = w^x, b_y = w^{-y} saturates the fourier-square family
    for (int q : {2, 3, 4}) {
        Strategy s;
        for (int i = 0; i < q; ++i) {
            s.alice.push_back(static_cast<std::uint8_t>(i));
            s.bob.push_back(static_cast<std::uint8_t>((q - i) % q));
        }
        CHECK(evaluate(fourier_square(q), s) == doctest::Approx(q * q * q).epsilon(1e-9));
    }
}

TEST_CASE("worked LHV values") {
    CHECK(lhv_value(chsh()).value_exact == Rat(2));
    CHECK(lhv_value(embed_core(core_from_sign_matrix(circulant({0, -1, 1})))).value_exact ==
          Rat(4));
    CHECK(lhv_value(embed_core(core_from_sign_matrix(circulant({-1, 1, 1, 1})))).value_exact ==
          Rat(8));
    CHECK(lhv_value(fourier_square(3)).value == doctest::Approx(27.0).epsilon(1e-9));
    CHECK(lhv_value(fourier_square(4)).value_exact == Rat(64));
}

TEST_CASE("witness strategies reproduce the reported value") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 10; ++it) {
        const GameMatrix M = game_matrix_from_tensor(testutil::random_tensor(3, 2, rng));
        const LhvResult r = lhv_value(M);
        CHECK(evaluate_exact(M, r.witness) == r.value_exact);
    }
}

TEST_CASE("brute-force oracle equivalence, q in {2,3}, m <= 3") {
    std::mt19937_64 rng(17);
    for (int q : {2, 3})
        for (int m : {1, 2, 3})
            for (int it = 0; it < 12; ++it) {
                const GameMatrix M = game_matrix_from_tensor(testutil::random_tensor(m, q, rng));
                const LhvResult r = lhv_value(M);
                if (M.exact()) {
                    CHECK(testutil::brute_force_value_exact(M) == r.value_exact);
                } else {
                    CHECK(testutil::brute_force_value(M) == doctest::Approx(r.value).epsilon(1e-9));
                }
            }
}

TEST_CASE("gray-code path matches naive re-evaluation") {
    std::mt19937_64 rng(23);
    for (int m : {2, 4, 6}) {
        const GameMatrix M = game_matrix_from_tensor(testutil::random_tensor(m, 2, rng));
        const LhvResult a = lhv_value(M), b = lhv_value_naive(M);
        CHECK(a.value_exact == b.value_exact);
        CHECK(a.witness == b.witness);
    }
    for (int m : {2, 3}) {
        const GameMatrix M = game_matrix_from_tensor(testutil::random_tensor(m, 3, rng));
        const LhvResult a = lhv_value(M), b = lhv_value_naive(M);
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("thread count does not change the result") {
    std::mt19937_64 rng(29);
    const GameMatrix M = game_matrix_from_tensor(testutil::random_tensor(6, 2, rng));
    LhvConfig c1, c4;
    c1.threads = 1;
    c4.threads = 4;
    const LhvResult r1 = lhv_value(M, c1), r4 = lhv_value(M, c4);
    CHECK(r1.value_exact == r4.value_exact);
    CHECK(r1.witness == r4.witness);
}

TEST_CASE("q=2 correlation fast path agrees with the generic path") {
    std::mt19937_64 rng(31);
    for (int n = 2; n <= 8; ++n) {
        SignMatrix H(n);
        for (auto& v : H.v) v = rng() & 1 ? 1 : -1;
        const CorrelationCore core = core_from_sign_matrix(H);
        const LhvResult generic = lhv_value(embed_core(core));
        CHECK(Rat(static_cast<long>(lhv_core_value(core))) == generic.value_exact);
    }
}

TEST_CASE("optimizer enumeration") {
    const auto opts = enumerate_optimizers(chsh());
    CHECK(opts.size() == 8);  // 4 vertices, both joint-flip representatives
    std::set<std::vector<int>> vertices;
    for (const auto& s : opts) {
        CHECK(evaluate_exact(chsh(), s) == Rat(2));
        std::vector<int> v;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                v.push_back((s.alice[x] + s.bob[y]) % 2 ? -1 : 1);
        vertices.insert(v);
    }
    CHECK(vertices.size() == 4);

    // J2 core: oracle comparison over all 16 pairs
    SignMatrix J(2);
    for (auto& v : J.v) v = 1;
    const GameMatrix M = embed_core(core_from_sign_matrix(J));
    const auto jopts = enumerate_optimizers(M);
    std::set<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>> got;
    for (const auto& s : jopts) got.insert({s.alice, s.bob});
    int expected = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Strategy s{{std::uint8_t(a & 1), std::uint8_t(a >> 1)},
                       {std::uint8_t(b & 1), std::uint8_t(b >> 1)}};
            if (evaluate_exact(M, s) == Rat(4)) {
                ++expected;
                CHECK(got.count({s.alice, s.bob}) == 1);
            }
        }
    CHECK(static_cast<int>(jopts.size()) == expected);
}

TEST_CASE("budget refusal") {
    SignMatrix H(10);
    for (auto& v : H.v) v = 1;
    LhvConfig cfg;
    cfg.enum_budget = 16;
    CHECK_THROWS_AS(lhv_value(embed_core(core_from_sign_matrix(H)), cfg), BudgetExceeded);
    LhvConfig cap;
    cap.optimizer_cap = 2;
    CHECK_THROWS_AS(enumerate_optimizers(chsh(), cap), BudgetExceeded);
}

TEST_CASE("normalize_to_allplus") {
    // fourier-square optimizer (w^x, w^{-y}) -> constant row sum Gamma = q
    for (int q : {2, 4}) {
        Strategy s;
        for (int i = 0; i < q; ++i) {
            s.alice.push_back(static_cast<std::uint8_t>(i));
            s.bob.push_back(static_cast<std::uint8_t>((q - i) % q));
        }
        const GameMatrix N = normalize_to_allplus(fourier_square(q), s);
        const auto g = constant_row_sum(N);
        REQUIRE(g.has_value());
        CHECK(g->real() == doctest::Approx(q));
        CHECK(excess_exact(N) == Rat(static_cast<long>(q) * q * q));
    }
    // CHSH is already all-plus optimal
    const GameMatrix M = chsh();
    const GameMatrix N = normalize_to_allplus(M, Strategy{{0, 0}, {0, 0}});
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(N.xat(r, c) == M.xat(r, c));
    // circ[0,-1,1] with a solver witness -> excess 4
    const GameMatrix E = embed_core(core_from_sign_matrix(circulant({0, -1, 1})));
    const GameMatrix NE = normalize_to_allplus(E, lhv_value(E).witness);
    CHECK(excess_exact(NE) == Rat(4));
    // a non-optimal strategy is rejected
    CHECK_THROWS_AS(normalize_to_allplus(E, Strategy{{0, 0, 0}, {0, 0, 0}}), BellexError);
}

TEST_CASE("tensor products multiply the excess") {
    const GameMatrix M = chsh();
    const GameMatrix P = tensor_game(M, M);
    CHECK(P.n() == 16);
    CHECK_FALSE(validate_symmetry(P).has_value());
    CHECK(excess_exact(P) == excess_exact(M) * excess_exact(M));
    // The product game is the order-4 Hadamard correlation game plus dead
    // settings; its value is 8, not the product of values 4 (the product
    // game's phase freedom is per new setting, strictly larger than a
    // product of the factors' phase choices). Verified against the full
    // 2^16-pair brute force below.
    CHECK(lhv_value(P).value_exact == Rat(8));
    CHECK(testutil::brute_force_value_exact(P) == Rat(8));

    std::mt19937_64 rng(41);
    for (int it = 0; it < 5; ++it) {
        const GameMatrix A = game_matrix_from_tensor(testutil::random_tensor(2, 2, rng, -2, 2));
        const GameMatrix B = game_matrix_from_tensor(testutil::random_tensor(2, 2, rng, -2, 2));
        CHECK(excess_exact(tensor_game(A, B)) == excess_exact(A) * excess_exact(B));
    }
    CHECK_THROWS_AS(tensor_game(chsh(), fourier_square(3)), BellexError);   // differing q
    CHECK_THROWS_AS(tensor_game(fourier_square(4), fourier_square(4)), BellexError);  // complex factor
}

TEST_CASE("lhv_value is bounded below by the excess") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 10; ++it) {
        const GameMatrix M = game_matrix_from_tensor(testutil::random_tensor(3, 2, rng));
        CHECK(lhv_value(M).value_exact >= excess_exact(M));
    }
}
