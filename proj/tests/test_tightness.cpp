#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bellex/catalog.hpp"
#include "bellex/constructions.hpp"
#include "bellex/tightness.hpp"
#include "helpers.hpp"

using namespace bellex;
using testutil::h2;

TEST_CASE("CHSH vertices") {
    const auto vs = collect_vertices(core_from_sign_matrix(h2()));
    CHECK(vs.size() == 4);
    std::set<std::vector<int>> got;
    for (const auto& v : vs) {
        std::vector<int> flat;
        for (int i = 0; i < 4; ++i) flat.push_back(v.sign(i));
        got.insert(flat);
    }
    const std::set<std::vector<int>> expect = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {-1, 1, 1, -1}};
    // expected set quoted up to the joint flip; canonicalize both sides on v_00 = +1
    auto canon = [](std::vector<int> v) {
        if (v[0] < 0)
            for (int& s : v) s = -s;
        return v;
    };
    std::set<std::vector<int>> a, b;
    for (auto v : got) a.insert(canon(v));
    for (auto v : expect) b.insert(canon(v));
    CHECK(a == b);
    CHECK(affine_rank(vs) == 3);
}

TEST_CASE("regular order-4 class") {
    const TightnessReport r = tightness_report(core_from_sign_matrix(circulant({-1, 1, 1, 1})));
    CHECK(r.lhv == 8);
    CHECK(r.vertex_count == 4);
    CHECK(r.affine_rank == 3);
    CHECK_FALSE(r.tight);
    CHECK(r.regular_equivalent);
    // equivalence class invariance: Sylvester H4 gives the same numbers
    const TightnessReport s = tightness_report(core_from_sign_matrix(sylvester(2)));
    CHECK(s.vertex_count == r.vertex_count);
    CHECK(s.affine_rank == r.affine_rank);
}

TEST_CASE("order 8 and 12 rows") {
    const TightnessReport r8 = tightness_report(core_from_sign_matrix(sylvester(3)));
    CHECK(r8.vertex_count == 64);
    CHECK(r8.affine_rank == 63);
    CHECK(r8.tight);
    CHECK_FALSE(r8.regular_equivalent);

    const TightnessReport r12 = tightness_report(core_from_sign_matrix(paley_hadamard(11)));
    CHECK(r12.lhv == 36);
    CHECK(r12.vertex_count == 2640);
    CHECK(r12.affine_rank == 143);
    CHECK(r12.tight);
}

TEST_CASE("every vertex attains the LHV value") {
    const CorrelationCore core = core_from_sign_matrix(sylvester(3));
    const long long C = lhv_core_value(core);
    for (const auto& v : collect_vertices(core)) {
        long long val = 0;
        for (int x = 0; x < 8; ++x)
            for (int y = 0; y < 8; ++y) val += core.iat(x, y) * v.sign(x * 8 + y);
        CHECK(val == C);
    }
}

TEST_CASE("vertex count invariant under core equivalences") {
    std::mt19937_64 rng(67);
    const SignMatrix H = sylvester(3);
    const auto base = collect_vertices(core_from_sign_matrix(H)).size();
    for (int it = 0; it < 5; ++it) {
        SignMatrix G = H;
        // random row/column permutations and sign flips
        std::vector<int> rp(8), cp(8);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        std::vector<int> rs(8), cs(8);
        for (int i = 0; i < 8; ++i) {
            rs[i] = rng() & 1 ? -1 : 1;
            cs[i] = rng() & 1 ? -1 : 1;
        }
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c)
                G.at(r, c) = static_cast<std::int8_t>(rs[r] * cs[c] * H.at(rp[r], cp[c]));
        CHECK(collect_vertices(core_from_sign_matrix(G)).size() == base);
    }
}

TEST_CASE("affine rank basics") {
    Vertex v;
    v.len = 4;
    v.bits = {0};
    CHECK(affine_rank({v}) == 0);
    Vertex w = v;
    w.bits = {0b0101};
    CHECK(affine_rank({v, w}) == 1);
    CHECK(affine_rank({v, w}, 0) == 0);  // early-exit cap respected
    CHECK_THROWS_AS(affine_rank({}), BellexError);
}

TEST_CASE("budget propagation") {
    LhvConfig cfg;
    cfg.enum_budget = 4;
    CHECK_THROWS_AS(collect_vertices(core_from_sign_matrix(sylvester(3)), cfg), BudgetExceeded);
}
