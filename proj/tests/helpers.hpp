#pragma once

#include <fstream>
#include <random>
#include <sstream>

#include "bellex/constructions.hpp"
#include "bellex/game.hpp"
#include "bellex/lhv.hpp"

namespace testutil {

using namespace bellex;

inline SignMatrix h2() {
    SignMatrix H(2);
    H.at(0, 0) = 1;
    H.at(0, 1) = 1;
    H.at(1, 0) = 1;
    H.at(1, 1) = -1;
    return H;
}

inline GameMatrix chsh() { return embed_core(core_from_sign_matrix(h2())); }

// random integer tensor -> symmetric game matrix (exact for q in {2,4})
inline GameTensor random_tensor(int m, int q, std::mt19937_64& rng, int lo = -3, int hi = 3) {
    GameTensor S(m, q);
    std::uniform_int_distribution<int> d(lo, hi);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) S.at(a, b, x, y) = Rat(d(rng));
    return S;
}

// independent oracle: full enumeration over all q^{2m} strategy pairs using
// only evaluate()/evaluate_exact()
inline double brute_force_value(const GameMatrix& M) {
    const int m = M.m(), q = M.q();
    std::uint64_t total = 1;
    for (int i = 0; i < 2 * m; ++i) total *= q;
    double best = 0;
    bool any = false;
    Strategy s;
    s.alice.resize(m);
    s.bob.resize(m);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (int i = 0; i < m; ++i) {
            s.alice[i] = static_cast<std::uint8_t>(v % q);
            v /= q;
        }
        for (int i = 0; i < m; ++i) {
            s.bob[i] = static_cast<std::uint8_t>(v % q);
            v /= q;
        }
        const double val = evaluate(M, s);
        if (!any || val > best) {
            any = true;
            best = val;
        }
    }
    return best;
}

inline Rat brute_force_value_exact(const GameMatrix& M) {
    const int m = M.m(), q = M.q();
    std::uint64_t total = 1;
    for (int i = 0; i < 2 * m; ++i) total *= q;
    Rat best;
    bool any = false;
    Strategy s;
    s.alice.resize(m);
    s.bob.resize(m);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (int i = 0; i < m; ++i) {
            s.alice[i] = static_cast<std::uint8_t>(v % q);
            v /= q;
        }
        for (int i = 0; i < m; ++i) {
            s.bob[i] = static_cast<std::uint8_t>(v % q);
            v /= q;
        }
        const Rat val = evaluate_exact(M, s);
        if (!any || val > best) {
            any = true;
            best = val;
        }
    }
    return best;
}

inline std::string read_data_file(const std::string& rel) {
    std::ifstream in(std::string(BELLEX_DATA_DIR) + "/" + rel);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace testutil
