#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bellex/game.hpp"

namespace bellex {

/// Square matrix over {-1, 0, +1}; 0 only for conference/weighing kinds.
struct SignMatrix {
    int order = 0;
    std::vector<std::int8_t> v;

    SignMatrix() = default;
    explicit SignMatrix(int n) : order(n), v(static_cast<std::size_t>(n) * n, 0) {}

    std::int8_t at(int r, int c) const { return v[r * order + c]; }
    std::int8_t& at(int r, int c) { return v[r * order + c]; }

    SignMatrix transpose() const;
    bool operator==(const SignMatrix&) const = default;
};

SignMatrix sylvester(int k);                       // order 2^k
SignMatrix paley_hadamard(long long ell);          // ell prime, 3 (mod 4)
SignMatrix circulant(const std::vector<int>& first_row);

/// Hermitian Fourier-square game of order q^2: M_{qs+x,qt+y} = omega^{xt-sy}.
GameMatrix fourier_square(int q);

/// Guess Your Neighbour's Input: S^{ab}_{xy} = 1 iff x = b and y = a.
GameTensor gyni_tensor(int q);

bool is_hadamard(const SignMatrix& M);
bool is_conference(const SignMatrix& M);
bool is_skew_type(const SignMatrix& M);
std::optional<long long> weighing_weight(const SignMatrix& W);

/// Interprets a +/-1 sign matrix as the q = 2 correlation core of a game.
CorrelationCore core_from_sign_matrix(const SignMatrix& H);

struct MquwmParams {
    long long m = 0, k = 0, l = 0, a = 0;  // l = k^2 / a
};

struct MquwmResult {
    bool ok = false;
    long long l = 0;
    std::string reason;
};

/// Integer-exact check that (1/sqrt(a)) W1 W2^T is a weighing matrix of
/// weight k^2/a: the Hadamard square of W1 W2^T has entries in {0, a} and
/// (1/a)(W1 W2^T)(W1 W2^T)^T = l I.
MquwmResult mquwm_check(const SignMatrix& W1, const SignMatrix& W2, long long a);

}  // namespace bellex
