#pragma once

#include <cstdint>
#include <vector>

#include "bellex/game.hpp"
#include "bellex/lhv.hpp"

namespace bellex {

/// Correlation vertex for q = 2: the +-1 vector v_{xy} = a_x b_y of length
/// m^2, bit-packed (bit set = -1), canonical under the joint flip via a_0 = +1.
struct Vertex {
    std::vector<std::uint64_t> bits;
    int len = 0;

    int sign(int i) const {
        return (bits[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1 ? -1 : 1;
    }
    bool operator==(const Vertex&) const = default;
};

/// All distinct optimal correlation vectors of a q = 2 correlation core.
/// Exact integer arithmetic; Alice enumerated with a_0 = +1, Bob signs forced
/// by nonzero column sums and expanded on zero ones.
std::vector<Vertex> collect_vertices(const CorrelationCore& core, const LhvConfig& cfg = {});

/// Exact rank over Q of {v_i - v_0}, fraction-free integer elimination with
/// arbitrary-precision entries; max_rank (when >= 0) allows early exit at a
/// proven cap. Cross-checked internally modulo two random 31-bit primes.
int affine_rank(const std::vector<Vertex>& vertices, int max_rank = -1);

struct TightnessReport {
    int m = 0;
    long long lhv = 0;            // C of the unscaled integer core
    std::uint64_t vertex_count = 0;
    int affine_rank = 0;
    bool tight = false;           // affine_rank == m^2 - 1
    bool regular_equivalent = false;  // C^2 == m^3
};

TightnessReport tightness_report(const CorrelationCore& core, const LhvConfig& cfg = {});

}  // namespace bellex
