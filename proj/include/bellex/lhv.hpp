#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bellex/game.hpp"

namespace bellex {

/// Deterministic local strategy: exponent vectors in Z_q^m, a_x = omega^alice[x].
struct Strategy {
    std::vector<std::uint8_t> alice, bob;
    bool operator==(const Strategy&) const = default;
};

struct LhvConfig {
    int threads = 0;                          // 0: runtime default
    std::uint64_t enum_budget = 1ull << 26;   // max Alice states q^m
    std::uint64_t optimizer_cap = 1ull << 22;
    double tie_tol = 1e-7;                    // relative, float games only
};

/// Raised instead of silently truncating the search.
struct BudgetExceeded : BellexError {
    BudgetExceeded(const std::string& what, std::uint64_t required)
        : BellexError(what), required(required) {}
    std::uint64_t required;
};

struct LhvResult {
    double value = 0;
    Rat value_exact;         // meaningful iff exact
    bool exact = false;
    Strategy witness;
    std::optional<std::uint64_t> optimizer_count;
};

double evaluate(const GameMatrix& M, const Strategy& s);
Rat evaluate_exact(const GameMatrix& M, const Strategy& s);

/// Max over all q^{2m} strategies via Alice enumeration with per-setting Bob
/// best response. Gray-code incremental updates; OpenMP over contiguous
/// segments with a deterministic merge.
LhvResult lhv_value(const GameMatrix& M, const LhvConfig& cfg = {});

/// Serial reference: same search, objective recomputed from scratch per state.
LhvResult lhv_value_naive(const GameMatrix& M, const LhvConfig& cfg = {});

/// All strategies attaining the maximum (Bob ties expanded per setting).
std::vector<Strategy> enumerate_optimizers(const GameMatrix& M, const LhvConfig& cfg = {});

/// Phase-conjugates M by an optimal strategy so that all-plus is optimal and
/// excess(M') equals the LHV value. Rejects non-optimal s.
GameMatrix normalize_to_allplus(const GameMatrix& M, const Strategy& s,
                                const LhvConfig& cfg = {});

/// Kronecker product game; requires equal q and real M2.
GameMatrix tensor_game(const GameMatrix& M1, const GameMatrix& M2, double tol = 1e-9);

/// q = 2 correlation-core fast path: C = max_a sum_y |sum_x core_{xy} a_x|
/// over the unscaled integer core. Used by tightness and the catalog.
long long lhv_core_value(const CorrelationCore& core, const LhvConfig& cfg = {});

}  // namespace bellex
