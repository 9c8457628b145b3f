#pragma once

#include <string>
#include <vector>

#include "bellex/constructions.hpp"
#include "bellex/lhv.hpp"

namespace bellex {

enum class MatrixKind { Hadamard, Weighing, Any };

/// Plain-text catalogue format: lines over {+,-,0}, equal length, blank lines
/// separating matrices.
std::vector<SignMatrix> parse_catalogue_text(const std::string& text,
                                             MatrixKind kind = MatrixKind::Hadamard);

struct CatalogEntry {
    int order = 0;
    int index = 0;
    SignMatrix matrix;
    std::string source;  // "embedded" or a file path
};

/// Embedded representatives: orders {1,2,4,8,12} index 0, order 16 indices
/// 0..4 (one per equivalence class), order 20 indices 0..2.
const CatalogEntry& builtin(int order, int index);

std::vector<std::pair<int, int>> builtin_keys();

/// True iff the equivalence class of H contains a constant-row-sum
/// representative: the LHV value of the embedded correlation game saturates
/// Best's upper bound (integer test C^2 = n^3).
bool detect_regular_equivalent(const SignMatrix& H, const LhvConfig& cfg = {});

}  // namespace bellex
