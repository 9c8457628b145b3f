#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <vector>

#include "bellex/exact.hpp"

namespace bellex {

struct BellexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coefficients S^{ab}_{xy} of a Bell expression in probability form.
/// m settings per party, q outcomes per setting, exact rational storage.
class GameTensor {
public:
    GameTensor(int m, int q);

    int m() const { return m_; }
    int q() const { return q_; }

    Rat& at(int a, int b, int x, int y) { return c_[idx(a, b, x, y)]; }
    const Rat& at(int a, int b, int x, int y) const { return c_[idx(a, b, x, y)]; }

    bool operator==(const GameTensor&) const = default;

private:
    std::size_t idx(int a, int b, int x, int y) const;
    int m_, q_;
    std::vector<Rat> c_;
};

/// Matrix form of a bipartite game: order n = m q, composite index
/// (s, x) -> m s + x. Entries exact (rational pairs) when the q-th roots of
/// unity live in Q(i), i.e. q in {1,2,4}; otherwise double pairs.
class GameMatrix {
public:
    GameMatrix(int m, int q, bool exact);

    int m() const { return m_; }
    int q() const { return q_; }
    int n() const { return m_ * q_; }
    bool exact() const { return exact_; }

    const std::complex<double>& at(int r, int c) const { return f_[r * n() + c]; }
    const XComplex& xat(int r, int c) const { return x_[r * n() + c]; }

    void set(int r, int c, XComplex v);                 // exact repr only
    void set(int r, int c, std::complex<double> v);     // float repr only

    const std::vector<std::complex<double>>& floats() const { return f_; }

private:
    int m_, q_;
    bool exact_;
    std::vector<XComplex> x_;               // populated iff exact
    std::vector<std::complex<double>> f_;   // always populated
};

/// Core of a correlation game: the submatrix with row/column >= m, of order
/// m (q - 1). For q = 2 the entries are integers after clearing the positive
/// rational scale factor; entry = scale * ints[...].
struct CorrelationCore {
    int m = 0, q = 2;
    Rat scale = 1;
    std::vector<long long> ints;                 // q == 2 exact cores
    std::vector<std::complex<double>> floats;    // other cores
    bool integer_repr = true;

    int order() const { return m * (q - 1); }
    long long iat(int r, int c) const { return ints[r * order() + c]; }
};

/// Relabeling of inputs and outputs: setting permutations plus one outcome
/// permutation per setting per party.
struct Relabeling {
    std::vector<int> x_perm, y_perm;               // size m
    std::vector<std::vector<int>> a_perm, b_perm;  // m permutations of size q

    static Relabeling identity(int m, int q);
};

struct SymmetryViolation {
    std::pair<int, int> index_a, index_b;
    double magnitude = 0;
};

/// Checks the conjugation symmetry M_{m[q-s]+x, m[q-t]+y} = conj(M_{ms+x,mt+y})
/// and the real-block mask (s,t in {0, q/2} for even q; (0,0) block for odd q).
std::optional<SymmetryViolation> validate_symmetry(const GameMatrix& M, double tol = 1e-9);

GameMatrix game_matrix_from_tensor(const GameTensor& S);
GameTensor tensor_from_game_matrix(const GameMatrix& M, double tol = 1e-9);

Rat excess_exact(const GameMatrix& M);
double excess(const GameMatrix& M);
Rat excess_exact(const CorrelationCore& core);

bool is_correlation_matrix(const GameMatrix& M, double tol = 1e-9);
CorrelationCore core_of(const GameMatrix& M, double tol = 1e-9);
GameMatrix embed_core(const CorrelationCore& core);

/// Common row sum, when all n row sums agree exactly (exact repr) or within
/// tol (float repr).
std::optional<std::complex<double>> constant_row_sum(const GameMatrix& M, double tol = 1e-9);

GameTensor apply_relabeling(const GameTensor& S, const Relabeling& r);

// Text formats. Matrix: header "n m q", then n rows of n entries, entry "R"
// or "R,I" with decimal or p/q components; '#' starts a comment line.
// Tensor: header "m q", then one "a b x y value" line per coefficient.
GameMatrix read_game_matrix(std::istream& in);
void write_game_matrix(std::ostream& out, const GameMatrix& M);
GameTensor read_game_tensor(std::istream& in);
void write_game_tensor(std::ostream& out, const GameTensor& S);

}  // namespace bellex
