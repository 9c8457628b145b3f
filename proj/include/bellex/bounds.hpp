#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "bellex/game.hpp"

namespace bellex {

struct BestBounds {
    Rat lower_exact;   // n^2 2^{-n} C(n, n/2), exact up to n = 512
    double lower = 0;
    double upper = 0;  // n sqrt(n)
};

/// Excess bounds for Hadamard matrices of even order n.
BestBounds best_bounds(int n);

/// Eigenvalues of a Hermitian matrix (ascending) by cyclic Jacobi sweeps;
/// off-diagonal Frobenius norm reduced below 1e-12 * ||H||_F.
std::vector<double> hermitian_eigen(const std::vector<std::complex<double>>& H, int n);

double spectral_norm(const std::vector<std::complex<double>>& M, int n);
/// Spectral radius; available only for normal matrices (where it equals the
/// spectral norm), nullopt otherwise.
std::optional<double> spectral_radius(const std::vector<std::complex<double>>& M, int n,
                                      double tol = 1e-9);

/// Numerical radius r(M) = max_theta lambda_max((e^{i theta} M + h.c.)/2),
/// 720-point grid plus golden-section refinement to absolute tolerance tol.
double numerical_radius(const std::vector<std::complex<double>>& M, int n, double tol = 1e-6);

/// nu(M) = sqrt(sum_i |row_i sum|^2).
double nu(const std::vector<std::complex<double>>& M, int n);

struct NuSaturation {
    bool saturated = false;
    std::optional<std::complex<double>> row_sum;  // Gamma when saturated
};
NuSaturation nu_saturated(const GameMatrix& M, double tol = 1e-9);

struct BoundsReport {
    int n = 0;
    std::optional<double> best_lower, best_upper;  // Hadamard context only
    double radius = 0, radius_bound = 0;           // r, n r
    double nu_value = 0, nu_bound = 0;             // nu, sqrt(n) nu
    double sigma = 0, sigma_bound = 0;             // sigma, n sigma
    std::optional<double> rho;
    bool saturated = false;
    std::optional<std::complex<double>> gamma;     // signed; bound uses n |Gamma|
    bool normalized_input = false;                 // bounds taken on M as given
};

BoundsReport compute_bounds(const GameMatrix& M, double tol = 1e-9);

/// Observables with q-th roots of unity as eigenvalues; the largest
/// eigenvalue of the Bell operator sum M_{ms+x,mt+y} A_x^s (x) B_y^t.
double quantum_witness(const GameMatrix& M,
                       const std::vector<std::vector<std::complex<double>>>& alice,
                       const std::vector<std::vector<std::complex<double>>>& bob,
                       int dim, double tol = 1e-8);

struct ExcessFormula {
    long long order = 0;
    long long excess = 0;
};

/// Maximal excess 4(k-1)^2(2k+1) at order 4k(k-1), k = 0 or 2 (mod 4).
ExcessFormula jkks_excess(long long k);

/// Conference-matrix excess bound at order n (exact rational value).
Rat conference_excess_bound(long long n);

/// Maximal excess of the quadratic-residue Hadamard matrix of order l+1,
/// l = (2m+1)^2 + 2 a prime power.
ExcessFormula hs18_excess(long long l);

}  // namespace bellex
