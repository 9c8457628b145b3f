#include "bellex/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace bellex {

namespace {

double frob(const std::vector<std::complex<double>>& A) {
    double s = 0;
    for (const auto& v : A) s += std::norm(v);
    return std::sqrt(s);
}

}  // namespace

BestBounds best_bounds(int n) {
    if (n < 2 || n % 2 != 0) throw BellexError("best_bounds requires even n >= 2");
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2));
    mpz_class pow2 = 1;
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), static_cast<unsigned long>(n));
    BestBounds b;
    b.lower_exact = Rat(mpz_class(n) * n * binom, pow2);
    b.lower_exact.canonicalize();
    b.lower = b.lower_exact.get_d();
    b.upper = static_cast<double>(n) * std::sqrt(static_cast<double>(n));
    return b;
}

std::vector<double> hermitian_eigen(const std::vector<std::complex<double>>& H, int n) {
    if (static_cast<int>(H.size()) != n * n) throw BellexError("hermitian_eigen: bad size");
    const double scale = frob(H);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (std::abs(H[r * n + c] - std::conj(H[c * n + r])) > 1e-8 * (1.0 + scale))
                throw BellexError("hermitian_eigen: input not Hermitian");

    std::vector<std::complex<double>> A = H;
    auto at = [&](int r, int c) -> std::complex<double>& { return A[r * n + c]; };
    const double target = 1e-12 * (scale > 0 ? scale : 1.0);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c) off += 2.0 * std::norm(at(r, c));
        if (std::sqrt(off) < target) break;
        for (int p = 0; p < n; ++p)
            for (int qi = p + 1; qi < n; ++qi) {
                const std::complex<double> apq = at(p, qi);
                if (std::abs(apq) == 0) continue;
                const double app = at(p, p).real(), aqq = at(qi, qi).real();
                const double phi = std::arg(apq);
                const double theta = 0.5 * std::atan2(2.0 * std::abs(apq), app - aqq);
                const double c = std::cos(theta);
                const std::complex<double> s = std::sin(theta) * std::exp(std::complex<double>(0, -phi));
                for (int k = 0; k < n; ++k) {  // columns: A <- A R
                    const std::complex<double> akp = at(k, p), akq = at(k, qi);
                    at(k, p) = c * akp + s * akq;
                    at(k, qi) = -std::conj(s) * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {  // rows: A <- R^dag A
                    const std::complex<double> apk = at(p, k), aqk = at(qi, k);
                    at(p, k) = c * apk + std::conj(s) * aqk;
                    at(qi, k) = -s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = at(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

double spectral_norm(const std::vector<std::complex<double>>& M, int n) {
    if (static_cast<int>(M.size()) != n * n) throw BellexError("spectral_norm: bad size");
    std::vector<std::complex<double>> G(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            std::complex<double> s = 0;
            for (int k = 0; k < n; ++k) s += M[r * n + k] * std::conj(M[c * n + k]);
            G[r * n + c] = s;
        }
    const auto ev = hermitian_eigen(G, n);
    return std::sqrt(std::max(0.0, ev.back()));
}

std::optional<double> spectral_radius(const std::vector<std::complex<double>>& M, int n,
                                      double tol) {
    if (static_cast<int>(M.size()) != n * n) throw BellexError("spectral_radius: bad size");
    // normality check: || M M^dag - M^dag M ||_F
    double dev = 0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            std::complex<double> a = 0, b = 0;
            for (int k = 0; k < n; ++k) {
                a += M[r * n + k] * std::conj(M[c * n + k]);
                b += std::conj(M[k * n + r]) * M[k * n + c];
            }
            dev += std::norm(a - b);
        }
    const double sc = frob(M);
    if (std::sqrt(dev) > tol * (1.0 + sc * sc)) return std::nullopt;
    return spectral_norm(M, n);  // rho = sigma for normal matrices
}

double numerical_radius(const std::vector<std::complex<double>>& M, int n, double tol) {
    if (static_cast<int>(M.size()) != n * n) throw BellexError("numerical_radius: bad size");
    auto lam = [&](double theta) {
        const std::complex<double> ph = std::exp(std::complex<double>(0, theta));
        std::vector<std::complex<double>> H(static_cast<std::size_t>(n) * n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                H[r * n + c] = 0.5 * (ph * M[r * n + c] + std::conj(ph * M[c * n + r]));
        return hermitian_eigen(H, n).back();
    };
    const int grid = 720;
    const double two_pi = 2.0 * 3.14159265358979323846;
    double best = lam(0);
    int best_i = 0;
    for (int i = 1; i < grid; ++i) {
        const double v = lam(two_pi * i / grid);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    // golden-section refinement on the bracketing interval
    double a = two_pi * (best_i - 1) / grid, b = two_pi * (best_i + 1) / grid;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = lam(x1), f2 = lam(x2);
    while (b - a > 1e-10 && std::abs(f1 - f2) > tol * 1e-3) {
        if (f1 > f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = lam(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = lam(x2);
        }
    }
    return std::max(best, std::max(f1, f2));
}

double nu(const std::vector<std::complex<double>>& M, int n) {
    if (static_cast<int>(M.size()) != n * n) throw BellexError("nu: bad size");
    double s = 0;
    for (int r = 0; r < n; ++r) {
        std::complex<double> row = 0;
        for (int c = 0; c < n; ++c) row += M[r * n + c];
        s += std::norm(row);
    }
    return std::sqrt(s);
}

NuSaturation nu_saturated(const GameMatrix& M, double tol) {
    NuSaturation out;
    if (auto g = constant_row_sum(M, tol)) {
        out.saturated = true;
        out.row_sum = *g;
    }
    return out;
}

BoundsReport compute_bounds(const GameMatrix& M, double tol) {
    const int n = M.n();
    const auto& F = M.floats();
    BoundsReport rep;
    rep.n = n;
    rep.radius = numerical_radius(F, n);
    rep.radius_bound = n * rep.radius;
    rep.nu_value = nu(F, n);
    rep.nu_bound = std::sqrt(static_cast<double>(n)) * rep.nu_value;
    rep.sigma = spectral_norm(F, n);
    rep.sigma_bound = n * rep.sigma;
    rep.rho = spectral_radius(F, n, tol);
    const auto sat = nu_saturated(M, tol);
    rep.saturated = sat.saturated;
    rep.gamma = sat.row_sum;
    const double exc = std::abs(excess(M));
    if (rep.radius + tol * (1.0 + exc) < exc / n)
        throw BellexError("internal: numerical radius below |excess|/n");
    if (rep.saturated) {
        // sqrt(n)*nu == n*|Gamma| when every row sums to Gamma
        const double lhs = rep.nu_bound, rhs = n * std::abs(*rep.gamma);
        if (std::abs(lhs - rhs) > 1e-6 * (1.0 + rhs))
            throw BellexError("internal: saturation identity violated");
    }
    return rep;
}

double quantum_witness(const GameMatrix& M,
                       const std::vector<std::vector<std::complex<double>>>& alice,
                       const std::vector<std::vector<std::complex<double>>>& bob,
                       int dim, double tol) {
    const int m = M.m(), q = M.q();
    if (static_cast<int>(alice.size()) != m || static_cast<int>(bob.size()) != m)
        throw BellexError("quantum_witness: need m observables per party");
    const std::size_t dd = static_cast<std::size_t>(dim) * dim;
    auto check_obs = [&](const std::vector<std::complex<double>>& U) {
        if (U.size() != dd) throw BellexError("quantum_witness: observable dimension mismatch");
        // unitary with U^q = I <=> all eigenvalues are q-th roots of unity
        std::vector<std::complex<double>> P(dd, 0.0), G(dd, 0.0);
        for (int i = 0; i < dim; ++i) P[i * dim + i] = 1.0;
        for (int e = 0; e < q; ++e) {
            std::vector<std::complex<double>> T(dd, 0.0);
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c)
                    for (int k = 0; k < dim; ++k) T[r * dim + c] += P[r * dim + k] * U[k * dim + c];
            P = T;
        }
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                std::complex<double> g = 0;
                for (int k = 0; k < dim; ++k) g += U[r * dim + k] * std::conj(U[c * dim + k]);
                G[r * dim + c] = g;
            }
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                const double id = r == c ? 1.0 : 0.0;
                if (std::abs(G[r * dim + c] - id) > tol)
                    throw BellexError("quantum_witness: observable not unitary");
                if (std::abs(P[r * dim + c] - id) > tol)
                    throw BellexError("quantum_witness: observable spectrum not q-th roots of unity");
            }
    };
    for (const auto& U : alice) check_obs(U);
    for (const auto& U : bob) check_obs(U);

    auto mat_pow = [&](const std::vector<std::complex<double>>& U, int e) {
        std::vector<std::complex<double>> P(dd, 0.0);
        for (int i = 0; i < dim; ++i) P[i * dim + i] = 1.0;
        for (int j = 0; j < e; ++j) {
            std::vector<std::complex<double>> T(dd, 0.0);
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c)
                    for (int k = 0; k < dim; ++k) T[r * dim + c] += P[r * dim + k] * U[k * dim + c];
            P = T;
        }
        return P;
    };

    const int D = dim * dim;
    std::vector<std::complex<double>> B(static_cast<std::size_t>(D) * D, 0.0);
    for (int s = 0; s < q; ++s)
        for (int t = 0; t < q; ++t)
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) {
                    const std::complex<double> coef = M.at(m * s + x, m * t + y);
                    if (std::abs(coef) == 0) continue;
                    const auto As = mat_pow(alice[x], s);
                    const auto Bt = mat_pow(bob[y], t);
                    for (int r1 = 0; r1 < dim; ++r1)
                        for (int c1 = 0; c1 < dim; ++c1)
                            for (int r2 = 0; r2 < dim; ++r2)
                                for (int c2 = 0; c2 < dim; ++c2)
                                    B[(r1 * dim + r2) * D + (c1 * dim + c2)] +=
                                        coef * As[r1 * dim + c1] * Bt[r2 * dim + c2];
                }
    return hermitian_eigen(B, D).back();  // Hermiticity enforced by the eigensolver
}

ExcessFormula jkks_excess(long long k) {
    if (k < 2 || k % 2 != 0) throw BellexError("jkks_excess requires k = 0 or 2 (mod 4)");
    ExcessFormula f;
    f.order = 4 * k * (k - 1);
    f.excess = 4 * (k - 1) * (k - 1) * (2 * k + 1);
    return f;
}

Rat conference_excess_bound(long long n) {
    if (n < 2) throw BellexError("conference_excess_bound requires n >= 2");
    long long k = 1;
    while ((k + 2) * (k + 2) <= n - 1) k += 2;
    Rat b(static_cast<long>(n * (k * k + 2 * k + n - 1)), static_cast<long>(2 * (k + 1)));
    b.canonicalize();
    return b;
}

namespace {
bool is_prime_power(long long v) {
    if (v < 2) return false;
    for (long long p = 2; p * p <= v; ++p)
        if (v % p == 0) {
            while (v % p == 0) v /= p;
            return v == 1;
        }
    return true;  // prime
}
}  // namespace

ExcessFormula hs18_excess(long long l) {
    // l = (2m+1)^2 + 2, l a prime power
    const long long sq = l - 2;
    long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(sq))));
    if (sq < 1 || r * r != sq || r % 2 != 1 || !is_prime_power(l))
        throw BellexError("hs18_excess requires l = (2m+1)^2 + 2, a prime power");
    const long long n = l + 1;
    long long k = 0;
    while ((k + 2) * (k + 2) <= n) k += 2;
    const long long t = std::llabs(n - k * k) < std::llabs(n - (k + 2) * (k + 2)) ? k : k - 2;
    const long long s = n * ((t + 4) * (t + 4) - n) / (8 * t + 16);
    ExcessFormula f;
    f.order = n;
    f.excess = n * (t + 4) - 4 * s;
    return f;
}

}  // namespace bellex
