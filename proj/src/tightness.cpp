#include "bellex/tightness.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <random>
#include <unordered_set>

#include <gmpxx.h>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bellex {

namespace {

std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

struct VertexHash {
    std::size_t operator()(const Vertex& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint64_t w : v.bits) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h ^ static_cast<std::size_t>(v.len);
    }
};

}  // namespace

std::vector<Vertex> collect_vertices(const CorrelationCore& core, const LhvConfig& cfg) {
    if (core.q != 2 || !core.integer_repr)
        throw BellexError("collect_vertices requires a q=2 integer core");
    const int m = core.m;
    if (m < 1 || m > 24) throw BudgetExceeded("vertex collection limited to m <= 24", 1ull << 24);
    const std::uint64_t total = m == 1 ? 1 : 1ull << (m - 1);  // a_0 = +1 quotient
    if (total > cfg.enum_budget) throw BudgetExceeded("enumeration budget exceeded", total);
    const long long target = lhv_core_value(core, cfg);

    const int words = (m * m + 63) / 64;
    std::unordered_set<Vertex, VertexHash> seen;

    auto emit = [&](const std::vector<int>& a, const std::vector<int>& b) {
        Vertex v;
        v.len = m * m;
        v.bits.assign(words, 0);
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                if (a[x] * b[y] < 0) {
                    const int i = x * m + y;
                    v.bits[i >> 6] |= 1ull << (i & 63);
                }
        if (seen.size() >= cfg.optimizer_cap && !seen.count(v))
            throw BudgetExceeded("optimizer cap exceeded", seen.size() + 1);
        seen.insert(std::move(v));
    };

    std::vector<long long> col(m);
    std::vector<int> a(m), b(m);
    std::uint64_t bits = 0;
    for (int y = 0; y < m; ++y) {
        long long s = 0;
        for (int x = 0; x < m; ++x) s += core.iat(x, y);
        col[y] = s;
    }
    for (std::uint64_t i = 0; i < total; ++i) {
        long long v = 0;
        for (int y = 0; y < m; ++y) v += std::llabs(col[y]);
        if (v == target) {
            a[0] = 1;
            for (int x = 1; x < m; ++x) a[x] = (bits >> (x - 1)) & 1 ? -1 : 1;
            // forced Bob signs; zero column sums expand to both
            std::vector<int> free;
            for (int y = 0; y < m; ++y) {
                b[y] = col[y] > 0 ? 1 : col[y] < 0 ? -1 : 1;
                if (col[y] == 0) free.push_back(y);
            }
            const std::uint64_t combos = 1ull << free.size();
            for (std::uint64_t mask = 0; mask < combos; ++mask) {
                for (std::size_t j = 0; j < free.size(); ++j)
                    b[free[j]] = (mask >> j) & 1 ? -1 : 1;
                emit(a, b);
            }
        }
        if (i + 1 < total) {
            const int x = std::countr_zero(i + 1);
            const long long d = (bits >> x) & 1 ? 2 : -2;
            for (int y = 0; y < m; ++y) col[y] += d * core.iat(x + 1, y);
            bits ^= 1ull << x;
        }
    }
    return std::vector<Vertex>(seen.begin(), seen.end());
}

namespace {

// Fraction-free elimination basis over Z with content reduction.
struct ExactBasis {
    int cols;
    std::vector<std::vector<mpz_class>> rows;  // reduced echelon rows
    std::vector<int> pivots;

    // returns true when the row is independent (and absorbs it)
    bool add(std::vector<mpz_class> row) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const int p = pivots[i];
            if (row[p] == 0) continue;
            const mpz_class pv = rows[i][p], rv = row[p];
            for (int c = 0; c < cols; ++c) row[c] = row[c] * pv - rows[i][c] * rv;
            mpz_class content = 0;
            for (int c = 0; c < cols; ++c) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), row[c].get_mpz_t());
                content = g;
                if (content == 1) break;
            }
            if (content > 1)
                for (int c = 0; c < cols; ++c) row[c] /= content;
        }
        int p = -1;
        for (int c = 0; c < cols; ++c)
            if (row[c] != 0) {
                p = c;
                break;
            }
        if (p < 0) return false;
        rows.push_back(std::move(row));
        pivots.push_back(p);
        return true;
    }
};

struct ModBasis {
    int cols;
    long long p;
    std::vector<std::vector<long long>> rows;
    std::vector<int> pivots;
    std::vector<long long> scratch;

    static long long inv_mod(long long a, long long p) {
        long long t = 0, nt = 1, r = p, nr = a % p;
        if (nr < 0) nr += p;
        while (nr) {
            const long long qo = r / nr;
            t -= qo * nt;
            std::swap(t, nt);
            r -= qo * nr;
            std::swap(r, nr);
        }
        return ((t % p) + p) % p;
    }

    bool add(const std::vector<long long>& in) {
        scratch = in;
        for (auto& v : scratch) v = ((v % p) + p) % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const int pv = pivots[i];
            if (scratch[pv] == 0) continue;
            const long long f = scratch[pv];
            for (int c = 0; c < cols; ++c)
                scratch[c] = ((scratch[c] - static_cast<__int128>(f) * rows[i][c]) % p + p) % p;
        }
        int piv = -1;
        for (int c = 0; c < cols; ++c)
            if (scratch[c] != 0) {
                piv = c;
                break;
            }
        if (piv < 0) return false;
        const long long inv = inv_mod(scratch[piv], p);
        for (auto& v : scratch) v = static_cast<long long>(static_cast<__int128>(v) * inv % p);
        rows.push_back(scratch);
        pivots.push_back(piv);
        return true;
    }
};

}  // namespace

int affine_rank(const std::vector<Vertex>& vertices, int max_rank) {
    if (vertices.empty()) throw BellexError("affine_rank of an empty vertex set");
    const int d = vertices[0].len;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    auto rand_prime = [&]() {
        static const long long primes[] = {2147483629, 2147483587, 2147483563, 2147483549,
                                           2147483489, 2147483477};
        return primes[rng() % 6];
    };
    long long p1 = rand_prime(), p2 = rand_prime();
    while (p2 == p1) p2 = rand_prime();

    ExactBasis exact{d, {}, {}};
    ModBasis mod1{d, p1, {}, {}, {}}, mod2{d, p2, {}, {}, {}};

    std::vector<long long> diff(d);
    std::vector<mpz_class> zrow(d);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        if (max_rank >= 0 && static_cast<int>(exact.rows.size()) >= max_rank) break;
        for (int c = 0; c < d; ++c)
            diff[c] = (vertices[i].sign(c) - vertices[0].sign(c)) / 2;  // entries in {-1,0,1}
        const bool ind1 = mod1.add(diff);
        const bool ind2 = ind1 ? false : mod2.add(diff);
        if (ind1 || ind2) {
            for (int c = 0; c < d; ++c) zrow[c] = static_cast<long>(diff[c]);
            // the mod-p filter can only over-approximate independence; the
            // exact elimination is authoritative
            exact.add(zrow);
            if (ind1) mod2.add(diff);
        }
    }
    return static_cast<int>(exact.rows.size());
}

TightnessReport tightness_report(const CorrelationCore& core, const LhvConfig& cfg) {
    TightnessReport rep;
    rep.m = core.m;
    rep.lhv = lhv_core_value(core, cfg);
    const auto vertices = collect_vertices(core, cfg);
    rep.vertex_count = vertices.size();
    rep.affine_rank = affine_rank(vertices, rep.m * rep.m - 1);
    rep.tight = rep.affine_rank == rep.m * rep.m - 1;
    rep.regular_equivalent = rep.lhv * rep.lhv ==
                             static_cast<long long>(rep.m) * rep.m * rep.m;
    return rep;
}

}  // namespace bellex
