#include "bellex/constructions.hpp"

namespace bellex {

SignMatrix SignMatrix::transpose() const {
    SignMatrix t(order);
    for (int r = 0; r < order; ++r)
        for (int c = 0; c < order; ++c) t.at(c, r) = at(r, c);
    return t;
}

SignMatrix sylvester(int k) {
    if (k < 0) throw BellexError("sylvester requires k >= 0");
    SignMatrix H(1);
    H.at(0, 0) = 1;
    for (int i = 0; i < k; ++i) {
        SignMatrix G(2 * H.order);
        for (int r = 0; r < H.order; ++r)
            for (int c = 0; c < H.order; ++c) {
                const std::int8_t v = H.at(r, c);
                G.at(r, c) = v;
                G.at(r, c + H.order) = v;
                G.at(r + H.order, c) = v;
                G.at(r + H.order, c + H.order) = static_cast<std::int8_t>(-v);
            }
        H = std::move(G);
    }
    return H;
}

namespace {
bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long p = 2; p * p <= v; ++p)
        if (v % p == 0) return false;
    return true;
}
}  // namespace

SignMatrix paley_hadamard(long long ell) {
    if (!is_prime(ell) || ell % 4 != 3)
        throw BellexError("paley_hadamard requires a prime ell = 3 (mod 4)");
    std::vector<char> is_sq(ell, 0);
    for (long long x = 1; x < ell; ++x) is_sq[(x * x) % ell] = 1;
    const int n = static_cast<int>(ell) + 1;
    SignMatrix H(n);
    for (int c = 0; c < n; ++c) H.at(0, c) = 1;
    for (int r = 1; r < n; ++r) H.at(r, 0) = 1;
    H.at(0, 0) = -1;
    for (long long i = 0; i < ell; ++i)
        for (long long j = 0; j < ell; ++j) {
            const long long d = ((j - i) % ell + ell) % ell;
            H.at(static_cast<int>(1 + i), static_cast<int>(1 + j)) =
                (d == 0 || is_sq[d]) ? 1 : -1;
        }
    if (!is_hadamard(H)) throw BellexError("paley_hadamard: internal orthogonality failure");
    return H;
}

SignMatrix circulant(const std::vector<int>& first_row) {
    const int n = static_cast<int>(first_row.size());
    if (n == 0) throw BellexError("circulant requires a nonempty first row");
    for (int v : first_row)
        if (v < -1 || v > 1) throw BellexError("circulant entries must be in {-1,0,1}");
    SignMatrix M(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) M.at(r, c) = static_cast<std::int8_t>(first_row[(c - r + n) % n]);
    return M;
}

GameMatrix fourier_square(int q) {
    if (q < 2) throw BellexError("fourier_square requires q >= 2");
    GameMatrix M(q, q, exact_roots_available(q));
    for (int s = 0; s < q; ++s)
        for (int t = 0; t < q; ++t)
            for (int x = 0; x < q; ++x)
                for (int y = 0; y < q; ++y) {
                    const long e = static_cast<long>(x) * t - static_cast<long>(s) * y;
                    if (M.exact())
                        M.set(q * s + x, q * t + y, exact_root(q, e));
                    else
                        M.set(q * s + x, q * t + y, float_root(q, e));
                }
    return M;
}

GameTensor gyni_tensor(int q) {
    if (q < 2) throw BellexError("gyni_tensor requires q >= 2");
    GameTensor S(q, q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) S.at(a, b, b, a) = 1;
    return S;
}

bool is_hadamard(const SignMatrix& M) {
    const int n = M.order;
    for (std::int8_t v : M.v)
        if (v != 1 && v != -1) return false;
    for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = r1; r2 < n; ++r2) {
            long long dot = 0;
            for (int c = 0; c < n; ++c) dot += static_cast<long long>(M.at(r1, c)) * M.at(r2, c);
            if (dot != (r1 == r2 ? n : 0)) return false;
        }
    return true;
}

bool is_conference(const SignMatrix& M) {
    const int n = M.order;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const std::int8_t v = M.at(r, c);
            if (r == c ? v != 0 : (v != 1 && v != -1)) return false;
        }
    for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = r1; r2 < n; ++r2) {
            long long dot = 0;
            for (int c = 0; c < n; ++c) dot += static_cast<long long>(M.at(r1, c)) * M.at(r2, c);
            if (dot != (r1 == r2 ? n - 1 : 0)) return false;
        }
    return true;
}

bool is_skew_type(const SignMatrix& M) {
    // skew-type Hadamard (M - I skew symmetric) or plainly skew symmetric
    const int n = M.order;
    bool minus_id = true, plain = true;
    for (int r = 0; r < n; ++r) {
        if (M.at(r, r) != 1) minus_id = false;
        if (M.at(r, r) != 0) plain = false;
        for (int c = r + 1; c < n; ++c)
            if (M.at(r, c) != -M.at(c, r)) return false;
    }
    return minus_id || plain;
}

std::optional<long long> weighing_weight(const SignMatrix& W) {
    const int n = W.order;
    for (std::int8_t v : W.v)
        if (v < -1 || v > 1) return std::nullopt;
    long long k = 0;
    for (int c = 0; c < n; ++c) k += W.at(0, c) != 0;
    for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = r1; r2 < n; ++r2) {
            long long dot = 0;
            for (int c = 0; c < n; ++c) dot += static_cast<long long>(W.at(r1, c)) * W.at(r2, c);
            if (dot != (r1 == r2 ? k : 0)) return std::nullopt;
        }
    return k;
}

CorrelationCore core_from_sign_matrix(const SignMatrix& H) {
    CorrelationCore core;
    core.m = H.order;
    core.q = 2;
    core.scale = 1;
    core.integer_repr = true;
    core.ints.assign(H.v.begin(), H.v.end());
    return core;
}

MquwmResult mquwm_check(const SignMatrix& W1, const SignMatrix& W2, long long a) {
    MquwmResult res;
    if (W1.order != W2.order) {
        res.reason = "order mismatch";
        return res;
    }
    const auto k1 = weighing_weight(W1), k2 = weighing_weight(W2);
    if (!k1 || !k2) {
        res.reason = "input is not a weighing matrix";
        return res;
    }
    if (*k1 != *k2) {
        res.reason = "weights differ";
        return res;
    }
    const long long k = *k1;
    if (a <= 0 || (k * k) % a != 0) {
        res.reason = "a does not divide k^2";
        return res;
    }
    const long long l = k * k / a;
    const int n = W1.order;
    std::vector<long long> P(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            long long s = 0;
            for (int j = 0; j < n; ++j) s += static_cast<long long>(W1.at(r, j)) * W2.at(c, j);
            P[static_cast<std::size_t>(r) * n + c] = s;
            if (s * s != 0 && s * s != a) {
                res.l = l;
                res.reason = "product entries are not in {0, +-sqrt(a)}";
                return res;
            }
        }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            long long g = 0;
            for (int j = 0; j < n; ++j)
                g += P[static_cast<std::size_t>(r) * n + j] * P[static_cast<std::size_t>(c) * n + j];
            if (g % a != 0 || g / a != (r == c ? l : 0)) {
                res.l = l;
                res.reason = "scaled product Gram is not l*I";
                return res;
            }
        }
    res.ok = true;
    res.l = l;
    return res;
}

}  // namespace bellex
