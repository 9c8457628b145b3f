#include "bellex/game.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace bellex {

GameTensor::GameTensor(int m, int q) : m_(m), q_(q) {
    if (m < 1 || q < 2) throw BellexError("GameTensor requires m >= 1, q >= 2");
    c_.assign(static_cast<std::size_t>(q) * q * m * m, Rat(0));
}

std::size_t GameTensor::idx(int a, int b, int x, int y) const {
    if (a < 0 || a >= q_ || b < 0 || b >= q_ || x < 0 || x >= m_ || y < 0 || y >= m_)
        throw BellexError("GameTensor index out of range");
    return ((static_cast<std::size_t>(a) * q_ + b) * m_ + x) * m_ + y;
}

GameMatrix::GameMatrix(int m, int q, bool exact) : m_(m), q_(q), exact_(exact) {
    if (m < 1 || q < 1) throw BellexError("GameMatrix requires m >= 1, q >= 1");
    if (exact && !exact_roots_available(q))
        throw BellexError("exact representation requires q in {1,2,4}");
    const std::size_t nn = static_cast<std::size_t>(n()) * n();
    f_.assign(nn, {0.0, 0.0});
    if (exact) x_.assign(nn, XComplex{});
}

void GameMatrix::set(int r, int c, XComplex v) {
    if (!exact_) throw BellexError("set(XComplex) on float matrix");
    f_[static_cast<std::size_t>(r) * n() + c] = v.to_complex();
    x_[static_cast<std::size_t>(r) * n() + c] = std::move(v);
}

void GameMatrix::set(int r, int c, std::complex<double> v) {
    if (exact_) throw BellexError("set(complex) on exact matrix");
    f_[static_cast<std::size_t>(r) * n() + c] = v;
}

Relabeling Relabeling::identity(int m, int q) {
    Relabeling r;
    r.x_perm.resize(m);
    r.y_perm.resize(m);
    std::iota(r.x_perm.begin(), r.x_perm.end(), 0);
    std::iota(r.y_perm.begin(), r.y_perm.end(), 0);
    std::vector<int> id(q);
    std::iota(id.begin(), id.end(), 0);
    r.a_perm.assign(m, id);
    r.b_perm.assign(m, id);
    return r;
}

std::optional<SymmetryViolation> validate_symmetry(const GameMatrix& M, double tol) {
    const int m = M.m(), q = M.q();
    for (int s = 0; s < q; ++s)
        for (int t = 0; t < q; ++t)
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) {
                    const int r1 = m * s + x, c1 = m * t + y;
                    const int r2 = m * ((q - s) % q) + x, c2 = m * ((q - t) % q) + y;
                    if (M.exact()) {
                        if (!(M.xat(r2, c2) == M.xat(r1, c1).conj()))
                            return SymmetryViolation{{r1, c1}, {r2, c2}, 1.0};
                    } else {
                        const double d = std::abs(M.at(r2, c2) - std::conj(M.at(r1, c1)));
                        if (d > tol) return SymmetryViolation{{r1, c1}, {r2, c2}, d};
                    }
                }
    // Real blocks per the conjugation symmetry: s,t fixed points of s -> q-s.
    for (int s = 0; s < q; ++s)
        for (int t = 0; t < q; ++t) {
            if ((q - s) % q != s || (q - t) % q != t) continue;
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) {
                    const int r = m * s + x, c = m * t + y;
                    if (M.exact()) {
                        if (!M.xat(r, c).is_real())
                            return SymmetryViolation{{r, c}, {r, c}, 1.0};
                    } else if (std::abs(M.at(r, c).imag()) > tol) {
                        return SymmetryViolation{{r, c}, {r, c}, std::abs(M.at(r, c).imag())};
                    }
                }
        }
    return std::nullopt;
}

GameMatrix game_matrix_from_tensor(const GameTensor& S) {
    const int m = S.m(), q = S.q();
    const bool exact = exact_roots_available(q);
    GameMatrix M(m, q, exact);
    const Rat inv_q2(1, static_cast<long>(q) * q);
    for (int s = 0; s < q; ++s)
        for (int t = 0; t < q; ++t)
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) {
                    if (exact) {
                        XComplex acc;
                        for (int a = 0; a < q; ++a)
                            for (int b = 0; b < q; ++b)
                                acc += exact_root(q, static_cast<long>(s) * a + static_cast<long>(t) * b) *
                                       XComplex(S.at(a, b, x, y));
                        M.set(m * s + x, m * t + y, XComplex(acc.re * inv_q2, acc.im * inv_q2));
                    } else {
                        std::complex<double> acc = 0;
                        for (int a = 0; a < q; ++a)
                            for (int b = 0; b < q; ++b)
                                acc += float_root(q, static_cast<long>(s) * a + static_cast<long>(t) * b) *
                                       S.at(a, b, x, y).get_d();
                        M.set(m * s + x, m * t + y, acc / (static_cast<double>(q) * q));
                    }
                }
    return M;
}

GameTensor tensor_from_game_matrix(const GameMatrix& M, double tol) {
    if (auto v = validate_symmetry(M, tol)) {
        std::ostringstream os;
        os << "symmetry violation between (" << v->index_a.first << "," << v->index_a.second
           << ") and (" << v->index_b.first << "," << v->index_b.second << ")";
        throw BellexError(os.str());
    }
    const int m = M.m(), q = M.q();
    GameTensor S(m, q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) {
                    if (M.exact()) {
                        XComplex acc;
                        for (int s = 0; s < q; ++s)
                            for (int t = 0; t < q; ++t)
                                acc += exact_root(q, -(static_cast<long>(s) * a + static_cast<long>(t) * b)) *
                                       M.xat(m * s + x, m * t + y);
                        if (acc.im != 0) throw BellexError("tensor_from_game_matrix: non-real coefficient");
                        S.at(a, b, x, y) = acc.re;
                    } else {
                        std::complex<double> acc = 0;
                        for (int s = 0; s < q; ++s)
                            for (int t = 0; t < q; ++t)
                                acc += float_root(q, -(static_cast<long>(s) * a + static_cast<long>(t) * b)) *
                                       M.at(m * s + x, m * t + y);
                        if (std::abs(acc.imag()) > tol * (1.0 + std::abs(acc.real())) * q * q)
                            throw BellexError("tensor_from_game_matrix: non-real coefficient");
                        S.at(a, b, x, y) = Rat(acc.real());
                    }
                }
    return S;
}

Rat excess_exact(const GameMatrix& M) {
    if (!M.exact()) throw BellexError("excess_exact on float matrix");
    XComplex acc;
    const int n = M.n();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) acc += M.xat(r, c);
    if (acc.im != 0) throw BellexError("excess has nonzero imaginary part");
    return acc.re;
}

double excess(const GameMatrix& M) {
    std::complex<double> acc = 0;
    const int n = M.n();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) acc += M.at(r, c);
    return acc.real();
}

Rat excess_exact(const CorrelationCore& core) {
    if (!core.integer_repr) throw BellexError("excess_exact on non-integer core");
    long long s = 0;
    for (long long v : core.ints) s += v;
    return core.scale * Rat(static_cast<long>(s));
}

bool is_correlation_matrix(const GameMatrix& M, double tol) {
    const int m = M.m(), n = M.n();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (r >= m && c >= m) continue;
            if (M.exact()) {
                if (!M.xat(r, c).is_zero()) return false;
            } else if (std::abs(M.at(r, c)) > tol) {
                return false;
            }
        }
    return true;
}

CorrelationCore core_of(const GameMatrix& M, double tol) {
    if (!is_correlation_matrix(M, tol))
        throw BellexError("core_of: matrix has nonzero s=0 or t=0 blocks");
    const int m = M.m(), q = M.q();
    CorrelationCore core;
    core.m = m;
    core.q = q;
    const int o = core.order();
    if (q == 2 && M.exact()) {
        // entries are real rationals; factor out the content so the core is integral
        std::vector<Rat> vals(static_cast<std::size_t>(o) * o);
        mpz_class den_lcm = 1;
        for (int r = 0; r < o; ++r)
            for (int c = 0; c < o; ++c) {
                const XComplex& e = M.xat(m + r, m + c);
                if (!e.is_real()) throw BellexError("core_of: complex entry in q=2 core");
                vals[static_cast<std::size_t>(r) * o + c] = e.re;
                mpz_class l;
                mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), e.re.get_den().get_mpz_t());
                den_lcm = l;
            }
        mpz_class content = 0;
        for (const Rat& v : vals) {
            mpz_class scaled = v.get_num() * (den_lcm / v.get_den());
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
            content = g;
        }
        if (content == 0) content = den_lcm;  // all-zero core
        core.scale = Rat(content, den_lcm);
        core.scale.canonicalize();
        core.ints.resize(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) {
            Rat t = vals[i] / core.scale;
            if (t.get_den() != 1) throw BellexError("core_of: internal scaling error");
            if (!t.get_num().fits_slong_p()) throw BellexError("core_of: entry overflows int64");
            core.ints[i] = t.get_num().get_si();
        }
        core.integer_repr = true;
    } else {
        core.integer_repr = false;
        core.floats.resize(static_cast<std::size_t>(o) * o);
        for (int r = 0; r < o; ++r)
            for (int c = 0; c < o; ++c)
                core.floats[static_cast<std::size_t>(r) * o + c] = M.at(m + r, m + c);
    }
    return core;
}

GameMatrix embed_core(const CorrelationCore& core) {
    const int m = core.m, q = core.q, o = core.order();
    const bool exact = core.integer_repr && exact_roots_available(q);
    GameMatrix M(m, q, exact);
    for (int r = 0; r < o; ++r)
        for (int c = 0; c < o; ++c) {
            if (exact)
                M.set(m + r, m + c, XComplex(core.scale * Rat(static_cast<long>(core.iat(r, c)))));
            else
                M.set(m + r, m + c, core.floats[static_cast<std::size_t>(r) * o + c]);
        }
    return M;
}

std::optional<std::complex<double>> constant_row_sum(const GameMatrix& M, double tol) {
    const int n = M.n();
    if (M.exact()) {
        XComplex first;
        for (int r = 0; r < n; ++r) {
            XComplex s;
            for (int c = 0; c < n; ++c) s += M.xat(r, c);
            if (r == 0)
                first = s;
            else if (!(s == first))
                return std::nullopt;
        }
        return first.to_complex();
    }
    std::complex<double> first = 0;
    for (int r = 0; r < n; ++r) {
        std::complex<double> s = 0;
        for (int c = 0; c < n; ++c) s += M.at(r, c);
        if (r == 0)
            first = s;
        else if (std::abs(s - first) > tol)
            return std::nullopt;
    }
    return first;
}

namespace {
void check_perm(const std::vector<int>& p, int k, const char* what) {
    if (static_cast<int>(p.size()) != k) throw BellexError(std::string(what) + ": wrong size");
    std::vector<char> seen(k, 0);
    for (int v : p) {
        if (v < 0 || v >= k || seen[v]) throw BellexError(std::string(what) + ": not a permutation");
        seen[v] = 1;
    }
}
}  // namespace

GameTensor apply_relabeling(const GameTensor& S, const Relabeling& r) {
    const int m = S.m(), q = S.q();
    check_perm(r.x_perm, m, "x_perm");
    check_perm(r.y_perm, m, "y_perm");
    if (static_cast<int>(r.a_perm.size()) != m || static_cast<int>(r.b_perm.size()) != m)
        throw BellexError("outcome permutation count must equal m");
    for (int x = 0; x < m; ++x) {
        check_perm(r.a_perm[x], q, "a_perm");
        check_perm(r.b_perm[x], q, "b_perm");
    }
    GameTensor out(m, q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y)
                    out.at(r.a_perm[x][a], r.b_perm[y][b], r.x_perm[x], r.y_perm[y]) =
                        S.at(a, b, x, y);
    return out;
}

namespace {

std::vector<std::string> tokenize_stream(std::istream& in) {
    std::vector<std::string> toks;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        std::istringstream ls(line.substr(i));
        std::string t;
        while (ls >> t) {
            if (t[0] == '#') break;
            toks.push_back(t);
        }
    }
    return toks;
}

std::pair<Rat, Rat> parse_entry(const std::string& tok) {
    const auto comma = tok.find(',');
    if (comma == std::string::npos) return {parse_rational(tok), Rat(0)};
    return {parse_rational(tok.substr(0, comma)), parse_rational(tok.substr(comma + 1))};
}

std::string format_entry_exact(const XComplex& v) {
    if (v.is_real()) return format_rational(v.re);
    return format_rational(v.re) + "," + format_rational(v.im);
}

std::string format_double(double d) {
    std::ostringstream os;
    os.precision(17);
    os << d;
    return os.str();
}

}  // namespace

GameMatrix read_game_matrix(std::istream& in) {
    const auto toks = tokenize_stream(in);
    if (toks.size() < 3) throw BellexError("matrix file: missing header");
    long n, m, q;
    try {
        n = std::stol(toks[0]);
        m = std::stol(toks[1]);
        q = std::stol(toks[2]);
    } catch (const std::exception&) {
        throw BellexError("matrix file: bad header");
    }
    if (m < 1 || q < 1 || n != m * q) throw BellexError("matrix file: header requires n = m*q");
    if (toks.size() != 3 + static_cast<std::size_t>(n) * n)
        throw BellexError("matrix file: wrong entry count");
    GameMatrix M(static_cast<int>(m), static_cast<int>(q), exact_roots_available(static_cast<int>(q)));
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) {
            std::pair<Rat, Rat> e;
            try {
                e = parse_entry(toks[3 + r * n + c]);
            } catch (const std::exception& ex) {
                throw BellexError(std::string("matrix file: bad entry: ") + ex.what());
            }
            if (M.exact())
                M.set(static_cast<int>(r), static_cast<int>(c), XComplex(e.first, e.second));
            else
                M.set(static_cast<int>(r), static_cast<int>(c),
                      std::complex<double>(e.first.get_d(), e.second.get_d()));
        }
    return M;
}

void write_game_matrix(std::ostream& out, const GameMatrix& M) {
    const int n = M.n();
    out << n << " " << M.m() << " " << M.q() << "\n";
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (c) out << " ";
            if (M.exact()) {
                out << format_entry_exact(M.xat(r, c));
            } else {
                const auto& v = M.at(r, c);
                out << format_double(v.real());
                if (v.imag() != 0) out << "," << format_double(v.imag());
            }
        }
        out << "\n";
    }
}

GameTensor read_game_tensor(std::istream& in) {
    const auto toks = tokenize_stream(in);
    if (toks.size() < 2) throw BellexError("tensor file: missing header");
    long m, q;
    try {
        m = std::stol(toks[0]);
        q = std::stol(toks[1]);
    } catch (const std::exception&) {
        throw BellexError("tensor file: bad header");
    }
    const std::size_t count = static_cast<std::size_t>(q) * q * m * m;
    if (toks.size() != 2 + 5 * count) throw BellexError("tensor file: wrong coefficient count");
    GameTensor S(static_cast<int>(m), static_cast<int>(q));
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t p = 2 + 5 * i;
        try {
            const int a = std::stoi(toks[p]), b = std::stoi(toks[p + 1]);
            const int x = std::stoi(toks[p + 2]), y = std::stoi(toks[p + 3]);
            S.at(a, b, x, y) = parse_rational(toks[p + 4]);
        } catch (const BellexError&) {
            throw;
        } catch (const std::exception& ex) {
            throw BellexError(std::string("tensor file: bad line: ") + ex.what());
        }
    }
    return S;
}

void write_game_tensor(std::ostream& out, const GameTensor& S) {
    out << S.m() << " " << S.q() << "\n";
    for (int a = 0; a < S.q(); ++a)
        for (int b = 0; b < S.q(); ++b)
            for (int x = 0; x < S.m(); ++x)
                for (int y = 0; y < S.m(); ++y)
                    out << a << " " << b << " " << x << " " << y << " "
                        << format_rational(S.at(a, b, x, y)) << "\n";
}

}  // namespace bellex
