#include "bellex/catalog.hpp"

#include <map>
#include <sstream>

#include "bellex/catalog_data.hpp"

namespace bellex {

std::vector<SignMatrix> parse_catalogue_text(const std::string& text, MatrixKind kind) {
    std::vector<SignMatrix> out;
    std::vector<std::string> block;
    std::istringstream in(text);
    std::string line;

    auto flush = [&]() {
        if (block.empty()) return;
        const int n = static_cast<int>(block.size());
        SignMatrix M(n);
        for (int r = 0; r < n; ++r) {
            if (static_cast<int>(block[r].size()) != n)
                throw BellexError("catalogue: ragged block (matrix " +
                                  std::to_string(out.size()) + ", row " + std::to_string(r) + ")");
            for (int c = 0; c < n; ++c) {
                switch (block[r][c]) {
                    case '+': M.at(r, c) = 1; break;
                    case '-': M.at(r, c) = -1; break;
                    case '0':
                        if (kind == MatrixKind::Hadamard)
                            throw BellexError("catalogue: '0' entry in a Hadamard block");
                        M.at(r, c) = 0;
                        break;
                    default:
                        throw BellexError(std::string("catalogue: invalid character '") +
                                          block[r][c] + "'");
                }
            }
        }
        if (kind == MatrixKind::Hadamard && !is_hadamard(M)) {
            // locate the first Gram defect for the error message
            for (int r1 = 0; r1 < n; ++r1)
                for (int r2 = r1; r2 < n; ++r2) {
                    long long dot = 0;
                    for (int c = 0; c < n; ++c)
                        dot += static_cast<long long>(M.at(r1, c)) * M.at(r2, c);
                    if (dot != (r1 == r2 ? n : 0))
                        throw BellexError("catalogue: rows " + std::to_string(r1) + " and " +
                                          std::to_string(r2) + " are not orthogonal");
                }
            throw BellexError("catalogue: not a Hadamard matrix");
        }
        if (kind == MatrixKind::Weighing && !weighing_weight(M))
            throw BellexError("catalogue: block " + std::to_string(out.size()) +
                              " is not a weighing matrix");
        out.push_back(std::move(M));
        block.clear();
    };

    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') {
            flush();
            continue;
        }
        block.push_back(line);
    }
    flush();
    return out;
}

namespace {

std::map<std::pair<int, int>, CatalogEntry> build_table() {
    std::map<std::pair<int, int>, CatalogEntry> t;
    auto put = [&](int order, int index, SignMatrix M) {
        t[{order, index}] = CatalogEntry{order, index, std::move(M), "embedded"};
    };
    put(1, 0, sylvester(0));
    put(2, 0, sylvester(1));
    put(4, 0, sylvester(2));
    put(8, 0, sylvester(3));
    const std::pair<std::pair<int, int>, const char*> embedded[] = {
        {{12, 0}, detail::had_12_0}, {{16, 0}, detail::had_16_0}, {{16, 1}, detail::had_16_1},
        {{16, 2}, detail::had_16_2}, {{16, 3}, detail::had_16_3}, {{16, 4}, detail::had_16_4},
        {{20, 0}, detail::had_20_0}, {{20, 1}, detail::had_20_1}, {{20, 2}, detail::had_20_2},
    };
    for (const auto& [key, text] : embedded) {
        auto ms = parse_catalogue_text(text, MatrixKind::Hadamard);
        if (ms.size() != 1 || ms[0].order != key.first)
            throw BellexError("embedded catalogue is corrupt");
        put(key.first, key.second, std::move(ms[0]));
    }
    return t;
}

const std::map<std::pair<int, int>, CatalogEntry>& table() {
    static const auto t = build_table();
    return t;
}

}  // namespace

const CatalogEntry& builtin(int order, int index) {
    const auto it = table().find({order, index});
    if (it == table().end())
        throw BellexError("no embedded matrix " + std::to_string(order) + "/" +
                          std::to_string(index));
    return it->second;
}

std::vector<std::pair<int, int>> builtin_keys() {
    std::vector<std::pair<int, int>> keys;
    for (const auto& [k, v] : table()) keys.push_back(k);
    return keys;
}

bool detect_regular_equivalent(const SignMatrix& H, const LhvConfig& cfg) {
    if (!is_hadamard(H)) throw BellexError("detect_regular_equivalent requires a Hadamard matrix");
    const long long n = H.order;
    const long long c = lhv_core_value(core_from_sign_matrix(H), cfg);
    const bool regular = c * c == n * n * n;  // C = n*sqrt(n) iff the class has a regular member
    if (regular) {
        long long r = 1;
        while (r * r < n) ++r;
        if (r * r != n) throw BellexError("regular class at a non-square order (internal error)");
    }
    return regular;
}

}  // namespace bellex
