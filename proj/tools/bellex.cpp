#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellex/bounds.hpp"
#include "bellex/catalog.hpp"
#include "bellex/constructions.hpp"
#include "bellex/game.hpp"
#include "bellex/lhv.hpp"
#include "bellex/tightness.hpp"

using nlohmann::json;
using namespace bellex;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitGolden = 3;

struct CommonOpts {
    std::string file, builtin_ref, output, format = "table";
    bool as_core = false;
    int threads = 0;
    double tol = 1e-9;
    std::uint64_t budget = 1ull << 26;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
    if (with_input) {
        cmd->add_option("--file", o.file, "input file");
        cmd->add_option("--builtin", o.builtin_ref, "embedded matrix ORDER/INDEX");
        cmd->add_flag("--as-core", o.as_core, "treat a +/- matrix as a q=2 correlation core");
    }
    cmd->add_option("--threads", o.threads, "worker threads (default: BELLEX_THREADS or all)");
    cmd->add_option("--tol", o.tol, "float tolerance");
    cmd->add_option("--format", o.format, "table | json")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--budget", o.budget, "enumeration budget (number of Alice states)");
    cmd->add_option("--output", o.output, "write the report to a file instead of stdout");
}

int env_threads() {
    if (const char* v = std::getenv("BELLEX_THREADS")) {
        const int t = std::atoi(v);
        if (t > 0) return t;
    }
    return 0;
}

LhvConfig make_cfg(const CommonOpts& o) {
    LhvConfig cfg;
    cfg.threads = o.threads > 0 ? o.threads : env_threads();
    cfg.enum_budget = o.budget;
    return cfg;
}

std::pair<int, int> parse_ref(const std::string& ref) {
    const auto slash = ref.find('/');
    if (slash == std::string::npos) throw BellexError("--builtin expects ORDER/INDEX");
    try {
        return {std::stoi(ref.substr(0, slash)), std::stoi(ref.substr(slash + 1))};
    } catch (const std::exception&) {
        throw BellexError("--builtin expects ORDER/INDEX");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BellexError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SignMatrix load_sign_matrix(const CommonOpts& o) {
    if (!o.builtin_ref.empty()) {
        const auto [order, index] = parse_ref(o.builtin_ref);
        return builtin(order, index).matrix;
    }
    if (o.file.empty()) throw BellexError("need --file or --builtin");
    auto ms = parse_catalogue_text(read_file(o.file), MatrixKind::Any);
    if (ms.size() != 1) throw BellexError("expected exactly one matrix in " + o.file);
    for (std::int8_t v : ms[0].v)
        if (v == 0) throw BellexError("a correlation core must have +-1 entries");
    return ms[0];
}

GameMatrix load_game(const CommonOpts& o) {
    if (o.as_core || !o.builtin_ref.empty())
        return embed_core(core_from_sign_matrix(load_sign_matrix(o)));
    if (o.file.empty()) throw BellexError("need --file or --builtin");
    std::ifstream in(o.file);
    if (!in) throw BellexError("cannot open " + o.file);
    return read_game_matrix(in);
}

void emit(const CommonOpts& o, const std::string& table_text, const json& j) {
    std::ostream* out = &std::cout;
    std::ofstream f;
    if (!o.output.empty()) {
        f.open(o.output);
        if (!f) throw BellexError("cannot write " + o.output);
        out = &f;
    }
    if (o.format == "json")
        *out << j.dump(2) << "\n";
    else
        *out << table_text;
}

std::string strategy_str(const Strategy& s) {
    std::ostringstream os;
    os << "a=(";
    for (std::size_t i = 0; i < s.alice.size(); ++i) os << (i ? "," : "") << int(s.alice[i]);
    os << ") b=(";
    for (std::size_t i = 0; i < s.bob.size(); ++i) os << (i ? "," : "") << int(s.bob[i]);
    os << ")";
    return os.str();
}

json strategy_json(const Strategy& s) {
    return json{{"alice", s.alice}, {"bob", s.bob}};
}

int run_lhv(const CommonOpts& o, bool optimizers) {
    const GameMatrix M = load_game(o);
    const LhvConfig cfg = make_cfg(o);
    const LhvResult r = lhv_value(M, cfg);
    json j{{"value", r.value}, {"exact", r.exact}, {"witness", strategy_json(r.witness)}};
    std::ostringstream t;
    t << "C = ";
    if (r.exact) {
        t << format_rational(r.value_exact);
        j["value_exact"] = format_rational(r.value_exact);
    } else {
        t << r.value;
    }
    t << "\nwitness: " << strategy_str(r.witness) << "\n";
    if (optimizers) {
        const auto opts = enumerate_optimizers(M, cfg);
        t << "optimizers: " << opts.size() << "\n";
        j["optimizer_count"] = opts.size();
    }
    emit(o, t.str(), j);
    return 0;
}

int run_excess(const CommonOpts& o) {
    const GameMatrix M = load_game(o);
    json j;
    std::ostringstream t;
    if (M.exact()) {
        const Rat e = excess_exact(M);
        t << "excess = " << format_rational(e) << "\n";
        j = {{"excess", e.get_d()}, {"excess_exact", format_rational(e)}};
    } else {
        t << "excess = " << excess(M) << "\n";
        j = {{"excess", excess(M)}};
    }
    emit(o, t.str(), j);
    return 0;
}

int run_bounds(const CommonOpts& o) {
    json j;
    std::ostringstream t;
    BoundsReport rep;
    if (o.as_core || !o.builtin_ref.empty()) {
        // bounds on the bare core matrix, as in the worked examples
        const SignMatrix H = load_sign_matrix(o);
        GameMatrix M(H.order, 1, true);
        for (int r = 0; r < H.order; ++r)
            for (int c = 0; c < H.order; ++c) M.set(r, c, XComplex(Rat(H.at(r, c))));
        rep = compute_bounds(M, o.tol);
        const long long C = lhv_core_value(core_from_sign_matrix(H), make_cfg(o));
        rep.normalized_input = static_cast<double>(C) == excess(M);
        if (H.order % 2 == 0 && is_hadamard(H)) {
            const BestBounds b = best_bounds(H.order);
            rep.best_lower = b.lower;
            rep.best_upper = b.upper;
        }
        t << "C = " << C << "\n";
        j["lhv"] = C;
    } else {
        const GameMatrix M = load_game(o);
        rep = compute_bounds(M, o.tol);
        const std::uint64_t budget = make_cfg(o).enum_budget;
        double states = std::pow(static_cast<double>(M.q()), M.m());
        if (states <= static_cast<double>(budget)) {
            const LhvResult r = lhv_value(M, make_cfg(o));
            rep.normalized_input = std::abs(r.value - excess(M)) <= o.tol * (1.0 + std::abs(r.value));
            t << "C = " << r.value << "\n";
            j["lhv"] = r.value;
        }
    }
    t << "n = " << rep.n << "\n";
    if (rep.best_lower) t << "best bounds: [" << *rep.best_lower << ", " << *rep.best_upper << "]\n";
    t << "numerical radius r = " << rep.radius << "  (bound n*r = " << rep.radius_bound << ")\n";
    t << "nu = " << rep.nu_value << "  (bound sqrt(n)*nu = " << rep.nu_bound << ")\n";
    t << "sigma = " << rep.sigma << "  (bound n*sigma = " << rep.sigma_bound << ")\n";
    if (rep.rho) t << "rho = " << *rep.rho << "\n";
    t << "constant row sum: " << (rep.saturated ? "yes" : "no");
    if (rep.saturated)
        t << "  Gamma = " << rep.gamma->real()
          << (rep.gamma->imag() != 0 ? " (+imag)" : "") << "  (nu bound saturated, C = n*|Gamma|)";
    t << "\nall-plus optimal (bounds apply to C directly): "
      << (rep.normalized_input ? "yes" : "not verified") << "\n";
    j["n"] = rep.n;
    j["radius"] = rep.radius;
    j["radius_bound"] = rep.radius_bound;
    j["nu"] = rep.nu_value;
    j["nu_bound"] = rep.nu_bound;
    j["sigma"] = rep.sigma;
    j["sigma_bound"] = rep.sigma_bound;
    if (rep.rho) j["rho"] = *rep.rho;
    if (rep.best_lower) {
        j["best_lower"] = *rep.best_lower;
        j["best_upper"] = *rep.best_upper;
    }
    j["saturated"] = rep.saturated;
    if (rep.saturated) j["gamma"] = {{"re", rep.gamma->real()}, {"im", rep.gamma->imag()}};
    j["normalized_input"] = rep.normalized_input;
    emit(o, t.str(), j);
    return 0;
}

json report_json(const TightnessReport& r) {
    return json{{"m", r.m},
                {"lhv", r.lhv},
                {"vertices", r.vertex_count},
                {"affine_rank", r.affine_rank},
                {"tight", r.tight},
                {"regular_equivalent", r.regular_equivalent}};
}

int run_tightness(const CommonOpts& o) {
    CorrelationCore core;
    if (o.as_core || !o.builtin_ref.empty()) {
        core = core_from_sign_matrix(load_sign_matrix(o));
    } else {
        const GameMatrix M = load_game(o);
        core = core_of(M, o.tol);
    }
    const TightnessReport r = tightness_report(core, make_cfg(o));
    std::ostringstream t;
    t << "m = " << r.m << "  C = " << r.lhv << "  vertices = " << r.vertex_count
      << "  affine rank = " << r.affine_rank << "  " << (r.tight ? "Tight" : "Non-tight")
      << (r.regular_equivalent ? "  (regular)" : "") << "\n";
    emit(o, t.str(), report_json(r));
    return 0;
}

void write_sign(std::ostream& out, const SignMatrix& M) {
    for (int r = 0; r < M.order; ++r) {
        for (int c = 0; c < M.order; ++c)
            out << (M.at(r, c) > 0 ? '+' : M.at(r, c) < 0 ? '-' : '0');
        out << "\n";
    }
}

int run_construct(const CommonOpts& o, const std::string& family, const std::string& arg) {
    std::ostringstream t;
    json j{{"family", family}};
    if (family == "sylvester" || family == "paley" || family == "circulant") {
        SignMatrix M;
        if (family == "sylvester")
            M = sylvester(std::stoi(arg));
        else if (family == "paley")
            M = paley_hadamard(std::stoll(arg));
        else {
            std::vector<int> row;
            std::istringstream is(arg);
            std::string tok;
            while (std::getline(is, tok, ',')) row.push_back(std::stoi(tok));
            M = circulant(row);
        }
        write_sign(t, M);
        j["order"] = M.order;
        j["hadamard"] = is_hadamard(M);
        std::ostringstream rows;
        write_sign(rows, M);
        j["matrix"] = rows.str();
    } else if (family == "fourier-square") {
        const GameMatrix M = fourier_square(std::stoi(arg));
        write_game_matrix(t, M);
        j["order"] = M.n();
        std::ostringstream body;
        write_game_matrix(body, M);
        j["matrix"] = body.str();
    } else if (family == "gyni") {
        const int q = std::stoi(arg);
        const GameTensor S = gyni_tensor(q);
        write_game_tensor(t, S);
        const LhvResult r = lhv_value(game_matrix_from_tensor(S), make_cfg(o));
        t << "# C (Fourier matrix convention) = "
          << (r.exact ? format_rational(r.value_exact) : std::to_string(r.value)) << "\n";
        t << "# C (probability form, x q^2) = "
          << (r.exact ? format_rational(r.value_exact * Rat(static_cast<long>(q) * q))
                      : std::to_string(r.value * q * q))
          << " = q^3\n";
        j["q"] = q;
        j["lhv_matrix_convention"] = r.value;
        j["lhv_probability_form"] = r.value * q * q;
        std::ostringstream body;
        write_game_tensor(body, S);
        j["tensor"] = body.str();
    } else {
        throw BellexError("unknown family " + family);
    }
    emit(o, t.str(), j);
    return 0;
}

int run_catalog_list(const CommonOpts& o) {
    std::ostringstream t;
    json j = json::array();
    for (const auto& [order, index] : builtin_keys()) {
        const auto& e = builtin(order, index);
        const bool reg = detect_regular_equivalent(e.matrix);
        t << order << "/" << index << "  order " << order << (reg ? "  regular-equivalent" : "")
          << "\n";
        j.push_back({{"order", order}, {"index", index}, {"regular_equivalent", reg}});
    }
    emit(o, t.str(), j);
    return 0;
}

int run_catalog_show(const CommonOpts& o, const std::string& ref) {
    const auto [order, index] = parse_ref(ref);
    const auto& e = builtin(order, index);
    std::ostringstream t;
    write_sign(t, e.matrix);
    json j{{"order", e.order}, {"index", e.index}, {"source", e.source}, {"matrix", t.str()}};
    emit(o, t.str(), j);
    return 0;
}

int run_verify_mquwm(const CommonOpts& o, const std::string& file1, const std::string& file2,
                     long long a) {
    const auto set1 = parse_catalogue_text(read_file(file1), MatrixKind::Weighing);
    const auto set2 = parse_catalogue_text(read_file(file2), MatrixKind::Weighing);
    const bool same = file1 == file2;
    std::ostringstream t;
    json j = json::array();
    bool all_ok = true;
    for (std::size_t i = 0; i < set1.size(); ++i)
        for (std::size_t k = same ? i + 1 : 0; k < set2.size(); ++k) {
            const MquwmResult r = mquwm_check(set1[i], set2[k], a);
            all_ok = all_ok && r.ok;
            t << "pair (" << i << "," << k << "): "
              << (r.ok ? "ok(l=" + std::to_string(r.l) + ")" : "fail: " + r.reason) << "\n";
            j.push_back({{"i", i}, {"j", k}, {"ok", r.ok}, {"l", r.l}, {"reason", r.reason}});
        }
    emit(o, t.str(), j);
    return all_ok ? 0 : kExitInput;
}

std::vector<std::complex<double>> reflection(double alpha) {
    // R(alpha) diag(1,-1) R(alpha)^T
    const double c = std::cos(alpha), s = std::sin(alpha);
    return {c * c - s * s, 2 * c * s, 2 * c * s, s * s - c * c};
}

int run_witness(const CommonOpts& o, const std::string& which) {
    double value = 0, expected = 0;
    std::string label;
    if (which == "circulant3") {
        const GameMatrix M = embed_core(core_from_sign_matrix(circulant({0, -1, 1})));
        const double pi = 3.14159265358979323846;
        const std::vector<std::vector<std::complex<double>>> A = {
            reflection(0), reflection(2 * pi / 3), reflection(pi / 3)};
        const std::vector<std::vector<std::complex<double>>> B = {
            reflection(pi / 4), reflection(7 * pi / 12), reflection(11 * pi / 12)};
        value = quantum_witness(M, A, B, 2);
        expected = 3 * std::sqrt(3.0);
        label = "3*sqrt(3)";
    } else if (which == "chsh") {
        SignMatrix H(2);
        H.at(0, 0) = 1;
        H.at(0, 1) = 1;
        H.at(1, 0) = 1;
        H.at(1, 1) = -1;
        const GameMatrix C = embed_core(core_from_sign_matrix(H));
        const double r = 1.0 / std::sqrt(2.0);
        const std::vector<std::vector<std::complex<double>>> A = {
            {1, 0, 0, -1},  // Z
            {0, 1, 1, 0}};  // X
        const std::vector<std::vector<std::complex<double>>> B = {
            {r, r, r, -r},    // (Z+X)/sqrt(2)
            {r, -r, -r, -r}}; // (Z-X)/sqrt(2)
        value = quantum_witness(C, A, B, 2);
        expected = 2 * std::sqrt(2.0);
        label = "2*sqrt(2)";
    } else {
        throw BellexError("witness expects 'circulant3' or 'chsh'");
    }
    std::ostringstream t;
    t << "Q = " << value << "  (expected " << label << " = " << expected << ")\n";
    emit(o, t.str(), json{{"value", value}, {"expected", expected}});
    return std::abs(value - expected) < 1e-6 ? 0 : kExitGolden;
}

struct GoldenRow {
    const char* label;
    int order, index;
    std::uint64_t vertices;
    int rank;
    bool tight, regular;
};

int run_table1(const CommonOpts& o) {
    static const GoldenRow golden[] = {
        {"2", 2, 0, 4, 3, true, false},
        {"4*", 4, 0, 4, 3, false, true},
        {"8", 8, 0, 64, 63, true, false},
        {"12", 12, 0, 2640, 143, true, false},
        {"16(1)*", 16, 0, 896, 105, false, true},
        {"16(2)*", 16, 1, 192, 81, false, true},
        {"16(3)*", 16, 2, 64, 45, false, true},
        {"16(4)", 16, 3, 21504, 255, true, false},
        {"16(5)", 16, 4, 21504, 255, true, false},
        {"20(1)", 20, 0, 20064, 399, true, false},
        {"20(2)", 20, 1, 20064, 399, true, false},
        {"20(3)", 20, 2, 20064, 399, true, false},
    };
    const LhvConfig cfg = make_cfg(o);
    std::ostringstream t;
    json j = json::array();
    bool ok = true;
    t << "row      vertices   rank  verdict    regular\n";
    for (const auto& g : golden) {
        const auto& e = builtin(g.order, g.index);
        const TightnessReport r = tightness_report(core_from_sign_matrix(e.matrix), cfg);
        const bool row_ok = r.vertex_count == g.vertices && r.affine_rank == g.rank &&
                            r.tight == g.tight && r.regular_equivalent == g.regular;
        ok = ok && row_ok;
        t << std::left << std::setw(9) << g.label << std::right
          << r.vertex_count << "\t" << r.affine_rank << "\t"
          << (r.tight ? "Tight    " : "Non-tight") << "  " << (r.regular_equivalent ? "yes" : "no")
          << (row_ok ? "" : "   MISMATCH (expected " + std::to_string(g.vertices) + "/" +
                                std::to_string(g.rank) + ")")
          << "\n";
        j.push_back({{"row", g.label},
                     {"vertices", r.vertex_count},
                     {"affine_rank", r.affine_rank},
                     {"tight", r.tight},
                     {"regular_equivalent", r.regular_equivalent},
                     {"expected_vertices", g.vertices},
                     {"expected_rank", g.rank},
                     {"match", row_ok}});
    }
    t << (ok ? "all rows match\n" : "MISMATCH against expected values\n");
    emit(o, t.str(), j);
    return ok ? 0 : kExitGolden;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LHV values of bipartite Bell inequalities via matrix excess"};
    app.require_subcommand(1);

    CommonOpts lhv_o, exc_o, bnd_o, tgt_o, con_o, cat_o, mq_o, wit_o, t1_o;
    bool lhv_optimizers = false;
    std::string construct_family, construct_arg, show_ref, mq_a_file, mq_b_file, witness_which;
    long long mq_a = 4;

    auto* c_lhv = app.add_subcommand("lhv", "LHV value of a game");
    add_common(c_lhv, lhv_o);
    c_lhv->add_flag("--optimizers", lhv_optimizers, "also count optimal strategies");

    auto* c_exc = app.add_subcommand("excess", "excess of a game matrix");
    add_common(c_exc, exc_o);

    auto* c_bnd = app.add_subcommand("bounds", "bound chain report");
    add_common(c_bnd, bnd_o);

    auto* c_tgt = app.add_subcommand("tightness", "vertex count, affine rank, facet verdict");
    add_common(c_tgt, tgt_o);

    auto* c_con = app.add_subcommand("construct", "generate a matrix family member");
    c_con->add_option("family", construct_family,
                      "sylvester | paley | circulant | fourier-square | gyni")
        ->required();
    c_con->add_option("arg", construct_arg, "family parameter")->required();
    add_common(c_con, con_o, false);

    auto* c_cat = app.add_subcommand("catalog", "embedded matrix catalogue");
    auto* c_list = c_cat->add_subcommand("list", "list embedded matrices");
    add_common(c_list, cat_o, false);
    auto* c_show = c_cat->add_subcommand("show", "print one embedded matrix");
    c_show->add_option("ref", show_ref, "ORDER/INDEX")->required();
    add_common(c_show, cat_o, false);
    c_cat->require_subcommand(1);

    auto* c_mq = app.add_subcommand("verify-mquwm", "check quasi-unbiased weighing pairs");
    c_mq->add_option("set1", mq_a_file, "first weighing-matrix file")->required();
    c_mq->add_option("set2", mq_b_file, "second weighing-matrix file")->required();
    c_mq->add_option("--a", mq_a, "unbiasedness parameter a")->required();
    add_common(c_mq, mq_o, false);

    auto* c_wit = app.add_subcommand("witness", "quantum value of a fixed-observable witness");
    c_wit->add_option("which", witness_which, "circulant3 | chsh")->required();
    add_common(c_wit, wit_o, false);

    auto* c_t1 = app.add_subcommand("table1", "full tightness study over the catalogue");
    add_common(c_t1, t1_o, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_lhv->parsed()) return run_lhv(lhv_o, lhv_optimizers);
        if (c_exc->parsed()) return run_excess(exc_o);
        if (c_bnd->parsed()) return run_bounds(bnd_o);
        if (c_tgt->parsed()) return run_tightness(tgt_o);
        if (c_con->parsed()) return run_construct(con_o, construct_family, construct_arg);
        if (c_cat->parsed()) {
            if (c_list->parsed()) return run_catalog_list(cat_o);
            return run_catalog_show(cat_o, show_ref);
        }
        if (c_mq->parsed()) return run_verify_mquwm(mq_o, mq_a_file, mq_b_file, mq_a);
        if (c_wit->parsed()) return run_witness(wit_o, witness_which);
        if (c_t1->parsed()) return run_table1(t1_o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget refused: " << e.what() << " (required " << e.required << ")\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
