// sntrank — exact SNT-rank computation, certificates, and verification for
// pattern graphs. One JSON document per invocation on stdout; --human for a
// readable rendering. Exit codes: 0 ok, 2 parse error, 3 limit exceeded,
// 4 verification failed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sntrank/closed_form.hpp"
#include "sntrank/errors.hpp"
#include "sntrank/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;
constexpr int kExitVerify = 4;

struct CommonArgs {
    std::string graph_path;
    std::string method = "auto";
    std::string format = "auto";
    int max_order = -1;
    double time_limit = -1;
    int threads = 1;
    bool human = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_graph = true) {
    if (with_graph) cmd->add_option("graph", args.graph_path, "graph file")->required();
    cmd->add_option("--method", args.method, "auto|exact|closed")
        ->check(CLI::IsMember({"auto", "exact", "closed"}));
    cmd->add_option("--format", args.format, "auto|edgelist|structured")
        ->check(CLI::IsMember({"auto", "edgelist", "structured"}));
    cmd->add_option("--max-order", args.max_order, "cap on cover order");
    cmd->add_option("--time-limit", args.time_limit, "wall-clock budget in seconds");
    cmd->add_option("--threads", args.threads, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--human", args.human, "human-readable rendering");
}

sntrank::SolverOptions make_options(const CommonArgs& args) {
    sntrank::SolverOptions opts;
    if (args.max_order >= 0) opts.max_order = args.max_order;
    if (args.time_limit > 0) opts.time_limit_s = args.time_limit;
    opts.threads = args.threads;
    opts.closed_form_only = args.method == "closed";
    return opts;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sntrank::parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

sntrank::GraphFormat parse_format(const std::string& name) {
    if (name == "edgelist") return sntrank::GraphFormat::edgelist;
    if (name == "structured") return sntrank::GraphFormat::structured;
    return sntrank::GraphFormat::autodetect;
}

sntrank::Graph load_graph(const CommonArgs& args) {
    return sntrank::parse_graph(slurp(args.graph_path), parse_format(args.format));
}

sntrank::SolveResult run_solver(const sntrank::Graph& g, const CommonArgs& args) {
    const auto opts = make_options(args);
    if (args.method == "exact") return sntrank::snt_rank_exact(g, opts);
    return sntrank::snt_rank(g, opts);
}

void emit(const sntrank::Json& j) { std::cout << j.dump(2) << "\n"; }

int status_exit(sntrank::SolveStatus s) {
    return s == sntrank::SolveStatus::exact ? kExitOk : kExitLimit;
}

int cmd_rank(const CommonArgs& args) {
    const auto g = load_graph(args);
    const auto res = run_solver(g, args);
    if (args.human)
        std::cout << "st_plus(" << args.graph_path << ") = " << res.rank << " ("
                  << sntrank::status_name(res.status) << ")\n";
    else
        emit(sntrank::solve_result_to_json(res, false));
    return status_exit(res.status);
}

int cmd_cover(const CommonArgs& args) {
    const auto g = load_graph(args);
    const auto res = run_solver(g, args);
    if (args.human) {
        std::cout << "st_plus = " << res.rank << " (" << sntrank::status_name(res.status) << ")\n";
        for (const auto& comp : res.certificate.components()) {
            std::cout << "  component {";
            bool first = true;
            for (int v = comp.find_first(); v >= 0; v = comp.find_next(v)) {
                std::cout << (first ? "" : ",") << v + 1;
                first = false;
            }
            std::cout << "}\n";
        }
        for (auto [a, b] : res.certificate.joins())
            std::cout << "  join " << a << " v " << b << "\n";
    } else {
        emit(sntrank::solve_result_to_json(res, true));
    }
    return status_exit(res.status);
}

int cmd_enumerate(const CommonArgs& args) {
    const auto g = load_graph(args);
    const auto en = sntrank::enumerate_optimal_covers(g, make_options(args));
    if (!en.complete) {
        std::cerr << "enumeration incomplete (time limit)\n";
        return kExitLimit;
    }
    sntrank::Json j;
    j["st_plus"] = en.covers.empty() ? 0 : en.covers.front().order();
    j["count"] = en.covers.size();
    sntrank::Json covers = sntrank::Json::array();
    for (const auto& c : en.covers) covers.push_back(sntrank::cover_to_json(c));
    j["covers"] = std::move(covers);
    if (args.human)
        std::cout << j["count"].get<std::size_t>() << " optimal covers of order "
                  << j["st_plus"].get<int>() << "\n";
    else
        emit(j);
    return kExitOk;
}

int cmd_factorize(const CommonArgs& args) {
    const auto g = load_graph(args);
    const auto res = run_solver(g, args);
    if (res.status != sntrank::SolveStatus::exact) {
        std::cerr << "no exact cover available\n";
        return kExitLimit;
    }
    const auto [b, cmat] = sntrank::cover_to_factors(res.certificate);
    sntrank::Json j;
    j["st_plus"] = res.rank;
    j["cover"] = sntrank::cover_to_json(res.certificate);
    j["B"] = sntrank::matrix_to_json(b);
    j["C"] = sntrank::matrix_to_json(cmat);
    if (args.human)
        std::cout << "st_plus = " << res.rank << "; B is " << b.rows() << "x" << b.cols()
                  << ", C is " << cmat.rows() << "x" << cmat.cols() << "\n";
    else
        emit(j);
    return kExitOk;
}

int cmd_verify(const CommonArgs& args, const std::string& witness_path) {
    const auto g = load_graph(args);
    sntrank::Json w;
    try {
        w = sntrank::Json::parse(slurp(witness_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw sntrank::parse_error(e.what());
    }
    sntrank::ValidityReport rep;
    if (w.contains("B") && w.contains("C")) {
        const auto b = sntrank::matrix_from_json(w["B"]);
        const auto cmat = sntrank::matrix_from_json(w["C"]);
        const auto pattern = sntrank::pattern_of(sntrank::triproduct(b, cmat));
        if (pattern.vertex_count() != g.vertex_count())
            throw sntrank::parse_error("factor dimensions do not match the graph");
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u; v < g.vertex_count(); ++v) {
                if (g.has_edge(u, v) && !pattern.has_edge(u, v)) rep.missing.emplace_back(u, v);
                if (!g.has_edge(u, v) && pattern.has_edge(u, v)) rep.forbidden.emplace_back(u, v);
            }
        rep.valid = rep.missing.empty() && rep.forbidden.empty();
    } else {
        const auto cover = sntrank::cover_from_json(w, g.vertex_count());
        rep = sntrank::validate_cover(g, cover);
    }
    if (args.human)
        std::cout << (rep.valid ? "valid" : "INVALID") << " (" << rep.missing.size()
                  << " missing, " << rep.forbidden.size() << " forbidden)\n";
    else
        emit(sntrank::validity_to_json(rep));
    return rep.valid ? kExitOk : kExitVerify;
}

int cmd_uniqueness(const CommonArgs& args) {
    const auto g = load_graph(args);
    const auto rep = sntrank::classify_uniqueness(g, make_options(args));
    if (args.human)
        std::cout << "st_plus = " << rep.rank << "; " << rep.covers.size() << " covers, "
                  << rep.orbit_count << " orbits, " << rep.cover_graphs.size()
                  << " cover graphs; unique=" << rep.unique
                  << " essentially_unique=" << rep.essentially_unique
                  << " unique_cover_graph=" << rep.unique_cover_graph << "\n";
    else
        emit(sntrank::uniqueness_to_json(rep));
    return kExitOk;
}

int cmd_katona(long long n, bool human) {
    const int s = sntrank::katona_s(n);
    const auto witness = sntrank::min_factor_sum(n);
    sntrank::Json j;
    j["s"] = s;
    j["witness_factors"] = witness.factors;
    j["cover_order"] = n >= 2 ? sntrank::build_complete_cover(int(n)).order() : 0;
    if (human) {
        std::cout << "s(" << n << ") = " << s << ", factors";
        for (int q : witness.factors) std::cout << " " << q;
        std::cout << "\n";
    } else {
        emit(j);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact SNT-rank solver, certificate builder, and verifier"};
    app.require_subcommand(1);

    CommonArgs rank_args, cover_args, enum_args, fact_args, verify_args, uniq_args;
    std::string witness_path;
    long long katona_n = 0;
    bool katona_human = false;

    add_common(app.add_subcommand("rank", "compute st_plus of a graph"), rank_args);
    add_common(app.add_subcommand("cover", "compute st_plus with a certificate cover"),
               cover_args);
    add_common(app.add_subcommand("enumerate", "list all optimal covers"), enum_args);
    add_common(app.add_subcommand("factorize", "emit witness matrices B and C"), fact_args);
    auto* verify = app.add_subcommand("verify", "check a cover or a factorization");
    add_common(verify, verify_args);
    verify->add_option("witness", witness_path, "cover or {B,C} JSON file")->required();
    add_common(app.add_subcommand("uniqueness", "classify optimal-cover uniqueness"), uniq_args);
    auto* katona = app.add_subcommand("katona", "separating-cover size and witness factors");
    katona->add_option("n", katona_n, "number of elements")->required();
    katona->add_flag("--human", katona_human, "human-readable rendering");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (app.got_subcommand("rank")) return cmd_rank(rank_args);
        if (app.got_subcommand("cover")) return cmd_cover(cover_args);
        if (app.got_subcommand("enumerate")) return cmd_enumerate(enum_args);
        if (app.got_subcommand("factorize")) return cmd_factorize(fact_args);
        if (app.got_subcommand("verify")) return cmd_verify(verify_args, witness_path);
        if (app.got_subcommand("uniqueness")) return cmd_uniqueness(uniq_args);
        if (app.got_subcommand("katona")) return cmd_katona(katona_n, katona_human);
    } catch (const sntrank::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const sntrank::limit_error& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return kExitLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
