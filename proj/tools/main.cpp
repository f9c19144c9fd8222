#include "sylv/condense.hpp"
#include "sylv/cost_model.hpp"
#include "sylv/error.hpp"
#include "sylv/io.hpp"
#include "sylv/solver.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace sylv;

int exit_code_for(Errc c) {
    switch (c) {
        case Errc::parse: return 2;
        case Errc::singular: return 3;
        case Errc::rank_deficient: return 4;
        default: return 5;
    }
}

Backend pick_backend(const std::string& flag, const std::vector<std::string>& files,
                     Backend fallback) {
    if (flag == "exact") return Backend::exact;
    if (flag == "float" || flag == "float64") return Backend::float64;
    return resolve_backend(files, fallback);
}

std::size_t pick_k(const std::string& flag, std::size_t n) {
    if (flag == "auto") {
        if (n < 2) return 1;
        return optimal_k(n);
    }
    std::size_t k = 0;
    try {
        k = std::stoul(flag);
    } catch (const std::exception&) {
        throw Error(Errc::invalid_argument, "invalid block order '" + flag + "'");
    }
    if (k < 1 || (n > 1 && k > n - 1))
        throw Error(Errc::invalid_argument, "block order must lie in [1, n-1]");
    return k;
}

PivotStrategy pick_pivot(const std::string& flag) {
    return flag == "leading" ? PivotStrategy::leading : PivotStrategy::greedy;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw Error(Errc::invalid_argument, "empty entry in index list");
        out.push_back(std::stoul(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else if (c >= '0' && c <= '9') {
            cur.push_back(c);
        } else {
            throw Error(Errc::invalid_argument, std::string("invalid index list character '") + c + "'");
        }
    }
    flush();
    return out;
}

void print_ops(const OpCounter& c) {
    std::cout << "ops: mul_div=" << c.mul_div << " add_sub=" << c.add_sub << "\n";
}

std::string ops_json(const OpCounter& c) {
    return "{\"mul_div\":" + std::to_string(c.mul_div) +
           ",\"add_sub\":" + std::to_string(c.add_sub) + "}";
}

struct DetArgs {
    std::string matrix;
    std::string backend = "auto";
    std::string k = "auto";
    std::string pivot = "greedy";
    std::string format = "text";
    unsigned workers = 1;
};

int run_det(const DetArgs& a) {
    Backend b = pick_backend(a.backend, {a.matrix}, Backend::float64);
    Matrix m = parse_matrix_file(a.matrix, b);
    if (!m.is_square()) throw Error(Errc::invalid_argument, "determinant requires a square matrix");
    std::size_t k = pick_k(a.k, m.rows());
    OpCounter counter;
    Scalar det = determinant(m, k, pick_pivot(a.pivot), counter, a.workers);
    if (a.format == "json") {
        std::cout << "{\"command\":\"det\",\"n\":" << m.rows() << ",\"k\":" << k << ",\"backend\":\""
                  << backend_name(b) << "\",\"det\":\"" << det.to_string()
                  << "\",\"ops\":" << ops_json(counter) << "}\n";
    } else if (a.format == "csv") {
        std::cout << "n,k,backend,det,mul_div,add_sub\n"
                  << m.rows() << ',' << k << ',' << backend_name(b) << ',' << det.to_string() << ','
                  << counter.mul_div << ',' << counter.add_sub << "\n";
    } else {
        std::cout << det.to_string() << "\n";
        print_ops(counter);
    }
    return 0;
}

struct SolveArgs {
    std::string matrix;
    std::string rhs;
    std::string backend = "auto";
    std::string k = "auto";
    std::string pivot = "greedy";
    std::string method = "gaussian";
    std::string format = "text";
    std::string targets;
    std::size_t group_size = 0;
    unsigned workers = 1;
};

int run_solve(const SolveArgs& a) {
    Backend b = pick_backend(a.backend, {a.matrix, a.rhs}, Backend::exact);
    Matrix m = parse_matrix_file(a.matrix, b);
    std::vector<Scalar> rhs = parse_vector_file(a.rhs, b);
    std::size_t n = m.rows();

    SolveOptions opts;
    opts.block = pick_k(a.k, n);
    opts.pivot = pick_pivot(a.pivot);
    opts.terminal = a.method == "cramer" ? TerminalMethod::cramer : TerminalMethod::gaussian;
    opts.workers = a.workers;

    OpCounter counter;
    Solution sol;
    if (!a.targets.empty()) {
        sol = solve_for(m, rhs, parse_index_list(a.targets), opts, counter);
    } else {
        std::size_t gs = a.group_size > 0 ? a.group_size : (n + 1) / 2;
        sol = solve_all(m, rhs, gs, opts, counter);
    }

    if (a.format == "json") {
        std::cout << "{\"command\":\"solve\",\"n\":" << n << ",\"k\":" << opts.block
                  << ",\"backend\":\"" << backend_name(b) << "\",\"solution\":{";
        bool first = true;
        for (const auto& [idx, val] : sol.values) {
            if (!first) std::cout << ',';
            first = false;
            std::cout << "\"" << idx << "\":\"" << val.to_string() << "\"";
        }
        std::cout << "},\"ops\":" << ops_json(counter) << "}\n";
    } else if (a.format == "csv") {
        std::cout << "index,value\n";
        for (const auto& [idx, val] : sol.values)
            std::cout << idx << ',' << val.to_string() << "\n";
    } else {
        for (const auto& [idx, val] : sol.values)
            std::cout << "x" << idx << " = " << val.to_string() << "\n";
        print_ops(counter);
    }
    return 0;
}

struct BenchArgs {
    std::size_t n = 128;
    std::string ks = "1,2,4,8";
    std::uint64_t seed = 1;
    std::string format = "text";
    unsigned workers = 1;
};

int run_bench(const BenchArgs& a) {
    std::vector<std::size_t> ks = parse_index_list(a.ks);
    std::vector<BenchReport> reports;
    for (std::size_t k : ks) reports.push_back(run_benchmark(a.n, k, a.seed, a.workers));
    if (a.format == "json") {
        std::cout << "[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) std::cout << ',';
            std::cout << to_json(reports[i]);
        }
        std::cout << "]\n";
    } else if (a.format == "csv") {
        std::cout << "n,k,measured_mul,measured_add,model_mul,deviation\n";
        for (const auto& r : reports)
            std::cout << r.n << ',' << r.k << ',' << r.measured_mul << ',' << r.measured_add << ','
                      << r.model_mul << ',' << format_double(r.deviation) << "\n";
    } else {
        std::printf("%8s %4s %14s %14s %14s %10s\n", "n", "k", "measured_mul", "model_mul",
                    "deviation", "add_sub");
        for (const auto& r : reports)
            std::printf("%8zu %4zu %14llu %14llu %9.4f%% %10llu\n", r.n, r.k,
                        static_cast<unsigned long long>(r.measured_mul),
                        static_cast<unsigned long long>(r.model_mul), r.deviation * 100.0,
                        static_cast<unsigned long long>(r.measured_add));
    }
    return 0;
}

struct OptimalArgs {
    std::string ns = "500,1000,5000,20000";
    bool count_adds = false;
    std::string format = "text";
};

int run_optimal(const OptimalArgs& a) {
    std::vector<std::size_t> ns = parse_index_list(a.ns);
    std::vector<std::pair<std::size_t, std::size_t>> rows;
    for (std::size_t n : ns) rows.emplace_back(n, optimal_k(n, {}, a.count_adds));
    if (a.format == "json") {
        std::cout << "[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) std::cout << ',';
            std::cout << "{\"n\":" << rows[i].first << ",\"k_star\":" << rows[i].second << "}";
        }
        std::cout << "]\n";
    } else if (a.format == "csv") {
        std::cout << "n,k_star\n";
        for (const auto& [n, k] : rows) std::cout << n << ',' << k << "\n";
    } else {
        for (const auto& [n, k] : rows) std::cout << n << ' ' << k << "\n";
    }
    return 0;
}

void add_common_flags(CLI::App* cmd, std::string& backend, std::string& k, std::string& pivot,
                      std::string& format, unsigned& workers) {
    cmd->add_option("--backend", backend, "scalar backend: exact, float, or auto")
        ->check(CLI::IsMember({"exact", "float", "float64", "auto"}));
    cmd->add_option("--k", k, "block order, or 'auto' for the model optimum");
    cmd->add_option("--pivot", pivot, "pivot block strategy")
        ->check(CLI::IsMember({"greedy", "leading"}));
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--workers", workers, "worker threads for row assembly")
        ->check(CLI::Range(1u, 256u));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"determinants and linear solves by block condensation"};
    app.require_subcommand(1);

    DetArgs det_args;
    auto* det_cmd = app.add_subcommand("det", "determinant of a square matrix");
    det_cmd->add_option("matrix", det_args.matrix, "matrix file")->required();
    add_common_flags(det_cmd, det_args.backend, det_args.k, det_args.pivot, det_args.format,
                     det_args.workers);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "solve A x = b");
    solve_cmd->add_option("matrix", solve_args.matrix, "coefficient matrix file")->required();
    solve_cmd->add_option("rhs", solve_args.rhs, "right-hand side vector file")->required();
    add_common_flags(solve_cmd, solve_args.backend, solve_args.k, solve_args.pivot,
                     solve_args.format, solve_args.workers);
    auto* targets_opt =
        solve_cmd->add_option("--targets", solve_args.targets,
                              "comma-separated 1-based unknowns to solve for");
    solve_cmd->add_option("--group-size", solve_args.group_size,
                          "solve every unknown, in groups of this size")
        ->excludes(targets_opt);
    solve_cmd->add_option("--method", solve_args.method, "terminal system method")
        ->check(CLI::IsMember({"gaussian", "cramer"}));

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "measured operation counts vs the cost model");
    bench_cmd->add_option("--n", bench_args.n, "matrix order")->check(CLI::Range(2, 4096));
    bench_cmd->add_option("--k", bench_args.ks, "comma-separated block orders");
    bench_cmd->add_option("--seed", bench_args.seed, "random matrix seed");
    bench_cmd->add_option("--format", bench_args.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    bench_cmd->add_option("--workers", bench_args.workers, "worker threads")
        ->check(CLI::Range(1u, 256u));

    OptimalArgs optimal_args;
    auto* opt_cmd = app.add_subcommand("optimal-k", "model-optimal block order per matrix order");
    opt_cmd->add_option("--n", optimal_args.ns, "comma-separated matrix orders");
    opt_cmd->add_flag("--count-adds", optimal_args.count_adds,
                      "include additions in the objective");
    opt_cmd->add_option("--format", optimal_args.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 5;
    }

    try {
        if (det_cmd->parsed()) return run_det(det_args);
        if (solve_cmd->parsed()) return run_solve(solve_args);
        if (bench_cmd->parsed()) return run_bench(bench_args);
        if (opt_cmd->parsed()) return run_optimal(optimal_args);
    } catch (const sylv::Error& e) {
        std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
