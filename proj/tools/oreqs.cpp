// oreqs — exact diagonalization of idempotent matrices over Ore extensions
// K[x; sigma, delta], with U, U^-1, rank, free basis, and a step trace.
//
// Exit codes: 0 success; 1 verification or fixture mismatch; 2 usage or
// parse error; 3 input matrix not idempotent; 4 internal invariant failure.

#include <CLI11.hpp>

#include <chrono>
#include <optional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "oreqs/oreqs.hpp"

namespace {

using namespace oreqs;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotIdempotent = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

struct SolveOptions {
    std::string input;
    std::string output;
    bool trace = false;
    bool trace_full = false;
    bool check = true;
    bool json = false;
    bool show_steps_on_fixtures = false;
};

template <Field K>
int solve_one(const Problem<K>& problem, const SolveOptions& opt) {
    std::optional<DiagResult<K>> solved;
    try {
        solved = diagonalize_idempotent(problem.f);
    } catch (const NotIdempotentError& e) {
        OreMatrix<K> defect = mat_sub(mat_mul(problem.f, problem.f), problem.f);
        std::cerr << "error: " << e.what() << "; (F*F - F)(" << e.row() + 1 << ","
                  << e.col() + 1 << ") = " << render_ore_poly(defect.at(e.row(), e.col()))
                  << "\n";
        return kExitNotIdempotent;
    }
    const DiagResult<K>& res = *solved;
    if (opt.check) {
        CheckReport rep = verify_result(problem.f, res);
        if (!rep.all_passed()) {
            std::cerr << "error: result failed verification: " << rep.first_failure() << "\n";
            return kExitInternal;
        }
    }
    if (problem.expected_rank && *problem.expected_rank != res.rank) {
        std::cerr << "warning: expected_rank " << *problem.expected_rank
                  << " does not match computed rank " << res.rank << "\n";
    }
    int verbosity = opt.trace_full ? 2 : (opt.trace ? 1 : 0);
    std::string text;
    if (opt.json)
        text = result_to_json(problem.ring, res, opt.trace || opt.trace_full).dump(2);
    else
        text = render_result(problem.ring, res, verbosity);
    write_output(opt.output, text);
    return kExitOk;
}

int cmd_solve(const SolveOptions& opt) {
    std::string text;
    try {
        text = read_file(opt.input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    ProblemVariant pv = parse_problem(text);
    return std::visit([&](const auto& p) { return solve_one(p, opt); }, pv);
}

struct GenOptions {
    int size = 2;
    int rank = 1;
    std::uint64_t seed = 0;
    int degree = 2;
    int transvections = 6;
    std::string ring_spec;
    std::string output;
};

int cmd_gen(const GenOptions& opt) {
    if (opt.size < 1 || opt.rank < 0 || opt.rank > opt.size) {
        std::cerr << "error: need size >= 1 and 0 <= rank <= size\n";
        return kExitUsage;
    }
    std::string ring_text = opt.ring_spec;
    if (ring_text.find('{') == std::string::npos) ring_text = read_file(ring_text);
    // allow a ring line embedded in a larger file
    if (auto pos = ring_text.find("ring"); pos != std::string::npos)
        ring_text = ring_text.substr(pos);
    FieldKind kind = scan_ring_field_kind(ring_text);
    GenSpec spec{opt.size, opt.rank, opt.transvections, opt.degree, opt.seed};
    std::string text = with_field_kind(kind, [&](auto tag) {
        using K = typename decltype(tag)::type;
        OreRing<K> ring = parse_ring<K>(ring_text);
        auto gen = generate_idempotent(spec, ring);
        Problem<K> p{std::move(ring), std::move(gen.f),
                     "gen-s" + std::to_string(opt.size) + "-r" + std::to_string(opt.rank) +
                         "-seed" + std::to_string(opt.seed),
                     opt.rank};
        return render_problem(p);
    });
    write_output(opt.output, text);
    return kExitOk;
}

int cmd_verify(const std::string& result_path, const std::string& problem_path) {
    ResultVariant rv = parse_result_json(read_file(result_path));
    ProblemVariant pv = parse_problem(read_file(problem_path));
    if (rv.index() != pv.index()) {
        std::cerr << "error: result and problem use different coefficient fields\n";
        return kExitUsage;
    }
    return std::visit(
        [&](const auto& doc) -> int {
            using K = typename std::decay_t<decltype(doc)>::field_type;
            const auto& problem = std::get<Problem<K>>(pv);
            if (!(doc.ring == problem.ring)) {
                std::cerr << "error: result and problem rings differ\n";
                return kExitUsage;
            }
            CheckReport rep = verify_result(problem.f, doc.result);
            for (const auto& item : rep.items)
                std::cout << (item.passed ? "ok   " : "FAIL ") << item.name << "\n";
            if (!rep.all_passed()) return kExitMismatch;
            std::cout << "all checks passed (rank " << doc.result.rank << ")\n";
            return kExitOk;
        },
        rv);
}

int cmd_fixtures(bool trace) {
    int failures = 0;
    for (const auto& fx : kFixtures) {
        auto t0 = std::chrono::steady_clock::now();
        ProblemVariant pv = parse_problem(std::string(fx.oreq));
        int rank = -1;
        bool ok = std::visit(
            [&](const auto& p) {
                auto res = diagonalize_idempotent(p.f);
                rank = res.rank;
                if (trace) {
                    std::cout << "  " << res.trace.size() << " steps\n";
                    int n = 0;
                    for (const auto& st : res.trace) {
                        std::cout << "  step " << ++n << " [" << trace_kind_name(st.kind)
                                  << "]";
                        if (st.kind == TraceKind::transvection)
                            std::cout << " T[" << st.i + 1 << "," << st.j + 1 << "]("
                                      << render_ore_poly(st.m) << ")";
                        else if (st.kind != TraceKind::b1_block)
                            std::cout << " P[" << st.i + 1 << "," << st.j + 1 << "]";
                        if (!st.note.empty()) std::cout << ": " << st.note;
                        std::cout << "\n";
                    }
                }
                return verify_result(p.f, res).all_passed();
            },
            pv);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        bool pass = ok && rank == fx.expected_rank;
        std::cout << (pass ? "ok   " : "FAIL ") << fx.id << ": rank " << rank << " (expected "
                  << fx.expected_rank << "), contract " << (ok ? "verified" : "VIOLATED")
                  << ", " << ms << " ms\n";
        if (!pass) ++failures;
    }
    std::cout << (4 - failures) << "/4 fixtures passed\n";
    return failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Ore-extension idempotent diagonalization"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "diagonalize the matrix in a .oreq problem file");
    solve->add_option("file", solve_opt.input, "problem file (.oreq)")->required();
    solve->add_flag("--trace", solve_opt.trace, "include the elementary-operation trace");
    solve->add_flag("--trace-full", solve_opt.trace_full,
                    "trace plus every intermediate matrix");
    solve->add_flag("--check,!--no-check", solve_opt.check,
                    "re-verify the result before exiting (default on)");
    solve->add_flag("--json", solve_opt.json, "emit the machine-readable result document");
    solve->add_option("-o,--output", solve_opt.output, "write the result to a file");

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate a seeded idempotent problem file");
    gen->add_option("--size", gen_opt.size, "matrix size s")->required();
    gen->add_option("--rank", gen_opt.rank, "target rank (0..s)")->required();
    gen->add_option("--seed", gen_opt.seed, "RNG seed");
    gen->add_option("--degree", gen_opt.degree, "max monomial degree in the conjugators");
    gen->add_option("--transvections", gen_opt.transvections, "number of conjugating transvections");
    gen->add_option("--ring", gen_opt.ring_spec, "ring block text, or a path to a file holding one")
        ->required();
    gen->add_option("-o,--output", gen_opt.output, "write the problem to a file");

    std::string verify_result_path, verify_problem_path;
    auto* verify = app.add_subcommand("verify", "re-check a result document against its problem");
    verify->add_option("result", verify_result_path, "result document (JSON)")->required();
    verify->add_option("problem", verify_problem_path, "problem file (.oreq)")->required();

    bool fixtures_trace = false;
    auto* fixtures = app.add_subcommand("fixtures", "run the built-in sample problems");
    fixtures->add_flag("--trace", fixtures_trace, "print each fixture's step trace");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_opt);
        if (gen->parsed()) return cmd_gen(gen_opt);
        if (verify->parsed()) return cmd_verify(verify_result_path, verify_problem_path);
        if (fixtures->parsed()) return cmd_fixtures(fixtures_trace);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotIdempotentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotIdempotent;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
