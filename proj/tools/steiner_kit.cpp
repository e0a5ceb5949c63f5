// steiner-kit: build orientals, decompose cells, check complexes, run the verification suites.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <steiner/io.hpp>
#include <steiner/steiner.hpp>

using namespace steiner;
using io::Json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_input_error = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void setup_logging()
{
    auto logger = spdlog::stderr_logger_st("steiner-kit");
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("STEINER_KIT_LOG")) {
        auto level = spdlog::level::from_str(env);
        if (level == spdlog::level::off && std::string(env) != "off")
            spdlog::warn("unknown STEINER_KIT_LOG level '{}'", env);
        else
            spdlog::set_level(level);
    }
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json(const std::string& text, const std::string& what)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(what + ": " + e.what());
    }
}

// Inline JSON when the argument looks like an object, a file path otherwise.
Json json_argument(const std::string& arg, const std::string& what)
{
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '{')
        return parse_json(arg, what);
    return parse_json(slurp(arg), what);
}

void emit(const Json& payload, const std::string& out_path)
{
    std::string text = payload.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw InputError("cannot write " + out_path);
    out << text;
    spdlog::info("wrote {}", out_path);
}

int cmd_oriental(int n, const std::string& out)
{
    if (n < 0 || n > 20)
        throw InputError("n must be between 0 and 20, got " + std::to_string(n));
    spdlog::info("building the oriental of dimension {}", n);
    emit(io::to_json(oriental(n).complex), out);
    return exit_ok;
}

int cmd_decompose(const std::string& adc_path, const std::string& chain_arg, int dim, const std::string& out)
{
    Adc k = io::adc_from_json(json_argument(adc_path, "complex"));
    Chain chain = io::chain_from_json(k.basis(), json_argument(chain_arg, "chain"));
    if (dim < 0)
        dim = degree(chain);
    Cell cell = make_cell(k, chain, dim);
    ExpressionTree tree = decompose_full(k, cell);
    bool ok = evaluate(k, tree, dim) == cell;
    Json payload{{"chain", io::to_json(chain)},
                 {"dim", dim},
                 {"render", render(tree)},
                 {"tree", io::to_json(tree)},
                 {"recomposes", ok}};
    emit(payload, out);
    return ok ? exit_ok : exit_check_failed;
}

int cmd_check(const std::string& adc_path, const std::string& out)
{
    Adc k = io::adc_from_json(json_argument(adc_path, "complex"));
    UnitaryReport unitary = is_unitary(k);
    LoopFreeReport loops = is_loop_free(k);
    Json payload{{"valid", true}, {"size", k.basis()->size()}, {"unitary", unitary.ok}, {"loop_free", loops.ok}};
    if (!unitary.ok)
        payload["violators"] = unitary.violators;
    if (!loops.ok)
        payload["cycle"] = Json{{"level", loops.level}, {"ids", loops.cycle}};
    bool ok = unitary.ok && loops.ok;
    payload["ok"] = ok;
    if (!ok)
        spdlog::warn("complex is not unitary and loop-free");
    emit(payload, out);
    return ok ? exit_ok : exit_check_failed;
}

Json record_json(const CheckRecord& r)
{
    Json j{{"suite", r.suite}, {"kind", r.kind}};
    if (r.n >= 0)
        j["n"] = r.n;
    if (r.i >= 0)
        j["i"] = r.i;
    if (r.k >= 0)
        j["k"] = r.k;
    j["cases"] = r.cases;
    j["ok"] = r.ok;
    if (!r.failures.empty())
        j["failures"] = r.failures;
    return j;
}

int cmd_verify(const std::string& suite, int max_n, std::uint64_t seed, const std::string& complex_path,
               const std::string& out)
{
    VerifyReport report;
    if (!complex_path.empty()) {
        Adc k = io::adc_from_json(json_argument(complex_path, "complex"));
        spdlog::info("checking random cells of {} with seed {}", complex_path, seed);
        report.checks.push_back(coherence_check(k, -1, seed, 300));
    } else {
        if (max_n < 0 || max_n > 7)
            throw InputError("--max-n must be between 0 and 7");
        spdlog::info("suite {} up to n = {} with seed {}", suite, max_n, seed);
        report = run_suite(suite, max_n, seed);
    }
    Json checks = Json::array();
    std::size_t failed = 0;
    for (const auto& r : report.checks) {
        checks.push_back(record_json(r));
        if (!r.ok) {
            ++failed;
            spdlog::warn("{} {} n={} i={} k={} failed", r.suite, r.kind, r.n, r.i, r.k);
        }
    }
    Json payload{{"suite", complex_path.empty() ? suite : "complex"},
                 {"seed", seed},
                 {"ok", report.ok()},
                 {"failed", failed},
                 {"checks", checks}};
    if (complex_path.empty())
        payload["max_n"] = max_n;
    emit(payload, out);
    return report.ok() ? exit_ok : exit_check_failed;
}

} // namespace

int main(int argc, char** argv)
{
    setup_logging();
    CLI::App app{"Steiner complexes, orientals and horn equations"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out;
    app.add_option("--out", out, "Write the JSON payload to this file instead of standard output");

    int n = 0;
    auto* oriental_cmd = app.add_subcommand("oriental", "Chain complex of the standard n-simplex as JSON");
    oriental_cmd->add_option("n", n, "Dimension")->required();

    std::string adc_path;
    std::string chain_arg;
    int dim = -1;
    auto* decompose_cmd = app.add_subcommand("decompose", "Fully decompose a coherent chain into atoms");
    decompose_cmd->add_option("complex", adc_path, "Complex JSON file")->required();
    decompose_cmd->add_option("chain", chain_arg, "Chain as inline JSON object or file")->required();
    decompose_cmd->add_option("--dim", dim, "Cell dimension (defaults to the degree of the chain)");

    auto* check_cmd = app.add_subcommand("check", "Validate a complex and test unitarity and loop-freeness");
    check_cmd->add_option("complex", adc_path, "Complex JSON file")->required();

    std::string suite = "all";
    int max_n = 5;
    std::uint64_t seed = default_seed;
    std::string complex_path;
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
    verify_cmd->add_option("--suite", suite, "faces, coherence, horns, complicial or all")
        ->check(CLI::IsMember({"faces", "coherence", "horns", "complicial", "all"}));
    verify_cmd->add_option("--max-n", max_n, "Largest simplex dimension");
    verify_cmd->add_option("--seed", seed, "Seed for random cells")->capture_default_str();
    verify_cmd->add_option("--complex", complex_path, "Check random cells of this complex instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (*oriental_cmd)
            return cmd_oriental(n, out);
        if (*decompose_cmd)
            return cmd_decompose(adc_path, chain_arg, dim, out);
        if (*check_cmd)
            return cmd_check(adc_path, out);
        return cmd_verify(suite, max_n, seed, complex_path, out);
    } catch (const Error& e) {
        spdlog::error("{}", e.what());
        std::cout << Json{{"error", error_name(e.code())}, {"message", e.what()}}.dump(2) << "\n";
    } catch (const InputError& e) {
        spdlog::error("{}", e.what());
        std::cout << Json{{"error", "InputError"}, {"message", e.what()}}.dump(2) << "\n";
    } catch (const Json::exception& e) {
        spdlog::error("{}", e.what());
        std::cout << Json{{"error", "MalformedInput"}, {"message", e.what()}}.dump(2) << "\n";
    }
    return exit_input_error;
}
