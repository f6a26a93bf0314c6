// ordis command line front end: solve .lpod programs under the three-valued
// or the original semantics, compare the two, check candidate
// interpretations, print reducts, and query four-valued equivalences.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ordis/ordis.hpp"
#include "ordis/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitBudget = 2;
constexpr int kExitNegative = 3;
constexpr int kExitUnsupported = 4;

struct CommonOpts {
    std::uint64_t budget = 0;  // 0 keeps the per-function defaults
    unsigned threads = 1;

    ordis::SearchLimits limits() const { return ordis::SearchLimits{budget, threads}; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--budget", opts.budget, "Override the enumeration candidate caps");
    cmd->add_option("--threads", opts.threads, "Worker threads for candidate enumeration")
        ->check(CLI::Range(1u, 256u));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ordis::Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ordis::Literal literal_from_name(const std::string& name) {
    if (!name.empty() && name[0] == '-') return ordis::Literal(name.substr(1), true);
    return ordis::Literal(name);
}

/// Parses the --interp payload: a JSON object mapping every sigma literal to
/// "T", "F*", or "F". Missing or extra literals are input errors.
ordis::Interpretation3 interpretation_from_json(const ordis::Program& program,
                                                const std::string& json_text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ordis::Error(std::string("malformed interpretation JSON: ") + e.what());
    }
    if (!parsed.is_object()) throw ordis::Error("interpretation JSON must be an object");

    ordis::Interpretation3 interp(program.sigma);
    std::size_t assigned = 0;
    for (auto it = parsed.begin(); it != parsed.end(); ++it) {
        ordis::Literal lit = literal_from_name(it.key());
        auto pos = program.sigma->position(lit);
        if (!pos) throw ordis::Error("literal " + it.key() + " is not in the program universe");
        if (!it.value().is_string())
            throw ordis::Error("value for " + it.key() + " must be a string");
        auto value = ordis::parse_truth3(it.value().get<std::string>());
        if (!value)
            throw ordis::Error("value for " + it.key() + " must be one of \"T\", \"F*\", \"F\"");
        interp.values[*pos] = *value;
        ++assigned;
    }
    if (assigned != program.sigma->size())
        throw ordis::Error("interpretation must assign every literal of the universe exactly once");
    return interp;
}

int cmd_solve(const std::string& path, const std::string& semantics, bool json_output,
              const CommonOpts& opts) {
    ordis::Program program = ordis::parse_program(read_file(path));
    std::size_t count = 0;
    if (semantics == "brewka") {
        ordis::BrewkaSolve solve = ordis::solve_brewka(program, opts.limits());
        count = solve.answer_sets.size();
        if (json_output)
            std::cout << ordis::report_json(path, program, solve).dump(2) << "\n";
        else
            ordis::print_brewka_solve_text(std::cout, solve);
    } else {
        ordis::NewSolve solve = semantics == "oracle"
                                    ? ordis::solve_oracle(program, opts.limits())
                                    : ordis::solve_new(program, opts.limits());
        count = solve.answer_sets.size();
        if (json_output)
            std::cout << ordis::report_json(path, semantics, program, solve).dump(2) << "\n";
        else
            ordis::print_new_solve_text(std::cout, semantics, solve);
    }
    return count > 0 ? kExitOk : kExitNegative;
}

int cmd_compare(const std::string& path, const CommonOpts& opts) {
    ordis::Program program = ordis::parse_program(read_file(path));
    if (!program.is_lpod()) throw ordis::NotAnLpodError();
    ordis::CompareOutcome outcome = ordis::compare_semantics(program, opts.limits());
    ordis::print_compare_text(std::cout, outcome);
    return kExitOk;
}

int cmd_check(const std::string& path, const std::string& interp_json) {
    ordis::Program program = ordis::parse_program(read_file(path));
    ordis::Interpretation3 m = interpretation_from_json(program, interp_json);

    if (!ordis::is_consistent(m)) {
        std::cout << "not an answer set: inconsistent\n";
        return kExitNegative;
    }
    ordis::ReductProgram reduct = ordis::x_reduct(program, m);
    if (program.is_lpod()) {
        if (!(ordis::least_model(reduct) == m)) {
            std::cout << "not an answer set: not the least model of the reduct\n";
            return kExitNegative;
        }
    } else {
        if (!ordis::is_model(m, reduct)) {
            std::cout << "not an answer set: not a model of the reduct\n";
            return kExitNegative;
        }
        if (!ordis::is_answer_set(program, m)) {
            std::cout << "not an answer set: not a minimal model of the reduct\n";
            return kExitNegative;
        }
    }
    std::cout << "answer set\n";
    return kExitOk;
}

int cmd_reduct(const std::string& path, const std::string& interp_json) {
    ordis::Program program = ordis::parse_program(read_file(path));
    ordis::Interpretation3 m = interpretation_from_json(program, interp_json);
    std::cout << ordis::render_reduct(ordis::x_reduct(program, m));
    return kExitOk;
}

int cmd_equiv(const std::string& lhs_text, const std::string& rhs_text) {
    ordis::FormulaPtr lhs = ordis::parse_formula(lhs_text);
    ordis::FormulaPtr rhs = ordis::parse_formula(rhs_text);
    ordis::EquivalenceResult result = ordis::check_equivalence(lhs, rhs);
    if (result.equivalent) {
        std::cout << "EQUIVALENT\n";
        return kExitOk;
    }
    const ordis::Counterexample& cx = *result.counterexample;
    std::cout << "NOT EQUIVALENT\ncounterexample: " << cx.to_string() << "\n  lhs="
              << ordis::to_string(cx.lhs) << " rhs=" << ordis::to_string(cx.rhs) << "\n";
    return kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solver for logic programs with ordered disjunction"};
    app.require_subcommand(1);

    std::string file;
    std::string semantics = "new";
    std::string interp_json;
    std::string lhs_text, rhs_text;
    bool json_output = false;
    bool print_all = true;
    CommonOpts opts;

    CLI::App* solve = app.add_subcommand("solve", "Compute answer sets and preference flags");
    solve->add_option("file", file, "Program file (.lpod)")->required();
    solve->add_option("--semantics", semantics, "new (default), brewka, or oracle")
        ->check(CLI::IsMember({"new", "brewka", "oracle"}));
    solve->add_flag("--json", json_output, "Emit the machine-readable JSON report");
    solve->add_flag("--all", print_all, "Print every answer set (default)");
    add_common(solve, opts);

    CLI::App* compare = app.add_subcommand("compare", "Compare both semantics on an LPOD");
    compare->add_option("file", file, "Program file (.lpod)")->required();
    add_common(compare, opts);

    CLI::App* check = app.add_subcommand("check", "Test one interpretation for answer-set-hood");
    check->add_option("file", file, "Program file (.lpod)")->required();
    check->add_option("--interp", interp_json, "JSON object literal -> \"T\"|\"F*\"|\"F\"")
        ->required();

    CLI::App* reduct = app.add_subcommand("reduct", "Print the x-reduct for an interpretation");
    reduct->add_option("file", file, "Program file (.lpod)")->required();
    reduct->add_option("--interp", interp_json, "JSON object literal -> \"T\"|\"F*\"|\"F\"")
        ->required();

    CLI::App* equiv = app.add_subcommand("equiv", "Four-valued equivalence of two formulas");
    equiv->add_option("lhs", lhs_text, "First formula")->required();
    equiv->add_option("rhs", rhs_text, "Second formula")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(file, semantics, json_output, opts);
        if (compare->parsed()) return cmd_compare(file, opts);
        if (check->parsed()) return cmd_check(file, interp_json);
        if (reduct->parsed()) return cmd_reduct(file, interp_json);
        if (equiv->parsed()) return cmd_equiv(lhs_text, rhs_text);
    } catch (const ordis::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ordis::TooManyVariablesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ordis::NotAnLpodError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const ordis::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
