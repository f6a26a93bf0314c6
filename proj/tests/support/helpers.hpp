#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordis/ordis.hpp"

namespace testsupport {

inline ordis::Literal lit(const std::string& name) {
    if (!name.empty() && name[0] == '-') return ordis::Literal(name.substr(1), true);
    return ordis::Literal(name);
}

inline ordis::LiteralSet lits(std::initializer_list<const char*> names) {
    ordis::LiteralSet out;
    for (const char* n : names) out.insert(lit(n));
    return out;
}

/// Builds a total interpretation over the program universe from name/value
/// pairs; every literal must be covered.
inline ordis::Interpretation3 interp3(const ordis::Program& program,
                                      std::initializer_list<std::pair<const char*, const char*>>
                                          assignment) {
    ordis::Interpretation3 m(program.sigma);
    std::size_t assigned = 0;
    for (const auto& [name, value] : assignment) {
        auto v = ordis::parse_truth3(value);
        if (!v) throw std::runtime_error(std::string("bad truth value ") + value);
        m.set(lit(name), *v);
        ++assigned;
    }
    if (assigned != program.sigma->size())
        throw std::runtime_error("interpretation does not cover the universe");
    return m;
}

inline ordis::Interpretation4 interp4(const ordis::Program& program,
                                      std::initializer_list<std::pair<const char*, const char*>>
                                          assignment) {
    ordis::Interpretation4 m(program.sigma);
    for (const auto& [name, value] : assignment) {
        auto v = ordis::parse_truth4(value);
        if (!v) throw std::runtime_error(std::string("bad truth value ") + value);
        m.set(lit(name), *v);
    }
    return m;
}

inline std::string env_or_fail(const char* name) {
    const char* value = std::getenv(name);
    if (!value || !*value)
        throw std::runtime_error(std::string(name) +
                                 " is not set; run the suite through ctest");
    return value;
}

inline std::string programs_dir() { return env_or_fail("ORDIS_PROGRAMS"); }
inline std::string cli_path() { return env_or_fail("ORDIS_CLI"); }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline ordis::Program load_program(const std::string& name) {
    return ordis::parse_program(read_file(programs_dir() + "/" + name));
}

struct CommandResult {
    int exit_code;
    std::string output;
};

/// Runs the CLI with the given arguments, capturing stdout and stderr.
inline CommandResult run_cli(const std::string& args) {
    std::string command = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    std::string output;
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, n);
    int status = pclose(pipe);
    int exit_code = -1;
    if (status != -1 && WIFEXITED(status)) exit_code = WEXITSTATUS(status);
    return CommandResult{exit_code, output};
}

/// Shell-quotes one argument.
inline std::string quoted(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    return out + "'";
}

}  // namespace testsupport
