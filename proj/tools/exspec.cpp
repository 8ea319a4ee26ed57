#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "exspec/errors.hpp"
#include "exspec/report.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f)
        throw exspec::invalid_input("ParseError", "cannot open input file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

int exit_code_for(const exspec::Error& e) {
    switch (e.kind()) {
        case exspec::ErrorKind::InvalidInput: return 1;
        case exspec::ErrorKind::Internal: return 2;
        case exspec::ErrorKind::NonConvergence: return 3;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exspec - exact spectral analysis of Hermitian operators through their "
        "characteristic polynomials"};
    app.require_subcommand(1);

    std::string input_path = "-";
    std::string tol_text = "1/1000000";
    int max_iter = 0;
    std::string format = "json";

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"analyze", "ladder, minimal polynomial, factorization and class signature"},
        {"minpoly", "minimal polynomial from the moment Hankel determinants"},
        {"factor", "same-multiplicity factorization with syzygy verification"},
        {"gap", "certified lower bounds on the minimal eigenvalue gap"},
        {"bounds", "certified brackets for the extreme eigenvalues"},
        {"count", "distinct eigenvalues inside an interval"},
        {"rates", "worst-case convergence-rate constants and iteration window"},
        {"classify", "lattice occupancy sets and the orbit-class signature"},
        {"compare", "same-orbit and same-class verdicts for two inputs"},
    };
    for (const auto& [name, desc] : commands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--input", input_path, "input JSON file, or - for stdin");
        sub->add_option("--tol", tol_text, "stopping tolerance (rational)");
        sub->add_option("--max-iter", max_iter, "iteration budget override");
        sub->add_option("--format", format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
    }

    CLI11_PARSE(app, argc, argv);
    const std::string sub_name = app.get_subcommands().front()->get_name();

    try {
        auto command = exspec::io::command_from_name(sub_name);
        if (!command)
            throw exspec::invalid_input("ParseError", "unknown command: " + sub_name);

        exspec::io::ordered_json doc;
        try {
            doc = exspec::io::ordered_json::parse(read_input(input_path));
        } catch (const nlohmann::json::exception& e) {
            throw exspec::invalid_input("ParseError", std::string("invalid JSON: ") + e.what());
        }

        exspec::io::Options options;
        options.tol = exspec::Rational::parse(tol_text);
        options.max_iter = max_iter;

        exspec::io::ParsedRequest request = exspec::io::parse_request(*command, doc);
        exspec::io::CommandResult result = exspec::io::run_command(request, options);

        if (format == "text")
            std::cout << exspec::io::render_text(result.report);
        else
            std::cout << result.report.dump(2) << "\n";
        return result.exit_code;
    } catch (const exspec::Error& e) {
        std::cerr << exspec::io::error_report(e.name(), e.what()).dump(2) << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << exspec::io::error_report("Internal", e.what()).dump(2) << "\n";
        return 2;
    }
}
