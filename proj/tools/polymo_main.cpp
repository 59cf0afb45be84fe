#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polymo/problem.hpp"
#include "polymo/version.hpp"

namespace {

struct CommonArgs {
    std::string file;
    std::string output = "json";
    bool allow_hypothesis_violations = true;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("file", args.file, "problem file (JSON)")->required();
    cmd->add_option("--output", args.output, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_flag("--allow-hypothesis-violations,!--no-allow-hypothesis-violations",
                  args.allow_hypothesis_violations,
                  "evaluate score queries even when m <= n-3 fails (the warning still prints)")
        ->capture_default_str();
}

int run(const CommonArgs& args, std::optional<polymo::QueryKind> only) {
    polymo::ProblemFile pf;
    try {
        pf = polymo::parse_problem(args.file);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    polymo::RunOptions options;
    options.allow_hypothesis_violations = args.allow_hypothesis_violations;
    options.only_kind = only;
    polymo::Report report = polymo::run_queries(pf, options);
    std::cout << (args.output == "text" ? report.to_text() : report.to_json());
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact polymology products on smooth projective toric varieties"};
    app.set_version_flag("--version", std::string(polymo::kEngineName) + " " + polymo::kEngineVersion);
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
        std::optional<polymo::QueryKind> kind;
    };
    const Sub subs[] = {
        {"run", "run every query in the file", std::nullopt},
        {"validate", "validate the fan and deformation", polymo::QueryKind::Validate},
        {"ring", "print ideal generators and graded dimensions", polymo::QueryKind::Ring},
        {"product", "run the file's product queries", polymo::QueryKind::Product},
        {"score", "run the file's score queries", polymo::QueryKind::Score},
        {"intersect", "run the file's intersect queries", polymo::QueryKind::Intersect},
    };

    CommonArgs args[std::size(subs)];
    for (size_t i = 0; i < std::size(subs); ++i)
        add_common(app.add_subcommand(subs[i].name, subs[i].help), args[i]);

    CLI11_PARSE(app, argc, argv);

    for (size_t i = 0; i < std::size(subs); ++i)
        if (app.get_subcommand(subs[i].name)->parsed()) return run(args[i], subs[i].kind);
    return 1;
}
