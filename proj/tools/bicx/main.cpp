// bicx: evaluate sequence-term expressions and report on the convergence of
// bicomplex series and infinite products.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bicomplex/cli.hpp"

namespace {

using bicomplex::cli::Command;
using bicomplex::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg, bool& json_out) {
    sub->add_option("expr", cfg.expr, "Term expression in n")->required();
    sub->add_flag("--json", json_out, "Emit the report as JSON");
    sub->add_flag("--strict", cfg.strict, "Exit 1 unless the verdict is convergent");
}

void add_convergence(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--tol", cfg.tol, "Cauchy window tolerance")->capture_default_str();
    sub->add_option("--window", cfg.window, "Cauchy window length")->capture_default_str();
    sub->add_option("--max-terms", cfg.max_terms, "Term budget")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bicomplex numerics: term evaluation and convergence reports"};
    app.require_subcommand(1);

    RunConfig cfg;
    bool json_out = false;
    std::string branch;

    auto* eval = app.add_subcommand("eval", "Evaluate EXPR at n");
    add_common(eval, cfg, json_out);
    eval->add_option("--at", cfg.at, "Index n")->capture_default_str();
    eval->add_option("--branch", branch, "Also report the (m,n) logarithm branch, as M,N");

    auto* series = app.add_subcommand("series", "Analyze the series sum_{n>=1} EXPR(n)");
    add_common(series, cfg, json_out);
    add_convergence(series, cfg);

    auto* product = app.add_subcommand("product", "Analyze the product prod_{n>=1} EXPR(n)");
    add_common(product, cfg, json_out);
    add_convergence(product, cfg);

    auto* bounds = app.add_subcommand("check-bounds", "Check the log(1+w) norm bounds at w = EXPR(N) - 1");
    add_common(bounds, cfg, json_out);
    bounds->add_option("--at", cfg.at, "Index n")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (!branch.empty()) {
            const auto comma = branch.find(',');
            if (comma == std::string::npos) throw CLI::ValidationError("--branch", "expected M,N");
            cfg.branch = bicomplex::BranchIndex{std::stoll(branch.substr(0, comma)),
                                                std::stoll(branch.substr(comma + 1))};
        }
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : bicomplex::cli::exit_parse_error;
    } catch (const std::exception& e) {
        std::cerr << "bicx: invalid --branch: " << e.what() << "\n";
        return bicomplex::cli::exit_parse_error;
    }

    if (eval->parsed()) cfg.command = Command::eval;
    else if (series->parsed()) cfg.command = Command::series;
    else if (product->parsed()) cfg.command = Command::product;
    else cfg.command = Command::check_bounds;
    cfg.output = json_out ? bicomplex::cli::Output::json : bicomplex::cli::Output::text;

    return bicomplex::cli::run(cfg, std::cout, std::cerr);
}
