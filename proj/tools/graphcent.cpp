#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphcent/catalog.hpp"
#include "graphcent/experiments.hpp"
#include "graphcent/graph_io.hpp"
#include "graphcent/report.hpp"
#include "graphcent/verify.hpp"

namespace gc = graphcent;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitMismatch = 4;

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const gc::CatalogId id : gc::catalog_ids()) {
        names.emplace_back(gc::to_string(id));
    }
    return names;
}

gc::OutputFormat parse_format(const std::string& name) {
    if (name == "json") return gc::OutputFormat::json;
    if (name == "csv") return gc::OutputFormat::csv;
    return gc::OutputFormat::markdown_table; // "md", enforced by the flag check
}

std::vector<double> parse_grid(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t consumed = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &consumed);
        } catch (const std::exception&) {
            gc::throw_error(gc::errc::parse_error, flag + ": bad number '" + item + "'");
        }
        if (consumed != item.size()) {
            gc::throw_error(gc::errc::parse_error, flag + ": bad number '" + item + "'");
        }
        out.push_back(value);
    }
    if (out.empty()) {
        gc::throw_error(gc::errc::parse_error, flag + ": empty grid");
    }
    return out;
}

// Errors raised while ingesting flags and input graphs are usage errors
// (exit 2); errors raised while computing indices are domain errors
// (exit 3).
gc::Graph load_input(const std::string& catalog, const std::string& file) {
    if (!catalog.empty()) {
        const auto id = gc::catalog_from_string(catalog);
        if (!id) {
            gc::throw_error(gc::errc::parse_error, "unknown catalog id: " + catalog);
        }
        return gc::catalog_graph(*id);
    }
    return gc::read_graph_file(file);
}

struct GraphInputFlags {
    std::string catalog;
    std::string file;
};

void add_graph_input(CLI::App* cmd, GraphInputFlags& flags) {
    auto* opt_catalog = cmd->add_option("--catalog", flags.catalog, "catalog graph id")
                            ->check(CLI::IsMember(catalog_names()));
    auto* opt_file =
        cmd->add_option("--file", flags.file, "graph file (edge list or .json)");
    opt_catalog->excludes(opt_file);
    opt_file->excludes(opt_catalog);
}

int run_report(const GraphInputFlags& input, const std::string& format,
               const std::string& k_grid_text, const std::string& p_grid_text, bool bits) {
    gc::Graph g(1, {});
    std::vector<double> k_grid;
    std::vector<double> p_grid;
    std::string label;
    try {
        g = load_input(input.catalog, input.file);
        label = input.catalog.empty() ? input.file : input.catalog;
        k_grid = k_grid_text.empty() ? gc::default_k_grid() : parse_grid(k_grid_text, "--k-grid");
        p_grid = p_grid_text.empty() ? gc::default_p_grid() : parse_grid(p_grid_text, "--p-grid");
    } catch (const gc::graph_error& e) {
        std::cerr << "graphcent: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        const gc::CentralizationReport report = gc::make_report(g, label, k_grid, p_grid);
        std::cout << gc::render_report(report, parse_format(format), bits);
        return kExitOk;
    } catch (const gc::graph_error& e) {
        std::cerr << "graphcent: " << e.what() << "\n";
        return kExitDomain;
    }
}

int run_order(const std::string& by, const std::string& format, bool bits) {
    const auto metric = gc::metric_from_string(by); // flag check guarantees a hit
    const gc::OrderingResult result = gc::reproduce_ordering(*metric);
    std::cout << gc::render_ordering(result, parse_format(format), bits);
    return result.matches ? kExitOk : kExitMismatch;
}

int run_verify(int trials, std::uint64_t seed, int n_max) {
    gc::VerifyConfig config;
    config.trials = trials;
    config.seed = seed;
    config.n_max = n_max;
    std::vector<gc::SuiteResult> suites;
    try {
        suites = gc::run_verification(config);
    } catch (const gc::graph_error& e) {
        std::cerr << "graphcent: " << e.what() << "\n";
        return kExitUsage;
    }
    long total_checks = 0;
    long total_failures = 0;
    for (const gc::SuiteResult& suite : suites) {
        total_checks += suite.checks;
        total_failures += suite.failures;
        if (suite.failures == 0) {
            std::cout << "[PASS] " << suite.name << ": " << suite.checks << " checks\n";
        } else {
            std::cout << "[FAIL] " << suite.name << ": " << suite.failures << "/" << suite.checks
                      << " checks failed\n";
            for (const std::string& message : suite.messages) {
                std::cout << "       " << message << "\n";
            }
        }
    }
    std::cout << suites.size() << " suites, " << total_checks << " checks, " << total_failures
              << " failures\n";
    return total_failures == 0 ? kExitOk : kExitVerifyFailed;
}

int run_perturb(const GraphInputFlags& input, const std::string& format, bool bits) {
    gc::Graph g(1, {});
    std::string label;
    try {
        g = load_input(input.catalog, input.file);
        label = input.catalog.empty() ? gc::graph_hash(g) : input.catalog;
    } catch (const gc::graph_error& e) {
        std::cerr << "graphcent: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        const auto records = gc::perturbation_study(g, label);
        std::cout << gc::render_perturbation(records, parse_format(format), bits);
        return kExitOk;
    } catch (const gc::graph_error& e) {
        std::cerr << "graphcent: " << e.what() << "\n";
        return kExitDomain;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphcent: spectral and degree centralization indices of undirected graphs"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"json", "csv", "md"};

    auto* report = app.add_subcommand("report", "compute every index for one graph");
    GraphInputFlags report_input;
    add_graph_input(report, report_input);
    std::string report_format = "json";
    std::string report_k_grid;
    std::string report_p_grid;
    bool report_bits = false;
    report->add_option("--format", report_format, "output format")
        ->check(CLI::IsMember(formats));
    report->add_option("--k-grid", report_k_grid, "comma-separated Theil exponents");
    report->add_option("--p-grid", report_p_grid, "comma-separated Renyi orders");
    report->add_flag("--bits", report_bits, "display entropic values in bits");

    auto* order = app.add_subcommand("order", "rank the 10-graph catalog by one metric");
    std::string order_by;
    std::string order_format = "json";
    bool order_bits = false;
    order->add_option("--by", order_by, "metric: cd|cb|td1|tq")
        ->required()
        ->check(CLI::IsMember({"cd", "cb", "td1", "tq"}));
    order->add_option("--format", order_format, "output format")->check(CLI::IsMember(formats));
    order->add_flag("--bits", order_bits, "display entropic values in bits");

    auto* verify = app.add_subcommand("verify", "run the invariant battery");
    int verify_trials = 1000;
    std::uint64_t verify_seed = 7;
    int verify_n_max = 12;
    verify->add_option("--trials", verify_trials, "random samples per suite");
    verify->add_option("--seed", verify_seed, "base random seed");
    verify->add_option("--n-max", verify_n_max, "largest random-graph size");

    auto* perturb = app.add_subcommand("perturb", "single-vertex-removal study");
    GraphInputFlags perturb_input;
    add_graph_input(perturb, perturb_input);
    std::string perturb_format = "json";
    bool perturb_bits = false;
    perturb->add_option("--format", perturb_format, "output format")
        ->check(CLI::IsMember(formats));
    perturb->add_flag("--bits", perturb_bits, "display entropic values in bits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "graphcent: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto need_input = [](const GraphInputFlags& input) {
        if (input.catalog.empty() && input.file.empty()) {
            std::cerr << "graphcent: need --catalog or --file\n";
            return true;
        }
        return false;
    };

    if (report->parsed()) {
        if (need_input(report_input)) return kExitUsage;
        return run_report(report_input, report_format, report_k_grid, report_p_grid,
                          report_bits);
    }
    if (order->parsed()) {
        return run_order(order_by, order_format, order_bits);
    }
    if (verify->parsed()) {
        return run_verify(verify_trials, verify_seed, verify_n_max);
    }
    if (perturb->parsed()) {
        if (need_input(perturb_input)) return kExitUsage;
        return run_perturb(perturb_input, perturb_format, perturb_bits);
    }
    return kExitUsage; // unreachable: require_subcommand(1)
}
