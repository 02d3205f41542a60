#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hyperalg_cli/report.hpp"

namespace fs = std::filesystem;
using hyperalg::Json;
namespace cli = hyperalg::cli;

namespace {

struct Flags {
    std::string config_path;
    std::string out_dir;
    cli::Overrides ov;
};

void write_file(const fs::path& p, const std::string& content) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << content;
}

// Report and side files go to --out when given, else next to the config's output path,
// else the report is printed on stdout.
void emit(const cli::RunReport& r, const Flags& flags) {
    const std::string text = r.to_json().dump(2) + "\n";
    std::optional<std::string> output;
    if (r.config.is_object() && r.config.contains("output") && r.config["output"].is_string())
        output = r.config["output"].get<std::string>();

    fs::path report_path, dir;
    if (!flags.out_dir.empty()) {
        dir = flags.out_dir;
        report_path = dir / (output ? fs::path(*output).filename() : fs::path("report.json"));
    } else if (output) {
        report_path = *output;
        dir = report_path.parent_path();
    } else {
        std::cout << text;
        return;
    }
    write_file(report_path, text);
    for (const auto& f : r.side_files) write_file(dir / f.name, f.content);
    std::cerr << r.command << ": " << r.status << " -> " << report_path.string() << "\n";
}

int run_command(const std::string& command, const Flags& flags) {
    Json config;
    cli::RunReport r;
    try {
        std::ifstream in(flags.config_path);
        if (!in) throw hyperalg::SchemaError("cannot open config '" + flags.config_path + "'");
        try {
            config = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw hyperalg::SchemaError(std::string("config is not valid JSON: ") + e.what());
        }
        if (!config.is_object()) throw hyperalg::SchemaError("config: expected a JSON object");
        if (!config.contains("command")) config["command"] = command;
        if (config["command"] != command)
            throw hyperalg::SchemaError("config command '" + config["command"].dump() + "' does not match subcommand '" +
                                        command + "'");
        r = cli::run_json(config, flags.ov);
    } catch (const hyperalg::SchemaError& e) {
        r.command = command;
        r.status = "error";
        r.exit_code = cli::kExitSchema;
        r.config = config;
        r.outcome = {{"error", {{"type", "schema"}, {"message", e.what()}}}};
    }
    if (r.status == "error") std::cerr << "error: " << r.outcome["error"]["message"].get<std::string>() << "\n";
    emit(r, flags);
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypercyclic algebra experiments for convolution operators"};
    app.set_version_flag("--version", std::string(cli::kVersion));
    app.require_subcommand(1);

    Flags flags;
    long long seed = 0;
    double radius = 0.0, epsilon = 0.0;
    int samples = 0;
    long long n_max = 0;

    std::string chosen;
    for (const char* name : {"analyze", "classify", "witness", "witness-multi", "verify"}) {
        auto* sub = app.add_subcommand(name, std::string("run the ") + name + " pipeline");
        sub->add_option("--config", flags.config_path, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", flags.out_dir, "directory for the report and CSV side files");
        sub->add_option("--seed", seed, "seed recorded in the report");
        sub->add_option("--grid-radius", radius, "radius of the sample disk")->check(CLI::PositiveNumber);
        sub->add_option("--grid-samples", samples, "points per circle of the sample disk")->check(CLI::PositiveNumber);
        sub->add_option("--epsilon", epsilon, "residual tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--n-max", n_max, "iteration budget")->check(CLI::PositiveNumber);
        sub->callback([&chosen, name] { chosen = name; });
    }
    auto* cat = app.add_subcommand("catalog", "list the preset symbols with their expected verdicts");
    cat->add_option("--out", flags.out_dir, "directory for catalog.json");
    cat->callback([&chosen] { chosen = "catalog"; });

    CLI11_PARSE(app, argc, argv);

    if (chosen == "catalog") {
        const std::string text = cli::catalog_to_json(cli::catalog_list()).dump(2) + "\n";
        if (flags.out_dir.empty()) {
            std::cout << text;
        } else {
            write_file(fs::path(flags.out_dir) / "catalog.json", text);
        }
        return 0;
    }

    auto* sub = app.get_subcommand(chosen);
    if (sub->count("--seed")) flags.ov.seed = seed;
    if (sub->count("--grid-radius")) flags.ov.grid_radius = radius;
    if (sub->count("--grid-samples")) flags.ov.grid_samples = samples;
    if (sub->count("--epsilon")) flags.ov.epsilon = epsilon;
    if (sub->count("--n-max")) flags.ov.n_max = n_max;
    try {
        return run_command(chosen, flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitOther;
    }
}
