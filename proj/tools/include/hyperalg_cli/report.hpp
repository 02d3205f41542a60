#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperalg/classifier.hpp"
#include "hyperalg/disk_grid.hpp"
#include "hyperalg/lattice.hpp"
#include "hyperalg/serialize.hpp"
#include "hyperalg/symbol.hpp"

namespace hyperalg::cli {

inline constexpr const char* kReportSchema = "hyperalg-report/1";
inline constexpr const char* kVersion = "0.1.0";

enum class Command { Analyze, Classify, Witness, WitnessMulti, Verify };

std::string command_name(Command c);
std::optional<Command> command_from_name(const std::string& name);

// Command-line values that replace the matching config fields.
struct Overrides {
    std::optional<long long> seed;
    std::optional<double> grid_radius;
    std::optional<int> grid_samples;
    std::optional<double> epsilon;
    std::optional<long long> n_max;
};

enum class Placement { Auto, Given, LeastSquares };

// Fully resolved experiment: every default is filled in so the echo in the report
// lists the exact values used.
struct ExperimentConfig {
    Command command = Command::Classify;
    SymbolSpec symbol = SymbolSpec::cos();
    long long seed = 0;
    std::optional<std::string> output;
    DiskGrid grid{3.0, 32, 4};
    double epsilon = 1e-6;
    long long n_max = 1LL << 20;

    // analyze / classify
    int m_max = 8;
    std::vector<double> growth_grid = default_growth_grid();
    int directions = 16;
    std::optional<std::vector<Cplx>> zeros;
    std::size_t zero_truncation = 0;

    // witness / witness-multi
    int m = 2;
    ExponentSet exponents;
    Placement placement = Placement::Auto;
    Json targets = Json::object();
    int fit_terms = 8;
    bool verify = false;

    // verify
    Json report;
};

// Validates `j` against the command's schema. Throws SchemaError naming the offending field.
ExperimentConfig parse_config(const Json& j, const Overrides& ov = {});
Json config_to_json(const ExperimentConfig& c);

struct SideFile {
    std::string name;
    std::string content;
};

struct RunReport {
    std::string command;
    std::string status;  // "ok", "failed" or "error"
    Json config;
    Json outcome;
    std::vector<std::string> warnings;
    std::vector<SideFile> side_files;
    double wall_time = 0.0;
    int exit_code = 0;

    // Everything except the wall time; identical for identical config, seed and version.
    Json payload() const;
    Json to_json() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitOther = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitHypothesis = 3;
inline constexpr int kExitExhausted = 4;

// Runs a parsed config. Pipeline errors are turned into an error report with the failing check named.
RunReport run(const ExperimentConfig& config);
// Parses and runs; schema errors also become error reports.
RunReport run_json(const Json& config, const Overrides& ov = {});

struct CatalogEntry {
    std::string name;
    SymbolSpec symbol;
    Outcome expected;
    std::string route;
    std::string note;
};

std::vector<CatalogEntry> catalog_list();
Json catalog_to_json(const std::vector<CatalogEntry>& entries);

}  // namespace hyperalg::cli
