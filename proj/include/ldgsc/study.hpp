#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ldgsc/metrics.hpp"
#include "ldgsc/problems.hpp"
#include "ldgsc/time_stepper.hpp"

namespace ldgsc {

inline constexpr const char* kVersion = "1.0.0";

/// Raised for malformed or inconsistent study configurations.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class InitMode {
    Correction,  ///< P^-/P^+ projection minus the order-l correction
    Plain,       ///< P^- u0 (Alt1) or P^+ u0 (Alt2)
    L2,          ///< L2 projection of u0
};

std::string to_string(InitMode mode);
InitMode init_mode_from_string(const std::string& name);

struct StudyConfig {
    std::string name = "custom";
    /// example1 | example2 | manufactured
    std::string problem = "example1";
    /// Solution terms; only read when problem == "manufactured".
    std::vector<ManufacturedTerm> terms;
    BoundaryKind boundary = BoundaryKind::Periodic;
    FluxChoice flux = FluxChoice::Alt1;
    int degree = 3;
    MeshKind mesh = MeshKind::Split;
    std::vector<int> cells{4, 8, 16, 32};
    StepPolicy step = StepPolicy::default_for_degree(3);
    double final_time = 1.0;
    InitMode init = InitMode::Correction;
    int correction_order = 3;
    /// Lifts the desk-scale cap on N (32 for k <= 3, 16 for k >= 4).
    bool allow_large = false;

    /// Throws ConfigError on invalid combinations.
    void validate() const;
    ProblemSpec problem_spec() const;
};

std::vector<std::string> preset_names();
/// example1-k3 | example1-k4 | example2-k3 | example2-k4. Throws ConfigError.
StudyConfig preset(const std::string& name);

/// Largest N allowed without allow_large.
int desk_scale_cap(int degree);

nlohmann::json config_to_json(const StudyConfig& config);
/// Unknown keys are rejected. A "preset" key seeds the remaining fields.
StudyConfig config_from_json(const nlohmann::json& j);
StudyConfig load_config(const std::filesystem::path& path);

struct RunOutcome {
    int cells = 0;
    long long steps = 0;
    double seconds = 0.0;
    ErrorReport report;
};

struct StudyAbort {
    int cells = 0;
    std::string reason;
};

struct StudyRecord {
    std::string version = kVersion;
    StudyConfig config;
    std::vector<RunOutcome> runs;
    /// metric key -> rate between consecutive runs (nullopt when undefined)
    std::map<std::string, std::vector<std::optional<double>>> rates;
    std::optional<StudyAbort> abort;

    std::vector<int> cells() const;
    std::vector<double> column(const std::string& key) const;
    const RunOutcome& run_for(int cells) const;
};

/// The initial value u_h(., 0) selected by config.init.
PiecewisePoly initial_value(const StudyConfig& config, const ProblemSpec& problem,
                            std::shared_ptr<const Mesh1D> mesh);

struct StudyOptions {
    bool parallel = true;
    /// Called after each finished N (from the coordinating thread, in N order).
    std::function<void(const RunOutcome&)> on_run;
};

/// Runs every N of the configuration. A run that fails (integrator blow-up,
/// invalid flux/boundary pairing, ...) stops the study: earlier runs are kept
/// and the failing N and reason are recorded in `abort`.
StudyRecord run_study(const StudyConfig& config, const StudyOptions& options = {});

/// Fills record.rates from record.runs.
void compute_rates(StudyRecord& record);

}  // namespace ldgsc
