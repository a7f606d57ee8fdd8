#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ldgsc/acceptance.hpp"
#include "ldgsc/emit.hpp"
#include "ldgsc/study.hpp"

namespace {

std::vector<std::string> split_list(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty()) out.push_back(part);
    }
    return out;
}

struct RunArgs {
    std::string config_path;
    std::string preset;
    std::string out_dir = "results";
    std::vector<std::string> formats{"table"};
    std::string name;
    std::string init;
    int order = 0;
    int degree = 0;
    std::string flux;
    std::string boundary;
    std::string mesh;
    std::vector<int> cells;
    double final_time = -1.0;
    std::string scheme;
    double dt_coefficient = 0.0;
    bool allow_large = false;
    bool serial = false;
    bool quiet = false;
};

ldgsc::StudyConfig build_config(const RunArgs& a) {
    using namespace ldgsc;
    if (!a.config_path.empty() && !a.preset.empty()) throw ConfigError("use either --config or --preset, not both");
    StudyConfig c = !a.config_path.empty() ? load_config(a.config_path)
                    : !a.preset.empty()    ? preset(a.preset)
                                           : preset("example1-k3");
    if (!a.name.empty()) c.name = a.name;
    if (a.degree > 0) {
        c.degree = a.degree;
        c.correction_order = a.degree;
    }
    if (!a.init.empty()) c.init = init_mode_from_string(a.init);
    if (a.order > 0) c.correction_order = a.order;
    if (!a.flux.empty()) c.flux = flux_from_string(a.flux);
    if (!a.boundary.empty()) c.boundary = boundary_kind_from_string(a.boundary);
    if (!a.mesh.empty()) c.mesh = mesh_kind_from_string(a.mesh);
    if (!a.cells.empty()) c.cells = a.cells;
    if (a.final_time >= 0.0) c.final_time = a.final_time;
    if (!a.scheme.empty()) c.step.scheme = rk_scheme_from_string(a.scheme);
    if (a.dt_coefficient > 0.0) c.step = StepPolicy::h_min_squared(a.dt_coefficient, c.step.scheme);
    if (a.allow_large) c.allow_large = true;
    return c;
}

int run_command(const RunArgs& a) {
    using namespace ldgsc;
    const StudyConfig config = build_config(a);
    std::vector<OutputFormat> formats;
    for (const auto& f : split_list(a.formats)) formats.push_back(output_format_from_string(f));

    StudyOptions options;
    options.parallel = !a.serial;
    if (!a.quiet) {
        options.on_run = [](const RunOutcome& run) {
            std::cerr << "  N=" << run.cells << " done in " << run.seconds << " s (" << run.steps << " steps)\n";
        };
    }
    const StudyRecord record = run_study(config, options);
    for (const auto f : formats) {
        const auto path = emit(record, f, a.out_dir);
        if (f == OutputFormat::Table && !a.quiet) std::cout << render_table(record);
        std::cerr << "wrote " << path.string() << '\n';
    }
    if (record.abort) {
        std::cerr << "study aborted at N=" << record.abort->cells << ": " << record.abort->reason << '\n';
        return 3;
    }
    return 0;
}

int show_command(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::cout << ldgsc::render_table(ldgsc::parse_record_json(buf.str()));
    return 0;
}

int check_command(bool serial) {
    using namespace ldgsc;
    const auto runs = run_acceptance_studies(!serial);
    bool all = true;
    for (const auto& r : evaluate_study_criteria(runs)) {
        std::cout << format_result(r);
        all = all && r.passed;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LDG heat-equation solver and superconvergence study runner"};
    app.require_subcommand(1);

    RunArgs run;
    auto* run_cmd = app.add_subcommand("run", "run a convergence study");
    run_cmd->add_option("--config", run.config_path, "JSON study configuration")->check(CLI::ExistingFile);
    run_cmd->add_option("--preset", run.preset, "example1-k3 | example1-k4 | example2-k3 | example2-k4");
    run_cmd->add_option("--out", run.out_dir, "output directory")->capture_default_str();
    run_cmd->add_option("--format", run.formats, "csv, json, table, plot (repeatable or comma separated)")
        ->capture_default_str();
    run_cmd->add_option("--name", run.name, "record name (output file stem)");
    run_cmd->add_option("--init", run.init, "correction | plain | l2");
    run_cmd->add_option("--order", run.order, "correction order l (1..k)");
    run_cmd->add_option("--degree,-k", run.degree, "polynomial degree k");
    run_cmd->add_option("--flux", run.flux, "alt1 | alt2");
    run_cmd->add_option("--boundary", run.boundary, "periodic | dirichlet-neumann | neumann-dirichlet");
    run_cmd->add_option("--mesh", run.mesh, "uniform | split");
    run_cmd->add_option("--cells,-N", run.cells, "mesh sizes")->delimiter(',');
    run_cmd->add_option("--final-time,-T", run.final_time, "final time");
    run_cmd->add_option("--scheme", run.scheme, "ssp-rk3 | rk4 | rk5");
    run_cmd->add_option("--dt-coefficient", run.dt_coefficient, "use dt = c * h_min^2");
    run_cmd->add_flag("--allow-large", run.allow_large, "lift the desk-scale cap on N");
    run_cmd->add_flag("--serial", run.serial, "run mesh sizes one after another");
    run_cmd->add_flag("--quiet,-q", run.quiet, "only report written files");

    std::string show_path;
    auto* show_cmd = app.add_subcommand("show", "pretty-print a saved JSON study record");
    show_cmd->add_option("record", show_path, "record written with --format json")->required();

    bool check_serial = false;
    auto* check_cmd = app.add_subcommand("check", "run the acceptance presets and report pass/fail");
    check_cmd->add_flag("--serial", check_serial, "run studies one after another");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) return run_command(run);
        if (*show_cmd) return show_command(show_path);
        if (*check_cmd) return check_command(check_serial);
    } catch (const ldgsc::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
