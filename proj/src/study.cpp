#include "ldgsc/study.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <set>

#include "ldgsc/correction.hpp"
#include "ldgsc/projection.hpp"

namespace ldgsc {

using nlohmann::json;

std::string to_string(InitMode mode) {
    switch (mode) {
        case InitMode::Correction: return "correction";
        case InitMode::Plain: return "plain";
        case InitMode::L2: return "l2";
    }
    return "?";
}

InitMode init_mode_from_string(const std::string& name) {
    if (name == "correction") return InitMode::Correction;
    if (name == "plain") return InitMode::Plain;
    if (name == "l2") return InitMode::L2;
    throw ConfigError("unknown init mode '" + name + "' (expected correction|plain|l2)");
}

int desk_scale_cap(int degree) { return degree <= 3 ? 32 : 16; }

void StudyConfig::validate() const {
    if (degree < 1 || degree > 8) throw ConfigError("degree must be in 1..8, got " + std::to_string(degree));
    if (cells.empty()) throw ConfigError("cells list is empty");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] < 2) throw ConfigError("every N must be >= 2");
        if (mesh == MeshKind::Split && cells[i] % 2 != 0) throw ConfigError("split meshes need even N");
        if (i > 0 && cells[i] <= cells[i - 1]) throw ConfigError("cells list must be strictly increasing");
        const int ratio = cells[i] / cells[0];
        if (cells[i] % cells[0] != 0 || (ratio & (ratio - 1)) != 0)
            throw ConfigError("every N must be a power-of-two multiple of the first");
    }
    if (!allow_large && cells.back() > desk_scale_cap(degree)) {
        throw ConfigError("N=" + std::to_string(cells.back()) + " exceeds the desk-scale cap of " +
                          std::to_string(desk_scale_cap(degree)) + " for k=" + std::to_string(degree) +
                          " (set allow_large to lift it)");
    }
    if (!std::isfinite(final_time) || final_time < 0.0) throw ConfigError("final time must be finite and >= 0");
    if (init == InitMode::Correction && (correction_order < 1 || correction_order > degree)) {
        throw ConfigError("correction order l=" + std::to_string(correction_order) + " outside 1.." +
                          std::to_string(degree));
    }
    if (step.rule == DtRule::FixedCount ? step.steps < 1 : !(step.coefficient > 0.0))
        throw ConfigError("step policy needs a positive coefficient or step count");
    try {
        problem_spec().validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

ProblemSpec StudyConfig::problem_spec() const {
    ProblemSpec p;
    if (problem == "example1") p = example_periodic();
    else if (problem == "example2") p = example_mixed();
    else if (problem == "manufactured") p = ProblemSpec{"manufactured", ExactSolution(terms), boundary, final_time};
    else throw ConfigError("unknown problem '" + problem + "' (expected example1|example2|manufactured)");
    p.boundary = boundary;
    p.final_time = final_time;
    return p;
}

std::vector<std::string> preset_names() { return {"example1-k3", "example1-k4", "example2-k3", "example2-k4"}; }

StudyConfig preset(const std::string& name) {
    StudyConfig c;
    c.name = name;
    if (name == "example1-k3" || name == "example1-k4") {
        const bool k4 = name == "example1-k4";
        c.problem = "example1";
        c.boundary = BoundaryKind::Periodic;
        c.flux = FluxChoice::Alt1;
        c.degree = k4 ? 4 : 3;
        c.mesh = MeshKind::Split;
        c.cells = k4 ? std::vector<int>{4, 8, 16} : std::vector<int>{4, 8, 16, 32};
        c.step = StepPolicy::h_min_squared(k4 ? 0.001 : 0.005);
    } else if (name == "example2-k3" || name == "example2-k4") {
        const bool k4 = name == "example2-k4";
        c.problem = "example2";
        c.boundary = BoundaryKind::NeumannLeftDirichletRight;
        c.flux = FluxChoice::Alt2;
        c.degree = k4 ? 4 : 3;
        c.mesh = MeshKind::Uniform;
        c.cells = k4 ? std::vector<int>{4, 8, 16} : std::vector<int>{4, 8, 16, 32};
        c.step = StepPolicy::cells_squared(k4 ? 5000.0 : 1000.0);
    } else {
        throw ConfigError("unknown preset '" + name + "'");
    }
    c.final_time = 1.0;
    c.init = InitMode::Correction;
    c.correction_order = c.degree;
    return c;
}

namespace {

json term_to_json(const ManufacturedTerm& t) {
    if (t.kind == ManufacturedTerm::Kind::Exponential)
        return {{"kind", "exponential"}, {"amplitude", t.sin_amplitude}, {"shift", t.shift}};
    return {{"kind", "fourier"}, {"sin", t.sin_amplitude}, {"cos", t.cos_amplitude}, {"wavenumber", t.wavenumber}};
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw ConfigError("unknown key '" + it.key() + "' in " + where);
}

ManufacturedTerm term_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("terms entries must be objects");
    const std::string kind = j.value("kind", "fourier");
    if (kind == "exponential") {
        reject_unknown(j, {"kind", "amplitude", "shift"}, "exponential term");
        return ManufacturedTerm::exponential(j.value("amplitude", 1.0), j.value("shift", 0.0));
    }
    if (kind != "fourier") throw ConfigError("unknown term kind '" + kind + "'");
    reject_unknown(j, {"kind", "sin", "cos", "wavenumber"}, "fourier term");
    return ManufacturedTerm::fourier(j.value("sin", 0.0), j.value("cos", 0.0), j.value("wavenumber", 1.0));
}

template <typename T>
T get(const json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
    }
}

}  // namespace

json config_to_json(const StudyConfig& c) {
    json j;
    j["name"] = c.name;
    j["problem"] = c.problem;
    if (c.problem == "manufactured") {
        j["terms"] = json::array();
        for (const auto& t : c.terms) j["terms"].push_back(term_to_json(t));
    }
    j["boundary"] = to_string(c.boundary);
    j["flux"] = to_string(c.flux);
    j["degree"] = c.degree;
    j["mesh"] = to_string(c.mesh);
    j["cells"] = c.cells;
    j["time_stepping"] = {{"scheme", to_string(c.step.scheme)},
                          {"rule", to_string(c.step.rule)},
                          {"coefficient", c.step.coefficient},
                          {"steps", c.step.steps}};
    j["final_time"] = c.final_time;
    j["init"] = {{"mode", to_string(c.init)}, {"order", c.correction_order}};
    j["allow_large"] = c.allow_large;
    return j;
}

StudyConfig config_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
    reject_unknown(j,
                   {"preset", "name", "problem", "terms", "boundary", "flux", "degree", "mesh", "cells",
                    "time_stepping", "final_time", "init", "allow_large"},
                   "configuration");
    StudyConfig c = j.contains("preset") ? preset(get<std::string>(j, "preset")) : StudyConfig{};
    try {
        if (j.contains("name")) c.name = get<std::string>(j, "name");
        if (j.contains("problem")) c.problem = get<std::string>(j, "problem");
        if (j.contains("terms")) {
            c.terms.clear();
            for (const auto& t : j.at("terms")) c.terms.push_back(term_from_json(t));
        }
        if (j.contains("boundary")) c.boundary = boundary_kind_from_string(get<std::string>(j, "boundary"));
        if (j.contains("flux")) c.flux = flux_from_string(get<std::string>(j, "flux"));
        if (j.contains("degree")) {
            c.degree = get<int>(j, "degree");
            if (!j.contains("init")) c.correction_order = c.degree;
        }
        if (j.contains("mesh")) c.mesh = mesh_kind_from_string(get<std::string>(j, "mesh"));
        if (j.contains("cells")) c.cells = get<std::vector<int>>(j, "cells");
        if (j.contains("time_stepping")) {
            const json& s = j.at("time_stepping");
            reject_unknown(s, {"scheme", "rule", "coefficient", "steps"}, "time_stepping");
            if (s.contains("scheme")) c.step.scheme = rk_scheme_from_string(get<std::string>(s, "scheme"));
            if (s.contains("rule")) c.step.rule = dt_rule_from_string(get<std::string>(s, "rule"));
            if (s.contains("coefficient")) c.step.coefficient = get<double>(s, "coefficient");
            if (s.contains("steps")) c.step.steps = get<long long>(s, "steps");
        }
        if (j.contains("final_time")) c.final_time = get<double>(j, "final_time");
        if (j.contains("init")) {
            const json& s = j.at("init");
            reject_unknown(s, {"mode", "order"}, "init");
            if (s.contains("mode")) c.init = init_mode_from_string(get<std::string>(s, "mode"));
            c.correction_order = s.contains("order") ? get<int>(s, "order") : c.degree;
        }
        if (j.contains("allow_large")) c.allow_large = get<bool>(j, "allow_large");
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return c;
}

StudyConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read configuration file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("configuration file " + path.string() + " is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

std::vector<int> StudyRecord::cells() const {
    std::vector<int> n;
    for (const auto& r : runs) n.push_back(r.cells);
    return n;
}

std::vector<double> StudyRecord::column(const std::string& key) const {
    const auto& col = metric_column(key);
    std::vector<double> v;
    for (const auto& r : runs) v.push_back(r.report.*col.field);
    return v;
}

const RunOutcome& StudyRecord::run_for(int n) const {
    for (const auto& r : runs)
        if (r.cells == n) return r;
    throw std::out_of_range("no run with N=" + std::to_string(n));
}

PiecewisePoly initial_value(const StudyConfig& config, const ProblemSpec& problem,
                            std::shared_ptr<const Mesh1D> mesh) {
    const int k = config.degree;
    const SmoothFn u0 = problem.initial_value(2 * k + 4);
    switch (config.init) {
        case InitMode::Correction:
            return build_initial_interpolant(u0, mesh, k, config.correction_order, config.flux).u;
        case InitMode::Plain:
            return config.flux == FluxChoice::Alt1 ? project_minus(u0, mesh, k) : project_plus(u0, mesh, k);
        case InitMode::L2: return project_l2(u0, mesh, k);
    }
    throw std::logic_error("unreachable init mode");
}

namespace {

RunOutcome run_one(const StudyConfig& config, const ProblemSpec& problem, int n) {
    const auto start = std::chrono::steady_clock::now();
    auto mesh = build_mesh(config.mesh, n);
    const LdgOperator op(mesh, config.degree, config.flux, problem.boundary_condition());
    const PiecewisePoly u0 = initial_value(config, problem, mesh);
    const PiecewisePoly u = integrate(op, u0, config.final_time, config.step);
    RunOutcome out;
    out.cells = n;
    out.steps = config.step.step_count(*mesh, config.final_time);
    out.report = evaluate_errors(op, u, problem.exact, config.final_time, config.mesh);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace

void compute_rates(StudyRecord& record) {
    record.rates.clear();
    const auto n = record.cells();
    for (const auto& col : metric_columns()) record.rates[col.key] = convergence_rates(record.column(col.key), n);
}

StudyRecord run_study(const StudyConfig& config, const StudyOptions& options) {
    config.validate();
    const ProblemSpec problem = config.problem_spec();
    StudyRecord record;
    record.config = config;

    std::vector<std::future<RunOutcome>> pending;
    for (int n : config.cells) {
        pending.push_back(std::async(options.parallel ? std::launch::async : std::launch::deferred,
                                     [&config, &problem, n] { return run_one(config, problem, n); }));
    }
    for (std::size_t i = 0; i < pending.size(); ++i) {
        if (record.abort) {
            if (options.parallel) pending[i].wait();
            continue;
        }
        try {
            record.runs.push_back(pending[i].get());
            if (options.on_run) options.on_run(record.runs.back());
        } catch (const std::exception& e) {
            record.abort = StudyAbort{config.cells[i], e.what()};
        }
    }
    compute_rates(record);
    return record;
}

}  // namespace ldgsc
