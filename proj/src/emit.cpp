#include "ldgsc/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ldgsc {

using nlohmann::json;

std::string to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
        case OutputFormat::Table: return "table";
        case OutputFormat::Plot: return "plot";
    }
    return "?";
}

OutputFormat output_format_from_string(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "table") return OutputFormat::Table;
    if (name == "plot") return OutputFormat::Plot;
    throw std::invalid_argument("unknown output format '" + name + "' (expected csv|json|table|plot)");
}

namespace {

std::string format(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

const char* extension(OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: return ".csv";
        case OutputFormat::Json: return ".json";
        case OutputFormat::Table: return ".txt";
        case OutputFormat::Plot: return ".plot.dat";
    }
    return "";
}

}  // namespace

std::string render_csv(const StudyRecord& record) {
    std::ostringstream out;
    out << "N";
    for (const auto& col : metric_columns()) out << ',' << col.key;
    out << '\n';
    for (const auto& run : record.runs) {
        out << run.cells;
        for (const auto& col : metric_columns()) out << ',' << format("%.10e", run.report.*col.field);
        out << '\n';
    }
    return out.str();
}

std::string render_json(const StudyRecord& record) {
    json j;
    j["version"] = record.version;
    j["config"] = config_to_json(record.config);
    j["runs"] = json::array();
    for (const auto& run : record.runs) {
        json errors;
        for (const auto& col : metric_columns()) errors[col.key] = run.report.*col.field;
        j["runs"].push_back({{"N", run.cells},
                             {"steps", run.steps},
                             {"seconds", run.seconds},
                             {"h_min", build_mesh(record.config.mesh, run.cells)->h_min()},
                             {"errors", errors}});
    }
    json rates = json::object();
    for (const auto& [key, values] : record.rates) {
        json arr = json::array();
        for (const auto& r : values) arr.push_back(r ? json(*r) : json(nullptr));
        rates[key] = arr;
    }
    j["rates"] = rates;
    j["abort"] = record.abort ? json{{"N", record.abort->cells}, {"reason", record.abort->reason}} : json(nullptr);
    return j.dump(2) + "\n";
}

StudyRecord parse_record_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("study record is not valid JSON: ") + e.what());
    }
    try {
        StudyRecord record;
        record.version = j.at("version").get<std::string>();
        record.config = config_from_json(j.at("config"));
        for (const auto& r : j.at("runs")) {
            RunOutcome run;
            run.cells = r.at("N").get<int>();
            run.steps = r.at("steps").get<long long>();
            run.seconds = r.at("seconds").get<double>();
            run.report.cells = run.cells;
            run.report.mesh_kind = record.config.mesh;
            run.report.degree = record.config.degree;
            run.report.flux = record.config.flux;
            run.report.time = record.config.final_time;
            for (const auto& col : metric_columns()) run.report.*col.field = r.at("errors").at(col.key).get<double>();
            record.runs.push_back(run);
        }
        for (auto it = j.at("rates").begin(); it != j.at("rates").end(); ++it) {
            auto& values = record.rates[it.key()];
            for (const auto& v : it.value())
                values.push_back(v.is_null() ? std::nullopt : std::optional<double>(v.get<double>()));
        }
        if (!j.at("abort").is_null())
            record.abort = StudyAbort{j["abort"].at("N").get<int>(), j["abort"].at("reason").get<std::string>()};
        return record;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed study record: ") + e.what());
    }
}

std::string render_table(const StudyRecord& record) {
    const StudyConfig& c = record.config;
    std::ostringstream out;
    out << c.name << ": problem=" << c.problem << " boundary=" << to_string(c.boundary)
        << " flux=" << to_string(c.flux) << " k=" << c.degree << " mesh=" << to_string(c.mesh)
        << " T=" << c.final_time << " init=" << to_string(c.init);
    if (c.init == InitMode::Correction) out << "(l=" << c.correction_order << ")";
    out << " scheme=" << to_string(c.step.scheme) << '\n';

    const auto& cols = metric_columns();
    auto header = [&](const char* first, int block) {
        out << first;
        for (int i = 0; i < 7; ++i) {
            char head[32];
            std::snprintf(head, sizeof head, " %10s", cols[block * 7 + i].label);
            out << head;
        }
        out << '\n';
    };
    const auto n = record.cells();
    for (int block = 0; block < 2; ++block) {
        out << '\n';
        header("    N", block);
        for (const auto& run : record.runs) {
            char nbuf[16];
            std::snprintf(nbuf, sizeof nbuf, "%5d", run.cells);
            out << nbuf;
            for (int i = 0; i < 7; ++i) out << ' ' << format("%10.2e", run.report.*cols[block * 7 + i].field);
            out << '\n';
        }
        if (n.size() < 2) continue;
        header(" rate", block);
        for (std::size_t r = 1; r < n.size(); ++r) {
            char nbuf[16];
            std::snprintf(nbuf, sizeof nbuf, "%5d", n[r]);
            out << nbuf;
            for (int i = 0; i < 7; ++i) {
                const auto it = record.rates.find(cols[block * 7 + i].key);
                std::optional<double> v;
                if (it != record.rates.end() && r - 1 < it->second.size()) v = it->second[r - 1];
                out << ' ' << (v ? format("%10.2f", *v) : std::string("        --"));
            }
            out << '\n';
        }
    }
    if (record.abort) out << "\naborted at N=" << record.abort->cells << ": " << record.abort->reason << '\n';
    return out.str();
}

int reference_rate(const std::string& metric_key, int degree) {
    static const std::vector<std::string> local{"xi_u_L2", "e_u_radau", "e_ux_radau",
                                                "xi_q_L2", "e_q_radau", "e_qx_radau"};
    for (const auto& key : local)
        if (key == metric_key) return degree + 2;
    metric_column(metric_key);
    return 2 * degree + 1;
}

std::string render_plot(const StudyRecord& record) {
    std::ostringstream out;
    out << "# " << record.config.name << ": columns log2(N) log10(error) log10(reference)\n";
    for (const auto& col : metric_columns()) {
        const int slope = reference_rate(col.key, record.config.degree);
        out << "\n# metric " << col.key << " reference_slope " << slope << '\n';
        if (record.runs.empty()) continue;
        const double x0 = std::log2(static_cast<double>(record.runs.front().cells));
        const double y0 = std::log10(record.runs.front().report.*col.field);
        for (const auto& run : record.runs) {
            const double x = std::log2(static_cast<double>(run.cells));
            const double e = run.report.*col.field;
            out << format("%.6f", x) << ' ' << (e > 0.0 ? format("%.6f", std::log10(e)) : std::string("nan"))
                << ' ' << (std::isfinite(y0) ? format("%.6f", y0 - slope * std::log10(2.0) * (x - x0)) : "nan")
                << '\n';
        }
    }
    return out.str();
}

std::filesystem::path emit(const StudyRecord& record, OutputFormat f, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto path = dir / (record.config.name + extension(f));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file " + path.string());
    switch (f) {
        case OutputFormat::Csv: out << render_csv(record); break;
        case OutputFormat::Json: out << render_json(record); break;
        case OutputFormat::Table: out << render_table(record); break;
        case OutputFormat::Plot: out << render_plot(record); break;
    }
    out.flush();
    if (!out) throw std::runtime_error("cannot write output file " + path.string());
    return path;
}

}  // namespace ldgsc
