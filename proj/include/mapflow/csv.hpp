#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "mapflow/dynamics.hpp"
#include "mapflow/errors.hpp"
#include "mapflow/format.hpp"
#include "mapflow/metrics.hpp"
#include "mapflow/pca.hpp"

namespace mapflow {

// All CSV output: ',' delimiter, '.' decimal point, LF endings, UTF-8.

/// Header `t,x1,...,xN`, one row per step, states at full double precision
/// (17 significant digits).
inline std::string trajectory_csv(const Trajectory& traj) {
    std::string out = "t";
    for (std::size_t i = 0; i < traj.n_agents(); ++i) out += ",x" + std::to_string(i + 1);
    out += '\n';
    for (std::size_t t = 0; t < traj.states.rows(); ++t) {
        out += std::to_string(t);
        for (std::size_t i = 0; i < traj.n_agents(); ++i)
            out += ',' + format_double(traj.states(t, i), 17);
        out += '\n';
    }
    return out;
}

/// Header `arch,s,f,e,b,W_T,sigma_x,tau,W_1,...,W_N`, one row per record.
/// Numeric fields use the shortest representation that parses back exactly.
inline std::string metrics_csv(const std::vector<MetricsRecord>& records) {
    std::string out;
    if (records.empty()) return out;

    out = "arch,s,f,e,b,W_T,sigma_x,tau";
    for (std::size_t i = 0; i < records.front().per_agent_work.size(); ++i)
        out += ",W_" + std::to_string(i + 1);
    out += '\n';

    for (const MetricsRecord& rec : records) {
        out += rec.arch;
        out += ',' + format_double(rec.s);
        out += ',' + format_double(rec.f);
        out += ',' + format_double(rec.e);
        out += ',' + format_double(rec.b);
        out += ',' + format_double(rec.total_work);
        out += ',' + format_double(rec.dispersion);
        out += ',' + std::to_string(rec.transition_time);
        for (double wi : rec.per_agent_work) out += ',' + format_double(wi);
        out += '\n';
    }
    return out;
}

/// Header `arch,config,pc1,pc2`, one row per labelled table row, plus a
/// trailing comment with the explained-variance ratios.
inline std::string pca_csv(const PcaResult& result) {
    std::string out = "arch,config,pc1,pc2\n";
    for (std::size_t i = 0; i < result.projection.rows(); ++i) {
        if (i < result.row_labels.size())
            out += result.row_labels[i].arch + ',' + result.row_labels[i].config;
        else
            out += "row" + std::to_string(i + 1) + ',';
        out += ',' + format_double(result.projection(i, 0));
        out += ',' + format_double(result.projection(i, 1));
        out += '\n';
    }
    out += "# explained:";
    for (std::size_t i = 0; i < result.explained_variance_ratio.size(); ++i)
        out += (i == 0 ? " " : ",") + format_double(result.explained_variance_ratio[i]);
    out += '\n';
    return out;
}

inline void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open for writing: " + path.string());
    file.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!file) throw IoError("write failed: " + path.string());
}

} // namespace mapflow
