#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mapflow/dynamics.hpp"
#include "mapflow/format.hpp"
#include "mapflow/metrics.hpp"

namespace mapflow {

// Self-contained SVG output, fixed 800x600 viewBox, no external assets.

namespace svg_detail {

inline constexpr double kWidth = 800.0;
inline constexpr double kHeight = 600.0;
inline constexpr double kLeft = 70.0, kRight = 24.0, kTop = 44.0, kBottom = 56.0;

inline constexpr std::array<std::string_view, 8> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
};

inline std::string num(double v) { return format_double(v, 6); }

inline std::string header(const std::string& title) {
    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" "
        "width=\"800\" height=\"600\">\n"
        "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    if (!title.empty())
        out += "<text x=\"400\" y=\"26\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"16\">" + title + "</text>\n";
    return out;
}

inline std::string axes(const std::string& x_label, const std::string& y_label) {
    std::string out;
    out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(kHeight - kBottom) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kHeight - kBottom) + "\" x2=\"" +
           num(kWidth - kRight) + "\" y2=\"" + num(kHeight - kBottom) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num((kLeft + kWidth - kRight) / 2.0) + "\" y=\"" + num(kHeight - 12.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + x_label +
           "</text>\n";
    out += "<text x=\"18\" y=\"" + num((kTop + kHeight - kBottom) / 2.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 " + num((kTop + kHeight - kBottom) / 2.0) + ")\">" +
           y_label + "</text>\n";
    return out;
}

} // namespace svg_detail

/// State-vs-time polylines, one per agent, with an optional dashed vertical
/// line marking the transition time. Throws on an empty trajectory.
inline std::string trajectory_svg(const Trajectory& traj, std::optional<int> transition = {},
                                  const std::string& title = "") {
    using namespace svg_detail;
    if (traj.states.rows() == 0 || traj.n_agents() == 0)
        throw std::invalid_argument("trajectory_svg: empty trajectory");

    const std::size_t rows = traj.states.rows();
    const std::size_t n = traj.n_agents();
    double y_max = 0.0;
    for (double v : traj.states.data()) y_max = std::max(y_max, v);
    if (y_max <= 0.0) y_max = 1.0;
    y_max *= 1.05;
    const double t_max = static_cast<double>(rows - 1);

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const auto map_x = [&](double t) {
        return kLeft + (t_max > 0.0 ? t / t_max : 0.0) * plot_w;
    };
    const auto map_y = [&](double v) { return kHeight - kBottom - v / y_max * plot_h; };

    std::string out = header(title);
    out += axes("t", "x_i(t)");

    // axis ticks
    for (int k = 0; k <= 4; ++k) {
        const double t = t_max * k / 4.0;
        const double x = map_x(t);
        out += "<line x1=\"" + num(x) + "\" y1=\"" + num(kHeight - kBottom) + "\" x2=\"" + num(x) +
               "\" y2=\"" + num(kHeight - kBottom + 5.0) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + num(x) + "\" y=\"" + num(kHeight - kBottom + 20.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_double(std::round(t), 6) + "</text>\n";
        const double v = y_max * k / 4.0;
        const double y = map_y(v);
        out += "<line x1=\"" + num(kLeft - 5.0) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kLeft) +
               "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + num(kLeft - 9.0) + "\" y=\"" + num(y + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_double(v, 4) + "</text>\n";
    }

    if (transition) {
        const double x = map_x(static_cast<double>(*transition));
        out += "<line x1=\"" + num(x) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(x) + "\" y2=\"" +
               num(kHeight - kBottom) +
               "\" stroke=\"#555555\" stroke-dasharray=\"6 4\"/>\n";
        out += "<text x=\"" + num(x + 5.0) + "\" y=\"" + num(kTop + 14.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#555555\">tau=" +
               std::to_string(*transition) + "</text>\n";
    }

    for (std::size_t i = 0; i < n; ++i) {
        out += "<polyline fill=\"none\" stroke=\"";
        out += kPalette[i % kPalette.size()];
        out += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t t = 0; t < rows; ++t) {
            if (t > 0) out += ' ';
            out += num(map_x(static_cast<double>(t))) + ',' + num(map_y(traj.states(t, i)));
        }
        out += "\"/>\n";
    }

    // legend
    for (std::size_t i = 0; i < n; ++i) {
        const double y = kTop + 10.0 + 16.0 * static_cast<double>(i);
        out += "<line x1=\"" + num(kWidth - kRight - 70.0) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(kWidth - kRight - 50.0) + "\" y2=\"" + num(y) + "\" stroke=\"";
        out += kPalette[i % kPalette.size()];
        out += "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + num(kWidth - kRight - 44.0) + "\" y=\"" + num(y + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\">x" + std::to_string(i + 1) +
               "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

/// Per-agent steady-state work as a bar chart.
inline std::string work_bars_svg(const MetricsRecord& rec, const std::string& title = "") {
    using namespace svg_detail;
    const std::size_t n = rec.per_agent_work.size();
    if (n == 0) throw std::invalid_argument("work_bars_svg: record has no per-agent work");

    double w_max = 0.0;
    for (double v : rec.per_agent_work) w_max = std::max(w_max, v);
    if (w_max <= 0.0) w_max = 1.0;
    w_max *= 1.15;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const double slot = plot_w / static_cast<double>(n);
    const double bar = slot * 0.6;

    std::string out = header(title.empty() ? rec.arch + " per-agent work" : title);
    out += axes("agent", "W_i");
    for (std::size_t i = 0; i < n; ++i) {
        const double h = rec.per_agent_work[i] / w_max * plot_h;
        const double x = kLeft + slot * static_cast<double>(i) + (slot - bar) / 2.0;
        const double y = kHeight - kBottom - h;
        out += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(bar) +
               "\" height=\"" + num(h) + "\" fill=\"";
        out += kPalette[i % kPalette.size()];
        out += "\"/>\n";
        out += "<text x=\"" + num(x + bar / 2.0) + "\" y=\"" + num(y - 6.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_double(rec.per_agent_work[i], 4) + "</text>\n";
        out += "<text x=\"" + num(x + bar / 2.0) + "\" y=\"" + num(kHeight - kBottom + 18.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
               std::to_string(i + 1) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace mapflow
