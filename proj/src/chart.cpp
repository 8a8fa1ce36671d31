// SPDX-License-Identifier: Apache-2.0
//
// mmwrx - mmWave receiver architecture trade-off simulator
// Copyright (C) 2026 The mmwrx authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "mmwrx/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace mmwrx {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 200.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string label(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string escape(const std::string &s)
{
    std::string out;
    for (const char c : s)
    {
        switch (c)
        {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

// Round the axis maximum up to 1, 2 or 5 times a power of ten.
double nice_ceiling(double x)
{
    if (!(x > 0.0))
        return 1.0;
    const double mag = std::pow(10.0, std::floor(std::log10(x)));
    for (const double m : {1.0, 2.0, 5.0, 10.0})
    {
        if (m * mag >= x)
            return m * mag;
    }
    return 10.0 * mag;
}

const char *series_color(Architecture arch, std::size_t hybrid_index)
{
    static const char *hybrid[] = {"#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
    switch (arch)
    {
    case Architecture::AC:
        return "#1f77b4";
    case Architecture::DC:
        return "#d62728";
    case Architecture::HC:
        return hybrid[hybrid_index % std::size(hybrid)];
    }
    return "#000000";
}

} // namespace

double iso_power_slope(double power_w, double bandwidth_hz)
{
    if (!(power_w > 0.0) || !(bandwidth_hz > 0.0))
        throw std::invalid_argument("iso_power_slope: power and bandwidth must be positive");
    return power_w * 1e9 / bandwidth_hz;
}

std::string export_svg(const SweepResult &result, const ChartOptions &options, const std::string &title)
{
    if (result.points.empty())
        throw std::invalid_argument("export_svg: empty sweep result");

    double max_ee = 0.0;
    double max_se = 0.0;
    for (const auto &p : result.points)
    {
        max_ee = std::max(max_ee, p.ee_bpj / 1e9);
        max_se = std::max(max_se, p.se_bpshz);
    }
    const double x_max = nice_ceiling(max_ee * 1.05);
    const double y_max = nice_ceiling(max_se * 1.05);
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const auto px = [&](double ee) { return kLeft + ee / x_max * plot_w; };
    const auto py = [&](double se) { return kTop + plot_h - se / y_max * plot_h; };

    std::vector<bool> optimal(result.points.size(), false);
    for (const auto &e : result.optimal_set)
        optimal[e.point_index] = true;

    // (arch, n_rf) -> point indices ordered by bits.
    std::map<std::pair<int, int>, std::vector<std::size_t>> series;
    for (std::size_t i = 0; i < result.points.size(); ++i)
    {
        const auto &p = result.points[i];
        series[{static_cast<int>(p.arch), p.n_rf.value_or(0)}].push_back(i);
    }
    for (auto &[key, idx] : series)
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return result.points[a].bits < result.points[b].bits; });

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) + "\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(kLeft) + "\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\">" + escape(title) +
           "</text>\n";

    // Axes, ticks and grid.
    svg += "<g class=\"axes\" stroke=\"#333\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int t = 0; t <= 5; ++t)
    {
        const double xv = x_max * t / 5.0;
        const double yv = y_max * t / 5.0;
        svg += "<line x1=\"" + num(px(xv)) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(px(xv)) + "\" y2=\"" +
               num(kTop + plot_h) + "\" stroke=\"#eee\"/>\n";
        svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(py(yv)) + "\" x2=\"" + num(kLeft + plot_w) +
               "\" y2=\"" + num(py(yv)) + "\" stroke=\"#eee\"/>\n";
        svg += "<text x=\"" + num(px(xv)) + "\" y=\"" + num(kTop + plot_h + 18) +
               "\" text-anchor=\"middle\" stroke=\"none\">" + label(xv) + "</text>\n";
        svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(py(yv) + 4) +
               "\" text-anchor=\"end\" stroke=\"none\">" + label(yv) + "</text>\n";
    }
    svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) + "\" height=\"" +
           num(plot_h) + "\" fill=\"none\"/>\n";
    svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 20) +
           "\" text-anchor=\"middle\" stroke=\"none\">Energy efficiency [Gbits/J]</text>\n";
    svg += "<text x=\"20\" y=\"" + num(kTop + plot_h / 2) + "\" text-anchor=\"middle\" stroke=\"none\" "
           "transform=\"rotate(-90 20 " + num(kTop + plot_h / 2) + ")\">Spectral efficiency [bits/s/Hz]</text>\n";
    svg += "</g>\n";

    // Constant-power diagonals, clipped to the plot box.
    if (!options.iso_power_w.empty())
    {
        svg += "<g class=\"iso-power\" stroke=\"#555\" stroke-dasharray=\"2 4\" font-family=\"sans-serif\" "
               "font-size=\"10\">\n";
        for (const double w : options.iso_power_w)
        {
            const double slope = iso_power_slope(w, result.scenario.bandwidth_hz);
            double x_end = x_max;
            double y_end = slope * x_end;
            if (y_end > y_max)
            {
                y_end = y_max;
                x_end = y_max / slope;
            }
            svg += "<line x1=\"" + num(px(0)) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(px(x_end)) +
                   "\" y2=\"" + num(py(y_end)) + "\"/>\n";
            svg += "<text x=\"" + num(px(x_end) - 4) + "\" y=\"" + num(py(y_end) + 12) +
                   "\" text-anchor=\"end\" stroke=\"none\">" + label(w) + " W</text>\n";
        }
        svg += "</g>\n";
    }

    // Series polylines and markers.
    std::size_t hybrid_index = 0;
    std::string legend;
    double legend_y = kTop + 10;
    for (const auto &[key, idx] : series)
    {
        const auto arch = static_cast<Architecture>(key.first);
        const char *color = series_color(arch, arch == Architecture::HC ? hybrid_index++ : 0);
        std::string name(to_string(arch));
        if (arch == Architecture::HC)
            name += " N_RF=" + std::to_string(key.second);

        svg += "<g class=\"series\" data-arch=\"" + std::string(to_string(arch)) + "\"";
        if (arch == Architecture::HC)
            svg += " data-nrf=\"" + std::to_string(key.second) + "\"";
        svg += ">\n<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < idx.size(); ++k)
        {
            const auto &p = result.points[idx[k]];
            svg += (k ? " " : "") + num(px(p.ee_bpj / 1e9)) + "," + num(py(p.se_bpshz));
        }
        svg += "\"/>\n";
        for (const auto i : idx)
        {
            const auto &p = result.points[i];
            svg += "<circle class=\"point" + std::string(optimal[i] ? " optimal" : "") + "\" data-index=\"" +
                   std::to_string(i) + "\" data-bits=\"" + std::to_string(p.bits) + "\" cx=\"" +
                   num(px(p.ee_bpj / 1e9)) + "\" cy=\"" + num(py(p.se_bpshz)) + "\" r=\"" +
                   (optimal[i] ? "6" : "3.5") + "\" fill=\"" + color + "\"" +
                   (optimal[i] ? " stroke=\"#000\" stroke-width=\"2\"" : "") + "/>\n";
        }
        svg += "</g>\n";

        legend += "<rect x=\"" + num(kWidth - kRight + 20) + "\" y=\"" + num(legend_y - 8) +
                  "\" width=\"12\" height=\"8\" fill=\"" + color + "\"/>\n";
        legend += "<text x=\"" + num(kWidth - kRight + 38) + "\" y=\"" + num(legend_y) + "\">" + escape(name) +
                  "</text>\n";
        legend_y += 18;
    }
    svg += "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n" + legend;
    svg += "<text x=\"" + num(kWidth - kRight + 20) + "\" y=\"" + num(legend_y + 8) +
           "\">outlined: utility-optimal</text>\n</g>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace mmwrx
