#include "diracsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "diracsim/csv.hpp"

namespace diracsim {

namespace {

const char* kPalette[] = {"#c02020", "#e08020", "#409040", "#202020",
                          "#2040c0", "#9040a0", "#808080", "#c0a000"};

struct Range {
    double lo = 0.0, hi = 1.0;
    void expand(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
};

Range data_range(const std::vector<Series>& series, bool y_axis) {
    Range r{1e300, -1e300};
    for (const Series& s : series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const double v = y_axis ? s.y[i] : s.x[i];
            const double e = (y_axis && i < s.yerr.size()) ? s.yerr[i] : 0.0;
            r.lo = std::min(r.lo, v - e);
            r.hi = std::max(r.hi, v + e);
        }
    }
    if (!(r.hi > r.lo)) {
        r.lo -= 0.5;
        r.hi += 0.5;
    }
    const double pad = 0.05 * (r.hi - r.lo);
    return {r.lo - pad, r.hi + pad};
}

// round tick spacing to 1/2/5 * 10^k
double nice_step(double span, int target) {
    const double raw = span / std::max(target, 1);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (raw <= m * mag * (1.0 + 1e-12)) return m * mag;
    return 10.0 * mag;
}

std::string fmt(double v) {
    std::ostringstream o;
    o.precision(6);
    o << v;
    return o.str();
}

void draw_panel(std::ostringstream& out, const std::vector<Series>& series,
                const PlotStyle& style, double px, double py, double pw, double ph,
                const std::string& panel_title, bool draw_x_label) {
    const Range rx = data_range(series, false);
    const Range ry = data_range(series, true);
    auto X = [&](double v) { return px + (v - rx.lo) / (rx.hi - rx.lo) * pw; };
    auto Y = [&](double v) { return py + ph - (v - ry.lo) / (ry.hi - ry.lo) * ph; };

    out << "<rect x='" << px << "' y='" << py << "' width='" << pw << "' height='" << ph
        << "' fill='white' stroke='black'/>\n";

    const double sx = nice_step(rx.hi - rx.lo, 8);
    for (double v = std::ceil(rx.lo / sx) * sx; v <= rx.hi + 1e-12; v += sx) {
        out << "<line x1='" << X(v) << "' y1='" << py + ph << "' x2='" << X(v) << "' y2='"
            << py + ph + 5 << "' stroke='black'/>\n";
        out << "<text x='" << X(v) << "' y='" << py + ph + 18
            << "' font-size='11' text-anchor='middle'>" << fmt(v) << "</text>\n";
    }
    const double sy = nice_step(ry.hi - ry.lo, 6);
    for (double v = std::ceil(ry.lo / sy) * sy; v <= ry.hi + 1e-12; v += sy) {
        out << "<line x1='" << px - 5 << "' y1='" << Y(v) << "' x2='" << px << "' y2='" << Y(v)
            << "' stroke='black'/>\n";
        out << "<text x='" << px - 8 << "' y='" << Y(v) + 4
            << "' font-size='11' text-anchor='end'>" << fmt(v) << "</text>\n";
    }

    for (std::size_t si = 0; si < series.size(); ++si) {
        const Series& s = series[si];
        const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            out << X(s.x[i]) << ',' << Y(s.y[i]) << ' ';
        out << "'/>\n";
        for (std::size_t i = 0; i < s.yerr.size() && i < s.x.size(); ++i) {
            if (s.yerr[i] <= 0.0) continue;
            out << "<line x1='" << X(s.x[i]) << "' y1='" << Y(s.y[i] - s.yerr[i]) << "' x2='"
                << X(s.x[i]) << "' y2='" << Y(s.y[i] + s.yerr[i]) << "' stroke='" << color
                << "' stroke-width='1'/>\n";
        }
    }

    if (!panel_title.empty())
        out << "<text x='" << px + 8 << "' y='" << py + 16 << "' font-size='12'>"
            << panel_title << "</text>\n";
    if (style.legend && series.size() > 1) {
        double ly = py + 14;
        for (std::size_t si = 0; si < series.size(); ++si) {
            if (series[si].label.empty()) continue;
            const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
            out << "<line x1='" << px + pw - 150 << "' y1='" << ly << "' x2='" << px + pw - 130
                << "' y2='" << ly << "' stroke='" << color << "' stroke-width='2'/>\n";
            out << "<text x='" << px + pw - 125 << "' y='" << ly + 4 << "' font-size='11'>"
                << series[si].label << "</text>\n";
            ly += 15;
        }
    }
    if (draw_x_label && !style.x_label.empty())
        out << "<text x='" << px + pw / 2 << "' y='" << py + ph + 34
            << "' font-size='12' text-anchor='middle'>" << style.x_label << "</text>\n";
    if (!style.y_label.empty())
        out << "<text x='" << px - 42 << "' y='" << py + ph / 2
            << "' font-size='12' text-anchor='middle' transform='rotate(-90 " << px - 42 << ' '
            << py + ph / 2 << ")'>" << style.y_label << "</text>\n";
}

void validate_series(const std::vector<Series>& series) {
    if (series.empty()) throw std::invalid_argument("emit_plot: no series");
    for (const Series& s : series) {
        if (s.x.empty() || s.x.size() != s.y.size())
            throw std::invalid_argument("emit_plot: empty or mismatched series '" + s.label +
                                        "'");
    }
}

}  // namespace

void emit_plot(const std::vector<Series>& series, const PlotStyle& style,
               const std::filesystem::path& path) {
    validate_series(series);
    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << style.width << "' height='"
        << style.height << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    if (!style.title.empty())
        out << "<text x='" << style.width / 2
            << "' y='20' font-size='14' text-anchor='middle'>" << style.title << "</text>\n";
    draw_panel(out, series, style, 60, 35, style.width - 85.0, style.height - 90.0, "", true);
    out << "</svg>\n";
    write_text_atomic(path, out.str());
}

void emit_panels(const std::vector<std::vector<Series>>& panels,
                 const std::vector<std::string>& panel_titles, const PlotStyle& style,
                 const std::filesystem::path& path) {
    if (panels.empty()) throw std::invalid_argument("emit_panels: no panels");
    for (const auto& p : panels) validate_series(p);

    const double panel_h = (style.height - 60.0) / panels.size();
    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << style.width << "' height='"
        << style.height << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    if (!style.title.empty())
        out << "<text x='" << style.width / 2
            << "' y='20' font-size='14' text-anchor='middle'>" << style.title << "</text>\n";
    for (std::size_t i = 0; i < panels.size(); ++i) {
        const std::string title = i < panel_titles.size() ? panel_titles[i] : "";
        draw_panel(out, panels[i], style, 60, 35 + i * panel_h, style.width - 85.0,
                   panel_h - 45.0, title, i + 1 == panels.size());
    }
    out << "</svg>\n";
    write_text_atomic(path, out.str());
}

}  // namespace diracsim
