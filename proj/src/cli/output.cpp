#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace zs::cli {

std::string num(double v)
{
    if (v == 0.0)
        v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string esc(const std::string& s)
{
    std::string o;
    for (char c : s) {
        switch (c) {
        case '&': o += "&amp;"; break;
        case '<': o += "&lt;"; break;
        case '>': o += "&gt;"; break;
        case '"': o += "&quot;"; break;
        default: o += c;
        }
    }
    return o;
}

std::string px(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v, double step)
{
    if (std::abs(v) < step * 1e-9)
        v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double nice_step(double range)
{
    if (!(range > 0.0))
        return 1.0;
    const double raw = range / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double f = raw / mag;
    const double n = f < 1.5 ? 1.0 : f < 3.0 ? 2.0 : f < 7.0 ? 5.0 : 10.0;
    return n * mag;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v)
    {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void finish()
    {
        if (!std::isfinite(lo)) {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi - lo <= 0.0) {
            const double d = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
            lo -= d;
            hi += d;
        }
        const double pad = 0.04 * (hi - lo);
        lo -= pad;
        hi += pad;
    }
};

}  // namespace

void write_svg(std::ostream& os, const Figure& fig)
{
    const double W = 860, H = 540, ml = 80, mr = 190, mt = 44, mb = 56;
    const double pw = W - ml - mr, ph = H - mt - mb;

    Range rx, ry;
    for (const auto& s : fig.series)
        for (std::size_t i = 0; i < s.x.size(); ++i)
            if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
                rx.add(s.x[i]);
                ry.add(s.y[i]);
            }
    rx.finish();
    ry.finish();
    if (fig.equal_aspect) {
        const double sx = (rx.hi - rx.lo) / pw, sy = (ry.hi - ry.lo) / ph;
        if (sx > sy) {
            const double c = 0.5 * (ry.lo + ry.hi), half = 0.5 * sx * ph;
            ry.lo = c - half;
            ry.hi = c + half;
        } else {
            const double c = 0.5 * (rx.lo + rx.hi), half = 0.5 * sy * pw;
            rx.lo = c - half;
            rx.hi = c + half;
        }
    }
    auto X = [&](double v) { return ml + (v - rx.lo) / (rx.hi - rx.lo) * pw; };
    auto Y = [&](double v) { return mt + (ry.hi - v) / (ry.hi - ry.lo) * ph; };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H
       << "\" style=\"fill:#ffffff\"/>\n";
    os << "<text x=\"" << px(ml + pw / 2) << "\" y=\"26\" style=\"font:15px sans-serif;"
       << "text-anchor:middle\">" << esc(fig.title) << "</text>\n";

    // grid and ticks
    const double xs = nice_step(rx.hi - rx.lo), ys = nice_step(ry.hi - ry.lo);
    os << "<g style=\"font:11px sans-serif\">\n";
    for (double v = std::ceil(rx.lo / xs) * xs; v <= rx.hi; v += xs) {
        os << "<line x1=\"" << px(X(v)) << "\" y1=\"" << px(mt) << "\" x2=\"" << px(X(v))
           << "\" y2=\"" << px(mt + ph) << "\" style=\"stroke:#e4e4e4\"/>\n";
        os << "<text x=\"" << px(X(v)) << "\" y=\"" << px(mt + ph + 16)
           << "\" style=\"text-anchor:middle\">" << tick_label(v, xs) << "</text>\n";
    }
    for (double v = std::ceil(ry.lo / ys) * ys; v <= ry.hi; v += ys) {
        os << "<line x1=\"" << px(ml) << "\" y1=\"" << px(Y(v)) << "\" x2=\"" << px(ml + pw)
           << "\" y2=\"" << px(Y(v)) << "\" style=\"stroke:#e4e4e4\"/>\n";
        os << "<text x=\"" << px(ml - 6) << "\" y=\"" << px(Y(v) + 4)
           << "\" style=\"text-anchor:end\">" << tick_label(v, ys) << "</text>\n";
    }
    os << "</g>\n";
    if (rx.lo < 0.0 && rx.hi > 0.0)
        os << "<line x1=\"" << px(X(0)) << "\" y1=\"" << px(mt) << "\" x2=\"" << px(X(0))
           << "\" y2=\"" << px(mt + ph) << "\" style=\"stroke:#999999\"/>\n";
    if (ry.lo < 0.0 && ry.hi > 0.0)
        os << "<line x1=\"" << px(ml) << "\" y1=\"" << px(Y(0)) << "\" x2=\"" << px(ml + pw)
           << "\" y2=\"" << px(Y(0)) << "\" style=\"stroke:#999999\"/>\n";
    os << "<rect x=\"" << px(ml) << "\" y=\"" << px(mt) << "\" width=\"" << px(pw)
       << "\" height=\"" << px(ph) << "\" style=\"fill:none;stroke:#333333\"/>\n";
    os << "<text x=\"" << px(ml + pw / 2) << "\" y=\"" << px(H - 14)
       << "\" style=\"font:13px sans-serif;text-anchor:middle\">" << esc(fig.xlabel)
       << "</text>\n";
    os << "<text x=\"18\" y=\"" << px(mt + ph / 2) << "\" transform=\"rotate(-90 18 "
       << px(mt + ph / 2) << ")\" style=\"font:13px sans-serif;text-anchor:middle\">"
       << esc(fig.ylabel) << "</text>\n";

    for (std::size_t k = 0; k < fig.series.size(); ++k) {
        const Series& s = fig.series[k];
        const char* color = kPalette[k % std::size(kPalette)];
        if (s.scatter) {
            os << "<g style=\"fill:" << color << "\">\n";
            for (std::size_t i = 0; i < s.x.size(); ++i)
                if (std::isfinite(s.x[i]) && std::isfinite(s.y[i]))
                    os << "<circle cx=\"" << px(X(s.x[i])) << "\" cy=\"" << px(Y(s.y[i]))
                       << "\" r=\"2.6\"/>\n";
            os << "</g>\n";
        } else {
            std::string pts;
            auto flush = [&] {
                if (!pts.empty())
                    os << "<polyline points=\"" << pts << "\" style=\"fill:none;stroke:" << color
                       << ";stroke-width:1.3\"/>\n";
                pts.clear();
            };
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                    flush();
                    continue;
                }
                pts += px(X(s.x[i])) + "," + px(Y(s.y[i])) + " ";
            }
            flush();
        }
        const double ly = mt + 14 + 18 * static_cast<double>(k);
        os << "<rect x=\"" << px(ml + pw + 14) << "\" y=\"" << px(ly - 8)
           << "\" width=\"12\" height=\"8\" style=\"fill:" << color << "\"/>\n";
        os << "<text x=\"" << px(ml + pw + 32) << "\" y=\"" << px(ly)
           << "\" style=\"font:11px sans-serif\">" << esc(s.name) << "</text>\n";
    }
    os << "</svg>\n";
}

void write_figure_csv(std::ostream& os, const Figure& fig)
{
    CsvWriter w{os};
    w.header("series,x,y");
    for (const auto& s : fig.series)
        for (std::size_t i = 0; i < s.x.size(); ++i)
            w.row(s.name, s.x[i], s.y[i]);
}

}  // namespace zs::cli
