#pragma once

#include <algorithm>
#include <complex>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace dompoly {

/// Root scatter plot settings. Geometry is fixed so output bytes depend only on the data.
struct ScatterOptions {
    std::string title;
    /// Overlay |z - center| = radius.
    std::optional<std::pair<std::complex<double>, double>> circle;
};

namespace detail {

inline std::string fmt2(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v == 0.0 ? 0.0 : v);
    return buf;
}

inline std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace detail

/**
 * 800x600 SVG scatter of points in the complex plane with real/imaginary axes. Both axes use
 * the same scale (circles stay round); the view is the bounding box of the points, the origin
 * and the optional circle, padded by 5%.
 */
inline std::string render_scatter_svg(const std::vector<std::complex<double>>& points, const ScatterOptions& opt = {})
{
    constexpr double width = 800.0, height = 600.0, margin = 50.0, dot = 1.0;

    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
    const auto include = [&](double x, double y) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    };
    for (const auto& p : points) include(p.real(), p.imag());
    if (opt.circle) {
        const auto [c, r] = *opt.circle;
        include(c.real() - r, c.imag() - r);
        include(c.real() + r, c.imag() + r);
    }
    if (x1 - x0 < 1e-9) { x0 -= 1.0; x1 += 1.0; }
    if (y1 - y0 < 1e-9) { y0 -= 1.0; y1 += 1.0; }
    const double padx = 0.05 * (x1 - x0), pady = 0.05 * (y1 - y0);
    x0 -= padx; x1 += padx; y0 -= pady; y1 += pady;

    const double scale = std::min((width - 2 * margin) / (x1 - x0), (height - 2 * margin) / (y1 - y0));
    const double ox = width / 2 - scale * (x0 + x1) / 2;
    const double oy = height / 2 + scale * (y0 + y1) / 2;
    const auto sx = [&](double x) { return ox + scale * x; };
    const auto sy = [&](double y) { return oy - scale * y; };
    using detail::fmt2;

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    if (!opt.title.empty())
        s += "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
             detail::xml_escape(opt.title) + "</text>\n";
    s += "<g stroke=\"#888888\" stroke-width=\"1\">\n";
    s += "<line x1=\"" + fmt2(sx(x0)) + "\" y1=\"" + fmt2(sy(0)) + "\" x2=\"" + fmt2(sx(x1)) + "\" y2=\"" + fmt2(sy(0)) + "\"/>\n";
    s += "<line x1=\"" + fmt2(sx(0)) + "\" y1=\"" + fmt2(sy(y0)) + "\" x2=\"" + fmt2(sx(0)) + "\" y2=\"" + fmt2(sy(y1)) + "\"/>\n";
    s += "</g>\n";
    s += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#444444\">\n";
    s += "<text x=\"" + fmt2(sx(x0)) + "\" y=\"" + fmt2(sy(0) + 14) + "\">" + fmt2(x0) + "</text>\n";
    s += "<text x=\"" + fmt2(sx(x1)) + "\" y=\"" + fmt2(sy(0) + 14) + "\" text-anchor=\"end\">" + fmt2(x1) + "</text>\n";
    s += "<text x=\"" + fmt2(sx(0) + 4) + "\" y=\"" + fmt2(sy(y1) + 11) + "\">" + fmt2(y1) + "i</text>\n";
    s += "<text x=\"" + fmt2(sx(0) + 4) + "\" y=\"" + fmt2(sy(y0)) + "\">" + fmt2(y0) + "i</text>\n";
    s += "</g>\n";
    if (opt.circle) {
        const auto [c, r] = *opt.circle;
        s += "<circle cx=\"" + fmt2(sx(c.real())) + "\" cy=\"" + fmt2(sy(c.imag())) + "\" r=\"" + fmt2(scale * r) +
             "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }
    s += "<g fill=\"#1f77b4\">\n";
    for (const auto& p : points)
        s += "<circle cx=\"" + fmt2(sx(p.real())) + "\" cy=\"" + fmt2(sy(p.imag())) + "\" r=\"" + fmt2(dot) + "\"/>\n";
    s += "</g>\n</svg>\n";
    return s;
}

} // namespace dompoly
