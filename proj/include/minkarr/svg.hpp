#pragma once

// SVG 1.1 rendering of the plane through v_i, v_j, x_i, x_j for one pair.

#include "minkarr/lifting.hpp"

#include <cstdio>
#include <sstream>
#include <string>

namespace minkarr {

struct DiagramSpec {
    std::size_t i = 0;
    std::size_t j = 1;
    int width = 800;
    int height = 500;
    bool segments = true;  // t_k on the line r
    bool point_x = true;
    bool lines = true;     // a_i, b_i, a_j, b_j
    bool slab = true;      // wedge between b_i and b_j containing the lifted points
};

namespace detail {

inline std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace detail

template <Scalar S>
std::string render_pair_svg(const Arrangement<S>& arr, const ShadowData<S>& sd, const DiagramSpec& diagram)
{
    const std::size_t n = arr.size();
    if (diagram.i >= n || diagram.j >= n || diagram.i == diagram.j) throw geometry_error("diagram pair out of range");
    if (diagram.width < 100 || diagram.height < 100) throw geometry_error("diagram canvas too small");

    // world coordinates: s = position along r (r-units from v_i), h = homothety ratio
    std::vector<double> alpha(n), lam(n);
    double smin = 0, smax = 0, hmax = 0;
    for (std::size_t k = 0; k < n; ++k) {
        alpha[k] = num::to_double(sd.alphas[k]);
        lam[k] = num::to_double(arr[k].ratio);
        smin = std::min(smin, alpha[k] - lam[k]);
        smax = std::max(smax, alpha[k] + lam[k]);
        hmax = std::max(hmax, lam[k]);
    }
    const double pad = 0.08 * (smax - smin) + 1e-9;
    smin -= pad;
    smax += pad;
    hmax = hmax * 1.15 + 1e-9;
    const double margin = 40;
    const double scale = std::min((diagram.width - 2 * margin) / (smax - smin),
                                  (diagram.height - 2 * margin - 20 * static_cast<double>(n)) / hmax);
    const double base_y = diagram.height - margin - 14.0 * static_cast<double>(n);
    auto px = [&](double s) { return margin + (s - smin) * scale; };
    auto py = [&](double h) { return base_y - h * scale; };
    const double xs = num::to_double(sd.x_coord);
    const double li = lam[diagram.i], lj = lam[diagram.j];
    const double aj = alpha[diagram.j];

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<!-- plane of pair (" << diagram.i << "," << diagram.j << "). Canvas " << diagram.width << "x" << diagram.height
        << " px, origin top-left, y down. World point (s,h) maps to (" << detail::fmt(margin) << " + (s - "
        << detail::fmt(smin) << ")*" << detail::fmt(scale) << ", " << detail::fmt(base_y) << " - h*"
        << detail::fmt(scale)
        << "). s is the coordinate along r in units of the boundary point r (v_i at s=0), h is the homothety ratio. "
           "Segments t_k are drawn on the line h=0 and repeated in rows below it. -->\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << diagram.width << "\" height=\""
        << diagram.height << "\" viewBox=\"0 0 " << diagram.width << ' ' << diagram.height << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << diagram.width << "\" height=\"" << diagram.height
        << "\" fill=\"white\"/>\n";

    auto line = [&](double s0, double h0, double s1, double h1, const char* stroke, const char* extra) {
        out << "<line x1=\"" << detail::fmt(px(s0)) << "\" y1=\"" << detail::fmt(py(h0)) << "\" x2=\""
            << detail::fmt(px(s1)) << "\" y2=\"" << detail::fmt(py(h1)) << "\" stroke=\"" << stroke << "\"" << extra
            << "/>\n";
    };
    auto label = [&](double s, double h, const std::string& text, double dx, double dy) {
        out << "<text x=\"" << detail::fmt(px(s) + dx) << "\" y=\"" << detail::fmt(py(h) + dy)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << text << "</text>\n";
    };

    // the line r
    line(smin, 0, smax, 0, "black", " stroke-width=\"1\"");

    if (diagram.slab) {
        // wedge above x bounded by b_i (slope -1) and b_j (slope +1)
        const double top = hmax;
        out << "<polygon points=\"" << detail::fmt(px(xs)) << ',' << detail::fmt(py(0)) << ' '
            << detail::fmt(px(xs - top)) << ',' << detail::fmt(py(top)) << ' ' << detail::fmt(px(xs + top)) << ','
            << detail::fmt(py(top)) << "\" fill=\"#dde8f7\" stroke=\"none\"/>\n";
    }
    if (diagram.lines) {
        // a_i through v_i + l_i r and x_i; a_j through v_j - l_j r and x_j; b_* parallel through x
        line(li, 0, li - hmax, hmax, "#c0392b", " stroke-dasharray=\"6,4\"");
        line(aj - lj, 0, aj - lj + hmax, hmax, "#27ae60", " stroke-dasharray=\"6,4\"");
        line(xs, 0, xs - hmax, hmax, "#c0392b", "");
        line(xs, 0, xs + hmax, hmax, "#27ae60", "");
        label(li - hmax * 0.9, hmax * 0.9, "a_i", 4, 0);
        label(xs - hmax * 0.9, hmax * 0.9, "b_i", -24, 0);
        label(aj - lj + hmax * 0.9, hmax * 0.9, "a_j", -24, 0);
        label(xs + hmax * 0.9, hmax * 0.9, "b_j", 4, 0);
    }
    if (diagram.segments) {
        for (std::size_t k = 0; k < n; ++k) {
            const bool hl = k == diagram.i || k == diagram.j;
            const char* colour = k == diagram.i ? "#c0392b" : k == diagram.j ? "#27ae60" : "#7f8c8d";
            const double row = 14.0 * static_cast<double>(k + 1) / scale;
            line(alpha[k] - lam[k], -row, alpha[k] + lam[k], -row, colour, hl ? " stroke-width=\"3\"" : " stroke-width=\"1.5\"");
            label(alpha[k] + lam[k], -row, "t_" + std::to_string(k), 4, 4);
            if (hl) line(alpha[k] - lam[k], 0, alpha[k] + lam[k], 0, colour, " stroke-width=\"3\"");
        }
    }
    // lifted points x'_k = (alpha_k, lambda_k)
    for (std::size_t k = 0; k < n; ++k) {
        out << "<circle cx=\"" << detail::fmt(px(alpha[k])) << "\" cy=\"" << detail::fmt(py(lam[k]))
            << "\" r=\"3\" fill=\"black\"/>\n";
        if (k == diagram.i || k == diagram.j) label(alpha[k], lam[k], "x_" + std::to_string(k), 5, -5);
    }
    if (diagram.point_x) {
        out << "<circle cx=\"" << detail::fmt(px(xs)) << "\" cy=\"" << detail::fmt(py(0))
            << "\" r=\"4\" fill=\"#2c3e50\"/>\n";
        label(xs, 0, "x", 5, 16);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace minkarr
