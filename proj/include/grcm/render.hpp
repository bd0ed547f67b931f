#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "grcm/combinat.hpp"
#include "grcm/error.hpp"

namespace grcm {

enum class Format { Ascii, Svg };

/// One rim drawn at fixed heights (half lattice steps, vertices 0..n).
struct RimTrack {
    Rim rim;
    std::vector<int> heights;
    bool dashed = false; // upper rim of a profile
    bool path = false;   // summand path drawn over a profile

    friend bool operator==(const RimTrack&, const RimTrack&) = default;
};

struct LatticeLayout {
    int n = 0;
    std::vector<RimTrack> tracks;
    int offset = 0;               // downward shift of the lower rim, in lattice steps
    std::vector<int> meet_points; // vertices 0..n-1 where the two profile rims meet
    std::string title;

    friend bool operator==(const LatticeLayout&, const LatticeLayout&) = default;
};

inline LatticeLayout layout_rim(const Rim& I) {
    LatticeLayout L;
    L.n = I.n();
    L.tracks.push_back({I, height_profile(I), false, false});
    L.title = "L_" + I.to_string() + ", n=" + std::to_string(I.n());
    return L;
}

namespace detail {

// Smallest downward shift (in half steps, always even) putting `lower`
// nowhere strictly above `upper`.
inline int drop_below(const std::vector<int>& upper, const std::vector<int>& lower) {
    int m = lower[0] - upper[0];
    for (std::size_t v = 0; v < upper.size(); ++v) m = std::max(m, lower[v] - upper[v]);
    return m;
}

} // namespace detail

/// Profile I|J: J placed as high as it can go without rising above I.
inline LatticeLayout layout_profile(const Rim& I, const Rim& J) {
    require_same_shape(I, J);
    const std::vector<int> hi = height_profile(I);
    std::vector<int> hj = height_profile(J);
    const int drop = detail::drop_below(hi, hj);
    for (int& h : hj) h -= drop;

    LatticeLayout L;
    L.n = I.n();
    L.offset = drop / 2;
    L.tracks.push_back({I, hi, true, false});
    L.tracks.push_back({J, hj, false, false});
    for (int v = 0; v < L.n; ++v)
        if (hi[v] == hj[v]) L.meet_points.push_back(v);
    L.title = "profile " + I.to_string() + " | " + J.to_string() + ", n=" + std::to_string(I.n());
    return L;
}

/// Profile I|J with the rim of a summand X drawn as a path through it, as
/// high as it goes without rising above I.
inline LatticeLayout layout_summand(const Rim& I, const Rim& J, const Rim& X) {
    require_same_shape(I, X);
    LatticeLayout L = layout_profile(I, J);
    std::vector<int> hx = height_profile(X);
    const int drop = detail::drop_below(L.tracks[0].heights, hx);
    for (int& h : hx) h -= drop;
    L.tracks.push_back({X, hx, false, true});
    L.title = "summand L_" + X.to_string() + " in " + L.title;
    return L;
}

/// Maximal cyclic runs of vertices where the two profile rims differ.
inline int count_boxes(const LatticeLayout& L) {
    if (L.tracks.size() < 2) return 0;
    const auto& a = L.tracks[0].heights;
    const auto& b = L.tracks[1].heights;
    if (L.meet_points.empty()) return 0;
    int boxes = 0;
    for (int v = 0; v < L.n; ++v) {
        const int next = (v + 1) % L.n;
        if (a[v] == b[v] && a[next] != b[next]) ++boxes;
    }
    return boxes;
}

namespace detail {

inline std::pair<int, int> height_range(const LatticeLayout& L) {
    int lo = L.tracks.front().heights.front(), hi = lo;
    for (const auto& t : L.tracks)
        for (int h : t.heights) lo = std::min(lo, h), hi = std::max(hi, h);
    return {lo, hi};
}

// Each edge occupies a 3 character cell; the stroke sits in the middle.
inline std::string ascii(const LatticeLayout& L) {
    const auto [lo, hi] = height_range(L);
    const int rows = hi - lo, width = 3 * L.n + 1;
    std::vector<std::string> grid(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(width), ' '));
    const bool has_path = std::any_of(L.tracks.begin(), L.tracks.end(), [](const RimTrack& t) { return t.path; });

    auto stroke = [&](const RimTrack& t, bool ghost) {
        for (int i = 1; i <= L.n; ++i) {
            const int a = t.heights[i - 1], b = t.heights[i];
            const int row = hi - std::max(a, b);
            const char c = ghost ? ':' : (b > a ? '/' : '\\');
            char& cell = grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(3 * (i - 1) + 2)];
            if (ghost && cell != ' ') continue;
            if (cell == ' ' || cell == ':' || cell == c)
                cell = c;
            else
                cell = 'X';
        }
    };
    for (const auto& t : L.tracks)
        if (t.path) stroke(t, false);
    for (const auto& t : L.tracks)
        if (!t.path) stroke(t, has_path);

    std::string out = L.title + "\n";
    for (auto& line : grid) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    // One row of lattice dots below the lowest rim.
    std::string dots(static_cast<std::size_t>(width), ' ');
    for (int v = 0; v <= L.n; ++v) dots[static_cast<std::size_t>(3 * v)] = '.';
    out += dots + "\n";
    std::string labels(static_cast<std::size_t>(width + 2), ' ');
    for (int i = 1; i <= L.n; ++i) {
        const std::string s = std::to_string(i);
        labels.replace(static_cast<std::size_t>(3 * (i - 1) + 2), s.size(), s);
    }
    while (!labels.empty() && labels.back() == ' ') labels.pop_back();
    out += labels + "\n";
    out += "columns 0 and " + std::to_string(L.n) + " are identified (0=n)\n";
    return out;
}

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

constexpr int grid_px = 40;
constexpr int margin_px = 40;

// SVG elements for one layout with its top edge at y0; returns the height used.
inline int svg_body(const LatticeLayout& L, int y0, std::string& out) {
    const auto [lo, hi] = height_range(L);
    // A half step of height is half a grid cell.
    auto X = [&](int v) { return margin_px + grid_px * v; };
    auto Y = [&](int h) { return y0 + margin_px + grid_px * (hi - h) / 2; };
    const int bottom = Y(lo - 2);

    out += "  <text x=\"" + std::to_string(margin_px) + "\" y=\"" + std::to_string(y0 + 16) +
           "\" font-family=\"monospace\" font-size=\"13\">" + L.title + "</text>\n";
    for (int v = 0; v <= L.n; ++v) {
        int low = L.tracks.front().heights[v];
        for (const auto& t : L.tracks) low = std::min(low, t.heights[v]);
        out += "  <circle cx=\"" + std::to_string(X(v)) + "\" cy=\"" + std::to_string(Y(low - 2)) +
               "\" r=\"2\" fill=\"#444\"/>\n";
    }
    const bool has_path = std::any_of(L.tracks.begin(), L.tracks.end(), [](const RimTrack& t) { return t.path; });
    for (const auto& t : L.tracks) {
        std::string pts;
        for (int v = 0; v <= L.n; ++v) pts += (v ? " " : "") + std::to_string(X(v)) + "," + std::to_string(Y(t.heights[v]));
        std::string style = t.path ? "stroke=\"#000\" stroke-width=\"3\""
                                   : (has_path ? "stroke=\"#999\" stroke-width=\"1.5\"" : "stroke=\"#000\" stroke-width=\"2\"");
        if (t.dashed) style += " stroke-dasharray=\"6,4\"";
        out += "  <polyline fill=\"none\" " + style + " points=\"" + pts + "\"/>\n";
    }
    // Edge labels above the upper rim.
    const auto& top = L.tracks.front().heights;
    for (int i = 1; i <= L.n; ++i) {
        const double x = (X(i - 1) + X(i)) / 2.0;
        const int y = std::min(Y(top[i - 1]), Y(top[i])) - 6;
        out += "  <text x=\"" + fmt(x) + "\" y=\"" + std::to_string(y) +
               "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" + std::to_string(i) + "</text>\n";
    }
    for (int v : {0, L.n})
        out += "  <text x=\"" + std::to_string(X(v)) + "\" y=\"" + std::to_string(bottom + 16) +
               "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">0=n</text>\n";
    return bottom + 24 - y0;
}

inline std::string svg(const std::vector<LatticeLayout>& layouts) {
    std::string body;
    int y = 0, width = 0;
    for (const auto& L : layouts) {
        y += svg_body(L, y, body);
        width = std::max(width, 2 * margin_px + grid_px * L.n);
    }
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(y) + "\" viewBox=\"0 0 " + std::to_string(width) +
           " " + std::to_string(y) + "\">\n" + body + "</svg>\n";
}

} // namespace detail

/// Deterministic text for one diagram.
inline std::string emit(const LatticeLayout& L, Format f) {
    return f == Format::Ascii ? detail::ascii(L) : detail::svg({L});
}

/// Diagrams stacked top to bottom, e.g. the two summand paths of a splitting.
inline std::string emit_stack(const std::vector<LatticeLayout>& layouts, Format f) {
    if (layouts.empty()) throw Error(Errc::InvalidInput, "nothing to render");
    if (f == Format::Svg) return detail::svg(layouts);
    std::string out;
    for (std::size_t i = 0; i < layouts.size(); ++i) out += (i ? "\n" : "") + detail::ascii(layouts[i]);
    return out;
}

inline Format parse_format(const std::string& s) {
    if (s == "ascii") return Format::Ascii;
    if (s == "svg") return Format::Svg;
    throw Error(Errc::InvalidInput, "unknown format '" + s + "' (expected ascii or svg)");
}

} // namespace grcm
