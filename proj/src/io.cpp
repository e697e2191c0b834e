#include "gridpath/io.hpp"

#include "gridpath/grid.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gridpath {

namespace {

std::string fmt_real(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

} // namespace

std::string write_chain(const Chain& c) {
    validate_chain(c);
    std::string out;
    out += "{\n";
    out += "  \"version\": 1,\n";
    out += "  \"dims\": [";
    for (std::size_t i = 0; i < c.dims.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(c.dims[i]);
    }
    out += "],\n";
    out += "  \"kind\": " + json_string(to_string(c.kind)) + ",\n";
    out += "  \"label\": " + json_string(c.label) + ",\n";
    out += "  \"vertices\": [\n";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        out += "    [";
        for (std::size_t j = 0; j < c.vertices[i].dim(); ++j) {
            if (j) out += ", ";
            out += fmt_real(c.vertices[i][j]);
        }
        out += i + 1 < c.vertices.size() ? "],\n" : "]\n";
    }
    out += "  ],\n";
    out += "  \"steiner_flags\": [";
    for (std::size_t i = 0; i < c.steiner_flags.size(); ++i) {
        if (i) out += ", ";
        out += c.steiner_flags[i] ? "true" : "false";
    }
    out += "]\n";
    out += "}\n";
    return out;
}

Chain read_chain(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("chain document: invalid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object()) throw std::runtime_error("chain document: expected an object");
        if (doc.value("version", 0) != 1) {
            throw std::runtime_error("chain document: unsupported version");
        }
        Chain c;
        c.dims = doc.at("dims").get<std::vector<int>>();
        c.kind = chain_kind_from_string(doc.at("kind").get<std::string>());
        c.label = doc.value("label", std::string{});
        for (const auto& row : doc.at("vertices")) {
            c.vertices.emplace_back(row.get<std::vector<double>>());
        }
        if (doc.contains("steiner_flags")) {
            for (const auto& f : doc.at("steiner_flags")) c.steiner_flags.push_back(f.get<bool>());
        }
        for (const PointK& v : c.vertices) {
            for (std::size_t i = 0; i < v.dim(); ++i) {
                if (!std::isfinite(v[i])) throw std::runtime_error("chain document: non-finite coordinate");
            }
        }
        validate_chain(c);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("chain document: ") + e.what());
    }
}

Projection projection_from_string(const std::string& s) {
    if (s == "xy") return Projection::xy;
    if (s == "xz") return Projection::xz;
    if (s == "yz") return Projection::yz;
    if (s == "iso" || s == "isometric") return Projection::isometric;
    throw std::invalid_argument("unknown projection: " + s);
}

std::string to_string(Projection p) {
    switch (p) {
        case Projection::xy: return "xy";
        case Projection::xz: return "xz";
        case Projection::yz: return "yz";
        case Projection::isometric: return "iso";
    }
    return "xy";
}

namespace {

struct Mapper {
    Projection proj;
    double scale = 1.0, off_u = 0.0, off_v = 0.0;
    double min_u = 0.0, max_u = 0.0, min_v = 0.0, max_v = 0.0;
    bool first = true;

    std::pair<double, double> project(const PointK& p) const {
        switch (proj) {
            case Projection::xy: return {p[0], p[1]};
            case Projection::xz: return {p[0], p[2]};
            case Projection::yz: return {p[1], p[2]};
            case Projection::isometric: {
                const double c30 = std::sqrt(3.0) / 2.0;
                return {(p[0] - p[1]) * c30, 0.5 * (p[0] + p[1]) + p[2]};
            }
        }
        return {0, 0};
    }
    void grow(const PointK& p) {
        const auto [u, v] = project(p);
        if (first) {
            min_u = max_u = u;
            min_v = max_v = v;
            first = false;
        } else {
            min_u = std::min(min_u, u);
            max_u = std::max(max_u, u);
            min_v = std::min(min_v, v);
            max_v = std::max(max_v, v);
        }
    }
    void fit(double width) {
        const double span = std::max({max_u - min_u, max_v - min_v, 1e-9});
        scale = width / span;
        off_u = min_u;
        off_v = min_v;
    }
    // y grows downward in the drawing
    std::pair<double, double> map(const PointK& p) const {
        const auto [u, v] = project(p);
        return {40.0 + (u - off_u) * scale, 40.0 + (max_v - v) * scale};
    }
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::vector<PointK> box_corners(const Box& b) {
    const std::size_t k = b.lo.dim();
    std::vector<PointK> out;
    const std::size_t n = std::size_t{1} << k;
    for (std::size_t mask = 0; mask < n; ++mask) {
        std::vector<double> c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = (mask >> i) & 1 ? b.hi[i] : b.lo[i];
        out.emplace_back(std::move(c));
    }
    return out;
}

} // namespace

std::string export_figure(const Chain& c, Projection proj) {
    validate_chain(c);
    const std::size_t k = c.dim();
    if (proj == Projection::isometric && k != 3) {
        throw std::invalid_argument("export_figure: isometric projection requires dimension 3");
    }
    if ((proj == Projection::xz || proj == Projection::yz) && k < 3) {
        throw std::invalid_argument("export_figure: projection needs a third coordinate");
    }
    if (k < 2) throw std::invalid_argument("export_figure: chain dimension must be >= 2");

    std::vector<PointK> grid_dots;
    if (!c.dims.empty() && c.dims.size() == k) grid_dots = enumerate_points(GridSpec{c.dims});
    const Box bbox = tight_aabb(c.vertices);
    const auto corners = box_corners(bbox);

    Mapper m{proj};
    for (const auto& v : c.vertices) m.grow(v);
    for (const auto& p : grid_dots) m.grow(p);
    for (const auto& p : corners) m.grow(p);
    m.fit(560.0);

    const double w = 40.0 + (m.max_u - m.min_u) * m.scale + 40.0;
    const double h = 40.0 + (m.max_v - m.min_v) * m.scale + 60.0;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" +
           num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
    svg += "  <defs>\n"
           "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">\n"
           "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#555\"/>\n"
           "    </marker>\n"
           "  </defs>\n";

    // tight bounding box outline
    svg += "  <g class=\"box\" stroke=\"#c8c8c8\" fill=\"none\" stroke-dasharray=\"5,4\">\n";
    const std::size_t nc = corners.size();
    for (std::size_t i = 0; i < nc; ++i) {
        for (std::size_t j = i + 1; j < nc; ++j) {
            if (std::popcount(i ^ j) != 1) continue; // box edges differ in one corner bit
            const auto [x1, y1] = m.map(corners[i]);
            const auto [x2, y2] = m.map(corners[j]);
            svg += "    <line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
                   "\" y2=\"" + num(y2) + "\"/>\n";
        }
    }
    svg += "  </g>\n";

    svg += "  <g class=\"grid\" fill=\"#1f3d7a\">\n";
    for (const auto& p : grid_dots) {
        const auto [x, y] = m.map(p);
        svg += "    <circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"4\"/>\n";
    }
    svg += "  </g>\n";

    svg += "  <g class=\"edges\" stroke=\"#b03030\" stroke-width=\"1.6\" fill=\"none\">\n";
    for (std::size_t i = 0; i < c.edge_count(); ++i) {
        const auto [x1, y1] = m.map(c.vertices[i]);
        const auto [x2, y2] = m.map(c.vertices[i + 1]);
        svg += "    <line class=\"edge\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" +
               num(x2) + "\" y2=\"" + num(y2) + "\" marker-end=\"url(#arrow)\"/>\n";
    }
    svg += "  </g>\n";

    svg += "  <g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
    for (std::size_t i = 0; i < c.edge_count(); ++i) {
        const auto [x1, y1] = m.map(c.vertices[i]);
        const auto [x2, y2] = m.map(c.vertices[i + 1]);
        svg += "    <text x=\"" + num(0.5 * (x1 + x2) + 5) + "\" y=\"" +
               num(0.5 * (y1 + y2) - 5) + "\">" + std::to_string(i + 1) + "</text>\n";
    }
    svg += "  </g>\n";

    svg += "  <g class=\"steiner\" fill=\"#ffffff\" stroke=\"#2f8f2f\" stroke-width=\"2\">\n";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (c.steiner_flags.size() == c.vertices.size() && !c.steiner_flags[i]) continue;
        if (c.steiner_flags.empty()) continue;
        const auto [x, y] = m.map(c.vertices[i]);
        svg += "    <circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"4\"/>\n";
    }
    svg += "  </g>\n";

    svg += "  <text x=\"12\" y=\"" + num(h - 14) + "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#222\">" +
           c.label + " (" + to_string(proj) + ")</text>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace gridpath
