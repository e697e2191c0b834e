#include "gridpath/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gridpath {

namespace {

bool points_equal(const PointK& a, const PointK& b, double eps) {
    return distance(a, b) <= eps;
}

bool edges_equal_unordered(const Segment& e1, const Segment& e2, double eps) {
    return (points_equal(e1.a, e2.a, eps) && points_equal(e1.b, e2.b, eps)) ||
           (points_equal(e1.a, e2.b, eps) && points_equal(e1.b, e2.a, eps));
}

} // namespace

int visit_count(const PointK& p, const Chain& c, double eps) {
    const std::size_t n = c.edge_count();
    if (n == 0) return 0;
    if (p.dim() != c.dim()) throw std::invalid_argument("visit_count: dimension mismatch");
    std::vector<char> on(n, 0);
    for (std::size_t i = 0; i < n; ++i) on[i] = point_on_segment(p, c.edge(i), eps) ? 1 : 0;
    int runs = 0;
    bool all_on = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (on[i] && (i == 0 || !on[i - 1])) ++runs;
        all_on = all_on && on[i];
    }
    if (c.kind == ChainKind::cycle && n >= 2 && on[0] && on[n - 1]) {
        runs = all_on ? 1 : runs - 1; // the wrap-around vertex merges once
    }
    return runs;
}

VerificationReport verify(const Chain& c, const GridSpec& g, const Box& box, double eps) {
    if (c.vertices.size() < 2) throw std::invalid_argument("verify: chain needs >= 2 vertices");
    if (c.dim() != g.rank()) throw std::invalid_argument("verify: chain/grid dimension mismatch");
    if (box.lo.dim() != g.rank()) throw std::invalid_argument("verify: box dimension mismatch");

    VerificationReport r;
    const std::size_t n = c.edge_count();
    r.link_length_h = n;

    // lengths, total length, eps-clustered classes
    std::vector<double> lengths(n);
    for (std::size_t i = 0; i < n; ++i) {
        lengths[i] = distance(c.vertices[i], c.vertices[i + 1]);
        r.total_length_lambda += lengths[i];
    }
    std::vector<double> sorted = lengths;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        double sum = sorted[i];
        while (j < n && sorted[j] - sorted[j - 1] <= eps) sum += sorted[j++];
        r.length_classes.push_back(sum / static_cast<double>(j - i));
        i = j;
    }

    // coverage
    const auto grid_points = enumerate_points(g);
    r.covers_all = true;
    r.visit_counts.reserve(grid_points.size());
    for (const PointK& p : grid_points) {
        const int cnt = visit_count(p, c, eps);
        r.visit_counts.emplace_back(grid_coords(p), cnt);
        const bool ok = c.kind == ChainKind::trail ? cnt >= 1 : cnt == 1;
        r.covers_all = r.covers_all && ok;
    }

    // repeated edges (unordered endpoint pairs)
    for (std::size_t i = 0; i < n && !r.repeated_edges; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (edges_equal_unordered(c.edge(i), c.edge(j), eps)) {
                r.repeated_edges = true;
                break;
            }
        }
    }

    // non-collinearity of consecutive edges (cycles wrap around)
    r.noncollinear_ok = true;
    for (std::size_t i = 0; i + 2 < c.vertices.size(); ++i) {
        if (collinear(c.vertices[i], c.vertices[i + 1], c.vertices[i + 2], eps)) {
            r.noncollinear_ok = false;
        }
    }
    if (c.kind == ChainKind::cycle && n >= 2) {
        if (collinear(c.vertices[n - 1], c.vertices[0], c.vertices[1], eps)) {
            r.noncollinear_ok = false;
        }
    }

    // pairwise uncrossing
    r.uncrossing = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool wrap = c.kind == ChainKind::cycle && i == 0 && j == n - 1;
            const bool adjacent = j == i + 1 || wrap;
            const auto res = segments_intersect(c.edge(i), c.edge(j), eps);
            bool ok;
            if (adjacent) {
                const PointK& shared = wrap ? c.vertices[0] : c.vertices[j];
                ok = res.kind == IntersectKind::touch && points_equal(res.point, shared, eps);
            } else {
                ok = res.kind == IntersectKind::disjoint;
            }
            if (!ok) {
                r.uncrossing = false;
                r.crossing_witnesses.push_back({i, j, res.point});
            }
        }
    }

    // containment
    r.containment_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!contained_in(c.edge(i), box, eps)) r.containment_ok = false;
    }

    // regular vs smart cycle
    if (c.kind == ChainKind::cycle) {
        r.cycle_class =
            is_grid_point(g, c.vertices.front(), eps) ? CycleClass::regular : CycleClass::smart;
    }

    return r;
}

bool report_passes(const VerificationReport& r, ChainKind kind) {
    const bool base =
        r.covers_all && !r.repeated_edges && r.noncollinear_ok && r.containment_ok;
    if (kind == ChainKind::path) return base && r.uncrossing;
    return base;
}

std::string to_string(CycleClass c) {
    switch (c) {
        case CycleClass::not_cycle: return "not_cycle";
        case CycleClass::regular: return "regular";
        case CycleClass::smart: return "smart";
    }
    return "not_cycle";
}

std::string format_report(const VerificationReport& r) {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    char buf[64];
    std::string out;
    out += std::string("covers_all=") + flag(r.covers_all) + "\n";
    int uncovered = 0, multi = 0;
    for (const auto& [pt, cnt] : r.visit_counts) {
        if (cnt == 0) ++uncovered;
        if (cnt > 1) ++multi;
    }
    out += "grid_points=" + std::to_string(r.visit_counts.size()) + " uncovered=" +
           std::to_string(uncovered) + " multiply_visited=" + std::to_string(multi) + "\n";
    out += std::string("repeated_edges=") + flag(r.repeated_edges) + "\n";
    out += std::string("noncollinear_ok=") + flag(r.noncollinear_ok) + "\n";
    out += std::string("uncrossing=") + flag(r.uncrossing) + "\n";
    if (!r.crossing_witnesses.empty()) {
        out += "crossing_witnesses=" + std::to_string(r.crossing_witnesses.size()) + "\n";
        const std::size_t show = std::min<std::size_t>(r.crossing_witnesses.size(), 4);
        for (std::size_t i = 0; i < show; ++i) {
            const auto& w = r.crossing_witnesses[i];
            out += "  edges (" + std::to_string(w.edge_i + 1) + "," + std::to_string(w.edge_j + 1) +
                   ") near " + to_string(w.point) + "\n";
        }
    }
    out += std::string("containment_ok=") + flag(r.containment_ok) + "\n";
    out += "link_length_h=" + std::to_string(r.link_length_h) + "\n";
    out += "length_classes=[";
    for (std::size_t i = 0; i < r.length_classes.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g", r.length_classes[i]);
        if (i) out += ", ";
        out += buf;
    }
    out += "]\n";
    std::snprintf(buf, sizeof buf, "%.12g", r.total_length_lambda);
    out += std::string("total_length_lambda=") + buf + "\n";
    out += "cycle_class=" + to_string(r.cycle_class) + "\n";
    return out;
}

} // namespace gridpath
