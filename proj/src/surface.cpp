#include "finecurves/surface.hpp"

#include <map>

namespace finecurves {

std::vector<std::pair<int, int>> fine_handle_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            pairs.emplace_back(i, j);
        }
    return pairs;
}

Surface build_surface(SurfaceKind kind, int n) {
    Surface s;
    s.kind = kind;
    s.param = n;
    switch (kind) {
    case SurfaceKind::Torus:
        s.label = "torus";
        s.charts.push_back({ChartKind::TorusSquare, 1, 1});
        break;
    case SurfaceKind::Annulus:
        s.label = "annulus";
        s.charts.push_back({ChartKind::AnnulusRect, 1, 1});
        break;
    case SurfaceKind::FineHandles: {
        if (n < 1) throw InvalidSpec("FineHandles requires n >= 1");
        s.label = "fine_handles(" + std::to_string(n) + ")";
        s.charts.push_back({ChartKind::TorusSquare, 1, 1});
        const Rat side = Rat(1, 16 * n * n * n);
        const Rat clear = Rat(1, 64 * n * n * n);
        auto vert = [&](int i) { return Rat(2 * i + 1, 2 * n); };
        for (auto [i, j] : fine_handle_pairs(n)) {
            const int handle = static_cast<int>(s.charts.size());
            s.charts.push_back({ChartKind::HandleCylinder, 4 * side, side});
            Mouth lo; // near curve i, height indexed by partner j
            lo.base_chart = 0;
            lo.center = {vert(i) + clear + side / 2, vert(j)};
            lo.side = side;
            lo.handle_chart = handle;
            lo.handle_end = 0;
            Mouth hi; // near curve j, height indexed by partner i
            hi.base_chart = 0;
            hi.center = {vert(j) + clear + side / 2, vert(i)};
            hi.side = side;
            hi.handle_chart = handle;
            hi.handle_end = 1;
            s.mouths.push_back(lo);
            s.mouths.push_back(hi);
        }
        break;
    }
    }
    validate_surface(s);
    return s;
}

std::string surface_kind_name(SurfaceKind kind) {
    switch (kind) {
    case SurfaceKind::Torus: return "torus";
    case SurfaceKind::Annulus: return "annulus";
    case SurfaceKind::FineHandles: return "fine-handles";
    }
    throw InvalidSpec("unknown surface kind");
}

SurfaceKind parse_surface_kind(const std::string& text) {
    if (text == "torus") return SurfaceKind::Torus;
    if (text == "annulus") return SurfaceKind::Annulus;
    if (text == "fine-handles") return SurfaceKind::FineHandles;
    throw InvalidSpec("unknown surface kind '" + text + "'");
}

int fine_handle_index(const Surface& s, int i, int j) {
    if (s.kind != SurfaceKind::FineHandles) throw InvalidSpec("not a FineHandles surface");
    if (i > j) std::swap(i, j);
    auto pairs = fine_handle_pairs(s.param);
    for (size_t t = 0; t < pairs.size(); ++t)
        if (pairs[t] == std::make_pair(i, j)) return static_cast<int>(t);
    return -1;
}

std::optional<Rat> mouth_perimeter_param(const Mouth& m, const RatPoint& p) {
    const Rat x0 = m.xmin(), x1 = m.xmax(), y0 = m.ymin(), y1 = m.ymax(), s = m.side;
    if (p.y == y0 && x0 <= p.x && p.x <= x1) return p.x - x0;                 // bottom
    if (p.x == x1 && y0 <= p.y && p.y <= y1) return s + (p.y - y0);           // right
    if (p.y == y1 && x0 <= p.x && p.x <= x1) return 2 * s + (x1 - p.x);       // top
    if (p.x == x0 && y0 <= p.y && p.y <= y1) {
        if (p.y == y0) return Rat(0); // corner belongs to the bottom edge start
        return 3 * s + (y1 - p.y);                                            // left
    }
    return std::nullopt;
}

RatPoint mouth_perimeter_point(const Mouth& m, const Rat& t) {
    const Rat s = m.side;
    Rat u = t;
    // normalize into [0, 4s)
    while (u < 0) u += 4 * s;
    while (u >= 4 * s) u -= 4 * s;
    if (u < s) return {m.xmin() + u, m.ymin()};
    if (u < 2 * s) return {m.xmax(), m.ymin() + (u - s)};
    if (u < 3 * s) return {m.xmax() - (u - 2 * s), m.ymax()};
    return {m.xmin(), m.ymax() - (u - 3 * s)};
}

RatPoint mouth_to_handle(const Surface& s, int mouth_idx, const RatPoint& base_pt) {
    const Mouth& m = s.mouths.at(static_cast<size_t>(mouth_idx));
    auto t = mouth_perimeter_param(m, base_pt);
    if (!t) throw MouthPlacement("point not on mouth perimeter");
    const Chart& cyl = s.chart(m.handle_chart);
    if (m.handle_end == 0) return {*t, 0};
    Rat x = 4 * m.side - *t;
    if (x == cyl.width) x = 0;
    return {x, cyl.height};
}

std::optional<RatPoint> handle_to_mouth(const Surface& s, int mouth_idx, const RatPoint& handle_pt) {
    const Mouth& m = s.mouths.at(static_cast<size_t>(mouth_idx));
    const Chart& cyl = s.chart(m.handle_chart);
    const Rat end_y = m.handle_end == 0 ? Rat(0) : cyl.height;
    if (handle_pt.y != end_y) return std::nullopt;
    Rat t = handle_pt.x;
    if (m.handle_end == 1) {
        t = 4 * m.side - t;
        if (t == 4 * m.side) t = 0;
    }
    return mouth_perimeter_point(m, t);
}

void validate_surface(const Surface& s) {
    if (s.charts.empty()) throw InvalidExtents("surface has no charts");
    for (const auto& c : s.charts)
        if (c.width <= 0 || c.height <= 0) throw InvalidExtents("chart extents must be positive");

    std::map<int, int> mouths_per_handle;
    for (const auto& m : s.mouths) {
        const Chart& base = s.chart(m.base_chart);
        if (base.kind == ChartKind::HandleCylinder)
            throw MouthPlacement("mouth removed from a handle chart");
        const Chart& cyl = s.chart(m.handle_chart);
        if (cyl.kind != ChartKind::HandleCylinder)
            throw MouthPlacement("mouth glued to a non-handle chart");
        if (cyl.width != 4 * m.side)
            throw MouthPlacement("handle circumference must equal mouth perimeter");
        if (m.side <= 0) throw MouthPlacement("mouth side must be positive");
        // strictly inside the chart, away from identified edges
        if (!(m.xmin() > 0 && m.xmax() < base.width && m.ymin() > 0 && m.ymax() < base.height))
            throw MouthPlacement("mouth square touches the chart boundary");
        mouths_per_handle[m.handle_chart]++;
    }
    for (size_t a = 0; a < s.mouths.size(); ++a)
        for (size_t b = a + 1; b < s.mouths.size(); ++b) {
            const Mouth &ma = s.mouths[a], &mb = s.mouths[b];
            if (ma.base_chart != mb.base_chart) continue;
            const bool apart = ma.xmax() < mb.xmin() || mb.xmax() < ma.xmin() ||
                               ma.ymax() < mb.ymin() || mb.ymax() < ma.ymin();
            if (!apart) throw MouthPlacement("mouth squares overlap");
        }
    for (size_t ci = 0; ci < s.charts.size(); ++ci) {
        if (s.charts[ci].kind != ChartKind::HandleCylinder) continue;
        if (mouths_per_handle[static_cast<int>(ci)] != 2)
            throw MouthPlacement("handle must have exactly two mouths");
    }
}

} // namespace finecurves
