#include <sstream>

#include "finecurves/errors.hpp"
#include "finecurves/jsonio.hpp"
#include "finecurves/surface.hpp"
#include "finecurves/svg.hpp"

namespace finecurves {

namespace {

const Rat kScale(360);   // pixels per chart unit
const Rat kMargin(24);   // outer margin
const Rat kGap(48);      // horizontal gap between charts

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#bcbd22",
                          "#e377c2", "#7f7f7f", "#aec7e8", "#98df8a"};

std::string px(const Rat& v) { return rat_to_decimal(v, 2); }

struct Layout {
    std::vector<Rat> ox; // left edge of each chart
    std::vector<Rat> oy; // top edge of each chart
    Rat width, height;
};

Layout layout_charts(const Surface& s) {
    Layout L;
    Rat x = kMargin;
    Rat maxh(0);
    for (const Chart& ch : s.charts) {
        L.ox.push_back(x);
        L.oy.push_back(kMargin);
        x += ch.width * kScale + kGap;
        maxh = std::max(maxh, Rat(ch.height * kScale));
    }
    L.width = x - kGap + kMargin;
    L.height = maxh + 2 * kMargin;
    return L;
}

// Chart point -> page point (SVG y grows downward).
RatPoint page(const Layout& L, const Surface& s, int chart, const RatPoint& p) {
    const Chart& ch = s.chart(chart);
    return {L.ox[static_cast<std::size_t>(chart)] + p.x * kScale,
            L.oy[static_cast<std::size_t>(chart)] + (ch.height - p.y) * kScale};
}

void rect(std::ostream& os, const std::string& cls, const RatPoint& tl, const Rat& w,
          const Rat& h, const std::string& style) {
    os << "  <rect class=\"" << cls << "\" x=\"" << px(tl.x) << "\" y=\"" << px(tl.y)
       << "\" width=\"" << px(w) << "\" height=\"" << px(h) << "\" " << style << "/>\n";
}

} // namespace

std::string render_svg(const CurveSystem& sys) {
    const Surface& s = sys.surface;
    const Layout L = layout_charts(s);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(L.width)
       << "\" height=\"" << px(L.height) << "\" viewBox=\"0 0 " << px(L.width) << " "
       << px(L.height) << "\">\n";

    for (std::size_t i = 0; i < s.charts.size(); ++i) {
        const Chart& ch = s.charts[i];
        const bool handle = ch.kind == ChartKind::HandleCylinder;
        rect(os, handle ? "handle" : "chart", {L.ox[i], L.oy[i]}, ch.width * kScale,
             ch.height * kScale,
             handle ? "fill=\"none\" stroke=\"#444444\" stroke-dasharray=\"6 4\""
                    : "fill=\"none\" stroke=\"#000000\"");
    }

    for (const Mouth& m : s.mouths) {
        const RatPoint tl = page(L, s, m.base_chart, {m.xmin(), m.ymax()});
        rect(os, "mouth", tl, m.side * kScale, m.side * kScale,
             "fill=\"none\" stroke=\"#aa0000\" stroke-dasharray=\"3 3\"");
        // Gluing indicator: mouth center to the glued end of the cylinder.
        const RatPoint c = page(L, s, m.base_chart, m.center);
        const Chart& hc = s.chart(m.handle_chart);
        const Rat end_y = m.handle_end == 0 ? Rat(0) : hc.height;
        const RatPoint e = page(L, s, m.handle_chart, {hc.width / 2, end_y});
        os << "  <line class=\"glue\" x1=\"" << px(c.x) << "\" y1=\"" << px(c.y)
           << "\" x2=\"" << px(e.x) << "\" y2=\"" << px(e.y)
           << "\" stroke=\"#aa0000\" stroke-dasharray=\"2 5\" stroke-width=\"0.5\"/>\n";
    }

    for (std::size_t ci = 0; ci < sys.curves.size(); ++ci) {
        const Curve& cv = sys.curves[ci];
        os << "  <path class=\"curve\" id=\"curve-" << cv.label << "\" d=\"";
        for (std::size_t li = 0; li < cv.legs.size(); ++li) {
            const Leg& leg = cv.legs[li];
            for (std::size_t pi = 0; pi < leg.pts.size(); ++pi) {
                const RatPoint p = page(L, s, leg.chart, leg.pts[pi]);
                os << (pi == 0 ? (li == 0 ? "M" : " M") : " L") << px(p.x) << " "
                   << px(p.y);
            }
        }
        os << "\" fill=\"none\" stroke=\""
           << kPalette[ci % (sizeof(kPalette) / sizeof(kPalette[0]))]
           << "\" stroke-width=\"1.5\"/>\n";
    }

    os << "</svg>\n";
    return os.str();
}

void render_svg_file(const CurveSystem& sys, const std::string& path) {
    save_text_file(path, render_svg(sys));
}

} // namespace finecurves
